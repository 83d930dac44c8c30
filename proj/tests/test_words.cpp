#include "doctest.h"

#include "mtc/models/cat_map.hpp"
#include "mtc/models/free_shift.hpp"
#include "mtc/words.hpp"

#include <algorithm>
#include <random>

using namespace mtc;

namespace {

FreeShiftModel& fs() {
  static FreeShiftModel m;
  return m;
}

Word random_word(FreeShiftModel& m, std::mt19937& rng, int max_len = 8) {
  std::uniform_int_distribution<int> len(0, max_len), copy(1, 4), gen(-2, 2), mono(1, 2);
  std::vector<Letter> ls;
  int n = len(rng);
  for (int i = 0; i < n; ++i) {
    std::vector<long> idx;
    for (int k = mono(rng); k > 0; --k) idx.push_back(gen(rng));
    ls.push_back({m.monomial(idx), copy(rng)});
  }
  return make_word(m, ls);
}

}  // namespace

TEST_CASE("reduce drops identities and merges same-copy letters") {
  auto& m = fs();
  ObsId e0 = m.generator(0), e1 = m.generator(1);
  // w * 1_2 * w' with neighbours away from copy 2
  Word w = make_word(m, {{e0, 1}, {m.identity(), 2}, {e1, 3}});
  Word r = reduce(m, w);
  CHECK(r.letters == std::vector<Letter>{{e0, 1}, {e1, 3}});

  // X_1 Y_1 -> (XY)_1 through the model product
  Word p = reduce(m, make_word(m, {{e0, 1}, {e1, 1}}));
  REQUIRE(p.letters.size() == 1);
  CHECK(p.letters[0].obs == m.monomial({0, 1}));

  // e0_1 e0_1 -> (e0^2)_1 = identity -> empty word
  Word q = reduce(m, make_word(m, {{e0, 1}, {e0, 1}}));
  CHECK(q.letters.empty());
  CHECK(q.coeff.approx_equal(Scalar(1)));

  Word empty = reduce(m, make_word(m, {}));
  CHECK(empty.letters.empty());
}

TEST_CASE("reduce is idempotent on random words") {
  auto& m = fs();
  std::mt19937 rng(3);
  for (int it = 0; it < 500; ++it) {
    Word w = random_word(m, rng);
    Word r1 = reduce(m, w);
    Word r2 = reduce(m, r1);
    CHECK(r1 == r2);
  }
}

TEST_CASE("reduce is confluent under randomized pre-merging") {
  auto& m = fs();
  std::mt19937 rng(5);
  for (int it = 0; it < 300; ++it) {
    Word w = random_word(m, rng, 8);
    Word base = reduce(m, w);
    // apply a random admissible rule first, then reduce
    Word v = w;
    std::vector<size_t> adjacencies;
    for (size_t i = 0; i + 1 < v.letters.size(); ++i)
      if (v.letters[i].copy == v.letters[i + 1].copy) adjacencies.push_back(i);
    if (!adjacencies.empty()) {
      size_t i = adjacencies[rng() % adjacencies.size()];
      auto [c, z] = m.product(v.letters[i].obs, v.letters[i + 1].obs);
      v.coeff *= c;
      v.letters[i].obs = z;
      v.letters.erase(v.letters.begin() + static_cast<long>(i) + 1);
    }
    CHECK(reduce(m, v) == base);
  }
}

TEST_CASE("words cannot mix models") {
  auto& m = fs();
  CatMapModel cat(Rational(1, 3), {{{1, 1}, {1, 2}}});
  Word w = make_word(cat, {{cat.weyl({1, 0}), 1}});
  CHECK_THROWS_WITH_AS(reduce(m, w), doctest::Contains("belongs to model"),
                       std::invalid_argument);
}

TEST_CASE("adjoint reverses, stars and conjugates") {
  auto& m = fs();
  ObsId x = m.monomial({0, 1});  // e0 e1
  ObsId y = m.generator(2);
  Word w = make_word(m, {{x, 1}, {y, 2}});
  Word a = word_adjoint(m, w);
  REQUIRE(a.letters.size() == 2);
  CHECK(a.letters[0] == Letter{y, 2});
  CHECK(a.letters[1] == Letter{m.monomial({1, 0}), 1});  // (e0 e1)* = e1 e0
  // involution
  CHECK(word_adjoint(m, a) == w);
}

TEST_CASE("adjoint is an antihomomorphism") {
  auto& m = fs();
  std::mt19937 rng(11);
  for (int it = 0; it < 200; ++it) {
    Word u = random_word(m, rng, 5), v = random_word(m, rng, 5);
    Word lhs = word_adjoint(m, word_concat(m, u, v));
    Word rhs = word_concat(m, word_adjoint(m, v), word_adjoint(m, u));
    CHECK(reduce(m, lhs) == reduce(m, rhs));
  }
}

TEST_CASE("label normalization pads with identities") {
  auto& m = fs();
  ObsId e0 = m.generator(0);

  auto [w1, l1] = normalize_labels(m, make_word(m, {{e0, 2}}));
  CHECK(l1.nu == std::vector<int>{1, 2});
  CHECK(w1.letters[0] == Letter{m.identity(), 1});

  // X_2 Y_1 Z_2 W_4 -> 1_1 X_2 Y_1 Z_2 1_3 W_4
  ObsId a = m.generator(1), b = m.generator(2), c = m.generator(3);
  auto [w2, l2] = normalize_labels(m, make_word(m, {{e0, 2}, {a, 1}, {b, 2}, {c, 4}}));
  CHECK(l2.nu == std::vector<int>{1, 2, 1, 2, 3, 4});
  CHECK(l2.normalized());
  // un-padding recovers the original
  CHECK(reduce(m, w2) == reduce(m, make_word(m, {{e0, 2}, {a, 1}, {b, 2}, {c, 4}})));

  auto [w3, l3] = normalize_labels(m, make_word(m, {{e0, 1}}));
  CHECK(l3.nu == std::vector<int>{1});
  CHECK(w3.letters.size() == 1);
}

TEST_CASE("normalized label maps satisfy the occurrence constraint") {
  auto& m = fs();
  std::mt19937 rng(13);
  for (int it = 0; it < 300; ++it) {
    Word w = reduce(m, random_word(m, rng));
    auto [padded, lm] = normalize_labels(m, w);
    CHECK(lm.normalized());
  }
}

TEST_CASE("permutations relabel copies") {
  auto& m = fs();
  ObsId x = m.generator(0), y = m.generator(1), z = m.generator(2);
  Word w = make_word(m, {{x, 2}, {y, 1}, {z, 2}});

  Word swapped = apply_permutation(m, w, {{1, 2}, {2, 1}});
  CHECK(swapped.letters == std::vector<Letter>{{x, 1}, {y, 2}, {z, 1}});

  Word same = apply_permutation(m, w, {});
  CHECK(same == reduce(m, w));

  // order preserving injection theta(1)=1, theta(2)=3 as a permutation 2<->3
  Word inj = apply_permutation(m, w, {{2, 3}, {3, 2}});
  CHECK(inj.letters == std::vector<Letter>{{x, 3}, {y, 1}, {z, 3}});

  CHECK_THROWS_AS(apply_permutation(m, w, {{1, 2}}), std::invalid_argument);
}

TEST_CASE("permutation round trip restores the word") {
  auto& m = fs();
  std::mt19937 rng(17);
  std::map<int, int> pi{{1, 3}, {3, 4}, {4, 1}};
  std::map<int, int> inv;
  for (auto [k, v] : pi) inv[v] = k;
  for (int it = 0; it < 200; ++it) {
    Word w = reduce(m, random_word(m, rng));
    CHECK(apply_permutation(m, apply_permutation(m, w, pi), inv) == w);
  }
}

TEST_CASE("multi-time shifts act per copy") {
  auto& m = fs();
  ObsId e0 = m.generator(0);
  Word w = make_word(m, {{e0, 1}, {e0, 2}});

  MultiTimeShift zero;
  CHECK(apply_multitime_shift(m, w, zero) == w);

  MultiTimeShift s{{{1, 3}}};
  Word shifted = apply_multitime_shift(m, w, s);
  CHECK(shifted.letters == std::vector<Letter>{{m.generator(3), 1}, {e0, 2}});

  CatMapModel cat(Rational(1, 3), {{{1, 1}, {1, 2}}});
  Word cw = make_word(cat, {{cat.weyl({1, 0}), 1}});
  MultiTimeShift t{{{1, 2}}};
  Word cshift = apply_multitime_shift(cat, cw, t);
  CHECK(cat.label(cshift.letters[0].obs) == CatMapModel::Vec{2, 3});  // T^2 (1,0)
}

TEST_CASE("free element canonicalization merges like terms") {
  auto& m = fs();
  ObsId e0 = m.generator(0);
  Word w1 = make_word(m, {{e0, 1}}, Scalar(Rational(1, 2)));
  Word w2 = make_word(m, {{e0, 1}}, Scalar(Rational(1, 2)));
  FreeElement fe = FreeElement::from_word(w1) + FreeElement::from_word(w2);
  REQUIRE(fe.terms.size() == 1);
  CHECK(fe.terms[0].coeff.approx_equal(Scalar(1)));

  Word w3 = make_word(m, {{e0, 1}}, Scalar(Rational(-1)));
  FreeElement zero = fe + FreeElement::from_word(w3);
  CHECK(zero.terms.empty());
}

TEST_CASE("word serialization round trips") {
  auto& m = fs();
  m.register_name("e0", m.generator(0));
  m.register_name("e1", m.generator(1));
  Word w = make_word(m, {{m.generator(0), 1}, {m.generator(1), 2}}, Scalar(Rational(3, 4)));
  std::string s = word_to_string(m, w);
  CHECK(s == "[3/4] e0@1 e1@2");
  CHECK(parse_word(m, s) == w);
  CHECK(word_to_string(m, make_word(m, {})) == "[1] 1");
}
