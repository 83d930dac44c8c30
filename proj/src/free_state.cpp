#include "mtc/free_state.hpp"

#include <algorithm>
#include <map>
#include <numeric>

namespace mtc {

namespace {

struct MarkedLetter {
  ObsId obs;
  int copy;
  bool centred;
  auto operator<=>(const MarkedLetter&) const = default;
};

Scalar eval_marked(ModelSystem& m, std::vector<MarkedLetter> w,
                   std::map<std::vector<MarkedLetter>, Scalar>& memo);

// Expands a possibly centred letter as (basis - mean * 1) and calls f with
// (scalar factor, present?, basis letter).
template <class F>
void unfold(ModelSystem& m, const MarkedLetter& l, F&& f) {
  f(Scalar::one(), true);
  if (l.centred) f(Scalar(-1) * m.phi(l.obs), false);
}

Scalar eval_impl(ModelSystem& m, const std::vector<MarkedLetter>& w,
                 std::map<std::vector<MarkedLetter>, Scalar>& memo) {
  if (w.empty()) return Scalar::one();
  if (w.size() == 1) {
    if (w[0].centred) return Scalar();  // phi of a centred letter
    return m.phi(w[0].obs);
  }
  // First same-copy adjacency: unfold the two letters and merge.
  for (size_t i = 0; i + 1 < w.size(); ++i) {
    if (w[i].copy != w[i + 1].copy) continue;
    Scalar total;
    unfold(m, w[i], [&](Scalar ca, bool presa) {
      unfold(m, w[i + 1], [&](Scalar cb, bool presb) {
        std::vector<MarkedLetter> next(w.begin(), w.begin() + static_cast<long>(i));
        Scalar c = ca * cb;
        if (presa && presb) {
          auto [pc, z] = m.product(w[i].obs, w[i + 1].obs);
          c *= pc;
          if (!m.is_identity(z)) next.push_back({z, w[i].copy, false});
        } else if (presa) {
          next.push_back({w[i].obs, w[i].copy, false});
        } else if (presb) {
          next.push_back({w[i + 1].obs, w[i].copy, false});
        }
        next.insert(next.end(), w.begin() + static_cast<long>(i) + 2, w.end());
        total += c * eval_marked(m, std::move(next), memo);
      });
    });
    return total;
  }
  // Alternating word: all letters centred -> 0 by freeness.
  if (std::all_of(w.begin(), w.end(), [](const MarkedLetter& l) { return l.centred; }))
    return Scalar();
  // Split the leftmost uncentred letter into mean + centred part.
  size_t i = 0;
  while (w[i].centred) ++i;
  std::vector<MarkedLetter> without(w);
  without.erase(without.begin() + static_cast<long>(i));
  std::vector<MarkedLetter> with(w);
  with[i].centred = true;
  return m.phi(w[i].obs) * eval_marked(m, std::move(without), memo) +
         eval_marked(m, std::move(with), memo);
}

Scalar eval_marked(ModelSystem& m, std::vector<MarkedLetter> w,
                   std::map<std::vector<MarkedLetter>, Scalar>& memo) {
  auto it = memo.find(w);
  if (it != memo.end()) return it->second;
  Scalar v = eval_impl(m, w, memo);
  memo.emplace(std::move(w), v);
  return v;
}

}  // namespace

Scalar free_product_state(ModelSystem& m, const Word& w0) {
  Word w = reduce(m, w0);
  std::vector<MarkedLetter> letters;
  letters.reserve(w.letters.size());
  for (const auto& l : w.letters) letters.push_back({l.obs, l.copy, false});
  std::map<std::vector<MarkedLetter>, Scalar> memo;
  return w.coeff * eval_marked(m, std::move(letters), memo);
}

Scalar block_factorized_state(ModelSystem& m, const Word& w0, bool signed_parity) {
  Word w = reduce(m, w0);
  // stable sort of positions by copy label; sign = parity of that permutation
  std::vector<size_t> order(w.letters.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](size_t a, size_t b) {
    return w.letters[a].copy < w.letters[b].copy;
  });
  int sign = 1;
  if (signed_parity) {
    // parity of the rearrangement of the odd letters only; even letters
    // commute freely with everything
    std::vector<size_t> odd_targets;
    for (size_t k = 0; k < order.size(); ++k)
      if (m.grade(w.letters[order[k]].obs) < 0) odd_targets.push_back(order[k]);
    std::vector<size_t> rank(w.letters.size(), 0);
    {
      size_t r = 0;
      for (size_t pos = 0; pos < w.letters.size(); ++pos)
        if (m.grade(w.letters[pos].obs) < 0) rank[pos] = r++;
    }
    std::vector<size_t> perm;
    perm.reserve(odd_targets.size());
    for (size_t pos : odd_targets) perm.push_back(rank[pos]);
    for (size_t i = 0; i < perm.size(); ++i)
      while (perm[i] != i) {
        std::swap(perm[i], perm[perm[i]]);
        sign = -sign;
      }
  }
  Scalar result = w.coeff * Scalar(Rational(sign));
  size_t i = 0;
  while (i < order.size()) {
    size_t j = i;
    std::vector<ObsId> block;
    while (j < order.size() && w.letters[order[j]].copy == w.letters[order[i]].copy)
      block.push_back(w.letters[order[j++]].obs);
    result *= m.expect(block);
    i = j;
  }
  return result;
}

}  // namespace mtc
