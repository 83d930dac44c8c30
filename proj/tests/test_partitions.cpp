#include "doctest.h"

#include "mtc/partitions.hpp"

#include <random>
#include <set>

using namespace mtc;

TEST_CASE("ordered pair partition counts equal (2n-1)!!") {
  for (int n = 1; n <= 8; ++n) {
    auto parts = enumerate_pair_partitions(n, true);
    CHECK(BigInt(parts.size()) == double_factorial_odd(n));
    for (const auto& p : parts) {
      CHECK(p.valid());
      for (size_t j = 1; j < p.pairs.size(); ++j)
        CHECK(p.pairs[j - 1].first < p.pairs[j].first);
    }
  }
}

TEST_CASE("labeled pair partition counts equal (2n)!/2^n") {
  for (int n = 1; n <= 4; ++n) {
    auto labeled = enumerate_pair_partitions(n, false);
    BigInt fact = 1;
    for (int k = 2; k <= 2 * n; ++k) fact *= k;
    BigInt expect = fact >> n;
    CHECK(BigInt(labeled.size()) == expect);
  }
  CHECK(enumerate_pair_partitions(3, false).size() == 90);
}

TEST_CASE("the n=2 ordered partitions are the classic three") {
  auto parts = enumerate_pair_partitions(2, true);
  REQUIRE(parts.size() == 3);
  std::set<std::string> got;
  for (const auto& p : parts) got.insert(p.str());
  CHECK(got.count("[(1,2),(3,4)]"));
  CHECK(got.count("[(1,3),(2,4)]"));
  CHECK(got.count("[(1,4),(2,3)]"));
}

TEST_CASE("enumeration cap guard") {
  CHECK_THROWS_AS(enumerate_pair_partitions(11, true), std::length_error);
}

TEST_CASE("crossing numbers") {
  CHECK(crossing_number(PairPartition{{{1, 2}, {3, 4}}}) == 0);
  CHECK(crossing_number(PairPartition{{{1, 3}, {2, 4}}}) == 1);
  CHECK(crossing_number(PairPartition{{{1, 4}, {2, 6}, {3, 5}}}) == 2);
}

TEST_CASE("non-crossing partitions are counted by Catalan numbers") {
  for (int n = 1; n <= 8; ++n) {
    BigInt noncrossing = 0;
    for (const auto& p : enumerate_pair_partitions(n, true))
      if (crossing_number(p) == 0) ++noncrossing;
    CHECK(noncrossing == catalan(n));
  }
}

TEST_CASE("catalan recursion vs closed form and guard") {
  CHECK(catalan(0) == 1);
  CHECK(catalan(3) == 5);
  for (int n = 0; n <= 20; ++n) CHECK(catalan(n) == binomial(2 * n, n) / (n + 1));
  CHECK_THROWS_AS(catalan(31), std::length_error);
}

TEST_CASE("index tuple decomposition") {
  auto d = decompose_index_tuple({5, 5, 2});
  CHECK(d.nu == std::vector<int>{2, 2, 1});
  CHECK(d.theta == std::vector<long>{2, 5});

  auto e = decompose_index_tuple({1, 2, 3});
  CHECK(e.nu == std::vector<int>{1, 2, 3});
  CHECK(e.theta == std::vector<long>{1, 2, 3});

  auto f = decompose_index_tuple({7, 7, 7});
  CHECK(f.nu == std::vector<int>{1, 1, 1});
  CHECK(f.theta == std::vector<long>{7});
}

TEST_CASE("decomposition recomposes: theta o nu = k") {
  std::mt19937 rng(42);
  std::uniform_int_distribution<long> val(1, 12);
  std::uniform_int_distribution<size_t> len(1, 8);
  for (int it = 0; it < 10000; ++it) {
    std::vector<long> k(len(rng));
    for (auto& v : k) v = val(rng);
    auto d = decompose_index_tuple(k);
    // theta strictly increasing
    for (size_t i = 1; i < d.theta.size(); ++i) CHECK(d.theta[i - 1] < d.theta[i]);
    for (size_t i = 0; i < k.size(); ++i)
      CHECK(d.theta[static_cast<size_t>(d.nu[i] - 1)] == k[i]);
  }
}

TEST_CASE("multiplicity-bounded surjection counts") {
  CHECK(count_multiplicity_bounded_maps(4, 1) == 1);
  CHECK(count_multiplicity_bounded_maps(5, 2) == 20);
  CHECK(count_multiplicity_bounded_maps(6, 3) == 90);
}
