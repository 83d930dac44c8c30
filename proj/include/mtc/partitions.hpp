#pragma once

#include "mtc/rational.hpp"

#include <string>
#include <utility>
#include <vector>

namespace mtc {

// Partition of {1..2n} into pairs (alpha_j, beta_j) with alpha_j < beta_j.
// In ordered form additionally alpha_1 < alpha_2 < ... < alpha_n.
struct PairPartition {
  std::vector<std::pair<int, int>> pairs;

  int n() const { return static_cast<int>(pairs.size()); }
  bool valid() const;
  std::string str() const;  // [(a1,b1),(a2,b2),...]
};

// ordered=true: (2n-1)!! ordered pair partitions.
// ordered=false: (2n)!/2^n labeled partitions (every bijective labeling of the
// n pairs, realized as all permutations of the pair list of each ordered one).
std::vector<PairPartition> enumerate_pair_partitions(int n, bool ordered,
                                                     int enumeration_cap = 10);

// Number of (j,k) with alpha_j < alpha_k < beta_j < beta_k.
int crossing_number(const PairPartition& p);

// Catalan number via the convolution recursion; cross-checked against the
// closed form binomial(2n,n)/(n+1) internally.
BigInt catalan(int n);

// Index tuple k in {1..N}^r decomposed as k = theta o nu with theta a strictly
// increasing injection into {1..N} listing the distinct values of k in
// increasing order, and nu the induced map {1..r} -> {1..s}.
struct TupleDecomposition {
  std::vector<int> nu;
  std::vector<long> theta;
};
TupleDecomposition decompose_index_tuple(const std::vector<long>& k);

// A_s: surjections nu: {1..r} -> {1..s} attaining every value at least twice.
BigInt count_multiplicity_bounded_maps(int r, int s);

// All surjections {0..r-1} -> {0..s-1} (used by the grouped moment sum).
std::vector<std::vector<int>> enumerate_surjections(int r, int s);

}  // namespace mtc
