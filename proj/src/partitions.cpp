#include "mtc/partitions.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <sstream>
#include <stdexcept>

namespace mtc {

bool PairPartition::valid() const {
  std::vector<int> seen(2 * pairs.size() + 1, 0);
  for (const auto& [a, b] : pairs) {
    if (a >= b || a < 1 || b > 2 * static_cast<int>(pairs.size())) return false;
    ++seen[static_cast<size_t>(a)];
    ++seen[static_cast<size_t>(b)];
  }
  for (size_t i = 1; i < seen.size(); ++i)
    if (seen[i] != 1) return false;
  return true;
}

std::string PairPartition::str() const {
  std::ostringstream os;
  os << "[";
  for (size_t i = 0; i < pairs.size(); ++i) {
    if (i) os << ",";
    os << "(" << pairs[i].first << "," << pairs[i].second << ")";
  }
  os << "]";
  return os.str();
}

namespace {

void enumerate_ordered(std::vector<int>& free, PairPartition& cur,
                       std::vector<PairPartition>& out) {
  if (free.empty()) {
    out.push_back(cur);
    return;
  }
  int a = free.front();
  for (size_t i = 1; i < free.size(); ++i) {
    int b = free[i];
    std::vector<int> rest;
    rest.reserve(free.size() - 2);
    for (size_t j = 1; j < free.size(); ++j)
      if (j != i) rest.push_back(free[j]);
    cur.pairs.push_back({a, b});
    enumerate_ordered(rest, cur, out);
    cur.pairs.pop_back();
  }
}

}  // namespace

std::vector<PairPartition> enumerate_pair_partitions(int n, bool ordered, int cap) {
  if (n < 1) throw std::invalid_argument("enumerate_pair_partitions: n must be >= 1");
  if (n > cap)
    throw std::length_error("enumerate_pair_partitions: n exceeds enumeration cap");
  std::vector<int> pts(static_cast<size_t>(2 * n));
  for (int i = 0; i < 2 * n; ++i) pts[static_cast<size_t>(i)] = i + 1;
  std::vector<PairPartition> out;
  PairPartition cur;
  enumerate_ordered(pts, cur, out);  // first elements increase, so ordered form
  if (ordered) return out;
  std::vector<PairPartition> labeled;
  for (const auto& p : out) {
    std::vector<std::pair<int, int>> perm = p.pairs;
    std::sort(perm.begin(), perm.end());
    do {
      labeled.push_back(PairPartition{perm});
    } while (std::next_permutation(perm.begin(), perm.end()));
  }
  return labeled;
}

int crossing_number(const PairPartition& p) {
  int c = 0;
  for (size_t j = 0; j < p.pairs.size(); ++j)
    for (size_t k = 0; k < p.pairs.size(); ++k) {
      if (j == k) continue;
      auto [aj, bj] = p.pairs[j];
      auto [ak, bk] = p.pairs[k];
      if (aj < ak && ak < bj && bj < bk) ++c;
    }
  return c;
}

BigInt catalan(int n) {
  if (n < 0) throw std::invalid_argument("catalan: n must be >= 0");
  if (n > 30) throw std::length_error("catalan: n exceeds guard (30)");
  static std::map<int, BigInt> cache;
  auto it = cache.find(n);
  if (it != cache.end()) return it->second;
  BigInt c;
  if (n == 0) {
    c = 1;
  } else {
    c = 0;
    for (int k = 1; k <= n; ++k) c += catalan(k - 1) * catalan(n - k);
  }
  if (c != binomial(2 * n, n) / (n + 1))
    throw std::logic_error("catalan: recursion disagrees with closed form");
  cache[n] = c;
  return c;
}

TupleDecomposition decompose_index_tuple(const std::vector<long>& k) {
  TupleDecomposition d;
  d.theta = k;
  std::sort(d.theta.begin(), d.theta.end());
  d.theta.erase(std::unique(d.theta.begin(), d.theta.end()), d.theta.end());
  d.nu.reserve(k.size());
  for (long v : k) {
    auto pos = std::lower_bound(d.theta.begin(), d.theta.end(), v);
    d.nu.push_back(static_cast<int>(pos - d.theta.begin()) + 1);
  }
  return d;
}

std::vector<std::vector<int>> enumerate_surjections(int r, int s) {
  std::vector<std::vector<int>> out;
  if (s > r || s < 1) return out;
  std::vector<int> cur(static_cast<size_t>(r), 0);
  // depth-first over all maps, pruned on surjectivity feasibility
  auto rec = [&](auto&& self, int pos, int used_mask) -> void {
    int missing = s - std::popcount(static_cast<unsigned>(used_mask));
    if (missing > r - pos) return;
    if (pos == r) {
      out.push_back(cur);
      return;
    }
    for (int v = 0; v < s; ++v) {
      cur[static_cast<size_t>(pos)] = v;
      self(self, pos + 1, used_mask | (1 << v));
    }
  };
  rec(rec, 0, 0);
  return out;
}

BigInt count_multiplicity_bounded_maps(int r, int s) {
  BigInt count = 0;
  for (const auto& nu : enumerate_surjections(r, s)) {
    std::vector<int> mult(static_cast<size_t>(s), 0);
    for (int v : nu) ++mult[static_cast<size_t>(v)];
    if (std::all_of(mult.begin(), mult.end(), [](int m) { return m >= 2; })) ++count;
  }
  return count;
}

}  // namespace mtc
