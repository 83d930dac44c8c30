#pragma once

#include "mtc/words.hpp"

#include <functional>
#include <span>
#include <string>
#include <vector>

namespace mtc {

struct AverageConfig {
  long horizon = 256;
  std::vector<long> probe_horizons;  // empty -> {horizon, 2*horizon, 4*horizon}
  double tol = 1e-6;

  std::vector<long> probes() const;
  void validate() const;  // horizons strictly increasing, tol > 0
};

struct CesaroResult {
  Scalar value;
  bool converged = false;
  bool exact = false;  // limit obtained by period detection
  std::vector<long> horizons;
  std::vector<std::complex<double>> ladder;  // finite-horizon means
};

// (1/T) sum_{s=0}^{T-1} f(s) over the probe horizons; the convergence flag
// requires successive probes to agree within tol. When f is exact and
// eventually periodic the limit is computed exactly from one period.
CesaroResult cesaro_average(const std::function<Scalar(long)>& f, const AverageConfig& cfg);

// t -> phi(word shifted by t_{nu(j)} per copy), the multi-time correlation
// function attached to a reduced word with normalized labels.
struct CorrelationFunction {
  ModelSystem* model = nullptr;
  Word word;
  LabelMap labels;

  int arity() const { return labels.range_max(); }
  Scalar operator()(std::span<const long> times) const;
};

CorrelationFunction make_correlation(ModelSystem& m, const Word& w);

struct NestedResult {
  Scalar value;
  bool converged = false;
  int failed_level = -1;  // 1-based level whose Cesaro mean failed to settle
  std::vector<long> horizons;
  std::vector<std::complex<double>> ladder;
};

// Nested mean: average over t_1 innermost, then t_2, ..., then t_k (the
// ordering is reversible through `order`, a permutation of {0..k-1} mapping
// nesting depth to time slot, used by the order-invariance checks).
NestedResult nested_average(const CorrelationFunction& cf, const AverageConfig& cfg,
                            const std::vector<int>& order = {});

// Averaged version of an arbitrary k-variable bounded function.
NestedResult nested_average_fn(const std::function<Scalar(std::span<const long>)>& f,
                               int arity, const AverageConfig& cfg,
                               const std::vector<int>& order = {});

// Corridor indicator: 0 when |t_i - t_j| <= d for some i != j, else 1.
int corridor(long d, std::span<const long> times);

struct PhiInfinityResult {
  Scalar value;
  bool exact = false;      // model-provided closed form
  bool converged = false;  // meaningful on the numeric path
  NestedResult numeric;    // filled on the numeric path
};

// Asymptotic state on a word: the model's exact evaluator when it has one,
// otherwise the nested Cesaro average of the correlation function.
PhiInfinityResult evaluate_phi_infinity(ModelSystem& m, const Word& w,
                                        const AverageConfig& cfg);

struct CheckReport {
  std::string check;
  bool passed = true;
  double max_residual = 0.0;
  std::vector<std::string> violations;
  std::string to_json() const;
};

// phi_infinity is unchanged when the word is padded with identity letters in
// fresh copies (checked for 1..paddings extra identities).
CheckReport check_strong_compatibility(ModelSystem& m, const Word& base, int paddings,
                                       const AverageConfig& cfg);

// Avg(f1 f2) = Avg(f1) Avg(f2) for functions of disjoint time blocks: the
// product depends on k1 + k2 variables, f1 on the first k1, f2 on the rest.
CheckReport check_product_property(const std::function<Scalar(std::span<const long>)>& f1,
                                   int k1,
                                   const std::function<Scalar(std::span<const long>)>& f2,
                                   int k2, const AverageConfig& cfg);

// phi_infinity(w) = phi_infinity(pi(w)) for each supplied local permutation.
CheckReport check_permutation_invariance(ModelSystem& m, const Word& w,
                                         const std::vector<std::map<int, int>>& perms,
                                         const AverageConfig& cfg);

}  // namespace mtc
