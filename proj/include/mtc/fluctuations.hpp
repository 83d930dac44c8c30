#pragma once

#include "mtc/words.hpp"

#include <complex>
#include <functional>
#include <string>
#include <vector>

namespace mtc {

// F_N(X) = (1/sqrt N) sum_{i=1..N} (X_i - phi(X) 1); a joint moment
// phi_inf(F_N(X^(1)) ... F_N(X^(r))) is determined by the observable list
// and N. Observables are centred internally.
struct FluctuationSpec {
  std::vector<ObsId> observables;
  long N = 1;

  int order() const { return static_cast<int>(observables.size()); }
};

struct MomentReport {
  int order = 0;
  long N = 0;
  std::complex<double> finite_value{};
  bool finite_exact = false;
  std::complex<double> asymptotic{};
  std::string reference_law = "none";
  double reference = 0.0;
  double residual_finite_vs_asymptotic = 0.0;
  double residual_asymptotic_vs_reference = 0.0;
};

// Exact finite-N moment via the r-fold index-tuple sum. The brute path
// enumerates all N^r tuples (guarded by N^r <= 10^7); the grouped path sums
// surjections onto s slots weighted by binomial(N, s). Both divide by
// N^{r/2}; odd-order values with a nonvanishing sum come back inexact.
Scalar finite_n_moment(ModelSystem& m, const FluctuationSpec& spec);
Scalar finite_n_moment_brute(ModelSystem& m, const FluctuationSpec& spec);
Scalar finite_n_moment_grouped(ModelSystem& m, const FluctuationSpec& spec);

// Limit moment as a pair-partition sum over 2n centred observables:
// ordered=true sums phi_inf over canonically ordered pair partitions,
// ordered=false takes (1/n!) times the sum over labeled ones. Non-centred
// input is rejected, naming the offending observable.
Scalar asymptotic_moment_pair_sum(ModelSystem& m, const std::vector<ObsId>& xs,
                                  bool ordered, double eps = 1e-9);

// Sum over ordered non-crossing pair partitions of products of two-point
// values; two_point(a, b) is queried with 1-based positions a < b.
Scalar noncrossing_moment(const std::function<Scalar(int, int)>& two_point, int n);

// M_{2n} of the centred normal law: (2n-1)!! sigma^{2n}.
double gaussian_moment(int n, double sigma);
// M_{2n} of the centred semicircle law: C_n sigma^{2n}.
double semicircle_moment(int n, double sigma);

// Even moments r = 2..2*n_max (odd ones included with their decay envelope)
// along the N ladder, against the chosen reference law ("gaussian",
// "semicircle" or "none").
std::vector<MomentReport> convergence_table(ModelSystem& m, ObsId x, int n_max,
                                            const std::vector<long>& n_ladder,
                                            const std::string& reference_law);

// Hankel-type positivity of a single-observable moment sequence m_0..m_k:
// the moment matrices [m_{i+j}] must be positive semidefinite.
bool moment_sequence_positive(const std::vector<double>& moments, double tol = 1e-9);

}  // namespace mtc
