#pragma once

#include "mtc/averaging.hpp"

#include <array>
#include <functional>
#include <string>
#include <vector>

namespace mtc {

enum class Verdict { holds, fails, inconclusive };

std::string verdict_name(Verdict v);

struct ProbeResult {
  std::string label;
  double residual = 0.0;
  bool exact = false;
  bool converged = true;
};

struct ClusterReport {
  std::string condition;
  std::vector<ProbeResult> probes;
  double max_residual = 0.0;
  Verdict verdict = Verdict::holds;
  std::string to_json() const;

  void add(ProbeResult p);
  // holds: max residual < eps; fails: some witness > 10*eps; else inconclusive
  void finalize(double eps);
};

// Residual diagnostics shared by the condition testers.
// Cesaro-mean distance |Avg(f) - target|.
ProbeResult residual_avg(const std::function<Scalar(long)>& f, const Scalar& target,
                         const AverageConfig& cfg, std::string label);
// Tail distance sup_{t in [T/2, T)} |f(t) - target|, with exact shortcut when
// the sequence is detected to be eventually periodic.
ProbeResult residual_limit(const std::function<Scalar(long)>& f, const Scalar& target,
                           const AverageConfig& cfg, std::string label);

struct TripleProbe {
  ObsLC x, y, z;
  std::string label;
};

struct FiveProbe {
  ObsLC x, y, z, s, t;
  std::string label;
};

// Letter of a ray-separated word: slot 0 pins the letter at time 0, slot
// j >= 1 rides the ray t_j = j*(d+1)*tau.
struct RayLetter {
  ObsLC a;
  int slot = 0;
};

struct RayProbe {
  std::vector<RayLetter> letters;
  std::string label;
};

struct AbelianProbe {
  ObsLC s, x, y, z;
  std::string label;
};

enum class AbelianLevel { mean, weak, strong };

// (4): Avg_t phi(X Y(t) Z) = phi(XZ) phi(Y)
ClusterReport test_clustering_in_mean(ModelSystem& m, const std::vector<TripleProbe>& probes,
                                      const AverageConfig& cfg);
// (5): lim_t phi(X Y(t) Z) = phi(XZ) phi(Y)
ClusterReport test_weak_clustering(ModelSystem& m, const std::vector<TripleProbe>& probes,
                                   const AverageConfig& cfg);
// (6.a): lim_t phi(X Y(t) Z S(t) T) = phi(X Z T) phi(Y S)
ClusterReport test_strong_clustering(ModelSystem& m, const std::vector<FiveProbe>& probes,
                                     const AverageConfig& cfg);
// (6.b): along rays t_j = j*(d+1)*tau the word factorizes into the grouped
// product prod_j phi(ordered product of the letters in copy j)
ClusterReport test_hyper_clustering(ModelSystem& m, const Word& w, const AverageConfig& cfg,
                                    long d = 8);
// (20): ray-separated words containing a centred letter vanish in the limit
ClusterReport test_condition_20(ModelSystem& m, const std::vector<RayProbe>& probes,
                                const AverageConfig& cfg, long d = 8);
// (24): Avg_t phi(A X(t) B Y(t) C) = 0 for centred X, Y, B
ClusterReport test_condition_24(ModelSystem& m,
                                const std::vector<std::array<ObsLC, 5>>& probes,
                                const AverageConfig& cfg);
// (8.a-c)
ClusterReport test_asymptotic_abelianess(ModelSystem& m, AbelianLevel level,
                                         const std::vector<AbelianProbe>& probes,
                                         const AverageConfig& cfg);

// Built-in probe catalog: runs the named condition ("4", "5", "6.a", "6.b",
// "20", "24", "8.a", "8.b", "8.c") on a shipped model's standard probes.
ClusterReport run_standard_condition(ModelSystem& m, const std::string& condition,
                                     const AverageConfig& cfg);

}  // namespace mtc
