#include "mtc/averaging.hpp"

#include "json.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <map>
#include <numeric>
#include <stdexcept>

namespace mtc {

std::vector<long> AverageConfig::probes() const {
  if (!probe_horizons.empty()) return probe_horizons;
  return {horizon, 2 * horizon, 4 * horizon};
}

void AverageConfig::validate() const {
  if (horizon <= 0) throw std::invalid_argument("AverageConfig: horizon must be positive");
  if (!(tol > 0)) throw std::invalid_argument("AverageConfig: tolerance must be positive");
  auto ps = probes();
  for (size_t i = 1; i < ps.size(); ++i)
    if (ps[i] <= ps[i - 1])
      throw std::invalid_argument("AverageConfig: probe horizons must be strictly increasing");
}

namespace {

// Cached sampler so the period scan and the ladder share evaluations.
struct Sampler {
  const std::function<Scalar(long)>& f;
  std::vector<Scalar> cache;
  bool all_exact = true;

  const Scalar& at(long s) {
    while (static_cast<long>(cache.size()) <= s) {
      cache.push_back(f(static_cast<long>(cache.size())));
      if (!cache.back().is_exact()) all_exact = false;
    }
    return cache[static_cast<size_t>(s)];
  }
};

// Smallest (burn-in b, period p) with f(s+p) = f(s) exactly on [b, b+2p];
// the Cesaro limit of an eventually periodic sequence is the period mean.
// A finite transient past the window cannot change the limit, so the window
// is kept short to keep nested averages cheap.
bool detect_period(Sampler& smp, long max_burn, long max_period, long& b_out, long& p_out) {
  for (long p = 1; p <= max_period; ++p) {
    for (long b = 0; b <= max_burn; ++b) {
      bool ok = true;
      for (long s = b; s <= b + 2 * p && ok; ++s) {
        // copy: at() can grow the cache and invalidate references
        Scalar u = smp.at(s);
        Scalar v = smp.at(s + p);
        if (!u.is_exact() || !v.is_exact()) return false;
        if (!(u.exact() == v.exact())) ok = false;
      }
      if (ok) {
        b_out = b;
        p_out = p;
        return true;
      }
    }
  }
  return false;
}

}  // namespace

CesaroResult cesaro_average(const std::function<Scalar(long)>& f, const AverageConfig& cfg) {
  cfg.validate();
  CesaroResult res;
  Sampler smp{f, {}, true};

  // exact limit by period detection when the sequence allows it
  long b = 0, p = 0;
  long scan = std::min<long>(64, std::max<long>(8, cfg.horizon / 4));
  if (smp.at(0).is_exact() && detect_period(smp, scan, scan, b, p)) {
    ExactComplex acc;
    for (long s = b; s < b + p; ++s) acc += smp.at(s).exact();
    res.value = Scalar(acc.scaled(Rational(1, p)));
    res.converged = true;
    res.exact = true;
    return res;
  }

  std::complex<double> sum = 0.0;
  long done = 0;
  for (long T : cfg.probes()) {
    for (; done < T; ++done) sum += smp.at(done).to_complex();
    res.horizons.push_back(T);
    res.ladder.push_back(sum / static_cast<double>(T));
  }
  res.value = Scalar(res.ladder.back());
  size_t n = res.ladder.size();
  res.converged = n >= 2 && std::abs(res.ladder[n - 1] - res.ladder[n - 2]) < cfg.tol;
  return res;
}

CorrelationFunction make_correlation(ModelSystem& m, const Word& w) {
  CorrelationFunction cf;
  cf.model = &m;
  cf.word = reduce(m, w);
  cf.labels = normalize_labels(m, cf.word).second;
  return cf;
}

Scalar CorrelationFunction::operator()(std::span<const long> times) const {
  if (static_cast<int>(times.size()) < arity())
    throw std::invalid_argument("CorrelationFunction: not enough time arguments");
  std::vector<TimedObs> xs;
  xs.reserve(word.letters.size());
  for (const auto& l : word.letters)
    xs.push_back({l.obs, times[static_cast<size_t>(l.copy) - 1]});
  return word.coeff * model->correlate(xs);
}

int corridor(long d, std::span<const long> times) {
  for (size_t i = 0; i < times.size(); ++i)
    for (size_t j = i + 1; j < times.size(); ++j)
      if (std::abs(times[i] - times[j]) <= d) return 0;
  return 1;
}

NestedResult nested_average_fn(const std::function<Scalar(std::span<const long>)>& f,
                               int arity, const AverageConfig& cfg,
                               const std::vector<int>& order) {
  cfg.validate();
  if (arity < 1) throw std::invalid_argument("nested_average: arity must be >= 1");
  std::vector<int> ord = order;
  if (ord.empty()) {
    ord.resize(static_cast<size_t>(arity));
    std::iota(ord.begin(), ord.end(), 0);
  }
  if (static_cast<int>(ord.size()) != arity)
    throw std::invalid_argument("nested_average: order must permute the time slots");

  NestedResult res;
  res.converged = true;
  std::vector<long> times(static_cast<size_t>(arity), 0);
  // memo per level, keyed by the fixed outer time slots
  std::vector<std::map<std::vector<long>, Scalar>> memo(static_cast<size_t>(arity));

  std::function<CesaroResult(int)> avg = [&](int level) -> CesaroResult {
    auto g = [&](long t) -> Scalar {
      times[static_cast<size_t>(ord[static_cast<size_t>(level)])] = t;
      if (level == 0) return f(times);
      std::vector<long> key;
      for (int l = level; l < arity; ++l)
        key.push_back(times[static_cast<size_t>(ord[static_cast<size_t>(l)])]);
      auto& cache = memo[static_cast<size_t>(level)];
      auto it = cache.find(key);
      if (it != cache.end()) return it->second;
      CesaroResult inner = avg(level - 1);
      if (!inner.converged) {
        res.converged = false;
        if (res.failed_level < 0 || level < res.failed_level) res.failed_level = level;
      }
      cache.emplace(std::move(key), inner.value);
      return inner.value;
    };
    return cesaro_average(g, cfg);
  };

  CesaroResult outer = avg(arity - 1);
  res.value = outer.value;
  res.horizons = outer.horizons;
  res.ladder = outer.ladder;
  if (!outer.converged) {
    res.converged = false;
    res.failed_level = arity;
  }
  return res;
}

NestedResult nested_average(const CorrelationFunction& cf, const AverageConfig& cfg,
                            const std::vector<int>& order) {
  // a word that reduced to a multiple of the identity still averages fine
  int arity = std::max(cf.arity(), 1);
  return nested_average_fn([&](std::span<const long> t) { return cf(t); }, arity, cfg,
                           order);
}

PhiInfinityResult evaluate_phi_infinity(ModelSystem& m, const Word& w,
                                        const AverageConfig& cfg) {
  PhiInfinityResult res;
  Word r = reduce(m, w);
  if (r.letters.empty()) {
    res.value = r.coeff;
    res.exact = r.coeff.is_exact();
    res.converged = true;
    return res;
  }
  if (auto exact = m.phi_infinity_exact(r)) {
    res.value = *exact;
    res.exact = true;
    res.converged = true;
    return res;
  }
  res.numeric = nested_average(make_correlation(m, r), cfg);
  res.value = res.numeric.value;
  res.converged = res.numeric.converged;
  return res;
}

std::string CheckReport::to_json() const {
  nlohmann::json j;
  j["check"] = check;
  j["passed"] = passed;
  j["max_residual"] = max_residual;
  j["violations"] = violations;
  return j.dump(2);
}

namespace {

void record(CheckReport& rep, double residual, double tol, const std::string& what) {
  rep.max_residual = std::max(rep.max_residual, residual);
  if (residual >= tol) {
    rep.passed = false;
    rep.violations.push_back(what + ": residual " + std::to_string(residual));
  }
}

}  // namespace

CheckReport check_strong_compatibility(ModelSystem& m, const Word& base, int paddings,
                                       const AverageConfig& cfg) {
  CheckReport rep;
  rep.check = "strong_compatibility";
  PhiInfinityResult ref = evaluate_phi_infinity(m, base, cfg);
  CorrelationFunction cf = make_correlation(m, base);
  int k = std::max(cf.arity(), 1);
  for (int pads = 1; pads <= paddings; ++pads) {
    // dummy variables occupy the innermost slots; the word ignores them
    auto padded = [&](std::span<const long> t) {
      return cf(t.subspan(static_cast<size_t>(pads)));
    };
    NestedResult got = nested_average_fn(padded, k + pads, cfg);
    double residual = std::abs(got.value.to_complex() - ref.value.to_complex());
    record(rep, residual, cfg.tol, "padding with " + std::to_string(pads) + " identities");
    if (!got.converged) {
      rep.passed = false;
      rep.violations.push_back("padded average did not converge (pads=" +
                               std::to_string(pads) + ")");
    }
  }
  return rep;
}

CheckReport check_product_property(const std::function<Scalar(std::span<const long>)>& f1,
                                   int k1,
                                   const std::function<Scalar(std::span<const long>)>& f2,
                                   int k2, const AverageConfig& cfg) {
  CheckReport rep;
  rep.check = "product_property";
  auto prod = [&](std::span<const long> t) {
    return f1(t.subspan(0, static_cast<size_t>(k1))) * f2(t.subspan(static_cast<size_t>(k1)));
  };
  NestedResult lhs = nested_average_fn(prod, k1 + k2, cfg);
  NestedResult a1 = nested_average_fn(f1, k1, cfg);
  NestedResult a2 = nested_average_fn(f2, k2, cfg);
  double residual =
      std::abs(lhs.value.to_complex() - a1.value.to_complex() * a2.value.to_complex());
  record(rep, residual, cfg.tol, "Avg(f1 f2) vs Avg(f1) Avg(f2)");
  if (!lhs.converged || !a1.converged || !a2.converged) {
    rep.passed = false;
    rep.violations.push_back("a nested average did not converge");
  }
  return rep;
}

CheckReport check_permutation_invariance(ModelSystem& m, const Word& w,
                                         const std::vector<std::map<int, int>>& perms,
                                         const AverageConfig& cfg) {
  CheckReport rep;
  rep.check = "permutation_invariance";
  PhiInfinityResult ref = evaluate_phi_infinity(m, w, cfg);
  for (size_t i = 0; i < perms.size(); ++i) {
    Word pw = apply_permutation(m, reduce(m, w), perms[i]);
    PhiInfinityResult got = evaluate_phi_infinity(m, pw, cfg);
    double residual = std::abs(got.value.to_complex() - ref.value.to_complex());
    record(rep, residual, cfg.tol, "permutation #" + std::to_string(i));
  }
  return rep;
}

}  // namespace mtc
