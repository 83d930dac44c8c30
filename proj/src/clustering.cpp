#include "mtc/clustering.hpp"

#include "mtc/models/bernoulli.hpp"
#include "mtc/models/car.hpp"
#include "mtc/models/cat_map.hpp"
#include "mtc/models/free_shift.hpp"
#include "mtc/models/singleton.hpp"

#include "json.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace mtc {

std::string verdict_name(Verdict v) {
  switch (v) {
    case Verdict::holds: return "holds";
    case Verdict::fails: return "fails";
    default: return "inconclusive";
  }
}

void ClusterReport::add(ProbeResult p) {
  max_residual = std::max(max_residual, p.residual);
  probes.push_back(std::move(p));
}

void ClusterReport::finalize(double eps) {
  bool witness = false, settled = true;
  for (const auto& p : probes) {
    if (p.residual > 10 * eps) witness = true;
    if (!p.converged) settled = false;
  }
  if (witness)
    verdict = Verdict::fails;
  else if (max_residual < eps && settled)
    verdict = Verdict::holds;
  else
    verdict = Verdict::inconclusive;
}

std::string ClusterReport::to_json() const {
  nlohmann::json j;
  j["condition"] = condition;
  j["max_residual"] = max_residual;
  j["verdict"] = verdict_name(verdict);
  j["probes"] = nlohmann::json::array();
  for (const auto& p : probes)
    j["probes"].push_back({{"label", p.label},
                           {"residual", p.residual},
                           {"exact", p.exact},
                           {"converged", p.converged}});
  return j.dump(2);
}

ProbeResult residual_avg(const std::function<Scalar(long)>& f, const Scalar& target,
                         const AverageConfig& cfg, std::string label) {
  CesaroResult avg = cesaro_average(f, cfg);
  ProbeResult p;
  p.label = std::move(label);
  p.exact = avg.exact && target.is_exact();
  p.converged = avg.converged;
  if (p.exact && (avg.value - target).is_zero()) {
    p.residual = 0.0;
    return p;
  }
  p.residual = std::abs(avg.value.to_complex() - target.to_complex());
  if (!avg.exact && avg.ladder.size() >= 2) {
    // Richardson step: a finite collection of off-target times contributes
    // c/T to the mean, which 2*A(2T) - A(T) cancels
    size_t n = avg.ladder.size();
    double extrap =
        std::abs(2.0 * avg.ladder[n - 1] - avg.ladder[n - 2] - target.to_complex());
    if (extrap < p.residual) p.residual = extrap;
    if (p.residual < cfg.tol) p.converged = true;
  }
  return p;
}

namespace {

// Eventual periodicity of an exact sequence: smallest (burn-in, period) with
// f(s+p) = f(s) on a verification window.
bool eventually_periodic(std::vector<Scalar>& vals, long scan, long& b_out, long& p_out) {
  for (const Scalar& v : vals)
    if (!v.is_exact()) return false;
  long last = static_cast<long>(vals.size()) - 1;
  for (long p = 1; p <= scan; ++p)
    for (long b = 0; b <= scan; ++b) {
      bool ok = true;
      // verify over the whole sampled window, not just one period
      for (long s = b; s + p <= last && ok; ++s)
        if (!(vals[static_cast<size_t>(s)].exact() ==
              vals[static_cast<size_t>(s + p)].exact()))
          ok = false;
      if (ok) {
        b_out = b;
        p_out = p;
        return true;
      }
    }
  return false;
}

}  // namespace

ProbeResult residual_limit(const std::function<Scalar(long)>& f, const Scalar& target,
                           const AverageConfig& cfg, std::string label) {
  cfg.validate();
  ProbeResult p;
  p.label = std::move(label);

  long scan = std::min<long>(48, std::max<long>(8, cfg.horizon / 4));
  std::vector<Scalar> vals;
  vals.reserve(static_cast<size_t>(3 * scan + 1));
  for (long s = 0; s <= 3 * scan; ++s) vals.push_back(f(s));

  long b = 0, per = 0;
  if (target.is_exact() && eventually_periodic(vals, scan, b, per)) {
    p.exact = true;
    p.converged = true;
    double worst = 0.0;
    for (long s = b; s < b + per; ++s) {
      Scalar d = vals[static_cast<size_t>(s)] - target;
      if (!d.is_zero()) worst = std::max(worst, d.abs());
    }
    p.residual = worst;
    return p;
  }

  long T = cfg.probes().back();
  double worst = 0.0, prev_worst = -1.0;
  for (long t = T / 2; t < T; ++t)
    worst = std::max(worst, std::abs(f(t).to_complex() - target.to_complex()));
  for (long t = T / 4; t < T / 2; ++t)
    prev_worst = std::max(prev_worst, std::abs(f(t).to_complex() - target.to_complex()));
  p.residual = worst;
  // settled when the tail sup is no longer shrinking appreciably or is tiny
  p.converged = worst < cfg.tol || worst <= prev_worst + cfg.tol;
  return p;
}

namespace {

Scalar lc_phi(ModelSystem& m, const ObsLC& x) {
  Scalar acc;
  for (const auto& [c, id] : x.terms) acc += c * m.phi(id);
  return acc;
}

Scalar eval(ModelSystem& m, const std::vector<std::pair<ObsLC, long>>& letters) {
  return correlate_lc(m, letters);
}

}  // namespace

ClusterReport test_clustering_in_mean(ModelSystem& m, const std::vector<TripleProbe>& probes,
                                      const AverageConfig& cfg) {
  ClusterReport rep;
  rep.condition = "4";
  for (const auto& pr : probes) {
    Scalar target = eval(m, {{pr.x, 0}, {pr.z, 0}}) * lc_phi(m, pr.y);
    rep.add(residual_avg(
        [&](long t) { return eval(m, {{pr.x, 0}, {pr.y, t}, {pr.z, 0}}); }, target, cfg,
        pr.label));
  }
  rep.finalize(cfg.tol);
  return rep;
}

ClusterReport test_weak_clustering(ModelSystem& m, const std::vector<TripleProbe>& probes,
                                   const AverageConfig& cfg) {
  ClusterReport rep;
  rep.condition = "5";
  for (const auto& pr : probes) {
    Scalar target = eval(m, {{pr.x, 0}, {pr.z, 0}}) * lc_phi(m, pr.y);
    rep.add(residual_limit(
        [&](long t) { return eval(m, {{pr.x, 0}, {pr.y, t}, {pr.z, 0}}); }, target, cfg,
        pr.label));
  }
  rep.finalize(cfg.tol);
  return rep;
}

ClusterReport test_strong_clustering(ModelSystem& m, const std::vector<FiveProbe>& probes,
                                     const AverageConfig& cfg) {
  ClusterReport rep;
  rep.condition = "6.a";
  for (const auto& pr : probes) {
    Scalar target =
        eval(m, {{pr.x, 0}, {pr.z, 0}, {pr.t, 0}}) * eval(m, {{pr.y, 0}, {pr.s, 0}});
    rep.add(residual_limit(
        [&](long t) {
          return eval(m, {{pr.x, 0}, {pr.y, t}, {pr.z, 0}, {pr.s, t}, {pr.t, 0}});
        },
        target, cfg, pr.label));
  }
  rep.finalize(cfg.tol);
  return rep;
}

ClusterReport test_hyper_clustering(ModelSystem& m, const Word& w, const AverageConfig& cfg,
                                    long d) {
  ClusterReport rep;
  rep.condition = "6.b";
  Word r = reduce(m, w);
  int k = 0;
  for (const auto& l : r.letters) k = std::max(k, l.copy);

  // grouped product: per copy, the ordered product of its letters under phi
  Scalar target = r.coeff;
  for (int j = 1; j <= k; ++j) {
    ObsId acc = m.identity();
    bool seen = false;
    for (const auto& l : r.letters) {
      if (l.copy != j) continue;
      auto [c, z] = m.product(acc, l.obs);
      target *= c;
      acc = z;
      seen = true;
    }
    if (seen) target *= m.phi(acc);
  }

  rep.add(residual_limit(
      [&](long tau) {
        std::vector<TimedObs> xs;
        for (const auto& l : r.letters) xs.push_back({l.obs, l.copy * (d + 1) * tau});
        return r.coeff * m.correlate(xs);
      },
      target, cfg, "rays with slopes j*(d+1), d=" + std::to_string(d)));
  rep.finalize(cfg.tol);
  return rep;
}

ClusterReport test_condition_20(ModelSystem& m, const std::vector<RayProbe>& probes,
                                const AverageConfig& cfg, long d) {
  ClusterReport rep;
  rep.condition = "20";
  for (const auto& pr : probes) {
    rep.add(residual_limit(
        [&](long tau) {
          std::vector<std::pair<ObsLC, long>> letters;
          for (const auto& rl : pr.letters)
            letters.push_back({rl.a, rl.slot * (d + 1) * tau});
          return eval(m, letters);
        },
        Scalar(), cfg, pr.label));
  }
  rep.finalize(cfg.tol);
  return rep;
}

ClusterReport test_condition_24(ModelSystem& m,
                                const std::vector<std::array<ObsLC, 5>>& probes,
                                const AverageConfig& cfg) {
  ClusterReport rep;
  rep.condition = "24";
  int idx = 0;
  for (const auto& pr : probes) {
    rep.add(residual_avg(
        [&](long t) {
          return eval(m, {{pr[0], 0}, {pr[1], t}, {pr[2], 0}, {pr[3], t}, {pr[4], 0}});
        },
        Scalar(), cfg, "probe #" + std::to_string(idx++)));
  }
  rep.finalize(cfg.tol);
  return rep;
}

ClusterReport test_asymptotic_abelianess(ModelSystem& m, AbelianLevel level,
                                         const std::vector<AbelianProbe>& probes,
                                         const AverageConfig& cfg) {
  ClusterReport rep;
  rep.condition = level == AbelianLevel::mean   ? "8.a"
                  : level == AbelianLevel::weak ? "8.b"
                                                : "8.c";
  for (const auto& pr : probes) {
    auto comm_at = [&](long t) {
      std::vector<std::pair<ObsLC, long>> a{{pr.x, 0}, {pr.y, t}};
      std::vector<std::pair<ObsLC, long>> b{{pr.y, t}, {pr.x, 0}};
      return std::pair(a, b);
    };
    if (level == AbelianLevel::strong) {
      // phi(S* [X,Y(t)]* [X,Y(t)] S) -> 0
      auto f = [&](long t) {
        ObsLC ys = lc_adjoint(m, pr.y);
        ObsLC xs = lc_adjoint(m, pr.x);
        ObsLC ss = lc_adjoint(m, pr.s);
        // expand the 4 sign combinations of [X,Y]*[X,Y]
        Scalar acc;
        struct Term {
          int sign;
          std::array<const ObsLC*, 2> fs;  // order of the starred pair
        };
        const ObsLC* seq[2][2] = {{&ys, &xs}, {&xs, &ys}};  // (XY)* = Y*X*, (YX)* = X*Y*
        const ObsLC* fwd[2][2] = {{&pr.x, &pr.y}, {&pr.y, &pr.x}};
        for (int i = 0; i < 2; ++i)
          for (int j = 0; j < 2; ++j) {
            int sign = (i + j) % 2 ? -1 : 1;
            std::vector<std::pair<ObsLC, long>> letters{
                {ss, 0},          {*seq[i][0], i == 0 ? t : 0}, {*seq[i][1], i == 0 ? 0 : t},
                {*fwd[j][0], j == 0 ? 0 : t}, {*fwd[j][1], j == 0 ? t : 0},  {pr.s, 0}};
            Scalar v = eval(m, letters);
            acc += sign == 1 ? v : Scalar() - v;
          }
        return acc;
      };
      rep.add(residual_limit(f, Scalar(), cfg, pr.label));
      continue;
    }
    auto f = [&](long t) {
      auto [a, b] = comm_at(t);
      std::vector<std::pair<ObsLC, long>> la{{pr.s, 0}};
      la.insert(la.end(), a.begin(), a.end());
      la.push_back({pr.z, 0});
      std::vector<std::pair<ObsLC, long>> lb{{pr.s, 0}};
      lb.insert(lb.end(), b.begin(), b.end());
      lb.push_back({pr.z, 0});
      return eval(m, la) - eval(m, lb);
    };
    if (level == AbelianLevel::mean)
      rep.add(residual_avg(f, Scalar(), cfg, pr.label));
    else
      rep.add(residual_limit(f, Scalar(), cfg, pr.label));
  }
  rep.finalize(cfg.tol);
  return rep;
}

namespace {

ObsLC one(ModelSystem& m) { return ObsLC::basis(m.identity()); }

struct Catalog {
  std::vector<TripleProbe> triples;
  std::vector<FiveProbe> fives;
  std::vector<RayProbe> rays;
  std::vector<std::array<ObsLC, 5>> cond24;
  std::vector<AbelianProbe> abelian;
  Word hyper_word;
};

Catalog standard_catalog(ModelSystem& m) {
  Catalog c;
  ObsLC unit = one(m);
  if (auto* fs = dynamic_cast<FreeShiftModel*>(&m)) {
    ObsLC e0 = ObsLC::basis(fs->generator(0));
    ObsLC e01 = ObsLC::basis(fs->monomial({0, 1}));
    c.triples = {{unit, e0, unit, "X=Z=1, Y=e0"},
                 {e0, e0, e0, "X=Y=Z=e0"},
                 {e01, e0, e01, "X=Z=e0e1, Y=e0"}};
    c.fives = {{e0, e0, e0, e0, unit, "alternating e0 witness"},
               {unit, unit, unit, unit, unit, "all-identity"}};
    c.rays = {{{{centred(*fs, fs->generator(1)), 1},
                {centred(*fs, fs->generator(0)), 0},
                {centred(*fs, fs->generator(1)), 2}},
               "centred e0 between shifted e1 rays"}};
    c.cond24 = {{unit, e0, e0, e0, unit}};
    c.abelian = {{unit, e0, e0, unit, "S=Z=1, X=Y=e0"},
                 {e0, e0, e0, e0, "all e0"}};
    c.hyper_word = make_word(*fs, {{fs->generator(0), 1},
                                   {fs->generator(0), 2},
                                   {fs->generator(0), 1},
                                   {fs->generator(0), 2}});
  } else if (auto* cm = dynamic_cast<CatMapModel*>(&m)) {
    ObsLC wp = ObsLC::basis(cm->weyl({1, 0}));
    ObsLC wq = ObsLC::basis(cm->weyl({0, 1}));
    ObsLC wpm = ObsLC::basis(cm->weyl({-1, 0}));
    ObsLC wqm = ObsLC::basis(cm->weyl({0, -1}));
    c.triples = {{unit, wq, unit, "X=Z=1, Y=W(0,1)"}, {wp, wq, wpm, "Weyl triple"}};
    c.fives = {{wp, wq, wpm, wqm, unit, "Weyl commutator word"},
               {unit, unit, unit, unit, unit, "all-identity"}};
    c.rays = {{{{wp, 1}, {wq, 0}, {wpm, 2}}, "W(q) between separated W(p) rays"}};
    c.cond24 = {{wp, wq, wpm, wqm, unit}};
    c.abelian = {{unit, wp, wq, unit, "S=Z=1, X=W(1,0), Y=W(0,1)"}};
    // the commutator word is a genuine witness: along the rays it carries the
    // oscillating phase e^{2 pi i theta sigma(p, T^t q)} while the grouped
    // product is 1, matching the strong-clustering failure
    c.hyper_word = make_word(*cm, {{cm->weyl({1, 0}), 1},
                                   {cm->weyl({0, 1}), 2},
                                   {cm->weyl({-1, 0}), 1},
                                   {cm->weyl({0, -1}), 2}});
  } else if (auto* bm = dynamic_cast<BernoulliModel*>(&m)) {
    std::vector<Rational> tbl(static_cast<size_t>(bm->alphabet()), Rational(0));
    tbl[tbl.size() - 1] = 1;
    ObsLC ind = ObsLC::basis(bm->cylinder({{0}, tbl}));
    ObsLC cen = centred(*bm, bm->cylinder({{0}, tbl}));
    c.triples = {{unit, ind, unit, "X=Z=1"}, {ind, ind, ind, "indicator triple"}};
    c.fives = {{ind, ind, ind, ind, ind, "indicator five"},
               {unit, unit, unit, unit, unit, "all-identity"}};
    c.rays = {{{{cen, 1}, {cen, 0}, {cen, 2}}, "centred indicators on rays"}};
    c.cond24 = {{unit, cen, cen, cen, unit}};
    c.abelian = {{ind, ind, ind, ind, "commutative"}};
    Word w = make_word(*bm, {{bm->cylinder({{0}, tbl}), 1},
                             {bm->cylinder({{0}, tbl}), 2},
                             {bm->cylinder({{0}, tbl}), 3}});
    c.hyper_word = w;
  } else if (auto* sm = dynamic_cast<SingletonFactorizationModel*>(&m)) {
    ObsLC x = ObsLC::basis(sm->generator());
    ObsLC cen = centred(*sm, sm->generator());
    c.triples = {{unit, x, unit, "X=Z=1"}, {x, x, x, "X=Y=Z=X"}};
    c.fives = {{x, x, x, x, unit, "generator five"}};
    c.rays = {{{{cen, 1}, {cen, 0}, {cen, 2}}, "centred generator rays"}};
    c.cond24 = {{unit, cen, cen, cen, unit}};
    c.abelian = {{x, x, x, x, "commutative"}};
    // X_1 X_2 X_1 is a witness: the ray value splits as phi(X)^3 = 1/8 while
    // the grouped product is phi(X^2) phi(X) = 1/4, mirroring the clustering
    // failure of this model
    c.hyper_word = make_word(
        *sm, {{sm->generator(), 1}, {sm->generator(), 2}, {sm->generator(), 1}});
  } else if (auto* car = dynamic_cast<CarModel*>(&m)) {
    ObsLC n0 = ObsLC::basis(car->product(car->creator(0), car->annihilator(0)).second);
    ObsLC hop = ObsLC::basis(car->product(car->creator(0), car->annihilator(1)).second);
    c.triples = {{unit, n0, unit, "X=Z=1, Y=n_0"}, {n0, n0, n0, "number operators"}};
    c.fives = {{n0, n0, n0, hop, unit, "number/hopping five"}};
    c.rays = {{{{centred(*car, n0.terms[0].second), 1},
                {centred(*car, n0.terms[0].second), 0},
                {centred(*car, n0.terms[0].second), 2}},
               "centred n_0 rays"}};
    c.cond24 = {{unit, centred(*car, n0.terms[0].second), centred(*car, n0.terms[0].second),
                 centred(*car, n0.terms[0].second), unit}};
    c.abelian = {{unit, n0, n0, unit, "S=Z=1, X=Y=n_0"}};
    c.hyper_word = make_word(*car, {{n0.terms[0].second, 1}, {n0.terms[0].second, 2}});
  } else {
    throw std::invalid_argument("run_standard_condition: no probe catalog for model '" +
                                m.name() + "'");
  }
  return c;
}

}  // namespace

ClusterReport run_standard_condition(ModelSystem& m, const std::string& condition,
                                     const AverageConfig& cfg) {
  Catalog c = standard_catalog(m);
  if (condition == "4") return test_clustering_in_mean(m, c.triples, cfg);
  if (condition == "5") return test_weak_clustering(m, c.triples, cfg);
  if (condition == "6.a") return test_strong_clustering(m, c.fives, cfg);
  if (condition == "6.b") return test_hyper_clustering(m, c.hyper_word, cfg);
  if (condition == "20") return test_condition_20(m, c.rays, cfg);
  if (condition == "24") return test_condition_24(m, c.cond24, cfg);
  if (condition == "8.a") return test_asymptotic_abelianess(m, AbelianLevel::mean, c.abelian, cfg);
  if (condition == "8.b") return test_asymptotic_abelianess(m, AbelianLevel::weak, c.abelian, cfg);
  if (condition == "8.c")
    return test_asymptotic_abelianess(m, AbelianLevel::strong, c.abelian, cfg);
  throw std::invalid_argument("run_standard_condition: unknown condition '" + condition + "'");
}

}  // namespace mtc
