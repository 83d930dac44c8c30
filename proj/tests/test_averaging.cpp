#include "doctest.h"

#include "mtc/averaging.hpp"
#include "mtc/models/bernoulli.hpp"
#include "mtc/models/car.hpp"
#include "mtc/models/free_shift.hpp"
#include "mtc/models/singleton.hpp"

#include <cmath>
#include <random>

using namespace mtc;

namespace {

AverageConfig small_cfg(long horizon = 64) {
  AverageConfig cfg;
  cfg.horizon = horizon;
  return cfg;
}

}  // namespace

TEST_CASE("config validation") {
  AverageConfig bad;
  bad.horizon = 0;
  CHECK_THROWS_AS(bad.validate(), std::invalid_argument);
  bad.horizon = 8;
  bad.tol = 0;
  CHECK_THROWS_AS(bad.validate(), std::invalid_argument);
  bad.tol = 1e-6;
  bad.probe_horizons = {8, 8};
  CHECK_THROWS_AS(bad.validate(), std::invalid_argument);
  bad.probe_horizons = {8, 16, 32};
  CHECK_NOTHROW(bad.validate());
  CHECK(small_cfg(10).probes() == std::vector<long>{10, 20, 40});
}

TEST_CASE("cesaro average of a constant") {
  auto r = cesaro_average([](long) { return Scalar(Rational(3, 7)); }, small_cfg());
  CHECK(r.converged);
  CHECK(r.exact);
  CHECK(r.value.approx_equal(Scalar(Rational(3, 7))));
}

TEST_CASE("cesaro average of a rational phase is exactly zero") {
  // f(s) = e^{2 pi i s a/b} averages to 0 over one period
  for (auto [a, b] : {std::pair{1, 3}, {2, 5}, {3, 7}}) {
    auto r = cesaro_average(
        [&](long s) { return Scalar::phase_turns(Rational(a * s, b)); }, small_cfg());
    CHECK(r.exact);
    CHECK(r.value.is_zero());
  }
}

TEST_CASE("cesaro average of a delta function") {
  // exact path: eventually constant 0
  auto r = cesaro_average([](long s) { return Scalar(s == 0 ? 1 : 0); }, small_cfg());
  CHECK(r.exact);
  CHECK(r.value.is_zero());
  // numeric path sees the 1/T finite-horizon value
  auto rn = cesaro_average(
      [](long s) { return Scalar(std::complex<double>(s == 0 ? 1.0 : 0.0, 0.0)); },
      small_cfg());
  CHECK(!rn.exact);
  CHECK(!rn.converged);  // the 1/T ladder halves between probes, above tol
  CHECK(std::abs(rn.ladder.back() - 1.0 / static_cast<double>(rn.horizons.back())) < 1e-15);
}

TEST_CASE("cesaro flags slowly wandering numeric sequences") {
  AverageConfig cfg = small_cfg(32);
  cfg.tol = 1e-12;
  auto r = cesaro_average(
      [](long s) {
        return Scalar(std::complex<double>(std::cos(0.01 * static_cast<double>(s)), 0.0));
      },
      cfg);
  CHECK(!r.converged);
}

TEST_CASE("corridor indicator") {
  std::vector<long> a{0, 10, 20}, b{0, 1, 20}, c{5, 5};
  CHECK(corridor(2, a) == 1);
  CHECK(corridor(2, b) == 0);
  CHECK(corridor(0, c) == 0);
  CHECK(corridor(0, std::vector<long>{}) == 1);
  CHECK(corridor(9, a) == 1);
  CHECK(corridor(10, a) == 0);
}

TEST_CASE("nested average of free shift words") {
  FreeShiftModel m;
  ObsId e0 = m.generator(0);

  // k=1: Avg_t phi(e0(t)) = 0
  auto cf1 = make_correlation(m, make_word(m, {{e0, 1}}));
  CHECK(cf1.arity() == 1);
  auto r1 = nested_average(cf1, small_cfg());
  CHECK(r1.converged);
  CHECK(r1.value.is_zero());

  // k=2 alternating word: 0 in the limit
  auto cf2 = make_correlation(m, make_word(m, {{e0, 1}, {e0, 2}, {e0, 1}, {e0, 2}}));
  CHECK(cf2.arity() == 2);
  auto r2 = nested_average(cf2, small_cfg(48));
  CHECK(r2.converged);
  CHECK(r2.value.is_zero());

  // constant correlation function (empty word times 5/3)
  auto cf3 = make_correlation(m, make_word(m, {{e0, 1}, {e0, 1}}, Scalar(Rational(5, 3))));
  auto r3 = nested_average(cf3, small_cfg());
  CHECK(r3.value.approx_equal(Scalar(Rational(5, 3))));
}

TEST_CASE("nested average order flag permutes the time slots") {
  FreeShiftModel m;
  ObsId e0 = m.generator(0);
  auto cf = make_correlation(m, make_word(m, {{e0, 1}, {e0, 2}}));
  auto fwd = nested_average(cf, small_cfg(48), {0, 1});
  auto rev = nested_average(cf, small_cfg(48), {1, 0});
  CHECK(fwd.value.approx_equal(rev.value, 1e-9));
  CHECK_THROWS_AS(nested_average(cf, small_cfg(48), {0}), std::invalid_argument);
}

TEST_CASE("phi infinity dispatches to exact evaluators") {
  FreeShiftModel m;
  ObsId e0 = m.generator(0);

  auto r1 = evaluate_phi_infinity(m, make_word(m, {{e0, 1}, {e0, 1}}), small_cfg());
  CHECK(r1.exact);
  CHECK(r1.value.approx_equal(Scalar(1)));

  Word alt = make_word(m, {{e0, 1}, {e0, 2}, {e0, 1}, {e0, 2}});
  auto r2 = evaluate_phi_infinity(m, alt, small_cfg());
  CHECK(r2.exact);
  CHECK(r2.value.is_zero());

  // exact and numeric paths agree
  AverageConfig cfg = small_cfg(128);
  cfg.probe_horizons = {128, 256, 512};
  auto numeric = nested_average(make_correlation(m, alt), cfg);
  CHECK(numeric.value.abs() < 1e-6);
}

TEST_CASE("phi infinity factorizes for the Bernoulli shift") {
  BernoulliModel m({Rational(1, 3), Rational(2, 3)});
  ObsId x = m.cylinder({{0}, {Rational(0), Rational(1)}});
  auto r = evaluate_phi_infinity(m, make_word(m, {{x, 1}, {x, 2}}), small_cfg());
  CHECK(r.exact);
  CHECK(r.value.approx_equal(Scalar(Rational(4, 9))));  // phi(X)^2

  // and matches the numeric nested average
  auto numeric = nested_average(make_correlation(m, make_word(m, {{x, 1}, {x, 2}})),
                                small_cfg(48));
  CHECK(std::abs(numeric.value.to_complex() - r.value.to_complex()) < 1e-6);
}

TEST_CASE("phi infinity is multi-time-shift and permutation invariant") {
  FreeShiftModel m;
  std::mt19937 rng(91);
  std::uniform_int_distribution<int> len(1, 5), gen(-2, 2), copy(1, 3), shift(-6, 6);
  AverageConfig cfg = small_cfg();
  for (int it = 0; it < 60; ++it) {
    std::vector<Letter> ls;
    for (int i = len(rng); i > 0; --i)
      ls.push_back({m.generator(gen(rng)), copy(rng)});
    Word w = make_word(m, ls);
    Scalar base = evaluate_phi_infinity(m, w, cfg).value;

    MultiTimeShift s{{{1, shift(rng)}, {2, shift(rng)}, {3, shift(rng)}}};
    Scalar shifted = evaluate_phi_infinity(m, apply_multitime_shift(m, w, s), cfg).value;
    CHECK(shifted.approx_equal(base));

    // positivity: phi_inf(w* w) >= 0
    Scalar pos = evaluate_phi_infinity(m, word_concat(m, word_adjoint(m, w), w), cfg).value;
    CHECK(pos.to_complex().real() > -1e-12);
    CHECK(std::abs(pos.to_complex().imag()) < 1e-12);
  }
}

TEST_CASE("strong compatibility under identity padding") {
  FreeShiftModel m;
  ObsId e0 = m.generator(0);
  AverageConfig cfg = small_cfg(32);
  // base word with one dummy-paddable variable
  Word w = make_word(m, {{e0, 1}, {e0, 1}});
  auto rep = check_strong_compatibility(m, w, 3, cfg);
  CHECK(rep.passed);
  CHECK(rep.max_residual < 1e-12);

  Word two = make_word(m, {{e0, 1}, {e0, 2}, {e0, 1}, {e0, 2}});
  auto rep2 = check_strong_compatibility(m, two, 2, cfg);
  CHECK(rep2.passed);
  CHECK(rep2.to_json().find("\"passed\": true") != std::string::npos);
}

TEST_CASE("product property on disjoint time blocks") {
  AverageConfig cfg = small_cfg(32);
  // constants
  auto c1 = [](std::span<const long>) { return Scalar(Rational(2, 3)); };
  auto c2 = [](std::span<const long>) { return Scalar(Rational(3, 5)); };
  CHECK(check_product_property(c1, 1, c2, 1, cfg).passed);

  // periodic phases in disjoint variables: both sides 0
  auto f1 = [](std::span<const long> t) { return Scalar::phase_turns(Rational(t[0], 3)); };
  auto f2 = [](std::span<const long> t) { return Scalar::phase_turns(Rational(t[0], 5)); };
  auto rep = check_product_property(f1, 1, f2, 1, cfg);
  CHECK(rep.passed);
  CHECK(rep.max_residual < 1e-12);

  // Bernoulli two-point functions in disjoint variables
  BernoulliModel m({Rational(1, 2), Rational(1, 2)});
  ObsId spin = m.cylinder({{0}, {Rational(-1, 2), Rational(1, 2)}});
  auto g1 = [&](std::span<const long> t) {
    return m.correlate(std::vector<TimedObs>{{spin, 0}, {spin, t[0]}});
  };
  CHECK(check_product_property(g1, 1, g1, 1, cfg).passed);
}

TEST_CASE("permutation invariance reports") {
  BernoulliModel m({Rational(1, 2), Rational(1, 2)});
  ObsId spin = m.cylinder({{0}, {Rational(-1, 2), Rational(1, 2)}});
  Word w = make_word(m, {{spin, 1}, {spin, 2}, {spin, 1}, {spin, 3}});
  AverageConfig cfg = small_cfg(32);
  auto rep = check_permutation_invariance(
      m, w, {{}, {{1, 2}, {2, 1}}, {{1, 3}, {3, 1}}, {{1, 2}, {2, 3}, {3, 1}}}, cfg);
  CHECK(rep.passed);

  FreeShiftModel fs;
  ObsId e0 = fs.generator(0);
  Word alt = make_word(fs, {{e0, 1}, {e0, 2}, {e0, 1}, {e0, 2}});
  auto rep2 = check_permutation_invariance(fs, alt, {{}, {{1, 2}, {2, 1}}}, cfg);
  CHECK(rep2.passed);
}

TEST_CASE("corridor insertion leaves exact nested averages unchanged") {
  FreeShiftModel m;
  ObsId e0 = m.generator(0);
  auto cf = make_correlation(m, make_word(m, {{e0, 1}, {e0, 2}, {e0, 1}, {e0, 2}}));
  AverageConfig cfg = small_cfg(48);
  auto plain = nested_average(cf, cfg);
  for (long d : {1L, 4L, 8L}) {
    auto gated = nested_average_fn(
        [&](std::span<const long> t) {
          return corridor(d, t) ? cf(t) : Scalar();
        },
        cf.arity(), cfg);
    CHECK(std::abs(gated.value.to_complex() - plain.value.to_complex()) < 1e-6);
  }
}

TEST_CASE("singleton evaluator matches the numeric nested average") {
  std::vector<Rational> ms(9, Rational(1, 2));
  ms[0] = 1;
  SingletonFactorizationModel m(ms);
  ObsId x = m.generator();
  Word w = make_word(m, {{x, 1}, {x, 2}, {x, 1}});
  auto exact = evaluate_phi_infinity(m, w, small_cfg());
  CHECK(exact.exact);
  CHECK(exact.value.approx_equal(Scalar(Rational(1, 8))));
  auto numeric = nested_average(make_correlation(m, w), small_cfg(32));
  CHECK(std::abs(numeric.value.to_complex() - 0.125) < 1e-9);
}
