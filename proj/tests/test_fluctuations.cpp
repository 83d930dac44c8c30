#include "doctest.h"

#include "mtc/fluctuations.hpp"
#include "mtc/models/bernoulli.hpp"
#include "mtc/models/free_shift.hpp"
#include "mtc/models/singleton.hpp"
#include "mtc/partitions.hpp"

#include <cmath>
#include <random>

using namespace mtc;

namespace {

FluctuationSpec same(ObsId x, int order, long N) {
  FluctuationSpec s;
  s.observables.assign(order, x);
  s.N = N;
  return s;
}

}  // namespace

TEST_CASE("reference law moments") {
  CHECK(gaussian_moment(1, 1.0) == doctest::Approx(1.0));
  CHECK(gaussian_moment(2, 1.0) == doctest::Approx(3.0));
  CHECK(gaussian_moment(4, 2.0) == doctest::Approx(105.0 * 256.0));  // 7!! sigma^8
  CHECK(semicircle_moment(1, 1.0) == doctest::Approx(1.0));
  CHECK(semicircle_moment(2, 1.0) == doctest::Approx(2.0));
  CHECK(semicircle_moment(4, 1.0) == doctest::Approx(14.0));

  // semicircle moments against direct quadrature of (1/2pi) sqrt(4-t^2) t^{2n}
  for (int n = 1; n <= 4; ++n) {
    double integral = 0.0;
    const int steps = 400000;
    for (int i = 0; i < steps; ++i) {
      double t = -2.0 + 4.0 * (i + 0.5) / steps;
      integral += std::sqrt(4.0 - t * t) * std::pow(t, 2 * n);
    }
    integral *= 4.0 / steps / (2.0 * M_PI);
    CHECK(std::abs(semicircle_moment(n, 1.0) - integral) < 1e-6);
  }
}

TEST_CASE("noncrossing moment sums") {
  auto ones = [](int, int) { return Scalar::one(); };
  CHECK(noncrossing_moment(ones, 0).approx_equal(Scalar(1)));
  CHECK(noncrossing_moment(ones, 2).approx_equal(Scalar(2)));
  CHECK(noncrossing_moment(ones, 3).approx_equal(Scalar(5)));
  // constant two-point value sigma^2 gives C_n sigma^{2n}
  auto sig = [](int, int) { return Scalar(Rational(4)); };
  CHECK(noncrossing_moment(sig, 2).approx_equal(Scalar(Rational(32))));
}

TEST_CASE("pair partition counts and crossing numbers feed the evaluators") {
  auto ordered = enumerate_pair_partitions(3, true);
  CHECK(ordered.size() == 15);
  CHECK(enumerate_pair_partitions(3, false).size() == 90);
  int noncrossing = 0;
  for (const auto& p : ordered)
    if (crossing_number(p) == 0) ++noncrossing;
  CHECK(noncrossing == 5);
  CHECK(catalan(3).str() == "5");
}

TEST_CASE("free shift: exact finite-N semicircle moments") {
  FreeShiftModel m;
  ObsId e0 = m.generator(0);

  for (long N : {1L, 2L, 4L, 8L, 32L, 128L}) {
    Scalar m2 = finite_n_moment(m, same(e0, 2, N));
    CHECK(m2.approx_equal(Scalar(1)));
    Scalar m4 = finite_n_moment(m, same(e0, 4, N));
    CHECK(m4.approx_equal(Scalar(Rational(2 * N - 1, N))));  // 2 - 1/N exactly
  }

  // M6 -> C_3 = 5
  Scalar m6 = finite_n_moment(m, same(e0, 6, 64));
  CHECK(std::abs(m6.to_complex().real() - 5.0) < 12.0 / 64.0);

  // odd moments vanish identically for this even distribution
  CHECK(finite_n_moment(m, same(e0, 3, 16)).is_zero());
  CHECK(finite_n_moment(m, same(e0, 5, 8)).is_zero());

  // limit moments via the pair-partition sum
  std::vector<ObsId> xs4(4, e0);
  CHECK(asymptotic_moment_pair_sum(m, xs4, true).approx_equal(Scalar(2)));
  std::vector<ObsId> xs6(6, e0);
  CHECK(asymptotic_moment_pair_sum(m, xs6, true).approx_equal(Scalar(5)));
  // unordered labeled sum with the 1/n! weight agrees for symmetric input? No:
  // the ordered sum keeps only noncrossing terms here, the labeled one counts
  // each unordered partition n! times, so the two paths answer different
  // questions; check the n = 1 case where they coincide.
  std::vector<ObsId> xs2(2, e0);
  CHECK(asymptotic_moment_pair_sum(m, xs2, true)
            .approx_equal(asymptotic_moment_pair_sum(m, xs2, false)));
}

TEST_CASE("Bernoulli: Gaussian limit moments") {
  BernoulliModel m({Rational(1, 2), Rational(1, 2)});
  ObsId spin = m.cylinder({{0}, {Rational(-1, 2), Rational(1, 2)}});
  // variance 1/4
  Scalar m2 = finite_n_moment(m, same(spin, 2, 8));
  CHECK(m2.approx_equal(Scalar(Rational(1, 4))));
  // classical independence: M4(N) = 3 sigma^4 - (3 sigma^4 - m4) / N
  Scalar m4 = finite_n_moment(m, same(spin, 4, 16));
  double target = gaussian_moment(2, 0.5);
  CHECK(std::abs(m4.to_complex().real() - target) < 3.0 / 16.0);

  std::vector<ObsId> xs4(4, spin);
  CHECK(asymptotic_moment_pair_sum(m, xs4, true).approx_equal(Scalar(Rational(3, 16))));
}

TEST_CASE("brute and grouped finite-N paths agree") {
  FreeShiftModel fs;
  BernoulliModel be({Rational(1, 3), Rational(2, 3)});
  ObsId e0 = fs.generator(0), e1 = fs.generator(1);
  ObsId ind = be.cylinder({{0}, {Rational(0), Rational(1)}});

  std::mt19937 rng(7);
  std::uniform_int_distribution<int> ord(1, 4);
  std::uniform_int_distribution<long> n(1, 5);
  for (int it = 0; it < 40; ++it) {
    FluctuationSpec s;
    int r = ord(rng);
    for (int i = 0; i < r; ++i) s.observables.push_back(it % 2 ? e0 : e1);
    s.N = n(rng);
    Scalar a = finite_n_moment_brute(fs, s);
    Scalar b = finite_n_moment_grouped(fs, s);
    CHECK(a.approx_equal(b, 1e-10));
  }
  for (int it = 0; it < 20; ++it) {
    FluctuationSpec s = same(ind, ord(rng), n(rng));
    CHECK(finite_n_moment_brute(be, s).approx_equal(finite_n_moment_grouped(be, s), 1e-10));
  }
}

TEST_CASE("mixed observable lists") {
  FreeShiftModel m;
  ObsId e0 = m.generator(0), e1 = m.generator(1);
  // phi(e0 e1) = 0, so cross pairings drop out
  FluctuationSpec s;
  s.observables = {e0, e1, e1, e0};
  s.N = 8;
  Scalar v = finite_n_moment(m, s);
  Scalar asym = asymptotic_moment_pair_sum(m, s.observables, true);
  CHECK(asym.approx_equal(Scalar(1)));  // only the nested pairing (14)(23) survives
  CHECK(std::abs(v.to_complex().real() - 1.0) < 0.5);
}

TEST_CASE("non-centred pair-sum input is rejected by name") {
  BernoulliModel m({Rational(1, 2), Rational(1, 2)});
  ObsId ind = m.cylinder({{0}, {Rational(0), Rational(1)}});  // mean 1/2
  std::vector<ObsId> xs(2, ind);
  CHECK_THROWS_WITH_AS(asymptotic_moment_pair_sum(m, xs, true),
                       doctest::Contains(m.obs_name(ind).c_str()), std::invalid_argument);
}

TEST_CASE("budget guard on the brute path") {
  FreeShiftModel m;
  CHECK_THROWS_AS(finite_n_moment_brute(m, same(m.generator(0), 6, 100)),
                  std::length_error);
}

TEST_CASE("odd moments decay like 1/sqrt(N)") {
  // biased {0,1} coin (m_k = 1/3) so the centred third moment survives:
  // E[(X-p)^3] = p(1-p)(1-2p) = 2/27
  std::vector<Rational> biased(13, Rational(1, 3));
  biased[0] = 1;
  SingletonFactorizationModel mb(biased);
  ObsId xb = mb.generator();

  double c3 = 2.0 / 27.0;
  double prev = 1e9;
  for (long N : {4L, 16L, 64L}) {
    Scalar v = finite_n_moment(mb, same(xb, 3, N));
    double mag = std::abs(v.to_complex());
    CHECK(mag == doctest::Approx(c3 / std::sqrt(static_cast<double>(N))));
    CHECK(mag < prev);
    prev = mag;
  }
}

TEST_CASE("convergence table") {
  FreeShiftModel m;
  auto rows = convergence_table(m, m.generator(0), 3, {4, 16, 64}, "semicircle");
  CHECK(!rows.empty());
  bool saw_m4 = false;
  for (const auto& r : rows) {
    if (r.order == 4) {
      saw_m4 = true;
      CHECK(r.reference == doctest::Approx(2.0));
      double expect = 2.0 - 1.0 / static_cast<double>(r.N);
      CHECK(r.finite_value.real() == doctest::Approx(expect));
      CHECK(r.residual_asymptotic_vs_reference < 1e-9);
    }
    if (r.order % 2 == 0) CHECK(r.finite_exact);
  }
  CHECK(saw_m4);

  BernoulliModel be({Rational(1, 2), Rational(1, 2)});
  ObsId spin = be.cylinder({{0}, {Rational(-1, 2), Rational(1, 2)}});
  auto brows = convergence_table(be, spin, 2, {8, 32}, "gaussian");
  for (const auto& r : brows)
    if (r.order == 4 && r.N == 32) CHECK(r.residual_finite_vs_asymptotic < 3.0 / 32.0);
}

TEST_CASE("moment sequence positivity") {
  // semicircle moments 1, 0, 1, 0, 2, 0, 5
  CHECK(moment_sequence_positive({1, 0, 1, 0, 2, 0, 5}));
  // gaussian moments
  CHECK(moment_sequence_positive({1, 0, 1, 0, 3, 0, 15}));
  // not a moment sequence: m2 < m1^2
  CHECK(!moment_sequence_positive({1, 1, 0.5}));
}
