#include "mtc/fluctuations.hpp"

#include "mtc/partitions.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <stdexcept>

namespace mtc {

namespace {

constexpr double kBruteBudget = 1e7;

// phi_inf over words with centred-letter expansion, cached per computation
struct PhiInfEvaluator {
  ModelSystem& m;
  std::map<std::vector<Letter>, Scalar> cache;

  Scalar word_value(const Word& w) {
    Word r = reduce(m, w);
    if (r.coeff.is_zero()) return Scalar();
    auto it = cache.find(r.letters);
    if (it == cache.end()) {
      Word unit = r;
      unit.coeff = Scalar::one();
      auto v = m.phi_infinity_exact(unit);
      if (!v)
        throw std::invalid_argument("finite_n_moment: model '" + m.name() +
                                    "' provides no exact asymptotic state");
      it = cache.emplace(r.letters, *v).first;
    }
    return r.coeff * it->second;
  }

  // phi_inf(A^(1)_{c_1} ... A^(r)_{c_r}) for linear-combination letters
  Scalar lc_value(const std::vector<ObsLC>& letters, const std::vector<int>& copies) {
    std::vector<std::pair<ObsLC, int>> tagged;
    tagged.reserve(letters.size());
    for (size_t i = 0; i < letters.size(); ++i) tagged.push_back({letters[i], copies[i]});
    FreeElement fe = expand_lc_word(m, tagged);
    Scalar acc;
    for (const auto& w : fe.terms) acc += word_value(w);
    return acc;
  }
};

std::vector<ObsLC> centred_letters(ModelSystem& m, const std::vector<ObsId>& xs) {
  std::vector<ObsLC> out;
  out.reserve(xs.size());
  for (ObsId x : xs) {
    // prefer an atomic centred letter: the two-term expansion is not the same
    // thing once reduction glues letters across a dropped identity
    if (auto c = m.centred_basis(x))
      out.push_back(ObsLC::basis(*c));
    else
      out.push_back(centred(m, x));
  }
  return out;
}

// S / N^{r/2}: exact for even r or vanishing S, floating otherwise
Scalar normalize_tuple_sum(const Scalar& sum, long n, int r) {
  if (sum.is_exact() && sum.exact().is_zero()) return Scalar();
  if (r % 2 == 0) {
    Rational scale = 1 / rational_pow(Rational(n), r / 2);
    if (sum.is_exact()) return sum * Scalar(scale);
    return Scalar(sum.to_complex() * to_double(scale));
  }
  return Scalar(sum.to_complex() / std::pow(static_cast<double>(n), r / 2.0));
}

}  // namespace

Scalar finite_n_moment_brute(ModelSystem& m, const FluctuationSpec& spec) {
  int r = spec.order();
  long n = spec.N;
  if (r < 1 || n < 1) throw std::invalid_argument("finite_n_moment: need r >= 1, N >= 1");
  if (std::pow(static_cast<double>(n), r) > kBruteBudget)
    throw std::length_error("finite_n_moment: N^r exceeds the brute-force budget 10^7");

  PhiInfEvaluator ev{m, {}};
  std::vector<ObsLC> letters = centred_letters(m, spec.observables);
  std::vector<int> copies(static_cast<size_t>(r), 1);
  Scalar sum;
  while (true) {
    sum += ev.lc_value(letters, copies);
    int pos = r - 1;
    while (pos >= 0 && copies[static_cast<size_t>(pos)] == n) {
      copies[static_cast<size_t>(pos)] = 1;
      --pos;
    }
    if (pos < 0) break;
    ++copies[static_cast<size_t>(pos)];
  }
  return normalize_tuple_sum(sum, n, r);
}

Scalar finite_n_moment_grouped(ModelSystem& m, const FluctuationSpec& spec) {
  int r = spec.order();
  long n = spec.N;
  if (r < 1 || n < 1) throw std::invalid_argument("finite_n_moment: need r >= 1, N >= 1");
  if (r > 10)
    throw std::length_error("finite_n_moment: grouped path capped at r <= 10");

  PhiInfEvaluator ev{m, {}};
  std::vector<ObsLC> letters = centred_letters(m, spec.observables);
  Scalar sum;
  for (int s = 1; s <= std::min<long>(r, n); ++s) {
    // every tuple with s distinct values is theta o nu for a unique increasing
    // injection theta (binomial(N,s) of them) and surjection nu
    Scalar pattern_sum;
    for (const auto& nu0 : enumerate_surjections(r, s)) {
      std::vector<int> copies(nu0.size());
      for (size_t i = 0; i < nu0.size(); ++i) copies[i] = nu0[i] + 1;
      pattern_sum += ev.lc_value(letters, copies);
    }
    sum += Scalar(Rational(binomial(n, s))) * pattern_sum;
  }
  return normalize_tuple_sum(sum, n, r);
}

Scalar finite_n_moment(ModelSystem& m, const FluctuationSpec& spec) {
  // brute force only while cheap; the grouped path is the scalable one
  if (std::pow(static_cast<double>(spec.N), spec.order()) <= 4096)
    return finite_n_moment_brute(m, spec);
  return finite_n_moment_grouped(m, spec);
}

Scalar asymptotic_moment_pair_sum(ModelSystem& m, const std::vector<ObsId>& xs,
                                  bool ordered, double eps) {
  if (xs.size() % 2 != 0 || xs.empty())
    throw std::invalid_argument("asymptotic_moment_pair_sum: need 2n observables");
  int n = static_cast<int>(xs.size()) / 2;
  for (ObsId x : xs)
    if (m.phi(x).abs() >= eps)
      throw std::invalid_argument("asymptotic_moment_pair_sum: observable '" +
                                  m.obs_name(x) + "' is not centred");

  PhiInfEvaluator ev{m, {}};
  Scalar sum;
  for (const auto& part : enumerate_pair_partitions(n, ordered)) {
    std::vector<Letter> letters(xs.size());
    for (size_t k = 0; k < part.pairs.size(); ++k) {
      auto [a, b] = part.pairs[k];
      letters[static_cast<size_t>(a) - 1] = {xs[static_cast<size_t>(a) - 1],
                                             static_cast<int>(k) + 1};
      letters[static_cast<size_t>(b) - 1] = {xs[static_cast<size_t>(b) - 1],
                                             static_cast<int>(k) + 1};
    }
    sum += ev.word_value(make_word(m, letters));
  }
  if (ordered) return sum;
  BigInt fact = 1;
  for (int k = 2; k <= n; ++k) fact *= k;
  return sum * Scalar(Rational(1, fact));
}

Scalar noncrossing_moment(const std::function<Scalar(int, int)>& two_point, int n) {
  if (n == 0) return Scalar::one();  // empty product
  Scalar sum;
  for (const auto& part : enumerate_pair_partitions(n, /*ordered=*/true)) {
    if (crossing_number(part) != 0) continue;
    Scalar term = Scalar::one();
    for (auto [a, b] : part.pairs) term *= two_point(a, b);
    sum += term;
  }
  return sum;
}

double gaussian_moment(int n, double sigma) {
  if (n < 0) throw std::invalid_argument("gaussian_moment: n >= 0 required");
  if (sigma < 0) throw std::invalid_argument("gaussian_moment: sigma >= 0 required");
  return double_factorial_odd(n).convert_to<double>() * std::pow(sigma, 2 * n);
}

double semicircle_moment(int n, double sigma) {
  if (n < 0) throw std::invalid_argument("semicircle_moment: n >= 0 required");
  if (sigma < 0) throw std::invalid_argument("semicircle_moment: sigma >= 0 required");
  return catalan(n).convert_to<double>() * std::pow(sigma, 2 * n);
}

std::vector<MomentReport> convergence_table(ModelSystem& m, ObsId x, int n_max,
                                            const std::vector<long>& n_ladder,
                                            const std::string& reference_law) {
  if (reference_law != "gaussian" && reference_law != "semicircle" &&
      reference_law != "none")
    throw std::invalid_argument("convergence_table: unknown reference law '" +
                                reference_law + "'");
  ObsLC cen = centred(m, x);
  Scalar var;  // phi(X~^2)
  {
    ObsLC sq = lc_product(m, cen, cen);
    for (const auto& [c, id] : sq.terms) var += c * m.phi(id);
  }
  double sigma = std::sqrt(std::max(0.0, var.to_complex().real()));

  std::vector<MomentReport> table;
  for (int r = 2; r <= 2 * n_max; ++r) {
    std::complex<double> limit = 0.0;
    if (r % 2 == 0)
      limit = asymptotic_moment_pair_sum(m, std::vector<ObsId>(static_cast<size_t>(r), x),
                                         /*ordered=*/true)
                  .to_complex();
    double ref = 0.0;
    if (r % 2 == 0 && reference_law == "gaussian") ref = gaussian_moment(r / 2, sigma);
    if (r % 2 == 0 && reference_law == "semicircle") ref = semicircle_moment(r / 2, sigma);

    for (long n : n_ladder) {
      MomentReport rep;
      rep.order = r;
      rep.N = n;
      Scalar v = finite_n_moment(m, {std::vector<ObsId>(static_cast<size_t>(r), x), n});
      rep.finite_value = v.to_complex();
      rep.finite_exact = v.is_exact();
      rep.asymptotic = limit;
      rep.reference_law = r % 2 == 0 ? reference_law : "none";
      rep.reference = ref;
      rep.residual_finite_vs_asymptotic = std::abs(rep.finite_value - limit);
      rep.residual_asymptotic_vs_reference =
          r % 2 == 0 && reference_law != "none" ? std::abs(limit - ref) : 0.0;
      table.push_back(rep);
    }
  }
  return table;
}

bool moment_sequence_positive(const std::vector<double>& moments, double tol) {
  // leading principal minors of the Hankel matrices H_k = [m_{i+j}]
  size_t k = (moments.size() + 1) / 2;
  for (size_t d = 1; d <= k; ++d) {
    // Gaussian elimination determinant of the d x d Hankel block
    std::vector<std::vector<double>> a(d, std::vector<double>(d));
    for (size_t i = 0; i < d; ++i)
      for (size_t j = 0; j < d; ++j) a[i][j] = moments[i + j];
    double det = 1.0;
    for (size_t c = 0; c < d; ++c) {
      size_t piv = c;
      for (size_t rr = c + 1; rr < d; ++rr)
        if (std::abs(a[rr][c]) > std::abs(a[piv][c])) piv = rr;
      if (std::abs(a[piv][c]) < 1e-300) {
        det = 0.0;
        break;
      }
      if (piv != c) {
        std::swap(a[piv], a[c]);
        det = -det;
      }
      det *= a[c][c];
      for (size_t rr = c + 1; rr < d; ++rr) {
        double f = a[rr][c] / a[c][c];
        for (size_t cc = c; cc < d; ++cc) a[rr][cc] -= f * a[c][cc];
      }
    }
    if (det < -tol) return false;
  }
  return true;
}

}  // namespace mtc
