#include "mtc/scalar.hpp"

#include <cmath>
#include <map>
#include <numbers>
#include <sstream>
#include <stdexcept>
#include <vector>

namespace mtc {

namespace {

Rational mod1(const Rational& q) {
  BigInt num = numerator(q), den = denominator(q);
  BigInt f = num / den;
  if (num < 0 && f * den != num) f -= 1;  // floor
  return q - Rational(f);
}

// Cyclotomic polynomial Phi_n as integer coefficients (index = degree),
// computed by dividing x^n - 1 by the proper-divisor cyclotomics.
std::vector<BigInt> cyclotomic(long n) {
  static std::map<long, std::vector<BigInt>> cache;
  auto it = cache.find(n);
  if (it != cache.end()) return it->second;
  std::vector<BigInt> poly(static_cast<size_t>(n) + 1, 0);
  poly[0] = -1;
  poly[static_cast<size_t>(n)] = 1;  // x^n - 1
  for (long d = 1; d < n; ++d) {
    if (n % d != 0) continue;
    auto div = cyclotomic(d);
    // exact polynomial division, divisor is monic
    std::vector<BigInt> quot(poly.size() - div.size() + 1, 0);
    std::vector<BigInt> rem = poly;
    for (long k = static_cast<long>(quot.size()) - 1; k >= 0; --k) {
      BigInt c = rem[static_cast<size_t>(k) + div.size() - 1];
      quot[static_cast<size_t>(k)] = c;
      if (c == 0) continue;
      for (size_t j = 0; j < div.size(); ++j)
        rem[static_cast<size_t>(k) + j] -= c * div[j];
    }
    poly = quot;
  }
  cache[n] = poly;
  return poly;
}

}  // namespace

void ExactComplex::insert(const Rational& phase, const Rational& coeff) {
  if (coeff == 0) return;
  Rational p = mod1(phase);
  auto [it, inserted] = terms_.try_emplace(p, coeff);
  if (!inserted) {
    it->second += coeff;
    if (it->second == 0) terms_.erase(it);
  }
}

ExactComplex ExactComplex::from_rational(const Rational& r) {
  ExactComplex e;
  e.insert(0, r);
  return e;
}

ExactComplex ExactComplex::from_phase_turns(const Rational& turns) {
  ExactComplex e;
  e.insert(turns, 1);
  return e;
}

ExactComplex ExactComplex::term(const Rational& coeff, const Rational& phase_turns) {
  ExactComplex e;
  e.insert(phase_turns, coeff);
  return e;
}

ExactComplex ExactComplex::operator+(const ExactComplex& o) const {
  ExactComplex r = *this;
  for (const auto& [p, c] : o.terms_) r.insert(p, c);
  return r;
}

ExactComplex ExactComplex::operator-(const ExactComplex& o) const {
  ExactComplex r = *this;
  for (const auto& [p, c] : o.terms_) r.insert(p, -c);
  return r;
}

ExactComplex ExactComplex::operator*(const ExactComplex& o) const {
  ExactComplex r;
  for (const auto& [p1, c1] : terms_)
    for (const auto& [p2, c2] : o.terms_) r.insert(p1 + p2, c1 * c2);
  return r;
}

ExactComplex ExactComplex::conj() const {
  ExactComplex r;
  for (const auto& [p, c] : terms_) r.insert(-p, c);
  return r;
}

ExactComplex ExactComplex::scaled(const Rational& s) const {
  ExactComplex r;
  for (const auto& [p, c] : terms_) r.insert(p, c * s);
  return r;
}

bool ExactComplex::is_zero() const {
  if (terms_.empty()) return true;
  BigInt lcm = 1;
  for (const auto& [p, c] : terms_)
    lcm = boost::multiprecision::lcm(lcm, denominator(p));
  long L = lcm.convert_to<long>();
  std::vector<Rational> coeffs(static_cast<size_t>(L), 0);
  for (const auto& [p, c] : terms_) {
    BigInt idx = numerator(p) * (lcm / denominator(p));
    coeffs[idx.convert_to<size_t>()] += c;
  }
  // reduce the coefficient polynomial modulo Phi_L; zero iff remainder zero
  auto phi = cyclotomic(L);
  long deg = static_cast<long>(phi.size()) - 1;
  for (long k = L - 1; k >= deg; --k) {
    Rational c = coeffs[static_cast<size_t>(k)];
    if (c == 0) continue;
    for (long j = 0; j <= deg; ++j)
      coeffs[static_cast<size_t>(k - deg + j)] -= c * Rational(phi[static_cast<size_t>(j)]);
  }
  for (long k = 0; k < deg; ++k)
    if (coeffs[static_cast<size_t>(k)] != 0) return false;
  return true;
}

bool ExactComplex::is_rational() const {
  ExactComplex d = *this;
  auto it = d.terms_.find(Rational(0));
  if (it != d.terms_.end()) d.terms_.erase(it);
  return d.is_zero();
}

Rational ExactComplex::as_rational() const {
  Rational r0 = 0;
  ExactComplex rest = *this;
  auto it = rest.terms_.find(Rational(0));
  if (it != rest.terms_.end()) {
    r0 = it->second;
    rest.terms_.erase(it);
  }
  if (!rest.is_zero()) throw std::domain_error("ExactComplex::as_rational: not rational: " + str());
  return r0;
}

std::complex<double> ExactComplex::to_complex() const {
  std::complex<double> z{0.0, 0.0};
  for (const auto& [p, c] : terms_) {
    double ang = 2.0 * std::numbers::pi * to_double(p);
    z += to_double(c) * std::complex<double>(std::cos(ang), std::sin(ang));
  }
  return z;
}

std::string ExactComplex::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [p, c] : terms_) {
    if (!first) os << " + ";
    first = false;
    os << format_rational(c);
    if (p != 0) os << "*e(" << format_rational(p) << ")";
  }
  return os.str();
}

const ExactComplex& Scalar::exact() const {
  if (!exact_) throw std::logic_error("Scalar::exact on floating value");
  return e_;
}

Scalar Scalar::operator+(const Scalar& o) const {
  if (exact_ && o.exact_) return Scalar(e_ + o.e_);
  return Scalar(to_complex() + o.to_complex());
}

Scalar Scalar::operator-(const Scalar& o) const {
  if (exact_ && o.exact_) return Scalar(e_ - o.e_);
  return Scalar(to_complex() - o.to_complex());
}

Scalar Scalar::operator*(const Scalar& o) const {
  if (exact_ && o.exact_) return Scalar(e_ * o.e_);
  return Scalar(to_complex() * o.to_complex());
}

Scalar Scalar::conj() const {
  if (exact_) return Scalar(e_.conj());
  return Scalar(std::conj(f_));
}

bool Scalar::is_zero() const {
  if (exact_) return e_.is_zero();
  return f_ == std::complex<double>{0.0, 0.0};
}

bool Scalar::approx_equal(const Scalar& o, double tol) const {
  if (exact_ && o.exact_) return (e_ - o.e_).is_zero();
  return std::abs(to_complex() - o.to_complex()) < tol;
}

std::string Scalar::str() const {
  if (exact_) return e_.str();
  std::ostringstream os;
  os << "(" << f_.real() << "," << f_.imag() << ")";
  return os.str();
}

}  // namespace mtc
