#pragma once

#include "mtc/rational.hpp"

#include <complex>
#include <map>
#include <string>

namespace mtc {

// Exact complex number of the form sum_k c_k * e^{2*pi*i*q_k} with rational
// coefficients c_k and rational phases q_k stored in [0,1) ("turns").
// Closed under +, * and conjugation; zero testing reduces the coefficient
// polynomial modulo the cyclotomic polynomial of the common phase denominator.
class ExactComplex {
 public:
  ExactComplex() = default;
  static ExactComplex from_rational(const Rational& r);
  static ExactComplex from_phase_turns(const Rational& turns);  // e^{2 pi i turns}
  static ExactComplex term(const Rational& coeff, const Rational& phase_turns);

  ExactComplex operator+(const ExactComplex& o) const;
  ExactComplex operator-(const ExactComplex& o) const;
  ExactComplex operator*(const ExactComplex& o) const;
  ExactComplex& operator+=(const ExactComplex& o) { return *this = *this + o; }
  ExactComplex& operator*=(const ExactComplex& o) { return *this = *this * o; }
  ExactComplex conj() const;
  ExactComplex scaled(const Rational& r) const;

  bool is_zero() const;
  bool operator==(const ExactComplex& o) const { return (*this - o).is_zero(); }

  // Exact rational value, or throws if the number is not rational.
  Rational as_rational() const;
  bool is_rational() const;

  std::complex<double> to_complex() const;
  std::string str() const;

  const std::map<Rational, Rational>& terms() const { return terms_; }

 private:
  void insert(const Rational& phase, const Rational& coeff);
  // phase (mod 1, in [0,1)) -> coefficient; zero coefficients pruned
  std::map<Rational, Rational> terms_;
};

// Scalar used throughout the word algebra: exact when the owning model is
// exact, plain complex<double> otherwise. Exactness is infectious downward:
// any operation with an inexact operand yields an inexact result.
class Scalar {
 public:
  Scalar() : exact_(true) {}  // exact zero
  Scalar(int v) : exact_(true), e_(ExactComplex::from_rational(v)) {}
  Scalar(const Rational& r) : exact_(true), e_(ExactComplex::from_rational(r)) {}
  Scalar(const ExactComplex& e) : exact_(true), e_(e) {}
  Scalar(std::complex<double> z) : exact_(false), f_(z) {}
  static Scalar one() { return Scalar(1); }
  static Scalar phase_turns(const Rational& t) { return Scalar(ExactComplex::from_phase_turns(t)); }

  bool is_exact() const { return exact_; }
  const ExactComplex& exact() const;
  std::complex<double> to_complex() const { return exact_ ? e_.to_complex() : f_; }
  double abs() const { return std::abs(to_complex()); }

  Scalar operator+(const Scalar& o) const;
  Scalar operator-(const Scalar& o) const;
  Scalar operator*(const Scalar& o) const;
  Scalar& operator+=(const Scalar& o) { return *this = *this + o; }
  Scalar& operator*=(const Scalar& o) { return *this = *this * o; }
  Scalar conj() const;

  // True zero for exact scalars, |z| == 0 for floating ones.
  bool is_zero() const;
  // Exact equality where both sides are exact, else distance < tol.
  bool approx_equal(const Scalar& o, double tol = 1e-12) const;

  std::string str() const;

 private:
  bool exact_;
  ExactComplex e_;
  std::complex<double> f_{0.0, 0.0};
};

}  // namespace mtc
