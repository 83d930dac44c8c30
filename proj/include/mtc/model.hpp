#pragma once

#include "mtc/scalar.hpp"

#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace mtc {

using ObsId = std::uint32_t;
struct Word;

// A basis observable together with a time tag, the building block of
// multi-time correlation functions phi(X1(t1) X2(t2) ... Xn(tn)).
struct TimedObs {
  ObsId obs;
  long time = 0;
};

// Abstract dynamical system (A, Theta, phi). Concrete models register their
// basis observables in an internal registry; products of basis observables
// stay in the basis up to a scalar, which is all the word rewriting needs.
class ModelSystem {
 public:
  virtual ~ModelSystem() = default;

  virtual std::string name() const = 0;
  virtual bool is_exact() const = 0;

  virtual ObsId identity() = 0;
  virtual bool is_identity(ObsId x) = 0;
  // X * Y = scalar * Z with Z a basis observable.
  virtual std::pair<Scalar, ObsId> product(ObsId x, ObsId y) = 0;
  virtual ObsId adjoint(ObsId x) = 0;
  virtual ObsId evolve(ObsId x, long t) = 0;
  // phi on a single basis observable.
  virtual Scalar phi(ObsId x) = 0;

  // phi(X1 X2 ... Xn), all at time 0. Default folds via product().
  virtual Scalar expect(std::span<const ObsId> xs);
  // phi(X1(t1) ... Xn(tn)). Default evolves and delegates to expect().
  virtual Scalar correlate(std::span<const TimedObs> xs);

  // +1 for even observables, -1 for odd ones (graded models only).
  virtual int grade(ObsId) { return +1; }

  // X - phi(X) 1 as a single basis observable where the algebra can absorb
  // the constant. Centring through a linear combination is not equivalent:
  // a dropped identity letter glues the neighbouring letters together, which
  // matters for states that do not merge non-adjacent letters of one copy.
  virtual std::optional<ObsId> centred_basis(ObsId x) {
    return phi(x).is_zero() ? std::optional<ObsId>(x) : std::nullopt;
  }

  // Exact evaluator for the asymptotic state on a reduced word, where the
  // model admits one; nullopt falls back to nested numeric averaging.
  virtual std::optional<Scalar> phi_infinity_exact(const Word&) { return std::nullopt; }

  // Printable name of an observable, for reports and serialization.
  virtual std::string obs_name(ObsId x) = 0;

  // Named-observable registry (filled from configuration).
  void register_name(const std::string& name, ObsId id);
  ObsId lookup(const std::string& name) const;
  bool has_name(const std::string& name) const;
  std::vector<std::string> registered_names() const;

 private:
  std::vector<std::pair<std::string, ObsId>> named_;
};

using ModelPtr = std::shared_ptr<ModelSystem>;

// Finite linear combination of basis observables, used for centred
// observables, commutators and probe construction.
struct ObsLC {
  std::vector<std::pair<Scalar, ObsId>> terms;

  static ObsLC basis(ObsId x) { return ObsLC{{{Scalar::one(), x}}}; }
  static ObsLC zero() { return ObsLC{}; }
  ObsLC operator+(const ObsLC& o) const;
  ObsLC operator-(const ObsLC& o) const;
  ObsLC scaled(const Scalar& s) const;
};

// X - phi(X) * 1
ObsLC centred(ModelSystem& m, ObsId x);
// [X, Y] as a linear combination (products resolved through the model).
ObsLC commutator(ModelSystem& m, const ObsLC& x, const ObsLC& y);
ObsLC lc_product(ModelSystem& m, const ObsLC& x, const ObsLC& y);
ObsLC lc_adjoint(ModelSystem& m, const ObsLC& x);

// phi(A1(t1) ... An(tn)) for linear-combination letters, by multilinearity.
Scalar correlate_lc(ModelSystem& m, const std::vector<std::pair<ObsLC, long>>& letters);

}  // namespace mtc
