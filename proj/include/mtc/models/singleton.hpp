#pragma once

#include "mtc/model.hpp"
#include "mtc/rational.hpp"

#include <map>
#include <vector>

namespace mtc {

// Koopman-quantization caricature: observables are polynomials in a single
// abstract self-adjoint generator whose moments under phi are prescribed.
// Multi-time correlations carry only their asymptotic (singleton
// factorization) value: letters at distinct times split off as independent
// factors of phi, letters at equal adjacent times multiply as polynomials.
class SingletonFactorizationModel : public ModelSystem {
 public:
  explicit SingletonFactorizationModel(std::vector<Rational> moments);

  std::string name() const override { return "singleton"; }
  bool is_exact() const override { return true; }
  ObsId identity() override { return 0; }
  bool is_identity(ObsId x) override;
  std::pair<Scalar, ObsId> product(ObsId x, ObsId y) override;
  ObsId adjoint(ObsId x) override { return x; }  // real polynomial coefficients
  ObsId evolve(ObsId x, long) override { return x; }
  Scalar phi(ObsId x) override;
  Scalar correlate(std::span<const TimedObs> xs) override;
  std::string obs_name(ObsId x) override;
  std::optional<Scalar> phi_infinity_exact(const Word& w) override;

  std::optional<ObsId> centred_basis(ObsId x) override;

  // polynomial c0 + c1 X + c2 X^2 + ...
  ObsId poly(std::vector<Rational> coeffs);
  ObsId generator() { return poly({0, 1}); }

 private:
  ObsId intern(std::vector<Rational> coeffs);
  std::vector<Rational> moments_;  // m_0 = 1, m_1, m_2, ...
  std::map<std::vector<Rational>, ObsId> by_key_;
  std::vector<std::vector<Rational>> by_id_;
};

}  // namespace mtc
