#pragma once

#include "mtc/model.hpp"
#include "mtc/rational.hpp"

#include <complex>
#include <map>
#include <tuple>
#include <vector>

namespace mtc {

// CAR algebra over one-particle vectors finitely supported on Z, with the
// quasi-free gauge-invariant state of constant covariance symbol rho and
// index-shift dynamics. Monomials in the fields are evaluated by Wick
// expansion: signed sum over ordered pair partitions of two-point functions.
class CarModel : public ModelSystem {
 public:
  struct Field {
    bool creation;
    std::vector<std::pair<long, std::complex<double>>> vec;  // sorted by index

    // std::complex is not ordered; compare componentwise for registry keys
    friend bool operator<(const Field& a, const Field& b) {
      auto key = [](const Field& f) {
        std::vector<std::tuple<long, double, double>> k;
        for (const auto& [i, c] : f.vec) k.push_back({i, c.real(), c.imag()});
        return std::tuple(f.creation, k);
      };
      return key(a) < key(b);
    }
    friend bool operator==(const Field& a, const Field& b) {
      return a.creation == b.creation && a.vec == b.vec;
    }
  };
  using Monomial = std::vector<Field>;

  explicit CarModel(const Rational& rho);

  std::string name() const override { return "car"; }
  bool is_exact() const override { return false; }
  ObsId identity() override { return 0; }
  bool is_identity(ObsId x) override { return x == 0; }
  std::pair<Scalar, ObsId> product(ObsId x, ObsId y) override;
  ObsId adjoint(ObsId x) override;
  ObsId evolve(ObsId x, long t) override;
  Scalar phi(ObsId x) override;
  int grade(ObsId x) override;
  std::string obs_name(ObsId x) override;
  std::optional<Scalar> phi_infinity_exact(const Word& w) override;

  ObsId field(bool creation, std::vector<std::pair<long, std::complex<double>>> vec);
  ObsId annihilator(long site) { return field(false, {{site, 1.0}}); }
  ObsId creator(long site) { return field(true, {{site, 1.0}}); }
  const Monomial& monomial(ObsId x) const { return by_id_.at(x); }
  double rho() const { return rho_; }

  // phi(F G) for two single fields (the covariance of the quasi-free state)
  std::complex<double> two_point(const Field& a, const Field& b) const;

 private:
  ObsId intern(Monomial m);
  double rho_;
  std::map<Monomial, ObsId> by_key_;
  std::vector<Monomial> by_id_;
};

}  // namespace mtc
