#pragma once

#include "mtc/model.hpp"
#include "mtc/rational.hpp"

#include <array>
#include <map>

namespace mtc {

// Weyl algebra of the noncommutative two-torus at rational deformation theta,
// W(p)W(q) = e^{i pi theta sigma(p,q)} W(p+q), evolved by a hyperbolic
// integer matrix T with det 1, with the tracial state phi(W(p)) = delta_{p,0}.
class CatMapModel : public ModelSystem {
 public:
  using Vec = std::array<long, 2>;
  using Mat = std::array<std::array<long, 2>, 2>;

  CatMapModel(const Rational& theta, const Mat& T);

  std::string name() const override { return "catmap"; }
  bool is_exact() const override { return true; }
  ObsId identity() override { return weyl({0, 0}); }
  bool is_identity(ObsId x) override { return label(x) == Vec{0, 0}; }
  std::pair<Scalar, ObsId> product(ObsId x, ObsId y) override;
  ObsId adjoint(ObsId x) override;
  ObsId evolve(ObsId x, long t) override;
  Scalar phi(ObsId x) override;
  std::string obs_name(ObsId x) override;

  ObsId weyl(const Vec& p);
  const Vec& label(ObsId x) const { return by_id_.at(x); }
  const Rational& theta() const { return theta_; }
  const Mat& matrix() const { return T_; }

  static long symplectic(const Vec& p, const Vec& q) {
    return p[0] * q[1] - p[1] * q[0];
  }
  Vec apply_matrix(const Vec& p, long t) const;

 private:
  Rational theta_;
  Mat T_, Tinv_;
  std::map<Vec, ObsId> by_key_;
  std::vector<Vec> by_id_;
};

}  // namespace mtc
