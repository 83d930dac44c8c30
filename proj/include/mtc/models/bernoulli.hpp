#pragma once

#include "mtc/model.hpp"
#include "mtc/rational.hpp"

#include <map>
#include <vector>

namespace mtc {

// Commutative Bernoulli shift: cylinder functions with finite support over a
// product measure on symbol sequences, dynamics = index shift. All values and
// expectations are exact rationals.
class BernoulliModel : public ModelSystem {
 public:
  // table for supported sites s_0 < s_1 < ...: value at symbols (x_0, x_1, ...)
  // sits at index sum_k x_k * m^k.
  struct Cylinder {
    std::vector<long> sites;
    std::vector<Rational> table;
    auto operator<=>(const Cylinder&) const = default;
  };

  explicit BernoulliModel(std::vector<Rational> symbol_probs);

  std::string name() const override { return "bernoulli"; }
  bool is_exact() const override { return true; }
  ObsId identity() override { return 0; }
  bool is_identity(ObsId x) override { return x == 0; }
  std::pair<Scalar, ObsId> product(ObsId x, ObsId y) override;
  ObsId adjoint(ObsId x) override { return x; }  // real-valued functions
  ObsId evolve(ObsId x, long t) override;
  Scalar phi(ObsId x) override;
  std::string obs_name(ObsId x) override;
  std::optional<Scalar> phi_infinity_exact(const Word& w) override;

  std::optional<ObsId> centred_basis(ObsId x) override;

  ObsId cylinder(Cylinder c);
  const Cylinder& fn(ObsId x) const { return by_id_.at(x); }
  int alphabet() const { return static_cast<int>(probs_.size()); }

 private:
  // drops sites the table does not depend on; a site-free nonunit constant
  // is stored as such and factored out by product()
  static Cylinder canonical(Cylinder c, int m);
  ObsId intern(Cylinder c);

  std::vector<Rational> probs_;
  std::map<Cylinder, ObsId> by_key_;
  std::vector<Cylinder> by_id_;
};

}  // namespace mtc
