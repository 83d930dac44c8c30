#pragma once

#include "mtc/model.hpp"

#include <map>
#include <vector>

namespace mtc {

// Universal algebra on self-adjoint involutive generators e_i (i in Z) with
// e_i^2 = 1, shift dynamics e_i -> e_{i+1} and the state vanishing on every
// nontrivial reduced monomial.
class FreeShiftModel : public ModelSystem {
 public:
  FreeShiftModel();

  std::string name() const override { return "freeshift"; }
  bool is_exact() const override { return true; }
  ObsId identity() override { return 0; }
  bool is_identity(ObsId x) override { return x == 0; }
  std::pair<Scalar, ObsId> product(ObsId x, ObsId y) override;
  ObsId adjoint(ObsId x) override;
  ObsId evolve(ObsId x, long t) override;
  Scalar phi(ObsId x) override;
  std::string obs_name(ObsId x) override;
  std::optional<Scalar> phi_infinity_exact(const Word& w) override;

  // Monomial e_{i1} e_{i2} ... e_{im}; equal adjacent indices cancel.
  ObsId monomial(const std::vector<long>& indices);
  ObsId generator(long i) { return monomial({i}); }
  const std::vector<long>& indices(ObsId x) const { return by_id_.at(x); }

 private:
  ObsId intern(std::vector<long> reduced);
  std::map<std::vector<long>, ObsId> by_key_;
  std::vector<std::vector<long>> by_id_;
};

}  // namespace mtc
