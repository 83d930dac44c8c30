#include "mtc/models/free_shift.hpp"

#include "mtc/free_state.hpp"

#include <sstream>

namespace mtc {

FreeShiftModel::FreeShiftModel() {
  intern({});  // id 0 = identity monomial
  register_name("1", 0);
}

ObsId FreeShiftModel::intern(std::vector<long> reduced) {
  auto it = by_key_.find(reduced);
  if (it != by_key_.end()) return it->second;
  ObsId id = static_cast<ObsId>(by_id_.size());
  by_id_.push_back(reduced);
  by_key_.emplace(std::move(reduced), id);
  return id;
}

ObsId FreeShiftModel::monomial(const std::vector<long>& indices) {
  std::vector<long> red;
  for (long i : indices) {
    if (!red.empty() && red.back() == i)
      red.pop_back();  // e_i^2 = 1
    else
      red.push_back(i);
  }
  return intern(std::move(red));
}

std::pair<Scalar, ObsId> FreeShiftModel::product(ObsId x, ObsId y) {
  std::vector<long> cat = by_id_[x];
  cat.insert(cat.end(), by_id_[y].begin(), by_id_[y].end());
  return {Scalar::one(), monomial(cat)};
}

ObsId FreeShiftModel::adjoint(ObsId x) {
  std::vector<long> rev(by_id_[x].rbegin(), by_id_[x].rend());
  return intern(std::move(rev));
}

ObsId FreeShiftModel::evolve(ObsId x, long t) {
  std::vector<long> shifted = by_id_[x];
  for (long& i : shifted) i += t;
  return intern(std::move(shifted));
}

Scalar FreeShiftModel::phi(ObsId x) {
  return by_id_[x].empty() ? Scalar::one() : Scalar();
}

std::string FreeShiftModel::obs_name(ObsId x) {
  if (by_id_[x].empty()) return "1";
  std::ostringstream os;
  for (size_t k = 0; k < by_id_[x].size(); ++k) {
    if (k) os << "*";
    os << "e" << by_id_[x][k];
  }
  return os.str();
}

std::optional<Scalar> FreeShiftModel::phi_infinity_exact(const Word& w) {
  // phi_infinity is the free product of copies of phi
  return free_product_state(*this, w);
}

}  // namespace mtc
