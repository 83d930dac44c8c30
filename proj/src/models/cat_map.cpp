#include "mtc/models/cat_map.hpp"

#include <sstream>
#include <stdexcept>

namespace mtc {

CatMapModel::CatMapModel(const Rational& theta, const Mat& T) : theta_(theta), T_(T) {
  long det = T[0][0] * T[1][1] - T[0][1] * T[1][0];
  if (det != 1) throw std::invalid_argument("CatMapModel: T must have determinant 1");
  Tinv_ = {{{T[1][1], -T[0][1]}, {-T[1][0], T[0][0]}}};
  register_name("1", identity());
}

ObsId CatMapModel::weyl(const Vec& p) {
  auto it = by_key_.find(p);
  if (it != by_key_.end()) return it->second;
  ObsId id = static_cast<ObsId>(by_id_.size());
  by_id_.push_back(p);
  by_key_.emplace(p, id);
  return id;
}

std::pair<Scalar, ObsId> CatMapModel::product(ObsId x, ObsId y) {
  const Vec& p = label(x);
  const Vec& q = label(y);
  // e^{i pi theta sigma} = e^{2 pi i (theta sigma / 2)}
  Scalar phase = Scalar::phase_turns(theta_ * symplectic(p, q) / 2);
  return {phase, weyl({p[0] + q[0], p[1] + q[1]})};
}

ObsId CatMapModel::adjoint(ObsId x) {
  const Vec& p = label(x);
  return weyl({-p[0], -p[1]});
}

CatMapModel::Vec CatMapModel::apply_matrix(const Vec& p, long t) const {
  const Mat& M = t >= 0 ? T_ : Tinv_;
  Vec v = p;
  for (long k = 0; k < (t >= 0 ? t : -t); ++k)
    v = {M[0][0] * v[0] + M[0][1] * v[1], M[1][0] * v[0] + M[1][1] * v[1]};
  return v;
}

ObsId CatMapModel::evolve(ObsId x, long t) { return weyl(apply_matrix(label(x), t)); }

Scalar CatMapModel::phi(ObsId x) {
  return label(x) == Vec{0, 0} ? Scalar::one() : Scalar();
}

std::string CatMapModel::obs_name(ObsId x) {
  const Vec& p = label(x);
  if (p == Vec{0, 0}) return "1";
  std::ostringstream os;
  os << "W(" << p[0] << "," << p[1] << ")";
  return os.str();
}

}  // namespace mtc
