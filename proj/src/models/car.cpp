#include "mtc/models/car.hpp"

#include "mtc/free_state.hpp"
#include "mtc/partitions.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

namespace mtc {

CarModel::CarModel(const Rational& rho) : rho_(to_double(rho)) {
  if (rho < 0 || rho > 1) throw std::invalid_argument("CarModel: covariance rho must be in [0,1]");
  intern({});  // id 0 = identity
  register_name("1", 0);
}

ObsId CarModel::intern(Monomial m) {
  auto it = by_key_.find(m);
  if (it != by_key_.end()) return it->second;
  ObsId id = static_cast<ObsId>(by_id_.size());
  by_id_.push_back(m);
  by_key_.emplace(std::move(m), id);
  return id;
}

ObsId CarModel::field(bool creation, std::vector<std::pair<long, std::complex<double>>> vec) {
  std::sort(vec.begin(), vec.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  double norm2 = 0;
  for (const auto& [i, c] : vec) norm2 += std::norm(c);
  if (!(norm2 > 0) || !std::isfinite(norm2))
    throw std::invalid_argument("CarModel::field: vector must be nonzero and finite");
  return intern({Field{creation, std::move(vec)}});
}

std::pair<Scalar, ObsId> CarModel::product(ObsId x, ObsId y) {
  Monomial cat = by_id_[x];
  const Monomial& b = by_id_[y];
  cat.insert(cat.end(), b.begin(), b.end());
  return {Scalar::one(), intern(std::move(cat))};
}

ObsId CarModel::adjoint(ObsId x) {
  Monomial adj;
  const Monomial& m = by_id_[x];
  for (auto it = m.rbegin(); it != m.rend(); ++it) {
    Field f = *it;
    f.creation = !f.creation;
    for (auto& [i, c] : f.vec) c = std::conj(c);
    adj.push_back(std::move(f));
  }
  return intern(std::move(adj));
}

ObsId CarModel::evolve(ObsId x, long t) {
  Monomial m = by_id_[x];
  for (auto& f : m)
    for (auto& [i, c] : f.vec) i += t;
  return intern(std::move(m));
}

std::complex<double> CarModel::two_point(const Field& a, const Field& b) const {
  if (a.creation == b.creation) return 0.0;
  // <f,g> with the shared support, antilinear in the first argument
  auto overlap = [](const Field& f, const Field& g) {
    std::complex<double> s = 0.0;
    size_t i = 0, j = 0;
    while (i < f.vec.size() && j < g.vec.size()) {
      if (f.vec[i].first < g.vec[j].first)
        ++i;
      else if (f.vec[i].first > g.vec[j].first)
        ++j;
      else
        s += std::conj(f.vec[i++].second) * g.vec[j++].second;
    }
    return s;
  };
  if (!a.creation)  // phi(a(f) a*(g)) = <f, (1-rho) g>
    return (1.0 - rho_) * overlap(a, b);
  // phi(a*(f) a(g)) = <g, rho f>
  return rho_ * overlap(b, a);
}

Scalar CarModel::phi(ObsId x) {
  const Monomial& m = by_id_[x];
  if (m.empty()) return Scalar(std::complex<double>(1.0, 0.0));
  if (m.size() % 2 != 0) return Scalar(std::complex<double>(0.0, 0.0));
  int n = static_cast<int>(m.size()) / 2;
  std::complex<double> total = 0.0;
  for (const auto& part : enumerate_pair_partitions(n, /*ordered=*/true)) {
    std::complex<double> term = crossing_number(part) % 2 ? -1.0 : 1.0;
    for (const auto& [a, b] : part.pairs)
      term *= two_point(m[static_cast<size_t>(a - 1)], m[static_cast<size_t>(b - 1)]);
    total += term;
  }
  return Scalar(total);
}

std::string CarModel::obs_name(ObsId x) {
  const Monomial& m = by_id_[x];
  if (m.empty()) return "1";
  std::ostringstream os;
  for (size_t k = 0; k < m.size(); ++k) {
    if (k) os << "*";
    os << (m[k].creation ? "a*(" : "a(");
    for (size_t i = 0; i < m[k].vec.size(); ++i) {
      if (i) os << "+";
      os << m[k].vec[i].second << "|" << m[k].vec[i].first << ">";
    }
    os << ")";
  }
  return os.str();
}

int CarModel::grade(ObsId x) { return by_id_[x].size() % 2 ? -1 : +1; }

std::optional<Scalar> CarModel::phi_infinity_exact(const Word& w) {
  // Chevalley product of copies of phi: factorization over copy labels with
  // the parity sign of the letter rearrangement
  return block_factorized_state(*this, w, /*signed_parity=*/true);
}

}  // namespace mtc
