#include "mtc/models/singleton.hpp"

#include "mtc/words.hpp"

#include <sstream>
#include <stdexcept>

namespace mtc {

SingletonFactorizationModel::SingletonFactorizationModel(std::vector<Rational> moments)
    : moments_(std::move(moments)) {
  if (moments_.empty() || moments_[0] != 1)
    throw std::invalid_argument("SingletonFactorizationModel: moments must start with m_0 = 1");
  intern({Rational(1)});  // id 0 = constant 1
  register_name("1", 0);
}

ObsId SingletonFactorizationModel::intern(std::vector<Rational> coeffs) {
  while (coeffs.size() > 1 && coeffs.back() == 0) coeffs.pop_back();
  auto it = by_key_.find(coeffs);
  if (it != by_key_.end()) return it->second;
  ObsId id = static_cast<ObsId>(by_id_.size());
  by_id_.push_back(coeffs);
  by_key_.emplace(std::move(coeffs), id);
  return id;
}

ObsId SingletonFactorizationModel::poly(std::vector<Rational> coeffs) {
  if (coeffs.empty()) coeffs = {Rational(0)};
  return intern(std::move(coeffs));
}

std::optional<ObsId> SingletonFactorizationModel::centred_basis(ObsId x) {
  std::vector<Rational> c = by_id_[x];
  c[0] -= phi(x).exact().as_rational();
  return intern(std::move(c));
}

bool SingletonFactorizationModel::is_identity(ObsId x) {
  const auto& c = by_id_[x];
  return c.size() == 1 && c[0] == 1;
}

std::pair<Scalar, ObsId> SingletonFactorizationModel::product(ObsId x, ObsId y) {
  const auto& a = by_id_[x];
  const auto& b = by_id_[y];
  std::vector<Rational> c(a.size() + b.size() - 1, 0);
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t j = 0; j < b.size(); ++j) c[i + j] += a[i] * b[j];
  return {Scalar::one(), intern(std::move(c))};
}

Scalar SingletonFactorizationModel::phi(ObsId x) {
  const auto& c = by_id_[x];
  if (c.size() > moments_.size())
    throw std::length_error(
        "SingletonFactorizationModel: moment of degree " + std::to_string(c.size() - 1) +
        " required but only " + std::to_string(moments_.size() - 1) + " provided");
  Rational acc = 0;
  for (size_t k = 0; k < c.size(); ++k) acc += c[k] * moments_[k];
  return Scalar(acc);
}

Scalar SingletonFactorizationModel::correlate(std::span<const TimedObs> xs) {
  // merge adjacent equal-time letters, then factorize into singleton means
  Scalar result = Scalar::one();
  size_t i = 0;
  while (i < xs.size()) {
    ObsId acc = xs[i].obs;
    size_t j = i + 1;
    while (j < xs.size() && xs[j].time == xs[i].time) {
      auto [c, z] = product(acc, xs[j].obs);
      result *= c;
      acc = z;
      ++j;
    }
    result *= phi(acc);
    i = j;
  }
  return result;
}

std::string SingletonFactorizationModel::obs_name(ObsId x) {
  const auto& c = by_id_[x];
  if (is_identity(x)) return "1";
  std::ostringstream os;
  os << "poly(";
  for (size_t k = 0; k < c.size(); ++k) {
    if (k) os << ",";
    os << format_rational(c[k]);
  }
  os << ")";
  return os.str();
}

std::optional<Scalar> SingletonFactorizationModel::phi_infinity_exact(const Word& w0) {
  // rule: removing any letter splits the word, so a reduced word evaluates to
  // the product of the means of its letters
  Word w = reduce(*this, w0);
  Scalar result = w.coeff;
  for (const auto& l : w.letters) result *= phi(l.obs);
  return result;
}

}  // namespace mtc
