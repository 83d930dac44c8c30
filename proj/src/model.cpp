#include "mtc/model.hpp"

#include <algorithm>
#include <stdexcept>

namespace mtc {

Scalar ModelSystem::expect(std::span<const ObsId> xs) {
  if (xs.empty()) return Scalar::one();
  Scalar s = Scalar::one();
  ObsId acc = xs[0];
  for (size_t i = 1; i < xs.size(); ++i) {
    auto [c, z] = product(acc, xs[i]);
    s *= c;
    acc = z;
  }
  return s * phi(acc);
}

Scalar ModelSystem::correlate(std::span<const TimedObs> xs) {
  std::vector<ObsId> evolved;
  evolved.reserve(xs.size());
  for (const auto& [x, t] : xs) evolved.push_back(evolve(x, t));
  return expect(evolved);
}

void ModelSystem::register_name(const std::string& name, ObsId id) {
  named_.emplace_back(name, id);
}

ObsId ModelSystem::lookup(const std::string& name) const {
  for (const auto& [n, id] : named_)
    if (n == name) return id;
  throw std::out_of_range("model '" + this->name() + "' has no observable named '" + name + "'");
}

bool ModelSystem::has_name(const std::string& name) const {
  return std::any_of(named_.begin(), named_.end(),
                     [&](const auto& p) { return p.first == name; });
}

std::vector<std::string> ModelSystem::registered_names() const {
  std::vector<std::string> out;
  for (const auto& [n, id] : named_) out.push_back(n);
  return out;
}

ObsLC ObsLC::operator+(const ObsLC& o) const {
  ObsLC r = *this;
  for (const auto& t : o.terms) r.terms.push_back(t);
  return r;
}

ObsLC ObsLC::operator-(const ObsLC& o) const {
  ObsLC r = *this;
  for (const auto& [c, x] : o.terms) r.terms.push_back({Scalar(-1) * c, x});
  return r;
}

ObsLC ObsLC::scaled(const Scalar& s) const {
  ObsLC r;
  for (const auto& [c, x] : terms) r.terms.push_back({s * c, x});
  return r;
}

ObsLC centred(ModelSystem& m, ObsId x) {
  ObsLC r = ObsLC::basis(x);
  r.terms.push_back({Scalar(-1) * m.phi(x), m.identity()});
  return r;
}

ObsLC lc_product(ModelSystem& m, const ObsLC& x, const ObsLC& y) {
  ObsLC r;
  for (const auto& [cx, ox] : x.terms)
    for (const auto& [cy, oy] : y.terms) {
      auto [c, z] = m.product(ox, oy);
      r.terms.push_back({cx * cy * c, z});
    }
  return r;
}

ObsLC lc_adjoint(ModelSystem& m, const ObsLC& x) {
  ObsLC r;
  for (const auto& [c, o] : x.terms) r.terms.push_back({c.conj(), m.adjoint(o)});
  return r;
}

ObsLC commutator(ModelSystem& m, const ObsLC& x, const ObsLC& y) {
  return lc_product(m, x, y) - lc_product(m, y, x);
}

Scalar correlate_lc(ModelSystem& m, const std::vector<std::pair<ObsLC, long>>& letters) {
  // multilinear expansion over basis terms
  std::vector<TimedObs> basis(letters.size());
  Scalar total;
  auto rec = [&](auto&& self, size_t pos, Scalar coeff) -> void {
    if (coeff.is_zero()) return;
    if (pos == letters.size()) {
      total += coeff * m.correlate(basis);
      return;
    }
    for (const auto& [c, x] : letters[pos].first.terms) {
      basis[pos] = {x, letters[pos].second};
      self(self, pos + 1, coeff * c);
    }
  };
  rec(rec, 0, Scalar::one());
  return total;
}

}  // namespace mtc
