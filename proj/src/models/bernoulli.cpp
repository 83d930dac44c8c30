#include "mtc/models/bernoulli.hpp"

#include "mtc/free_state.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace mtc {

namespace {

size_t pow_sz(int m, size_t k) {
  size_t r = 1;
  while (k--) r *= static_cast<size_t>(m);
  return r;
}

}  // namespace

BernoulliModel::BernoulliModel(std::vector<Rational> symbol_probs) : probs_(std::move(symbol_probs)) {
  if (probs_.size() < 2) throw std::invalid_argument("BernoulliModel: need at least 2 symbols");
  Rational total = 0;
  for (const auto& p : probs_) {
    if (p < 0) throw std::invalid_argument("BernoulliModel: negative symbol probability");
    total += p;
  }
  if (total != 1) throw std::invalid_argument("BernoulliModel: probabilities must sum to 1");
  intern(Cylinder{{}, {Rational(1)}});  // id 0 = constant 1
  register_name("1", 0);
}

BernoulliModel::Cylinder BernoulliModel::canonical(Cylinder c, int m) {
  for (size_t s = 0; s < c.sites.size();) {
    size_t stride = pow_sz(m, s);
    size_t block = stride * static_cast<size_t>(m);
    bool depends = false;
    for (size_t base = 0; base < c.table.size() && !depends; base += block)
      for (size_t lo = 0; lo < stride && !depends; ++lo)
        for (int sym = 1; sym < m; ++sym)
          if (c.table[base + lo + stride * static_cast<size_t>(sym)] != c.table[base + lo]) {
            depends = true;
            break;
          }
    if (!depends) {
      std::vector<Rational> proj;
      proj.reserve(c.table.size() / static_cast<size_t>(m));
      for (size_t base = 0; base < c.table.size(); base += block)
        for (size_t lo = 0; lo < stride; ++lo) proj.push_back(c.table[base + lo]);
      c.table = std::move(proj);
      c.sites.erase(c.sites.begin() + static_cast<long>(s));
    } else {
      ++s;
    }
  }
  return c;
}

ObsId BernoulliModel::intern(Cylinder c) {
  auto it = by_key_.find(c);
  if (it != by_key_.end()) return it->second;
  ObsId id = static_cast<ObsId>(by_id_.size());
  by_id_.push_back(c);
  by_key_.emplace(std::move(c), id);
  return id;
}

ObsId BernoulliModel::cylinder(Cylinder c) {
  if (!std::is_sorted(c.sites.begin(), c.sites.end()) ||
      std::adjacent_find(c.sites.begin(), c.sites.end()) != c.sites.end())
    throw std::invalid_argument("BernoulliModel::cylinder: sites must be strictly increasing");
  if (c.table.size() != pow_sz(alphabet(), c.sites.size()))
    throw std::invalid_argument("BernoulliModel::cylinder: table size mismatch");
  return intern(canonical(std::move(c), alphabet()));
}

std::pair<Scalar, ObsId> BernoulliModel::product(ObsId x, ObsId y) {
  const Cylinder& a = by_id_[x];
  const Cylinder& b = by_id_[y];
  Cylinder r;
  std::set_union(a.sites.begin(), a.sites.end(), b.sites.begin(), b.sites.end(),
                 std::back_inserter(r.sites));
  int m = alphabet();
  r.table.assign(pow_sz(m, r.sites.size()), 0);
  // symbol assignment over union sites, read off each factor's table index
  std::vector<int> sym(r.sites.size(), 0);
  for (size_t idx = 0; idx < r.table.size(); ++idx) {
    size_t t = idx;
    for (size_t k = 0; k < sym.size(); ++k) {
      sym[k] = static_cast<int>(t % static_cast<size_t>(m));
      t /= static_cast<size_t>(m);
    }
    auto sub_index = [&](const std::vector<long>& sites) {
      size_t si = 0, mul = 1;
      for (long s : sites) {
        size_t pos = static_cast<size_t>(
            std::lower_bound(r.sites.begin(), r.sites.end(), s) - r.sites.begin());
        si += static_cast<size_t>(sym[pos]) * mul;
        mul *= static_cast<size_t>(m);
      }
      return si;
    };
    r.table[idx] = a.table[sub_index(a.sites)] * b.table[sub_index(b.sites)];
  }
  return {Scalar::one(), intern(canonical(std::move(r), m))};
}

ObsId BernoulliModel::evolve(ObsId x, long t) {
  Cylinder c = by_id_[x];
  for (long& s : c.sites) s += t;
  return intern(std::move(c));
}

std::optional<ObsId> BernoulliModel::centred_basis(ObsId x) {
  Cylinder c = by_id_[x];
  Rational mean = phi(x).exact().as_rational();
  for (Rational& v : c.table) v -= mean;
  return intern(std::move(c));
}

Scalar BernoulliModel::phi(ObsId x) {
  const Cylinder& c = by_id_[x];
  Rational acc = 0;
  std::vector<int> sym(c.sites.size(), 0);
  int m = alphabet();
  for (size_t idx = 0; idx < c.table.size(); ++idx) {
    size_t t = idx;
    Rational w = 1;
    for (size_t k = 0; k < sym.size(); ++k) {
      w *= probs_[t % static_cast<size_t>(m)];
      t /= static_cast<size_t>(m);
    }
    acc += w * c.table[idx];
  }
  return Scalar(acc);
}

std::string BernoulliModel::obs_name(ObsId x) {
  const Cylinder& c = by_id_[x];
  if (c.sites.empty()) return c.table[0] == 1 ? "1" : "const(" + format_rational(c.table[0]) + ")";
  std::ostringstream os;
  os << "cyl{";
  for (size_t i = 0; i < c.sites.size(); ++i) {
    if (i) os << ",";
    os << c.sites[i];
  }
  os << "}";
  return os.str();
}

std::optional<Scalar> BernoulliModel::phi_infinity_exact(const Word& w) {
  // strong clustering: the asymptotic state factorizes over copy labels
  return block_factorized_state(*this, w, /*signed_parity=*/false);
}

}  // namespace mtc
