#include "mtc/words.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <stdexcept>

namespace mtc {

bool LabelMap::normalized() const {
  for (size_t j = 0; j < nu.size(); ++j)
    for (int l = 1; l < nu[j]; ++l) {
      bool found = false;
      for (size_t i = 0; i < j; ++i)
        if (nu[i] == l) {
          found = true;
          break;
        }
      if (!found) return false;
    }
  return true;
}

int LabelMap::range_max() const {
  int m = 0;
  for (int v : nu) m = std::max(m, v);
  return m;
}

Word make_word(ModelSystem& m, std::vector<Letter> letters, Scalar coeff) {
  for (const auto& l : letters)
    if (l.copy < 1) throw std::invalid_argument("make_word: copy index must be >= 1");
  Word w;
  w.coeff = std::move(coeff);
  w.letters = std::move(letters);
  w.owner = &m;
  return w;
}

static void check_owner(ModelSystem& m, const Word& w, const char* op) {
  if (w.owner && w.owner != &m)
    throw std::invalid_argument(std::string(op) + ": word belongs to model '" +
                                w.owner->name() + "', not '" + m.name() + "'");
}

Word reduce(ModelSystem& m, Word w) {
  check_owner(m, w, "reduce");
  w.owner = &m;
  bool changed = true;
  while (changed) {
    changed = false;
    // rule 2.a
    std::vector<Letter> kept;
    kept.reserve(w.letters.size());
    for (const auto& l : w.letters) {
      if (m.is_identity(l.obs))
        changed = true;
      else
        kept.push_back(l);
    }
    w.letters = std::move(kept);
    // rule 2.c on the first same-index adjacency
    for (size_t i = 0; i + 1 < w.letters.size(); ++i) {
      if (w.letters[i].copy != w.letters[i + 1].copy) continue;
      auto [c, z] = m.product(w.letters[i].obs, w.letters[i + 1].obs);
      w.coeff *= c;
      w.letters[i].obs = z;
      w.letters.erase(w.letters.begin() + static_cast<long>(i) + 1);
      changed = true;
      break;
    }
  }
  return w;
}

Word word_adjoint(ModelSystem& m, const Word& w) {
  check_owner(m, w, "adjoint");
  Word r;
  r.owner = &m;
  r.coeff = w.coeff.conj();
  r.letters.reserve(w.letters.size());
  for (auto it = w.letters.rbegin(); it != w.letters.rend(); ++it)
    r.letters.push_back({m.adjoint(it->obs), it->copy});
  return r;
}

std::pair<Word, LabelMap> normalize_labels(ModelSystem& m, const Word& w) {
  check_owner(m, w, "normalize_labels");
  Word padded;
  padded.owner = &m;
  padded.coeff = w.coeff;
  LabelMap lm;
  std::set<int> appeared;
  for (const auto& l : w.letters) {
    for (int j = 1; j < l.copy; ++j) {
      if (appeared.count(j)) continue;
      padded.letters.push_back({m.identity(), j});
      lm.nu.push_back(j);
      appeared.insert(j);
    }
    padded.letters.push_back(l);
    lm.nu.push_back(l.copy);
    appeared.insert(l.copy);
  }
  return {padded, lm};
}

Word apply_permutation(ModelSystem& m, Word w, const std::map<int, int>& pi) {
  check_owner(m, w, "apply_permutation");
  std::set<int> keys, vals;
  for (const auto& [k, v] : pi) {
    keys.insert(k);
    vals.insert(v);
  }
  if (keys != vals || keys.size() != pi.size())
    throw std::invalid_argument("apply_permutation: map is not a bijection of its moved points");
  for (auto& l : w.letters) {
    auto it = pi.find(l.copy);
    if (it != pi.end()) l.copy = it->second;
  }
  return reduce(m, std::move(w));
}

Word apply_multitime_shift(ModelSystem& m, Word w, const MultiTimeShift& s) {
  check_owner(m, w, "apply_multitime_shift");
  for (auto& l : w.letters) l.obs = m.evolve(l.obs, s.at(l.copy));
  w.owner = &m;
  return w;
}

Word word_concat(ModelSystem& m, const Word& u, const Word& v) {
  check_owner(m, u, "word_concat");
  check_owner(m, v, "word_concat");
  Word w;
  w.owner = &m;
  w.coeff = u.coeff * v.coeff;
  w.letters = u.letters;
  w.letters.insert(w.letters.end(), v.letters.begin(), v.letters.end());
  return reduce(m, std::move(w));
}

static bool letters_less(const std::vector<Letter>& a, const std::vector<Letter>& b) {
  if (a.size() != b.size()) return a.size() < b.size();
  for (size_t i = 0; i < a.size(); ++i) {
    if (a[i].copy != b[i].copy) return a[i].copy < b[i].copy;
    if (a[i].obs != b[i].obs) return a[i].obs < b[i].obs;
  }
  return false;
}

FreeElement FreeElement::from_word(Word w) {
  FreeElement fe;
  fe.terms.push_back(std::move(w));
  fe.canonicalize();
  return fe;
}

void FreeElement::canonicalize() {
  std::sort(terms.begin(), terms.end(),
            [](const Word& a, const Word& b) { return letters_less(a.letters, b.letters); });
  std::vector<Word> merged;
  for (auto& w : terms) {
    if (!merged.empty() && merged.back().letters == w.letters)
      merged.back().coeff += w.coeff;
    else
      merged.push_back(std::move(w));
  }
  terms.clear();
  for (auto& w : merged)
    if (!w.coeff.is_zero()) terms.push_back(std::move(w));
}

FreeElement FreeElement::operator+(const FreeElement& o) const {
  FreeElement r = *this;
  r.terms.insert(r.terms.end(), o.terms.begin(), o.terms.end());
  r.canonicalize();
  return r;
}

FreeElement FreeElement::scaled(const Scalar& s) const {
  FreeElement r = *this;
  for (auto& w : r.terms) w.coeff *= s;
  r.canonicalize();
  return r;
}

FreeElement fe_product(ModelSystem& m, const FreeElement& a, const FreeElement& b) {
  FreeElement r;
  for (const auto& u : a.terms)
    for (const auto& v : b.terms) r.terms.push_back(word_concat(m, u, v));
  r.canonicalize();
  return r;
}

FreeElement fe_adjoint(ModelSystem& m, const FreeElement& a) {
  FreeElement r;
  for (const auto& w : a.terms) r.terms.push_back(word_adjoint(m, w));
  r.canonicalize();
  return r;
}

FreeElement expand_lc_word(ModelSystem& m, const std::vector<std::pair<ObsLC, int>>& letters) {
  FreeElement out;
  std::vector<Letter> cur(letters.size());
  auto rec = [&](auto&& self, size_t pos, Scalar coeff) -> void {
    if (coeff.is_zero()) return;
    if (pos == letters.size()) {
      out.terms.push_back(reduce(m, make_word(m, cur, coeff)));
      return;
    }
    for (const auto& [c, x] : letters[pos].first.terms) {
      cur[pos] = {x, letters[pos].second};
      self(self, pos + 1, coeff * c);
    }
  };
  rec(rec, 0, Scalar::one());
  out.canonicalize();
  return out;
}

std::string word_to_string(ModelSystem& m, const Word& w) {
  std::ostringstream os;
  os << "[";
  if (w.coeff.is_exact() && w.coeff.exact().is_rational())
    os << format_rational(w.coeff.exact().as_rational());
  else {
    auto z = w.coeff.to_complex();
    os << "(" << z.real() << "," << z.imag() << ")";
  }
  os << "]";
  if (w.letters.empty()) {
    os << " 1";
  } else {
    for (const auto& l : w.letters) os << " " << m.obs_name(l.obs) << "@" << l.copy;
  }
  return os.str();
}

Word parse_word(ModelSystem& m, const std::string& text) {
  std::istringstream is(text);
  std::string tok;
  Word w;
  w.owner = &m;
  bool first = true;
  while (is >> tok) {
    if (first && tok.front() == '[' && tok.back() == ']') {
      std::string body = tok.substr(1, tok.size() - 2);
      if (!body.empty() && body.front() == '(') {
        auto comma = body.find(',');
        double re = std::stod(body.substr(1, comma - 1));
        double im = std::stod(body.substr(comma + 1, body.size() - comma - 2));
        w.coeff = Scalar(std::complex<double>(re, im));
      } else {
        w.coeff = Scalar(parse_rational(body));
      }
      first = false;
      continue;
    }
    first = false;
    if (tok == "1") continue;  // explicit identity word
    auto at = tok.rfind('@');
    if (at == std::string::npos)
      throw std::invalid_argument("parse_word: letter '" + tok + "' lacks @copy suffix");
    ObsId obs = m.lookup(tok.substr(0, at));
    int copy = std::stoi(tok.substr(at + 1));
    w.letters.push_back({obs, copy});
  }
  return w;
}

}  // namespace mtc
