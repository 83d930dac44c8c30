#pragma once

#include "mtc/model.hpp"

#include <map>
#include <string>
#include <vector>

namespace mtc {

// One letter of a word in the asymptotic free algebra: a basis observable of
// the owning model placed in copy number `copy` (the subscript j in X_j).
struct Letter {
  ObsId obs;
  int copy;  // >= 1
  auto operator<=>(const Letter&) const = default;
};

struct Word {
  Scalar coeff = Scalar::one();
  std::vector<Letter> letters;
  const ModelSystem* owner = nullptr;

  bool operator==(const Word& o) const {
    return letters == o.letters && coeff.approx_equal(o.coeff);
  }
};

// Map nu from letter positions to copy indices. Normalized form satisfies:
// every value l < nu(j) occurs at some earlier position.
struct LabelMap {
  std::vector<int> nu;
  bool normalized() const;
  int range_max() const;
};

// Per-copy time shift with finite support.
struct MultiTimeShift {
  std::map<int, long> s;
  long at(int copy) const {
    auto it = s.find(copy);
    return it == s.end() ? 0 : it->second;
  }
};

Word make_word(ModelSystem& m, std::vector<Letter> letters, Scalar coeff = Scalar::one());

// Rules 2.a-c applied to exhaustion: identities dropped, consecutive letters
// with the same copy index merged through the model's operator product.
Word reduce(ModelSystem& m, Word w);

Word word_adjoint(ModelSystem& m, const Word& w);

// Identity-padded rewriting making the label map satisfy the occurrence
// constraint; reduce() of the padded word recovers the input.
std::pair<Word, LabelMap> normalize_labels(ModelSystem& m, const Word& w);

// pi given on its moved points only; must be a bijection of those points.
Word apply_permutation(ModelSystem& m, Word w, const std::map<int, int>& pi);

Word apply_multitime_shift(ModelSystem& m, Word w, const MultiTimeShift& s);

Word word_concat(ModelSystem& m, const Word& u, const Word& v);

// Finite formal linear combination of words, like terms merged, zeros pruned.
struct FreeElement {
  std::vector<Word> terms;

  static FreeElement from_word(Word w);
  FreeElement operator+(const FreeElement& o) const;
  FreeElement scaled(const Scalar& s) const;
  void canonicalize();
};

FreeElement fe_product(ModelSystem& m, const FreeElement& a, const FreeElement& b);
FreeElement fe_adjoint(ModelSystem& m, const FreeElement& a);

// Word built from linear-combination letters, expanded multilinearly into
// basis words and reduced.
FreeElement expand_lc_word(ModelSystem& m, const std::vector<std::pair<ObsLC, int>>& letters);

// Canonical text form "[scalar] X@j Y@k ...". Scalars print as rationals when
// possible, otherwise as "(re,im)". The empty word prints as "[scalar] 1".
std::string word_to_string(ModelSystem& m, const Word& w);
Word parse_word(ModelSystem& m, const std::string& text);

}  // namespace mtc
