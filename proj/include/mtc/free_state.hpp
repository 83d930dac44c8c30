#pragma once

#include "mtc/words.hpp"

namespace mtc {

// State on the free product of copies of the model's algebra, each copy
// carrying the model's reference state. Evaluated by recursive centring:
// alternating products of centred letters vanish by free independence.
Scalar free_product_state(ModelSystem& m, const Word& w);

// Factorized state of strongly clustering systems: the product over copy
// labels of phi applied to the ordered product of the letters in each copy.
// With signed_parity, a (-1)^sign of the letter rearrangement multiplies the
// result (Chevalley product; every letter is treated as odd).
Scalar block_factorized_state(ModelSystem& m, const Word& w, bool signed_parity);

}  // namespace mtc
