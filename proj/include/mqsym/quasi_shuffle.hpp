// The quasi-shuffle product on tensor words:
//   (a ⊗ a') ∗ (b ⊗ b') = a ⊗ (a' ∗ (b ⊗ b'))
//                        + b ⊗ ((a ⊗ a') ∗ b')
//                        + (a·b) ⊗ (a' ∗ b'),
// with the empty word as two-sided unit. The letter product `dot` is a
// strategy so the one engine serves both coefficient algebras in use
// (exponent-vector monomials and k[Y] monomials).
#ifndef MQSYM_QUASI_SHUFFLE_HPP
#define MQSYM_QUASI_SHUFFLE_HPP

#include "mqsym/lincomb.hpp"
#include "mqsym/tensor_word.hpp"

namespace mqsym {

using LetterDot = ExponentVector (*)(const ExponentVector&,
                                     const ExponentVector&);

LinComb<TensorWord> qshuffle(const TensorWord& a, const TensorWord& b,
                             LetterDot dot = &ev_product);

// Bilinear extension to linear combinations of words.
LinComb<TensorWord> word_product(const LinComb<TensorWord>& a,
                                 const LinComb<TensorWord>& b,
                                 LetterDot dot = &ev_product);

}  // namespace mqsym

#endif
