// Hopf structure on the quasi-shuffle algebra: deconcatenation coproduct,
// counit, and the closed-formula antipode
//   S(a) = (-1)^{ℓ(a)} Σ_{L ⊨ ℓ(a)} L ∘ aʳ,
// together with checkers for the bialgebra and antipode axioms.
#ifndef MQSYM_HOPF_HPP
#define MQSYM_HOPF_HPP

#include <utility>

#include "mqsym/compositions.hpp"
#include "mqsym/lincomb.hpp"
#include "mqsym/quasi_shuffle.hpp"
#include "mqsym/tensor_word.hpp"

namespace mqsym {

using WordPair = std::pair<TensorWord, TensorWord>;
using TensorPair = LinComb<WordPair>;

// All prefix/suffix splits of a; n+1 terms with coefficient 1.
TensorPair coproduct(const TensorWord& a);
TensorPair coproduct(const LinComb<TensorWord>& a);

Rational counit(const TensorWord& a);
Rational counit(const LinComb<TensorWord>& a);

TensorWord reversal(const TensorWord& a);

// Blocks a by the parts of L and multiplies each block with `dot`;
// pre: parts of L sum to ℓ(a).
TensorWord l_compose(const Composition& L, const TensorWord& a,
                     LetterDot dot = &ev_product);

LinComb<TensorWord> antipode(const TensorWord& a, LetterDot dot = &ev_product);
LinComb<TensorWord> antipode(const LinComb<TensorWord>& a,
                             LetterDot dot = &ev_product);

// Componentwise ∗ on the tensor square.
TensorPair pair_product(const TensorPair& x, const TensorPair& y,
                        LetterDot dot = &ev_product);

// Δ(a) ∗ Δ(b) == Δ(a ∗ b).
bool check_bialgebra(const TensorWord& a, const TensorWord& b,
                     LetterDot dot = &ev_product);

// Both convolution identities Σ S(a₍₁₎) ∗ a₍₂₎ = ε(a)·1 = Σ a₍₁₎ ∗ S(a₍₂₎).
bool check_antipode(const TensorWord& a, LetterDot dot = &ev_product);

}  // namespace mqsym

#endif
