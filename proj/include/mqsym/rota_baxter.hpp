// The free commutative Rota-Baxter algebra of weight 1 on Y = {y_1,...,y_m},
// realized as k[Y] ⊗ (quasi-shuffle algebra on k[Y]); the scalar extension of
// the weak multi-quasisymmetric side; and the θ isomorphism between them.
#ifndef MQSYM_ROTA_BAXTER_HPP
#define MQSYM_ROTA_BAXTER_HPP

#include <compare>
#include <string>
#include <utility>

#include "mqsym/hopf.hpp"
#include "mqsym/lincomb.hpp"
#include "mqsym/quasi_shuffle.hpp"

namespace mqsym {

// Basis key (w0; w1,...,wn): a k[Y] monomial head (zero vector = 1) and a
// tail of k[Y] monomials, zero letters allowed.
struct RBWord {
    ExponentVector head;
    TensorWord tail;

    RBWord(ExponentVector head_, TensorWord tail_);
    static RBWord unit(int m);

    int m() const { return head.m(); }
    std::string text() const;  // "w0 | (w1,...,wn)"

    friend std::strong_ordering operator<=>(const RBWord& a, const RBWord& b);
    friend bool operator==(const RBWord&, const RBWord&) = default;
};

// Basis key of the scalar-extended weak side: head and every tail letter
// have all slots in P ∪ {ε} (no slot is 0).
struct SQSymWord {
    ExponentVector head;
    TensorWord tail;

    SQSymWord(ExponentVector head_, TensorWord tail_);
    static SQSymWord unit(int m);  // all-ε head, empty tail

    int m() const { return head.m(); }
    std::string text() const;

    friend std::strong_ordering operator<=>(const SQSymWord& a,
                                            const SQSymWord& b);
    friend bool operator==(const SQSymWord&, const SQSymWord&) = default;
};

// Tensor-product multiplication: heads multiply in k[Y], tails quasi-shuffle.
LinComb<RBWord> diamond(const RBWord& a, const RBWord& b);
LinComb<RBWord> diamond(const LinComb<RBWord>& a, const LinComb<RBWord>& b);

// P: (w0; w1,...,wn) ↦ (1; w0, w1,...,wn).
LinComb<RBWord> rb_operator(const LinComb<RBWord>& a);

// P(x)⋄P(y) = P(x⋄P(y)) + P(P(x)⋄y) + P(x⋄y)  (weight 1).
bool check_rb_identity(const LinComb<RBWord>& x, const LinComb<RBWord>& y);

LinComb<SQSymWord> sqsym_product(const SQSymWord& a, const SQSymWord& b);
LinComb<SQSymWord> sqsym_product(const LinComb<SQSymWord>& a,
                                 const LinComb<SQSymWord>& b);

// Head moves into the tail, the new head is all-ε.
LinComb<SQSymWord> sqsym_operator(const LinComb<SQSymWord>& a);

// θ applied to the head and every tail letter (ε ↦ 0), and its inverse.
RBWord iso_f(const SQSymWord& a);
LinComb<RBWord> iso_f(const LinComb<SQSymWord>& a);
SQSymWord iso_f_inv(const RBWord& a);

// f(a·b) = f(a) ⋄ f(b) and f(P(a)) = P(f(a)).
bool check_iso(const SQSymWord& a, const SQSymWord& b);

// Hopf structure on the scalar extension: the head carries the polynomial
// bialgebra transported through θ (generators primitive), the tail carries
// deconcatenation; both are combined factorwise.
using SQSymPair = std::pair<SQSymWord, SQSymWord>;
LinComb<SQSymPair> sqsym_coproduct(const SQSymWord& a);
Rational sqsym_counit(const SQSymWord& a);
LinComb<SQSymWord> sqsym_antipode(const SQSymWord& a);

}  // namespace mqsym

#endif
