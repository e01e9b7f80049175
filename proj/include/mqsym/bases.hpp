// The monomial (M) and fundamental (F) bases over N-entry multi-compositions
// and exact conversion between them. F expands over refinements with all
// coefficients 1; the inverse is the inclusion-exclusion over descent
// supersets, exact because the interval above a key is a Boolean lattice on
// [|c|-1] \ Des(c).
#ifndef MQSYM_BASES_HPP
#define MQSYM_BASES_HPP

#include "mqsym/compositions.hpp"
#include "mqsym/lincomb.hpp"
#include "mqsym/quasi_shuffle.hpp"

namespace mqsym {

struct MElement {
    LinComb<MultiComposition> terms;
    friend bool operator==(const MElement&, const MElement&) = default;
};

struct FElement {
    LinComb<MultiComposition> terms;
    friend bool operator==(const FElement&, const FElement&) = default;
};

// F_c = Σ_{c ⊴ c'} M_{c'}; the trivial composition maps to M_∅ (both are 1).
MElement f_to_m(const NatComposition& c);
MElement f_to_m(const FElement& a);

// M_w = Σ_{Z ⊇ Des(w)} (-1)^{|Z| - |Des(w)|} F_{refine(w, Z)}.
FElement m_to_f(const NatComposition& w);
FElement m_to_f(const MElement& a);

// Bilinear extension of the quasi-shuffle product on keys; works for either
// exponent monoid.
MElement m_product(const MElement& a, const MElement& b);

// Conjugate of m_product by the basis change.
FElement f_product(const FElement& a, const FElement& b);

}  // namespace mqsym

#endif
