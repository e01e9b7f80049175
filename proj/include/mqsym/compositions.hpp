// Multi-compositions: sequences of nonzero exponent vectors (the columns of
// an m×k exponent matrix), the descent statistic, the letter-location
// function, and the column-breaking refinement order.
#ifndef MQSYM_COMPOSITIONS_HPP
#define MQSYM_COMPOSITIONS_HPP

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

#include "mqsym/exponents.hpp"
#include "mqsym/tensor_word.hpp"

namespace mqsym {

// An m×k matrix over the exponent monoid with no zero column; the basis key
// for both the monomial and the fundamental basis. The trivial composition
// (k = 0) keeps an explicit m tag and indexes the algebra unit.
class MultiComposition {
public:
    MultiComposition(Monoid tag, int m, std::vector<ExponentVector> columns);

    static MultiComposition trivial(Monoid tag, int m);

    Monoid tag() const { return tag_; }
    int m() const { return m_; }
    int length() const { return static_cast<int>(cols_.size()); }
    bool is_trivial() const { return cols_.empty(); }

    const ExponentVector& column(int i) const {  // 1-based
        return cols_[static_cast<std::size_t>(i - 1)];
    }
    const std::vector<ExponentVector>& columns() const { return cols_; }

    std::int64_t weight() const;  // Σ |c_i|; pre: tag == Nat

    // Row-major matrix text: "[[a11,...,a1k],...,[am1,...,amk]]"; "[]" when
    // trivial. This is the canonical serialization behind LinComb keys.
    std::string matrix_text() const;

    TensorWord to_word() const;
    static MultiComposition from_word(const TensorWord& w);

    // Canonical key order: length first, then columnwise.
    friend std::strong_ordering operator<=>(const MultiComposition& a,
                                            const MultiComposition& b);
    friend bool operator==(const MultiComposition&,
                           const MultiComposition&) = default;

private:
    Monoid tag_;
    int m_;
    std::vector<ExponentVector> cols_;
};

// N-entry compositions are the only ones with weights, descents and the
// refinement order; operations below reject weak-monoid input.
using NatComposition = MultiComposition;

std::int64_t col_weight(const NatComposition& c, int i);

// Partial sums of column weights, the last one excluded; empty for k = 1.
std::vector<std::int64_t> des(const NatComposition& c);

// g(j) = row of the j-th letter, reading columns left to right and rows top
// to bottom inside each column (row r repeated a_{r,i} times). 1-based rows.
std::vector<int> g_fn(const NatComposition& c);

// The unique composition with descent set Z and the same letter locations;
// pre: Des(c) ⊆ Z ⊆ [|c|-1].
NatComposition refine(const NatComposition& c, const std::vector<std::int64_t>& Z);

// All refine(c, Z) over Des(c) ⊆ Z ⊆ [|c|-1]; includes c itself.
std::vector<NatComposition> refinements(const NatComposition& c);

// c ⊴ c2: equal letter locations and Des(c) ⊆ Des(c2). lt is the strict form.
bool leq(const NatComposition& c, const NatComposition& c2);
bool lt(const NatComposition& c, const NatComposition& c2);

// Ordinary integer compositions L ⊨ n.
struct Composition {
    std::vector<int> parts;
    friend bool operator==(const Composition&, const Composition&) = default;
};

// All compositions of n in lexicographic order of part sequences; n = 0
// yields the single empty composition.
std::vector<Composition> compositions_of(int n);

// All [m]-compositions of weight n (enumeration order: by length, then
// columnwise), used by tests and exhaustive sweeps.
std::vector<NatComposition> all_nat_compositions(int m, int n);

}  // namespace mqsym

#endif
