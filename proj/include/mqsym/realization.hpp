// Truncated power-series realization in the variables x_{i,j} (row i ≤ m,
// position j ≤ N): expands the M and F bases and provides the independent
// oracle for product identities. Truncation is by position index, which
// preserves every identity about bounded-length index tuples exactly.
#ifndef MQSYM_REALIZATION_HPP
#define MQSYM_REALIZATION_HPP

#include <compare>
#include <map>
#include <string>
#include <utility>

#include "mqsym/compositions.hpp"
#include "mqsym/lincomb.hpp"

namespace mqsym {

// A finite product of variable powers x_{i,j}^e with nonzero exponents.
// Factors are keyed (position, row) so the canonical order groups by
// position; exponents never simplify to zero under the monoid addition, and
// ε powers are kept as explicit factors.
class SeriesMonomial {
public:
    SeriesMonomial() = default;  // the monomial 1

    void multiply_in(int row, int pos, ExtNat e);

    bool is_one() const { return factors_.empty(); }
    const std::map<std::pair<int, int>, ExtNat>& factors() const {
        return factors_;
    }
    int max_position() const;

    friend SeriesMonomial operator*(const SeriesMonomial& a,
                                    const SeriesMonomial& b);

    std::string text() const;  // "x[1,1]*x[3,1]^3", "1" for the empty product

    friend std::strong_ordering operator<=>(const SeriesMonomial& a,
                                            const SeriesMonomial& b);
    friend bool operator==(const SeriesMonomial&,
                           const SeriesMonomial&) = default;

private:
    std::map<std::pair<int, int>, ExtNat> factors_;
};

struct TruncatedSeries {
    int truncation = 0;  // N
    int m = 1;
    Monoid tag = Monoid::Nat;
    LinComb<SeriesMonomial> terms;

    std::string text() const;
    friend bool operator==(const TruncatedSeries&,
                           const TruncatedSeries&) = default;
};

// M_w truncated to positions ≤ N: one monomial per strictly increasing
// index tuple. Errors out when ℓ(w) > N instead of returning a silent zero.
TruncatedSeries expand_m(const MultiComposition& w, int N);

// F_c truncated to positions ≤ N, summed over weakly increasing tuples with
// strict rises forced at Des(c); rows come from the letter-location map.
TruncatedSeries expand_f(const NatComposition& c, int N);

// Same function computed directly from the column words: weakly increasing
// inside each column, strictly increasing between columns. Independent of
// Des and g; kept as a second route for cross-checking.
TruncatedSeries expand_f_letterwise(const NatComposition& c, int N);

TruncatedSeries series_mul(const TruncatedSeries& a, const TruncatedSeries& b);

// Whether expand_m(w1)·expand_m(w2) equals the expansion of w1 ∗ w2.
// Sound for N ≥ ℓ(w1)+ℓ(w2): no monomial on either side uses more positions.
bool verify_product(const MultiComposition& w1, const MultiComposition& w2,
                    int N);

}  // namespace mqsym

#endif
