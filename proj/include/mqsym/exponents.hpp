// Exponent monoids and exponent vectors: values in N or in the weak monoid
// N ∪ {ε}, and length-m vectors of them (formal monomials 1^{e1}···m^{em}).
#ifndef MQSYM_EXPONENTS_HPP
#define MQSYM_EXPONENTS_HPP

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace mqsym {

// A natural number or the symbol ε. ε is idempotent, acts as a second zero
// on 0, and is absorbed by positive naturals:
//   0+ε = ε+0 = ε+ε = ε,   n+ε = ε+n = n  (n ≥ 1).
// Nat(0) is the monoid zero; ε counts as nonzero.
class ExtNat {
public:
    constexpr ExtNat() : v_(0) {}

    static constexpr ExtNat eps() { return ExtNat(kEps); }
    static constexpr ExtNat nat(std::int64_t n) { return ExtNat(n < 0 ? 0 : n); }

    constexpr bool is_eps() const { return v_ == kEps; }
    constexpr bool is_zero() const { return v_ == 0; }
    constexpr std::int64_t value() const { return v_; }  // pre: !is_eps()

    friend constexpr ExtNat operator+(ExtNat a, ExtNat b) {
        if (a.is_eps()) return b.v_ >= 1 ? b : eps();
        if (b.is_eps()) return a.v_ >= 1 ? a : eps();
        return ExtNat(a.v_ + b.v_);
    }

    // Canonical order: naturals by value, ε after all naturals.
    friend constexpr std::strong_ordering operator<=>(ExtNat a, ExtNat b) {
        if (a.is_eps() != b.is_eps())
            return a.is_eps() ? std::strong_ordering::greater
                              : std::strong_ordering::less;
        return a.v_ <=> b.v_;
    }
    friend constexpr bool operator==(ExtNat, ExtNat) = default;

    std::string token() const;  // "e" for ε, decimal digits otherwise

private:
    static constexpr std::int64_t kEps = -1;
    explicit constexpr ExtNat(std::int64_t raw) : v_(raw) {}
    std::int64_t v_;
};

// The two supported exponent monoids. Both share the ExtNat addition table;
// Nat additionally forbids ε in any slot. Both are additively finite (each
// element has finitely many two-term decompositions); nothing here relies on
// enumerating decompositions, so that property is assumed, not enforced.
enum class Monoid : std::uint8_t { Nat, Weak };

std::string_view monoid_name(Monoid tag);

// Length-m vector over an exponent monoid, stored densely (zero slots kept).
// The formal monomial 1^{e1}···m^{em}; the basis of the coefficient algebra
// the quasi-shuffle product merges letters in.
class ExponentVector {
public:
    ExponentVector(Monoid tag, std::vector<ExtNat> exps);

    static ExponentVector zero(Monoid tag, int m);

    Monoid tag() const { return tag_; }
    int m() const { return static_cast<int>(exps_.size()); }
    ExtNat slot(int i) const { return exps_[static_cast<std::size_t>(i - 1)]; }
    const std::vector<ExtNat>& slots() const { return exps_; }

    bool is_zero() const;
    std::int64_t weight() const;  // sum of entries; pre: tag == Nat

    std::string text() const;  // "[1,e,0]"

    friend std::strong_ordering operator<=>(const ExponentVector& a,
                                            const ExponentVector& b);
    friend bool operator==(const ExponentVector&,
                           const ExponentVector&) = default;

private:
    Monoid tag_;
    std::vector<ExtNat> exps_;
};

// Slotwise monoid addition (formal monomial multiplication).
ExponentVector ev_product(const ExponentVector& u, const ExponentVector& v);

bool ev_is_zero(const ExponentVector& u);

// Slotwise ε ↦ 0: weak vectors to N-vectors (k[Y] monomial exponents).
ExponentVector ev_theta(const ExponentVector& u);

// Slotwise 0 ↦ ε: the inverse direction; lands in slots ⊆ P ∪ {ε}.
ExponentVector ev_theta_inv(const ExponentVector& u);

// Retags an N-vector as a weak vector without introducing ε.
ExponentVector ev_to_weak(const ExponentVector& u);

// Parses the bracketed comma form, e.g. "[1,e,0]"; ε only under Weak.
ExponentVector parse_exponent_vector(std::string_view text, Monoid tag);

}  // namespace mqsym

#endif
