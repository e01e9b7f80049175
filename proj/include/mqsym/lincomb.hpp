// Sparse linear combinations over an ordered basis: the container every
// algebra in this library works in.
#ifndef MQSYM_LINCOMB_HPP
#define MQSYM_LINCOMB_HPP

#include <map>
#include <string>
#include <type_traits>
#include <utility>

#include "mqsym/rational.hpp"

namespace mqsym {

// Finite map from canonical basis keys to nonzero rationals. Zero
// coefficients are dropped eagerly so operator== is structural equality;
// iteration follows the key order, which makes every serialization
// deterministic.
template <typename K>
class LinComb {
public:
    using key_type = K;
    using TermMap = std::map<K, Rational>;

    LinComb() = default;

    static LinComb single(K key, Rational coeff = Rational(1)) {
        LinComb out;
        out.add_term(std::move(key), coeff);
        return out;
    }

    bool is_zero() const { return terms_.empty(); }
    std::size_t term_count() const { return terms_.size(); }

    // The rvalue overload hands the map out by value so that iterating over
    // `f(...).terms()` never dangles.
    const TermMap& terms() const& { return terms_; }
    TermMap terms() && { return std::move(terms_); }

    Rational coeff(const K& key) const {
        auto it = terms_.find(key);
        return it == terms_.end() ? Rational(0) : it->second;
    }

    void add_term(const K& key, const Rational& c) {
        if (c == 0) return;
        auto [it, inserted] = terms_.try_emplace(key, c);
        if (!inserted) {
            it->second += c;
            if (it->second == 0) terms_.erase(it);
        }
    }

    LinComb& operator+=(const LinComb& o) {
        for (const auto& [k, c] : o.terms_) add_term(k, c);
        return *this;
    }
    LinComb& operator-=(const LinComb& o) {
        for (const auto& [k, c] : o.terms_) add_term(k, -c);
        return *this;
    }

    friend LinComb operator+(LinComb a, const LinComb& b) { return a += b; }
    friend LinComb operator-(LinComb a, const LinComb& b) { return a -= b; }

    friend LinComb operator*(const Rational& c, const LinComb& a) {
        LinComb out;
        if (c == 0) return out;
        for (const auto& [k, v] : a.terms_) out.terms_.emplace(k, c * v);
        return out;
    }

    friend bool operator==(const LinComb&, const LinComb&) = default;

private:
    TermMap terms_;
};

// Sum of coeff_a * coeff_b * f(key_a, key_b) over both supports;
// f returns a LinComb on basis pairs.
template <typename K, typename F>
LinComb<K> bilinear_extend(F&& f, const LinComb<K>& a, const LinComb<K>& b) {
    LinComb<K> out;
    for (const auto& [ka, ca] : a.terms())
        for (const auto& [kb, cb] : b.terms()) out += (ca * cb) * f(ka, kb);
    return out;
}

// Linear extension of a key-level map f : K -> LinComb<K2>.
template <typename F, typename K>
auto linear_extend(F&& f, const LinComb<K>& a)
    -> std::invoke_result_t<F, const K&> {
    std::invoke_result_t<F, const K&> out;
    for (const auto& [k, c] : a.terms()) out += c * f(k);
    return out;
}

// Re-keys every term through f (coefficients kept; collisions accumulate).
template <typename F, typename K>
auto map_keys(F&& f, const LinComb<K>& a)
    -> LinComb<std::invoke_result_t<F, const K&>> {
    LinComb<std::invoke_result_t<F, const K&>> out;
    for (const auto& [k, c] : a.terms()) out.add_term(f(k), c);
    return out;
}

// Canonical text: terms in key order, "p/q*" prefixes, signs folded into
// the joining "+"/"-".
template <typename K, typename Fmt>
std::string lincomb_text(const LinComb<K>& lc, Fmt&& key_fmt) {
    if (lc.is_zero()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [k, c] : lc.terms()) {
        const bool neg = c < 0;
        const Rational mag = neg ? Rational(-c) : c;
        if (first) {
            if (neg) out += "-";
            first = false;
        } else {
            out += neg ? " - " : " + ";
        }
        if (mag != 1) {
            out += rational_text(mag);
            out += "*";
        }
        out += key_fmt(k);
    }
    return out;
}

}  // namespace mqsym

#endif
