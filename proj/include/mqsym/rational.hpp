// Exact rational scalars for all algebra elements.
#ifndef MQSYM_RATIONAL_HPP
#define MQSYM_RATIONAL_HPP

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

namespace mqsym {

using Int = boost::multiprecision::cpp_int;

// Always held in lowest terms with positive denominator; cpp_rational
// canonicalizes on every operation, so structural equality is value equality.
using Rational = boost::multiprecision::cpp_rational;

inline std::string rational_text(const Rational& q) { return q.str(); }

inline Int binomial(std::int64_t n, std::int64_t k) {
    if (k < 0 || k > n) return Int(0);
    Int r = 1;
    for (std::int64_t i = 1; i <= k; ++i) {
        r *= n - k + i;
        r /= i;
    }
    return r;
}

}  // namespace mqsym

#endif
