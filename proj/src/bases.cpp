#include "mqsym/bases.hpp"

#include <algorithm>

namespace mqsym {

MElement f_to_m(const NatComposition& c) {
    MElement out;
    if (c.is_trivial()) {
        out.terms.add_term(c, Rational(1));
        return out;
    }
    for (const NatComposition& r : refinements(c))
        out.terms.add_term(r, Rational(1));
    return out;
}

MElement f_to_m(const FElement& a) {
    MElement out;
    out.terms = linear_extend(
        [](const NatComposition& c) { return f_to_m(c).terms; }, a.terms);
    return out;
}

FElement m_to_f(const NatComposition& w) {
    FElement out;
    if (w.is_trivial()) {
        out.terms.add_term(w, Rational(1));
        return out;
    }
    const std::vector<std::int64_t> d = des(w);
    const std::int64_t n = w.weight();
    std::vector<std::int64_t> free_pos;
    for (std::int64_t s = 1; s <= n - 1; ++s)
        if (!std::binary_search(d.begin(), d.end(), s)) free_pos.push_back(s);

    const std::size_t count = std::size_t{1} << free_pos.size();
    for (std::size_t mask = 0; mask < count; ++mask) {
        std::vector<std::int64_t> z = d;
        int extra = 0;
        for (std::size_t b = 0; b < free_pos.size(); ++b)
            if (mask & (std::size_t{1} << b)) {
                z.push_back(free_pos[b]);
                ++extra;
            }
        out.terms.add_term(refine(w, z),
                           extra % 2 == 0 ? Rational(1) : Rational(-1));
    }
    return out;
}

FElement m_to_f(const MElement& a) {
    FElement out;
    out.terms = linear_extend(
        [](const NatComposition& w) { return m_to_f(w).terms; }, a.terms);
    return out;
}

MElement m_product(const MElement& a, const MElement& b) {
    MElement out;
    out.terms = bilinear_extend(
        [](const MultiComposition& u, const MultiComposition& v) {
            return map_keys(
                [](const TensorWord& w) { return MultiComposition::from_word(w); },
                qshuffle(u.to_word(), v.to_word()));
        },
        a.terms, b.terms);
    return out;
}

FElement f_product(const FElement& a, const FElement& b) {
    return m_to_f(m_product(f_to_m(a), f_to_m(b)));
}

}  // namespace mqsym
