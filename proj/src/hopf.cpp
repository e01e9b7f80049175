#include "mqsym/hopf.hpp"

#include <algorithm>
#include <stdexcept>

namespace mqsym {

TensorPair coproduct(const TensorWord& a) {
    TensorPair out;
    for (int i = 0; i <= a.length(); ++i)
        out.add_term({a.prefix(i), a.suffix_from(i + 1)}, Rational(1));
    return out;
}

TensorPair coproduct(const LinComb<TensorWord>& a) {
    return linear_extend([](const TensorWord& w) { return coproduct(w); }, a);
}

Rational counit(const TensorWord& a) {
    return a.is_empty() ? Rational(1) : Rational(0);
}

Rational counit(const LinComb<TensorWord>& a) {
    Rational out = 0;
    for (const auto& [w, c] : a.terms())
        if (w.is_empty()) out += c;
    return out;
}

TensorWord reversal(const TensorWord& a) {
    std::vector<ExponentVector> letters(a.letters().rbegin(),
                                        a.letters().rend());
    return TensorWord(a.tag(), a.m(), std::move(letters));
}

TensorWord l_compose(const Composition& L, const TensorWord& a,
                     LetterDot dot) {
    int total = 0;
    for (int p : L.parts) total += p;
    if (total != a.length())
        throw std::invalid_argument("l_compose: parts must sum to the word length");

    std::vector<ExponentVector> blocks;
    blocks.reserve(L.parts.size());
    int pos = 1;
    for (int p : L.parts) {
        ExponentVector merged = a.letter(pos);
        for (int t = 1; t < p; ++t) merged = dot(merged, a.letter(pos + t));
        blocks.push_back(std::move(merged));
        pos += p;
    }
    return TensorWord(a.tag(), a.m(), std::move(blocks));
}

LinComb<TensorWord> antipode(const TensorWord& a, LetterDot dot) {
    if (a.is_empty()) return LinComb<TensorWord>::single(a);
    const TensorWord rev = reversal(a);
    const Rational sign = a.length() % 2 == 0 ? Rational(1) : Rational(-1);
    LinComb<TensorWord> out;
    for (const Composition& L : compositions_of(a.length()))
        out.add_term(l_compose(L, rev, dot), sign);
    return out;
}

LinComb<TensorWord> antipode(const LinComb<TensorWord>& a, LetterDot dot) {
    return linear_extend(
        [dot](const TensorWord& w) { return antipode(w, dot); }, a);
}

TensorPair pair_product(const TensorPair& x, const TensorPair& y,
                        LetterDot dot) {
    TensorPair out;
    for (const auto& [px, cx] : x.terms())
        for (const auto& [py, cy] : y.terms()) {
            const auto left = qshuffle(px.first, py.first, dot);
            const auto right = qshuffle(px.second, py.second, dot);
            const Rational c = cx * cy;
            for (const auto& [lw, lc] : left.terms())
                for (const auto& [rw, rc] : right.terms())
                    out.add_term({lw, rw}, c * lc * rc);
        }
    return out;
}

bool check_bialgebra(const TensorWord& a, const TensorWord& b, LetterDot dot) {
    const TensorPair lhs = pair_product(coproduct(a), coproduct(b), dot);
    const TensorPair rhs = coproduct(qshuffle(a, b, dot));
    return lhs == rhs;
}

bool check_antipode(const TensorWord& a, LetterDot dot) {
    const LinComb<TensorWord> expected =
        counit(a) * LinComb<TensorWord>::single(TensorWord(a.tag(), a.m()));
    LinComb<TensorWord> left, right;
    for (const auto& [split, c] : coproduct(a).terms()) {
        left += c * word_product(antipode(split.first, dot),
                                 LinComb<TensorWord>::single(split.second), dot);
        right += c * word_product(LinComb<TensorWord>::single(split.first),
                                  antipode(split.second, dot), dot);
    }
    return left == expected && right == expected;
}

}  // namespace mqsym
