#include "mqsym/quasi_shuffle.hpp"

#include <optional>
#include <stdexcept>
#include <vector>

namespace mqsym {

namespace {

// The recursion only ever sees suffix pairs of the two input words, so the
// call-local memo table is indexed by (letters consumed from a, from b).
struct ShuffleState {
    const TensorWord& a;
    const TensorWord& b;
    LetterDot dot;
    std::vector<std::optional<LinComb<TensorWord>>> memo;

    ShuffleState(const TensorWord& a_, const TensorWord& b_, LetterDot dot_)
        : a(a_), b(b_), dot(dot_) {
        memo.resize(static_cast<std::size_t>((a.length() + 1) * (b.length() + 1)));
    }

    const LinComb<TensorWord>& run(int i, int j) {
        auto& slot = memo[static_cast<std::size_t>(i * (b.length() + 1) + j)];
        if (slot) return *slot;

        LinComb<TensorWord> out;
        if (i == a.length()) {
            out = LinComb<TensorWord>::single(b.suffix_from(j + 1));
        } else if (j == b.length()) {
            out = LinComb<TensorWord>::single(a.suffix_from(i + 1));
        } else {
            const ExponentVector& x = a.letter(i + 1);
            const ExponentVector& y = b.letter(j + 1);
            auto prepend = [](const ExponentVector& head,
                              const LinComb<TensorWord>& tails) {
                return map_keys(
                    [&head](const TensorWord& w) { return w.with_prepended(head); },
                    tails);
            };
            out += prepend(x, run(i + 1, j));
            out += prepend(y, run(i, j + 1));
            out += prepend(dot(x, y), run(i + 1, j + 1));
        }
        slot = std::move(out);
        return *slot;
    }
};

}  // namespace

LinComb<TensorWord> qshuffle(const TensorWord& a, const TensorWord& b,
                             LetterDot dot) {
    if (a.m() != b.m() || a.tag() != b.tag())
        throw std::invalid_argument("quasi-shuffle: mismatched alphabets");
    ShuffleState state(a, b, dot);
    return state.run(0, 0);
}

LinComb<TensorWord> word_product(const LinComb<TensorWord>& a,
                                 const LinComb<TensorWord>& b, LetterDot dot) {
    return bilinear_extend(
        [dot](const TensorWord& u, const TensorWord& v) {
            return qshuffle(u, v, dot);
        },
        a, b);
}

}  // namespace mqsym
