#include "oracles.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace mqsym::oracles {

namespace {

void subsets_rec(int k, int size, int start, std::vector<int>& acc,
                 std::vector<std::vector<int>>& out) {
    if (static_cast<int>(acc.size()) == size) {
        out.push_back(acc);
        return;
    }
    for (int v = start; v <= k; ++v) {
        acc.push_back(v);
        subsets_rec(k, size, v + 1, acc, out);
        acc.pop_back();
    }
}

std::vector<std::vector<int>> subsets_of_size(int k, int size) {
    std::vector<std::vector<int>> out;
    std::vector<int> acc;
    subsets_rec(k, size, 1, acc, out);
    return out;
}

}  // namespace

LinComb<TensorWord> oracle_qshuffle(const TensorWord& a, const TensorWord& b,
                                    LetterDot dot) {
    const int p = a.length();
    const int q = b.length();
    LinComb<TensorWord> out;
    for (int k = std::max(p, q); k <= p + q; ++k) {
        for (const auto& sa : subsets_of_size(k, p))
            for (const auto& sb : subsets_of_size(k, q)) {
                std::vector<int> pos_a(static_cast<std::size_t>(k) + 1, 0);
                std::vector<int> pos_b(static_cast<std::size_t>(k) + 1, 0);
                for (int i = 0; i < p; ++i)
                    pos_a[static_cast<std::size_t>(sa[static_cast<std::size_t>(i)])] = i + 1;
                for (int j = 0; j < q; ++j)
                    pos_b[static_cast<std::size_t>(sb[static_cast<std::size_t>(j)])] = j + 1;

                bool covers = true;
                std::vector<ExponentVector> letters;
                for (int s = 1; s <= k && covers; ++s) {
                    const int ia = pos_a[static_cast<std::size_t>(s)];
                    const int jb = pos_b[static_cast<std::size_t>(s)];
                    if (ia && jb)
                        letters.push_back(dot(a.letter(ia), b.letter(jb)));
                    else if (ia)
                        letters.push_back(a.letter(ia));
                    else if (jb)
                        letters.push_back(b.letter(jb));
                    else
                        covers = false;
                }
                if (covers)
                    out.add_term(TensorWord(a.tag(), a.m(), std::move(letters)),
                                 Rational(1));
            }
    }
    return out;
}

Int oracle_qshuffle_count(int p, int q) {
    auto factorial = [](int n) {
        Int r = 1;
        for (int i = 2; i <= n; ++i) r *= i;
        return r;
    };
    Int total = 0;
    for (int k = std::max(p, q); k <= p + q; ++k)
        total += factorial(k) /
                 (factorial(k - p) * factorial(k - q) * factorial(p + q - k));
    return total;
}

namespace {

// One-step breakings: split column i at row j into the upper part ending in
// a' and the lower part starting with a'' = a_{j,i} - a'; both halves must be
// nonzero columns.
std::vector<NatComposition> one_step_breakings(const NatComposition& c) {
    std::vector<NatComposition> out;
    const int m = c.m();
    for (int i = 1; i <= c.length(); ++i) {
        const ExponentVector& col = c.column(i);
        for (int j = 1; j <= m; ++j) {
            const std::int64_t a = col.slot(j).value();
            if (a < 1) continue;
            for (std::int64_t upper = 0; upper <= a; ++upper) {
                std::vector<ExtNat> top(static_cast<std::size_t>(m));
                std::vector<ExtNat> bottom(static_cast<std::size_t>(m));
                for (int r = 1; r < j; ++r)
                    top[static_cast<std::size_t>(r - 1)] = col.slot(r);
                top[static_cast<std::size_t>(j - 1)] = ExtNat::nat(upper);
                bottom[static_cast<std::size_t>(j - 1)] = ExtNat::nat(a - upper);
                for (int r = j + 1; r <= m; ++r)
                    bottom[static_cast<std::size_t>(r - 1)] = col.slot(r);

                ExponentVector top_col(Monoid::Nat, std::move(top));
                ExponentVector bottom_col(Monoid::Nat, std::move(bottom));
                if (top_col.is_zero() || bottom_col.is_zero()) continue;

                std::vector<ExponentVector> cols;
                for (int t = 1; t < i; ++t) cols.push_back(c.column(t));
                cols.push_back(std::move(top_col));
                cols.push_back(std::move(bottom_col));
                for (int t = i + 1; t <= c.length(); ++t)
                    cols.push_back(c.column(t));
                out.emplace_back(Monoid::Nat, m, std::move(cols));
            }
        }
    }
    return out;
}

}  // namespace

std::vector<NatComposition> oracle_refinement_closure(const NatComposition& c) {
    std::set<NatComposition> seen{c};
    std::vector<NatComposition> frontier{c};
    while (!frontier.empty()) {
        std::vector<NatComposition> next;
        for (const NatComposition& w : frontier)
            for (const NatComposition& b : one_step_breakings(w))
                if (seen.insert(b).second) next.push_back(b);
        frontier = std::move(next);
    }
    return {seen.begin(), seen.end()};
}

bool oracle_leq(const NatComposition& c, const NatComposition& c2) {
    if (c == c2) return true;
    for (const NatComposition& w : oracle_refinement_closure(c))
        if (w == c2) return true;
    return false;
}

namespace {

LinComb<TensorWord> oracle_antipode_rec(
    const TensorWord& a, LetterDot dot,
    std::map<TensorWord, LinComb<TensorWord>>& memo) {
    if (a.is_empty()) return LinComb<TensorWord>::single(a);
    if (auto it = memo.find(a); it != memo.end()) return it->second;

    LinComb<TensorWord> acc;
    for (int i = 0; i < a.length(); ++i) {
        const LinComb<TensorWord> s_prefix =
            oracle_antipode_rec(a.prefix(i), dot, memo);
        for (const auto& [w, cw] : s_prefix.terms())
            acc += cw * oracle_qshuffle(w, a.suffix_from(i + 1), dot);
    }
    LinComb<TensorWord> out = Rational(-1) * acc;
    memo.emplace(a, out);
    return out;
}

}  // namespace

LinComb<TensorWord> oracle_antipode(const TensorWord& a, LetterDot dot) {
    std::map<TensorWord, LinComb<TensorWord>> memo;
    return oracle_antipode_rec(a, dot, memo);
}

namespace {

const LinComb<NatComposition>& oracle_m_to_f_rec(
    const NatComposition& w,
    std::map<NatComposition, LinComb<NatComposition>>& memo) {
    if (auto it = memo.find(w); it != memo.end()) return it->second;

    LinComb<NatComposition> out = LinComb<NatComposition>::single(w);
    for (const NatComposition& finer : oracle_refinement_closure(w)) {
        if (finer == w) continue;
        out -= oracle_m_to_f_rec(finer, memo);
    }
    return memo.emplace(w, std::move(out)).first->second;
}

}  // namespace

LinComb<NatComposition> oracle_m_to_f(const NatComposition& w) {
    std::map<NatComposition, LinComb<NatComposition>> memo;
    return oracle_m_to_f_rec(w, memo);
}

namespace classic {

namespace {

void compositions_rec(int rest, IntComposition& acc,
                      std::vector<IntComposition>& out) {
    if (rest == 0) {
        out.push_back(acc);
        return;
    }
    for (int p = 1; p <= rest; ++p) {
        acc.push_back(p);
        compositions_rec(rest - p, acc, out);
        acc.pop_back();
    }
}

unsigned descent_mask(const IntComposition& alpha) {
    unsigned mask = 0;
    int acc = 0;
    for (std::size_t i = 0; i + 1 < alpha.size(); ++i) {
        acc += alpha[i];
        mask |= 1u << (acc - 1);
    }
    return mask;
}

IntComposition composition_from_mask(int n, unsigned mask) {
    IntComposition parts;
    int prev = 0;
    for (int s = 1; s <= n - 1; ++s)
        if (mask & (1u << (s - 1))) {
            parts.push_back(s - prev);
            prev = s;
        }
    parts.push_back(n - prev);
    return parts;
}

int weight(const IntComposition& alpha) {
    int n = 0;
    for (int p : alpha) n += p;
    return n;
}

}  // namespace

std::vector<IntComposition> compositions(int n) {
    std::vector<IntComposition> out;
    IntComposition acc;
    compositions_rec(n, acc, out);
    return out;
}

LinComb<IntComposition> f_to_m(const IntComposition& alpha) {
    const int n = weight(alpha);
    const unsigned base = descent_mask(alpha);
    const unsigned full = n >= 1 ? (1u << (n - 1)) - 1 : 0;
    LinComb<IntComposition> out;
    for (unsigned t = 0; t <= full; ++t)
        if ((t & base) == base)
            out.add_term(composition_from_mask(n, t), Rational(1));
    return out;
}

LinComb<IntComposition> m_to_f(const IntComposition& alpha) {
    const int n = weight(alpha);
    const unsigned base = descent_mask(alpha);
    const unsigned full = n >= 1 ? (1u << (n - 1)) - 1 : 0;
    LinComb<IntComposition> out;
    for (unsigned t = 0; t <= full; ++t)
        if ((t & base) == base) {
            const int extra = __builtin_popcount(t) - __builtin_popcount(base);
            out.add_term(composition_from_mask(n, t),
                         extra % 2 == 0 ? Rational(1) : Rational(-1));
        }
    return out;
}

}  // namespace classic

}  // namespace mqsym::oracles
