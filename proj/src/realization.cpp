#include "mqsym/realization.hpp"

#include <functional>
#include <stdexcept>

#include "mqsym/quasi_shuffle.hpp"

namespace mqsym {

void SeriesMonomial::multiply_in(int row, int pos, ExtNat e) {
    if (e.is_zero()) return;
    auto key = std::make_pair(pos, row);
    auto [it, inserted] = factors_.try_emplace(key, e);
    if (!inserted) it->second = it->second + e;  // stays nonzero
}

int SeriesMonomial::max_position() const {
    return factors_.empty() ? 0 : factors_.rbegin()->first.first;
}

SeriesMonomial operator*(const SeriesMonomial& a, const SeriesMonomial& b) {
    SeriesMonomial out = a;
    for (const auto& [key, e] : b.factors_) out.multiply_in(key.second, key.first, e);
    return out;
}

std::string SeriesMonomial::text() const {
    if (factors_.empty()) return "1";
    std::string out;
    bool first = true;
    for (const auto& [key, e] : factors_) {
        if (!first) out += "*";
        first = false;
        out += "x[" + std::to_string(key.second) + "," +
               std::to_string(key.first) + "]";
        if (e != ExtNat::nat(1)) out += "^" + e.token();
    }
    return out;
}

std::strong_ordering operator<=>(const SeriesMonomial& a,
                                 const SeriesMonomial& b) {
    auto ai = a.factors_.begin(), bi = b.factors_.begin();
    for (; ai != a.factors_.end() && bi != b.factors_.end(); ++ai, ++bi) {
        if (auto c = ai->first <=> bi->first; c != 0) return c;
        if (auto c = ai->second <=> bi->second; c != 0) return c;
    }
    return a.factors_.size() <=> b.factors_.size();
}

std::string TruncatedSeries::text() const {
    return lincomb_text(terms,
                        [](const SeriesMonomial& mono) { return mono.text(); });
}

TruncatedSeries expand_m(const MultiComposition& w, int N) {
    if (N < 1) throw std::invalid_argument("truncation level must be >= 1");
    const int k = w.length();
    if (k > N)
        throw std::invalid_argument(
            "expand_m: word longer than the truncation level");

    TruncatedSeries out{N, w.m(), w.tag(), {}};
    std::vector<int> idx(static_cast<std::size_t>(k));
    std::function<void(int, int, SeriesMonomial)> rec =
        [&](int col, int lo, SeriesMonomial acc) {
            if (col > k) {
                out.terms.add_term(acc, Rational(1));
                return;
            }
            for (int j = lo; j <= N - (k - col); ++j) {
                SeriesMonomial next = acc;
                for (int r = 1; r <= w.m(); ++r)
                    next.multiply_in(r, j, w.column(col).slot(r));
                rec(col + 1, j + 1, std::move(next));
            }
        };
    rec(1, 1, SeriesMonomial());
    return out;
}

TruncatedSeries expand_f(const NatComposition& c, int N) {
    if (N < 1) throw std::invalid_argument("truncation level must be >= 1");
    TruncatedSeries out{N, c.m(), Monoid::Nat, {}};
    if (c.is_trivial()) {
        out.terms.add_term(SeriesMonomial(), Rational(1));
        return out;
    }

    const std::vector<int> g = g_fn(c);
    const std::vector<std::int64_t> d = des(c);
    const std::int64_t n = c.weight();
    std::vector<bool> strict_after(static_cast<std::size_t>(n) + 1, false);
    for (std::int64_t s : d) strict_after[static_cast<std::size_t>(s)] = true;

    std::function<void(std::int64_t, int, SeriesMonomial)> rec =
        [&](std::int64_t j, int lo, SeriesMonomial acc) {
            if (j > n) {
                out.terms.add_term(acc, Rational(1));
                return;
            }
            for (int i = lo; i <= N; ++i) {
                SeriesMonomial next = acc;
                next.multiply_in(g[static_cast<std::size_t>(j - 1)], i,
                                 ExtNat::nat(1));
                rec(j + 1, strict_after[static_cast<std::size_t>(j)] ? i + 1 : i,
                    std::move(next));
            }
        };
    rec(1, 1, SeriesMonomial());
    return out;
}

TruncatedSeries expand_f_letterwise(const NatComposition& c, int N) {
    if (N < 1) throw std::invalid_argument("truncation level must be >= 1");
    TruncatedSeries out{N, c.m(), Monoid::Nat, {}};
    if (c.is_trivial()) {
        out.terms.add_term(SeriesMonomial(), Rational(1));
        return out;
    }

    // The letters of each column word, top row to bottom row.
    std::vector<std::vector<int>> column_rows;
    for (int i = 1; i <= c.length(); ++i) {
        std::vector<int> rows;
        for (int r = 1; r <= c.m(); ++r)
            for (std::int64_t t = 0; t < c.column(i).slot(r).value(); ++t)
                rows.push_back(r);
        column_rows.push_back(std::move(rows));
    }

    // Weakly increasing inside a column, strictly increasing when crossing
    // into the next column.
    std::function<void(std::size_t, std::size_t, int, SeriesMonomial)> rec =
        [&](std::size_t col, std::size_t letter, int lo, SeriesMonomial acc) {
            if (col == column_rows.size()) {
                out.terms.add_term(acc, Rational(1));
                return;
            }
            const std::vector<int>& rows = column_rows[col];
            for (int i = lo; i <= N; ++i) {
                SeriesMonomial next = acc;
                next.multiply_in(rows[letter], i, ExtNat::nat(1));
                if (letter + 1 < rows.size())
                    rec(col, letter + 1, i, std::move(next));
                else
                    rec(col + 1, 0, i + 1, std::move(next));
            }
        };
    rec(0, 0, 1, SeriesMonomial());
    return out;
}

TruncatedSeries series_mul(const TruncatedSeries& a, const TruncatedSeries& b) {
    if (a.truncation != b.truncation || a.m != b.m || a.tag != b.tag)
        throw std::invalid_argument("series_mul: mismatched series parameters");
    TruncatedSeries out{a.truncation, a.m, a.tag, {}};
    out.terms = bilinear_extend(
        [](const SeriesMonomial& u, const SeriesMonomial& v) {
            return LinComb<SeriesMonomial>::single(u * v);
        },
        a.terms, b.terms);
    return out;
}

bool verify_product(const MultiComposition& w1, const MultiComposition& w2,
                    int N) {
    if (N < w1.length() + w2.length())
        throw std::invalid_argument(
            "verify_product: truncation level below the combined length");
    const TruncatedSeries lhs = series_mul(expand_m(w1, N), expand_m(w2, N));

    TruncatedSeries rhs{N, w1.m(), w1.tag(), {}};
    for (const auto& [word, c] : qshuffle(w1.to_word(), w2.to_word()).terms())
        rhs.terms += c * expand_m(MultiComposition::from_word(word), N).terms;
    return lhs == rhs;
}

}  // namespace mqsym
