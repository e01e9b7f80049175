#include "mqsym/compositions.hpp"

#include <algorithm>
#include <stdexcept>

namespace mqsym {

MultiComposition::MultiComposition(Monoid tag, int m,
                                   std::vector<ExponentVector> columns)
    : tag_(tag), m_(m), cols_(std::move(columns)) {
    if (m < 1) throw std::invalid_argument("multi-composition needs m >= 1");
    for (const ExponentVector& col : cols_) {
        if (col.m() != m_ || col.tag() != tag_)
            throw std::invalid_argument("column from a different alphabet");
        if (col.is_zero())
            throw std::invalid_argument("multi-composition has a zero column");
    }
}

MultiComposition MultiComposition::trivial(Monoid tag, int m) {
    return MultiComposition(tag, m, {});
}

std::int64_t MultiComposition::weight() const {
    std::int64_t w = 0;
    for (const ExponentVector& col : cols_) w += col.weight();
    return w;
}

std::string MultiComposition::matrix_text() const {
    if (cols_.empty()) return "[]";
    std::string out = "[";
    for (int r = 1; r <= m_; ++r) {
        if (r > 1) out += ",";
        out += "[";
        for (int i = 1; i <= length(); ++i) {
            if (i > 1) out += ",";
            out += column(i).slot(r).token();
        }
        out += "]";
    }
    out += "]";
    return out;
}

TensorWord MultiComposition::to_word() const {
    return TensorWord(tag_, m_, cols_);
}

MultiComposition MultiComposition::from_word(const TensorWord& w) {
    return MultiComposition(w.tag(), w.m(), w.letters());
}

std::strong_ordering operator<=>(const MultiComposition& a,
                                 const MultiComposition& b) {
    if (auto c = a.tag_ <=> b.tag_; c != 0) return c;
    if (auto c = a.m_ <=> b.m_; c != 0) return c;
    if (auto c = a.cols_.size() <=> b.cols_.size(); c != 0) return c;
    for (std::size_t i = 0; i < a.cols_.size(); ++i)
        if (auto c = a.cols_[i] <=> b.cols_[i]; c != 0) return c;
    return std::strong_ordering::equal;
}

namespace {

void require_nat(const NatComposition& c, const char* what) {
    if (c.tag() != Monoid::Nat)
        throw std::domain_error(std::string(what) + " is defined for nat compositions only");
}

}  // namespace

std::int64_t col_weight(const NatComposition& c, int i) {
    require_nat(c, "column weight");
    if (i < 1 || i > c.length())
        throw std::out_of_range("column index out of range");
    return c.column(i).weight();
}

std::vector<std::int64_t> des(const NatComposition& c) {
    require_nat(c, "Des");
    if (c.is_trivial())
        throw std::domain_error("Des is undefined on the trivial composition");
    std::vector<std::int64_t> out;
    std::int64_t acc = 0;
    for (int i = 1; i < c.length(); ++i) {
        acc += col_weight(c, i);
        out.push_back(acc);
    }
    return out;
}

std::vector<int> g_fn(const NatComposition& c) {
    require_nat(c, "g");
    if (c.is_trivial())
        throw std::domain_error("g is undefined on the trivial composition");
    std::vector<int> out;
    for (int i = 1; i <= c.length(); ++i)
        for (int r = 1; r <= c.m(); ++r)
            for (std::int64_t t = 0; t < c.column(i).slot(r).value(); ++t)
                out.push_back(r);
    return out;
}

NatComposition refine(const NatComposition& c,
                      const std::vector<std::int64_t>& Z) {
    require_nat(c, "refine");
    const std::int64_t n = c.weight();
    std::vector<std::int64_t> z = Z;
    std::sort(z.begin(), z.end());
    z.erase(std::unique(z.begin(), z.end()), z.end());
    for (std::int64_t s : z)
        if (s < 1 || s > n - 1)
            throw std::invalid_argument("refinement set must lie in [|c|-1]");
    const std::vector<std::int64_t> d = des(c);
    if (!std::includes(z.begin(), z.end(), d.begin(), d.end()))
        throw std::invalid_argument("refinement set must contain Des(c)");

    const std::vector<int> g = g_fn(c);
    std::vector<ExponentVector> cols;
    std::int64_t block_start = 0;  // 0-based position of the current block
    z.push_back(n);
    for (std::int64_t boundary : z) {
        std::vector<ExtNat> counts(static_cast<std::size_t>(c.m()));
        for (std::int64_t j = block_start; j < boundary; ++j) {
            auto& slot = counts[static_cast<std::size_t>(g[static_cast<std::size_t>(j)] - 1)];
            slot = slot + ExtNat::nat(1);
        }
        cols.emplace_back(Monoid::Nat, std::move(counts));
        block_start = boundary;
    }
    return NatComposition(Monoid::Nat, c.m(), std::move(cols));
}

std::vector<NatComposition> refinements(const NatComposition& c) {
    require_nat(c, "refinements");
    if (c.is_trivial())
        throw std::domain_error("refinements is undefined on the trivial composition");
    const std::int64_t n = c.weight();
    const std::vector<std::int64_t> d = des(c);
    std::vector<std::int64_t> free_pos;
    for (std::int64_t s = 1; s <= n - 1; ++s)
        if (!std::binary_search(d.begin(), d.end(), s)) free_pos.push_back(s);

    std::vector<NatComposition> out;
    const std::size_t count = std::size_t{1} << free_pos.size();
    out.reserve(count);
    for (std::size_t mask = 0; mask < count; ++mask) {
        std::vector<std::int64_t> z = d;
        for (std::size_t b = 0; b < free_pos.size(); ++b)
            if (mask & (std::size_t{1} << b)) z.push_back(free_pos[b]);
        out.push_back(refine(c, z));
    }
    return out;
}

bool leq(const NatComposition& c, const NatComposition& c2) {
    require_nat(c, "the refinement order");
    require_nat(c2, "the refinement order");
    if (c.m() != c2.m()) return false;
    if (c.is_trivial() || c2.is_trivial()) return c == c2;
    if (g_fn(c) != g_fn(c2)) return false;
    const std::vector<std::int64_t> d1 = des(c);
    const std::vector<std::int64_t> d2 = des(c2);
    return std::includes(d2.begin(), d2.end(), d1.begin(), d1.end());
}

bool lt(const NatComposition& c, const NatComposition& c2) {
    return leq(c, c2) && c != c2;
}

namespace {

void compositions_rec(int rest, std::vector<int>& parts,
                      std::vector<Composition>& out) {
    if (rest == 0) {
        out.push_back(Composition{parts});
        return;
    }
    for (int p = 1; p <= rest; ++p) {
        parts.push_back(p);
        compositions_rec(rest - p, parts, out);
        parts.pop_back();
    }
}

void weak_columns_rec(int m, int slot, std::int64_t rest,
                      std::vector<ExtNat>& acc,
                      std::vector<ExponentVector>& out) {
    if (slot == m) {
        if (rest == 0) out.emplace_back(Monoid::Nat, acc);
        return;
    }
    for (std::int64_t v = 0; v <= rest; ++v) {
        acc[static_cast<std::size_t>(slot)] = ExtNat::nat(v);
        weak_columns_rec(m, slot + 1, rest - v, acc, out);
    }
    acc[static_cast<std::size_t>(slot)] = ExtNat();
}

// Nonzero columns in N^m of weight w.
std::vector<ExponentVector> columns_of_weight(int m, std::int64_t w) {
    std::vector<ExponentVector> out;
    std::vector<ExtNat> acc(static_cast<std::size_t>(m));
    weak_columns_rec(m, 0, w, acc, out);
    return out;
}

void nat_compositions_rec(int m, int rest,
                          std::vector<ExponentVector>& cols,
                          std::vector<NatComposition>& out) {
    if (rest == 0) {
        out.emplace_back(Monoid::Nat, m, cols);
        return;
    }
    for (int w = 1; w <= rest; ++w)
        for (const ExponentVector& col : columns_of_weight(m, w)) {
            cols.push_back(col);
            nat_compositions_rec(m, rest - w, cols, out);
            cols.pop_back();
        }
}

}  // namespace

std::vector<Composition> compositions_of(int n) {
    if (n < 0) throw std::invalid_argument("compositions_of needs n >= 0");
    std::vector<Composition> out;
    std::vector<int> parts;
    compositions_rec(n, parts, out);
    return out;
}

std::vector<NatComposition> all_nat_compositions(int m, int n) {
    if (n < 0) throw std::invalid_argument("weight must be nonnegative");
    std::vector<NatComposition> out;
    if (n == 0) {
        out.push_back(NatComposition::trivial(Monoid::Nat, m));
        return out;
    }
    std::vector<ExponentVector> cols;
    nat_compositions_rec(m, n, cols, out);
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace mqsym
