#include "mqsym/rota_baxter.hpp"

#include <stdexcept>

namespace mqsym {

RBWord::RBWord(ExponentVector head_, TensorWord tail_)
    : head(std::move(head_)), tail(std::move(tail_)) {
    if (head.tag() != Monoid::Nat || tail.tag() != Monoid::Nat)
        throw std::invalid_argument("RB words live over nat exponent vectors");
    if (head.m() != tail.m())
        throw std::invalid_argument("RB word head and tail disagree on m");
}

RBWord RBWord::unit(int m) {
    return RBWord(ExponentVector::zero(Monoid::Nat, m),
                  TensorWord(Monoid::Nat, m));
}

std::string RBWord::text() const { return head.text() + " | " + tail.text(); }

std::strong_ordering operator<=>(const RBWord& a, const RBWord& b) {
    if (auto c = a.head <=> b.head; c != 0) return c;
    return a.tail <=> b.tail;
}

namespace {

void require_weak_support(const ExponentVector& v, const char* what) {
    if (v.tag() != Monoid::Weak)
        throw std::invalid_argument(std::string(what) +
                                    " needs weak exponent vectors");
    for (ExtNat e : v.slots())
        if (e.is_zero())
            throw std::invalid_argument(std::string(what) +
                                        " needs every slot in P ∪ {eps}");
}

}  // namespace

SQSymWord::SQSymWord(ExponentVector head_, TensorWord tail_)
    : head(std::move(head_)), tail(std::move(tail_)) {
    require_weak_support(head, "sqsym head");
    if (tail.tag() != Monoid::Weak || head.m() != tail.m())
        throw std::invalid_argument("sqsym word tail from a different alphabet");
    for (const ExponentVector& a : tail.letters())
        require_weak_support(a, "sqsym tail letter");
}

SQSymWord SQSymWord::unit(int m) {
    std::vector<ExtNat> eps(static_cast<std::size_t>(m), ExtNat::eps());
    return SQSymWord(ExponentVector(Monoid::Weak, std::move(eps)),
                     TensorWord(Monoid::Weak, m));
}

std::string SQSymWord::text() const { return head.text() + " | " + tail.text(); }

std::strong_ordering operator<=>(const SQSymWord& a, const SQSymWord& b) {
    if (auto c = a.head <=> b.head; c != 0) return c;
    return a.tail <=> b.tail;
}

LinComb<RBWord> diamond(const RBWord& a, const RBWord& b) {
    const ExponentVector head = ev_product(a.head, b.head);
    return map_keys(
        [&head](const TensorWord& t) { return RBWord(head, t); },
        qshuffle(a.tail, b.tail));
}

LinComb<RBWord> diamond(const LinComb<RBWord>& a, const LinComb<RBWord>& b) {
    return bilinear_extend(
        [](const RBWord& u, const RBWord& v) { return diamond(u, v); }, a, b);
}

LinComb<RBWord> rb_operator(const LinComb<RBWord>& a) {
    return map_keys(
        [](const RBWord& w) {
            return RBWord(ExponentVector::zero(Monoid::Nat, w.m()),
                          w.tail.with_prepended(w.head));
        },
        a);
}

bool check_rb_identity(const LinComb<RBWord>& x, const LinComb<RBWord>& y) {
    const LinComb<RBWord> lhs = diamond(rb_operator(x), rb_operator(y));
    const LinComb<RBWord> rhs = rb_operator(diamond(x, rb_operator(y))) +
                                rb_operator(diamond(rb_operator(x), y)) +
                                rb_operator(diamond(x, y));
    return lhs == rhs;
}

LinComb<SQSymWord> sqsym_product(const SQSymWord& a, const SQSymWord& b) {
    const ExponentVector head = ev_product(a.head, b.head);
    return map_keys(
        [&head](const TensorWord& t) { return SQSymWord(head, t); },
        qshuffle(a.tail, b.tail));
}

LinComb<SQSymWord> sqsym_product(const LinComb<SQSymWord>& a,
                                 const LinComb<SQSymWord>& b) {
    return bilinear_extend(
        [](const SQSymWord& u, const SQSymWord& v) { return sqsym_product(u, v); },
        a, b);
}

LinComb<SQSymWord> sqsym_operator(const LinComb<SQSymWord>& a) {
    return map_keys(
        [](const SQSymWord& w) {
            std::vector<ExtNat> eps(static_cast<std::size_t>(w.m()),
                                    ExtNat::eps());
            return SQSymWord(ExponentVector(Monoid::Weak, std::move(eps)),
                             w.tail.with_prepended(w.head));
        },
        a);
}

RBWord iso_f(const SQSymWord& a) {
    std::vector<ExponentVector> letters;
    letters.reserve(a.tail.letters().size());
    for (const ExponentVector& w : a.tail.letters())
        letters.push_back(ev_theta(w));
    return RBWord(ev_theta(a.head),
                  TensorWord(Monoid::Nat, a.m(), std::move(letters)));
}

LinComb<RBWord> iso_f(const LinComb<SQSymWord>& a) {
    return map_keys([](const SQSymWord& w) { return iso_f(w); }, a);
}

SQSymWord iso_f_inv(const RBWord& a) {
    std::vector<ExponentVector> letters;
    letters.reserve(a.tail.letters().size());
    for (const ExponentVector& w : a.tail.letters())
        letters.push_back(ev_theta_inv(w));
    return SQSymWord(ev_theta_inv(a.head),
                     TensorWord(Monoid::Weak, a.m(), std::move(letters)));
}

bool check_iso(const SQSymWord& a, const SQSymWord& b) {
    if (iso_f(sqsym_product(a, b)) != diamond(iso_f(a), iso_f(b))) return false;
    const LinComb<SQSymWord> single = LinComb<SQSymWord>::single(a);
    return iso_f(sqsym_operator(single)) == rb_operator(iso_f(single));
}

namespace {

// All slotwise splits b + (a - b) = a of a nat vector, with the product of
// binomial coefficients as multiplicity; the polynomial coproduct on k[Y]
// with every generator primitive.
void head_splits_rec(const ExponentVector& a, int slot, std::vector<ExtNat>& lo,
                     std::vector<ExtNat>& hi, Int coeff,
                     std::vector<std::pair<std::pair<ExponentVector, ExponentVector>, Int>>& out) {
    if (slot > a.m()) {
        out.push_back({{ExponentVector(Monoid::Nat, lo),
                        ExponentVector(Monoid::Nat, hi)},
                       coeff});
        return;
    }
    const std::int64_t total = a.slot(slot).value();
    for (std::int64_t v = 0; v <= total; ++v) {
        lo[static_cast<std::size_t>(slot - 1)] = ExtNat::nat(v);
        hi[static_cast<std::size_t>(slot - 1)] = ExtNat::nat(total - v);
        head_splits_rec(a, slot + 1, lo, hi, coeff * binomial(total, v), out);
    }
}

}  // namespace

LinComb<SQSymPair> sqsym_coproduct(const SQSymWord& a) {
    const ExponentVector head_nat = ev_theta(a.head);
    std::vector<std::pair<std::pair<ExponentVector, ExponentVector>, Int>> splits;
    std::vector<ExtNat> lo(static_cast<std::size_t>(a.m()));
    std::vector<ExtNat> hi(static_cast<std::size_t>(a.m()));
    head_splits_rec(head_nat, 1, lo, hi, Int(1), splits);

    const TensorPair tail_splits = coproduct(a.tail);
    LinComb<SQSymPair> out;
    for (const auto& [heads, mult] : splits)
        for (const auto& [tails, c] : tail_splits.terms())
            out.add_term({SQSymWord(ev_theta_inv(heads.first), tails.first),
                          SQSymWord(ev_theta_inv(heads.second), tails.second)},
                         Rational(mult) * c);
    return out;
}

Rational sqsym_counit(const SQSymWord& a) {
    return ev_theta(a.head).is_zero() && a.tail.is_empty() ? Rational(1)
                                                           : Rational(0);
}

LinComb<SQSymWord> sqsym_antipode(const SQSymWord& a) {
    const std::int64_t head_degree = ev_theta(a.head).weight();
    const Rational sign = head_degree % 2 == 0 ? Rational(1) : Rational(-1);
    return map_keys(
        [&a](const TensorWord& t) { return SQSymWord(a.head, t); },
        sign * antipode(a.tail));
}

}  // namespace mqsym
