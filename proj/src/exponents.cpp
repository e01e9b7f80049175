#include "mqsym/exponents.hpp"

#include <stdexcept>

namespace mqsym {

std::string ExtNat::token() const {
    return is_eps() ? std::string("e") : std::to_string(v_);
}

std::string_view monoid_name(Monoid tag) {
    return tag == Monoid::Nat ? "nat" : "weak";
}

ExponentVector::ExponentVector(Monoid tag, std::vector<ExtNat> exps)
    : tag_(tag), exps_(std::move(exps)) {
    if (exps_.empty())
        throw std::invalid_argument("exponent vector needs m >= 1 slots");
    if (tag_ == Monoid::Nat)
        for (ExtNat e : exps_)
            if (e.is_eps())
                throw std::invalid_argument("eps exponent under the nat monoid");
}

ExponentVector ExponentVector::zero(Monoid tag, int m) {
    return ExponentVector(tag, std::vector<ExtNat>(static_cast<std::size_t>(m)));
}

bool ExponentVector::is_zero() const {
    for (ExtNat e : exps_)
        if (!e.is_zero()) return false;
    return true;
}

std::int64_t ExponentVector::weight() const {
    if (tag_ != Monoid::Nat)
        throw std::domain_error("weight is defined for nat vectors only");
    std::int64_t w = 0;
    for (ExtNat e : exps_) w += e.value();
    return w;
}

std::string ExponentVector::text() const {
    std::string out = "[";
    for (std::size_t i = 0; i < exps_.size(); ++i) {
        if (i) out += ",";
        out += exps_[i].token();
    }
    out += "]";
    return out;
}

std::strong_ordering operator<=>(const ExponentVector& a,
                                 const ExponentVector& b) {
    if (auto c = a.tag_ <=> b.tag_; c != 0) return c;
    if (auto c = a.exps_.size() <=> b.exps_.size(); c != 0) return c;
    for (std::size_t i = 0; i < a.exps_.size(); ++i)
        if (auto c = a.exps_[i] <=> b.exps_[i]; c != 0) return c;
    return std::strong_ordering::equal;
}

ExponentVector ev_product(const ExponentVector& u, const ExponentVector& v) {
    if (u.m() != v.m() || u.tag() != v.tag())
        throw std::invalid_argument("exponent vector product: mismatched alphabets");
    std::vector<ExtNat> out;
    out.reserve(u.slots().size());
    for (std::size_t i = 0; i < u.slots().size(); ++i)
        out.push_back(u.slots()[i] + v.slots()[i]);
    return ExponentVector(u.tag(), std::move(out));
}

bool ev_is_zero(const ExponentVector& u) { return u.is_zero(); }

ExponentVector ev_theta(const ExponentVector& u) {
    std::vector<ExtNat> out;
    out.reserve(u.slots().size());
    for (ExtNat e : u.slots()) out.push_back(e.is_eps() ? ExtNat() : e);
    return ExponentVector(Monoid::Nat, std::move(out));
}

ExponentVector ev_theta_inv(const ExponentVector& u) {
    if (u.tag() != Monoid::Nat)
        throw std::invalid_argument("theta inverse expects a nat vector");
    std::vector<ExtNat> out;
    out.reserve(u.slots().size());
    for (ExtNat e : u.slots()) out.push_back(e.is_zero() ? ExtNat::eps() : e);
    return ExponentVector(Monoid::Weak, std::move(out));
}

ExponentVector ev_to_weak(const ExponentVector& u) {
    if (u.tag() != Monoid::Nat)
        throw std::invalid_argument("ev_to_weak expects a nat vector");
    return ExponentVector(Monoid::Weak, u.slots());
}

namespace {

ExtNat parse_token(std::string_view tok, Monoid tag) {
    if (tok == "e") {
        if (tag == Monoid::Nat)
            throw std::invalid_argument("eps token under the nat monoid");
        return ExtNat::eps();
    }
    if (tok.empty()) throw std::invalid_argument("empty exponent token");
    std::int64_t v = 0;
    for (char ch : tok) {
        if (ch < '0' || ch > '9')
            throw std::invalid_argument("bad exponent token: " + std::string(tok));
        v = v * 10 + (ch - '0');
    }
    return ExtNat::nat(v);
}

}  // namespace

ExponentVector parse_exponent_vector(std::string_view text, Monoid tag) {
    if (text.size() < 2 || text.front() != '[' || text.back() != ']')
        throw std::invalid_argument("exponent vector must look like [1,e,0]");
    std::string_view body = text.substr(1, text.size() - 2);
    std::vector<ExtNat> exps;
    std::size_t start = 0;
    while (start <= body.size()) {
        std::size_t comma = body.find(',', start);
        std::string_view tok = comma == std::string_view::npos
                                   ? body.substr(start)
                                   : body.substr(start, comma - start);
        exps.push_back(parse_token(tok, tag));
        if (comma == std::string_view::npos) break;
        start = comma + 1;
    }
    return ExponentVector(tag, std::move(exps));
}

}  // namespace mqsym
