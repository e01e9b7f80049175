#include "mqsym/element_io.hpp"

#include <json.hpp>

#include <cctype>

namespace mqsym {

namespace {

class Parser {
public:
    Parser(std::string_view text, int m, Monoid tag)
        : text_(text), m_(m), tag_(tag) {}

    Element parse() {
        Element out;
        out.m = m_;
        out.tag = tag_;

        skip_ws();
        bool negative = consume_sign(true);
        parse_term(out, negative);
        skip_ws();
        while (pos_ < text_.size()) {
            negative = consume_sign(false);
            parse_term(out, negative);
            skip_ws();
        }
        return out;
    }

private:
    [[noreturn]] void fail(const std::string& message) const {
        throw ParseError(pos_, message);
    }

    void skip_ws() {
        while (pos_ < text_.size() &&
               std::isspace(static_cast<unsigned char>(text_[pos_])))
            ++pos_;
    }

    char peek() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }

    bool consume_sign(bool leading) {
        skip_ws();
        if (peek() == '-') {
            ++pos_;
            skip_ws();
            return true;
        }
        if (peek() == '+') {
            ++pos_;
            skip_ws();
            return false;
        }
        if (!leading) fail("expected '+' or '-' between terms");
        return false;
    }

    Int parse_integer() {
        skip_ws();
        bool neg = false;
        if (peek() == '-') {
            neg = true;
            ++pos_;
        }
        if (!std::isdigit(static_cast<unsigned char>(peek())))
            fail("expected an integer");
        Int v = 0;
        while (std::isdigit(static_cast<unsigned char>(peek()))) {
            v = v * 10 + (text_[pos_] - '0');
            ++pos_;
        }
        return neg ? Int(-v) : v;
    }

    void parse_term(Element& out, bool negative) {
        skip_ws();
        Rational coeff(1);
        if (std::isdigit(static_cast<unsigned char>(peek()))) {
            Int num = parse_integer();
            Int den = 1;
            skip_ws();
            if (peek() == '/') {
                ++pos_;
                den = parse_integer();
                if (den == 0) fail("zero denominator");
            }
            coeff = Rational(num, den);
            skip_ws();
            if (peek() != '*') fail("expected '*' after a coefficient");
            ++pos_;
            skip_ws();
        }
        if (negative) coeff = -coeff;

        Basis basis;
        if (peek() == 'M')
            basis = Basis::M;
        else if (peek() == 'F')
            basis = Basis::F;
        else
            fail("expected basis tag 'M' or 'F'");
        ++pos_;

        MultiComposition key = parse_matrix();
        if (basis == Basis::M)
            out.m_terms.add_term(key, coeff);
        else
            out.f_terms.add_term(key, coeff);
    }

    ExtNat parse_token() {
        skip_ws();
        if (peek() == 'e') {
            if (tag_ == Monoid::Nat)
                fail("'e' is only valid under the weak monoid");
            ++pos_;
            return ExtNat::eps();
        }
        if (!std::isdigit(static_cast<unsigned char>(peek())))
            fail("expected an exponent token");
        std::int64_t v = 0;
        while (std::isdigit(static_cast<unsigned char>(peek()))) {
            v = v * 10 + (text_[pos_] - '0');
            ++pos_;
        }
        return ExtNat::nat(v);
    }

    std::vector<ExtNat> parse_row() {
        skip_ws();
        if (peek() != '[') fail("expected '[' to open a row");
        ++pos_;
        std::vector<ExtNat> row;
        row.push_back(parse_token());
        skip_ws();
        while (peek() == ',') {
            ++pos_;
            row.push_back(parse_token());
            skip_ws();
        }
        if (peek() != ']') fail("expected ']' to close a row");
        ++pos_;
        return row;
    }

    MultiComposition parse_matrix() {
        skip_ws();
        const std::size_t open = pos_;
        if (peek() != '[') fail("expected '[' to open a matrix");
        ++pos_;
        skip_ws();
        if (peek() == ']') {  // the trivial composition
            ++pos_;
            return MultiComposition::trivial(tag_, m_);
        }

        std::vector<std::vector<ExtNat>> rows;
        pos_ = open + 1;
        rows.push_back(parse_row());
        skip_ws();
        while (peek() == ',') {
            ++pos_;
            rows.push_back(parse_row());
            skip_ws();
        }
        if (peek() != ']') fail("expected ']' to close the matrix");
        ++pos_;

        if (static_cast<int>(rows.size()) != m_)
            fail("matrix must have exactly m = " + std::to_string(m_) + " rows");
        const std::size_t k = rows.front().size();
        for (const auto& row : rows)
            if (row.size() != k) fail("matrix rows differ in length");

        std::vector<ExponentVector> cols;
        for (std::size_t i = 0; i < k; ++i) {
            std::vector<ExtNat> col;
            col.reserve(rows.size());
            for (const auto& row : rows) col.push_back(row[i]);
            ExponentVector column(tag_, std::move(col));
            if (column.is_zero()) fail("matrix has a zero column");
            cols.push_back(std::move(column));
        }
        return MultiComposition(tag_, m_, std::move(cols));
    }

    std::string_view text_;
    int m_;
    Monoid tag_;
    std::size_t pos_ = 0;
};

nlohmann::json matrix_json(const MultiComposition& key) {
    nlohmann::json rows = nlohmann::json::array();
    for (int r = 1; r <= key.m(); ++r) {
        nlohmann::json row = nlohmann::json::array();
        for (int i = 1; i <= key.length(); ++i) {
            ExtNat e = key.column(i).slot(r);
            if (e.is_eps())
                row.push_back("e");
            else
                row.push_back(e.value());
        }
        rows.push_back(std::move(row));
    }
    return rows;
}

const char* basis_name(Basis basis) { return basis == Basis::M ? "M" : "F"; }

}  // namespace

Element parse_element(std::string_view text, int m, Monoid tag) {
    return Parser(text, m, tag).parse();
}

MElement to_m(const Element& e) {
    MElement out;
    out.terms = e.m_terms;
    FElement f{e.f_terms};
    out.terms += f_to_m(f).terms;
    return out;
}

std::string basis_term_text(Basis basis, const MultiComposition& key) {
    return basis_name(basis) + key.matrix_text();
}

std::string element_text(Basis basis, const LinComb<MultiComposition>& terms) {
    return lincomb_text(terms, [basis](const MultiComposition& key) {
        return basis_term_text(basis, key);
    });
}

std::string element_text(const Element& e) {
    if (e.m_terms.is_zero()) return element_text(Basis::F, e.f_terms);
    if (e.f_terms.is_zero()) return element_text(Basis::M, e.m_terms);
    std::string out = element_text(Basis::M, e.m_terms);
    const std::string f = element_text(Basis::F, e.f_terms);
    if (f.rfind('-', 0) == 0)
        out += " - " + f.substr(1);
    else
        out += " + " + f;
    return out;
}

std::string pair_text(Basis basis, const LinComb<CompositionPair>& terms) {
    return lincomb_text(terms, [basis](const CompositionPair& p) {
        return basis_term_text(basis, p.first) + " (x) " +
               basis_term_text(basis, p.second);
    });
}

std::string element_json_text(Basis basis,
                              const LinComb<MultiComposition>& terms) {
    nlohmann::json records = nlohmann::json::array();
    for (const auto& [key, coeff] : terms.terms())
        records.push_back({{"coefficient", rational_text(coeff)},
                           {"basis", basis_name(basis)},
                           {"matrix", matrix_json(key)}});
    return records.dump();
}

std::string pair_json_text(Basis basis, const LinComb<CompositionPair>& terms) {
    nlohmann::json records = nlohmann::json::array();
    for (const auto& [key, coeff] : terms.terms())
        records.push_back({{"coefficient", rational_text(coeff)},
                           {"basis", basis_name(basis)},
                           {"matrix", matrix_json(key.first)},
                           {"right_matrix", matrix_json(key.second)}});
    return records.dump();
}

std::string series_json_text(const TruncatedSeries& s) {
    nlohmann::json records = nlohmann::json::array();
    for (const auto& [mono, coeff] : s.terms.terms()) {
        nlohmann::json factors = nlohmann::json::array();
        for (const auto& [key, e] : mono.factors()) {
            nlohmann::json factor = {{"row", key.second}, {"pos", key.first}};
            if (e.is_eps())
                factor["exp"] = "e";
            else
                factor["exp"] = e.value();
            factors.push_back(std::move(factor));
        }
        records.push_back({{"coefficient", rational_text(coeff)},
                           {"monomial", std::move(factors)}});
    }
    nlohmann::json out = {{"truncation", s.truncation},
                          {"m", s.m},
                          {"monoid", std::string(monoid_name(s.tag))},
                          {"terms", std::move(records)}};
    return out.dump();
}

}  // namespace mqsym
