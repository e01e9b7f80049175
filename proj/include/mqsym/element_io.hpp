// Parsing and canonical printing of basis-tagged elements:
//   element := term (('+'|'-') term)*
//   term    := [coef '*'] ('M'|'F') matrix
//   coef    := integer | integer '/' integer
//   matrix  := '[' ']' | '[' row (',' row)* ']'
//   row     := '[' token (',' token)* ']'     (one row per alphabet letter)
//   token   := 'e' | decimal integer          ('e' only under the weak monoid)
#ifndef MQSYM_ELEMENT_IO_HPP
#define MQSYM_ELEMENT_IO_HPP

#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>

#include "mqsym/bases.hpp"
#include "mqsym/compositions.hpp"
#include "mqsym/lincomb.hpp"
#include "mqsym/realization.hpp"

namespace mqsym {

enum class Basis { M, F };

// A parsed input element; terms keep the basis they were written in.
struct Element {
    int m = 2;
    Monoid tag = Monoid::Nat;
    LinComb<MultiComposition> m_terms;
    LinComb<MultiComposition> f_terms;

    friend bool operator==(const Element&, const Element&) = default;
};

class ParseError : public std::runtime_error {
public:
    ParseError(std::size_t position, const std::string& message)
        : std::runtime_error(message + " (at offset " +
                             std::to_string(position) + ")"),
          position_(position) {}
    std::size_t position() const { return position_; }

private:
    std::size_t position_;
};

Element parse_element(std::string_view text, int m, Monoid tag);

// Everything re-expressed in the M basis (F terms expanded over refinements).
MElement to_m(const Element& e);

std::string basis_term_text(Basis basis, const MultiComposition& key);
std::string element_text(Basis basis, const LinComb<MultiComposition>& terms);
std::string element_text(const Element& e);

using CompositionPair = std::pair<MultiComposition, MultiComposition>;
std::string pair_text(Basis basis, const LinComb<CompositionPair>& terms);

// Structured output: one record per term, coefficients as exact "p/q"
// strings, matrices row-major with naturals as numbers and ε as "e".
std::string element_json_text(Basis basis,
                              const LinComb<MultiComposition>& terms);
std::string pair_json_text(Basis basis, const LinComb<CompositionPair>& terms);
std::string series_json_text(const TruncatedSeries& s);

}  // namespace mqsym

#endif
