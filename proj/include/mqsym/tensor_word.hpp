// Tensor words: finite letter sequences over a coefficient-algebra basis of
// exponent vectors. The empty word is the algebra unit. Letters may be the
// zero vector (the monomial 1 of k[Y]); instances that forbid zero letters
// validate at their own boundaries.
#ifndef MQSYM_TENSOR_WORD_HPP
#define MQSYM_TENSOR_WORD_HPP

#include <compare>
#include <string>
#include <vector>

#include "mqsym/exponents.hpp"

namespace mqsym {

class TensorWord {
public:
    // The empty word over the given alphabet.
    TensorWord(Monoid tag, int m);
    TensorWord(Monoid tag, int m, std::vector<ExponentVector> letters);

    Monoid tag() const { return tag_; }
    int m() const { return m_; }
    int length() const { return static_cast<int>(letters_.size()); }
    bool is_empty() const { return letters_.empty(); }

    const ExponentVector& letter(int i) const {  // 1-based
        return letters_[static_cast<std::size_t>(i - 1)];
    }
    const std::vector<ExponentVector>& letters() const { return letters_; }

    TensorWord prefix(int k) const;          // first k letters
    TensorWord suffix_from(int start) const; // letters start..n, 1-based
    TensorWord with_prepended(const ExponentVector& a) const;

    std::string text() const;  // "([1,0],[e,2])", "()" for the unit

    friend std::strong_ordering operator<=>(const TensorWord& a,
                                            const TensorWord& b);
    friend bool operator==(const TensorWord&, const TensorWord&) = default;

private:
    Monoid tag_;
    int m_;
    std::vector<ExponentVector> letters_;
};

TensorWord concat(const TensorWord& a, const TensorWord& b);
int word_length(const TensorWord& a);

}  // namespace mqsym

#endif
