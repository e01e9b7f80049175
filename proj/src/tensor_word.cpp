#include "mqsym/tensor_word.hpp"

#include <stdexcept>

namespace mqsym {

TensorWord::TensorWord(Monoid tag, int m) : tag_(tag), m_(m) {
    if (m < 1) throw std::invalid_argument("tensor word needs m >= 1");
}

TensorWord::TensorWord(Monoid tag, int m, std::vector<ExponentVector> letters)
    : tag_(tag), m_(m), letters_(std::move(letters)) {
    if (m < 1) throw std::invalid_argument("tensor word needs m >= 1");
    for (const ExponentVector& a : letters_)
        if (a.m() != m_ || a.tag() != tag_)
            throw std::invalid_argument("tensor word letter from a different alphabet");
}

TensorWord TensorWord::prefix(int k) const {
    return TensorWord(tag_, m_,
                      std::vector<ExponentVector>(letters_.begin(),
                                                  letters_.begin() + k));
}

TensorWord TensorWord::suffix_from(int start) const {
    return TensorWord(tag_, m_,
                      std::vector<ExponentVector>(letters_.begin() + (start - 1),
                                                  letters_.end()));
}

TensorWord TensorWord::with_prepended(const ExponentVector& a) const {
    if (a.m() != m_ || a.tag() != tag_)
        throw std::invalid_argument("prepended letter from a different alphabet");
    std::vector<ExponentVector> out;
    out.reserve(letters_.size() + 1);
    out.push_back(a);
    out.insert(out.end(), letters_.begin(), letters_.end());
    return TensorWord(tag_, m_, std::move(out));
}

std::string TensorWord::text() const {
    std::string out = "(";
    for (std::size_t i = 0; i < letters_.size(); ++i) {
        if (i) out += ",";
        out += letters_[i].text();
    }
    out += ")";
    return out;
}

std::strong_ordering operator<=>(const TensorWord& a, const TensorWord& b) {
    if (auto c = a.tag_ <=> b.tag_; c != 0) return c;
    if (auto c = a.m_ <=> b.m_; c != 0) return c;
    if (auto c = a.letters_.size() <=> b.letters_.size(); c != 0) return c;
    for (std::size_t i = 0; i < a.letters_.size(); ++i)
        if (auto c = a.letters_[i] <=> b.letters_[i]; c != 0) return c;
    return std::strong_ordering::equal;
}

TensorWord concat(const TensorWord& a, const TensorWord& b) {
    if (a.m() != b.m() || a.tag() != b.tag())
        throw std::invalid_argument("concat: mismatched alphabets");
    std::vector<ExponentVector> out = a.letters();
    out.insert(out.end(), b.letters().begin(), b.letters().end());
    return TensorWord(a.tag(), a.m(), std::move(out));
}

int word_length(const TensorWord& a) { return a.length(); }

}  // namespace mqsym
