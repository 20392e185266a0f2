#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <memory>
#include <string>
#include <vector>

namespace semihopf {

// Symbolic basis label: an atom with an explicit degree, a word over an
// alphabet (degree = length), an integer power of a distinguished generator
// (degree = |exponent|), a tensor pair (degree = sum), or the dual of a label.
class BasisId {
public:
    enum class Tag : uint8_t { atom, word, power, pair, dual };

    static BasisId atom(std::string name, long degree = 0);
    static BasisId word(std::vector<std::string> letters);
    static BasisId power(long exponent, std::string symbol = "x");
    static BasisId pair(BasisId left, BasisId right);
    static BasisId dual(BasisId of);

    Tag tag() const { return tag_; }
    bool is_pair() const { return tag_ == Tag::pair; }

    const std::string& atom_name() const { return name_; }
    const std::vector<std::string>& letters() const { return word_; }
    long exponent() const { return num_; }
    const std::string& power_symbol() const { return name_; }
    const BasisId& left() const { return *left_; }
    const BasisId& right() const { return *right_; }
    const BasisId& dual_of() const { return *left_; }

    long degree() const;
    std::string str() const;

    bool operator==(const BasisId& o) const;
    bool operator!=(const BasisId& o) const { return !(*this == o); }
    bool operator<(const BasisId& o) const;

private:
    Tag tag_ = Tag::atom;
    std::string name_;
    long num_ = 0;
    std::vector<std::string> word_;
    std::shared_ptr<const BasisId> left_, right_;
};

// Enumerable family of basis labels, ordered deterministically (by degree,
// then construction order: atoms as declared, words length-lex in the given
// alphabet order, powers 0,1,-1,2,-2,...).
struct BasisDomain {
    std::function<std::vector<BasisId>(long)> up_to;  // labels of degree <= arg
    bool finite = false;
    long truncation = -1;  // enumeration cap for infinite families; -1 = none

    std::vector<BasisId> enumerate(long degree_bound) const;
};

BasisDomain atom_domain(std::vector<BasisId> atoms);
BasisDomain word_domain(std::vector<std::string> alphabet, long truncation = -1);
BasisDomain power_domain(bool laurent, std::string symbol = "x", long truncation = -1);
BasisDomain pair_domain(BasisDomain left, BasisDomain right);
BasisDomain dual_domain(BasisDomain of);

}  // namespace semihopf
