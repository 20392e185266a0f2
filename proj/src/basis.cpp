#include "semihopf/basis.hpp"

#include <algorithm>
#include <tuple>

#include "semihopf/errors.hpp"

namespace semihopf {

BasisId BasisId::atom(std::string name, long degree) {
    BasisId b;
    b.tag_ = Tag::atom;
    b.name_ = std::move(name);
    b.num_ = degree;
    return b;
}

BasisId BasisId::word(std::vector<std::string> letters) {
    BasisId b;
    b.tag_ = Tag::word;
    b.word_ = std::move(letters);
    return b;
}

BasisId BasisId::power(long exponent, std::string symbol) {
    BasisId b;
    b.tag_ = Tag::power;
    b.num_ = exponent;
    b.name_ = std::move(symbol);
    return b;
}

BasisId BasisId::pair(BasisId left, BasisId right) {
    BasisId b;
    b.tag_ = Tag::pair;
    b.left_ = std::make_shared<const BasisId>(std::move(left));
    b.right_ = std::make_shared<const BasisId>(std::move(right));
    return b;
}

BasisId BasisId::dual(BasisId of) {
    BasisId b;
    b.tag_ = Tag::dual;
    b.left_ = std::make_shared<const BasisId>(std::move(of));
    return b;
}

long BasisId::degree() const {
    switch (tag_) {
        case Tag::atom:
            return num_;
        case Tag::word:
            return static_cast<long>(word_.size());
        case Tag::power:
            return num_ >= 0 ? num_ : -num_;
        case Tag::pair:
            return left_->degree() + right_->degree();
        case Tag::dual:
            return left_->degree();
    }
    return 0;
}

std::string BasisId::str() const {
    switch (tag_) {
        case Tag::atom:
            return name_;
        case Tag::word: {
            if (word_.empty()) return "[]";
            bool single_chars = std::all_of(word_.begin(), word_.end(),
                                            [](const std::string& l) { return l.size() == 1; });
            std::string out;
            if (single_chars) {
                for (const auto& l : word_) out += l;
                return out;
            }
            out = "[";
            for (std::size_t i = 0; i < word_.size(); ++i) {
                if (i) out += ",";
                out += word_[i];
            }
            return out + "]";
        }
        case Tag::power:
            if (num_ == 0) return "1";
            if (num_ == 1) return name_;
            return name_ + "^" + std::to_string(num_);
        case Tag::pair:
            return "(" + left_->str() + " (x) " + right_->str() + ")";
        case Tag::dual:
            return left_->str() + "*";
    }
    return "?";
}

bool BasisId::operator==(const BasisId& o) const {
    if (tag_ != o.tag_) return false;
    switch (tag_) {
        case Tag::atom:
            return name_ == o.name_ && num_ == o.num_;
        case Tag::word:
            return word_ == o.word_;
        case Tag::power:
            return num_ == o.num_ && name_ == o.name_;
        case Tag::pair:
            return *left_ == *o.left_ && *right_ == *o.right_;
        case Tag::dual:
            return *left_ == *o.left_;
    }
    return false;
}

bool BasisId::operator<(const BasisId& o) const {
    if (tag_ != o.tag_) return tag_ < o.tag_;
    switch (tag_) {
        case Tag::atom:
            return std::tie(num_, name_) < std::tie(o.num_, o.name_);
        case Tag::word: {
            if (word_.size() != o.word_.size()) return word_.size() < o.word_.size();
            return word_ < o.word_;
        }
        case Tag::power: {
            long da = degree(), db = o.degree();
            if (da != db) return da < db;
            if (num_ != o.num_) return num_ > o.num_;  // positive exponent first
            return name_ < o.name_;
        }
        case Tag::pair: {
            if (*left_ < *o.left_) return true;
            if (*o.left_ < *left_) return false;
            return *right_ < *o.right_;
        }
        case Tag::dual:
            return *left_ < *o.left_;
    }
    return false;
}

std::vector<BasisId> BasisDomain::enumerate(long degree_bound) const {
    long cap = degree_bound;
    if (truncation >= 0) cap = std::min(cap, truncation);
    return up_to(cap);
}

BasisDomain atom_domain(std::vector<BasisId> atoms) {
    BasisDomain d;
    d.finite = true;
    d.up_to = [atoms = std::move(atoms)](long maxdeg) {
        std::vector<BasisId> out;
        for (const auto& a : atoms)
            if (a.degree() <= maxdeg) out.push_back(a);
        return out;
    };
    return d;
}

BasisDomain word_domain(std::vector<std::string> alphabet, long truncation) {
    if (alphabet.empty()) throw parameter_error("word basis needs a nonempty alphabet");
    BasisDomain d;
    d.finite = false;
    d.truncation = truncation;
    d.up_to = [alphabet = std::move(alphabet)](long maxdeg) {
        std::vector<BasisId> out;
        std::vector<std::vector<std::string>> layer{{}};
        out.push_back(BasisId::word({}));
        for (long len = 1; len <= maxdeg; ++len) {
            std::vector<std::vector<std::string>> next;
            for (const auto& w : layer) {
                for (const auto& l : alphabet) {
                    auto w2 = w;
                    w2.push_back(l);
                    out.push_back(BasisId::word(w2));
                    next.push_back(std::move(w2));
                }
            }
            layer = std::move(next);
        }
        return out;
    };
    return d;
}

BasisDomain power_domain(bool laurent, std::string symbol, long truncation) {
    BasisDomain d;
    d.finite = false;
    d.truncation = truncation;
    d.up_to = [laurent, symbol = std::move(symbol)](long maxdeg) {
        std::vector<BasisId> out;
        out.push_back(BasisId::power(0, symbol));
        for (long k = 1; k <= maxdeg; ++k) {
            out.push_back(BasisId::power(k, symbol));
            if (laurent) out.push_back(BasisId::power(-k, symbol));
        }
        return out;
    };
    return d;
}

BasisDomain pair_domain(BasisDomain left, BasisDomain right) {
    BasisDomain d;
    d.finite = left.finite && right.finite;
    if (left.truncation >= 0 || right.truncation >= 0)
        d.truncation = std::max(left.truncation, right.truncation);
    d.up_to = [left = std::move(left), right = std::move(right)](long maxdeg) {
        std::vector<BasisId> out;
        for (const auto& a : left.up_to(maxdeg)) {
            for (const auto& b : right.up_to(maxdeg)) {
                if (a.degree() + b.degree() <= maxdeg)
                    out.push_back(BasisId::pair(a, b));
            }
        }
        return out;
    };
    return d;
}

BasisDomain dual_domain(BasisDomain of) {
    BasisDomain d;
    d.finite = of.finite;
    d.truncation = of.truncation;
    d.up_to = [of = std::move(of)](long maxdeg) {
        std::vector<BasisId> out;
        for (const auto& b : of.up_to(maxdeg)) out.push_back(BasisId::dual(b));
        return out;
    };
    return d;
}

}  // namespace semihopf
