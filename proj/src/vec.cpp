#include "semihopf/vec.hpp"

#include <sstream>

#include "semihopf/errors.hpp"

namespace semihopf {

namespace {
void require_same_ring(const Vec& u, const Vec& v) {
    if (u.ring() != v.ring())
        throw type_error("vectors belong to different semirings");
}
}  // namespace

Vec Vec::single(const SemiringSpec* ring, BasisId b, Elem coeff) {
    Vec v(ring);
    v.add_term(b, coeff);
    return v;
}

Vec Vec::basis(const SemiringSpec* ring, BasisId b) {
    return single(ring, std::move(b), ring->one());
}

Elem Vec::coeff(const BasisId& b) const {
    auto it = terms_.find(b);
    return it == terms_.end() ? ring_->zero() : it->second;
}

void Vec::add_term(const BasisId& b, const Elem& c) {
    if (ring_->is_zero(c)) return;
    auto it = terms_.find(b);
    if (it == terms_.end()) {
        terms_.emplace(b, c);
    } else {
        it->second = ring_->add(it->second, c);
        if (ring_->is_zero(it->second)) terms_.erase(it);
    }
}

bool Vec::operator==(const Vec& o) const {
    require_same_ring(*this, o);
    return terms_ == o.terms_;
}

std::string Vec::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [b, c] : terms_) {
        if (!first) os << " + ";
        first = false;
        if (!ring_->is_one(c)) os << ring_->format(c) << "*";
        os << b.str();
    }
    return os.str();
}

Vec vec_add(const Vec& u, const Vec& v) {
    require_same_ring(u, v);
    Vec out = u;
    for (const auto& [b, c] : v.terms()) out.add_term(b, c);
    return out;
}

Vec scalar_mul(const Elem& s, const Vec& v) {
    Vec out(v.ring());
    for (const auto& [b, c] : v.terms()) out.add_term(b, v.ring()->mul(s, c));
    return out;
}

Vec tensor_vec(const Vec& u, const Vec& v) {
    require_same_ring(u, v);
    Vec out(u.ring());
    for (const auto& [a, ca] : u.terms())
        for (const auto& [b, cb] : v.terms())
            out.add_term(BasisId::pair(a, b), u.ring()->mul(ca, cb));
    return out;
}

Vec twist(const Vec& v) {
    Vec out(v.ring());
    for (const auto& [b, c] : v.terms()) {
        if (!b.is_pair()) throw type_error("twist needs a pair-basis vector");
        out.add_term(BasisId::pair(b.right(), b.left()), c);
    }
    return out;
}

Vec reassoc_right(const Vec& v) {
    Vec out(v.ring());
    for (const auto& [b, c] : v.terms()) {
        if (!b.is_pair() || !b.left().is_pair())
            throw type_error("reassoc_right needs ((a,b),c) terms");
        out.add_term(
            BasisId::pair(b.left().left(), BasisId::pair(b.left().right(), b.right())), c);
    }
    return out;
}

}  // namespace semihopf
