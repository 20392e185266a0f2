#pragma once

#include <map>
#include <string>

#include "semihopf/basis.hpp"
#include "semihopf/semiring.hpp"

namespace semihopf {

// Finitely supported scalar combination of basis labels, kept in canonical
// sparse form: no zero coefficients, terms ordered by label.
class Vec {
public:
    Vec() = default;
    explicit Vec(const SemiringSpec* ring) : ring_(ring) {}

    static Vec zero(const SemiringSpec* ring) { return Vec(ring); }
    static Vec single(const SemiringSpec* ring, BasisId b, Elem coeff);
    static Vec basis(const SemiringSpec* ring, BasisId b);

    const SemiringSpec* ring() const { return ring_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t size() const { return terms_.size(); }
    const std::map<BasisId, Elem>& terms() const { return terms_; }

    Elem coeff(const BasisId& b) const;
    void add_term(const BasisId& b, const Elem& c);

    bool operator==(const Vec& o) const;
    bool operator!=(const Vec& o) const { return !(*this == o); }

    std::string str() const;

private:
    const SemiringSpec* ring_ = nullptr;
    std::map<BasisId, Elem> terms_;
};

Vec vec_add(const Vec& u, const Vec& v);
Vec scalar_mul(const Elem& s, const Vec& v);

// Bilinear expansion onto the pair basis: (a,b) gets u(a)*v(b).
Vec tensor_vec(const Vec& u, const Vec& v);

// Swaps the two components of every pair term; an involution.
Vec twist(const Vec& v);

// Reassociates ((a,b),c) terms to (a,(b,c)).
Vec reassoc_right(const Vec& v);

}  // namespace semihopf
