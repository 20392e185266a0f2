#include "semihopf/linmap.hpp"

#include "semihopf/errors.hpp"

namespace semihopf {

LinearMap LinearMap::from_table(const SemiringSpec* ring, std::map<BasisId, Vec> table) {
    return LinearMap(ring, [table = std::move(table)](const BasisId& b) {
        auto it = table.find(b);
        if (it == table.end()) throw basis_domain_error(b.str());
        return it->second;
    });
}

Vec LinearMap::at(const BasisId& b) const {
    if (!at_) throw config_error("linear map has no assignment");
    return at_(b);
}

Vec LinearMap::apply(const Vec& v) const {
    Vec out(v.ring());
    for (const auto& [b, c] : v.terms()) out = vec_add(out, scalar_mul(c, at(b)));
    return out;
}

Functional Functional::from_table(const SemiringSpec* ring, std::map<BasisId, Elem> table,
                                  bool zero_elsewhere) {
    return Functional(ring, [ring, table = std::move(table),
                             zero_elsewhere](const BasisId& b) -> Elem {
        auto it = table.find(b);
        if (it == table.end()) {
            if (zero_elsewhere) return ring->zero();
            throw basis_domain_error(b.str());
        }
        return it->second;
    });
}

Functional Functional::zero(const SemiringSpec* ring) {
    return Functional(ring, [ring](const BasisId&) { return ring->zero(); });
}

Functional Functional::indicator(const SemiringSpec* ring, BasisId b) {
    return Functional(ring, [ring, b = std::move(b)](const BasisId& x) {
        return x == b ? ring->one() : ring->zero();
    });
}

Elem Functional::at(const BasisId& b) const {
    if (!at_) throw config_error("functional has no assignment");
    return at_(b);
}

Elem Functional::apply(const Vec& v) const {
    Elem acc = ring_->zero();
    for (const auto& [b, c] : v.terms()) acc = ring_->add(acc, ring_->mul(c, at(b)));
    return acc;
}

LinearMap identity_map(const SemiringSpec* ring) {
    return LinearMap(ring, [ring](const BasisId& b) { return Vec::basis(ring, b); });
}

LinearMap compose(const LinearMap& f, const LinearMap& g) {
    return LinearMap(f.ring(), [f, g](const BasisId& b) { return f.apply(g.at(b)); });
}

LinearMap tensor_map(const LinearMap& f, const LinearMap& g) {
    return LinearMap(f.ring(), [f, g](const BasisId& b) {
        if (!b.is_pair()) throw type_error("tensor_map needs pair-basis input");
        return tensor_vec(f.at(b.left()), g.at(b.right()));
    });
}

Vec lin_apply(const LinearMap& f, const Vec& v) { return f.apply(v); }

Vec apply_counit_left(const Functional& eps, const Vec& pair_vec) {
    Vec out(pair_vec.ring());
    const auto* ring = pair_vec.ring();
    for (const auto& [b, c] : pair_vec.terms()) {
        if (!b.is_pair()) throw type_error("counit leg needs pair-basis input");
        out.add_term(b.right(), ring->mul(c, eps.at(b.left())));
    }
    return out;
}

Vec apply_counit_right(const Functional& eps, const Vec& pair_vec) {
    Vec out(pair_vec.ring());
    const auto* ring = pair_vec.ring();
    for (const auto& [b, c] : pair_vec.terms()) {
        if (!b.is_pair()) throw type_error("counit leg needs pair-basis input");
        out.add_term(b.left(), ring->mul(c, eps.at(b.right())));
    }
    return out;
}

}  // namespace semihopf
