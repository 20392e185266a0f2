#pragma once

#include <functional>
#include <map>

#include "semihopf/vec.hpp"

namespace semihopf {

// Basis-indexed assignment extended linearly. The assignment must be pure:
// kernels evaluate it concurrently.
class LinearMap {
public:
    LinearMap() = default;
    LinearMap(const SemiringSpec* ring, std::function<Vec(const BasisId&)> at)
        : ring_(ring), at_(std::move(at)) {}

    static LinearMap from_table(const SemiringSpec* ring, std::map<BasisId, Vec> table);

    const SemiringSpec* ring() const { return ring_; }
    bool empty() const { return !at_; }

    Vec at(const BasisId& b) const;
    Vec apply(const Vec& v) const;

private:
    const SemiringSpec* ring_ = nullptr;
    std::function<Vec(const BasisId&)> at_;
};

// Scalar-valued linear map (an element of Hom_S(C, S)).
class Functional {
public:
    Functional() = default;
    Functional(const SemiringSpec* ring, std::function<Elem(const BasisId&)> at)
        : ring_(ring), at_(std::move(at)) {}

    static Functional from_table(const SemiringSpec* ring, std::map<BasisId, Elem> table,
                                 bool zero_elsewhere = true);
    static Functional zero(const SemiringSpec* ring);
    static Functional indicator(const SemiringSpec* ring, BasisId b);

    const SemiringSpec* ring() const { return ring_; }
    bool empty() const { return !at_; }

    Elem at(const BasisId& b) const;
    Elem apply(const Vec& v) const;

private:
    const SemiringSpec* ring_ = nullptr;
    std::function<Elem(const BasisId&)> at_;
};

LinearMap identity_map(const SemiringSpec* ring);
LinearMap compose(const LinearMap& f, const LinearMap& g);  // f after g
LinearMap tensor_map(const LinearMap& f, const LinearMap& g);
Vec lin_apply(const LinearMap& f, const Vec& v);

// (eps (x) id) and (id (x) eps) collapsed through the unit isomorphisms.
Vec apply_counit_left(const Functional& eps, const Vec& pair_vec);
Vec apply_counit_right(const Functional& eps, const Vec& pair_vec);

}  // namespace semihopf
