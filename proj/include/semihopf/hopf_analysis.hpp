#pragma once

#include <optional>
#include <vector>

#include "semihopf/structures.hpp"

namespace semihopf {

enum class Side { left, right };

inline constexpr uint64_t kDefaultSearchBudget = 1ULL << 20;

struct IntegralOnReport {
    bool is_integral = false;
    bool is_total = false;
    CheckReport detail;
};

// Left: sum b1 t(b2) = t(b) 1_B on basis of degree <= d; right is the mirror.
// Total additionally means t(1_B) = 1_S.
IntegralOnReport verify_integral_on(const Functional& t, const Bisemialgebra& b, Side side,
                                    DegreeBound d);

// f * t = f(1_B) t for seeded sample functionals f.
CheckReport verify_integral_ideal_property(const Functional& t, const Bisemialgebra& b,
                                           DegreeBound d, int sample_functionals,
                                           uint64_t seed = 0xabcdef1234567890ULL);

struct FoundFunctional {
    Functional f;
    std::vector<std::pair<BasisId, Elem>> table;  // on the truncated basis, in order
    bool total = false;
    std::string str() const;
};

// All functionals on the degree-<= d basis satisfying the integral condition,
// in lexicographic enumeration order. Requires a finite base semiring and
// |S|^n <= budget.
std::vector<FoundFunctional> search_integrals_on(const Bisemialgebra& b, Side side,
                                                 DegreeBound d,
                                                 uint64_t budget = kDefaultSearchBudget);

struct IntegralInReport {
    bool is_integral = false;
    bool is_normalized = false;
};

// Left: b w = eps(b) w for all basis b of degree <= d; normalized: eps(w) = 1.
IntegralInReport verify_integral_in(const Vec& w, const Bisemialgebra& b, Side side,
                                    DegreeBound d);
std::vector<std::pair<Vec, IntegralInReport>> search_integrals_in(
    const Bisemialgebra& b, Side side, DegreeBound d, uint64_t budget = kDefaultSearchBudget);

struct SubsetDesc {
    bool enumerated = false;
    std::vector<Vec> elements;    // enumeration order
    std::vector<Vec> generators;  // greedy minimal generating subset
    std::function<bool(const Vec&)> contains;
};

// Elements m with action(b (x) m) = eps(b) m for all basis b of degree <= d.
SubsetDesc invariants(const LinearMap& action, const Bisemialgebra& b,
                      const BasisDomain& carrier, DegreeBound d,
                      uint64_t budget = kDefaultSearchBudget);

// Elements m with coaction(m) = m (x) 1_B.
SubsetDesc coinvariants(const LinearMap& coaction, const Bisemialgebra& b,
                        const BasisDomain& carrier, DegreeBound d,
                        uint64_t budget = kDefaultSearchBudget);

// gamma(a (x) b) = sum a b1 (x) b2 and its antipode-twisted inverse
// omega(a (x) b) = sum a a(b1) (x) b2.
LinearMap gamma_map(const Bisemialgebra& b);
LinearMap omega_map(const Hopf& h);
CheckReport verify_gamma_iso(const Hopf& h, DegreeBound d);

// Exhaustively enumerates the span of gamma images of basis pairs of degree
// <= d over a finite semiring and reports whether target stays outside.
CheckReport gamma_image_omits(const Bisemialgebra& b, const Vec& target, DegreeBound d,
                              uint64_t budget = kDefaultSearchBudget);

struct HopfModule {
    Bisemialgebra over;
    BasisDomain states;
    LinearMap action;    // pair(state, carrier basis) -> state vector
    LinearMap coaction;  // state -> pair(state, carrier basis) vector
};

// Right module + right comodule laws, then the compatibility
// rho(m b) = sum m0 b1 (x) m1 b2.
CheckReport check_hopf_module(const HopfModule& m, DegreeBound d);

// M (+ its coinvariants) as the free carrier: psi(m (x) b) = m b.
LinearMap psi_map(const HopfModule& m);

// psi composed with the three-leg candidate inverse
// m -> sum (m0 a(m1)) (x) m2 must be the identity on the enumerated carrier,
// and the inverse composed with psi the identity on generator (x) basis.
CheckReport verify_fundamental(const HopfModule& m, const Hopf& h, DegreeBound d,
                               uint64_t budget = kDefaultSearchBudget);

// B acting and coacting on itself.
HopfModule regular_hopf_module(const Bisemialgebra& b);
// N (x)^a B: diagonal action through Delta, coaction id (x) Delta.
HopfModule diagonal_tensor_module(const Bisemialgebra& b);

// Transpose structure on the dual basis of a finite free carrier.
Bisemialgebra dual_bisemialgebra(const Bisemialgebra& b);
Hopf dual_hopf(const Hopf& h);
// b -> b** into the double dual.
LinearMap double_dual_embedding(const Bisemialgebra& b);

struct FoundMap {
    LinearMap map;
    std::vector<std::pair<BasisId, Vec>> table;
    std::string str() const;
};

// All basis assignments a with sum a(h1) h2 = eps(h) 1 = sum h1 a(h2) on
// basis of degree <= d, values restricted to the degree-<= d span.
std::vector<FoundMap> search_antipode(const Bisemialgebra& b, DegreeBound d,
                                      uint64_t budget = kDefaultSearchBudget);

// e in H (x) H with h e = e h for all basis h and mu(e) = 1.
std::vector<Vec> search_separability_idempotent(const Hopf& h, DegreeBound d,
                                                uint64_t budget = kDefaultSearchBudget);

struct FoundForm {
    std::vector<std::pair<BasisId, Elem>> table;  // on the pair basis
    std::string str() const;
};

// delta: H (x) H -> S with delta o Delta = eps and
// (id (x) delta)(Delta (x) id) = (delta (x) id)(id (x) Delta).
std::vector<FoundForm> search_coseparability_form(const Hopf& h, DegreeBound d,
                                                  uint64_t budget = kDefaultSearchBudget);

}  // namespace semihopf
