#pragma once

#include "semihopf/structures.hpp"

namespace semihopf::dk {

// Semialgebra carrying a compatible right coaction of B.
struct ComoduleAlgebra {
    Semialgebra a;
    LinearMap coaction;  // basis -> pair(A basis, B basis) vector
};

// Semicoalgebra carrying a compatible right action of B.
struct ModuleCoalgebra {
    Semicoalgebra c;
    LinearMap action;  // pair(C basis, B basis) -> C vector
};

struct DKDatum {
    Bisemialgebra b;
    ComoduleAlgebra a;
    ModuleCoalgebra c;
};

// (B, B, B): A = B coacting by Delta, C = B acted on by mu.
DKDatum self_datum(const Bisemialgebra& b);
// Trivial B = S datum over the given algebra and coalgebra.
DKDatum trivial_datum(const Semialgebra& a, const Semicoalgebra& c, Ring s);

enum class CompatKind { rma, rmc, rca, com_coal };

// The selected compatibility identity plus its unit/counit companion:
//   rma:      (a a') b = sum (a b1)(a' b2),          1_A b = eps(b) 1_A
//   rmc:      Delta(c b) = sum c1 b1 (x) c2 b2,       eps(c b) = eps(c) eps(b)
//   rca:      rho(a a') = sum a0 a'0 (x) a1 a'1,      rho(1_A) = 1_A (x) 1_B
//   com_coal: sum c0_1 (x) c0_2 (x) c1 = sum c1_0 (x) c2_0 (x) c1_1 c2_1,
//             sum eps(c0) c1 = eps(c) 1_B
// rma/rca take a semialgebra with a B-action/-coaction; rmc/com_coal take a
// semicoalgebra. A kind/structure mismatch is a configuration error.
CheckReport check_action_coaction(CompatKind kind, const Semialgebra& a,
                                  const LinearMap& action_or_coaction,
                                  const Bisemialgebra& b, DegreeBound d);
CheckReport check_action_coaction(CompatKind kind, const Semicoalgebra& c,
                                  const LinearMap& action_or_coaction,
                                  const Bisemialgebra& b, DegreeBound d);
// Both compatibilities of a right-right datum: rca for A, rmc for C.
CheckReport check_datum(const DKDatum& datum, DegreeBound d);

// Right module laws for an action of B on the given carrier.
CheckReport check_module_action(const LinearMap& action, const BasisDomain& carrier,
                                const Bisemialgebra& b, DegreeBound d);
// Right comodule laws for a coaction of B.
CheckReport check_comodule_coaction(const LinearMap& coaction, const BasisDomain& carrier,
                                    const Bisemialgebra& b, DegreeBound d);

struct DKModule {
    BasisDomain states;
    LinearMap action;    // pair(state, A basis) -> state vector
    LinearMap coaction;  // state -> pair(state, C basis) vector
};

// rho(m a) = sum m0 a0 (x) m1 a1.
CheckReport check_dk_module(const DKModule& m, const DKDatum& datum, DegreeBound d);

// A #op C* on the pair basis A x C*, with
// (a # f)(b # g) = sum a0 b # (a1 g) * f, unit 1_A # eps_C, where
// (b g)(c) = g(c b) and * is convolution in C*.
Semialgebra smash_product(const DKDatum& datum, DegreeBound truncation);

// a -> a # eps_C; a morphism of semialgebras into the smash product.
LinearMap smash_embedding(const DKDatum& datum, DegreeBound truncation);

// (f . g)(c) = sum f(c2)_0 g(c1 f(c2)_1) on Hom(C, A); unit eta_A o eps_C.
LinearMap dk_hom_product(const LinearMap& f, const LinearMap& g, const DKDatum& datum);
LinearMap dk_hom_unit(const DKDatum& datum);
CheckReport check_dk_hom_associative(const DKDatum& datum, DegreeBound d);

// psi: C (x) A -> A (x) C, c (x) a -> sum a0 (x) c a1.
LinearMap entwining_map(const DKDatum& datum);

// The module compatibility rewritten through psi: both composition routes
// must agree with each other and with check_dk_module's verdict.
CheckReport verify_entwining_equivalence(const DKModule& m, const DKDatum& datum,
                                         DegreeBound d);

}  // namespace semihopf::dk
