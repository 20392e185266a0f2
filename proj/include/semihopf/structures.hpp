#pragma once

#include <string>
#include <variant>

#include "semihopf/linmap.hpp"
#include "semihopf/quotient.hpp"
#include "semihopf/report.hpp"
#include "semihopf/semiring.hpp"

namespace semihopf {

struct DegreeBound {
    long bound = 4;
};

struct Semialgebra {
    Ring ring;
    std::string name;
    BasisDomain basis;
    LinearMap mu;   // on pair labels
    Vec unit;       // image of 1_S
    Quotient quotient;

    const SemiringSpec* R() const { return ring.get(); }
    Vec mul(const Vec& u, const Vec& v) const { return mu.apply(tensor_vec(u, v)); }
};

struct Semicoalgebra {
    Ring ring;
    std::string name;
    BasisDomain basis;
    LinearMap delta;  // basis -> pair vectors
    Functional counit;
    Quotient quotient;

    const SemiringSpec* R() const { return ring.get(); }
};

struct Bisemialgebra {
    Ring ring;
    std::string name;
    BasisDomain basis;
    LinearMap mu;
    Vec unit;
    LinearMap delta;
    Functional counit;
    Quotient quotient;

    const SemiringSpec* R() const { return ring.get(); }
    Semialgebra algebra() const { return {ring, name, basis, mu, unit, quotient}; }
    Semicoalgebra coalgebra() const { return {ring, name, basis, delta, counit, quotient}; }
    Vec mul(const Vec& u, const Vec& v) const { return mu.apply(tensor_vec(u, v)); }
    // Product on the pair carrier: (a(x)b)(a'(x)b') = aa' (x) bb'.
    Vec mul_pair(const Vec& x, const Vec& y) const;
};

struct Hopf {
    Bisemialgebra b;
    LinearMap antipode;

    const SemiringSpec* R() const { return b.R(); }
};

using StructureDesc = std::variant<Semialgebra, Semicoalgebra, Bisemialgebra, Hopf>;

CheckReport check_semialgebra(const Semialgebra& a, DegreeBound d);
CheckReport check_semicoalgebra(const Semicoalgebra& c, DegreeBound d);
CheckReport check_bisemialgebra(const Bisemialgebra& b, DegreeBound d);
CheckReport check_hopf(const Hopf& h, DegreeBound d);

CheckReport check_commutativity(const Semialgebra& a, DegreeBound d);
CheckReport check_cocommutativity(const Semicoalgebra& c, DegreeBound d);

struct QuantumMonoidReport {
    bool is_quantum_monoid = false;
    CheckReport commutativity;
    CheckReport cocommutativity;
};
QuantumMonoidReport classify_quantum_monoid(const Hopf& h, DegreeBound d);

// Convolution on Hom(C, A): (f*g)(c) = sum mu_A(f(c1) (x) g(c2)).
LinearMap convolve(const LinearMap& f, const LinearMap& g, const Semicoalgebra& c,
                   const Semialgebra& a);
Functional convolve(const Functional& f, const Functional& g, const Semicoalgebra& c);

// eta_A o eps_C, the convolution unit.
LinearMap convolution_unit(const Semicoalgebra& c, const Semialgebra& a);

enum class MorphismKind { algebra, coalgebra, bialgebra, hopf };

CheckReport check_algebra_morphism(const LinearMap& f, const Semialgebra& src,
                                   const Semialgebra& tgt, DegreeBound d);
CheckReport check_coalgebra_morphism(const LinearMap& f, const Semicoalgebra& src,
                                     const Semicoalgebra& tgt, DegreeBound d);
CheckReport check_bialgebra_morphism(const LinearMap& f, const Bisemialgebra& src,
                                     const Bisemialgebra& tgt, DegreeBound d);
CheckReport check_hopf_morphism(const LinearMap& f, const Hopf& src, const Hopf& tgt,
                                DegreeBound d);
CheckReport check_morphism(MorphismKind kind, const LinearMap& f, const StructureDesc& src,
                           const StructureDesc& tgt, DegreeBound d);

// Every applicable law for the descriptor, in a fixed order.
std::vector<std::pair<std::string, CheckReport>> full_check(const StructureDesc& s,
                                                            DegreeBound d);

// Well-definedness of all structure maps on a non-free quotient.
CheckReport check_structure_quotient_compat(const StructureDesc& s, DegreeBound d);

}  // namespace semihopf
