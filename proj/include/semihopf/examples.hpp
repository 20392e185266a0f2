#pragma once

#include <map>
#include <string>
#include <vector>

#include "semihopf/structures.hpp"

namespace semihopf::examples {

// S itself: one-dimensional Hopf semialgebra.
Hopf trivial(Ring ring);

// Group semialgebra of Z/n with group-like coproduct and inversion antipode.
Hopf group_hopf(long n, Ring ring);

// S[x], Delta(x^i) = x^i (x) x^i, eps = 1.
Bisemialgebra grouplike_poly(Ring ring, long truncation = -1);

// S[x], Delta(x^i) = sum_j C(i,j) x^j (x) x^{i-j}, eps = constant term.
// Over an additively idempotent base this is the primitive structure with
// all binomials collapsing to 1.
Bisemialgebra binomial_poly(Ring ring, long truncation = -1);

// Laurent generators x^z, group-like, antipode x^z -> x^{-z}.
Hopf laurent_hopf(Ring ring, long truncation = -1);

// Words under concatenation; Delta(w) = w (x) w, eps(w) = 1.
Bisemialgebra words_grouplike(std::vector<std::string> alphabet, Ring ring,
                              long truncation = -1);

// Words under concatenation; letters primitive, so Delta unshuffles and
// eps is the indicator of the empty word. This is the tensor semialgebra
// on the free carrier spanned by the alphabet.
Bisemialgebra words_unshuffle(std::vector<std::string> alphabet, Ring ring,
                              long truncation = -1);
Bisemialgebra tensor_semialgebra(std::vector<std::string> generators, long truncation,
                                 Ring ring);

// Words with concatenation product and deconcatenation coproduct. The two
// structures are not compatible; check_bisemialgebra exhibits the witness.
Bisemialgebra haz_words(std::vector<std::string> alphabet, Ring ring, long truncation = -1);

// Divided-power basis e_n: e_p e_q = e_{p+q}, Delta(e_n) = sum e_p (x) e_q.
// A bisemialgebra exactly over additively idempotent bases.
Bisemialgebra divided_powers(Ring ring, long truncation = -1);

// Semicoalgebra on S (+) M for a free carrier M.
Semicoalgebra s_plus_m(std::vector<std::string> generators, Ring ring);

// S (+) A with pointwise product, unity (1,1) and the split coproduct.
// Kept as a negative control: Delta fails to preserve the unit.
Bisemialgebra s_plus_a(const Semialgebra& a);

// Four-generator quantum monoid <1,g,x,y> with g^2=1, null products among
// x,y, gx=yg crossings and the relation x+y ~ 0, on the normal-form basis
// {1,g,x,y,gx,gy}. Requires a base without additive idempotency; over an
// idempotent base the relation collapses x ~ 0 ~ y and construction fails.
Hopf sweedler_monoid(Ring ring);

// Degree-n analogue over a finite table ring containing a primitive n-th
// root of unity q. The y generator is eliminated through the additive
// inverse, leaving the free basis {g^a x^b : 0 <= a,b < n}.
Hopf taft_monoid(long n, const Elem& q, Ring ring);

// Quantum monoid on reduced words over {x, y, y^-1} with xy + yx ~ 0 and
// x^2 ~ 0.
Hopf pareigis_monoid(Ring ring, long truncation = -1);

// S[x] / (b x + x^2) with Delta(x) = x(x)1 + 1(x)x + a(x(x)x), a*b = 2.
Hopf hopf_quotient_poly(Ring ring, const Elem& a, const Elem& b, long truncation = -1);

struct ExampleInfo {
    std::string name;
    std::string params;
    std::string summary;
};
std::vector<ExampleInfo> list_examples();

// Name-based construction for the CLI; throws parameter_error for unknown
// names or invalid parameters.
StructureDesc by_name(const std::string& name, const std::map<std::string, std::string>& params);

}  // namespace semihopf::examples
