#pragma once

#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <unordered_map>
#include <utility>
#include <vector>

#include "semihopf/basis.hpp"
#include "semihopf/linmap.hpp"
#include "semihopf/report.hpp"
#include "semihopf/vec.hpp"

namespace semihopf {

// Signed combination over a basis; the value space of Z-linear normal forms.
struct ZVec {
    std::map<BasisId, mpz_class> terms;
    void add(const BasisId& b, const mpz_class& c);
    bool operator==(const ZVec& o) const { return terms == o.terms; }
    std::string str() const;
};

// Z-linear rewriting of a single basis label. Extended linearly to vectors
// and componentwise to tensor powers, equality of normal forms decides the
// semimodule congruence generated by the quotient relations when the base
// semiring embeds in its difference group (the naturals here).
using ZNormalForm = std::function<ZVec(const BasisId&)>;

// Decision procedure for quotient equality over a finite, fully enumerated
// vector carrier, produced by congruence_closure below.
class CongruenceOracle {
public:
    CongruenceOracle(const SemiringSpec* ring, std::vector<BasisId> basis,
                     std::vector<std::size_t> cls, std::vector<Elem> carrier_elems);
    bool eq(const Vec& u, const Vec& v) const;
    std::size_t class_count() const { return class_count_; }
    std::size_t class_of(const Vec& v) const;

private:
    std::size_t encode(const Vec& v) const;
    const SemiringSpec* ring_;
    std::vector<BasisId> basis_;
    std::vector<Elem> elems_;
    std::unordered_map<std::string, std::size_t> elem_index_;
    std::vector<std::size_t> cls_;
    std::size_t class_count_ = 0;
};

// Smallest equivalence on the full finite carrier containing the generator
// pairs and closed under translation and scalar action, by union-find
// saturation. Requires |S|^|basis| <= guard.
CongruenceOracle congruence_closure(const SemiringSpec* ring, std::vector<BasisId> basis,
                                    const std::vector<std::pair<Vec, Vec>>& generators,
                                    uint64_t guard = 65536);

enum class QuotientMode { free, normalizer, finite_congruence };

struct Quotient {
    QuotientMode mode = QuotientMode::free;
    std::function<Vec(const Vec&)> normalizer;      // idempotent canonicalizer
    std::vector<std::pair<Vec, Vec>> generators;    // relation pairs (lhs ~ rhs)
    std::optional<ZNormalForm> znf;                 // exact signed normal form
    std::shared_ptr<const CongruenceOracle> oracle; // saturated finite carrier
    // nonempty when the normalizer is the builtin null-pair min-subtraction;
    // kept so the quotient can be serialized and rebuilt
    std::vector<std::pair<BasisId, BasisId>> null_pairs;
    uint64_t guard = 65536;

    bool is_free() const { return mode == QuotientMode::free; }

    static Quotient free_quotient() { return {}; }
    static Quotient with_normalizer(std::function<Vec(const Vec&)> n,
                                    std::vector<std::pair<Vec, Vec>> gens = {},
                                    std::optional<ZNormalForm> z = std::nullopt);
    static Quotient finite(std::vector<std::pair<Vec, Vec>> gens, uint64_t guard = 65536);
};

// Equality in the quotient carrier (arity 1) or in its tensor powers
// (right-nested pairs, arity 2 or 3). Missing equality for the requested
// arity raises config_error.
class EqOracle {
public:
    EqOracle() = default;
    EqOracle(std::function<bool(const Vec&, const Vec&)> eq) : eq_(std::move(eq)) {}
    bool operator()(const Vec& u, const Vec& v) const { return eq_(u, v); }

private:
    std::function<bool(const Vec&, const Vec&)> eq_ = [](const Vec& u, const Vec& v) {
        return u == v;
    };
};

EqOracle carrier_eq(const Quotient& q, const SemiringSpec* ring, const BasisDomain& basis);
EqOracle tensor_eq(const Quotient& q, const SemiringSpec* ring, int arity);

// Subtracts min(u_coeff, v_coeff) from each listed coordinate pair; the
// canonical form for null relations u + v ~ 0 over the naturals.
std::function<Vec(const Vec&)> min_subtract_normalizer(
    std::vector<std::pair<BasisId, BasisId>> pairs);

// Signed substitution second |-> -first for each pair, extended linearly.
ZNormalForm null_pair_znf(std::vector<std::pair<BasisId, BasisId>> pairs);

// Tests idempotency, zero preservation, additivity and scalar compatibility
// of q's normalizer on seeded samples.
CheckReport check_normalizer(const Quotient& q, const SemiringSpec* ring,
                             const std::vector<BasisId>& basis, int samples,
                             uint64_t seed = 0x9e3779b97f4a7c15ULL);

enum class MapArity { unary, binary };

// Well-definedness of a structure map on the quotient: for each generator
// pair and probe element, images must be quotient-equal in the target.
CheckReport check_quotient_compat(const LinearMap& map, const Quotient& q,
                                  const SemiringSpec* ring,
                                  const std::vector<BasisId>& probe_basis, MapArity arity,
                                  const EqOracle& target_eq);

}  // namespace semihopf
