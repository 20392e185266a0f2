#pragma once

#include <gmpxx.h>

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "semihopf/errors.hpp"
#include "semihopf/report.hpp"

namespace semihopf {

// Elements are carried as arbitrary-precision integers regardless of the
// semiring: naturals use the value itself, booleans 0/1, the min/max chains
// use -1 as the bottom element, subset lattices a bitmask, and finite table
// semirings an index into their carrier.
using Elem = mpz_class;

enum class SemiringKind { naturals, boolean, xn, subset_lattice, table };

class SemiringSpec {
public:
    SemiringKind kind() const { return kind_; }
    const std::string& name() const { return name_; }
    bool additively_idempotent() const { return add_idem_; }
    long param() const { return param_; }

    Elem add(const Elem& a, const Elem& b) const;
    Elem mul(const Elem& a, const Elem& b) const;
    Elem zero() const;
    Elem one() const;
    bool is_zero(const Elem& a) const { return a == zero(); }
    bool is_one(const Elem& a) const { return a == one(); }

    // n * 1_S, computed by doubling.
    Elem from_natural(const mpz_class& n) const;
    // a^n with a^0 = 1_S.
    Elem pow(const Elem& a, unsigned long n) const;

    bool finite() const;
    // All elements in a fixed order; empty optional for infinite carriers.
    std::optional<std::vector<Elem>> enumeration() const;

    std::string format(const Elem& a) const;
    Elem parse(const std::string& token) const;

    // Table semirings record out-of-carrier entries instead of rejecting
    // them, so the axiom checker can produce closure witnesses.
    bool tables_closed() const { return bad_entries_.empty(); }
    struct BadEntry {
        char op;  // '+' or '*'
        int row, col;
        std::string token;
    };
    const std::vector<BadEntry>& bad_entries() const { return bad_entries_; }
    const std::vector<std::string>& carrier_names() const { return carrier_names_; }

private:
    SemiringKind kind_ = SemiringKind::naturals;
    std::string name_;
    long param_ = 0;
    bool add_idem_ = false;
    std::vector<std::string> carrier_names_;
    std::vector<std::vector<int>> add_table_, mul_table_;
    int zero_idx_ = 0, one_idx_ = 0;
    std::vector<BadEntry> bad_entries_;

    friend class SemiringFactory;
};

using Ring = std::shared_ptr<const SemiringSpec>;

Ring naturals();
Ring boolean();
Ring xn(long n);
Ring subset_lattice(long ground_size);

enum class BuiltinSemiring { naturals, boolean, xn, subset_lattice };
Ring make_builtin_semiring(BuiltinSemiring kind, std::optional<long> param = std::nullopt);

// Finite semiring from explicit operation tables. Entries are element names;
// names outside the carrier are kept as closure violations for the checker.
Ring make_table_semiring(const std::string& name,
                         const std::vector<std::string>& carrier,
                         const std::vector<std::vector<std::string>>& add_table,
                         const std::vector<std::vector<std::string>>& mul_table,
                         const std::string& zero_name, const std::string& one_name);

// Z/n with both operations mod n, as a table semiring.
Ring modular_ring(long n);

// "naturals", "boolean", "x<k>", "subsets<k>", "z<k>".
Ring ring_by_name(const std::string& name);

inline constexpr uint64_t kDefaultCheckSeed = 0x5eed5eed5eed5eedULL;

// Verifies commutative-semiring laws: exhaustively over all triples when the
// carrier is finite and |S|^3 fits the budget, otherwise on a seeded sample.
CheckReport semiring_axiom_check(const SemiringSpec& s, uint64_t budget,
                                 uint64_t seed = kDefaultCheckSeed);

std::vector<Elem> enumerate_elements(const SemiringSpec& s);

}  // namespace semihopf
