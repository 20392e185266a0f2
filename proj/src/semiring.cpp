#include "semihopf/semiring.hpp"

#include <algorithm>
#include <sstream>

namespace semihopf {

namespace {

// splitmix64; used wherever a deterministic sample stream is needed.
uint64_t mix64(uint64_t& state) {
    uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

}  // namespace

class SemiringFactory {
public:
    static Ring make(SemiringKind kind, std::string name, long param, bool idem) {
        auto s = std::make_shared<SemiringSpec>();
        s->kind_ = kind;
        s->name_ = std::move(name);
        s->param_ = param;
        s->add_idem_ = idem;
        return s;
    }
    static Ring make_table(const std::string& name, const std::vector<std::string>& carrier,
                           const std::vector<std::vector<std::string>>& add_table,
                           const std::vector<std::vector<std::string>>& mul_table,
                           const std::string& zero_name, const std::string& one_name) {
        const std::size_t n = carrier.size();
        if (n == 0) throw parameter_error("table semiring needs a nonempty carrier");
        if (add_table.size() != n || mul_table.size() != n)
            throw parameter_error("operation tables must be square over the carrier");
        auto index_of = [&](const std::string& t) -> int {
            for (std::size_t i = 0; i < n; ++i)
                if (carrier[i] == t) return static_cast<int>(i);
            return -1;
        };
        auto s = std::make_shared<SemiringSpec>();
        s->kind_ = SemiringKind::table;
        s->name_ = name;
        s->carrier_names_ = carrier;
        s->zero_idx_ = index_of(zero_name);
        s->one_idx_ = index_of(one_name);
        if (s->zero_idx_ < 0 || s->one_idx_ < 0)
            throw parameter_error("zero/one of a table semiring must be carrier elements");
        if (s->zero_idx_ == s->one_idx_)
            throw parameter_error("table semiring must have zero != one");
        auto fill = [&](const std::vector<std::vector<std::string>>& src,
                        std::vector<std::vector<int>>& dst, char op) {
            dst.assign(n, std::vector<int>(n, -1));
            for (std::size_t i = 0; i < n; ++i) {
                if (src[i].size() != n)
                    throw parameter_error("operation tables must be square over the carrier");
                for (std::size_t j = 0; j < n; ++j) {
                    int k = index_of(src[i][j]);
                    dst[i][j] = k;
                    if (k < 0)
                        s->bad_entries_.push_back({op, static_cast<int>(i),
                                                   static_cast<int>(j), src[i][j]});
                }
            }
        };
        fill(add_table, s->add_table_, '+');
        fill(mul_table, s->mul_table_, '*');
        if (s->tables_closed()) {
            int ii = s->add_table_[static_cast<std::size_t>(s->one_idx_)]
                                  [static_cast<std::size_t>(s->one_idx_)];
            s->add_idem_ = (ii == s->one_idx_);
        }
        return s;
    }
};

Ring naturals() {
    static Ring r = SemiringFactory::make(SemiringKind::naturals, "naturals", 0, false);
    return r;
}

Ring boolean() {
    static Ring r = SemiringFactory::make(SemiringKind::boolean, "boolean", 0, true);
    return r;
}

Ring xn(long n) {
    if (n < 1) throw parameter_error("xn semiring needs n >= 1");
    return SemiringFactory::make(SemiringKind::xn, "x" + std::to_string(n), n, true);
}

Ring subset_lattice(long ground_size) {
    if (ground_size < 1) throw parameter_error("subset lattice needs ground size >= 1");
    if (ground_size > 20) throw parameter_error("subset lattice ground size capped at 20");
    return SemiringFactory::make(SemiringKind::subset_lattice,
                                 "subsets" + std::to_string(ground_size), ground_size, true);
}

Ring make_builtin_semiring(BuiltinSemiring kind, std::optional<long> param) {
    switch (kind) {
        case BuiltinSemiring::naturals:
            return naturals();
        case BuiltinSemiring::boolean:
            return boolean();
        case BuiltinSemiring::xn:
            if (!param) throw parameter_error("xn semiring needs a parameter n >= 1");
            return xn(*param);
        case BuiltinSemiring::subset_lattice:
            if (!param) throw parameter_error("subset lattice needs its ground-set size");
            return subset_lattice(*param);
    }
    throw parameter_error("unknown builtin semiring kind");
}

Ring make_table_semiring(const std::string& name, const std::vector<std::string>& carrier,
                         const std::vector<std::vector<std::string>>& add_table,
                         const std::vector<std::vector<std::string>>& mul_table,
                         const std::string& zero_name, const std::string& one_name) {
    return SemiringFactory::make_table(name, carrier, add_table, mul_table, zero_name,
                                       one_name);
}

Ring modular_ring(long n) {
    if (n < 2) throw parameter_error("modular ring needs modulus >= 2");
    std::vector<std::string> carrier;
    for (long i = 0; i < n; ++i) carrier.push_back(std::to_string(i));
    std::vector<std::vector<std::string>> add(static_cast<std::size_t>(n)),
        mul(static_cast<std::size_t>(n));
    for (long i = 0; i < n; ++i) {
        for (long j = 0; j < n; ++j) {
            add[static_cast<std::size_t>(i)].push_back(std::to_string((i + j) % n));
            mul[static_cast<std::size_t>(i)].push_back(std::to_string((i * j) % n));
        }
    }
    return make_table_semiring("z" + std::to_string(n), carrier, add, mul, "0", "1");
}

Ring ring_by_name(const std::string& name) {
    if (name == "naturals") return naturals();
    if (name == "boolean") return boolean();
    auto suffix_num = [&](const std::string& prefix) -> std::optional<long> {
        if (name.rfind(prefix, 0) != 0) return std::nullopt;
        std::string rest = name.substr(prefix.size());
        if (rest.empty() || rest.find_first_not_of("0123456789") != std::string::npos)
            return std::nullopt;
        return std::stol(rest);
    };
    if (auto n = suffix_num("subsets")) return subset_lattice(*n);
    if (auto n = suffix_num("x")) return xn(*n);
    if (auto n = suffix_num("z")) return modular_ring(*n);
    throw parameter_error("unknown semiring name '" + name + "'");
}

namespace {
void require_closed(const SemiringSpec& s) {
    if (s.kind() == SemiringKind::table && !s.tables_closed())
        throw config_error("table semiring '" + s.name() +
                           "' has out-of-carrier entries; run semiring_axiom_check");
}
}  // namespace

Elem SemiringSpec::add(const Elem& a, const Elem& b) const {
    switch (kind_) {
        case SemiringKind::naturals:
            return a + b;
        case SemiringKind::boolean:
            return (a != 0 || b != 0) ? 1 : 0;
        case SemiringKind::xn:
            return std::max(a, b);
        case SemiringKind::subset_lattice:
            return a | b;
        case SemiringKind::table: {
            require_closed(*this);
            return add_table_[a.get_ui()][b.get_ui()];
        }
    }
    throw config_error("bad semiring kind");
}

Elem SemiringSpec::mul(const Elem& a, const Elem& b) const {
    switch (kind_) {
        case SemiringKind::naturals:
            return a * b;
        case SemiringKind::boolean:
            return (a != 0 && b != 0) ? 1 : 0;
        case SemiringKind::xn:
            if (a < 0 || b < 0) return -1;
            return std::min(Elem(a + b), Elem(param_));
        case SemiringKind::subset_lattice:
            return a & b;
        case SemiringKind::table: {
            require_closed(*this);
            return mul_table_[a.get_ui()][b.get_ui()];
        }
    }
    throw config_error("bad semiring kind");
}

Elem SemiringSpec::zero() const {
    switch (kind_) {
        case SemiringKind::naturals:
        case SemiringKind::boolean:
        case SemiringKind::subset_lattice:
            return 0;
        case SemiringKind::xn:
            return -1;
        case SemiringKind::table:
            return zero_idx_;
    }
    throw config_error("bad semiring kind");
}

Elem SemiringSpec::one() const {
    switch (kind_) {
        case SemiringKind::naturals:
        case SemiringKind::boolean:
            return 1;
        case SemiringKind::xn:
            return 0;
        case SemiringKind::subset_lattice:
            return (Elem(1) << param_) - 1;
        case SemiringKind::table:
            return one_idx_;
    }
    throw config_error("bad semiring kind");
}

Elem SemiringSpec::from_natural(const mpz_class& n) const {
    if (n < 0) throw parameter_error("from_natural takes a natural number");
    if (kind_ == SemiringKind::naturals) return n;
    // double-and-add on the bits of n
    Elem acc = zero();
    Elem base = one();
    mpz_class k = n;
    while (k > 0) {
        if (mpz_odd_p(k.get_mpz_t())) acc = add(acc, base);
        base = add(base, base);
        k >>= 1;
    }
    return acc;
}

Elem SemiringSpec::pow(const Elem& a, unsigned long n) const {
    Elem acc = one();
    Elem base = a;
    while (n > 0) {
        if (n & 1) acc = mul(acc, base);
        base = mul(base, base);
        n >>= 1;
    }
    return acc;
}

bool SemiringSpec::finite() const { return kind_ != SemiringKind::naturals; }

std::optional<std::vector<Elem>> SemiringSpec::enumeration() const {
    std::vector<Elem> out;
    switch (kind_) {
        case SemiringKind::naturals:
            return std::nullopt;
        case SemiringKind::boolean:
            out = {Elem(0), Elem(1)};
            break;
        case SemiringKind::xn:
            out.push_back(-1);
            for (long i = 0; i <= param_; ++i) out.push_back(i);
            break;
        case SemiringKind::subset_lattice:
            for (Elem m = 0; m < (Elem(1) << param_); ++m) out.push_back(m);
            break;
        case SemiringKind::table:
            for (std::size_t i = 0; i < carrier_names_.size(); ++i) out.push_back(Elem(i));
            break;
    }
    return out;
}

std::string SemiringSpec::format(const Elem& a) const {
    switch (kind_) {
        case SemiringKind::naturals:
        case SemiringKind::boolean:
            return a.get_str();
        case SemiringKind::xn:
            return a < 0 ? "-inf" : a.get_str();
        case SemiringKind::subset_lattice: {
            std::string out = "{";
            bool first = true;
            for (long i = 0; i < param_; ++i) {
                if (mpz_tstbit(a.get_mpz_t(), static_cast<mp_bitcnt_t>(i))) {
                    if (!first) out += ",";
                    out += std::to_string(i);
                    first = false;
                }
            }
            return out + "}";
        }
        case SemiringKind::table:
            return carrier_names_.at(a.get_ui());
    }
    throw config_error("bad semiring kind");
}

Elem SemiringSpec::parse(const std::string& token) const {
    auto bad = [&]() {
        return parse_error("'" + token + "' is not an element of semiring " + name_);
    };
    switch (kind_) {
        case SemiringKind::naturals: {
            if (token.empty() || token.find_first_not_of("0123456789") != std::string::npos)
                throw bad();
            return Elem(token);
        }
        case SemiringKind::boolean: {
            if (token == "0") return 0;
            if (token == "1") return 1;
            throw bad();
        }
        case SemiringKind::xn: {
            if (token == "-inf") return -1;
            if (token.empty() || token.find_first_not_of("0123456789") != std::string::npos)
                throw bad();
            Elem v(token);
            if (v > param_) throw bad();
            return v;
        }
        case SemiringKind::subset_lattice: {
            // {i,j,...} subset syntax or a plain bitmask
            if (!token.empty() && token.front() == '{') {
                if (token.back() != '}') throw bad();
                Elem mask = 0;
                std::string inner = token.substr(1, token.size() - 2);
                std::istringstream is(inner);
                std::string part;
                while (std::getline(is, part, ',')) {
                    if (part.empty()) continue;
                    long i = std::stol(part);
                    if (i < 0 || i >= param_) throw bad();
                    mpz_setbit(mask.get_mpz_t(), static_cast<mp_bitcnt_t>(i));
                }
                return mask;
            }
            if (token.empty() || token.find_first_not_of("0123456789") != std::string::npos)
                throw bad();
            Elem v(token);
            if (v >= (Elem(1) << param_)) throw bad();
            return v;
        }
        case SemiringKind::table: {
            for (std::size_t i = 0; i < carrier_names_.size(); ++i)
                if (carrier_names_[i] == token) return Elem(i);
            throw bad();
        }
    }
    throw config_error("bad semiring kind");
}

std::vector<Elem> enumerate_elements(const SemiringSpec& s) {
    auto e = s.enumeration();
    if (!e) throw unsupported_error("semiring " + s.name() + " has an infinite carrier");
    return *e;
}

namespace {

struct TripleSource {
    // Exhaustive triples over an enumeration, or seeded samples.
    const SemiringSpec& s;
    std::vector<Elem> elems;
    bool exhaustive;
    uint64_t count;
    uint64_t state;

    Elem sample_one() {
        if (!elems.empty()) {
            return elems[static_cast<std::size_t>(mix64(state) % elems.size())];
        }
        return Elem(static_cast<unsigned long>(mix64(state) % 1000));
    }
    void get(uint64_t i, Elem& a, Elem& b, Elem& c) {
        if (exhaustive) {
            const uint64_t n = elems.size();
            a = elems[static_cast<std::size_t>(i / (n * n))];
            b = elems[static_cast<std::size_t>((i / n) % n)];
            c = elems[static_cast<std::size_t>(i % n)];
        } else {
            a = sample_one();
            b = sample_one();
            c = sample_one();
        }
    }
};

}  // namespace

CheckReport semiring_axiom_check(const SemiringSpec& s, uint64_t budget, uint64_t seed) {
    if (budget < 1) throw parameter_error("axiom check budget must be >= 1");
    CheckReport rep;

    if (s.kind() == SemiringKind::table && !s.tables_closed()) {
        for (const auto& bad : s.bad_entries()) {
            rep.fail({"closure",
                      "(" + s.carrier_names()[static_cast<std::size_t>(bad.row)] + " " +
                          std::string(1, bad.op) + " " +
                          s.carrier_names()[static_cast<std::size_t>(bad.col)] + ")",
                      bad.token, "an element of the carrier"});
        }
        rep.note = "operation tables are not closed over the carrier";
        return rep;
    }

    if (s.zero() == s.one()) rep.fail({"zero_ne_one", "()", s.format(s.zero()), "distinct one"});

    auto enumeration = s.enumeration();
    TripleSource src{s, enumeration.value_or(std::vector<Elem>{}), false, 0, seed};
    if (enumeration) {
        uint64_t n = enumeration->size();
        if (n * n * n <= budget) {
            src.exhaustive = true;
            src.count = n * n * n;
        } else {
            src.count = budget;
            rep.seed = seed;
        }
    } else {
        src.count = budget;
        rep.seed = seed;
    }

    auto w = [&](const char* law, const Elem& a, const Elem& b, const Elem& c,
                 const Elem& lhs, const Elem& rhs) {
        rep.fail({law, "(" + s.format(a) + ", " + s.format(b) + ", " + s.format(c) + ")",
                  s.format(lhs), s.format(rhs)});
    };

    for (uint64_t i = 0; i < src.count && rep.witnesses.size() < 16; ++i) {
        Elem a, b, c;
        src.get(i, a, b, c);
        ++rep.cases_checked;
        Elem l, r;
        l = s.add(s.add(a, b), c), r = s.add(a, s.add(b, c));
        if (l != r) w("add_associative", a, b, c, l, r);
        l = s.add(a, b), r = s.add(b, a);
        if (l != r) w("add_commutative", a, b, c, l, r);
        l = s.mul(s.mul(a, b), c), r = s.mul(a, s.mul(b, c));
        if (l != r) w("mul_associative", a, b, c, l, r);
        l = s.mul(a, b), r = s.mul(b, a);
        if (l != r) w("mul_commutative", a, b, c, l, r);
        l = s.mul(a, s.add(b, c)), r = s.add(s.mul(a, b), s.mul(a, c));
        if (l != r) w("distributive", a, b, c, l, r);
        l = s.mul(a, s.zero());
        if (l != s.zero()) w("zero_absorbing", a, b, c, l, s.zero());
        l = s.mul(a, s.one());
        if (l != a) w("mul_unit", a, b, c, l, a);
        l = s.add(a, s.zero());
        if (l != a) w("add_unit", a, b, c, l, a);
        if (s.additively_idempotent()) {
            l = s.add(a, a);
            if (l != a) w("add_idempotent", a, b, c, l, a);
        }
    }

    if (enumeration) {
        bool has_zero = false, has_one = false;
        for (const auto& e : *enumeration) {
            if (e == s.zero()) has_zero = true;
            if (e == s.one()) has_one = true;
        }
        if (!has_zero) rep.fail({"enumeration_contains_zero", "()", "missing", s.format(s.zero())});
        if (!has_one) rep.fail({"enumeration_contains_one", "()", "missing", s.format(s.one())});
    }
    return rep;
}

}  // namespace semihopf
