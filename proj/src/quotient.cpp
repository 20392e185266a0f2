#include "semihopf/quotient.hpp"

#include <numeric>
#include <sstream>

#include "semihopf/errors.hpp"

namespace semihopf {

namespace {
uint64_t mix64(uint64_t& state) {
    uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}
}  // namespace

void ZVec::add(const BasisId& b, const mpz_class& c) {
    if (c == 0) return;
    auto it = terms.find(b);
    if (it == terms.end()) {
        terms.emplace(b, c);
    } else {
        it->second += c;
        if (it->second == 0) terms.erase(it);
    }
}

std::string ZVec::str() const {
    if (terms.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [b, c] : terms) {
        if (!first) os << " + ";
        first = false;
        os << c.get_str() << "*" << b.str();
    }
    return os.str();
}

CongruenceOracle::CongruenceOracle(const SemiringSpec* ring, std::vector<BasisId> basis,
                                   std::vector<std::size_t> cls,
                                   std::vector<Elem> carrier_elems)
    : ring_(ring), basis_(std::move(basis)), elems_(std::move(carrier_elems)),
      cls_(std::move(cls)) {
    for (std::size_t i = 0; i < elems_.size(); ++i)
        elem_index_.emplace(ring_->format(elems_[i]), i);
    std::size_t mx = 0;
    for (auto c : cls_) mx = std::max(mx, c + 1);
    class_count_ = mx;
}

std::size_t CongruenceOracle::encode(const Vec& v) const {
    if (v.ring() != ring_) throw type_error("vector is over a different semiring");
    std::size_t code = 0;
    const std::size_t m = elems_.size();
    // basis_ order defines the digit positions, most significant first
    for (const auto& b : basis_) {
        auto it = elem_index_.find(ring_->format(v.coeff(b)));
        if (it == elem_index_.end())
            throw type_error("coefficient outside the finite carrier");
        code = code * m + it->second;
    }
    // any support outside basis_ is a domain error
    for (const auto& [b, c] : v.terms()) {
        (void)c;
        bool known = false;
        for (const auto& kb : basis_)
            if (kb == b) {
                known = true;
                break;
            }
        if (!known) throw basis_domain_error(b.str());
    }
    return code;
}

std::size_t CongruenceOracle::class_of(const Vec& v) const { return cls_.at(encode(v)); }

bool CongruenceOracle::eq(const Vec& u, const Vec& v) const {
    return class_of(u) == class_of(v);
}

namespace {
struct Dsu {
    std::vector<std::size_t> parent;
    explicit Dsu(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
    std::size_t find(std::size_t x) {
        while (parent[x] != x) {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        return x;
    }
    bool unite(std::size_t a, std::size_t b) {
        a = find(a);
        b = find(b);
        if (a == b) return false;
        parent[b] = a;
        return true;
    }
};
}  // namespace

CongruenceOracle congruence_closure(const SemiringSpec* ring, std::vector<BasisId> basis,
                                    const std::vector<std::pair<Vec, Vec>>& generators,
                                    uint64_t guard) {
    auto enumeration = ring->enumeration();
    if (!enumeration)
        throw unsupported_error("congruence closure needs a finite semiring");
    const std::vector<Elem>& elems = *enumeration;
    const std::size_t m = elems.size();
    const std::size_t k = basis.size();

    mpz_class total = 1;
    for (std::size_t i = 0; i < k; ++i) total *= static_cast<unsigned long>(m);
    if (total > guard)
        throw size_error("carrier of size " + total.get_str() + " exceeds the guard of " +
                             std::to_string(guard),
                         total.get_ui());
    const std::size_t n = static_cast<std::size_t>(total.get_ui());

    // index tables for digitwise operations
    std::vector<std::vector<std::size_t>> add_idx(m, std::vector<std::size_t>(m));
    std::vector<std::vector<std::size_t>> mul_idx(m, std::vector<std::size_t>(m));
    auto idx_of = [&](const Elem& e) -> std::size_t {
        for (std::size_t i = 0; i < m; ++i)
            if (elems[i] == e) return i;
        throw type_error("element outside the carrier enumeration");
    };
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < m; ++j) {
            add_idx[i][j] = idx_of(ring->add(elems[i], elems[j]));
            mul_idx[i][j] = idx_of(ring->mul(elems[i], elems[j]));
        }

    auto decode_digits = [&](std::size_t code, std::vector<std::size_t>& digits) {
        for (std::size_t p = k; p-- > 0;) {
            digits[p] = code % m;
            code /= m;
        }
    };
    auto combine = [&](std::size_t a, std::size_t b,
                       const std::vector<std::vector<std::size_t>>& table) {
        std::vector<std::size_t> da(k), db(k);
        decode_digits(a, da);
        decode_digits(b, db);
        std::size_t code = 0;
        for (std::size_t p = 0; p < k; ++p) code = code * m + table[da[p]][db[p]];
        return code;
    };
    auto scale = [&](std::size_t s, std::size_t a) {
        std::vector<std::size_t> da(k);
        decode_digits(a, da);
        std::size_t code = 0;
        for (std::size_t p = 0; p < k; ++p) code = code * m + mul_idx[s][da[p]];
        return code;
    };
    auto encode_vec = [&](const Vec& v) -> std::size_t {
        std::size_t code = 0;
        for (const auto& b : basis) code = code * m + idx_of(v.coeff(b));
        return code;
    };

    Dsu dsu(n);
    std::vector<std::pair<std::size_t, std::size_t>> work;
    for (const auto& [u, v] : generators) {
        std::size_t cu = encode_vec(u), cv = encode_vec(v);
        if (dsu.unite(cu, cv)) work.emplace_back(cu, cv);
    }
    // close under translation by every carrier vector and under scalar action
    while (!work.empty()) {
        auto [u, v] = work.back();
        work.pop_back();
        for (std::size_t w = 0; w < n; ++w) {
            std::size_t a = combine(u, w, add_idx), b = combine(v, w, add_idx);
            if (dsu.unite(a, b)) work.emplace_back(a, b);
        }
        for (std::size_t s = 0; s < m; ++s) {
            std::size_t a = scale(s, u), b = scale(s, v);
            if (dsu.unite(a, b)) work.emplace_back(a, b);
        }
    }

    std::vector<std::size_t> cls(n);
    std::map<std::size_t, std::size_t> rep_to_class;
    for (std::size_t i = 0; i < n; ++i) {
        std::size_t r = dsu.find(i);
        auto [it, inserted] = rep_to_class.emplace(r, rep_to_class.size());
        cls[i] = it->second;
        (void)inserted;
    }
    return CongruenceOracle(ring, std::move(basis), std::move(cls), elems);
}

Quotient Quotient::with_normalizer(std::function<Vec(const Vec&)> n,
                                   std::vector<std::pair<Vec, Vec>> gens,
                                   std::optional<ZNormalForm> z) {
    Quotient q;
    q.mode = QuotientMode::normalizer;
    q.normalizer = std::move(n);
    q.generators = std::move(gens);
    q.znf = std::move(z);
    return q;
}

Quotient Quotient::finite(std::vector<std::pair<Vec, Vec>> gens, uint64_t guard) {
    Quotient q;
    q.mode = QuotientMode::finite_congruence;
    q.generators = std::move(gens);
    q.guard = guard;
    return q;
}

namespace {

ZVec znf_vec(const ZNormalForm& znf, const Vec& v) {
    ZVec out;
    for (const auto& [b, c] : v.terms()) {
        ZVec nb = znf(b);
        for (const auto& [l, zc] : nb.terms) out.add(l, c * zc);
    }
    return out;
}

ZVec znf_expand_basis(const ZNormalForm& znf, const BasisId& b, int arity) {
    if (arity <= 1) return znf(b);
    if (!b.is_pair()) throw type_error("tensor equality expects pair labels");
    ZVec left = znf(b.left());
    ZVec right = znf_expand_basis(znf, b.right(), arity - 1);
    ZVec out;
    for (const auto& [la, ca] : left.terms)
        for (const auto& [lb, cb] : right.terms) out.add(BasisId::pair(la, lb), ca * cb);
    return out;
}

ZVec znf_tensor_vec(const ZNormalForm& znf, const Vec& v, int arity) {
    ZVec out;
    for (const auto& [b, c] : v.terms()) {
        ZVec nb = znf_expand_basis(znf, b, arity);
        for (const auto& [l, zc] : nb.terms) out.add(l, c * zc);
    }
    return out;
}

}  // namespace

EqOracle carrier_eq(const Quotient& q, const SemiringSpec* ring, const BasisDomain& basis) {
    switch (q.mode) {
        case QuotientMode::free:
            return EqOracle();
        case QuotientMode::normalizer: {
            if (q.znf) {
                auto z = *q.znf;
                return EqOracle([z](const Vec& u, const Vec& v) {
                    return znf_vec(z, u) == znf_vec(z, v);
                });
            }
            auto n = q.normalizer;
            if (!n) throw config_error("normalizer quotient has no normalizer");
            return EqOracle([n](const Vec& u, const Vec& v) { return n(u) == n(v); });
        }
        case QuotientMode::finite_congruence: {
            std::shared_ptr<const CongruenceOracle> oracle = q.oracle;
            if (!oracle) {
                auto ids = basis.enumerate(basis.truncation >= 0 ? basis.truncation : 64);
                oracle = std::make_shared<const CongruenceOracle>(
                    congruence_closure(ring, ids, q.generators, q.guard));
            }
            return EqOracle(
                [oracle](const Vec& u, const Vec& v) { return oracle->eq(u, v); });
        }
    }
    throw config_error("bad quotient mode");
}

EqOracle tensor_eq(const Quotient& q, const SemiringSpec* ring, int arity) {
    (void)ring;
    if (arity == 1 || q.is_free()) return EqOracle();
    if (q.znf) {
        auto z = *q.znf;
        return EqOracle([z, arity](const Vec& u, const Vec& v) {
            return znf_tensor_vec(z, u, arity) == znf_tensor_vec(z, v, arity);
        });
    }
    throw config_error(
        "quotient carries no equality for tensor powers; attach a signed normal form");
}

std::function<Vec(const Vec&)> min_subtract_normalizer(
    std::vector<std::pair<BasisId, BasisId>> pairs) {
    return [pairs = std::move(pairs)](const Vec& v) {
        const auto* ring = v.ring();
        if (ring->kind() != SemiringKind::naturals)
            throw config_error("min-subtraction normal form is defined over the naturals");
        std::map<BasisId, Elem> adjusted(v.terms().begin(), v.terms().end());
        for (const auto& [p, q] : pairs) {
            auto ip = adjusted.find(p);
            auto iq = adjusted.find(q);
            if (ip == adjusted.end() || iq == adjusted.end()) continue;
            Elem m = std::min(ip->second, iq->second);
            ip->second -= m;
            iq->second -= m;
        }
        Vec out(ring);
        for (const auto& [b, c] : adjusted) out.add_term(b, c);
        return out;
    };
}

ZNormalForm null_pair_znf(std::vector<std::pair<BasisId, BasisId>> pairs) {
    return [pairs = std::move(pairs)](const BasisId& b) {
        ZVec out;
        for (const auto& [keep, fold] : pairs) {
            if (b == fold) {
                out.add(keep, -1);
                return out;
            }
        }
        out.add(b, 1);
        return out;
    };
}

namespace {
Vec sample_vec(const SemiringSpec* ring, const std::vector<BasisId>& basis, uint64_t& state) {
    Vec v(ring);
    if (basis.empty()) return v;
    auto enumeration = ring->enumeration();
    std::size_t nterms = mix64(state) % std::min<std::size_t>(basis.size() + 1, 5);
    for (std::size_t t = 0; t < nterms; ++t) {
        const BasisId& b = basis[static_cast<std::size_t>(mix64(state) % basis.size())];
        Elem c = enumeration
                     ? (*enumeration)[static_cast<std::size_t>(mix64(state) %
                                                               enumeration->size())]
                     : Elem(static_cast<unsigned long>(mix64(state) % 7));
        v.add_term(b, c);
    }
    return v;
}
Elem sample_scalar(const SemiringSpec* ring, uint64_t& state) {
    auto enumeration = ring->enumeration();
    if (enumeration)
        return (*enumeration)[static_cast<std::size_t>(mix64(state) % enumeration->size())];
    return Elem(static_cast<unsigned long>(mix64(state) % 7));
}
}  // namespace

CheckReport check_normalizer(const Quotient& q, const SemiringSpec* ring,
                             const std::vector<BasisId>& basis, int samples, uint64_t seed) {
    if (q.mode != QuotientMode::normalizer || !q.normalizer)
        throw config_error("check_normalizer needs a normalizer quotient");
    const auto& n = q.normalizer;
    CheckReport rep;
    rep.seed = seed;
    uint64_t state = seed;

    Vec zero(ring);
    if (!(n(zero) == zero)) rep.fail({"normalizer_zero", "0", n(zero).str(), "0"});
    ++rep.cases_checked;

    for (int i = 0; i < samples && rep.witnesses.size() < 8; ++i) {
        Vec u = sample_vec(ring, basis, state);
        Vec v = sample_vec(ring, basis, state);
        Elem s = sample_scalar(ring, state);
        ++rep.cases_checked;
        Vec nu = n(u);
        if (!(n(nu) == nu))
            rep.fail({"normalizer_idempotent", u.str(), n(nu).str(), nu.str()});
        Vec lhs = n(vec_add(u, v));
        Vec rhs = n(vec_add(n(u), n(v)));
        if (!(lhs == rhs))
            rep.fail({"normalizer_additive", "(" + u.str() + ", " + v.str() + ")", lhs.str(),
                      rhs.str()});
        Vec ls = n(scalar_mul(s, u));
        Vec rs = n(scalar_mul(s, n(u)));
        if (!(ls == rs))
            rep.fail({"normalizer_scalar", ring->format(s) + " * (" + u.str() + ")", ls.str(),
                      rs.str()});
    }
    return rep;
}

CheckReport check_quotient_compat(const LinearMap& map, const Quotient& q,
                                  const SemiringSpec* ring,
                                  const std::vector<BasisId>& probe_basis, MapArity arity,
                                  const EqOracle& target_eq) {
    CheckReport rep;
    if (q.is_free()) {
        rep.note = "free quotient; nothing to check";
        return rep;
    }
    for (std::size_t gi = 0; gi < q.generators.size(); ++gi) {
        const auto& [u, v] = q.generators[gi];
        if (arity == MapArity::unary) {
            ++rep.cases_checked;
            Vec mu = map.apply(u), mv = map.apply(v);
            if (!target_eq(mu, mv))
                rep.fail({"quotient_compat", "generator " + std::to_string(gi), mu.str(),
                          mv.str()});
        } else {
            for (const auto& w : probe_basis) {
                Vec wb = Vec::basis(ring, w);
                ++rep.cases_checked;
                Vec l1 = map.apply(tensor_vec(u, wb)), r1 = map.apply(tensor_vec(v, wb));
                if (!target_eq(l1, r1))
                    rep.fail({"quotient_compat",
                              "generator " + std::to_string(gi) + " (x) " + w.str(), l1.str(),
                              r1.str()});
                ++rep.cases_checked;
                Vec l2 = map.apply(tensor_vec(wb, u)), r2 = map.apply(tensor_vec(wb, v));
                if (!target_eq(l2, r2))
                    rep.fail({"quotient_compat",
                              w.str() + " (x) generator " + std::to_string(gi), l2.str(),
                              r2.str()});
            }
        }
    }
    return rep;
}

}  // namespace semihopf
