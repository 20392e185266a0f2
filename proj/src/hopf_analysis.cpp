#include "semihopf/hopf_analysis.hpp"

#include <limits>
#include <sstream>

#include "semihopf/parallel.hpp"

namespace semihopf {

namespace {

constexpr long kAllDegrees = std::numeric_limits<long>::max() / 4;

uint64_t mix64(uint64_t& state) {
    uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

// Candidate spaces are |S|^k assignments addressed by a mixed-radix code,
// first coordinate most significant.
struct CodeSpace {
    std::vector<Elem> elems;
    std::size_t coords;
    uint64_t total;  // |S|^coords, guarded by the caller

    static CodeSpace make(const SemiringSpec* ring, std::size_t coords, uint64_t budget,
                          const std::string& what) {
        auto enumeration = ring->enumeration();
        if (!enumeration)
            throw size_error(what + " needs a finite base semiring", 0);
        CodeSpace cs;
        cs.elems = *enumeration;
        cs.coords = coords;
        mpz_class total = 1;
        for (std::size_t i = 0; i < coords; ++i) total *= (unsigned long)cs.elems.size();
        if (total > budget)
            throw size_error(what + " would enumerate " + total.get_str() +
                                 " candidates, over the budget of " + std::to_string(budget),
                             mpz_class(total).get_ui());
        cs.total = total.get_ui();
        return cs;
    }

    void digits(uint64_t code, std::vector<std::size_t>& out) const {
        const std::size_t m = elems.size();
        out.resize(coords);
        for (std::size_t p = coords; p-- > 0;) {
            out[p] = static_cast<std::size_t>(code % m);
            code /= m;
        }
    }
};

std::string table_str(const SemiringSpec* ring,
                      const std::vector<std::pair<BasisId, Elem>>& table) {
    bool all_zero = true;
    std::ostringstream os;
    bool first = true;
    for (const auto& [b, c] : table) {
        if (ring->is_zero(c)) continue;
        all_zero = false;
        if (!first) os << " + ";
        first = false;
        if (!ring->is_one(c)) os << ring->format(c) << "*";
        os << b.str() << "*";
    }
    return all_zero ? "0" : os.str();
}

}  // namespace

std::string FoundFunctional::str() const {
    return table_str(f.ring(), table);
}

std::string FoundForm::str() const {
    std::ostringstream os;
    bool first = true;
    bool all_zero = true;
    for (const auto& [b, c] : table) {
        if (c == 0) continue;
        if (!first) os << ", ";
        first = false;
        all_zero = false;
        os << b.str() << " -> " << c.get_str();
    }
    return all_zero ? "0" : os.str();
}

std::string FoundMap::str() const {
    std::ostringstream os;
    bool first = true;
    for (const auto& [b, v] : table) {
        if (!first) os << "; ";
        first = false;
        os << b.str() << " -> " << v.str();
    }
    return os.str();
}

IntegralOnReport verify_integral_on(const Functional& t, const Bisemialgebra& b, Side side,
                                    DegreeBound d) {
    const auto ids = b.basis.enumerate(d.bound);
    EqOracle eq1 = carrier_eq(b.quotient, b.R(), b.basis);
    IntegralOnReport out;
    out.detail.checked_bound = d.bound;
    for (const auto& x : ids) {
        ++out.detail.cases_checked;
        Vec dx = b.delta.at(x);
        Vec lhs = (side == Side::left) ? apply_counit_right(t, dx)
                                       : apply_counit_left(t, dx);
        Vec rhs = scalar_mul(t.at(x), b.unit);
        if (!eq1(lhs, rhs))
            out.detail.fail({side == Side::left ? "left_integral" : "right_integral",
                             "(" + x.str() + ")", lhs.str(), rhs.str()});
    }
    out.is_integral = out.detail.pass;
    out.is_total = (t.apply(b.unit) == b.R()->one());
    return out;
}

CheckReport verify_integral_ideal_property(const Functional& t, const Bisemialgebra& b,
                                           DegreeBound d, int sample_functionals,
                                           uint64_t seed) {
    const auto ids = b.basis.enumerate(d.bound);
    CheckReport rep;
    rep.checked_bound = d.bound;
    rep.seed = seed;
    uint64_t state = seed;
    auto enumeration = b.R()->enumeration();
    Semicoalgebra coa = b.coalgebra();

    for (int s = 0; s < sample_functionals; ++s) {
        std::map<BasisId, Elem> table;
        for (const auto& x : ids) {
            Elem c = enumeration ? (*enumeration)[static_cast<std::size_t>(
                                       mix64(state) % enumeration->size())]
                                 : Elem(static_cast<unsigned long>(mix64(state) % 7));
            table[x] = c;
        }
        Functional f = Functional::from_table(b.R(), std::move(table));
        Functional conv = convolve(f, t, coa);
        Elem f1 = f.apply(b.unit);
        for (const auto& x : ids) {
            ++rep.cases_checked;
            Elem lhs = conv.at(x);
            Elem rhs = b.R()->mul(f1, t.at(x));
            if (lhs != rhs) {
                rep.fail({"integral_ideal", "sample " + std::to_string(s) + " at " + x.str(),
                          b.R()->format(lhs), b.R()->format(rhs)});
                if (rep.witnesses.size() > 8) return rep;
            }
        }
    }
    return rep;
}

std::vector<FoundFunctional> search_integrals_on(const Bisemialgebra& b, Side side,
                                                 DegreeBound d, uint64_t budget) {
    const auto ids = b.basis.enumerate(d.bound);
    CodeSpace cs = CodeSpace::make(b.R(), ids.size(), budget, "integral search");
    EqOracle eq1 = carrier_eq(b.quotient, b.R(), b.basis);

    auto qualifies = [&](std::size_t code) {
        std::vector<std::size_t> dg;
        cs.digits(code, dg);
        std::map<BasisId, Elem> table;
        for (std::size_t i = 0; i < ids.size(); ++i) table[ids[i]] = cs.elems[dg[i]];
        Functional t = Functional::from_table(b.R(), std::move(table));
        for (const auto& x : ids) {
            Vec dx = b.delta.at(x);
            Vec lhs = (side == Side::left) ? apply_counit_right(t, dx)
                                           : apply_counit_left(t, dx);
            if (!eq1(lhs, scalar_mul(t.at(x), b.unit))) return false;
        }
        return true;
    };
    auto hits = par::filter(static_cast<std::size_t>(cs.total), qualifies);

    std::vector<FoundFunctional> out;
    for (auto code : hits) {
        std::vector<std::size_t> dg;
        cs.digits(code, dg);
        FoundFunctional ff;
        std::map<BasisId, Elem> table;
        for (std::size_t i = 0; i < ids.size(); ++i) {
            table[ids[i]] = cs.elems[dg[i]];
            ff.table.emplace_back(ids[i], cs.elems[dg[i]]);
        }
        ff.f = Functional::from_table(b.R(), std::move(table));
        ff.total = (ff.f.apply(b.unit) == b.R()->one());
        out.push_back(std::move(ff));
    }
    return out;
}

IntegralInReport verify_integral_in(const Vec& w, const Bisemialgebra& b, Side side,
                                    DegreeBound d) {
    const auto ids = b.basis.enumerate(d.bound);
    EqOracle eq1 = carrier_eq(b.quotient, b.R(), b.basis);
    IntegralInReport out;
    out.is_integral = true;
    for (const auto& x : ids) {
        Vec xb = Vec::basis(b.R(), x);
        Vec lhs = (side == Side::left) ? b.mul(xb, w) : b.mul(w, xb);
        Vec rhs = scalar_mul(b.counit.at(x), w);
        if (!eq1(lhs, rhs)) {
            out.is_integral = false;
            break;
        }
    }
    out.is_normalized = (b.counit.apply(w) == b.R()->one());
    return out;
}

std::vector<std::pair<Vec, IntegralInReport>> search_integrals_in(const Bisemialgebra& b,
                                                                  Side side, DegreeBound d,
                                                                  uint64_t budget) {
    const auto ids = b.basis.enumerate(d.bound);
    CodeSpace cs = CodeSpace::make(b.R(), ids.size(), budget, "integral-in search");

    auto vec_of = [&](std::size_t code) {
        std::vector<std::size_t> dg;
        cs.digits(code, dg);
        Vec v(b.R());
        for (std::size_t i = 0; i < ids.size(); ++i) v.add_term(ids[i], cs.elems[dg[i]]);
        return v;
    };
    auto hits = par::filter(static_cast<std::size_t>(cs.total), [&](std::size_t code) {
        return verify_integral_in(vec_of(code), b, side, d).is_integral;
    });
    std::vector<std::pair<Vec, IntegralInReport>> out;
    for (auto code : hits) {
        Vec v = vec_of(code);
        out.emplace_back(v, verify_integral_in(v, b, side, d));
    }
    return out;
}

namespace {

SubsetDesc enumerate_subset(const Bisemialgebra& b, const BasisDomain& carrier,
                            DegreeBound d, uint64_t budget, const std::string& what,
                            const std::function<bool(const Vec&)>& predicate) {
    SubsetDesc out;
    out.contains = predicate;
    if (!b.R()->finite()) {
        out.enumerated = false;
        return out;
    }
    const auto ids = carrier.enumerate(d.bound);
    CodeSpace cs = CodeSpace::make(b.R(), ids.size(), budget, what);
    auto vec_of = [&, ids](std::size_t code) {
        std::vector<std::size_t> dg;
        cs.digits(code, dg);
        Vec v(b.R());
        for (std::size_t i = 0; i < ids.size(); ++i) v.add_term(ids[i], cs.elems[dg[i]]);
        return v;
    };
    auto hits = par::filter(static_cast<std::size_t>(cs.total),
                            [&](std::size_t code) { return predicate(vec_of(code)); });
    out.enumerated = true;
    for (auto code : hits) out.elements.push_back(vec_of(code));

    // greedy minimal generating subset under the enumeration order
    std::vector<Vec> span{Vec(b.R())};
    auto in_span = [&](const Vec& v) {
        for (const auto& s : span)
            if (s == v) return true;
        return false;
    };
    for (const auto& v : out.elements) {
        if (v.is_zero() || in_span(v)) continue;
        out.generators.push_back(v);
        std::vector<Vec> next = span;
        for (const auto& s : span)
            for (const auto& e : cs.elems) {
                Vec cand = vec_add(s, scalar_mul(e, v));
                bool seen = false;
                for (const auto& t : next)
                    if (t == cand) {
                        seen = true;
                        break;
                    }
                if (!seen) next.push_back(cand);
            }
        span = std::move(next);
    }
    return out;
}

}  // namespace

SubsetDesc invariants(const LinearMap& action, const Bisemialgebra& b,
                      const BasisDomain& carrier, DegreeBound d, uint64_t budget) {
    const auto bids = b.basis.enumerate(d.bound);
    auto predicate = [action, b, bids](const Vec& m) {
        for (const auto& x : bids) {
            Vec lhs = action.apply(tensor_vec(Vec::basis(b.R(), x), m));
            Vec rhs = scalar_mul(b.counit.at(x), m);
            if (!(lhs == rhs)) return false;
        }
        return true;
    };
    return enumerate_subset(b, carrier, d, budget, "invariant enumeration", predicate);
}

SubsetDesc coinvariants(const LinearMap& coaction, const Bisemialgebra& b,
                        const BasisDomain& carrier, DegreeBound d, uint64_t budget) {
    auto predicate = [coaction, b](const Vec& m) {
        Vec lhs = coaction.apply(m);
        Vec rhs = tensor_vec(m, b.unit);
        if (b.quotient.is_free()) return lhs == rhs;
        EqOracle eq2 = tensor_eq(b.quotient, b.R(), 2);
        return eq2(lhs, rhs);
    };
    return enumerate_subset(b, carrier, d, budget, "coinvariant enumeration", predicate);
}

LinearMap gamma_map(const Bisemialgebra& b) {
    return LinearMap(b.R(), [b](const BasisId& p) {
        if (!p.is_pair()) throw type_error("gamma acts on pair labels");
        Vec out(b.R());
        for (const auto& [q, c] : b.delta.at(p.right()).terms()) {
            Vec prod = b.mu.at(BasisId::pair(p.left(), q.left()));
            out = vec_add(out, scalar_mul(c, tensor_vec(prod, Vec::basis(b.R(), q.right()))));
        }
        return out;
    });
}

LinearMap omega_map(const Hopf& h) {
    const Bisemialgebra& b = h.b;
    return LinearMap(b.R(), [b, anti = h.antipode](const BasisId& p) {
        if (!p.is_pair()) throw type_error("omega acts on pair labels");
        Vec out(b.R());
        for (const auto& [q, c] : b.delta.at(p.right()).terms()) {
            Vec prod = b.mu.apply(
                tensor_vec(Vec::basis(b.R(), p.left()), anti.at(q.left())));
            out = vec_add(out, scalar_mul(c, tensor_vec(prod, Vec::basis(b.R(), q.right()))));
        }
        return out;
    });
}

CheckReport verify_gamma_iso(const Hopf& h, DegreeBound d) {
    const auto ids = h.b.basis.enumerate(d.bound);
    const std::size_t n = ids.size();
    EqOracle eq2 = tensor_eq(h.b.quotient, h.R(), 2);
    LinearMap gamma = gamma_map(h.b);
    LinearMap omega = omega_map(h);

    CheckReport rep;
    rep.checked_bound = d.bound;
    auto hits = par::collect<Witness>(n * n, [&](std::size_t i) -> std::optional<Witness> {
        BasisId p = BasisId::pair(ids[i / n], ids[i % n]);
        Vec pv = Vec::basis(h.R(), p);
        Vec roundtrip = omega.apply(gamma.at(p));
        if (!eq2(roundtrip, pv))
            return Witness{"omega_after_gamma", p.str(), roundtrip.str(), pv.str()};
        Vec other = gamma.apply(omega.at(p));
        if (!eq2(other, pv))
            return Witness{"gamma_after_omega", p.str(), other.str(), pv.str()};
        return std::nullopt;
    });
    rep.cases_checked = n * n;
    for (auto& [i, w] : hits) {
        (void)i;
        rep.fail(std::move(w));
    }
    return rep;
}

CheckReport gamma_image_omits(const Bisemialgebra& b, const Vec& target, DegreeBound d,
                              uint64_t budget) {
    const auto ids = b.basis.enumerate(d.bound);
    std::vector<Vec> images;
    LinearMap gamma = gamma_map(b);
    for (const auto& u : ids)
        for (const auto& v : ids) images.push_back(gamma.at(BasisId::pair(u, v)));

    CodeSpace cs = CodeSpace::make(b.R(), images.size(), budget, "gamma image span");
    CheckReport rep;
    rep.checked_bound = d.bound;
    rep.cases_checked = cs.total;
    auto hits = par::filter(static_cast<std::size_t>(cs.total), [&](std::size_t code) {
        std::vector<std::size_t> dg;
        cs.digits(code, dg);
        Vec acc(b.R());
        for (std::size_t i = 0; i < images.size(); ++i)
            acc = vec_add(acc, scalar_mul(cs.elems[dg[i]], images[i]));
        return acc == target;
    });
    if (!hits.empty())
        rep.fail({"gamma_image_omits", "combination code " + std::to_string(hits.front()),
                  "target is in the image span", target.str()});
    return rep;
}

HopfModule regular_hopf_module(const Bisemialgebra& b) {
    return HopfModule{b, b.basis, b.mu, b.delta};
}

HopfModule diagonal_tensor_module(const Bisemialgebra& b) {
    const auto* r = b.R();
    HopfModule m;
    m.over = b;
    m.states = pair_domain(b.basis, b.basis);
    m.action = LinearMap(r, [b, r](const BasisId& p) {
        // ((m1, m2), b) -> sum (m1 b1, m2 b2)
        if (!p.is_pair() || !p.left().is_pair())
            throw type_error("diagonal action expects ((m1,m2), b) labels");
        const BasisId& m1 = p.left().left();
        const BasisId& m2 = p.left().right();
        Vec out(r);
        for (const auto& [q, c] : b.delta.at(p.right()).terms()) {
            Vec l = b.mu.at(BasisId::pair(m1, q.left()));
            Vec rr = b.mu.at(BasisId::pair(m2, q.right()));
            out = vec_add(out, scalar_mul(c, tensor_vec(l, rr)));
        }
        return out;
    });
    m.coaction = LinearMap(r, [b, r](const BasisId& p) {
        // (m1, m2) -> sum (m1, m2_1) (x) m2_2
        if (!p.is_pair()) throw type_error("tensor module expects pair states");
        Vec out(r);
        for (const auto& [q, c] : b.delta.at(p.right()).terms()) {
            out.add_term(BasisId::pair(BasisId::pair(p.left(), q.left()), q.right()), c);
        }
        return out;
    });
    return m;
}

CheckReport check_hopf_module(const HopfModule& m, DegreeBound d) {
    const Bisemialgebra& b = m.over;
    const auto* r = b.R();
    const auto states = m.states.enumerate(d.bound);
    const auto bids = b.basis.enumerate(d.bound);
    const std::size_t ns = states.size(), nb = bids.size();
    bool free_q = b.quotient.is_free();
    EqOracle eqM;   // states are free carriers here
    EqOracle eqMB = free_q ? EqOracle() : tensor_eq(b.quotient, r, 2);
    LinearMap id = identity_map(r);

    CheckReport rep;
    rep.checked_bound = d.bound;

    // right module laws
    auto mod_hits = par::collect<Witness>(ns * nb * nb, [&](std::size_t i) -> std::optional<Witness> {
        const BasisId& s = states[i / (nb * nb)];
        const BasisId& u = bids[(i / nb) % nb];
        const BasisId& v = bids[i % nb];
        Vec su = m.action.at(BasisId::pair(s, u));
        Vec lhs = m.action.apply(tensor_vec(su, Vec::basis(r, v)));
        Vec rhs = m.action.apply(tensor_vec(Vec::basis(r, s), b.mu.at(BasisId::pair(u, v))));
        if (!eqM(lhs, rhs))
            return Witness{"module_associative", "(" + s.str() + ", " + u.str() + ", " +
                           v.str() + ")", lhs.str(), rhs.str()};
        return std::nullopt;
    });
    rep.cases_checked += ns * nb * nb;
    for (auto& [i, w] : mod_hits) {
        (void)i;
        rep.fail(std::move(w));
    }
    for (const auto& s : states) {
        ++rep.cases_checked;
        Vec sv = Vec::basis(r, s);
        Vec lhs = m.action.apply(tensor_vec(sv, b.unit));
        if (!eqM(lhs, sv)) rep.fail({"module_unital", "(" + s.str() + ")", lhs.str(), sv.str()});
    }

    // right comodule laws
    for (const auto& s : states) {
        Vec rs = m.coaction.at(s);
        ++rep.cases_checked;
        Vec lhs = reassoc_right(tensor_map(m.coaction, id).apply(rs));
        Vec rhs = tensor_map(id, b.delta).apply(rs);
        bool ok;
        if (free_q) {
            ok = (lhs == rhs);
        } else {
            EqOracle eq3 = tensor_eq(b.quotient, r, 3);
            ok = eq3(lhs, rhs);
        }
        if (!ok) rep.fail({"comodule_coassociative", "(" + s.str() + ")", lhs.str(), rhs.str()});
        ++rep.cases_checked;
        Vec leg = apply_counit_right(b.counit, rs);
        Vec sv = Vec::basis(r, s);
        if (!eqM(leg, sv)) rep.fail({"comodule_counital", "(" + s.str() + ")", leg.str(), sv.str()});
    }

    // compatibility rho(m b) = sum m0 b1 (x) m1 b2
    auto compat_hits = par::collect<Witness>(ns * nb, [&](std::size_t i) -> std::optional<Witness> {
        const BasisId& s = states[i / nb];
        const BasisId& x = bids[i % nb];
        Vec lhs = m.coaction.apply(m.action.at(BasisId::pair(s, x)));
        Vec rhs(r);
        for (const auto& [ms, cs] : m.coaction.at(s).terms()) {
            for (const auto& [dx, cx] : b.delta.at(x).terms()) {
                Vec mb = m.action.at(BasisId::pair(ms.left(), dx.left()));
                Vec bb2 = b.mu.at(BasisId::pair(ms.right(), dx.right()));
                rhs = vec_add(rhs, scalar_mul(r->mul(cs, cx), tensor_vec(mb, bb2)));
            }
        }
        if (!eqMB(lhs, rhs))
            return Witness{"hopf_module_compat", "(" + s.str() + ", " + x.str() + ")",
                           lhs.str(), rhs.str()};
        return std::nullopt;
    });
    rep.cases_checked += ns * nb;
    for (auto& [i, w] : compat_hits) {
        (void)i;
        rep.fail(std::move(w));
    }
    return rep;
}

LinearMap psi_map(const HopfModule& m) { return m.action; }

CheckReport verify_fundamental(const HopfModule& m, const Hopf& h, DegreeBound d,
                               uint64_t budget) {
    const Bisemialgebra& b = m.over;
    const auto* r = b.R();
    CheckReport rep;
    rep.checked_bound = d.bound;

    auto inv = [&](const Vec& mv) {
        // m -> sum (m0 a(m1)) (x) m2 through the iterated coaction
        Vec out(r);
        for (const auto& [p1, c1] : m.coaction.apply(mv).terms()) {
            const BasisId& mid = p1.left();
            const BasisId& outer = p1.right();
            for (const auto& [p2, c2] : m.coaction.at(mid).terms()) {
                Vec acted = m.action.apply(
                    tensor_vec(Vec::basis(r, p2.left()), h.antipode.at(p2.right())));
                out = vec_add(out, scalar_mul(r->mul(c1, c2),
                                              tensor_vec(acted, Vec::basis(r, outer))));
            }
        }
        return out;
    };

    // psi o inv over the whole enumerated carrier
    const auto ids = m.states.enumerate(d.bound);
    CodeSpace cs = CodeSpace::make(r, ids.size(), budget, "fundamental-theorem check");
    auto vec_of = [&](std::size_t code) {
        std::vector<std::size_t> dg;
        cs.digits(code, dg);
        Vec v(r);
        for (std::size_t i = 0; i < ids.size(); ++i) v.add_term(ids[i], cs.elems[dg[i]]);
        return v;
    };
    auto hits = par::collect<Witness>(
        static_cast<std::size_t>(cs.total), [&](std::size_t code) -> std::optional<Witness> {
            Vec mv = vec_of(code);
            Vec roundtrip = m.action.apply(inv(mv));
            if (!(roundtrip == mv))
                return Witness{"psi_after_inverse", mv.str(), roundtrip.str(), mv.str()};
            return std::nullopt;
        });
    rep.cases_checked += cs.total;
    for (auto& [i, w] : hits) {
        (void)i;
        rep.fail(std::move(w));
    }

    // inv o psi on coinvariant generators (x) basis
    SubsetDesc coinv = coinvariants(m.coaction, b, m.states, d, budget);
    if (!coinv.enumerated) throw size_error("coinvariants are not enumerable here", 0);
    const auto bids = b.basis.enumerate(d.bound);
    for (const auto& g : coinv.generators) {
        for (const auto& x : bids) {
            ++rep.cases_checked;
            Vec image = m.action.apply(tensor_vec(g, Vec::basis(r, x)));
            Vec back = inv(image);
            Vec expected = tensor_vec(g, Vec::basis(r, x));
            if (!(back == expected))
                rep.fail({"inverse_after_psi", "(" + g.str() + ") (x) " + x.str(),
                          back.str(), expected.str()});
        }
    }
    rep.note = std::to_string(coinv.elements.size()) + " coinvariants, " +
               std::to_string(coinv.generators.size()) + " generators";
    return rep;
}

namespace {
std::vector<BasisId> full_finite_basis(const BasisDomain& dom, const std::string& what) {
    if (!dom.finite && dom.truncation < 0)
        throw unsupported_error(what + " needs a finite (or truncated) basis");
    return dom.enumerate(dom.finite ? kAllDegrees : dom.truncation);
}
}  // namespace

Bisemialgebra dual_bisemialgebra(const Bisemialgebra& b) {
    if (!b.quotient.is_free())
        throw unsupported_error("duals are built over free finite carriers only");
    const auto* r = b.R();
    const auto ids = full_finite_basis(b.basis, "dual");

    std::map<BasisId, Vec> mu_table, delta_table;
    for (const auto& k : ids) delta_table[BasisId::dual(k)] = Vec(r);
    for (const auto& i : ids)
        for (const auto& j : ids) {
            Vec prod = b.mu.at(BasisId::pair(i, j));
            for (const auto& [k, c] : prod.terms())
                delta_table[BasisId::dual(k)].add_term(
                    BasisId::pair(BasisId::dual(i), BasisId::dual(j)), c);
        }
    // mu on duals transposes the coproduct
    for (const auto& i : ids)
        for (const auto& j : ids) {
            BasisId key = BasisId::pair(BasisId::dual(i), BasisId::dual(j));
            Vec val(r);
            for (const auto& k : ids) {
                Elem c = b.delta.at(k).coeff(BasisId::pair(i, j));
                if (!r->is_zero(c)) val.add_term(BasisId::dual(k), c);
            }
            mu_table[key] = val;
        }

    Bisemialgebra out;
    out.ring = b.ring;
    out.name = b.name + "_dual";
    out.basis = dual_domain(b.basis);
    out.mu = LinearMap::from_table(r, std::move(mu_table));
    Vec unit(r);
    for (const auto& i : ids) unit.add_term(BasisId::dual(i), b.counit.at(i));
    out.unit = unit;
    out.delta = LinearMap::from_table(r, std::move(delta_table));
    std::map<BasisId, Elem> counit_table;
    for (const auto& i : ids) counit_table[BasisId::dual(i)] = b.unit.coeff(i);
    out.counit = Functional::from_table(r, std::move(counit_table), false);
    return out;
}

Hopf dual_hopf(const Hopf& h) {
    Bisemialgebra dual = dual_bisemialgebra(h.b);
    const auto* r = h.R();
    const auto ids = full_finite_basis(h.b.basis, "dual");
    std::map<BasisId, Vec> anti_table;
    for (const auto& i : ids) anti_table[BasisId::dual(i)] = Vec(r);
    for (const auto& j : ids) {
        Vec aj = h.antipode.at(j);
        for (const auto& [i, c] : aj.terms())
            anti_table[BasisId::dual(i)].add_term(BasisId::dual(j), c);
    }
    return Hopf{dual, LinearMap::from_table(r, std::move(anti_table))};
}

LinearMap double_dual_embedding(const Bisemialgebra& b) {
    const auto* r = b.R();
    return LinearMap(r, [r](const BasisId& x) {
        return Vec::basis(r, BasisId::dual(BasisId::dual(x)));
    });
}

std::vector<FoundMap> search_antipode(const Bisemialgebra& b, DegreeBound d,
                                      uint64_t budget) {
    const auto* r = b.R();
    const auto ids = b.basis.enumerate(d.bound);
    const std::size_t n = ids.size();
    CodeSpace cs = CodeSpace::make(r, n * n, budget, "antipode search");
    EqOracle eq1 = carrier_eq(b.quotient, r, b.basis);
    LinearMap id = identity_map(r);

    auto map_of = [&](std::size_t code) {
        std::vector<std::size_t> dg;
        cs.digits(code, dg);
        std::map<BasisId, Vec> table;
        for (std::size_t i = 0; i < n; ++i) {
            Vec v(r);
            for (std::size_t j = 0; j < n; ++j) v.add_term(ids[j], cs.elems[dg[i * n + j]]);
            table[ids[i]] = v;
        }
        return LinearMap::from_table(r, std::move(table));
    };
    auto qualifies = [&](std::size_t code) {
        LinearMap cand = map_of(code);
        for (const auto& x : ids) {
            Vec dx = b.delta.at(x);
            Vec target = scalar_mul(b.counit.at(x), b.unit);
            if (!eq1(b.mu.apply(tensor_map(cand, id).apply(dx)), target)) return false;
            if (!eq1(b.mu.apply(tensor_map(id, cand).apply(dx)), target)) return false;
        }
        return true;
    };
    auto hits = par::filter(static_cast<std::size_t>(cs.total), qualifies);
    std::vector<FoundMap> out;
    for (auto code : hits) {
        FoundMap fm;
        fm.map = map_of(code);
        for (const auto& x : ids) fm.table.emplace_back(x, fm.map.at(x));
        out.push_back(std::move(fm));
    }
    return out;
}

std::vector<Vec> search_separability_idempotent(const Hopf& h, DegreeBound d,
                                                uint64_t budget) {
    const Bisemialgebra& b = h.b;
    const auto* r = b.R();
    const auto ids = b.basis.enumerate(d.bound);
    const std::size_t n = ids.size();
    std::vector<BasisId> pairs;
    for (const auto& i : ids)
        for (const auto& j : ids) pairs.push_back(BasisId::pair(i, j));
    CodeSpace cs = CodeSpace::make(r, pairs.size(), budget, "separability search");
    EqOracle eq1 = carrier_eq(b.quotient, r, b.basis);
    EqOracle eq2 = tensor_eq(b.quotient, r, 2);

    auto vec_of = [&](std::size_t code) {
        std::vector<std::size_t> dg;
        cs.digits(code, dg);
        Vec v(r);
        for (std::size_t i = 0; i < pairs.size(); ++i) v.add_term(pairs[i], cs.elems[dg[i]]);
        return v;
    };
    auto qualifies = [&](std::size_t code) {
        Vec e = vec_of(code);
        // mu(e) = 1
        if (!eq1(b.mu.apply(e), b.unit)) return false;
        // h e = e h on the first and second legs
        for (const auto& x : ids) {
            Vec lhs(r), rhs(r);
            for (const auto& [p, c] : e.terms()) {
                lhs = vec_add(lhs, scalar_mul(c, tensor_vec(b.mu.at(BasisId::pair(x, p.left())),
                                                            Vec::basis(r, p.right()))));
                rhs = vec_add(rhs, scalar_mul(c, tensor_vec(Vec::basis(r, p.left()),
                                                            b.mu.at(BasisId::pair(p.right(), x)))));
            }
            if (!eq2(lhs, rhs)) return false;
        }
        return true;
    };
    auto hits = par::filter(static_cast<std::size_t>(cs.total), qualifies);
    std::vector<Vec> out;
    for (auto code : hits) out.push_back(vec_of(code));
    (void)n;
    return out;
}

std::vector<FoundForm> search_coseparability_form(const Hopf& h, DegreeBound d,
                                                  uint64_t budget) {
    const Bisemialgebra& b = h.b;
    const auto* r = b.R();
    const auto ids = b.basis.enumerate(d.bound);
    const std::size_t n = ids.size();
    std::vector<BasisId> pairs;
    for (const auto& i : ids)
        for (const auto& j : ids) pairs.push_back(BasisId::pair(i, j));
    CodeSpace cs = CodeSpace::make(r, pairs.size(), budget, "coseparability search");
    EqOracle eq1 = carrier_eq(b.quotient, r, b.basis);

    auto form_of = [&](std::size_t code) {
        std::vector<std::size_t> dg;
        cs.digits(code, dg);
        std::map<BasisId, Elem> table;
        for (std::size_t i = 0; i < pairs.size(); ++i) table[pairs[i]] = cs.elems[dg[i]];
        return Functional::from_table(r, std::move(table));
    };
    auto qualifies = [&](std::size_t code) {
        Functional delta = form_of(code);
        for (const auto& x : ids) {
            // delta o Delta = eps
            if (delta.apply(b.delta.at(x)) != b.counit.at(x)) return false;
        }
        for (const auto& a : ids)
            for (const auto& bb : ids) {
                // sum a1 delta(a2 (x) b) = sum delta(a (x) b1) b2
                Vec lhs(r), rhs(r);
                for (const auto& [p, c] : b.delta.at(a).terms())
                    lhs = vec_add(lhs,
                                  scalar_mul(r->mul(c, delta.at(BasisId::pair(p.right(), bb))),
                                             Vec::basis(r, p.left())));
                for (const auto& [p, c] : b.delta.at(bb).terms())
                    rhs = vec_add(rhs,
                                  scalar_mul(r->mul(c, delta.at(BasisId::pair(a, p.left()))),
                                             Vec::basis(r, p.right())));
                if (!eq1(lhs, rhs)) return false;
            }
        return true;
    };
    auto hits = par::filter(static_cast<std::size_t>(cs.total), qualifies);
    std::vector<FoundForm> out;
    for (auto code : hits) {
        FoundForm ff;
        std::vector<std::size_t> dg;
        cs.digits(code, dg);
        for (std::size_t i = 0; i < pairs.size(); ++i) ff.table.emplace_back(pairs[i], cs.elems[dg[i]]);
        out.push_back(std::move(ff));
    }
    (void)n;
    return out;
}

}  // namespace semihopf
