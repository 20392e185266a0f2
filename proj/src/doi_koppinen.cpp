#include "semihopf/doi_koppinen.hpp"

#include "semihopf/examples.hpp"
#include "semihopf/parallel.hpp"

namespace semihopf::dk {

namespace {

template <class Fn>
CheckReport run_law(std::size_t n, long bound, Fn&& fn) {
    CheckReport rep;
    rep.checked_bound = bound;
    rep.cases_checked = n;
    auto hits = par::collect<Witness>(n, std::forward<Fn>(fn));
    for (auto& [i, w] : hits) {
        (void)i;
        rep.fail(std::move(w));
        if (rep.witnesses.size() >= 32) break;
    }
    return rep;
}

}  // namespace

DKDatum self_datum(const Bisemialgebra& b) {
    DKDatum d;
    d.b = b;
    d.a = ComoduleAlgebra{b.algebra(), b.delta};
    d.c = ModuleCoalgebra{b.coalgebra(), b.mu};
    return d;
}

DKDatum trivial_datum(const Semialgebra& a, const Semicoalgebra& c, Ring s) {
    if (a.ring != s || c.ring != s)
        throw type_error("trivial datum needs all parts over the same semiring");
    Hopf triv = examples::trivial(s);
    const auto* r = s.get();
    BasisId one = BasisId::atom("1");
    DKDatum d;
    d.b = triv.b;
    d.a.a = a;
    d.a.coaction = LinearMap(r, [r, one](const BasisId& x) {
        return Vec::basis(r, BasisId::pair(x, one));
    });
    d.c.c = c;
    d.c.action = LinearMap(r, [r, one](const BasisId& p) {
        if (!p.is_pair() || !(p.right() == one)) throw basis_domain_error(p.str());
        return Vec::basis(r, p.left());
    });
    return d;
}

CheckReport check_action_coaction(CompatKind kind, const Semialgebra& a,
                                  const LinearMap& map, const Bisemialgebra& b,
                                  DegreeBound d) {
    if (kind != CompatKind::rma && kind != CompatKind::rca)
        throw config_error("a semialgebra carries rma or rca compatibilities");
    const auto* r = a.R();
    const auto aids = a.basis.enumerate(d.bound);
    const auto bids = b.basis.enumerate(d.bound);
    const std::size_t na = aids.size(), nb = bids.size();
    EqOracle eqA = carrier_eq(a.quotient, r, a.basis);

    if (kind == CompatKind::rma) {
        CheckReport rep = run_law(na * na * nb, d.bound, [&](std::size_t i) -> std::optional<Witness> {
            const BasisId& x = aids[i / (na * nb)];
            const BasisId& y = aids[(i / nb) % na];
            const BasisId& w = bids[i % nb];
            Vec lhs = map.apply(tensor_vec(a.mu.at(BasisId::pair(x, y)), Vec::basis(r, w)));
            Vec rhs(r);
            for (const auto& [q, c] : b.delta.at(w).terms()) {
                Vec xl = map.at(BasisId::pair(x, q.left()));
                Vec yr = map.at(BasisId::pair(y, q.right()));
                rhs = vec_add(rhs, scalar_mul(c, a.mu.apply(tensor_vec(xl, yr))));
            }
            if (!eqA(lhs, rhs))
                return Witness{"module_algebra", "(" + x.str() + ", " + y.str() + ", " +
                               w.str() + ")", lhs.str(), rhs.str()};
            return std::nullopt;
        });
        for (const auto& w : bids) {
            ++rep.cases_checked;
            Vec lhs = map.apply(tensor_vec(a.unit, Vec::basis(r, w)));
            Vec rhs = scalar_mul(b.counit.at(w), a.unit);
            if (!eqA(lhs, rhs))
                rep.fail({"module_algebra_unit", "(" + w.str() + ")", lhs.str(), rhs.str()});
        }
        return rep;
    }

    // rca
    CheckReport rep = run_law(na * na, d.bound, [&](std::size_t i) -> std::optional<Witness> {
        const BasisId& x = aids[i / na];
        const BasisId& y = aids[i % na];
        Vec lhs = map.apply(a.mu.at(BasisId::pair(x, y)));
        Vec rhs(r);
        for (const auto& [p, cp] : map.at(x).terms())
            for (const auto& [q, cq] : map.at(y).terms()) {
                Vec al = a.mu.at(BasisId::pair(p.left(), q.left()));
                Vec br = b.mu.at(BasisId::pair(p.right(), q.right()));
                rhs = vec_add(rhs, scalar_mul(r->mul(cp, cq), tensor_vec(al, br)));
            }
        if (!(lhs == rhs))
            return Witness{"comodule_algebra", "(" + x.str() + ", " + y.str() + ")",
                           lhs.str(), rhs.str()};
        return std::nullopt;
    });
    ++rep.cases_checked;
    Vec lhs = map.apply(a.unit);
    Vec rhs = tensor_vec(a.unit, b.unit);
    if (!(lhs == rhs)) rep.fail({"comodule_algebra_unit", "(1)", lhs.str(), rhs.str()});
    return rep;
}

CheckReport check_action_coaction(CompatKind kind, const Semicoalgebra& c,
                                  const LinearMap& map, const Bisemialgebra& b,
                                  DegreeBound d) {
    if (kind != CompatKind::rmc && kind != CompatKind::com_coal)
        throw config_error("a semicoalgebra carries rmc or com_coal compatibilities");
    const auto* r = c.R();
    const auto cids = c.basis.enumerate(d.bound);
    const auto bids = b.basis.enumerate(d.bound);
    const std::size_t nc = cids.size(), nb = bids.size();

    if (kind == CompatKind::rmc) {
        EqOracle eq2 = tensor_eq(c.quotient, r, 2);
        CheckReport rep = run_law(nc * nb, d.bound, [&](std::size_t i) -> std::optional<Witness> {
            const BasisId& x = cids[i / nb];
            const BasisId& w = bids[i % nb];
            Vec lhs = c.delta.apply(map.at(BasisId::pair(x, w)));
            Vec rhs(r);
            for (const auto& [p, cp] : c.delta.at(x).terms())
                for (const auto& [q, cq] : b.delta.at(w).terms()) {
                    Vec l = map.at(BasisId::pair(p.left(), q.left()));
                    Vec rr = map.at(BasisId::pair(p.right(), q.right()));
                    rhs = vec_add(rhs, scalar_mul(r->mul(cp, cq), tensor_vec(l, rr)));
                }
            if (!eq2(lhs, rhs))
                return Witness{"module_coalgebra", "(" + x.str() + ", " + w.str() + ")",
                               lhs.str(), rhs.str()};
            Elem el = c.counit.apply(map.at(BasisId::pair(x, w)));
            Elem er = r->mul(c.counit.at(x), b.counit.at(w));
            if (el != er)
                return Witness{"module_coalgebra_counit", "(" + x.str() + ", " + w.str() + ")",
                               r->format(el), r->format(er)};
            return std::nullopt;
        });
        return rep;
    }

    // com_coal
    CheckReport rep = run_law(nc, d.bound, [&](std::size_t i) -> std::optional<Witness> {
        const BasisId& x = cids[i];
        Vec lhs(r), rhs(r);
        for (const auto& [p, cp] : map.at(x).terms())
            for (const auto& [q, cq] : c.delta.at(p.left()).terms())
                lhs = vec_add(lhs, scalar_mul(r->mul(cp, cq),
                                              Vec::basis(r, BasisId::pair(q.left(),
                                                  BasisId::pair(q.right(), p.right())))));
        for (const auto& [q, cq] : c.delta.at(x).terms())
            for (const auto& [p1, cp1] : map.at(q.left()).terms())
                for (const auto& [p2, cp2] : map.at(q.right()).terms()) {
                    Vec prod = b.mu.at(BasisId::pair(p1.right(), p2.right()));
                    Vec term = tensor_vec(Vec::basis(r, p1.left()),
                                          tensor_vec(Vec::basis(r, p2.left()), prod));
                    rhs = vec_add(rhs, scalar_mul(r->mul(cq, r->mul(cp1, cp2)), term));
                }
        if (!(lhs == rhs))
            return Witness{"comodule_coalgebra", "(" + x.str() + ")", lhs.str(), rhs.str()};
        Vec cl = apply_counit_left(c.counit, map.at(x));
        Vec cr = scalar_mul(c.counit.at(x), b.unit);
        if (!(cl == cr))
            return Witness{"comodule_coalgebra_counit", "(" + x.str() + ")", cl.str(),
                           cr.str()};
        return std::nullopt;
    });
    return rep;
}

CheckReport check_datum(const DKDatum& datum, DegreeBound d) {
    CheckReport rep =
        check_action_coaction(CompatKind::rca, datum.a.a, datum.a.coaction, datum.b, d);
    rep.merge(check_action_coaction(CompatKind::rmc, datum.c.c, datum.c.action, datum.b, d));
    return rep;
}

CheckReport check_module_action(const LinearMap& action, const BasisDomain& carrier,
                                const Bisemialgebra& b, DegreeBound d) {
    const auto* r = b.R();
    const auto states = carrier.enumerate(d.bound);
    const auto bids = b.basis.enumerate(d.bound);
    const std::size_t ns = states.size(), nb = bids.size();
    CheckReport rep = run_law(ns * nb * nb, d.bound, [&](std::size_t i) -> std::optional<Witness> {
        const BasisId& s = states[i / (nb * nb)];
        const BasisId& u = bids[(i / nb) % nb];
        const BasisId& v = bids[i % nb];
        Vec su = action.at(BasisId::pair(s, u));
        Vec lhs = action.apply(tensor_vec(su, Vec::basis(r, v)));
        Vec rhs = action.apply(tensor_vec(Vec::basis(r, s), b.mu.at(BasisId::pair(u, v))));
        if (!(lhs == rhs))
            return Witness{"action_associative",
                           "(" + s.str() + ", " + u.str() + ", " + v.str() + ")", lhs.str(),
                           rhs.str()};
        return std::nullopt;
    });
    for (const auto& s : states) {
        ++rep.cases_checked;
        Vec sv = Vec::basis(r, s);
        Vec lhs = action.apply(tensor_vec(sv, b.unit));
        if (!(lhs == sv)) rep.fail({"action_unital", "(" + s.str() + ")", lhs.str(), sv.str()});
    }
    return rep;
}

CheckReport check_comodule_coaction(const LinearMap& coaction, const BasisDomain& carrier,
                                    const Bisemialgebra& b, DegreeBound d) {
    const auto* r = b.R();
    const auto states = carrier.enumerate(d.bound);
    LinearMap id = identity_map(r);
    return run_law(states.size(), d.bound, [&](std::size_t i) -> std::optional<Witness> {
        const BasisId& s = states[i];
        Vec rs = coaction.at(s);
        Vec lhs = reassoc_right(tensor_map(coaction, id).apply(rs));
        Vec rhs = tensor_map(id, b.delta).apply(rs);
        if (!(lhs == rhs))
            return Witness{"coaction_coassociative", "(" + s.str() + ")", lhs.str(),
                           rhs.str()};
        Vec leg = apply_counit_right(b.counit, rs);
        Vec sv = Vec::basis(r, s);
        if (!(leg == sv))
            return Witness{"coaction_counital", "(" + s.str() + ")", leg.str(), sv.str()};
        return std::nullopt;
    });
}

CheckReport check_dk_module(const DKModule& m, const DKDatum& datum, DegreeBound d) {
    const auto* r = datum.b.R();
    const auto states = m.states.enumerate(d.bound);
    const auto aids = datum.a.a.basis.enumerate(d.bound);
    const std::size_t ns = states.size(), na = aids.size();
    return run_law(ns * na, d.bound, [&](std::size_t i) -> std::optional<Witness> {
        const BasisId& s = states[i / na];
        const BasisId& x = aids[i % na];
        Vec lhs = m.coaction.apply(m.action.at(BasisId::pair(s, x)));
        Vec rhs(r);
        for (const auto& [p, cp] : m.coaction.at(s).terms())
            for (const auto& [q, cq] : datum.a.coaction.at(x).terms()) {
                Vec ma = m.action.at(BasisId::pair(p.left(), q.left()));
                Vec cb = datum.c.action.at(BasisId::pair(p.right(), q.right()));
                rhs = vec_add(rhs, scalar_mul(r->mul(cp, cq), tensor_vec(ma, cb)));
            }
        if (!(lhs == rhs))
            return Witness{"dk_module_compat", "(" + s.str() + ", " + x.str() + ")",
                           lhs.str(), rhs.str()};
        return std::nullopt;
    });
}

namespace {
// eps_C expressed on the dual basis of the truncated carrier.
Vec counit_as_dual_vec(const DKDatum& datum, const std::vector<BasisId>& cids) {
    const auto* r = datum.b.R();
    Vec out(r);
    for (const auto& c : cids) out.add_term(BasisId::dual(c), datum.c.c.counit.at(c));
    return out;
}
}  // namespace

Semialgebra smash_product(const DKDatum& datum, DegreeBound truncation) {
    const auto* r = datum.b.R();
    const auto cids = datum.c.c.basis.enumerate(truncation.bound);

    Semialgebra out;
    out.ring = datum.b.ring;
    out.name = "smash(" + datum.a.a.name + ", " + datum.c.c.name + "*)";
    BasisDomain cdom = datum.c.c.basis;
    cdom.truncation = cdom.finite ? cdom.truncation : truncation.bound;
    out.basis = pair_domain(datum.a.a.basis, dual_domain(cdom));

    LinearMap mu(r, [r, datum, cids](const BasisId& p) {
        // (a # c_j*) (b # c_l*) = sum a0 b # (a1 c_l*) * c_j*
        if (!p.is_pair() || !p.left().is_pair() || !p.right().is_pair())
            throw basis_domain_error(p.str());
        const BasisId& a = p.left().left();
        const BasisId& cj = p.left().right().dual_of();
        const BasisId& bb = p.right().left();
        const BasisId& cl = p.right().right().dual_of();
        Vec out_v(r);
        for (const auto& [pc, cr] : datum.a.coaction.at(a).terms()) {
            Vec left = datum.a.a.mu.at(BasisId::pair(pc.left(), bb));
            // h = (a1 c_l*) * c_j*, materialized on the truncated dual basis
            for (const auto& c : cids) {
                Elem hc = r->zero();
                for (const auto& [q, cq] : datum.c.c.delta.at(c).terms()) {
                    if (!(q.right() == cj)) continue;
                    Vec moved = datum.c.action.at(BasisId::pair(q.left(), pc.right()));
                    hc = r->add(hc, r->mul(cq, moved.coeff(cl)));
                }
                if (r->is_zero(hc)) continue;
                out_v = vec_add(out_v, scalar_mul(r->mul(cr, hc),
                                                  tensor_vec(left, Vec::basis(r, BasisId::dual(c)))));
            }
        }
        return out_v;
    });
    out.mu = mu;
    out.unit = tensor_vec(datum.a.a.unit, counit_as_dual_vec(datum, cids));
    return out;
}

LinearMap smash_embedding(const DKDatum& datum, DegreeBound truncation) {
    const auto* r = datum.b.R();
    const auto cids = datum.c.c.basis.enumerate(truncation.bound);
    Vec eps = counit_as_dual_vec(datum, cids);
    return LinearMap(r, [r, eps](const BasisId& a) {
        return tensor_vec(Vec::basis(r, a), eps);
    });
}

LinearMap dk_hom_product(const LinearMap& f, const LinearMap& g, const DKDatum& datum) {
    const auto* r = datum.b.R();
    return LinearMap(r, [r, f, g, datum](const BasisId& c) {
        Vec out(r);
        for (const auto& [p, cc] : datum.c.c.delta.at(c).terms()) {
            const BasisId& c1 = p.left();
            const BasisId& c2 = p.right();
            for (const auto& [af, caf] : f.at(c2).terms()) {
                for (const auto& [q, cr] : datum.a.coaction.at(af).terms()) {
                    Vec moved = datum.c.action.at(BasisId::pair(c1, q.right()));
                    Vec gval = g.apply(moved);
                    Vec prod = datum.a.a.mu.apply(tensor_vec(Vec::basis(r, q.left()), gval));
                    out = vec_add(out, scalar_mul(r->mul(cc, r->mul(caf, cr)), prod));
                }
            }
        }
        return out;
    });
}

LinearMap dk_hom_unit(const DKDatum& datum) {
    const auto* r = datum.b.R();
    return LinearMap(r, [r, datum](const BasisId& c) {
        return scalar_mul(datum.c.c.counit.at(c), datum.a.a.unit);
    });
}

CheckReport check_dk_hom_associative(const DKDatum& datum, DegreeBound d) {
    const auto* r = datum.b.R();
    const auto cids = datum.c.c.basis.enumerate(d.bound);
    const auto aids = datum.a.a.basis.enumerate(d.bound);
    // coordinate maps c -> delta_{c,c0} a0 span enough of Hom(C, A) at this scale
    std::vector<LinearMap> gens;
    for (const auto& c0 : cids)
        for (const auto& a0 : aids) {
            gens.push_back(LinearMap(r, [r, c0, a0](const BasisId& x) {
                return x == c0 ? Vec::basis(r, a0) : Vec(r);
            }));
        }
    EqOracle eqA = carrier_eq(datum.a.a.quotient, r, datum.a.a.basis);
    const std::size_t ng = gens.size();
    CheckReport rep = run_law(ng * ng * ng, d.bound, [&](std::size_t i) -> std::optional<Witness> {
        const LinearMap& f = gens[i / (ng * ng)];
        const LinearMap& g = gens[(i / ng) % ng];
        const LinearMap& h = gens[i % ng];
        LinearMap left = dk_hom_product(dk_hom_product(f, g, datum), h, datum);
        LinearMap right = dk_hom_product(f, dk_hom_product(g, h, datum), datum);
        for (const auto& c : cids) {
            Vec lv = left.at(c), rv = right.at(c);
            if (!eqA(lv, rv))
                return Witness{"hom_product_associative",
                               "maps " + std::to_string(i) + " at " + c.str(), lv.str(),
                               rv.str()};
        }
        return std::nullopt;
    });
    // unit laws
    LinearMap unit = dk_hom_unit(datum);
    for (std::size_t gi = 0; gi < ng; ++gi) {
        LinearMap lu = dk_hom_product(gens[gi], unit, datum);
        LinearMap ru = dk_hom_product(unit, gens[gi], datum);
        for (const auto& c : cids) {
            rep.cases_checked += 2;
            Vec expect = gens[gi].at(c);
            Vec lv = lu.at(c);
            if (!eqA(lv, expect))
                rep.fail({"hom_product_right_unit",
                          "map " + std::to_string(gi) + " at " + c.str(), lv.str(),
                          expect.str()});
            Vec rv = ru.at(c);
            if (!eqA(rv, expect))
                rep.fail({"hom_product_left_unit",
                          "map " + std::to_string(gi) + " at " + c.str(), rv.str(),
                          expect.str()});
        }
    }
    return rep;
}

LinearMap entwining_map(const DKDatum& datum) {
    const auto* r = datum.b.R();
    return LinearMap(r, [r, datum](const BasisId& p) {
        if (!p.is_pair()) throw type_error("entwining map acts on C (x) A labels");
        const BasisId& c = p.left();
        const BasisId& a = p.right();
        Vec out(r);
        for (const auto& [q, cr] : datum.a.coaction.at(a).terms()) {
            Vec moved = datum.c.action.at(BasisId::pair(c, q.right()));
            out = vec_add(out, scalar_mul(cr, tensor_vec(Vec::basis(r, q.left()), moved)));
        }
        return out;
    });
}

CheckReport verify_entwining_equivalence(const DKModule& m, const DKDatum& datum,
                                         DegreeBound d) {
    const auto* r = datum.b.R();
    LinearMap psi = entwining_map(datum);
    const auto states = m.states.enumerate(d.bound);
    const auto aids = datum.a.a.basis.enumerate(d.bound);
    const std::size_t ns = states.size(), na = aids.size();

    CheckReport rep = run_law(ns * na, d.bound, [&](std::size_t i) -> std::optional<Witness> {
        const BasisId& s = states[i / na];
        const BasisId& x = aids[i % na];
        Vec lhs = m.coaction.apply(m.action.at(BasisId::pair(s, x)));
        // route through psi: (action (x) C) o (M (x) psi) o (coaction (x) A)
        Vec route(r);
        for (const auto& [p, cp] : m.coaction.at(s).terms()) {
            for (const auto& [e, ce] : psi.at(BasisId::pair(p.right(), x)).terms()) {
                Vec ma = m.action.at(BasisId::pair(p.left(), e.left()));
                route = vec_add(route, scalar_mul(r->mul(cp, ce),
                                                  tensor_vec(ma, Vec::basis(r, e.right()))));
            }
        }
        if (!(lhs == route))
            return Witness{"entwined_module", "(" + s.str() + ", " + x.str() + ")",
                           lhs.str(), route.str()};
        return std::nullopt;
    });

    CheckReport direct = check_dk_module(m, datum, d);
    if (direct.pass != rep.pass) {
        rep.fail({"entwining_equivalence", "(verdicts)",
                  std::string(rep.pass ? "psi-route pass" : "psi-route fail"),
                  std::string(direct.pass ? "direct pass" : "direct fail")});
    }
    rep.cases_checked += direct.cases_checked;
    return rep;
}

}  // namespace semihopf::dk
