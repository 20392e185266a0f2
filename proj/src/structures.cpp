#include "semihopf/structures.hpp"

#include <sstream>

#include "semihopf/parallel.hpp"

namespace semihopf {

namespace {

constexpr std::size_t kWitnessCap = 64;

// Runs fn over [0,n) through the parallel kernel, gathering witnesses in
// index order so reports are identical across schedules and modes.
template <class Fn>
CheckReport run_law(std::size_t n, long bound, Fn&& fn) {
    CheckReport rep;
    rep.checked_bound = bound;
    rep.cases_checked = n;
    auto hits = par::collect<Witness>(n, std::forward<Fn>(fn));
    if (!hits.empty()) {
        rep.pass = false;
        for (std::size_t i = 0; i < hits.size() && i < kWitnessCap; ++i)
            rep.witnesses.push_back(std::move(hits[i].second));
        if (hits.size() > kWitnessCap)
            rep.note = std::to_string(hits.size() - kWitnessCap) + " further witnesses elided";
    }
    return rep;
}

std::string tuple_str(std::initializer_list<const BasisId*> ids) {
    std::string out = "(";
    bool first = true;
    for (const auto* b : ids) {
        if (!first) out += ", ";
        first = false;
        out += b->str();
    }
    return out + ")";
}

}  // namespace

Vec Bisemialgebra::mul_pair(const Vec& x, const Vec& y) const {
    Vec out(R());
    for (const auto& [p, cx] : x.terms()) {
        if (!p.is_pair()) throw type_error("pair product needs pair-basis vectors");
        for (const auto& [q, cy] : y.terms()) {
            if (!q.is_pair()) throw type_error("pair product needs pair-basis vectors");
            Vec lhs = mu.at(BasisId::pair(p.left(), q.left()));
            Vec rhs = mu.at(BasisId::pair(p.right(), q.right()));
            out = vec_add(out, scalar_mul(R()->mul(cx, cy), tensor_vec(lhs, rhs)));
        }
    }
    return out;
}

CheckReport check_semialgebra(const Semialgebra& a, DegreeBound d) {
    const auto ids = a.basis.enumerate(d.bound);
    const std::size_t n = ids.size();
    EqOracle eq = carrier_eq(a.quotient, a.R(), a.basis);

    CheckReport assoc = run_law(n * n * n, d.bound, [&](std::size_t i) -> std::optional<Witness> {
        const BasisId& u = ids[i / (n * n)];
        const BasisId& v = ids[(i / n) % n];
        const BasisId& w = ids[i % n];
        Vec uv = a.mu.at(BasisId::pair(u, v));
        Vec vw = a.mu.at(BasisId::pair(v, w));
        Vec lhs = a.mu.apply(tensor_vec(uv, Vec::basis(a.R(), w)));
        Vec rhs = a.mu.apply(tensor_vec(Vec::basis(a.R(), u), vw));
        if (!eq(lhs, rhs))
            return Witness{"mu_associative", tuple_str({&u, &v, &w}), lhs.str(), rhs.str()};
        return std::nullopt;
    });

    CheckReport unit = run_law(n, d.bound, [&](std::size_t i) -> std::optional<Witness> {
        const BasisId& b = ids[i];
        Vec bb = Vec::basis(a.R(), b);
        Vec l = a.mu.apply(tensor_vec(a.unit, bb));
        if (!eq(l, bb)) return Witness{"unit_left", tuple_str({&b}), l.str(), bb.str()};
        Vec r = a.mu.apply(tensor_vec(bb, a.unit));
        if (!eq(r, bb)) return Witness{"unit_right", tuple_str({&b}), r.str(), bb.str()};
        return std::nullopt;
    });

    assoc.merge(unit);
    return assoc;
}

CheckReport check_semicoalgebra(const Semicoalgebra& c, DegreeBound d) {
    const auto ids = c.basis.enumerate(d.bound);
    const std::size_t n = ids.size();
    EqOracle eq1 = carrier_eq(c.quotient, c.R(), c.basis);
    EqOracle eq3 = tensor_eq(c.quotient, c.R(), 3);
    LinearMap id = identity_map(c.R());

    CheckReport coassoc = run_law(n, d.bound, [&](std::size_t i) -> std::optional<Witness> {
        const BasisId& b = ids[i];
        Vec db = c.delta.at(b);
        Vec lhs = reassoc_right(tensor_map(c.delta, id).apply(db));
        Vec rhs = tensor_map(id, c.delta).apply(db);
        if (!eq3(lhs, rhs))
            return Witness{"delta_coassociative", tuple_str({&b}), lhs.str(), rhs.str()};
        return std::nullopt;
    });

    CheckReport counit = run_law(n, d.bound, [&](std::size_t i) -> std::optional<Witness> {
        const BasisId& b = ids[i];
        Vec bb = Vec::basis(c.R(), b);
        Vec db = c.delta.at(b);
        Vec l = apply_counit_left(c.counit, db);
        if (!eq1(l, bb)) return Witness{"counit_left", tuple_str({&b}), l.str(), bb.str()};
        Vec r = apply_counit_right(c.counit, db);
        if (!eq1(r, bb)) return Witness{"counit_right", tuple_str({&b}), r.str(), bb.str()};
        return std::nullopt;
    });

    coassoc.merge(counit);
    return coassoc;
}

CheckReport check_bisemialgebra(const Bisemialgebra& b, DegreeBound d) {
    const auto ids = b.basis.enumerate(d.bound);
    const std::size_t n = ids.size();
    EqOracle eq2 = tensor_eq(b.quotient, b.R(), 2);

    CheckReport mult = run_law(n * n, d.bound, [&](std::size_t i) -> std::optional<Witness> {
        const BasisId& u = ids[i / n];
        const BasisId& v = ids[i % n];
        Vec lhs = b.delta.apply(b.mu.at(BasisId::pair(u, v)));
        Vec rhs = b.mul_pair(b.delta.at(u), b.delta.at(v));
        if (!eq2(lhs, rhs))
            return Witness{"delta_multiplicative", tuple_str({&u, &v}), lhs.str(), rhs.str()};
        Elem el = b.counit.apply(b.mu.at(BasisId::pair(u, v)));
        Elem er = b.R()->mul(b.counit.at(u), b.counit.at(v));
        if (el != er)
            return Witness{"counit_multiplicative", tuple_str({&u, &v}), b.R()->format(el),
                           b.R()->format(er)};
        return std::nullopt;
    });

    CheckReport units;
    units.checked_bound = d.bound;
    units.cases_checked = 2;
    Vec du = b.delta.apply(b.unit);
    Vec uu = tensor_vec(b.unit, b.unit);
    if (!eq2(du, uu)) units.fail({"delta_unital", "(1)", du.str(), uu.str()});
    Elem eu = b.counit.apply(b.unit);
    if (!b.R()->is_one(eu))
        units.fail({"counit_unital", "(1)", b.R()->format(eu), b.R()->format(b.R()->one())});

    mult.merge(units);
    return mult;
}

CheckReport check_hopf(const Hopf& h, DegreeBound d) {
    const Bisemialgebra& b = h.b;
    const auto ids = b.basis.enumerate(d.bound);
    const std::size_t n = ids.size();
    EqOracle eq1 = carrier_eq(b.quotient, b.R(), b.basis);
    LinearMap id = identity_map(b.R());

    return run_law(n, d.bound, [&](std::size_t i) -> std::optional<Witness> {
        const BasisId& x = ids[i];
        Vec dx = b.delta.at(x);
        Vec target = scalar_mul(b.counit.at(x), b.unit);
        Vec l = b.mu.apply(tensor_map(h.antipode, id).apply(dx));
        if (!eq1(l, target))
            return Witness{"antipode_left", tuple_str({&x}), l.str(), target.str()};
        Vec r = b.mu.apply(tensor_map(id, h.antipode).apply(dx));
        if (!eq1(r, target))
            return Witness{"antipode_right", tuple_str({&x}), r.str(), target.str()};
        return std::nullopt;
    });
}

CheckReport check_commutativity(const Semialgebra& a, DegreeBound d) {
    const auto ids = a.basis.enumerate(d.bound);
    const std::size_t n = ids.size();
    EqOracle eq = carrier_eq(a.quotient, a.R(), a.basis);
    return run_law(n * n, d.bound, [&](std::size_t i) -> std::optional<Witness> {
        const BasisId& u = ids[i / n];
        const BasisId& v = ids[i % n];
        Vec lhs = a.mu.at(BasisId::pair(u, v));
        Vec rhs = a.mu.at(BasisId::pair(v, u));
        if (!eq(lhs, rhs))
            return Witness{"mu_commutative", tuple_str({&u, &v}), lhs.str(), rhs.str()};
        return std::nullopt;
    });
}

CheckReport check_cocommutativity(const Semicoalgebra& c, DegreeBound d) {
    const auto ids = c.basis.enumerate(d.bound);
    EqOracle eq2 = tensor_eq(c.quotient, c.R(), 2);
    return run_law(ids.size(), d.bound, [&](std::size_t i) -> std::optional<Witness> {
        const BasisId& b = ids[i];
        Vec db = c.delta.at(b);
        Vec tw = twist(db);
        if (!eq2(tw, db))
            return Witness{"delta_cocommutative", tuple_str({&b}), tw.str(), db.str()};
        return std::nullopt;
    });
}

QuantumMonoidReport classify_quantum_monoid(const Hopf& h, DegreeBound d) {
    QuantumMonoidReport out;
    out.commutativity = check_commutativity(h.b.algebra(), d);
    out.cocommutativity = check_cocommutativity(h.b.coalgebra(), d);
    out.is_quantum_monoid = !out.commutativity.pass && !out.cocommutativity.pass;
    return out;
}

LinearMap convolve(const LinearMap& f, const LinearMap& g, const Semicoalgebra& c,
                   const Semialgebra& a) {
    if (f.ring() != g.ring() || f.ring() != c.R())
        throw type_error("convolution operands over different semirings");
    return LinearMap(a.R(), [f, g, delta = c.delta, mu = a.mu](const BasisId& b) {
        return mu.apply(tensor_map(f, g).apply(delta.at(b)));
    });
}

Functional convolve(const Functional& f, const Functional& g, const Semicoalgebra& c) {
    return Functional(c.R(), [f, g, delta = c.delta, ring = c.R()](const BasisId& b) {
        Elem acc = ring->zero();
        for (const auto& [p, coeff] : delta.at(b).terms()) {
            if (!p.is_pair()) throw type_error("coproduct must land in a pair basis");
            acc = ring->add(acc,
                            ring->mul(coeff, ring->mul(f.at(p.left()), g.at(p.right()))));
        }
        return acc;
    });
}

LinearMap convolution_unit(const Semicoalgebra& c, const Semialgebra& a) {
    return LinearMap(a.R(), [eps = c.counit, unit = a.unit](const BasisId& b) {
        return scalar_mul(eps.at(b), unit);
    });
}

CheckReport check_algebra_morphism(const LinearMap& f, const Semialgebra& src,
                                   const Semialgebra& tgt, DegreeBound d) {
    const auto ids = src.basis.enumerate(d.bound);
    const std::size_t n = ids.size();
    EqOracle eq = carrier_eq(tgt.quotient, tgt.R(), tgt.basis);

    CheckReport rep = run_law(n * n, d.bound, [&](std::size_t i) -> std::optional<Witness> {
        const BasisId& u = ids[i / n];
        const BasisId& v = ids[i % n];
        Vec lhs = f.apply(src.mu.at(BasisId::pair(u, v)));
        Vec rhs = tgt.mu.apply(tensor_vec(f.at(u), f.at(v)));
        if (!eq(lhs, rhs))
            return Witness{"morphism_multiplicative", tuple_str({&u, &v}), lhs.str(),
                           rhs.str()};
        return std::nullopt;
    });

    Vec fu = f.apply(src.unit);
    ++rep.cases_checked;
    if (!eq(fu, tgt.unit)) rep.fail({"morphism_unital", "(1)", fu.str(), tgt.unit.str()});
    return rep;
}

CheckReport check_coalgebra_morphism(const LinearMap& f, const Semicoalgebra& src,
                                     const Semicoalgebra& tgt, DegreeBound d) {
    const auto ids = src.basis.enumerate(d.bound);
    EqOracle eq2 = tensor_eq(tgt.quotient, tgt.R(), 2);
    return run_law(ids.size(), d.bound, [&](std::size_t i) -> std::optional<Witness> {
        const BasisId& b = ids[i];
        Vec lhs = tensor_map(f, f).apply(src.delta.at(b));
        Vec rhs = tgt.delta.apply(f.at(b));
        if (!eq2(lhs, rhs))
            return Witness{"morphism_comultiplicative", tuple_str({&b}), lhs.str(), rhs.str()};
        Elem el = src.counit.at(b);
        Elem er = tgt.counit.apply(f.at(b));
        if (el != er)
            return Witness{"morphism_counital", tuple_str({&b}), src.R()->format(el),
                           tgt.R()->format(er)};
        return std::nullopt;
    });
}

CheckReport check_bialgebra_morphism(const LinearMap& f, const Bisemialgebra& src,
                                     const Bisemialgebra& tgt, DegreeBound d) {
    CheckReport rep = check_algebra_morphism(f, src.algebra(), tgt.algebra(), d);
    rep.merge(check_coalgebra_morphism(f, src.coalgebra(), tgt.coalgebra(), d));
    return rep;
}

CheckReport check_hopf_morphism(const LinearMap& f, const Hopf& src, const Hopf& tgt,
                                DegreeBound d) {
    CheckReport rep = check_bialgebra_morphism(f, src.b, tgt.b, d);
    const auto ids = src.b.basis.enumerate(d.bound);
    EqOracle eq = carrier_eq(tgt.b.quotient, tgt.R(), tgt.b.basis);
    CheckReport anti = run_law(ids.size(), d.bound, [&](std::size_t i) -> std::optional<Witness> {
        const BasisId& b = ids[i];
        Vec lhs = f.apply(src.antipode.at(b));
        Vec rhs = tgt.antipode.apply(f.at(b));
        if (!eq(lhs, rhs))
            return Witness{"morphism_antipode", tuple_str({&b}), lhs.str(), rhs.str()};
        return std::nullopt;
    });
    rep.merge(anti);
    return rep;
}

CheckReport check_morphism(MorphismKind kind, const LinearMap& f, const StructureDesc& src,
                           const StructureDesc& tgt, DegreeBound d) {
    auto algebra_of = [](const StructureDesc& s) -> Semialgebra {
        if (const auto* a = std::get_if<Semialgebra>(&s)) return *a;
        if (const auto* b = std::get_if<Bisemialgebra>(&s)) return b->algebra();
        if (const auto* h = std::get_if<Hopf>(&s)) return h->b.algebra();
        throw config_error("descriptor carries no semialgebra structure");
    };
    auto coalgebra_of = [](const StructureDesc& s) -> Semicoalgebra {
        if (const auto* c = std::get_if<Semicoalgebra>(&s)) return *c;
        if (const auto* b = std::get_if<Bisemialgebra>(&s)) return b->coalgebra();
        if (const auto* h = std::get_if<Hopf>(&s)) return h->b.coalgebra();
        throw config_error("descriptor carries no semicoalgebra structure");
    };
    auto bialgebra_of = [](const StructureDesc& s) -> Bisemialgebra {
        if (const auto* b = std::get_if<Bisemialgebra>(&s)) return *b;
        if (const auto* h = std::get_if<Hopf>(&s)) return h->b;
        throw config_error("descriptor carries no bisemialgebra structure");
    };
    switch (kind) {
        case MorphismKind::algebra:
            return check_algebra_morphism(f, algebra_of(src), algebra_of(tgt), d);
        case MorphismKind::coalgebra:
            return check_coalgebra_morphism(f, coalgebra_of(src), coalgebra_of(tgt), d);
        case MorphismKind::bialgebra:
            return check_bialgebra_morphism(f, bialgebra_of(src), bialgebra_of(tgt), d);
        case MorphismKind::hopf: {
            const auto* hs = std::get_if<Hopf>(&src);
            const auto* ht = std::get_if<Hopf>(&tgt);
            if (!hs || !ht) throw config_error("hopf morphism check needs Hopf descriptors");
            return check_hopf_morphism(f, *hs, *ht, d);
        }
    }
    throw config_error("bad morphism kind");
}

CheckReport check_structure_quotient_compat(const StructureDesc& s, DegreeBound d) {
    CheckReport rep;
    auto run = [&](const Bisemialgebra& b, const LinearMap* antipode) {
        if (b.quotient.is_free()) {
            rep.note = "free quotient; nothing to check";
            return;
        }
        auto probes = b.basis.enumerate(d.bound);
        EqOracle eq1 = carrier_eq(b.quotient, b.R(), b.basis);
        EqOracle eq2 = tensor_eq(b.quotient, b.R(), 2);
        rep.merge(check_quotient_compat(b.mu, b.quotient, b.R(), probes, MapArity::binary,
                                        eq1));
        rep.merge(check_quotient_compat(b.delta, b.quotient, b.R(), probes, MapArity::unary,
                                        eq2));
        for (std::size_t gi = 0; gi < b.quotient.generators.size(); ++gi) {
            const auto& [u, v] = b.quotient.generators[gi];
            ++rep.cases_checked;
            Elem eu = b.counit.apply(u), ev = b.counit.apply(v);
            if (eu != ev)
                rep.fail({"quotient_compat_counit", "generator " + std::to_string(gi),
                          b.R()->format(eu), b.R()->format(ev)});
        }
        if (antipode)
            rep.merge(check_quotient_compat(*antipode, b.quotient, b.R(), probes,
                                            MapArity::unary, eq1));
    };
    if (const auto* a = std::get_if<Semialgebra>(&s)) {
        if (a->quotient.is_free()) {
            rep.note = "free quotient; nothing to check";
            return rep;
        }
        auto probes = a->basis.enumerate(d.bound);
        EqOracle eq1 = carrier_eq(a->quotient, a->R(), a->basis);
        rep.merge(check_quotient_compat(a->mu, a->quotient, a->R(), probes, MapArity::binary,
                                        eq1));
    } else if (const auto* c = std::get_if<Semicoalgebra>(&s)) {
        if (c->quotient.is_free()) {
            rep.note = "free quotient; nothing to check";
            return rep;
        }
        auto probes = c->basis.enumerate(d.bound);
        EqOracle eq2 = tensor_eq(c->quotient, c->R(), 2);
        rep.merge(check_quotient_compat(c->delta, c->quotient, c->R(), probes,
                                        MapArity::unary, eq2));
    } else if (const auto* b = std::get_if<Bisemialgebra>(&s)) {
        run(*b, nullptr);
    } else if (const auto* h = std::get_if<Hopf>(&s)) {
        run(h->b, &h->antipode);
    }
    return rep;
}

std::vector<std::pair<std::string, CheckReport>> full_check(const StructureDesc& s,
                                                            DegreeBound d) {
    std::vector<std::pair<std::string, CheckReport>> out;
    if (const auto* a = std::get_if<Semialgebra>(&s)) {
        out.emplace_back("semialgebra", check_semialgebra(*a, d));
    } else if (const auto* c = std::get_if<Semicoalgebra>(&s)) {
        out.emplace_back("semicoalgebra", check_semicoalgebra(*c, d));
    } else if (const auto* b = std::get_if<Bisemialgebra>(&s)) {
        out.emplace_back("semialgebra", check_semialgebra(b->algebra(), d));
        out.emplace_back("semicoalgebra", check_semicoalgebra(b->coalgebra(), d));
        out.emplace_back("bisemialgebra", check_bisemialgebra(*b, d));
    } else if (const auto* h = std::get_if<Hopf>(&s)) {
        out.emplace_back("semialgebra", check_semialgebra(h->b.algebra(), d));
        out.emplace_back("semicoalgebra", check_semicoalgebra(h->b.coalgebra(), d));
        out.emplace_back("bisemialgebra", check_bisemialgebra(h->b, d));
        out.emplace_back("hopf", check_hopf(*h, d));
    }
    bool free = std::visit(
        [](const auto& x) {
            if constexpr (std::is_same_v<std::decay_t<decltype(x)>, Hopf>)
                return x.b.quotient.is_free();
            else
                return x.quotient.is_free();
        },
        s);
    if (!free) out.emplace_back("quotient_compat", check_structure_quotient_compat(s, d));
    return out;
}

}  // namespace semihopf
