#include "semihopf/examples.hpp"

#include <algorithm>
#include <sstream>

namespace semihopf::examples {

namespace {

Vec basis_vec(const SemiringSpec* r, const BasisId& b) { return Vec::basis(r, b); }

// Product of two pair-basis vectors with componentwise multiplication given
// by mu; used to extend coproducts as algebra morphisms.
Vec pair_mul(const SemiringSpec* r, const LinearMap& mu, const Vec& x, const Vec& y) {
    Vec out(r);
    for (const auto& [p, cx] : x.terms())
        for (const auto& [q, cy] : y.terms()) {
            Vec l = mu.at(BasisId::pair(p.left(), q.left()));
            Vec rr = mu.at(BasisId::pair(p.right(), q.right()));
            out = vec_add(out, scalar_mul(r->mul(cx, cy), tensor_vec(l, rr)));
        }
    return out;
}

std::vector<std::string> split_csv(const std::string& s) {
    std::vector<std::string> out;
    std::istringstream is(s);
    std::string part;
    while (std::getline(is, part, ',')) {
        if (!part.empty()) out.push_back(part);
    }
    return out;
}

}  // namespace

Hopf trivial(Ring ring) {
    const auto* r = ring.get();
    BasisId one = BasisId::atom("1");
    Bisemialgebra b;
    b.ring = ring;
    b.name = "trivial";
    b.basis = atom_domain({one});
    b.mu = LinearMap(r, [r, one](const BasisId& p) {
        if (!p.is_pair() || !(p.left() == one) || !(p.right() == one))
            throw basis_domain_error(p.str());
        return basis_vec(r, one);
    });
    b.unit = basis_vec(r, one);
    b.delta = LinearMap(r, [r, one](const BasisId& x) {
        if (!(x == one)) throw basis_domain_error(x.str());
        return Vec::basis(r, BasisId::pair(one, one));
    });
    b.counit = Functional(r, [r, one](const BasisId& x) {
        if (!(x == one)) throw basis_domain_error(x.str());
        return r->one();
    });
    return Hopf{b, identity_map(r)};
}

Hopf group_hopf(long n, Ring ring) {
    if (n < 1) throw parameter_error("group order must be >= 1");
    const auto* r = ring.get();
    auto name_of = [](long k) -> std::string {
        if (k == 0) return "e";
        if (k == 1) return "g";
        return "g" + std::to_string(k);
    };
    std::vector<BasisId> atoms;
    std::map<BasisId, long> index;
    for (long k = 0; k < n; ++k) {
        atoms.push_back(BasisId::atom(name_of(k)));
        index.emplace(atoms.back(), k);
    }
    auto idx = [index](const BasisId& b) {
        auto it = index.find(b);
        if (it == index.end()) throw basis_domain_error(b.str());
        return it->second;
    };

    Bisemialgebra b;
    b.ring = ring;
    b.name = "group_hopf_Z" + std::to_string(n);
    b.basis = atom_domain(atoms);
    b.mu = LinearMap(r, [r, idx, atoms, n](const BasisId& p) {
        long i = idx(p.left()), j = idx(p.right());
        return basis_vec(r, atoms[static_cast<std::size_t>((i + j) % n)]);
    });
    b.unit = basis_vec(r, atoms[0]);
    b.delta = LinearMap(r, [r, idx](const BasisId& x) {
        idx(x);
        return Vec::basis(r, BasisId::pair(x, x));
    });
    b.counit = Functional(r, [r, idx](const BasisId& x) {
        idx(x);
        return r->one();
    });
    LinearMap antipode(r, [r, idx, atoms, n](const BasisId& x) {
        long i = idx(x);
        return basis_vec(r, atoms[static_cast<std::size_t>((n - i) % n)]);
    });
    return Hopf{b, antipode};
}

namespace {
Bisemialgebra poly_base(Ring ring, const std::string& name, long truncation) {
    const auto* r = ring.get();
    Bisemialgebra b;
    b.ring = ring;
    b.name = name;
    b.basis = power_domain(false, "x", truncation);
    b.mu = LinearMap(r, [r](const BasisId& p) {
        return basis_vec(r, BasisId::power(p.left().exponent() + p.right().exponent()));
    });
    b.unit = basis_vec(r, BasisId::power(0));
    return b;
}
}  // namespace

Bisemialgebra grouplike_poly(Ring ring, long truncation) {
    const auto* r = ring.get();
    Bisemialgebra b = poly_base(ring, "grouplike_poly", truncation);
    b.delta = LinearMap(r, [r](const BasisId& x) {
        return Vec::basis(r, BasisId::pair(x, x));
    });
    b.counit = Functional(r, [r](const BasisId&) { return r->one(); });
    return b;
}

Bisemialgebra binomial_poly(Ring ring, long truncation) {
    const auto* r = ring.get();
    Bisemialgebra b = poly_base(ring, "binomial_poly", truncation);
    b.delta = LinearMap(r, [r](const BasisId& x) {
        long i = x.exponent();
        Vec out(r);
        for (long j = 0; j <= i; ++j) {
            mpz_class binom;
            mpz_bin_uiui(binom.get_mpz_t(), static_cast<unsigned long>(i),
                         static_cast<unsigned long>(j));
            out.add_term(BasisId::pair(BasisId::power(j), BasisId::power(i - j)),
                         r->from_natural(binom));
        }
        return out;
    });
    b.counit = Functional(r, [r](const BasisId& x) {
        return x.exponent() == 0 ? r->one() : r->zero();
    });
    return b;
}

Hopf laurent_hopf(Ring ring, long truncation) {
    const auto* r = ring.get();
    Bisemialgebra b;
    b.ring = ring;
    b.name = "laurent_hopf";
    b.basis = power_domain(true, "x", truncation);
    b.mu = LinearMap(r, [r](const BasisId& p) {
        return basis_vec(r, BasisId::power(p.left().exponent() + p.right().exponent()));
    });
    b.unit = basis_vec(r, BasisId::power(0));
    b.delta = LinearMap(r, [r](const BasisId& x) {
        return Vec::basis(r, BasisId::pair(x, x));
    });
    b.counit = Functional(r, [r](const BasisId&) { return r->one(); });
    LinearMap antipode(r, [r](const BasisId& x) {
        return basis_vec(r, BasisId::power(-x.exponent()));
    });
    return Hopf{b, antipode};
}

namespace {
Bisemialgebra word_base(Ring ring, const std::string& name,
                        std::vector<std::string> alphabet, long truncation) {
    const auto* r = ring.get();
    Bisemialgebra b;
    b.ring = ring;
    b.name = name;
    b.basis = word_domain(alphabet, truncation);
    b.mu = LinearMap(r, [r](const BasisId& p) {
        std::vector<std::string> w = p.left().letters();
        const auto& w2 = p.right().letters();
        w.insert(w.end(), w2.begin(), w2.end());
        return basis_vec(r, BasisId::word(std::move(w)));
    });
    b.unit = basis_vec(r, BasisId::word({}));
    return b;
}
}  // namespace

Bisemialgebra words_grouplike(std::vector<std::string> alphabet, Ring ring, long truncation) {
    const auto* r = ring.get();
    Bisemialgebra b = word_base(ring, "words_grouplike", std::move(alphabet), truncation);
    b.delta = LinearMap(r, [r](const BasisId& w) {
        return Vec::basis(r, BasisId::pair(w, w));
    });
    b.counit = Functional(r, [r](const BasisId&) { return r->one(); });
    return b;
}

Bisemialgebra words_unshuffle(std::vector<std::string> alphabet, Ring ring, long truncation) {
    const auto* r = ring.get();
    Bisemialgebra b = word_base(ring, "words_unshuffle", std::move(alphabet), truncation);
    // letters are primitive; the coproduct distributes each letter to one of
    // the two legs, in order
    b.delta = LinearMap(r, [r](const BasisId& w) {
        Vec acc = Vec::basis(r, BasisId::pair(BasisId::word({}), BasisId::word({})));
        for (const auto& letter : w.letters()) {
            Vec next(r);
            for (const auto& [p, c] : acc.terms()) {
                auto lw = p.left().letters();
                auto rw = p.right().letters();
                auto lw2 = lw;
                lw2.push_back(letter);
                next.add_term(BasisId::pair(BasisId::word(lw2), p.right()), c);
                auto rw2 = rw;
                rw2.push_back(letter);
                next.add_term(BasisId::pair(p.left(), BasisId::word(rw2)), c);
            }
            acc = std::move(next);
        }
        return acc;
    });
    b.counit = Functional(r, [r](const BasisId& w) {
        return w.letters().empty() ? r->one() : r->zero();
    });
    return b;
}

Bisemialgebra tensor_semialgebra(std::vector<std::string> generators, long truncation,
                                 Ring ring) {
    if (truncation < 0) throw parameter_error("tensor semialgebra needs a truncation degree");
    Bisemialgebra b = words_unshuffle(std::move(generators), ring, truncation);
    b.name = "tensor_semialgebra";
    return b;
}

Bisemialgebra haz_words(std::vector<std::string> alphabet, Ring ring, long truncation) {
    const auto* r = ring.get();
    Bisemialgebra b = word_base(ring, "haz_words", std::move(alphabet), truncation);
    b.delta = LinearMap(r, [r](const BasisId& w) {
        const auto& letters = w.letters();
        Vec out(r);
        for (std::size_t i = 0; i <= letters.size(); ++i) {
            std::vector<std::string> pre(letters.begin(), letters.begin() + i);
            std::vector<std::string> suf(letters.begin() + i, letters.end());
            out.add_term(BasisId::pair(BasisId::word(pre), BasisId::word(suf)), r->one());
        }
        return out;
    });
    b.counit = Functional(r, [r](const BasisId& w) {
        return w.letters().empty() ? r->one() : r->zero();
    });
    return b;
}

Bisemialgebra divided_powers(Ring ring, long truncation) {
    const auto* r = ring.get();
    auto e = [](long k) { return BasisId::atom("e" + std::to_string(k), k); };
    Bisemialgebra b;
    b.ring = ring;
    b.name = "divided_powers";
    BasisDomain dom;
    dom.finite = false;
    dom.truncation = truncation;
    dom.up_to = [e](long maxdeg) {
        std::vector<BasisId> out;
        for (long k = 0; k <= maxdeg; ++k) out.push_back(e(k));
        return out;
    };
    b.basis = dom;
    b.mu = LinearMap(r, [r, e](const BasisId& p) {
        return basis_vec(r, e(p.left().degree() + p.right().degree()));
    });
    b.unit = basis_vec(r, e(0));
    b.delta = LinearMap(r, [r, e](const BasisId& x) {
        long n = x.degree();
        Vec out(r);
        for (long p = 0; p <= n; ++p) out.add_term(BasisId::pair(e(p), e(n - p)), r->one());
        return out;
    });
    b.counit = Functional(r, [r](const BasisId& x) {
        return x.degree() == 0 ? r->one() : r->zero();
    });
    return b;
}

Semicoalgebra s_plus_m(std::vector<std::string> generators, Ring ring) {
    const auto* r = ring.get();
    BasisId u = BasisId::atom("u");
    std::vector<BasisId> atoms{u};
    for (const auto& g : generators) atoms.push_back(BasisId::atom(g));
    Semicoalgebra c;
    c.ring = ring;
    c.name = "s_plus_m";
    c.basis = atom_domain(atoms);
    c.delta = LinearMap(r, [r, u](const BasisId& x) {
        if (x == u) return Vec::basis(r, BasisId::pair(u, u));
        Vec out(r);
        out.add_term(BasisId::pair(u, x), r->one());
        out.add_term(BasisId::pair(x, u), r->one());
        return out;
    });
    c.counit = Functional(r, [r, u](const BasisId& x) {
        return x == u ? r->one() : r->zero();
    });
    return c;
}

Bisemialgebra s_plus_a(const Semialgebra& a) {
    const auto* r = a.R();
    BasisId u = BasisId::atom("u");
    Bisemialgebra b;
    b.ring = a.ring;
    b.name = "s_plus_a";
    BasisDomain dom;
    dom.finite = a.basis.finite;
    dom.truncation = a.basis.truncation;
    dom.up_to = [u, inner = a.basis](long maxdeg) {
        std::vector<BasisId> out{u};
        auto rest = inner.up_to(maxdeg);
        out.insert(out.end(), rest.begin(), rest.end());
        return out;
    };
    b.basis = dom;
    b.mu = LinearMap(r, [r, u, amu = a.mu](const BasisId& p) {
        bool lu = p.left() == u, ru = p.right() == u;
        if (lu && ru) return Vec::basis(r, u);
        if (lu || ru) return Vec(r);  // pointwise product of the two summands
        return amu.at(p);
    });
    b.unit = vec_add(Vec::basis(r, u), a.unit);
    b.delta = LinearMap(r, [r, u](const BasisId& x) {
        if (x == u) return Vec::basis(r, BasisId::pair(u, u));
        Vec out(r);
        out.add_term(BasisId::pair(u, x), r->one());
        out.add_term(BasisId::pair(x, u), r->one());
        return out;
    });
    b.counit = Functional(r, [r, u](const BasisId& x) {
        return x == u ? r->one() : r->zero();
    });
    return b;
}

Hopf sweedler_monoid(Ring ring) {
    const auto* r = ring.get();
    if (r->additively_idempotent())
        throw parameter_error(
            "sweedler_monoid collapses over an additively idempotent base: from x + y ~ 0 "
            "and x + x = x the congruence forces x ~ 0 and y ~ 0; use the naturals");
    if (r->kind() != SemiringKind::naturals)
        throw parameter_error("sweedler_monoid ships over the naturals");

    BasisId one = BasisId::atom("1"), g = BasisId::atom("g"), x = BasisId::atom("x"),
            y = BasisId::atom("y"), gx = BasisId::atom("gx"), gy = BasisId::atom("gy");
    std::vector<BasisId> atoms{one, g, x, y, gx, gy};

    // normal-form products of the presented generators
    std::map<std::pair<std::string, std::string>, std::optional<std::string>> table;
    auto set = [&](const std::string& a, const std::string& b,
                   std::optional<std::string> v) { table[{a, b}] = std::move(v); };
    for (const auto& a : {"1", "g", "x", "y", "gx", "gy"}) {
        set("1", a, a);
        set(a, "1", a);
    }
    set("g", "g", "1");
    set("g", "x", "gx");
    set("g", "y", "gy");
    set("g", "gx", "x");
    set("g", "gy", "y");
    set("x", "g", "gy");
    set("y", "g", "gx");
    set("gx", "g", "y");
    set("gy", "g", "x");
    for (const auto& a : {"x", "y", "gx", "gy"})
        for (const auto& b : {"x", "y", "gx", "gy"}) set(a, b, std::nullopt);

    Bisemialgebra b;
    b.ring = ring;
    b.name = "sweedler_monoid";
    b.basis = atom_domain(atoms);
    b.mu = LinearMap(r, [r, table](const BasisId& p) {
        auto it = table.find({p.left().atom_name(), p.right().atom_name()});
        if (it == table.end()) throw basis_domain_error(p.str());
        if (!it->second) return Vec(r);
        return basis_vec(r, BasisId::atom(*it->second));
    });
    b.unit = basis_vec(r, one);
    std::map<BasisId, Vec> delta_table;
    delta_table[one] = Vec::basis(r, BasisId::pair(one, one));
    delta_table[g] = Vec::basis(r, BasisId::pair(g, g));
    auto skew = [&](const BasisId& v) {
        Vec out(r);
        out.add_term(BasisId::pair(v, one), r->one());
        out.add_term(BasisId::pair(g, v), r->one());
        return out;
    };
    delta_table[x] = skew(x);
    delta_table[y] = skew(y);
    auto skew_g = [&](const BasisId& gv) {
        Vec out(r);
        out.add_term(BasisId::pair(gv, g), r->one());
        out.add_term(BasisId::pair(one, gv), r->one());
        return out;
    };
    delta_table[gx] = skew_g(gx);
    delta_table[gy] = skew_g(gy);
    b.delta = LinearMap::from_table(r, std::move(delta_table));
    b.counit = Functional(r, [r, one, g](const BasisId& v) {
        return (v == one || v == g) ? r->one() : r->zero();
    });

    Vec rel1(r), rel2(r);
    rel1.add_term(x, r->one());
    rel1.add_term(y, r->one());
    rel2.add_term(gx, r->one());
    rel2.add_term(gy, r->one());
    Quotient q = Quotient::with_normalizer(
        min_subtract_normalizer({{x, y}, {gx, gy}}),
        {{rel1, Vec(r)}, {rel2, Vec(r)}}, null_pair_znf({{x, y}, {gx, gy}}));
    q.null_pairs = {{x, y}, {gx, gy}};
    b.quotient = std::move(q);

    std::map<BasisId, Vec> anti;
    anti[one] = basis_vec(r, one);
    anti[g] = basis_vec(r, g);
    anti[x] = basis_vec(r, gy);
    anti[y] = basis_vec(r, gx);
    anti[gx] = basis_vec(r, x);
    anti[gy] = basis_vec(r, y);
    return Hopf{b, LinearMap::from_table(r, std::move(anti))};
}

Hopf taft_monoid(long n, const Elem& q, Ring ring) {
    const auto* r = ring.get();
    if (n < 2) throw parameter_error("taft_monoid needs degree n >= 2");
    auto enumeration = r->enumeration();
    if (!enumeration)
        throw parameter_error(
            "taft_monoid needs a finite base semiring so q^n = 1 is decidable; over the "
            "naturals only q = 1 qualifies and is excluded by q^i != 1 for 0 < i < n");
    if (r->pow(q, static_cast<unsigned long>(n)) != r->one())
        throw parameter_error("taft parameter q must satisfy q^n = 1");
    for (long i = 1; i < n; ++i)
        if (r->pow(q, static_cast<unsigned long>(i)) == r->one())
            throw parameter_error("taft parameter q must be a primitive n-th root of unity");
    std::optional<Elem> neg_one;
    for (const auto& e : *enumeration)
        if (r->add(r->one(), e) == r->zero()) neg_one = e;
    if (!neg_one)
        throw parameter_error(
            "taft_monoid eliminates the y generator through y = (-1) x and needs an "
            "additive inverse of 1 in the base semiring");

    auto atom_of = [n](long a, long b) {
        std::string name;
        if (a == 1)
            name += "g";
        else if (a > 1)
            name += "g" + std::to_string(a);
        if (b == 1)
            name += "x";
        else if (b > 1)
            name += "x" + std::to_string(b);
        if (name.empty()) name = "1";
        (void)n;
        return BasisId::atom(name);
    };
    std::vector<BasisId> atoms;
    std::map<BasisId, std::pair<long, long>> index;
    for (long a = 0; a < n; ++a)
        for (long bb = 0; bb < n; ++bb) {
            atoms.push_back(atom_of(a, bb));
            index.emplace(atoms.back(), std::make_pair(a, bb));
        }
    auto idx = [index](const BasisId& v) {
        auto it = index.find(v);
        if (it == index.end()) throw basis_domain_error(v.str());
        return it->second;
    };

    Bisemialgebra B;
    B.ring = ring;
    B.name = "taft_monoid_n" + std::to_string(n);
    B.basis = atom_domain(atoms);
    // x^b g^c = q^{bc} g^c x^b, and x^n = 0
    B.mu = LinearMap(r, [r, idx, atom_of, q, n](const BasisId& p) {
        auto [a, bq] = idx(p.left());
        auto [c, dq] = idx(p.right());
        if (bq + dq >= n) return Vec(r);
        Elem coeff = r->pow(q, static_cast<unsigned long>(bq * c));
        return Vec::single(r, atom_of((a + c) % n, bq + dq), coeff);
    });
    B.unit = basis_vec(r, atom_of(0, 0));

    // coproduct as an algebra morphism from Delta(g) = g (x) g and
    // Delta(x) = x (x) 1 + g (x) x
    Vec dg = Vec::basis(r, BasisId::pair(atom_of(1, 0), atom_of(1, 0)));
    Vec dx(r);
    dx.add_term(BasisId::pair(atom_of(0, 1), atom_of(0, 0)), r->one());
    dx.add_term(BasisId::pair(atom_of(1, 0), atom_of(0, 1)), r->one());
    std::map<BasisId, Vec> delta_table;
    for (long a = 0; a < n; ++a)
        for (long bb = 0; bb < n; ++bb) {
            Vec acc = Vec::basis(r, BasisId::pair(atom_of(0, 0), atom_of(0, 0)));
            for (long i = 0; i < a; ++i) acc = pair_mul(r, B.mu, acc, dg);
            for (long i = 0; i < bb; ++i) acc = pair_mul(r, B.mu, acc, dx);
            delta_table[atom_of(a, bb)] = acc;
        }
    B.delta = LinearMap::from_table(r, std::move(delta_table));
    B.counit = Functional(r, [r, idx](const BasisId& v) {
        return idx(v).second == 0 ? r->one() : r->zero();
    });

    // antipode as an algebra anti-morphism from a(g) = g^{n-1} and
    // a(x) = (-1) g^{n-1} x
    Vec ag = basis_vec(r, atom_of(n - 1, 0));
    Vec ax = Vec::single(r, atom_of(n - 1, 1), *neg_one);
    std::map<BasisId, Vec> anti_table;
    auto mul_vec = [&](const Vec& u, const Vec& v) {
        Vec out(r);
        for (const auto& [pu, cu] : u.terms())
            for (const auto& [pv, cv] : v.terms())
                out = vec_add(out,
                              scalar_mul(r->mul(cu, cv), B.mu.at(BasisId::pair(pu, pv))));
        return out;
    };
    for (long a = 0; a < n; ++a)
        for (long bb = 0; bb < n; ++bb) {
            Vec acc = basis_vec(r, atom_of(0, 0));
            for (long i = 0; i < bb; ++i) acc = mul_vec(acc, ax);
            for (long i = 0; i < a; ++i) acc = mul_vec(acc, ag);
            anti_table[atom_of(a, bb)] = acc;
        }
    return Hopf{B, LinearMap::from_table(r, std::move(anti_table))};
}

namespace {

// Reduced words over {x, y, Y}: no adjacent yY or Yy.
std::vector<std::string> reduce_word(std::vector<std::string> w) {
    std::vector<std::string> out;
    for (auto& l : w) {
        if (!out.empty() && ((out.back() == "y" && l == "Y") ||
                             (out.back() == "Y" && l == "y"))) {
            out.pop_back();
        } else {
            out.push_back(std::move(l));
        }
    }
    return out;
}

}  // namespace

Hopf pareigis_monoid(Ring ring, long truncation) {
    const auto* r = ring.get();
    if (r->kind() != SemiringKind::naturals)
        throw parameter_error("pareigis_monoid ships over the naturals");

    Bisemialgebra b;
    b.ring = ring;
    b.name = "pareigis_monoid";
    BasisDomain dom;
    dom.finite = false;
    dom.truncation = truncation;
    dom.up_to = [](long maxdeg) {
        std::vector<BasisId> out;
        std::vector<std::vector<std::string>> layer{{}};
        out.push_back(BasisId::word({}));
        for (long len = 1; len <= maxdeg; ++len) {
            std::vector<std::vector<std::string>> next;
            for (const auto& w : layer) {
                for (const std::string l : {"x", "y", "Y"}) {
                    if (!w.empty() && ((w.back() == "y" && l == "Y") ||
                                       (w.back() == "Y" && l == "y")))
                        continue;
                    auto w2 = w;
                    w2.push_back(l);
                    out.push_back(BasisId::word(w2));
                    next.push_back(std::move(w2));
                }
            }
            layer = std::move(next);
        }
        return out;
    };
    b.basis = dom;
    b.mu = LinearMap(r, [r](const BasisId& p) {
        auto w = p.left().letters();
        const auto& w2 = p.right().letters();
        w.insert(w.end(), w2.begin(), w2.end());
        return basis_vec(r, BasisId::word(reduce_word(std::move(w))));
    });
    b.unit = basis_vec(r, BasisId::word({}));
    b.delta = LinearMap(r, [r, mu = b.mu](const BasisId& w) {
        Vec acc = Vec::basis(r, BasisId::pair(BasisId::word({}), BasisId::word({})));
        for (const auto& letter : w.letters()) {
            Vec img(r);
            if (letter == "x") {
                img.add_term(BasisId::pair(BasisId::word({"x"}), BasisId::word({})),
                             r->one());
                img.add_term(BasisId::pair(BasisId::word({"Y"}), BasisId::word({"x"})),
                             r->one());
            } else {
                img.add_term(BasisId::pair(BasisId::word({letter}), BasisId::word({letter})),
                             r->one());
            }
            acc = pair_mul(r, mu, acc, img);
        }
        return acc;
    });
    b.counit = Functional(r, [r](const BasisId& w) {
        for (const auto& l : w.letters())
            if (l == "x") return r->zero();
        return r->one();
    });

    // relations: xy + yx ~ 0 and xx ~ 0, multiplicatively closed
    Vec relA(r), relB(r);
    relA.add_term(BasisId::word({"x", "y"}), r->one());
    relA.add_term(BasisId::word({"y", "x"}), r->one());
    relB.add_term(BasisId::word({"x", "x"}), r->one());
    Quotient q;
    q.mode = QuotientMode::normalizer;
    q.generators = {{relA, Vec(r)}, {relB, Vec(r)}};
    // signed normal form: x moves to the front across y/Y with a sign flip,
    // two x's kill the word
    ZNormalForm znf = [](const BasisId& w) {
        ZVec out;
        const auto& letters = w.letters();
        long xs = 0;
        std::size_t xpos = 0;
        for (std::size_t i = 0; i < letters.size(); ++i) {
            if (letters[i] == "x") {
                ++xs;
                xpos = i;
            }
        }
        if (xs >= 2) return out;
        if (xs == 0) {
            out.add(w, 1);
            return out;
        }
        std::vector<std::string> rest;
        for (std::size_t i = 0; i < letters.size(); ++i)
            if (i != xpos) rest.push_back(letters[i]);
        rest = reduce_word(std::move(rest));
        std::vector<std::string> canon{"x"};
        canon.insert(canon.end(), rest.begin(), rest.end());
        mpz_class sign = (xpos % 2 == 0) ? 1 : -1;
        out.add(BasisId::word(std::move(canon)), sign);
        return out;
    };
    q.znf = znf;
    q.normalizer = [znf, r](const Vec& v) {
        // nonneg representative of the signed normal form; a negative term
        // -c * (x w) is rewritten as c * (y x Y w), whose normal form is the
        // same signed combination
        ZVec z;
        for (const auto& [bb, c] : v.terms()) {
            ZVec nb = znf(bb);
            for (const auto& [l, zc] : nb.terms) z.add(l, c * zc);
        }
        Vec out(r);
        for (const auto& [l, zc] : z.terms) {
            if (zc > 0) {
                out.add_term(l, zc);
            } else {
                auto letters = l.letters();
                std::vector<std::string> moved{"y", "x", "Y"};
                moved.insert(moved.end(), letters.begin() + 1, letters.end());
                out.add_term(BasisId::word(reduce_word(std::move(moved))), -zc);
            }
        }
        return out;
    };
    b.quotient = std::move(q);

    // antipode: a(x) = xy, a(y) = Y, a(Y) = y, extended as an anti-morphism
    b.name = "pareigis_monoid";
    LinearMap antipode(r, [r](const BasisId& w) {
        std::vector<std::string> img;
        const auto& letters = w.letters();
        for (auto it = letters.rbegin(); it != letters.rend(); ++it) {
            if (*it == "x") {
                img.push_back("x");
                img.push_back("y");
            } else if (*it == "y") {
                img.push_back("Y");
            } else {
                img.push_back("y");
            }
        }
        return basis_vec(r, BasisId::word(reduce_word(std::move(img))));
    });
    return Hopf{b, antipode};
}

Hopf hopf_quotient_poly(Ring ring, const Elem& a, const Elem& b, long truncation) {
    const auto* r = ring.get();
    if (r->kind() != SemiringKind::naturals)
        throw parameter_error("hopf_quotient_poly ships over the naturals");
    if (a * b != 2) throw parameter_error("hopf_quotient_poly needs a * b = 2");

    Bisemialgebra B = poly_base(ring, "hopf_quotient_poly", truncation);
    Vec dx(r);
    dx.add_term(BasisId::pair(BasisId::power(1), BasisId::power(0)), r->one());
    dx.add_term(BasisId::pair(BasisId::power(0), BasisId::power(1)), r->one());
    dx.add_term(BasisId::pair(BasisId::power(1), BasisId::power(1)), a);
    B.delta = LinearMap(r, [r, dx, mu = B.mu](const BasisId& x) {
        Vec acc = Vec::basis(r, BasisId::pair(BasisId::power(0), BasisId::power(0)));
        for (long i = 0; i < x.exponent(); ++i) acc = pair_mul(r, mu, acc, dx);
        return acc;
    });
    B.counit = Functional(r, [r](const BasisId& x) {
        return x.exponent() == 0 ? r->one() : r->zero();
    });

    Vec rel(r);
    rel.add_term(BasisId::power(1), b);
    rel.add_term(BasisId::power(2), r->one());
    Quotient q;
    q.mode = QuotientMode::normalizer;
    q.generators = {{rel, Vec(r)}};
    // x^{k+1} ~ (-b) x^k for k >= 1
    mpz_class negb = -b;
    ZNormalForm znf = [negb](const BasisId& x) {
        ZVec out;
        long k = x.exponent();
        if (k == 0) {
            out.add(x, 1);
            return out;
        }
        mpz_class c = 1;
        for (long i = 1; i < k; ++i) c *= negb;
        out.add(BasisId::power(1), c);
        return out;
    };
    q.znf = znf;
    q.normalizer = [znf, r, b](const Vec& v) {
        // signed normal form is c0 * 1 + t * x; the canonical nonneg
        // representative puts t on x when t >= 0 and otherwise uses
        // u x + w x^2 with -b w + u = t, 0 <= u < b
        mpz_class c0 = 0, t = 0;
        for (const auto& [bb, c] : v.terms()) {
            ZVec nb = znf(bb);
            for (const auto& [l, zc] : nb.terms) {
                if (l.exponent() == 0)
                    c0 += c * zc;
                else
                    t += c * zc;
            }
        }
        Vec out(r);
        out.add_term(BasisId::power(0), c0);
        if (t >= 0) {
            out.add_term(BasisId::power(1), t);
        } else {
            mpz_class w = (-t + b - 1) / b;
            out.add_term(BasisId::power(2), w);
            out.add_term(BasisId::power(1), t + b * w);
        }
        return out;
    };
    B.quotient = std::move(q);

    return Hopf{B, identity_map(r)};
}

std::vector<ExampleInfo> list_examples() {
    return {
        {"trivial", "semiring", "the base semiring as a one-dimensional Hopf semialgebra"},
        {"group_hopf", "n, semiring", "group semialgebra of Z/n, group-like coproduct"},
        {"grouplike_poly", "semiring[, truncation]", "S[x] with Delta(x^i) = x^i (x) x^i"},
        {"binomial_poly", "semiring[, truncation]",
         "S[x] with the binomial coproduct; primitive x over idempotent bases"},
        {"laurent_hopf", "semiring[, truncation]", "S[x, x^-1], antipode x^z -> x^-z"},
        {"words_grouplike", "alphabet, semiring[, truncation]",
         "word concatenation with group-like coproduct"},
        {"words_unshuffle", "alphabet, semiring[, truncation]",
         "word concatenation with primitive letters (unshuffle coproduct)"},
        {"tensor_semialgebra", "generators, truncation, semiring",
         "tensor semialgebra on free generators, truncated enumeration"},
        {"haz_words", "alphabet, semiring[, truncation]",
         "concatenation with deconcatenation coproduct; not a bisemialgebra"},
        {"divided_powers", "semiring[, truncation]",
         "e_p e_q = e_{p+q} with the splitting coproduct; needs 1 + 1 = 1"},
        {"s_plus_m", "generators, semiring", "semicoalgebra on S (+) M"},
        {"s_plus_a", "inner example name, semiring",
         "S (+) A with pointwise product; a negative control"},
        {"sweedler_monoid", "(naturals only)", "4-generator quantum monoid, g^2 = 1"},
        {"taft_monoid", "n, q, semiring", "degree-n quantum monoid over a finite ring"},
        {"pareigis_monoid", "(naturals only)[, truncation]",
         "quantum monoid on x, y, y^-1 with xy + yx ~ 0, x^2 ~ 0"},
        {"hopf_quotient_poly", "a, b with a*b = 2[, truncation]",
         "S[x]/(b x + x^2) with antipode fixing x"},
    };
}

StructureDesc by_name(const std::string& name,
                      const std::map<std::string, std::string>& params) {
    auto get = [&](const std::string& key, const std::string& fallback) {
        auto it = params.find(key);
        return it == params.end() ? fallback : it->second;
    };
    auto ring = [&](const std::string& fallback) {
        return ring_by_name(get("semiring", fallback));
    };
    auto num = [&](const std::string& key, long fallback) {
        auto it = params.find(key);
        return it == params.end() ? fallback : std::stol(it->second);
    };
    long trunc = num("truncation", -1);

    if (name == "trivial") return trivial(ring("boolean"));
    if (name == "group_hopf") return group_hopf(num("n", 2), ring("boolean"));
    if (name == "grouplike_poly") return grouplike_poly(ring("boolean"), trunc);
    if (name == "binomial_poly") return binomial_poly(ring("boolean"), trunc);
    if (name == "laurent_hopf") return laurent_hopf(ring("boolean"), trunc);
    if (name == "words_grouplike")
        return words_grouplike(split_csv(get("alphabet", "x,y")), ring("boolean"), trunc);
    if (name == "words_unshuffle")
        return words_unshuffle(split_csv(get("alphabet", "x,y")), ring("boolean"), trunc);
    if (name == "tensor_semialgebra")
        return tensor_semialgebra(split_csv(get("generators", "x,y")),
                                  num("truncation", 4), ring("naturals"));
    if (name == "haz_words")
        return haz_words(split_csv(get("alphabet", "2,3")), ring("naturals"), trunc);
    if (name == "divided_powers") return divided_powers(ring("boolean"), trunc);
    if (name == "s_plus_m")
        return s_plus_m(split_csv(get("generators", "m")), ring("boolean"));
    if (name == "s_plus_a") {
        StructureDesc inner = by_name(get("inner", "group_hopf"), params);
        if (const auto* h = std::get_if<Hopf>(&inner)) return s_plus_a(h->b.algebra());
        if (const auto* bb = std::get_if<Bisemialgebra>(&inner))
            return s_plus_a(bb->algebra());
        throw parameter_error("s_plus_a needs an inner example with an algebra part");
    }
    if (name == "sweedler_monoid") return sweedler_monoid(ring("naturals"));
    if (name == "taft_monoid") {
        Ring rr = ring("z3");
        return taft_monoid(num("n", 2), rr->parse(get("q", "2")), rr);
    }
    if (name == "pareigis_monoid") return pareigis_monoid(ring("naturals"), trunc);
    if (name == "hopf_quotient_poly") {
        Ring rr = ring("naturals");
        return hopf_quotient_poly(rr, rr->parse(get("a", "1")), rr->parse(get("b", "2")),
                                  trunc);
    }
    throw parameter_error("unknown example '" + name + "'");
}

}  // namespace semihopf::examples
