#include "semihopf/io.hpp"

#include <fstream>
#include <limits>
#include <sstream>

#include "json.hpp"
#include "semihopf/examples.hpp"

namespace semihopf::io {

using nlohmann::json;

namespace {

Ring parse_semiring(const json& j) {
    if (j.is_string()) return ring_by_name(j.get<std::string>());
    if (j.contains("builtin")) {
        std::string name = j.at("builtin").get<std::string>();
        if (name == "naturals") return naturals();
        if (name == "boolean") return boolean();
        if (name == "xn") return xn(j.at("param").get<long>());
        if (name == "subset_lattice") return subset_lattice(j.at("param").get<long>());
        throw parse_error("unknown builtin semiring '" + name + "'");
    }
    if (j.contains("carrier")) {
        auto names = j.at("carrier").get<std::vector<std::string>>();
        auto add = j.at("add").get<std::vector<std::vector<std::string>>>();
        auto mul = j.at("mul").get<std::vector<std::vector<std::string>>>();
        return make_table_semiring(j.value("name", "table"), names, add, mul,
                                   j.at("zero").get<std::string>(),
                                   j.at("one").get<std::string>());
    }
    throw parse_error("semiring section needs 'builtin' or explicit tables");
}

struct AtomContext {
    std::map<std::string, BasisId> atoms;

    BasisId resolve(const std::string& name) const {
        auto it = atoms.find(name);
        if (it == atoms.end())
            throw parse_error("basis label '" + name + "' is not declared");
        return it->second;
    }
};

Vec parse_terms(const json& j, const SemiringSpec* r, const AtomContext& ctx) {
    Vec out(r);
    for (const auto& t : j) {
        Elem c = r->parse(t.at("coeff").get<std::string>());
        if (t.contains("left")) {
            out.add_term(BasisId::pair(ctx.resolve(t.at("left").get<std::string>()),
                                       ctx.resolve(t.at("right").get<std::string>())),
                         c);
        } else {
            out.add_term(ctx.resolve(t.at("basis").get<std::string>()), c);
        }
    }
    return out;
}

StructureDesc parse_structure_object(const json& j);

automata::LinearAutomaton parse_automaton(const json& j) {
    Ring ring = j.contains("semiring") ? parse_semiring(j.at("semiring")) : boolean();
    const auto& aj = j.at("automaton");
    auto alphabet = aj.at("alphabet").get<std::vector<std::string>>();
    std::string structure = aj.value("structure", "grouplike");
    Bisemialgebra b;
    if (structure == "grouplike")
        b = examples::words_grouplike(alphabet, ring);
    else if (structure == "unshuffle")
        b = examples::words_unshuffle(alphabet, ring);
    else
        throw parse_error("automaton structure must be 'grouplike' or 'unshuffle'");

    if (aj.contains("dfa")) {
        const auto& dj = aj.at("dfa");
        automata::Dfa dfa;
        dfa.states = dj.at("states").get<std::vector<std::string>>();
        dfa.alphabet = alphabet;
        dfa.initial = dj.at("initial").get<std::vector<std::string>>();
        dfa.accepting = dj.at("accepting").get<std::vector<std::string>>();
        for (const auto& t : dj.at("transitions")) {
            auto to = t.at("to").is_array() ? t.at("to").get<std::vector<std::string>>()
                                            : std::vector<std::string>{t.at("to").get<std::string>()};
            dfa.transitions[t.at("from").get<std::string>()][t.at("letter").get<std::string>()] =
                to;
        }
        return automata::from_dfa(dfa, b);
    }

    if (!aj.contains("states")) throw parse_error("automaton needs a 'dfa' or explicit tables");
    const auto* r = ring.get();
    AtomContext ctx;
    std::vector<BasisId> state_atoms;
    for (const auto& s : aj.at("states").get<std::vector<std::string>>()) {
        state_atoms.push_back(BasisId::atom(s));
        ctx.atoms.emplace(s, state_atoms.back());
    }
    std::map<std::pair<std::string, std::string>, Vec> letter_action;
    for (const auto& t : aj.at("action")) {
        letter_action.emplace(
            std::make_pair(t.at("state").get<std::string>(), t.at("letter").get<std::string>()),
            parse_terms(t.at("value"), r, ctx));
    }
    automata::LinearAutomaton aut;
    aut.over = b;
    aut.state_basis = atom_domain(state_atoms);
    aut.action = LinearMap(r, [r, letter_action](const BasisId& p) {
        if (!p.is_pair() || p.right().tag() != BasisId::Tag::word)
            throw basis_domain_error(p.str());
        Vec cur = Vec::basis(r, p.left());
        for (const auto& l : p.right().letters()) {
            Vec next(r);
            for (const auto& [sb, c] : cur.terms()) {
                auto it = letter_action.find({sb.atom_name(), l});
                if (it == letter_action.end())
                    throw basis_domain_error("(" + sb.atom_name() + ", " + l + ")");
                next = vec_add(next, scalar_mul(c, it->second));
            }
            cur = std::move(next);
        }
        return cur;
    });
    aut.start = parse_terms(aj.at("start"), r, ctx);
    std::map<BasisId, Elem> observe;
    for (const auto& t : aj.at("observe"))
        observe[ctx.resolve(t.at("state").get<std::string>())] =
            r->parse(t.at("coeff").get<std::string>());
    aut.observe = Functional::from_table(r, std::move(observe));
    return aut;
}

dk::DKDatum parse_dk(const json& j) {
    const auto& dj = j.at("dk");
    std::string mode = dj.value("datum", "self");
    if (mode == "self") {
        StructureDesc inner = parse_structure_object(dj.at("b"));
        if (const auto* h = std::get_if<Hopf>(&inner)) return dk::self_datum(h->b);
        if (const auto* b = std::get_if<Bisemialgebra>(&inner)) return dk::self_datum(*b);
        throw parse_error("self datum needs a bisemialgebra or hopf section under 'b'");
    }
    if (mode == "trivial") {
        Ring ring = parse_semiring(j.at("semiring"));
        StructureDesc ja = parse_structure_object(dj.at("a"));
        StructureDesc jc = parse_structure_object(dj.at("c"));
        Semialgebra a;
        if (const auto* p = std::get_if<Semialgebra>(&ja))
            a = *p;
        else if (const auto* p2 = std::get_if<Bisemialgebra>(&ja))
            a = p2->algebra();
        else
            throw parse_error("trivial datum needs a semialgebra under 'a'");
        Semicoalgebra c;
        if (const auto* p = std::get_if<Semicoalgebra>(&jc))
            c = *p;
        else if (const auto* p2 = std::get_if<Bisemialgebra>(&jc))
            c = p2->coalgebra();
        else
            throw parse_error("trivial datum needs a semicoalgebra under 'c'");
        return dk::trivial_datum(a, c, ring);
    }
    throw parse_error("dk datum must be 'self' or 'trivial'");
}

StructureDesc parse_structure_object(const json& j) {
    if (j.contains("example")) {
        const auto& ej = j.at("example");
        std::map<std::string, std::string> params;
        if (ej.contains("params")) {
            for (const auto& [k, v] : ej.at("params").items())
                params[k] = v.is_string() ? v.get<std::string>() : v.dump();
        }
        return examples::by_name(ej.at("name").get<std::string>(), params);
    }

    Ring ring = parse_semiring(j.at("semiring"));
    const auto* r = ring.get();
    std::string kind = j.at("kind").get<std::string>();

    if (!j.contains("basis") || !j.at("basis").contains("atoms"))
        throw parse_error("explicit structures need a finite atom basis");
    AtomContext ctx;
    std::vector<BasisId> atoms;
    for (const auto& a : j.at("basis").at("atoms")) {
        BasisId id = a.is_string() ? BasisId::atom(a.get<std::string>())
                                   : BasisId::atom(a.at("name").get<std::string>(),
                                                   a.value("degree", 0L));
        atoms.push_back(id);
        ctx.atoms.emplace(a.is_string() ? a.get<std::string>() : a.at("name").get<std::string>(),
                          id);
    }
    BasisDomain dom = atom_domain(atoms);

    const json maps = j.value("maps", json::object());
    auto need = [&](const char* key) -> const json& {
        if (!maps.contains(key))
            throw parse_error(std::string("missing map '") + key + "' for kind " + kind);
        return maps.at(key);
    };

    auto parse_mu = [&]() {
        std::map<BasisId, Vec> table;
        for (const auto& row : need("mu")) {
            table.emplace(BasisId::pair(ctx.resolve(row.at("left").get<std::string>()),
                                        ctx.resolve(row.at("right").get<std::string>())),
                          parse_terms(row.at("value"), r, ctx));
        }
        return LinearMap::from_table(r, std::move(table));
    };
    auto parse_unary = [&](const char* key) {
        std::map<BasisId, Vec> table;
        for (const auto& row : need(key))
            table.emplace(ctx.resolve(row.at("basis").get<std::string>()),
                          parse_terms(row.at("value"), r, ctx));
        return LinearMap::from_table(r, std::move(table));
    };
    auto parse_epsilon = [&]() {
        std::map<BasisId, Elem> table;
        for (const auto& row : need("epsilon"))
            table.emplace(ctx.resolve(row.at("basis").get<std::string>()),
                          r->parse(row.at("coeff").get<std::string>()));
        return Functional::from_table(r, std::move(table), false);
    };

    Quotient q;
    if (j.contains("quotient")) {
        const auto& qj = j.at("quotient");
        std::vector<std::pair<Vec, Vec>> gens;
        if (qj.contains("congruence")) {
            for (const auto& g : qj.at("congruence"))
                gens.emplace_back(parse_terms(g.at("lhs"), r, ctx),
                                  parse_terms(g.at("rhs"), r, ctx));
        }
        if (qj.contains("normalizer")) {
            const auto& nj = qj.at("normalizer");
            if (nj.at("builtin").get<std::string>() != "null_pair_min_subtract")
                throw parse_error("unknown builtin normalizer");
            std::vector<std::pair<BasisId, BasisId>> pairs;
            for (const auto& pr : nj.at("pairs"))
                pairs.emplace_back(ctx.resolve(pr.at(0).get<std::string>()),
                                   ctx.resolve(pr.at(1).get<std::string>()));
            q = Quotient::with_normalizer(min_subtract_normalizer(pairs), gens,
                                          null_pair_znf(pairs));
            q.null_pairs = pairs;
        } else if (!gens.empty()) {
            q = Quotient::finite(std::move(gens), qj.value("guard", uint64_t{65536}));
        }
    }

    if (kind == "semialgebra") {
        Semialgebra a{ring, j.value("name", "semialgebra"), dom, parse_mu(),
                      parse_terms(need("eta"), r, ctx), q};
        return a;
    }
    if (kind == "semicoalgebra") {
        Semicoalgebra c{ring, j.value("name", "semicoalgebra"), dom, parse_unary("delta"),
                        parse_epsilon(), q};
        return c;
    }
    if (kind == "bisemialgebra" || kind == "hopf") {
        Bisemialgebra b;
        b.ring = ring;
        b.name = j.value("name", kind);
        b.basis = dom;
        b.mu = parse_mu();
        b.unit = parse_terms(need("eta"), r, ctx);
        b.delta = parse_unary("delta");
        b.counit = parse_epsilon();
        b.quotient = q;
        if (kind == "bisemialgebra") return b;
        return Hopf{b, parse_unary("antipode")};
    }
    throw parse_error("unknown structure kind '" + kind + "'");
}

}  // namespace

ParsedFile parse_structure_file(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::parse_error& e) {
        throw parse_error(std::string("not valid JSON: ") + e.what());
    }
    if (j.value("format_version", 1) != 1) throw parse_error("unsupported format_version");
    ParsedFile out;
    out.name = j.value("name", "");
    out.degree = j.value("degree", 4L);
    std::string kind = j.value("kind", j.contains("example") ? "" : "bisemialgebra");
    if (kind == "automaton") {
        out.value = parse_automaton(j);
    } else if (kind == "dk") {
        out.value = parse_dk(j);
    } else {
        out.value = parse_structure_object(j);
    }
    return out;
}

ParsedFile load_structure_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw parse_error("cannot open file " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return parse_structure_file(ss.str());
}

namespace {

json terms_to_json(const Vec& v) {
    json out = json::array();
    const auto* r = v.ring();
    for (const auto& [b, c] : v.terms()) {
        json t;
        t["coeff"] = r->format(c);
        if (b.is_pair()) {
            t["left"] = b.left().str();
            t["right"] = b.right().str();
        } else {
            t["basis"] = b.str();
        }
        out.push_back(std::move(t));
    }
    return out;
}

json semiring_to_json(const SemiringSpec* r) {
    json out;
    switch (r->kind()) {
        case SemiringKind::naturals:
            out["builtin"] = "naturals";
            break;
        case SemiringKind::boolean:
            out["builtin"] = "boolean";
            break;
        case SemiringKind::xn:
            out["builtin"] = "xn";
            out["param"] = r->param();
            break;
        case SemiringKind::subset_lattice:
            out["builtin"] = "subset_lattice";
            out["param"] = r->param();
            break;
        case SemiringKind::table: {
            out["name"] = r->name();
            out["carrier"] = r->carrier_names();
            auto elems = *r->enumeration();
            std::vector<std::vector<std::string>> add, mul;
            for (const auto& a : elems) {
                std::vector<std::string> arow, mrow;
                for (const auto& b : elems) {
                    arow.push_back(r->format(r->add(a, b)));
                    mrow.push_back(r->format(r->mul(a, b)));
                }
                add.push_back(std::move(arow));
                mul.push_back(std::move(mrow));
            }
            out["add"] = add;
            out["mul"] = mul;
            out["zero"] = r->format(r->zero());
            out["one"] = r->format(r->one());
            break;
        }
    }
    return out;
}

constexpr long kAllDegrees = std::numeric_limits<long>::max() / 4;

void emit_bisemialgebra_parts(json& out, const Bisemialgebra& b,
                              const std::vector<BasisId>& ids, bool with_antipode,
                              const LinearMap* antipode) {
    json mu = json::array();
    for (const auto& i : ids)
        for (const auto& jj : ids) {
            json row;
            row["left"] = i.str();
            row["right"] = jj.str();
            row["value"] = terms_to_json(b.mu.at(BasisId::pair(i, jj)));
            mu.push_back(std::move(row));
        }
    json delta = json::array(), epsilon = json::array(), anti = json::array();
    for (const auto& i : ids) {
        json row;
        row["basis"] = i.str();
        row["value"] = terms_to_json(b.delta.at(i));
        delta.push_back(std::move(row));
        json erow;
        erow["basis"] = i.str();
        erow["coeff"] = b.R()->format(b.counit.at(i));
        epsilon.push_back(std::move(erow));
        if (with_antipode) {
            json arow;
            arow["basis"] = i.str();
            arow["value"] = terms_to_json(antipode->at(i));
            anti.push_back(std::move(arow));
        }
    }
    out["maps"]["mu"] = std::move(mu);
    out["maps"]["eta"] = terms_to_json(b.unit);
    out["maps"]["delta"] = std::move(delta);
    out["maps"]["epsilon"] = std::move(epsilon);
    if (with_antipode) out["maps"]["antipode"] = std::move(anti);
}

json quotient_to_json(const Quotient& q) {
    json out;
    if (q.is_free()) return out;
    json gens = json::array();
    for (const auto& [u, v] : q.generators) {
        json g;
        g["lhs"] = terms_to_json(u);
        g["rhs"] = terms_to_json(v);
        gens.push_back(std::move(g));
    }
    out["congruence"] = std::move(gens);
    if (!q.null_pairs.empty()) {
        json pairs = json::array();
        for (const auto& [p, qq] : q.null_pairs)
            pairs.push_back(json::array({p.str(), qq.str()}));
        out["normalizer"]["builtin"] = "null_pair_min_subtract";
        out["normalizer"]["pairs"] = std::move(pairs);
    }
    return out;
}

}  // namespace

std::string emit_structure(const StructureDesc& s, const std::string& name, long degree) {
    json out;
    out["format_version"] = 1;
    out["name"] = name;
    out["degree"] = degree;

    auto atoms_of = [](const std::vector<BasisId>& ids) {
        json atoms = json::array();
        for (const auto& b : ids) {
            if (b.tag() != BasisId::Tag::atom)
                throw unsupported_error(
                    "explicit emission covers finite atom bases; use an example reference");
            if (b.degree() == 0) {
                atoms.push_back(b.atom_name());
            } else {
                json a;
                a["name"] = b.atom_name();
                a["degree"] = b.degree();
                atoms.push_back(std::move(a));
            }
        }
        return atoms;
    };

    if (const auto* h = std::get_if<Hopf>(&s)) {
        if (!h->b.basis.finite) throw unsupported_error("infinite basis; emit an example reference");
        auto ids = h->b.basis.enumerate(kAllDegrees);
        out["kind"] = "hopf";
        out["semiring"] = semiring_to_json(h->R());
        out["basis"]["atoms"] = atoms_of(ids);
        emit_bisemialgebra_parts(out, h->b, ids, true, &h->antipode);
        json q = quotient_to_json(h->b.quotient);
        if (!q.is_null() && !q.empty()) out["quotient"] = q;
    } else if (const auto* b = std::get_if<Bisemialgebra>(&s)) {
        if (!b->basis.finite) throw unsupported_error("infinite basis; emit an example reference");
        auto ids = b->basis.enumerate(kAllDegrees);
        out["kind"] = "bisemialgebra";
        out["semiring"] = semiring_to_json(b->R());
        out["basis"]["atoms"] = atoms_of(ids);
        emit_bisemialgebra_parts(out, *b, ids, false, nullptr);
        json q = quotient_to_json(b->quotient);
        if (!q.is_null() && !q.empty()) out["quotient"] = q;
    } else if (const auto* a = std::get_if<Semialgebra>(&s)) {
        if (!a->basis.finite) throw unsupported_error("infinite basis; emit an example reference");
        auto ids = a->basis.enumerate(kAllDegrees);
        out["kind"] = "semialgebra";
        out["semiring"] = semiring_to_json(a->R());
        out["basis"]["atoms"] = atoms_of(ids);
        json mu = json::array();
        for (const auto& i : ids)
            for (const auto& jj : ids) {
                json row;
                row["left"] = i.str();
                row["right"] = jj.str();
                row["value"] = terms_to_json(a->mu.at(BasisId::pair(i, jj)));
                mu.push_back(std::move(row));
            }
        out["maps"]["mu"] = std::move(mu);
        out["maps"]["eta"] = terms_to_json(a->unit);
    } else if (const auto* c = std::get_if<Semicoalgebra>(&s)) {
        if (!c->basis.finite) throw unsupported_error("infinite basis; emit an example reference");
        auto ids = c->basis.enumerate(kAllDegrees);
        out["kind"] = "semicoalgebra";
        out["semiring"] = semiring_to_json(c->R());
        out["basis"]["atoms"] = atoms_of(ids);
        json delta = json::array(), epsilon = json::array();
        for (const auto& i : ids) {
            json row;
            row["basis"] = i.str();
            row["value"] = terms_to_json(c->delta.at(i));
            delta.push_back(std::move(row));
            json erow;
            erow["basis"] = i.str();
            erow["coeff"] = c->R()->format(c->counit.at(i));
            epsilon.push_back(std::move(erow));
        }
        out["maps"]["delta"] = std::move(delta);
        out["maps"]["epsilon"] = std::move(epsilon);
    }
    return out.dump(2);
}

std::string emit_example_reference(const std::string& example_name,
                                   const std::map<std::string, std::string>& params,
                                   long degree) {
    json out;
    out["format_version"] = 1;
    out["name"] = example_name;
    out["degree"] = degree;
    out["example"]["name"] = example_name;
    json p = json::object();
    for (const auto& [k, v] : params) p[k] = v;
    out["example"]["params"] = std::move(p);
    return out.dump(2);
}

std::string report_to_json(const std::string& check_name, const CheckReport& r) {
    json out;
    out["check"] = check_name;
    out["verdict"] = r.pass ? "pass" : "fail";
    out["checked_bound"] = r.checked_bound;
    out["cases"] = r.cases_checked;
    if (r.seed) out["seed"] = *r.seed;
    if (!r.note.empty()) out["note"] = r.note;
    json ws = json::array();
    for (const auto& w : r.witnesses) {
        json wj;
        wj["law"] = w.law;
        wj["input"] = w.input;
        wj["lhs"] = w.lhs;
        wj["rhs"] = w.rhs;
        ws.push_back(std::move(wj));
    }
    out["witnesses"] = std::move(ws);
    return out.dump();
}

}  // namespace semihopf::io
