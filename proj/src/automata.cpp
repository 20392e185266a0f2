#include "semihopf/automata.hpp"

#include <algorithm>
#include <set>

#include "semihopf/parallel.hpp"

namespace semihopf::automata {

Vec LinearAutomaton::act(const Vec& states, const Vec& input) const {
    return action.apply(tensor_vec(states, input));
}

Elem run_language(const LinearAutomaton& aut, const Vec& input) {
    return aut.observe.apply(aut.act(aut.start, input));
}

Elem run_language_word(const LinearAutomaton& aut, const std::vector<std::string>& word) {
    return run_language(aut, Vec::basis(aut.over.R(), BasisId::word(word)));
}

Functional language_of(const LinearAutomaton& aut) {
    return Functional(aut.over.R(), [aut](const BasisId& w) {
        return run_language(aut, Vec::basis(aut.over.R(), w));
    });
}

LinearAutomaton from_dfa(const Dfa& dfa, const Bisemialgebra& b) {
    const auto* r = b.R();
    std::set<std::string> known(dfa.states.begin(), dfa.states.end());
    for (const auto& s : dfa.initial)
        if (!known.count(s)) throw parameter_error("unknown initial state " + s);
    for (const auto& s : dfa.accepting)
        if (!known.count(s)) throw parameter_error("unknown accepting state " + s);
    std::set<std::string> letters(dfa.alphabet.begin(), dfa.alphabet.end());
    {
        // every declared letter must exist as a length-1 word of the carrier
        auto ones = b.basis.enumerate(1);
        std::set<std::string> carrier_letters;
        for (const auto& w : ones)
            if (w.tag() == BasisId::Tag::word && w.letters().size() == 1)
                carrier_letters.insert(w.letters()[0]);
        for (const auto& l : dfa.alphabet)
            if (!carrier_letters.count(l))
                throw parameter_error("letter '" + l + "' is not a generator of the carrier");
    }

    std::vector<BasisId> state_atoms;
    std::map<std::string, BasisId> atom_of;
    for (const auto& s : dfa.states) {
        state_atoms.push_back(BasisId::atom(s));
        atom_of.emplace(s, state_atoms.back());
    }

    auto step = [dfa, r, atom_of, letters](const Vec& states, const std::string& letter) {
        if (!letters.count(letter))
            throw parameter_error("letter '" + letter + "' is outside the dfa alphabet");
        Vec next(r);
        for (const auto& [sb, c] : states.terms()) {
            auto row = dfa.transitions.find(sb.atom_name());
            if (row == dfa.transitions.end()) continue;
            auto cell = row->second.find(letter);
            if (cell == row->second.end()) continue;
            for (const auto& target : cell->second)
                next.add_term(atom_of.at(target), c);
        }
        return next;
    };

    LinearAutomaton aut;
    aut.over = b;
    aut.state_basis = atom_domain(state_atoms);
    aut.action = LinearMap(r, [r, step](const BasisId& p) {
        if (!p.is_pair() || p.right().tag() != BasisId::Tag::word)
            throw basis_domain_error(p.str());
        Vec cur = Vec::basis(r, p.left());
        for (const auto& l : p.right().letters()) cur = step(cur, l);
        return cur;
    });
    Vec start(r);
    for (const auto& s : dfa.initial) start.add_term(atom_of.at(s), r->one());
    aut.start = start;
    std::set<std::string> acc(dfa.accepting.begin(), dfa.accepting.end());
    aut.observe = Functional(r, [r, acc](const BasisId& s) {
        return acc.count(s.atom_name()) ? r->one() : r->zero();
    });
    return aut;
}

LinearAutomaton tensor_automata(const LinearAutomaton& a1, const LinearAutomaton& a2) {
    if (a1.over.R() != a2.over.R())
        throw type_error("tensor automata need the same base semiring");
    const auto* r = a1.over.R();
    LinearAutomaton out;
    out.over = a1.over;
    out.state_basis = pair_domain(a1.state_basis, a2.state_basis);
    out.action = LinearMap(r, [r, act1 = a1.action, act2 = a2.action,
                               delta = a1.over.delta](const BasisId& p) {
        if (!p.is_pair() || !p.left().is_pair()) throw basis_domain_error(p.str());
        const BasisId& s1 = p.left().left();
        const BasisId& s2 = p.left().right();
        Vec out_v(r);
        for (const auto& [q, c] : delta.at(p.right()).terms()) {
            Vec l = act1.at(BasisId::pair(s1, q.left()));
            Vec rr = act2.at(BasisId::pair(s2, q.right()));
            out_v = vec_add(out_v, scalar_mul(c, tensor_vec(l, rr)));
        }
        return out_v;
    });
    out.start = tensor_vec(a1.start, a2.start);
    out.observe = Functional(r, [r, o1 = a1.observe, o2 = a2.observe](const BasisId& p) {
        if (!p.is_pair()) throw basis_domain_error(p.str());
        return r->mul(o1.at(p.left()), o2.at(p.right()));
    });
    return out;
}

CheckReport check_automaton(const LinearAutomaton& aut, DegreeBound d) {
    const auto* r = aut.over.R();
    const auto states = aut.state_basis.enumerate(d.bound);
    const auto words = aut.over.basis.enumerate(d.bound);
    const std::size_t ns = states.size(), nw = words.size();

    CheckReport rep;
    rep.checked_bound = d.bound;
    rep.cases_checked = ns * nw * nw + ns;
    auto hits = par::collect<Witness>(ns * nw * nw, [&](std::size_t i) -> std::optional<Witness> {
        const BasisId& s = states[i / (nw * nw)];
        const BasisId& u = words[(i / nw) % nw];
        const BasisId& v = words[i % nw];
        Vec su = aut.action.at(BasisId::pair(s, u));
        Vec lhs = aut.action.apply(tensor_vec(su, Vec::basis(r, v)));
        Vec rhs = aut.action.apply(
            tensor_vec(Vec::basis(r, s), aut.over.mu.at(BasisId::pair(u, v))));
        if (!(lhs == rhs))
            return Witness{"action_compatible",
                           "(" + s.str() + ", " + u.str() + ", " + v.str() + ")", lhs.str(),
                           rhs.str()};
        return std::nullopt;
    });
    for (auto& [i, w] : hits) {
        (void)i;
        rep.fail(std::move(w));
        if (rep.witnesses.size() >= 16) break;
    }
    for (const auto& s : states) {
        Vec sv = Vec::basis(r, s);
        Vec lhs = aut.act(sv, aut.over.unit);
        if (!(lhs == sv)) rep.fail({"action_unital", "(" + s.str() + ")", lhs.str(), sv.str()});
    }
    return rep;
}

CheckReport verify_language_convolution(const LinearAutomaton& a1, const LinearAutomaton& a2,
                                        long max_len) {
    const auto* r = a1.over.R();
    LinearAutomaton prod = tensor_automata(a1, a2);
    Functional rho1 = language_of(a1);
    Functional rho2 = language_of(a2);
    Functional conv = convolve(rho1, rho2, a1.over.coalgebra());

    const auto words = a1.over.basis.enumerate(max_len);
    CheckReport rep;
    rep.checked_bound = max_len;
    rep.cases_checked = words.size();
    auto hits = par::collect<Witness>(words.size(), [&](std::size_t i) -> std::optional<Witness> {
        const BasisId& w = words[i];
        Elem lhs = run_language(prod, Vec::basis(r, w));
        Elem rhs = conv.at(w);
        if (lhs != rhs)
            return Witness{"language_convolution", w.str(), r->format(lhs), r->format(rhs)};
        return std::nullopt;
    });
    for (auto& [i, w] : hits) {
        (void)i;
        rep.fail(std::move(w));
        if (rep.witnesses.size() >= 16) break;
    }
    return rep;
}

bool dfa_accepts(const Dfa& dfa, const std::vector<std::string>& word) {
    std::set<std::string> cur(dfa.initial.begin(), dfa.initial.end());
    for (const auto& l : word) {
        std::set<std::string> next;
        for (const auto& s : cur) {
            auto row = dfa.transitions.find(s);
            if (row == dfa.transitions.end()) continue;
            auto cell = row->second.find(l);
            if (cell == row->second.end()) continue;
            next.insert(cell->second.begin(), cell->second.end());
        }
        cur = std::move(next);
    }
    for (const auto& s : dfa.accepting)
        if (cur.count(s)) return true;
    return false;
}

bool dfa_product_accepts(const Dfa& d1, const Dfa& d2, const std::vector<std::string>& word) {
    return dfa_accepts(d1, word) && dfa_accepts(d2, word);
}

}  // namespace semihopf::automata
