#pragma once

#include <map>
#include <set>
#include <string>
#include <vector>

#include "semihopf/structures.hpp"

namespace semihopf::automata {

// Right linear automaton over a word bisemialgebra B: states form a right
// B-semimodule, the language is rho(w) = observe(start . w).
struct LinearAutomaton {
    Bisemialgebra over;
    BasisDomain state_basis;
    LinearMap action;  // pair(state, word) -> state vector
    Vec start;
    Functional observe;

    Vec act(const Vec& states, const Vec& input) const;
};

// observe(start . input); linear in the input.
Elem run_language(const LinearAutomaton& aut, const Vec& input);
Elem run_language_word(const LinearAutomaton& aut, const std::vector<std::string>& word);

// The language as a functional on word labels.
Functional language_of(const LinearAutomaton& aut);

struct Dfa {
    std::vector<std::string> states;
    std::vector<std::string> alphabet;
    // transitions[state][letter] -> set of successor states (a relation, so
    // nondeterministic tables are accepted).
    std::map<std::string, std::map<std::string, std::vector<std::string>>> transitions;
    std::vector<std::string> initial;
    std::vector<std::string> accepting;
};

// Boolean state vectors with the transition relation as action; the language
// is the characteristic function of the accepted words.
LinearAutomaton from_dfa(const Dfa& dfa, const Bisemialgebra& b);

// Diagonal action through Delta; start and observe tensor together.
LinearAutomaton tensor_automata(const LinearAutomaton& a1, const LinearAutomaton& a2);

// action is a right B-semimodule structure on the states.
CheckReport check_automaton(const LinearAutomaton& aut, DegreeBound d);

// For every word of length <= max_len, the tensor automaton's language must
// equal the convolution of the component languages.
CheckReport verify_language_convolution(const LinearAutomaton& a1, const LinearAutomaton& a2,
                                        long max_len);

// Direct product-construction simulation; test oracle for the group-like case.
bool dfa_product_accepts(const Dfa& d1, const Dfa& d2, const std::vector<std::string>& word);
bool dfa_accepts(const Dfa& dfa, const std::vector<std::string>& word);

}  // namespace semihopf::automata
