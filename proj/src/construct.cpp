#include "construct.hpp"

#include "gaut/errors.hpp"

namespace gaut::detail {

Automaton renamed(const Automaton& a, const std::string& prefix) {
    std::vector<State> states = a.states();
    for (State& q : states) q.name = prefix + q.name;
    return Automaton(a.alphabet(), std::move(states), a.transitions());
}

Automaton disjoint_append(const Automaton& a1, const Automaton& a2) {
    if (!(a1.alphabet() == a2.alphabet()))
        throw PreconditionError("automata are over different alphabets");
    std::vector<State> states = a1.states();
    states.insert(states.end(), a2.states().begin(), a2.states().end());
    std::vector<Transition> transitions = a1.transitions();
    int offset = static_cast<int>(a1.state_count());
    for (const Transition& t : a2.transitions())
        transitions.push_back({t.src + offset, t.dst + offset, t.label, t.silent});
    return Automaton(a1.alphabet(), std::move(states), std::move(transitions));
}

Automaton concat_silent(const Automaton& a1, const Automaton& a2) {
    if (!(a1.alphabet() == a2.alphabet()))
        throw PreconditionError("automata are over different alphabets");
    int offset = static_cast<int>(a1.state_count());
    std::vector<State> states;
    for (const State& q : a1.states()) {
        State s = q;
        s.accepting = false;
        states.push_back(std::move(s));
    }
    for (const State& q : a2.states()) {
        State s = q;
        s.initial = false;
        states.push_back(std::move(s));
    }
    std::vector<Transition> transitions = a1.transitions();
    for (const Transition& t : a2.transitions())
        transitions.push_back({t.src + offset, t.dst + offset, t.label, t.silent});
    for (std::size_t f = 0; f < a1.state_count(); ++f) {
        if (!a1.states()[f].accepting) continue;
        for (std::size_t i = 0; i < a2.state_count(); ++i) {
            if (!a2.states()[i].initial) continue;
            if (a1.states()[f].vertex != a2.states()[i].vertex) continue;
            transitions.push_back({static_cast<int>(f), static_cast<int>(i) + offset,
                                   a1.states()[f].vertex, true});
        }
    }
    return Automaton(a1.alphabet(), std::move(states), std::move(transitions));
}

Automaton plus_silent(const Automaton& a) {
    std::vector<Transition> transitions = a.transitions();
    for (std::size_t f = 0; f < a.state_count(); ++f) {
        if (!a.states()[f].accepting) continue;
        for (std::size_t i = 0; i < a.state_count(); ++i) {
            if (!a.states()[i].initial) continue;
            if (a.states()[f].vertex != a.states()[i].vertex) continue;
            transitions.push_back({static_cast<int>(f), static_cast<int>(i),
                                   a.states()[f].vertex, true});
        }
    }
    return Automaton(a.alphabet(), a.states(), std::move(transitions));
}

}  // namespace gaut::detail
