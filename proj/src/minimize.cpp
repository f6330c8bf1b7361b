#include "gaut/minimize.hpp"

#include <algorithm>
#include <deque>
#include <map>

#include "detail.hpp"
#include "gaut/ops.hpp"

namespace gaut {

NerodePartition nerode_partition(const Automaton& a) {
    if (a.has_silent())
        throw PreconditionError(
            "nerode_partition: silent transitions present (eliminate them first)");
    if (!is_deterministic(a))
        throw PreconditionError("nerode_partition: automaton is not deterministic");
    if (trim(a).state_count() != a.state_count())
        throw PreconditionError("nerode_partition: automaton is not trimmed");

    std::size_t n = a.state_count();
    NerodePartition p;
    p.block_of.assign(n, -1);
    if (n == 0) return p;

    // Seed blocks: vertex label and acceptance.
    {
        std::map<std::pair<std::string, bool>, int> seed;
        for (std::size_t q = 0; q < n; ++q) {
            auto key = std::make_pair(a.states()[q].vertex, a.states()[q].accepting);
            auto it = seed.find(key);
            if (it == seed.end())
                it = seed.emplace(key, static_cast<int>(seed.size())).first;
            p.block_of[q] = it->second;
        }
    }

    // Successor block per label; determinism makes the successor unique.
    for (bool changed = true; changed;) {
        changed = false;
        using Signature = std::pair<int, std::vector<std::pair<std::string, int>>>;
        std::map<Signature, int> next_ids;
        std::vector<int> next(n, -1);
        for (std::size_t q = 0; q < n; ++q) {
            Signature sig{p.block_of[q], {}};
            for (const Transition& t : a.transitions())
                if (t.src == static_cast<int>(q))
                    sig.second.emplace_back(t.label, p.block_of[t.dst]);
            std::sort(sig.second.begin(), sig.second.end());
            auto it = next_ids.find(sig);
            if (it == next_ids.end())
                it = next_ids.emplace(std::move(sig), static_cast<int>(next_ids.size())).first;
            next[q] = it->second;
        }
        std::size_t old_count = 0;
        for (int b : p.block_of) old_count = std::max<std::size_t>(old_count, b + 1);
        if (next_ids.size() != old_count) changed = true;
        p.block_of = std::move(next);
    }

    // Renumber blocks by their smallest state index.
    std::vector<int> first(n, -1);
    std::vector<int> order;
    for (std::size_t q = 0; q < n; ++q) {
        int b = p.block_of[q];
        if (first[b] < 0) {
            first[b] = static_cast<int>(order.size());
            order.push_back(b);
        }
    }
    std::vector<int> renumber(n, -1);
    for (std::size_t i = 0; i < order.size(); ++i) renumber[order[i]] = static_cast<int>(i);
    p.blocks.assign(order.size(), {});
    for (std::size_t q = 0; q < n; ++q) {
        p.block_of[q] = renumber[p.block_of[q]];
        p.blocks[p.block_of[q]].push_back(static_cast<int>(q));
    }
    return p;
}

Automaton minimize(const Automaton& a) {
    Automaton d = trim(determinize(a));
    if (d.state_count() == 0) return d;
    NerodePartition p = nerode_partition(d);

    detail::NameAllocator names;
    std::vector<State> states;
    for (const std::vector<int>& block : p.blocks) {
        std::vector<std::string> member_names;
        bool initial = false;
        for (int q : block) {
            member_names.push_back(d.states()[q].name);
            initial = initial || d.states()[q].initial;
        }
        std::sort(member_names.begin(), member_names.end());
        std::string joined;
        for (std::size_t i = 0; i < member_names.size(); ++i) {
            if (i) joined += "+";
            joined += member_names[i];
        }
        states.push_back({names.claim(joined), d.states()[block[0]].vertex, initial,
                          d.states()[block[0]].accepting});
    }
    std::vector<Transition> transitions;
    for (std::size_t b = 0; b < p.blocks.size(); ++b) {
        int rep = p.blocks[b][0];
        for (const Transition& t : d.transitions())
            if (t.src == rep)
                transitions.push_back({static_cast<int>(b), p.block_of[t.dst],
                                       t.label, false});
    }
    return Automaton(d.alphabet(), std::move(states), std::move(transitions));
}

SuffixQuotients suffix_quotients(const Automaton& a) {
    Automaton d = trim(determinize(a));
    SuffixQuotients out;
    if (d.state_count() == 0) return out;
    NerodePartition p = nerode_partition(d);
    out.count = p.blocks.size();

    // Shortest word witnessing each state, by breadth-first search; every
    // state is reachable because d is trimmed.
    std::vector<int> seen(d.state_count(), 0);
    std::deque<std::pair<int, Morphism>> queue;
    for (int q : d.initial_states()) {
        seen[q] = 1;
        queue.push_back({q, Morphism{d.states()[q].vertex, {}, d.states()[q].vertex}});
    }
    std::vector<const Morphism*> block_witness(p.blocks.size(), nullptr);
    std::vector<Morphism> reached;
    reached.reserve(d.state_count());
    std::size_t found = 0;
    while (!queue.empty() && found < p.blocks.size()) {
        auto [q, w] = queue.front();
        queue.pop_front();
        reached.push_back(w);
        const Morphism& stored = reached.back();
        if (!block_witness[p.block_of[q]]) {
            block_witness[p.block_of[q]] = &stored;
            ++found;
        }
        for (const Transition& t : d.transitions())
            if (t.src == q && !seen[t.dst]) {
                seen[t.dst] = 1;
                Morphism next = w;
                next.word.push_back(t.label);
                next.target = d.states()[t.dst].vertex;
                queue.push_back({t.dst, std::move(next)});
            }
    }
    for (const Morphism* w : block_witness)
        if (w) out.witnesses.push_back(*w);
    std::sort(out.witnesses.begin(), out.witnesses.end());
    return out;
}

AutMorphism find_morphism(const Automaton& a1, const Automaton& a2) {
    if (!(a1.alphabet() == a2.alphabet()))
        throw PreconditionError("find_morphism: automata are over different alphabets");
    if (a1.has_silent() || a2.has_silent())
        throw PreconditionError("find_morphism: silent transitions present");

    std::vector<int> image(a1.state_count(), -1);
    std::deque<int> queue;

    auto assign = [&](int q1, int q2) {
        if (image[q1] == q2) return;
        if (image[q1] >= 0)
            throw PreconditionError("find_morphism: no morphism exists (state '" +
                                    a1.states()[q1].name + "' needs two images)");
        image[q1] = q2;
        queue.push_back(q1);
    };

    for (std::size_t q = 0; q < a1.state_count(); ++q) {
        if (!a1.states()[q].initial) continue;
        int candidate = -1;
        for (std::size_t r = 0; r < a2.state_count(); ++r) {
            if (!a2.states()[r].initial ||
                a2.states()[r].vertex != a1.states()[q].vertex)
                continue;
            if (candidate >= 0)
                throw PreconditionError(
                    "find_morphism: target has two initial states of one type");
            candidate = static_cast<int>(r);
        }
        if (candidate < 0)
            throw PreconditionError("find_morphism: no morphism exists (no initial image "
                                    "for state '" + a1.states()[q].name + "')");
        assign(static_cast<int>(q), candidate);
    }

    while (!queue.empty()) {
        int q1 = queue.front();
        queue.pop_front();
        for (const Transition& t : a1.transitions()) {
            if (t.src != q1) continue;
            int candidate = -1;
            for (const Transition& u : a2.transitions()) {
                if (u.src != image[q1] || u.label != t.label) continue;
                if (candidate >= 0)
                    throw PreconditionError(
                        "find_morphism: target is not deterministic on label '" +
                        t.label + "'");
                candidate = u.dst;
            }
            if (candidate < 0)
                throw PreconditionError("find_morphism: no morphism exists (no image for "
                                        "transition '" + t.label + "' from '" +
                                        a1.states()[q1].name + "')");
            assign(t.dst, candidate);
        }
    }

    for (std::size_t q = 0; q < a1.state_count(); ++q)
        if (image[q] < 0)
            throw PreconditionError("find_morphism: state '" + a1.states()[q].name +
                                    "' is unreachable; no witness map found");

    // Full check of the three preservation conditions.
    for (std::size_t q = 0; q < a1.state_count(); ++q) {
        const State& s1 = a1.states()[q];
        const State& s2 = a2.states()[image[q]];
        if (s1.vertex != s2.vertex)
            throw PreconditionError("find_morphism: no morphism exists (type mismatch)");
        if (s1.initial && !s2.initial)
            throw PreconditionError(
                "find_morphism: no morphism exists (initiality not preserved)");
        if (s1.accepting && !s2.accepting)
            throw PreconditionError(
                "find_morphism: no morphism exists (acceptance not preserved)");
    }
    for (const Transition& t : a1.transitions()) {
        bool found = false;
        for (const Transition& u : a2.transitions())
            found = found || (u.src == image[t.src] && u.dst == image[t.dst] &&
                              u.label == t.label && u.silent == t.silent);
        if (!found)
            throw PreconditionError(
                "find_morphism: no morphism exists (transition not preserved)");
    }

    AutMorphism m;
    for (std::size_t q = 0; q < a1.state_count(); ++q)
        m.mapping.emplace_back(a1.states()[q].name, a2.states()[image[q]].name);
    std::sort(m.mapping.begin(), m.mapping.end());
    return m;
}

bool check_minimal(const Automaton& a) {
    if (a.has_silent())
        throw PreconditionError("check_minimal: silent transitions present");
    if (!is_deterministic(a)) return false;
    if (trim(a).state_count() != a.state_count()) return false;
    return minimize(a).state_count() == a.state_count();
}

}  // namespace gaut
