#include "gaut/oracle.hpp"

#include <algorithm>
#include <deque>
#include <map>

namespace gaut {

namespace {

void check_bound(int maxlen) {
    if (maxlen < 0 || maxlen > kMaxBound)
        throw Error("maxlen must be in [0, " + std::to_string(kMaxBound) + "]");
}

}  // namespace

LanguageSet::LanguageSet(GraphAlphabet alphabet, int bound)
    : alphabet_(std::move(alphabet)), bound_(bound) {
    check_bound(bound);
}

void LanguageSet::insert(Morphism m) {
    if (static_cast<int>(m.length()) > bound_)
        throw Error("word longer than the set's bound");
    if (!well_formed(alphabet_, m))
        throw Error("word is not well-formed over the set's alphabet");
    elements_.insert(std::move(m));
    if (elements_.size() > kElementGuard)
        throw Error("element guard exceeded (" + std::to_string(kElementGuard) + ")");
}

LanguageSet enum_morphisms(const GraphAlphabet& a, int maxlen) {
    check_bound(maxlen);
    LanguageSet out(a, maxlen);
    for (const std::string& v : a.vertices()) out.insert(Morphism{v, {}, v});
    std::vector<Morphism> frontier;
    for (const Edge& e : a.edges()) frontier.push_back({e.src, {e.name}, e.dst});
    for (int len = 1; len <= maxlen && !frontier.empty(); ++len) {
        for (const Morphism& m : frontier) out.insert(m);
        std::vector<Morphism> next;
        if (len == maxlen) break;
        for (const Morphism& m : frontier)
            for (const Edge* e : a.edges_from(m.target)) {
                Morphism ext = m;
                ext.word.push_back(e->name);
                ext.target = e->dst;
                next.push_back(std::move(ext));
                if (next.size() > kElementGuard)
                    throw Error("element guard exceeded (" +
                                std::to_string(kElementGuard) + ")");
            }
        frontier = std::move(next);
    }
    return out;
}

LanguageSet bounded_language(const Automaton& a, int maxlen) {
    check_bound(maxlen);
    if (a.has_silent())
        throw PreconditionError(
            "bounded_language: silent transitions present (eliminate them first)");
    LanguageSet out(a.alphabet(), maxlen);

    // Breadth-first over (path label, end state); the label's source is
    // recoverable, so that pair identifies a path's contribution.
    using Item = std::pair<std::vector<std::string>, int>;
    std::set<Item> seen;
    std::deque<std::pair<Morphism, int>> queue;
    for (std::size_t q = 0; q < a.state_count(); ++q)
        if (a.states()[q].initial) {
            const std::string& v = a.states()[q].vertex;
            if (seen.emplace(std::vector<std::string>{}, static_cast<int>(q)).second)
                queue.push_back({Morphism{v, {}, v}, static_cast<int>(q)});
        }
    while (!queue.empty()) {
        auto [m, q] = queue.front();
        queue.pop_front();
        if (a.states()[q].accepting) out.insert(m);
        if (static_cast<int>(m.length()) == maxlen) continue;
        for (const Transition& t : a.transitions()) {
            if (t.src != q) continue;
            Morphism ext = m;
            ext.word.push_back(t.label);
            ext.target = a.states()[t.dst].vertex;
            if (!seen.emplace(ext.word, t.dst).second) continue;
            if (seen.size() > kElementGuard)
                throw Error("element guard exceeded (" +
                            std::to_string(kElementGuard) + ")");
            queue.push_back({std::move(ext), t.dst});
        }
    }
    return out;
}

namespace {

using MorphSet = std::set<Morphism>;

MorphSet concat_sets(const MorphSet& xs, const MorphSet& ys, int maxlen) {
    MorphSet out;
    for (const Morphism& x : xs)
        for (const Morphism& y : ys) {
            if (x.target != y.source) continue;
            if (static_cast<int>(x.length() + y.length()) > maxlen) continue;
            out.insert(compose(x, y));
            if (out.size() > kElementGuard)
                throw Error("element guard exceeded (" +
                            std::to_string(kElementGuard) + ")");
        }
    return out;
}

const MorphSet& eval_rat(const GraphAlphabet& a, const RatExpr& e, int maxlen,
                         std::map<const RatExpr::Node*, MorphSet>& memo) {
    auto it = memo.find(e.raw());
    if (it != memo.end()) return it->second;
    MorphSet out;
    switch (e.kind()) {
        case RatExpr::Kind::Empty:
            break;
        case RatExpr::Kind::Atom: {
            const Edge& edge = a.edge(e.symbol());
            if (maxlen >= 1) out.insert(Morphism{edge.src, {edge.name}, edge.dst});
            break;
        }
        case RatExpr::Kind::Id:
            if (!a.has_vertex(e.symbol()))
                throw Error("unknown vertex '" + e.symbol() + "'");
            out.insert(Morphism{e.symbol(), {}, e.symbol()});
            break;
        case RatExpr::Kind::Union: {
            out = eval_rat(a, e.left(), maxlen, memo);
            const MorphSet& r = eval_rat(a, e.right(), maxlen, memo);
            out.insert(r.begin(), r.end());
            break;
        }
        case RatExpr::Kind::Concat: {
            const MorphSet& l = eval_rat(a, e.left(), maxlen, memo);
            const MorphSet& r = eval_rat(a, e.right(), maxlen, memo);
            out = concat_sets(l, r, maxlen);
            break;
        }
        case RatExpr::Kind::Plus: {
            const MorphSet& base = eval_rat(a, e.child(), maxlen, memo);
            out = base;
            for (bool grew = true; grew;) {
                MorphSet ext = concat_sets(out, base, maxlen);
                std::size_t before = out.size();
                out.insert(ext.begin(), ext.end());
                grew = out.size() > before;
                if (out.size() > kElementGuard)
                    throw Error("element guard exceeded (" +
                                std::to_string(kElementGuard) + ")");
            }
            break;
        }
    }
    return memo.emplace(e.raw(), std::move(out)).first->second;
}

}  // namespace

LanguageSet bounded_rat(const GraphAlphabet& a, const RatExpr& e, int maxlen) {
    check_bound(maxlen);
    std::map<const RatExpr::Node*, MorphSet> memo;
    const MorphSet& result = eval_rat(a, e, maxlen, memo);
    LanguageSet out(a, maxlen);
    for (const Morphism& m : result) out.insert(m);
    return out;
}

EqualityReport bounded_equal(const LanguageSet& lhs, const LanguageSet& rhs) {
    if (!(lhs.alphabet() == rhs.alphabet()))
        throw PreconditionError("bounded_equal: sets are over different alphabets");
    if (lhs.bound() != rhs.bound())
        throw PreconditionError("bounded_equal: sets have different bounds");
    EqualityReport report;
    for (const Morphism& m : lhs.elements()) {
        if (rhs.contains(m)) continue;
        report.equal = false;
        if (report.only_left.size() < 10) report.only_left.push_back(m);
    }
    for (const Morphism& m : rhs.elements()) {
        if (lhs.contains(m)) continue;
        report.equal = false;
        if (report.only_right.size() < 10) report.only_right.push_back(m);
    }
    return report;
}

}  // namespace gaut
