#include "ttu/four_regular.hpp"

#include <algorithm>

namespace ttu {

Transition::Transition(VertexId v, SingleTransition x, SingleTransition y) : vertex(std::move(v)) {
    if (x == y) throw ContractError("transition requires two distinct single transitions");
    if (x.contains(y.first) || x.contains(y.second)) {
        throw ContractError("transition requires disjoint single transitions");
    }
    if (x < y) {
        a = std::move(x);
        b = std::move(y);
    } else {
        a = std::move(y);
        b = std::move(x);
    }
}

const SingleTransition& Transition::other(const SingleTransition& s) const {
    if (s == a) return b;
    if (s == b) return a;
    throw ContractError("single transition " + s.label() + " not in transition " + label());
}

std::string Transition::label() const {
    return vertex + ":" + a.label() + b.label();
}

TransitionSystem::TransitionSystem(std::map<VertexId, std::array<Transition, 3>> by_vertex)
    : by_vertex_(std::move(by_vertex)) {
    for (const auto& [v, ts] : by_vertex_) {
        for (const auto& t : ts) by_label_[t.label()] = t;
    }
}

const std::array<Transition, 3>& TransitionSystem::at(const VertexId& v) const {
    auto it = by_vertex_.find(v);
    if (it == by_vertex_.end()) throw InputError("no transitions at vertex " + v);
    return it->second;
}

const Transition& TransitionSystem::by_label(const std::string& label) const {
    auto it = by_label_.find(label);
    if (it == by_label_.end()) throw InputError("unknown transition label: " + label);
    return it->second;
}

std::vector<std::string> TransitionSystem::labels() const {
    std::vector<std::string> out;
    out.reserve(by_label_.size());
    for (const auto& [l, _] : by_label_) out.push_back(l);
    return out;
}

TransitionSystem all_transitions(const HalfEdgeGraph& f) {
    if (!f.is_four_regular()) throw ContractError("all_transitions requires a 4-regular graph");
    std::map<VertexId, std::array<Transition, 3>> by_vertex;
    for (const auto& v : f.vertices()) {
        const auto& h = f.half_edges_at(v);  // sorted, size 4
        std::array<Transition, 3> ts = {
            Transition(v, SingleTransition(h[0], h[1]), SingleTransition(h[2], h[3])),
            Transition(v, SingleTransition(h[0], h[2]), SingleTransition(h[1], h[3])),
            Transition(v, SingleTransition(h[0], h[3]), SingleTransition(h[1], h[2])),
        };
        by_vertex.emplace(v, std::move(ts));
    }
    return TransitionSystem(std::move(by_vertex));
}

const std::string& CircuitPartition::circuit_of(const SingleTransition& s) const {
    for (const auto& c : circuits) {
        if (c.transitions.count(s)) return c.label;
    }
    throw InputError("single transition " + s.label() + " not in any circuit of the partition");
}

const SingleTransition& CircuitPartition::single_transition_of(const HalfEdgeId& h) const {
    for (const auto& c : circuits) {
        for (const auto& s : c.transitions) {
            if (s.contains(h)) return s;
        }
    }
    throw InputError("half-edge " + h + " not covered by the partition");
}

Transversal transversal_from_labels(const TransitionSystem& ts, const std::vector<std::string>& labels) {
    Transversal t;
    for (const auto& l : labels) {
        const Transition& tr = ts.by_label(l);
        if (!t.emplace(tr.vertex, tr).second) {
            throw ContractError("two transitions chosen at vertex " + tr.vertex);
        }
    }
    if (t.size() != ts.by_vertex().size()) {
        throw ContractError("transversal does not cover every vertex");
    }
    return t;
}

CircuitPartition partition_from_transversal(const HalfEdgeGraph& f, const Transversal& t) {
    if (!f.is_four_regular()) throw ContractError("circuit partitions require a 4-regular graph");
    for (const auto& v : f.vertices()) {
        if (!t.count(v)) throw ContractError("transversal misses vertex " + v);
    }

    // Pair each half-edge with its companion under the chosen transition.
    std::map<HalfEdgeId, HalfEdgeId> companion;
    for (const auto& [v, tr] : t) {
        for (const auto& s : {tr.a, tr.b}) {
            companion[s.first] = s.second;
            companion[s.second] = s.first;
        }
    }

    CircuitPartition p;
    p.transversal = t;
    std::set<HalfEdgeId> used;
    for (const auto& [h0, v0] : f.epsilon()) {
        if (used.count(h0)) continue;
        PartitionCircuit circuit;
        std::vector<WalkStep> steps;
        HalfEdgeId arrive = h0;
        do {
            const HalfEdgeId& leave = companion.at(arrive);
            used.insert(arrive);
            used.insert(leave);
            circuit.transitions.insert(SingleTransition(arrive, leave));
            steps.push_back(WalkStep{arrive, leave});
            arrive = f.partner(leave);
        } while (arrive != h0);
        circuit.walk = ClosedWalk(std::move(steps));
        circuit.label = h0;  // epsilon() iterates in sorted order, so h0 is lex-least
        for (const auto& s : circuit.walk.steps()) {
            circuit.label = std::min({circuit.label, s.in, s.out});
        }
        p.circuits.push_back(std::move(circuit));
    }
    std::sort(p.circuits.begin(), p.circuits.end(),
              [](const auto& x, const auto& y) { return x.label < y.label; });
    return p;
}

TouchGraph touch_graph(const HalfEdgeGraph& f, const CircuitPartition& p) {
    TouchGraph tch;
    std::set<VertexId> vertices;
    std::map<HalfEdgeId, VertexId> epsilon;
    for (const auto& c : p.circuits) {
        vertices.insert(c.label);
        for (const auto& s : c.transitions) {
            epsilon[s.label()] = c.label;
            tch.half_edge_meaning[s.label()] = s;
        }
    }
    std::map<EdgeId, std::pair<HalfEdgeId, HalfEdgeId>> edges;
    for (const auto& [v, tr] : p.transversal) {
        edges[tr.label()] = {tr.a.label(), tr.b.label()};
        tch.edge_meaning[tr.label()] = tr;
    }
    (void)f;
    tch.graph = HalfEdgeGraph(std::move(vertices), std::move(edges), std::move(epsilon));
    return tch;
}

TransitionalOrientation::TransitionalOrientation(const TransitionSystem& ts,
                                                 std::map<std::string, SingleTransition> choice)
    : choice_(std::move(choice)) {
    for (const auto& l : ts.labels()) {
        auto it = choice_.find(l);
        if (it == choice_.end()) throw ContractError("orientation misses transition " + l);
        const Transition& t = ts.by_label(l);
        if (!t.contains(it->second)) {
            throw ContractError("orientation of " + l + " is not one of its single transitions");
        }
    }
    if (choice_.size() != ts.size()) {
        throw ContractError("orientation names a transition outside the system");
    }
}

const SingleTransition& TransitionalOrientation::at(const Transition& t) const {
    return at_label(t.label());
}

const SingleTransition& TransitionalOrientation::at_label(const std::string& label) const {
    auto it = choice_.find(label);
    if (it == choice_.end()) throw InputError("orientation undefined for transition " + label);
    return it->second;
}

TransitionalOrientation lexicographic_orientation(const TransitionSystem& ts) {
    std::map<std::string, SingleTransition> choice;
    for (const auto& [v, trs] : ts.by_vertex()) {
        for (const auto& t : trs) choice[t.label()] = std::min(t.a, t.b);
    }
    return TransitionalOrientation(ts, std::move(choice));
}

LabeledMatrix edge_transition_incidence(const DirectedGraph& d,
                                        const TransitionSystem& ts,
                                        const TransitionalOrientation& o) {
    const HalfEdgeGraph& f = d.underlying();
    LabeledMatrix theta(f.edge_ids(), ts.labels());
    for (const auto& [e, pair] : f.edges()) {
        for (const auto& label : ts.labels()) {
            const SingleTransition& chosen = o.at_label(label);
            bool has_first = chosen.contains(pair.first);
            bool has_second = chosen.contains(pair.second);
            if (has_first == has_second) continue;  // 0 when disjoint or o(t) is this loop
            const HalfEdgeId& h = has_first ? pair.first : pair.second;
            theta.set(e, label, d.tail(e) == h ? Rational(1) : Rational(-1));
        }
    }
    return theta;
}

LabeledMatrix incidence_vector(const DirectedGraph& d, const ClosedWalk& w, const std::string& row_label) {
    const HalfEdgeGraph& g = d.underlying();
    LabeledMatrix sigma({row_label}, g.edge_ids());
    for (const auto& t : edge_traversals(g, w)) {
        Rational delta = (d.tail(t.edge) == t.from) ? Rational(1) : Rational(-1);
        sigma.set(row_label, t.edge, sigma.at(row_label, t.edge) + delta);
    }
    return sigma;
}

ClosedWalk project_walk(const CircuitPartition& p, const ClosedWalk& w) {
    // Directed edge traversals of Tch(P): tuples (s, s') with s != s'.
    std::vector<std::pair<SingleTransition, SingleTransition>> tuples;
    for (const auto& step : w.steps()) {
        const SingleTransition& s = p.single_transition_of(step.in);
        const SingleTransition& s2 = p.single_transition_of(step.out);
        if (s != s2) tuples.emplace_back(s, s2);
    }
    if (tuples.empty()) return ClosedWalk();  // canonical empty walk
    // Tuple j enters a circuit via s'_j and the next tuple leaves it via s_{j+1}.
    std::vector<WalkStep> steps;
    steps.reserve(tuples.size());
    for (std::size_t j = 0; j < tuples.size(); ++j) {
        const auto& next = tuples[(j + 1) % tuples.size()];
        steps.push_back(WalkStep{tuples[j].second.label(), next.first.label()});
    }
    return ClosedWalk(std::move(steps));
}

DirectedGraph directed_touch_graph(const TouchGraph& tch, const TransitionalOrientation& o) {
    std::map<EdgeId, std::pair<HalfEdgeId, HalfEdgeId>> orientation;
    for (const auto& [label, t] : tch.edge_meaning) {
        const SingleTransition& head = o.at(t);
        const SingleTransition& tail = t.other(head);
        orientation[label] = {tail.label(), head.label()};
    }
    return DirectedGraph(tch.graph, std::move(orientation));
}

}  // namespace ttu
