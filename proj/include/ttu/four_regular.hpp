#pragma once

#include <array>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "ttu/graph.hpp"
#include "ttu/matrix.hpp"

namespace ttu {

/// Transition at a vertex of a 4-regular graph: a pairing of the four
/// incident half-edges into two disjoint single transitions.
struct Transition {
    VertexId vertex;
    SingleTransition a;  // a < b
    SingleTransition b;

    Transition() = default;
    Transition(VertexId v, SingleTransition x, SingleTransition y);

    bool contains(const SingleTransition& s) const { return s == a || s == b; }
    const SingleTransition& other(const SingleTransition& s) const;
    /// Stable label used as a matrix column index.
    std::string label() const;

    auto operator<=>(const Transition&) const = default;
};

/// All transitions of a 4-regular graph, three per vertex.
class TransitionSystem {
public:
    TransitionSystem() = default;
    explicit TransitionSystem(std::map<VertexId, std::array<Transition, 3>> by_vertex);

    const std::map<VertexId, std::array<Transition, 3>>& by_vertex() const { return by_vertex_; }
    const std::array<Transition, 3>& at(const VertexId& v) const;
    const Transition& by_label(const std::string& label) const;
    std::vector<std::string> labels() const;  // sorted
    std::size_t size() const { return 3 * by_vertex_.size(); }

private:
    std::map<VertexId, std::array<Transition, 3>> by_vertex_;
    std::map<std::string, Transition> by_label_;
};

TransitionSystem all_transitions(const HalfEdgeGraph& f);

/// One circuit of a circuit partition: an orientation of the circuit chosen
/// at trace time, plus the single transitions it uses. The label is the
/// lexicographically least half-edge it contains.
struct PartitionCircuit {
    ClosedWalk walk;
    std::set<SingleTransition> transitions;
    std::string label;
};

/// Circuit partition: every half-edge of F in exactly one circuit.
struct CircuitPartition {
    std::vector<PartitionCircuit> circuits;  // sorted by label
    std::map<VertexId, Transition> transversal;  // tau(P)

    std::size_t size() const { return circuits.size(); }
    /// Label of the circuit containing single transition s.
    const std::string& circuit_of(const SingleTransition& s) const;
    /// The single transition of some circuit containing half-edge h.
    const SingleTransition& single_transition_of(const HalfEdgeId& h) const;
};

using Transversal = std::map<VertexId, Transition>;

Transversal transversal_from_labels(const TransitionSystem& ts, const std::vector<std::string>& labels);

CircuitPartition partition_from_transversal(const HalfEdgeGraph& f, const Transversal& t);

/// Touch-graph Tch(P): vertices are circuit labels, half-edges are single
/// transition labels, edges are transition labels of tau(P).
struct TouchGraph {
    HalfEdgeGraph graph;
    std::map<std::string, SingleTransition> half_edge_meaning;  // Tch half-edge id -> F single transition
    std::map<std::string, Transition> edge_meaning;             // Tch edge id -> F transition
};

TouchGraph touch_graph(const HalfEdgeGraph& f, const CircuitPartition& p);

/// Choice of one single transition o(t) per transition t.
class TransitionalOrientation {
public:
    TransitionalOrientation() = default;
    TransitionalOrientation(const TransitionSystem& ts, std::map<std::string, SingleTransition> choice);

    const SingleTransition& at(const Transition& t) const;
    const SingleTransition& at_label(const std::string& label) const;
    const std::map<std::string, SingleTransition>& choice() const { return choice_; }

private:
    std::map<std::string, SingleTransition> choice_;
};

/// Orientation picking, at each vertex, the lexicographically least single
/// transition of each transition. Deterministic baseline.
TransitionalOrientation lexicographic_orientation(const TransitionSystem& ts);

/// Edge-transition incidence matrix Theta(D, o): E(F) x T(F).
LabeledMatrix edge_transition_incidence(const DirectedGraph& d,
                                        const TransitionSystem& ts,
                                        const TransitionalOrientation& o);

/// sigma(D, W) as a 1 x E(F) row with the given row label.
LabeledMatrix incidence_vector(const DirectedGraph& d, const ClosedWalk& w,
                               const std::string& row_label = "w");

/// pi_P(W): closed walk of Tch(P) over single-transition labels.
ClosedWalk project_walk(const CircuitPartition& p, const ClosedWalk& w);

/// dTch(P, o): each tau(P) edge directed toward the circuit containing o(t).
DirectedGraph directed_touch_graph(const TouchGraph& tch, const TransitionalOrientation& o);

}  // namespace ttu
