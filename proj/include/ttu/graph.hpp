#pragma once

#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include <nlohmann/json.hpp>

#include "ttu/errors.hpp"

namespace ttu {

using VertexId = std::string;
using HalfEdgeId = std::string;
using EdgeId = std::string;

/// Unordered pair of half-edges at a common vertex. Stored sorted.
struct SingleTransition {
    HalfEdgeId first;
    HalfEdgeId second;

    SingleTransition() = default;
    SingleTransition(HalfEdgeId a, HalfEdgeId b);

    bool contains(const HalfEdgeId& h) const { return h == first || h == second; }
    const HalfEdgeId& other(const HalfEdgeId& h) const;
    std::string label() const { return "{" + first + "," + second + "}"; }

    auto operator<=>(const SingleTransition&) const = default;
};

/// Graph as a 4-tuple (V, H, E, epsilon): vertices, half-edges, a pairing of
/// half-edges into edges, and the half-edge -> vertex incidence map.
/// Loops and multi-edges are allowed. Immutable after construction.
class HalfEdgeGraph {
public:
    HalfEdgeGraph() = default;
    HalfEdgeGraph(std::set<VertexId> vertices,
                  std::map<EdgeId, std::pair<HalfEdgeId, HalfEdgeId>> edges,
                  std::map<HalfEdgeId, VertexId> epsilon);

    const std::set<VertexId>& vertices() const { return vertices_; }
    const std::map<EdgeId, std::pair<HalfEdgeId, HalfEdgeId>>& edges() const { return edges_; }
    const std::map<HalfEdgeId, VertexId>& epsilon() const { return epsilon_; }

    std::size_t n_vertices() const { return vertices_.size(); }
    std::size_t n_edges() const { return edges_.size(); }
    std::size_t n_half_edges() const { return epsilon_.size(); }

    bool has_half_edge(const HalfEdgeId& h) const { return epsilon_.count(h) > 0; }
    const VertexId& vertex_of(const HalfEdgeId& h) const;
    /// Edge containing h; InputError if h is unknown or unpaired.
    const EdgeId& edge_of(const HalfEdgeId& h) const;
    /// The other half-edge of h's edge.
    const HalfEdgeId& partner(const HalfEdgeId& h) const;
    /// Half-edges at v, sorted.
    const std::vector<HalfEdgeId>& half_edges_at(const VertexId& v) const;
    const std::pair<HalfEdgeId, HalfEdgeId>& edge_pair(const EdgeId& e) const;
    bool is_loop(const EdgeId& e) const;
    std::vector<EdgeId> edge_ids() const;

    bool is_four_regular() const;

private:
    std::set<VertexId> vertices_;
    std::map<EdgeId, std::pair<HalfEdgeId, HalfEdgeId>> edges_;
    std::map<HalfEdgeId, VertexId> epsilon_;
    std::map<HalfEdgeId, EdgeId> edge_of_;
    std::map<VertexId, std::vector<HalfEdgeId>> at_vertex_;
};

struct ValidationReport {
    std::vector<std::string> violations;
    bool valid() const { return violations.empty(); }
};

ValidationReport validate_graph(const HalfEdgeGraph& g, bool require_four_regular = false);

struct ComponentPartition {
    std::vector<std::set<VertexId>> components;
    std::size_t count() const { return components.size(); }
    std::size_t component_index(const VertexId& v) const;
};

ComponentPartition connected_components(const HalfEdgeGraph& g);

/// Directed version: each edge pair is ordered (tail, head).
class DirectedGraph {
public:
    DirectedGraph() = default;
    DirectedGraph(HalfEdgeGraph underlying, std::map<EdgeId, std::pair<HalfEdgeId, HalfEdgeId>> orientation);

    const HalfEdgeGraph& underlying() const { return graph_; }
    const std::map<EdgeId, std::pair<HalfEdgeId, HalfEdgeId>>& orientation() const { return orientation_; }
    const HalfEdgeId& tail(const EdgeId& e) const;
    const HalfEdgeId& head(const EdgeId& e) const;
    bool is_tail(const HalfEdgeId& h) const;

    /// Same underlying graph with one edge's direction flipped.
    DirectedGraph with_reversed_edge(const EdgeId& e) const;

private:
    HalfEdgeGraph graph_;
    std::map<EdgeId, std::pair<HalfEdgeId, HalfEdgeId>> orientation_;
};

/// One step of a closed walk: arrive at a vertex via `in`, leave via `out`
/// (a directed single transition).
struct WalkStep {
    HalfEdgeId in;
    HalfEdgeId out;
    auto operator<=>(const WalkStep&) const = default;
};

/// Closed walk as a cyclic sequence of directed single transitions.
/// Canonicalized to the lexicographically least rotation, so equality and
/// hashing are rotation-invariant.
class ClosedWalk {
public:
    ClosedWalk() = default;
    explicit ClosedWalk(std::vector<WalkStep> steps);

    const std::vector<WalkStep>& steps() const { return steps_; }
    bool empty() const { return steps_.empty(); }
    std::size_t size() const { return steps_.size(); }

    ClosedWalk reversed() const;

    bool operator==(const ClosedWalk&) const = default;
    auto operator<=>(const ClosedWalk&) const = default;

private:
    std::vector<WalkStep> steps_;
};

/// Unoriented closed walk: single transitions modulo rotation and reversal.
class UnorientedWalk {
public:
    UnorientedWalk() = default;
    explicit UnorientedWalk(std::vector<SingleTransition> steps);

    const std::vector<SingleTransition>& steps() const { return steps_; }
    bool empty() const { return steps_.empty(); }

    bool operator==(const UnorientedWalk&) const = default;
    auto operator<=>(const UnorientedWalk&) const = default;

private:
    std::vector<SingleTransition> steps_;
};

/// Set of oriented circuits, pairwise edge-disjoint.
using OrientedCycle = std::vector<ClosedWalk>;

bool is_closed_walk(const HalfEdgeGraph& g, const ClosedWalk& w);
/// Closed walk in which every half-edge appears at most once.
bool is_oriented_circuit(const HalfEdgeGraph& g, const ClosedWalk& w);

UnorientedWalk forget_orientation(const ClosedWalk& w);

/// Edge traversal derived from a walk: edge e crossed from half-edge `from`
/// to half-edge `to`.
struct EdgeTraversal {
    EdgeId edge;
    HalfEdgeId from;
    HalfEdgeId to;
};

/// The walk's edge traversals in cyclic order (one per step).
std::vector<EdgeTraversal> edge_traversals(const HalfEdgeGraph& g, const ClosedWalk& w);

/// Set of edges traversed at least once.
std::set<EdgeId> traversed_edges(const HalfEdgeGraph& g, const ClosedWalk& w);

nlohmann::json graph_to_json(const HalfEdgeGraph& g,
                             const std::map<EdgeId, std::pair<HalfEdgeId, HalfEdgeId>>* orientation = nullptr);
HalfEdgeGraph graph_from_json(const nlohmann::json& j);
/// InputError when the JSON lacks an `orientation` object.
DirectedGraph directed_graph_from_json(const nlohmann::json& j);

nlohmann::json walk_to_json(const ClosedWalk& w);
ClosedWalk walk_from_json(const nlohmann::json& j);

}  // namespace ttu
