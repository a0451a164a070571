#pragma once

#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "ttu/four_regular.hpp"
#include "ttu/graph.hpp"
#include "ttu/matrix.hpp"

namespace ttu {

/// Closed walks keyed by provenance. Keys (not walk values) index cycle
/// matrix rows, so multiset projections keep distinct rows.
using WalkSet = std::map<std::string, ClosedWalk>;

/// Incidence matrix of a directed graph, V x E, entries in {-1,0,1};
/// loop columns are zero.
LabeledMatrix incidence_matrix(const DirectedGraph& d);

struct CycleMatrix {
    LabeledMatrix matrix;  // rows: provenance keys, cols: edge ids
    WalkSet walks;
};

CycleMatrix cycle_matrix(const HalfEdgeGraph& g, const WalkSet& walks, const DirectedGraph& d);

struct MaximalForest {
    std::set<EdgeId> edges;
};

/// Deterministic lexicographic-greedy spanning forest.
MaximalForest maximal_forest(const HalfEdgeGraph& g);

/// One oriented fundamental circuit per non-forest edge e, keyed by e and
/// oriented along e's direction in d (or reversed when flip_orientation).
WalkSet strictly_fundamental_basis(const HalfEdgeGraph& g, const MaximalForest& t,
                                   const DirectedGraph& d, bool flip_orientation = false);

struct CycleDecomposition {
    bool success = false;
    std::string failure_reason;  // nonempty iff !success
    OrientedCycle cycle;
};

/// Constructive inverse of sigma: an oriented cycle C with sigma(D,C) = s,
/// when s lies in the cycle space and has entries in {-1,0,1}.
CycleDecomposition decompose_cycle_vector(const DirectedGraph& d, const LabeledMatrix& s);

/// True iff the basis's cycle matrix, with maximal-forest columns removed,
/// is unimodular. ContractError when the walks are not a cycle basis.
bool is_integral_cycle_basis(const HalfEdgeGraph& g, const WalkSet& basis, const DirectedGraph& d);

/// One oriented Eulerian circuit per connected component.
struct EulerSystem {
    std::vector<ClosedWalk> circuits;

    /// Circuit visiting vertex v.
    const ClosedWalk& circuit_at(const HalfEdgeGraph& f, const VertexId& v) const;
};

struct BestForestResult {
    MaximalForest forest;
    std::map<VertexId, EdgeId> second_visit_edge;      // R_{C,E}(v)
    std::map<VertexId, HalfEdgeId> second_visit_half;  // H_{C,E}(v)
};

/// Spanning forest induced by an oriented Euler system and a based edge set:
/// drop each base edge and each vertex's second-visit incoming edge.
BestForestResult best_spanning_forest(const HalfEdgeGraph& f, const EulerSystem& c,
                                      const std::set<EdgeId>& e_base);

/// Gamma_{E,C}: per vertex v, the segment of the Euler circuit from v to v
/// that avoids the based edges. Keys are the vertex ids.
WalkSet induced_circuits(const HalfEdgeGraph& f, const EulerSystem& c, const std::set<EdgeId>& e_base);

/// Reroutes c at vertices where all four half-edges are used so that it
/// follows p's transitions there; the edge set is preserved and the
/// projection to Tch(P) is a cycle.
OrientedCycle align_cycle_to_partition(const HalfEdgeGraph& f, const CircuitPartition& p,
                                       const OrientedCycle& c);

/// True iff the based set has exactly one edge per connected component.
bool is_based(const HalfEdgeGraph& g, const std::set<EdgeId>& e_base);

/// Lexicographically least edge of each connected component.
std::set<EdgeId> default_base(const HalfEdgeGraph& g);

}  // namespace ttu
