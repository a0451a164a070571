#pragma once

#include <string>
#include <utility>
#include <vector>

#include "ttu/four_regular.hpp"
#include "ttu/graph.hpp"
#include "ttu/multimatroid.hpp"

namespace ttu::fixtures {

/// Directed 4-regular graph on vertices a,b,c,d with eight edges e1..e8,
/// half-edges named h_{edge}_{vertex}. The shared running example of the
/// test suite and the demo command.
DirectedGraph running_example();

/// Eulerian circuit of the running example traversing e1..e8 in order,
/// every edge along its direction.
ClosedWalk running_example_euler();

/// Orientation that avoids a given half-edge at each vertex: for every
/// transition, pick the single transition not containing the avoided
/// half-edge of its vertex.
TransitionalOrientation avoiding_orientation(const TransitionSystem& ts,
                                             const std::map<VertexId, HalfEdgeId>& avoid);

/// The running example's standard orientation: avoid the incoming
/// second-visit half-edges h_e5_a, h_e4_b, h_e6_c, h_e7_d.
TransitionalOrientation running_example_orientation();

/// Two vertices joined by four parallel edges, directions alternating:
/// e1: v2->v1, e2: v1->v2, e3: v2->v1, e4: v1->v2.
DirectedGraph four_parallel_edges();

/// Single vertex with two loops {h1,h4} and {h2,h3}; l1 directed h4->h1,
/// l2 directed h2->h3.
DirectedGraph one_vertex_two_loops();

/// Named connected 4-regular multigraphs on at most 4 vertices, including
/// loops and parallel edges. At least ten entries.
std::vector<std::pair<std::string, HalfEdgeGraph>> catalog();

/// Labeled matrix from an integer table; table[i][j] goes to
/// (rows[i], cols[j]).
LabeledMatrix from_table(const std::vector<std::string>& rows, const std::vector<std::string>& cols,
                         const std::vector<std::vector<int>>& table);

/// Transition labels of the running example ordered as
/// phi(a..d), chi(a..d), psi(a..d), relative to the fixture Euler circuit.
std::vector<std::string> running_transition_order();

/// Reference matrices of the running example: the edge-transition
/// incidence matrix (8x12), the incidence matrix (4x8), the fundamental
/// cycle matrix for forest {e1,e2,e3} (5x8), its product with the
/// edge-transition matrix (5x12), the induced-circuit cycle matrix for
/// base {e8} (4x8), and its product (4x12).
LabeledMatrix running_theta();
LabeledMatrix running_incidence();
LabeledMatrix running_cm();
LabeledMatrix running_product();
LabeledMatrix running_gamma_cm();
LabeledMatrix running_ias();

/// Eulerian circuit e1,e2,e3,e4 of the four-parallel-edge graph.
ClosedWalk four_parallel_euler();

/// Transition labels of the four-parallel-edge graph ordered as
/// phi(v1), phi(v2), chi(v1), chi(v2), psi(v1), psi(v2).
std::vector<std::string> four_parallel_transition_order();

/// Orientation choosing, per transition, the single transition containing
/// the given half-edge of its vertex.
TransitionalOrientation containing_orientation(const TransitionSystem& ts,
                                               const std::map<VertexId, HalfEdgeId>& keep);

/// Reference matrices of the four-parallel-edge example: the
/// edge-transition incidence matrix (4x6), the non-fundamental and
/// strictly fundamental cycle matrices (3x4), and their products (3x6).
LabeledMatrix four_parallel_theta();
LabeledMatrix four_parallel_cm_b();
LabeledMatrix four_parallel_cm_bprime();
LabeledMatrix four_parallel_a();
LabeledMatrix four_parallel_a_prime();

/// Cycle graph adjacency on n vertices v1..vn.
AdjacencyGraph cycle_adjacency(std::size_t n);

/// Wheel on five rim vertices plus a hub.
AdjacencyGraph wheel5();

}  // namespace ttu::fixtures
