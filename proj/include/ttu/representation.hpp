#pragma once

#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "ttu/cycle_spaces.hpp"
#include "ttu/four_regular.hpp"
#include "ttu/graph.hpp"
#include "ttu/matrix.hpp"
#include "ttu/multimatroid.hpp"

namespace ttu {

/// Candidate representing matrix for a multimatroid: columns are labeled by
/// the target's ground set; provenance records how the matrix was built.
struct Representation {
    LabeledMatrix matrix;
    Multimatroid target;
    nlohmann::json provenance;
};

/// CM(F, walks, D) times the edge-transition incidence matrix; target Q(F).
Representation representation_matrix(const HalfEdgeGraph& f, const WalkSet& walks,
                                     const DirectedGraph& d, const TransitionalOrientation& o);

struct ShelterResult {
    bool sheltering = false;
    std::vector<std::string> counterexample;  // subtransversal, set on failure
};

/// Exhaustive: rank of every subtransversal's columns equals the target
/// rank. SizeError above 8 skew classes.
ShelterResult is_sheltering(const Representation& rep);

/// Full-matrix rank reaches the target's maximum subtransversal rank.
bool is_strict(const Representation& rep);

struct TtuResult {
    bool ttu = false;
    std::optional<TuWitness> witness;  // present iff !ttu
};

/// Every square submatrix whose columns form a subtransversal has
/// determinant in {-1,0,1}. Subtransversals are scanned in increasing size
/// and the first witness short-circuits. transversal_only restricts to full
/// transversals.
TtuResult is_ttu(const Representation& rep, bool transversal_only = false);

/// IAS(F,C,E): cycle matrix of the induced circuits times the incidence
/// matrix under the second-visit-avoiding orientation. Independence of the
/// edge directions is asserted internally.
Representation ias_from_euler(const HalfEdgeGraph& f, const EulerSystem& c, const std::set<EdgeId>& e_base);

struct CircleCertificate {
    bool is_circle = false;
    std::string refusal;  // set iff !is_circle
    std::optional<Representation> representation;
    nlohmann::json certificate;
};

/// Brute-force circle recognition, then a verified strict sheltering TTU
/// representation of z3(g) built from the realizing word's 4-regular graph.
/// SizeError above 7 vertices.
CircleCertificate ttu_certificate_for_circle_graph(const AdjacencyGraph& g);

/// Chord-diagram graph of a double occurrence word plus the Euler circuit
/// tracing it. Edge e{i} joins the word's positions i and i+1; its half-edge
/// ids carry 0/1 position suffixes.
struct WordRealization {
    HalfEdgeGraph graph;
    DirectedGraph directed;  // edges along the circuit
    EulerSystem circuit;
};

WordRealization realize_word(const std::vector<VertexId>& word);

}  // namespace ttu
