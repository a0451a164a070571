#pragma once

#include <functional>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "ttu/cycle_spaces.hpp"
#include "ttu/four_regular.hpp"
#include "ttu/graph.hpp"
#include "ttu/matrix.hpp"

namespace ttu {

/// Ground set partitioned into skew classes. Class members and classes are
/// kept sorted for deterministic enumeration.
struct SkewPartition {
    std::vector<std::vector<std::string>> classes;

    std::vector<std::string> ground() const;
    /// Index of the class containing the label; InputError if absent.
    std::size_t class_of(const std::string& label) const;
    std::size_t size() const { return classes.size(); }
};

/// Multimatroid given by a skew partition and a rank oracle on
/// subtransversals (sorted label vectors picking at most one element per
/// class).
class Multimatroid {
public:
    using RankFn = std::function<std::size_t(const std::vector<std::string>&)>;

    Multimatroid() = default;
    Multimatroid(SkewPartition partition, RankFn rank);

    const SkewPartition& partition() const { return partition_; }
    /// Rank of a subtransversal; ContractError when s picks two elements of
    /// one class or a label outside the ground set.
    std::size_t rank(std::vector<std::string> s) const;

private:
    SkewPartition partition_;
    RankFn rank_;
};

/// Calls fn on every subtransversal (sorted), including the empty one.
void for_each_subtransversal(const SkewPartition& p,
                             const std::function<void(const std::vector<std::string>&)>& fn);

/// Simple graph with optional loops, the input format for interlacement and
/// isotropic constructions.
struct AdjacencyGraph {
    std::set<VertexId> vertices;
    std::set<std::pair<VertexId, VertexId>> edges;  // stored with first < second
    std::set<VertexId> loops;

    bool adjacent(const VertexId& u, const VertexId& v) const;
};

nlohmann::json adjacency_to_json(const AdjacencyGraph& g);
AdjacencyGraph adjacency_from_json(const nlohmann::json& j);

/// Matrix (I | A | I+A) over GF(2), columns labeled "v|I", "v|A", "v|I+A".
struct IsotropicMatrix {
    LabeledMatrix matrix;
    std::vector<std::vector<std::string>> vertex_triples;
};

IsotropicMatrix ias_matrix(const AdjacencyGraph& g);

/// 3-matroid on the columns of ias_matrix(g); rank = GF(2) rank of the
/// selected columns.
Multimatroid z3(const AdjacencyGraph& g);

struct AxiomViolation {
    std::string axiom;
    std::vector<std::string> witness_subtransversal;
    std::string details;
};

struct AxiomReport {
    std::vector<AxiomViolation> violations;
    bool valid() const { return violations.empty(); }
};

nlohmann::json axiom_report_to_json(const AxiomReport& r);

/// Exhaustive check of the rank axioms (normalization, unit increase,
/// submodularity) on every subtransversal plus the skew-class
/// rank-increase condition. SizeError above 8 skew classes.
AxiomReport verify_multimatroid_axioms(const Multimatroid& z);

/// Deterministic Eulerian circuit per component. Seed 0 follows
/// lexicographically least half-edges; other seeds follow a seeded random
/// priority order.
EulerSystem euler_system(const HalfEdgeGraph& f, unsigned seed = 0);

/// The three transitions at a twice-visited vertex of an Euler circuit:
/// (phi, chi, psi) with phi the circuit's own pairing. Orientation
/// independence is asserted internally.
std::array<Transition, 3> phi_chi_psi(const HalfEdgeGraph& f, const ClosedWalk& c, const VertexId& v);

/// Eulerian 3-matroid Q(F) on the transitions of a 4-regular graph.
/// Subtransversal rank is computed inside the touch-graph of the
/// lexicographically least completing transversal.
Multimatroid q_f(const HalfEdgeGraph& f);

struct TransverseMatroid {
    std::vector<std::string> ground;  // sorted transversal labels
    std::function<std::size_t(std::vector<std::string>)> rank;
};

TransverseMatroid transverse_matroid(const Multimatroid& z, const std::vector<std::string>& t);

/// Z - T: removes a transversal from the ground set. ContractError when a
/// skew class would become empty.
Multimatroid minor_remove_transversal(const Multimatroid& z, const std::vector<std::string>& t);

/// Loopless interlacement graph of an Euler system: u ~ v iff some circuit
/// visits them in the cyclic order u, v, u, v.
AdjacencyGraph interlacement_graph(const HalfEdgeGraph& f, const EulerSystem& c);

struct MultimatroidComparison {
    bool equal = false;
    std::map<std::string, std::string> bijection;  // Q(F) transition label -> ias column label
    std::vector<std::string> counterexample;       // Q(F)-side subtransversal, set on mismatch
};

/// Checks that z3(g) equals q_f(f) under phi -> I, chi -> A, psi -> I+A,
/// exhaustively over subtransversals. g must be the interlacement graph of
/// (f, c).
MultimatroidComparison z3_equals_qf(const AdjacencyGraph& g, const HalfEdgeGraph& f, const EulerSystem& c);

struct CircleCheck {
    bool is_circle = false;
    /// Realizing double occurrence word (cyclic) when is_circle.
    std::vector<VertexId> word;
};

/// Brute force over chord diagrams up to rotation and reflection, with
/// graph isomorphism by backtracking. SizeError above 7 vertices.
CircleCheck is_circle_graph_bruteforce(const AdjacencyGraph& g);

}  // namespace ttu
