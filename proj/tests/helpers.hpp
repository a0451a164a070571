#pragma once

#include <random>

#include "ttu/cycle_spaces.hpp"
#include "ttu/fixtures.hpp"
#include "ttu/four_regular.hpp"
#include "ttu/graph.hpp"
#include "ttu/matrix.hpp"
#include "ttu/multimatroid.hpp"

namespace ttu::testing {

// Independent determinant oracle: cofactor expansion along the first row,
// on the lexicographic label order.
inline Rational cofactor_det(const LabeledMatrix& m) {
    const std::size_t n = m.n_rows();
    if (n != m.n_cols()) throw ContractError("cofactor_det needs a square matrix");
    if (n == 0) return Rational(1);
    if (n == 1) return m.at_index(0, 0);
    Rational sum = 0;
    std::vector<std::string> rows(m.row_labels().begin() + 1, m.row_labels().end());
    for (std::size_t j = 0; j < n; ++j) {
        if (m.at_index(0, j) == 0) continue;
        std::vector<std::string> cols;
        for (std::size_t k = 0; k < n; ++k) {
            if (k != j) cols.push_back(m.col_labels()[k]);
        }
        Rational minor = cofactor_det(submatrix(m, rows, cols));
        sum += (j % 2 == 0 ? 1 : -1) * m.at_index(0, j) * minor;
    }
    return sum;
}

// Directed version taking each stored edge pair as (tail, head).
inline DirectedGraph orient_as_stored(const HalfEdgeGraph& g) {
    std::map<EdgeId, std::pair<HalfEdgeId, HalfEdgeId>> o;
    for (const auto& [e, pair] : g.edges()) o[e] = pair;
    return DirectedGraph(g, std::move(o));
}

inline HalfEdgeGraph without_edges(const HalfEdgeGraph& g, const std::set<EdgeId>& removed) {
    std::map<EdgeId, std::pair<HalfEdgeId, HalfEdgeId>> edges;
    std::map<HalfEdgeId, VertexId> epsilon;
    for (const auto& [e, pair] : g.edges()) {
        if (removed.count(e)) continue;
        edges[e] = pair;
        epsilon[pair.first] = g.vertex_of(pair.first);
        epsilon[pair.second] = g.vertex_of(pair.second);
    }
    return HalfEdgeGraph(g.vertices(), std::move(edges), std::move(epsilon));
}

// Random connected 4-regular multigraph on 1..max_vertices vertices: random
// perfect matching of 4 half-edge stubs per vertex, retried until connected.
inline HalfEdgeGraph random_four_regular(std::mt19937& rng, std::size_t max_vertices = 6) {
    const std::size_t n = 1 + rng() % max_vertices;
    while (true) {
        std::vector<HalfEdgeId> stubs;
        std::map<HalfEdgeId, VertexId> epsilon;
        for (std::size_t v = 0; v < n; ++v) {
            for (std::size_t k = 0; k < 4; ++k) {
                HalfEdgeId h = "h" + std::to_string(4 * v + k);
                stubs.push_back(h);
                epsilon[h] = "v" + std::to_string(v);
            }
        }
        std::shuffle(stubs.begin(), stubs.end(), rng);
        std::map<EdgeId, std::pair<HalfEdgeId, HalfEdgeId>> edges;
        for (std::size_t i = 0; i < stubs.size(); i += 2) {
            std::string num = std::to_string(i / 2);
            if (num.size() < 2) num.insert(num.begin(), '0');
            edges["e" + num] = {stubs[i], stubs[i + 1]};
        }
        std::set<VertexId> vertices;
        for (std::size_t v = 0; v < n; ++v) vertices.insert("v" + std::to_string(v));
        HalfEdgeGraph g(std::move(vertices), std::move(edges), std::move(epsilon));
        if (connected_components(g).count() == 1) return g;
    }
}

inline Transversal random_transversal(const TransitionSystem& ts, std::mt19937& rng) {
    Transversal t;
    for (const auto& [v, trs] : ts.by_vertex()) t.emplace(v, trs[rng() % 3]);
    return t;
}

inline TransitionalOrientation random_orientation(const TransitionSystem& ts, std::mt19937& rng) {
    std::map<std::string, SingleTransition> choice;
    for (const auto& [v, trs] : ts.by_vertex()) {
        for (const auto& t : trs) choice[t.label()] = (rng() % 2) ? t.a : t.b;
    }
    return TransitionalOrientation(ts, std::move(choice));
}

// All loopless simple graphs on the given labeled vertex set.
inline std::vector<AdjacencyGraph> all_simple_graphs(std::size_t n) {
    std::vector<VertexId> names;
    for (std::size_t i = 1; i <= n; ++i) names.push_back("v" + std::to_string(i));
    std::vector<std::pair<VertexId, VertexId>> slots;
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) slots.emplace_back(names[i], names[j]);
    }
    std::vector<AdjacencyGraph> out;
    for (std::size_t mask = 0; mask < (1u << slots.size()); ++mask) {
        AdjacencyGraph g;
        g.vertices.insert(names.begin(), names.end());
        for (std::size_t b = 0; b < slots.size(); ++b) {
            if (mask & (1u << b)) g.edges.insert(slots[b]);
        }
        out.push_back(std::move(g));
    }
    return out;
}

}  // namespace ttu::testing
