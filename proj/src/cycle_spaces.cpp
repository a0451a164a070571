#include "ttu/cycle_spaces.hpp"

#include <algorithm>
#include <deque>

namespace ttu {

namespace {

// Builds the closed walk given edge crossings (from-half, to-half) in cyclic order.
ClosedWalk walk_from_traversals(const HalfEdgeGraph& g,
                                const std::vector<std::pair<HalfEdgeId, HalfEdgeId>>& trav) {
    std::vector<WalkStep> steps;
    steps.reserve(trav.size());
    for (std::size_t i = 0; i < trav.size(); ++i) {
        const auto& next = trav[(i + 1) % trav.size()];
        if (g.vertex_of(trav[i].second) != g.vertex_of(next.first)) {
            throw ContractError("edge traversals do not chain at a common vertex");
        }
        steps.push_back(WalkStep{trav[i].second, next.first});
    }
    return ClosedWalk(std::move(steps));
}

struct UnionFind {
    std::map<VertexId, VertexId> parent;
    const VertexId& find(const VertexId& v) {
        auto it = parent.find(v);
        if (it == parent.end()) {
            parent[v] = v;
            return parent[v];
        }
        if (it->second == v) return it->second;
        return it->second = find(it->second);
    }
    bool unite(const VertexId& a, const VertexId& b) {
        VertexId ra = find(a), rb = find(b);
        if (ra == rb) return false;
        parent[ra] = rb;
        return true;
    }
};

}  // namespace

LabeledMatrix incidence_matrix(const DirectedGraph& d) {
    const HalfEdgeGraph& g = d.underlying();
    std::vector<std::string> vs(g.vertices().begin(), g.vertices().end());
    LabeledMatrix m(vs, g.edge_ids());
    for (const auto& [e, pair] : g.edges()) {
        if (g.is_loop(e)) continue;
        m.set(g.vertex_of(d.tail(e)), e, Rational(1));
        m.set(g.vertex_of(d.head(e)), e, Rational(-1));
    }
    return m;
}

CycleMatrix cycle_matrix(const HalfEdgeGraph& g, const WalkSet& walks, const DirectedGraph& d) {
    std::vector<std::string> keys;
    for (const auto& [k, _] : walks) keys.push_back(k);
    CycleMatrix cm{LabeledMatrix(keys, g.edge_ids()), walks};
    for (const auto& [k, w] : walks) {
        if (!is_closed_walk(g, w)) throw ContractError("walk " + k + " is not a closed walk of the graph");
        LabeledMatrix row = incidence_vector(d, w, k);
        for (const auto& e : g.edge_ids()) cm.matrix.set(k, e, row.at(k, e));
    }
    return cm;
}

MaximalForest maximal_forest(const HalfEdgeGraph& g) {
    MaximalForest forest;
    UnionFind uf;
    for (const auto& [e, pair] : g.edges()) {  // edge ids in sorted order
        if (uf.unite(g.vertex_of(pair.first), g.vertex_of(pair.second))) {
            forest.edges.insert(e);
        }
    }
    return forest;
}

namespace {

// Forest path from u to v as edge crossings (from-half, to-half); empty when u == v.
std::vector<std::pair<HalfEdgeId, HalfEdgeId>> forest_path(const HalfEdgeGraph& g,
                                                           const MaximalForest& t,
                                                           const VertexId& u, const VertexId& v) {
    std::map<VertexId, std::pair<HalfEdgeId, HalfEdgeId>> via;  // vertex -> crossing that reached it
    std::deque<VertexId> queue{u};
    std::set<VertexId> seen{u};
    while (!queue.empty() && !seen.count(v)) {
        VertexId cur = queue.front();
        queue.pop_front();
        for (const auto& h : g.half_edges_at(cur)) {
            if (!t.edges.count(g.edge_of(h))) continue;
            const HalfEdgeId& other = g.partner(h);
            const VertexId& w = g.vertex_of(other);
            if (seen.insert(w).second) {
                via[w] = {h, other};
                queue.push_back(w);
            }
        }
    }
    if (!seen.count(v)) throw ContractError("forest does not connect " + u + " and " + v);
    std::vector<std::pair<HalfEdgeId, HalfEdgeId>> path;
    VertexId cur = v;
    while (cur != u) {
        path.push_back(via.at(cur));
        cur = g.vertex_of(via.at(cur).first);
    }
    std::reverse(path.begin(), path.end());
    return path;
}

}  // namespace

WalkSet strictly_fundamental_basis(const HalfEdgeGraph& g, const MaximalForest& t,
                                   const DirectedGraph& d, bool flip_orientation) {
    for (const auto& e : t.edges) {
        if (!g.edges().count(e)) throw ContractError("forest edge " + e + " not in graph");
    }
    WalkSet basis;
    for (const auto& [e, pair] : g.edges()) {
        if (t.edges.count(e)) continue;
        std::vector<std::pair<HalfEdgeId, HalfEdgeId>> trav;
        trav.emplace_back(d.tail(e), d.head(e));
        auto back = forest_path(g, t, g.vertex_of(d.head(e)), g.vertex_of(d.tail(e)));
        trav.insert(trav.end(), back.begin(), back.end());
        ClosedWalk w = walk_from_traversals(g, trav);
        basis.emplace("C_" + e, flip_orientation ? w.reversed() : w);
    }
    return basis;
}

CycleDecomposition decompose_cycle_vector(const DirectedGraph& d, const LabeledMatrix& s) {
    const HalfEdgeGraph& g = d.underlying();
    CycleDecomposition result;
    if (s.n_rows() != 1 || s.col_labels() != g.edge_ids()) {
        throw ContractError("decompose_cycle_vector expects a 1 x E(G) vector");
    }
    const std::string& row = s.row_labels().front();
    for (const auto& e : g.edge_ids()) {
        const Rational& v = s.at(row, e);
        if (v != 0 && v != 1 && v != -1) {
            result.failure_reason = "entry of edge " + e + " is " + rational_to_string(v) + ", outside {-1,0,1}";
            return result;
        }
    }
    // Nullspace test against the incidence matrix.
    std::map<VertexId, Rational> balance;
    for (const auto& e : g.edge_ids()) {
        if (g.is_loop(e)) continue;
        const Rational& v = s.at(row, e);
        balance[g.vertex_of(d.tail(e))] += v;
        balance[g.vertex_of(d.head(e))] -= v;
    }
    for (const auto& [vx, sum] : balance) {
        if (sum != 0) {
            result.failure_reason = "vector is not in the cycle space (imbalance at vertex " + vx + ")";
            return result;
        }
    }
    // Each active edge has one allowed crossing; flow balance closes circuits.
    std::map<EdgeId, std::pair<HalfEdgeId, HalfEdgeId>> active;  // edge -> (from, to)
    for (const auto& e : g.edge_ids()) {
        const Rational& v = s.at(row, e);
        if (v == 1) active[e] = {d.tail(e), d.head(e)};
        else if (v == -1) active[e] = {d.head(e), d.tail(e)};
    }
    while (!active.empty()) {
        std::vector<std::pair<HalfEdgeId, HalfEdgeId>> trav;
        auto first = active.begin();
        trav.push_back(first->second);
        VertexId start = g.vertex_of(first->second.first);
        active.erase(first);
        VertexId at = g.vertex_of(trav.back().second);
        while (at != start) {
            bool advanced = false;
            for (auto it = active.begin(); it != active.end(); ++it) {
                if (g.vertex_of(it->second.first) == at) {
                    trav.push_back(it->second);
                    at = g.vertex_of(it->second.second);
                    active.erase(it);
                    advanced = true;
                    break;
                }
            }
            if (!advanced) throw ContractError("cycle tracing stalled despite flow balance");
        }
        result.cycle.push_back(walk_from_traversals(g, trav));
    }
    result.success = true;
    return result;
}

bool is_integral_cycle_basis(const HalfEdgeGraph& g, const WalkSet& basis, const DirectedGraph& d) {
    const std::size_t expected = g.n_edges() - g.n_vertices() + connected_components(g).count();
    if (basis.size() != expected) {
        throw ContractError("walk set has " + std::to_string(basis.size()) + " rows, a cycle basis needs " +
                            std::to_string(expected));
    }
    CycleMatrix cm = cycle_matrix(g, basis, d);
    if (rank_q(cm.matrix) != basis.size()) {
        throw ContractError("walk set is linearly dependent, not a cycle basis");
    }
    MaximalForest t = maximal_forest(g);
    std::vector<std::string> cols;
    for (const auto& e : g.edge_ids()) {
        if (!t.edges.count(e)) cols.push_back(e);
    }
    return is_unimodular(submatrix(cm.matrix, cm.matrix.row_labels(), cols));
}

const ClosedWalk& EulerSystem::circuit_at(const HalfEdgeGraph& f, const VertexId& v) const {
    for (const auto& c : circuits) {
        for (const auto& s : c.steps()) {
            if (f.vertex_of(s.in) == v) return c;
        }
    }
    throw InputError("no Euler circuit visits vertex " + v);
}

bool is_based(const HalfEdgeGraph& g, const std::set<EdgeId>& e_base) {
    auto comps = connected_components(g);
    std::vector<std::size_t> per_comp(comps.count(), 0);
    for (const auto& e : e_base) {
        per_comp[comps.component_index(g.vertex_of(g.edge_pair(e).first))]++;
    }
    return std::all_of(per_comp.begin(), per_comp.end(), [](std::size_t n) { return n == 1; });
}

std::set<EdgeId> default_base(const HalfEdgeGraph& g) {
    auto comps = connected_components(g);
    std::vector<std::optional<EdgeId>> chosen(comps.count());
    for (const auto& [e, pair] : g.edges()) {
        auto idx = comps.component_index(g.vertex_of(pair.first));
        if (!chosen[idx]) chosen[idx] = e;
    }
    std::set<EdgeId> base;
    for (const auto& c : chosen) {
        if (!c) throw ContractError("a component has no edges; no based set exists");
        base.insert(*c);
    }
    return base;
}

BestForestResult best_spanning_forest(const HalfEdgeGraph& f, const EulerSystem& c,
                                      const std::set<EdgeId>& e_base) {
    if (!is_based(f, e_base)) throw ContractError("edge set is not based (one edge per component)");
    BestForestResult result;
    std::set<EdgeId> removed;
    for (const auto& base_edge : e_base) {
        const ClosedWalk& circuit = c.circuit_at(f, f.vertex_of(f.edge_pair(base_edge).first));
        auto trav = edge_traversals(f, circuit);
        std::size_t start = trav.size();
        for (std::size_t i = 0; i < trav.size(); ++i) {
            if (trav[i].edge == base_edge) {
                start = i;
                break;
            }
        }
        if (start == trav.size()) throw ContractError("Euler circuit does not traverse base edge " + base_edge);
        std::map<VertexId, int> visits;
        for (std::size_t k = 0; k < trav.size(); ++k) {
            const auto& t = trav[(start + k) % trav.size()];
            const VertexId& v = f.vertex_of(t.to);
            if (++visits[v] == 2) {
                result.second_visit_edge[v] = t.edge;
                result.second_visit_half[v] = t.to;
            }
        }
        removed.insert(base_edge);
    }
    for (const auto& [v, e] : result.second_visit_edge) removed.insert(e);
    UnionFind uf;
    for (const auto& [e, pair] : f.edges()) {
        if (removed.count(e)) continue;
        if (!uf.unite(f.vertex_of(pair.first), f.vertex_of(pair.second))) {
            throw ContractError("induced edge set is not a forest");
        }
        result.forest.edges.insert(e);
    }
    const std::size_t want = f.n_vertices() - connected_components(f).count();
    if (result.forest.edges.size() != want) {
        throw ContractError("induced forest does not span");
    }
    return result;
}

WalkSet induced_circuits(const HalfEdgeGraph& f, const EulerSystem& c, const std::set<EdgeId>& e_base) {
    if (!is_based(f, e_base)) throw ContractError("edge set is not based (one edge per component)");
    WalkSet gamma;
    for (const auto& v : f.vertices()) {
        const ClosedWalk& circuit = c.circuit_at(f, v);
        const auto& steps = circuit.steps();
        std::vector<std::size_t> at_v;
        for (std::size_t i = 0; i < steps.size(); ++i) {
            if (f.vertex_of(steps[i].in) == v) at_v.push_back(i);
        }
        if (at_v.size() != 2) throw ContractError("Euler circuit visits " + v + " " + std::to_string(at_v.size()) + " times");
        auto arc = [&](std::size_t i, std::size_t j) {
            // Segment leaving v at visit i and returning at visit j.
            std::vector<WalkStep> out;
            for (std::size_t k = (i + 1) % steps.size(); k != j; k = (k + 1) % steps.size()) {
                out.push_back(steps[k]);
            }
            out.push_back(WalkStep{steps[j].in, steps[i].out});
            return ClosedWalk(std::move(out));
        };
        ClosedWalk first = arc(at_v[0], at_v[1]);
        ClosedWalk second = arc(at_v[1], at_v[0]);
        auto avoids_base = [&](const ClosedWalk& w) {
            for (const auto& e : traversed_edges(f, w)) {
                if (e_base.count(e)) return false;
            }
            return true;
        };
        if (avoids_base(first)) {
            gamma.emplace("C_" + v, std::move(first));
        } else if (avoids_base(second)) {
            gamma.emplace("C_" + v, std::move(second));
        } else {
            throw ContractError("both segments at " + v + " traverse a based edge");
        }
    }
    return gamma;
}

OrientedCycle align_cycle_to_partition(const HalfEdgeGraph& f, const CircuitPartition& p,
                                       const OrientedCycle& c) {
    // Pairing of the used half-edges at each vertex, rerouted through p where
    // the cycle uses all four half-edges of a vertex.
    std::map<HalfEdgeId, HalfEdgeId> companion;
    std::map<VertexId, std::size_t> used_at;
    for (const auto& circuit : c) {
        for (const auto& s : circuit.steps()) {
            if (companion.count(s.in) || companion.count(s.out)) {
                throw ContractError("half-edge reused; input is not a cycle");
            }
            companion[s.in] = s.out;
            companion[s.out] = s.in;
            used_at[f.vertex_of(s.in)] += 2;
        }
    }
    for (const auto& [v, n] : used_at) {
        if (n == 4) {
            auto it = p.transversal.find(v);
            if (it == p.transversal.end()) throw ContractError("partition misses vertex " + v);
            for (const auto& s : {it->second.a, it->second.b}) {
                companion[s.first] = s.second;
                companion[s.second] = s.first;
            }
        }
    }
    OrientedCycle out;
    std::set<HalfEdgeId> done;
    for (const auto& [h0, _] : companion) {
        if (done.count(h0)) continue;
        std::vector<WalkStep> steps;
        HalfEdgeId arrive = h0;
        do {
            const HalfEdgeId& leave = companion.at(arrive);
            done.insert(arrive);
            done.insert(leave);
            steps.push_back(WalkStep{arrive, leave});
            arrive = f.partner(leave);
        } while (arrive != h0);
        out.push_back(ClosedWalk(std::move(steps)));
    }
    return out;
}

}  // namespace ttu
