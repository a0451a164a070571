#include "ttu/graph.hpp"

#include <algorithm>

#include <nlohmann/json.hpp>

namespace ttu {

SingleTransition::SingleTransition(HalfEdgeId a, HalfEdgeId b) {
    if (a == b) throw ContractError("single transition requires two distinct half-edges");
    if (a < b) {
        first = std::move(a);
        second = std::move(b);
    } else {
        first = std::move(b);
        second = std::move(a);
    }
}

const HalfEdgeId& SingleTransition::other(const HalfEdgeId& h) const {
    if (h == first) return second;
    if (h == second) return first;
    throw ContractError("half-edge " + h + " not in single transition " + label());
}

HalfEdgeGraph::HalfEdgeGraph(std::set<VertexId> vertices,
                             std::map<EdgeId, std::pair<HalfEdgeId, HalfEdgeId>> edges,
                             std::map<HalfEdgeId, VertexId> epsilon)
    : vertices_(std::move(vertices)), edges_(std::move(edges)), epsilon_(std::move(epsilon)) {
    for (const auto& [e, pair] : edges_) {
        for (const auto& h : {pair.first, pair.second}) {
            auto [it, inserted] = edge_of_.emplace(h, e);
            if (!inserted) {
                throw InputError("half-edge " + h + " belongs to edges " + it->second + " and " + e);
            }
        }
    }
    for (const auto& [h, v] : epsilon_) {
        at_vertex_[v].push_back(h);
    }
    for (auto& [v, hs] : at_vertex_) {
        std::sort(hs.begin(), hs.end());
    }
}

const VertexId& HalfEdgeGraph::vertex_of(const HalfEdgeId& h) const {
    auto it = epsilon_.find(h);
    if (it == epsilon_.end()) throw InputError("unknown half-edge: " + h);
    return it->second;
}

const EdgeId& HalfEdgeGraph::edge_of(const HalfEdgeId& h) const {
    auto it = edge_of_.find(h);
    if (it == edge_of_.end()) throw InputError("half-edge not in any edge: " + h);
    return it->second;
}

const HalfEdgeId& HalfEdgeGraph::partner(const HalfEdgeId& h) const {
    const auto& pair = edges_.at(edge_of(h));
    return pair.first == h ? pair.second : pair.first;
}

const std::vector<HalfEdgeId>& HalfEdgeGraph::half_edges_at(const VertexId& v) const {
    static const std::vector<HalfEdgeId> kEmpty;
    auto it = at_vertex_.find(v);
    return it == at_vertex_.end() ? kEmpty : it->second;
}

const std::pair<HalfEdgeId, HalfEdgeId>& HalfEdgeGraph::edge_pair(const EdgeId& e) const {
    auto it = edges_.find(e);
    if (it == edges_.end()) throw InputError("unknown edge: " + e);
    return it->second;
}

bool HalfEdgeGraph::is_loop(const EdgeId& e) const {
    const auto& pair = edge_pair(e);
    return vertex_of(pair.first) == vertex_of(pair.second);
}

std::vector<EdgeId> HalfEdgeGraph::edge_ids() const {
    std::vector<EdgeId> ids;
    ids.reserve(edges_.size());
    for (const auto& [e, _] : edges_) ids.push_back(e);
    return ids;
}

bool HalfEdgeGraph::is_four_regular() const {
    for (const auto& v : vertices_) {
        if (half_edges_at(v).size() != 4) return false;
    }
    return true;
}

ValidationReport validate_graph(const HalfEdgeGraph& g, bool require_four_regular) {
    ValidationReport report;
    std::set<HalfEdgeId> paired;
    for (const auto& [e, pair] : g.edges()) {
        if (pair.first == pair.second) {
            report.violations.push_back("edge " + e + " pairs a half-edge with itself");
        }
        for (const auto& h : {pair.first, pair.second}) {
            paired.insert(h);
            if (!g.has_half_edge(h)) {
                report.violations.push_back("edge " + e + " references half-edge " + h + " with no incidence");
            }
        }
    }
    for (const auto& [h, v] : g.epsilon()) {
        if (!paired.count(h)) {
            report.violations.push_back("half-edge " + h + " belongs to no edge");
        }
        if (!g.vertices().count(v)) {
            report.violations.push_back("half-edge " + h + " is incident to unknown vertex " + v);
        }
    }
    if (require_four_regular) {
        for (const auto& v : g.vertices()) {
            auto deg = g.half_edges_at(v).size();
            if (deg != 4) {
                report.violations.push_back("vertex " + v + " has degree " + std::to_string(deg) + ", expected 4");
            }
        }
    }
    return report;
}

std::size_t ComponentPartition::component_index(const VertexId& v) const {
    for (std::size_t i = 0; i < components.size(); ++i) {
        if (components[i].count(v)) return i;
    }
    throw InputError("vertex not in any component: " + v);
}

ComponentPartition connected_components(const HalfEdgeGraph& g) {
    std::map<VertexId, std::size_t> comp;
    std::vector<std::set<VertexId>> components;
    for (const auto& v : g.vertices()) {
        if (comp.count(v)) continue;
        std::set<VertexId> current;
        std::vector<VertexId> stack{v};
        comp[v] = components.size();
        while (!stack.empty()) {
            VertexId u = stack.back();
            stack.pop_back();
            current.insert(u);
            for (const auto& h : g.half_edges_at(u)) {
                const VertexId& w = g.vertex_of(g.partner(h));
                if (!comp.count(w)) {
                    comp[w] = components.size();
                    stack.push_back(w);
                }
            }
        }
        components.push_back(std::move(current));
    }
    return ComponentPartition{std::move(components)};
}

DirectedGraph::DirectedGraph(HalfEdgeGraph underlying,
                             std::map<EdgeId, std::pair<HalfEdgeId, HalfEdgeId>> orientation)
    : graph_(std::move(underlying)), orientation_(std::move(orientation)) {
    for (const auto& [e, pair] : graph_.edges()) {
        auto it = orientation_.find(e);
        if (it == orientation_.end()) throw ContractError("orientation missing for edge " + e);
        const auto& [t, h] = it->second;
        if (!((t == pair.first && h == pair.second) || (t == pair.second && h == pair.first))) {
            throw ContractError("orientation of edge " + e + " does not match its half-edge pair");
        }
    }
    if (orientation_.size() != graph_.edges().size()) {
        throw ContractError("orientation names an edge absent from the graph");
    }
}

const HalfEdgeId& DirectedGraph::tail(const EdgeId& e) const {
    auto it = orientation_.find(e);
    if (it == orientation_.end()) throw InputError("unknown edge: " + e);
    return it->second.first;
}

const HalfEdgeId& DirectedGraph::head(const EdgeId& e) const {
    auto it = orientation_.find(e);
    if (it == orientation_.end()) throw InputError("unknown edge: " + e);
    return it->second.second;
}

bool DirectedGraph::is_tail(const HalfEdgeId& h) const {
    return tail(graph_.edge_of(h)) == h;
}

DirectedGraph DirectedGraph::with_reversed_edge(const EdgeId& e) const {
    auto o = orientation_;
    auto it = o.find(e);
    if (it == o.end()) throw InputError("unknown edge: " + e);
    std::swap(it->second.first, it->second.second);
    return DirectedGraph(graph_, std::move(o));
}

namespace {

template <typename T>
std::vector<T> least_rotation(std::vector<T> seq) {
    if (seq.size() < 2) return seq;
    std::vector<T> best = seq;
    for (std::size_t shift = 1; shift < seq.size(); ++shift) {
        std::rotate(seq.begin(), seq.begin() + 1, seq.end());
        if (seq < best) best = seq;
    }
    return best;
}

}  // namespace

ClosedWalk::ClosedWalk(std::vector<WalkStep> steps) : steps_(least_rotation(std::move(steps))) {}

ClosedWalk ClosedWalk::reversed() const {
    std::vector<WalkStep> rev;
    rev.reserve(steps_.size());
    for (auto it = steps_.rbegin(); it != steps_.rend(); ++it) {
        rev.push_back(WalkStep{it->out, it->in});
    }
    return ClosedWalk(std::move(rev));
}

UnorientedWalk::UnorientedWalk(std::vector<SingleTransition> steps) {
    auto forward = least_rotation(steps);
    std::reverse(steps.begin(), steps.end());
    auto backward = least_rotation(std::move(steps));
    steps_ = std::min(forward, backward);
}

bool is_closed_walk(const HalfEdgeGraph& g, const ClosedWalk& w) {
    const auto& steps = w.steps();
    for (const auto& s : steps) {
        if (!g.has_half_edge(s.in)) throw InputError("unknown half-edge: " + s.in);
        if (!g.has_half_edge(s.out)) throw InputError("unknown half-edge: " + s.out);
        if (g.vertex_of(s.in) != g.vertex_of(s.out)) return false;
    }
    for (std::size_t i = 0; i < steps.size(); ++i) {
        const auto& next = steps[(i + 1) % steps.size()];
        // Consecutive steps must be joined by an edge pair {out, next.in}.
        if (g.partner(steps[i].out) != next.in) return false;
    }
    return true;
}

bool is_oriented_circuit(const HalfEdgeGraph& g, const ClosedWalk& w) {
    if (w.empty() || !is_closed_walk(g, w)) return false;
    std::set<HalfEdgeId> seen;
    for (const auto& s : w.steps()) {
        if (!seen.insert(s.in).second) return false;
        if (!seen.insert(s.out).second) return false;
    }
    return true;
}

UnorientedWalk forget_orientation(const ClosedWalk& w) {
    std::vector<SingleTransition> steps;
    steps.reserve(w.size());
    for (const auto& s : w.steps()) steps.emplace_back(s.in, s.out);
    return UnorientedWalk(std::move(steps));
}

std::vector<EdgeTraversal> edge_traversals(const HalfEdgeGraph& g, const ClosedWalk& w) {
    if (!is_closed_walk(g, w)) throw ContractError("not a closed walk of the given graph");
    std::vector<EdgeTraversal> out;
    const auto& steps = w.steps();
    out.reserve(steps.size());
    for (std::size_t i = 0; i < steps.size(); ++i) {
        const auto& next = steps[(i + 1) % steps.size()];
        out.push_back(EdgeTraversal{g.edge_of(steps[i].out), steps[i].out, next.in});
    }
    return out;
}

std::set<EdgeId> traversed_edges(const HalfEdgeGraph& g, const ClosedWalk& w) {
    std::set<EdgeId> edges;
    for (const auto& t : edge_traversals(g, w)) edges.insert(t.edge);
    return edges;
}

nlohmann::json graph_to_json(const HalfEdgeGraph& g,
                             const std::map<EdgeId, std::pair<HalfEdgeId, HalfEdgeId>>* orientation) {
    nlohmann::json j;
    j["vertices"] = g.vertices();
    auto edges = nlohmann::json::array();
    for (const auto& [e, pair] : g.edges()) {
        edges.push_back({{"id", e}, {"half_edges", {pair.first, pair.second}}});
    }
    j["edges"] = std::move(edges);
    j["incidence"] = g.epsilon();
    if (orientation) {
        nlohmann::json o;
        for (const auto& [e, pair] : *orientation) {
            o[e] = {pair.first, pair.second};
        }
        j["orientation"] = std::move(o);
    }
    return j;
}

HalfEdgeGraph graph_from_json(const nlohmann::json& j) {
    try {
        std::set<VertexId> vertices;
        for (const auto& v : j.at("vertices")) vertices.insert(v.get<std::string>());
        std::map<EdgeId, std::pair<HalfEdgeId, HalfEdgeId>> edges;
        for (const auto& e : j.at("edges")) {
            const auto& hs = e.at("half_edges");
            if (hs.size() != 2) throw InputError("edge must have exactly two half-edges");
            auto id = e.at("id").get<std::string>();
            if (edges.count(id)) throw InputError("duplicate edge id: " + id);
            edges[id] = {hs.at(0).get<std::string>(), hs.at(1).get<std::string>()};
        }
        std::map<HalfEdgeId, VertexId> epsilon;
        for (const auto& [h, v] : j.at("incidence").items()) {
            epsilon[h] = v.get<std::string>();
        }
        return HalfEdgeGraph(std::move(vertices), std::move(edges), std::move(epsilon));
    } catch (const nlohmann::json::exception& ex) {
        throw InputError(std::string("malformed graph JSON: ") + ex.what());
    }
}

DirectedGraph directed_graph_from_json(const nlohmann::json& j) {
    HalfEdgeGraph g = graph_from_json(j);
    if (!j.contains("orientation")) {
        throw InputError("graph JSON has no orientation");
    }
    try {
        std::map<EdgeId, std::pair<HalfEdgeId, HalfEdgeId>> orientation;
        for (const auto& [e, pair] : j.at("orientation").items()) {
            if (pair.size() != 2) throw InputError("orientation of " + e + " must be [tail, head]");
            orientation[e] = {pair.at(0).get<std::string>(), pair.at(1).get<std::string>()};
        }
        return DirectedGraph(std::move(g), std::move(orientation));
    } catch (const nlohmann::json::exception& ex) {
        throw InputError(std::string("malformed orientation JSON: ") + ex.what());
    }
}

nlohmann::json walk_to_json(const ClosedWalk& w) {
    auto j = nlohmann::json::array();
    for (const auto& s : w.steps()) j.push_back({s.in, s.out});
    return j;
}

ClosedWalk walk_from_json(const nlohmann::json& j) {
    try {
        std::vector<WalkStep> steps;
        for (const auto& s : j) {
            if (s.size() != 2) throw InputError("walk step must be [h_in, h_out]");
            steps.push_back(WalkStep{s.at(0).get<std::string>(), s.at(1).get<std::string>()});
        }
        return ClosedWalk(std::move(steps));
    } catch (const nlohmann::json::exception& ex) {
        throw InputError(std::string("malformed walk JSON: ") + ex.what());
    }
}

}  // namespace ttu
