#include "ttu/fixtures.hpp"

namespace ttu::fixtures {

namespace {

struct EdgeSpec {
    EdgeId id;
    VertexId tail;
    VertexId head;
};

// Half-edges are h_{edge}_{vertex}; loops get _1 (tail) and _2 (head).
DirectedGraph build(const std::vector<EdgeSpec>& specs) {
    std::set<VertexId> vertices;
    std::map<EdgeId, std::pair<HalfEdgeId, HalfEdgeId>> edges;
    std::map<HalfEdgeId, VertexId> epsilon;
    std::map<EdgeId, std::pair<HalfEdgeId, HalfEdgeId>> orientation;
    for (const auto& s : specs) {
        vertices.insert(s.tail);
        vertices.insert(s.head);
        HalfEdgeId ht = "h_" + s.id + "_" + s.tail;
        HalfEdgeId hh = "h_" + s.id + "_" + s.head;
        if (s.tail == s.head) {
            ht += "_1";
            hh += "_2";
        }
        edges[s.id] = {ht, hh};
        epsilon[ht] = s.tail;
        epsilon[hh] = s.head;
        orientation[s.id] = {ht, hh};
    }
    return DirectedGraph(HalfEdgeGraph(std::move(vertices), std::move(edges), std::move(epsilon)),
                         std::move(orientation));
}

}  // namespace

DirectedGraph running_example() {
    return build({{"e1", "a", "b"},
                  {"e2", "b", "c"},
                  {"e3", "c", "d"},
                  {"e4", "d", "b"},
                  {"e5", "b", "a"},
                  {"e6", "a", "c"},
                  {"e7", "c", "d"},
                  {"e8", "d", "a"}});
}

ClosedWalk running_example_euler() {
    return ClosedWalk({{"h_e1_b", "h_e2_b"},
                       {"h_e2_c", "h_e3_c"},
                       {"h_e3_d", "h_e4_d"},
                       {"h_e4_b", "h_e5_b"},
                       {"h_e5_a", "h_e6_a"},
                       {"h_e6_c", "h_e7_c"},
                       {"h_e7_d", "h_e8_d"},
                       {"h_e8_a", "h_e1_a"}});
}

TransitionalOrientation avoiding_orientation(const TransitionSystem& ts,
                                             const std::map<VertexId, HalfEdgeId>& avoid) {
    std::map<std::string, SingleTransition> choice;
    for (const auto& [v, trs] : ts.by_vertex()) {
        const HalfEdgeId& h = avoid.at(v);
        for (const auto& t : trs) {
            choice[t.label()] = t.a.contains(h) ? t.b : t.a;
        }
    }
    return TransitionalOrientation(ts, std::move(choice));
}

TransitionalOrientation running_example_orientation() {
    TransitionSystem ts = all_transitions(running_example().underlying());
    return avoiding_orientation(
        ts, {{"a", "h_e5_a"}, {"b", "h_e4_b"}, {"c", "h_e6_c"}, {"d", "h_e7_d"}});
}

DirectedGraph four_parallel_edges() {
    return build({{"e1", "v2", "v1"}, {"e2", "v1", "v2"}, {"e3", "v2", "v1"}, {"e4", "v1", "v2"}});
}

DirectedGraph one_vertex_two_loops() {
    std::map<EdgeId, std::pair<HalfEdgeId, HalfEdgeId>> edges{{"l1", {"h4", "h1"}},
                                                              {"l2", {"h2", "h3"}}};
    std::map<HalfEdgeId, VertexId> epsilon{{"h1", "v"}, {"h2", "v"}, {"h3", "v"}, {"h4", "v"}};
    std::map<EdgeId, std::pair<HalfEdgeId, HalfEdgeId>> orientation{{"l1", {"h4", "h1"}},
                                                                    {"l2", {"h2", "h3"}}};
    return DirectedGraph(HalfEdgeGraph({"v"}, std::move(edges), std::move(epsilon)),
                         std::move(orientation));
}

std::vector<std::pair<std::string, HalfEdgeGraph>> catalog() {
    std::vector<std::pair<std::string, HalfEdgeGraph>> out;
    out.emplace_back("one_vertex_two_loops", one_vertex_two_loops().underlying());
    out.emplace_back("four_parallel_edges", four_parallel_edges().underlying());
    out.emplace_back("two_parallel_plus_loops",
                     build({{"e1", "a", "b"}, {"e2", "a", "b"}, {"l1", "a", "a"}, {"l2", "b", "b"}})
                         .underlying());
    out.emplace_back("doubled_triangle",
                     build({{"e1", "a", "b"},
                            {"e2", "a", "b"},
                            {"e3", "b", "c"},
                            {"e4", "b", "c"},
                            {"e5", "a", "c"},
                            {"e6", "a", "c"}})
                         .underlying());
    out.emplace_back("doubled_path_end_loops_3",
                     build({{"e1", "a", "b"},
                            {"e2", "a", "b"},
                            {"e3", "b", "c"},
                            {"e4", "b", "c"},
                            {"l1", "a", "a"},
                            {"l2", "c", "c"}})
                         .underlying());
    out.emplace_back("triple_edge_with_loop",
                     build({{"e1", "a", "b"},
                            {"e2", "a", "b"},
                            {"e3", "a", "b"},
                            {"e4", "a", "c"},
                            {"e5", "b", "c"},
                            {"l1", "c", "c"}})
                         .underlying());
    out.emplace_back("running_example", running_example().underlying());
    out.emplace_back("doubled_4_cycle",
                     build({{"e1", "a", "b"},
                            {"e2", "a", "b"},
                            {"e3", "b", "c"},
                            {"e4", "b", "c"},
                            {"e5", "c", "d"},
                            {"e6", "c", "d"},
                            {"e7", "d", "a"},
                            {"e8", "d", "a"}})
                         .underlying());
    out.emplace_back("k4_doubled_diagonals",
                     build({{"e1", "a", "b"},
                            {"e2", "a", "c"},
                            {"e3", "a", "d"},
                            {"e4", "b", "c"},
                            {"e5", "b", "d"},
                            {"e6", "c", "d"},
                            {"e7", "a", "c"},
                            {"e8", "b", "d"}})
                         .underlying());
    out.emplace_back("mixed_multiplicities",
                     build({{"e1", "a", "b"},
                            {"e2", "a", "b"},
                            {"e3", "a", "c"},
                            {"e4", "a", "d"},
                            {"e5", "b", "c"},
                            {"e6", "b", "d"},
                            {"e7", "c", "d"},
                            {"e8", "c", "d"}})
                         .underlying());
    out.emplace_back("doubled_path_end_loops_4",
                     build({{"e1", "a", "b"},
                            {"e2", "a", "b"},
                            {"e3", "b", "c"},
                            {"e4", "b", "c"},
                            {"e5", "c", "d"},
                            {"e6", "c", "d"},
                            {"l1", "a", "a"},
                            {"l2", "d", "d"}})
                         .underlying());
    return out;
}

LabeledMatrix from_table(const std::vector<std::string>& rows, const std::vector<std::string>& cols,
                         const std::vector<std::vector<int>>& table) {
    if (table.size() != rows.size()) throw ContractError("table height mismatch");
    LabeledMatrix m(rows, cols);
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (table[i].size() != cols.size()) throw ContractError("table width mismatch");
        for (std::size_t j = 0; j < cols.size(); ++j) {
            m.set(rows[i], cols[j], Rational(table[i][j]));
        }
    }
    return m;
}

namespace {

std::vector<std::string> transition_order(const HalfEdgeGraph& f, const ClosedWalk& euler,
                                          const std::vector<VertexId>& vertex_order) {
    std::vector<std::string> out;
    for (std::size_t kind = 0; kind < 3; ++kind) {
        for (const auto& v : vertex_order) {
            out.push_back(phi_chi_psi(f, euler, v)[kind].label());
        }
    }
    return out;
}

}  // namespace

std::vector<std::string> running_transition_order() {
    return transition_order(running_example().underlying(), running_example_euler(),
                            {"a", "b", "c", "d"});
}

LabeledMatrix running_theta() {
    return from_table({"e1", "e2", "e3", "e4", "e5", "e6", "e7", "e8"}, running_transition_order(),
                      {{1, -1, 0, 0, 0, -1, 0, 0, 1, 0, 0, 0},
                       {0, 1, -1, 0, 0, 0, -1, 0, 0, 1, 0, 0},
                       {0, 0, 1, -1, 0, 0, 0, -1, 0, 0, 1, 0},
                       {0, 0, 0, 1, 0, 0, 0, 0, 0, 0, 0, 1},
                       {0, 0, 0, 0, 0, 1, 0, 0, 0, 1, 0, 0},
                       {0, 0, 0, 0, 1, 0, 0, 0, 1, 0, 0, 0},
                       {0, 0, 0, 0, 0, 0, 1, 0, 0, 0, 1, 0},
                       {-1, 0, 0, 0, -1, 0, 0, 1, 0, 0, 0, 1}});
}

LabeledMatrix running_incidence() {
    // Stored as a V x E matrix.
    return from_table({"e1", "e2", "e3", "e4", "e5", "e6", "e7", "e8"}, {"a", "b", "c", "d"},
                      {{1, -1, 0, 0},
                       {0, 1, -1, 0},
                       {0, 0, 1, -1},
                       {0, -1, 0, 1},
                       {-1, 1, 0, 0},
                       {1, 0, -1, 0},
                       {0, 0, 1, -1},
                       {-1, 0, 0, 1}})
        .transpose();
}

LabeledMatrix running_cm() {
    return from_table({"C_e4", "C_e5", "C_e6", "C_e7", "C_e8"},
                      {"e1", "e2", "e3", "e4", "e5", "e6", "e7", "e8"},
                      {{0, 1, 1, 1, 0, 0, 0, 0},
                       {1, 0, 0, 0, 1, 0, 0, 0},
                       {-1, -1, 0, 0, 0, 1, 0, 0},
                       {0, 0, -1, 0, 0, 0, 1, 0},
                       {1, 1, 1, 0, 0, 0, 0, 1}});
}

LabeledMatrix running_product() {
    return from_table({"C_e4", "C_e5", "C_e6", "C_e7", "C_e8"}, running_transition_order(),
                      {{0, 1, 0, 0, 0, 0, -1, -1, 0, 1, 1, 1},
                       {1, -1, 0, 0, 0, 0, 0, 0, 1, 1, 0, 0},
                       {-1, 0, 1, 0, 1, 1, 1, 0, 0, -1, 0, 0},
                       {0, 0, -1, 1, 0, 0, 1, 1, 0, 0, 0, 0},
                       {0, 0, 0, -1, -1, -1, -1, 0, 1, 1, 1, 1}});
}

LabeledMatrix running_gamma_cm() {
    return from_table({"C_a", "C_b", "C_c", "C_d"}, {"e1", "e2", "e3", "e4", "e5", "e6", "e7", "e8"},
                      {{1, 1, 1, 1, 1, 0, 0, 0},
                       {0, 1, 1, 1, 0, 0, 0, 0},
                       {0, 0, 1, 1, 1, 1, 0, 0},
                       {0, 0, 0, 1, 1, 1, 1, 0}});
}

LabeledMatrix running_ias() {
    return from_table({"C_a", "C_b", "C_c", "C_d"}, running_transition_order(),
                      {{1, 0, 0, 0, 0, 0, -1, -1, 1, 2, 1, 1},
                       {0, 1, 0, 0, 0, 0, -1, -1, 0, 1, 1, 1},
                       {0, 0, 1, 0, 1, 1, 0, -1, 1, 1, 1, 1},
                       {0, 0, 0, 1, 1, 1, 1, 0, 1, 1, 1, 1}});
}

ClosedWalk four_parallel_euler() {
    return ClosedWalk({{"h_e1_v1", "h_e2_v1"},
                       {"h_e2_v2", "h_e3_v2"},
                       {"h_e3_v1", "h_e4_v1"},
                       {"h_e4_v2", "h_e1_v2"}});
}

std::vector<std::string> four_parallel_transition_order() {
    std::vector<std::string> out;
    const HalfEdgeGraph f = four_parallel_edges().underlying();
    const ClosedWalk c = four_parallel_euler();
    for (std::size_t kind = 0; kind < 3; ++kind) {
        for (const VertexId v : {"v1", "v2"}) {
            out.push_back(phi_chi_psi(f, c, v)[kind].label());
        }
    }
    return out;
}

TransitionalOrientation containing_orientation(const TransitionSystem& ts,
                                               const std::map<VertexId, HalfEdgeId>& keep) {
    std::map<std::string, SingleTransition> choice;
    for (const auto& [v, trs] : ts.by_vertex()) {
        const HalfEdgeId& h = keep.at(v);
        for (const auto& t : trs) {
            choice[t.label()] = t.a.contains(h) ? t.a : t.b;
        }
    }
    return TransitionalOrientation(ts, std::move(choice));
}

LabeledMatrix four_parallel_theta() {
    return from_table({"e1", "e2", "e3", "e4"}, four_parallel_transition_order(),
                      {{-1, 0, -1, 1, -1, 0},
                       {1, -1, 0, -1, 0, -1},
                       {0, 1, 0, 0, -1, 0},
                       {0, 0, 1, 0, 0, -1}});
}

LabeledMatrix four_parallel_cm_b() {
    return from_table({"C_1", "C_2", "C_3"}, {"e1", "e2", "e3", "e4"},
                      {{1, 1, 0, 0}, {0, 1, 1, 0}, {0, 0, 1, 1}});
}

LabeledMatrix four_parallel_cm_bprime() {
    return from_table({"C_1", "C_2", "C_3"}, {"e1", "e2", "e3", "e4"},
                      {{1, 1, 0, 0}, {1, 0, -1, 0}, {1, 0, 0, 1}});
}

LabeledMatrix four_parallel_a() {
    return from_table({"C_1", "C_2", "C_3"}, four_parallel_transition_order(),
                      {{0, -1, -1, 0, -1, -1}, {1, 0, 0, -1, -1, -1}, {0, 1, 1, 0, -1, -1}});
}

LabeledMatrix four_parallel_a_prime() {
    return from_table({"C_1", "C_2", "C_3"}, four_parallel_transition_order(),
                      {{0, -1, -1, 0, -1, -1}, {-1, -1, -1, 1, 0, 0}, {-1, 0, 0, 1, -1, -1}});
}

AdjacencyGraph cycle_adjacency(std::size_t n) {
    AdjacencyGraph g;
    std::vector<VertexId> names;
    for (std::size_t i = 1; i <= n; ++i) names.push_back("v" + std::to_string(i));
    g.vertices.insert(names.begin(), names.end());
    for (std::size_t i = 0; i < n; ++i) {
        const VertexId& u = names[i];
        const VertexId& v = names[(i + 1) % n];
        if (u != v) g.edges.insert(u < v ? std::make_pair(u, v) : std::make_pair(v, u));
    }
    return g;
}

AdjacencyGraph wheel5() {
    AdjacencyGraph g = cycle_adjacency(5);
    g.vertices.insert("hub");
    for (std::size_t i = 1; i <= 5; ++i) {
        VertexId v = "v" + std::to_string(i);
        g.edges.insert(std::make_pair(VertexId("hub"), v));
    }
    return g;
}

}  // namespace ttu::fixtures
