#include <doctest.h>

#include <random>

#include "helpers.hpp"
#include "ttu/fixtures.hpp"
#include "ttu/four_regular.hpp"
#include "ttu/multimatroid.hpp"

using namespace ttu;

namespace {

const HalfEdgeGraph& running() {
    static HalfEdgeGraph f = fixtures::running_example().underlying();
    return f;
}

// Transversal of the two-circuit partition of the running example:
// psi(a), phi(b), phi(c), psi(d) relative to the fixture Euler circuit.
Transversal two_circuit_transversal() {
    ClosedWalk c = fixtures::running_example_euler();
    Transversal t;
    t.emplace("a", phi_chi_psi(running(), c, "a")[2]);
    t.emplace("b", phi_chi_psi(running(), c, "b")[0]);
    t.emplace("c", phi_chi_psi(running(), c, "c")[0]);
    t.emplace("d", phi_chi_psi(running(), c, "d")[2]);
    return t;
}

}  // namespace

TEST_CASE("three transitions per vertex, pairwise disjoint single transitions") {
    TransitionSystem ts = all_transitions(running());
    CHECK(ts.size() == 12);
    for (const auto& [v, trs] : ts.by_vertex()) {
        std::set<SingleTransition> singles;
        for (const auto& t : trs) {
            CHECK(t.vertex == v);
            singles.insert(t.a);
            singles.insert(t.b);
        }
        CHECK(singles.size() == 6);
    }
    CHECK_THROWS_AS(all_transitions(HalfEdgeGraph({"x"}, {}, {})), ContractError);
}

TEST_CASE("partitions from transversals") {
    const auto& f = running();
    ClosedWalk c = fixtures::running_example_euler();

    // Euler transversal: the circuit's own transitions give one circuit.
    Transversal euler_t;
    for (const auto& v : f.vertices()) euler_t.emplace(v, phi_chi_psi(f, c, v)[0]);
    CircuitPartition p1 = partition_from_transversal(f, euler_t);
    CHECK(p1.size() == 1);
    CHECK(forget_orientation(p1.circuits[0].walk) == forget_orientation(c));

    CircuitPartition p2 = partition_from_transversal(f, two_circuit_transversal());
    CHECK(p2.size() == 2);
}

TEST_CASE("touch graph of the two-circuit partition") {
    const auto& f = running();
    CircuitPartition p = partition_from_transversal(f, two_circuit_transversal());
    TouchGraph tch = touch_graph(f, p);
    CHECK(tch.graph.n_vertices() == 2);
    CHECK(tch.graph.n_edges() == 4);
    // The transition at c joins two single transitions of one circuit: a loop.
    std::map<VertexId, bool> loop;
    for (const auto& [label, t] : tch.edge_meaning) loop[t.vertex] = tch.graph.is_loop(label);
    CHECK(loop.at("c"));
    CHECK_FALSE(loop.at("a"));
    CHECK_FALSE(loop.at("b"));
    CHECK_FALSE(loop.at("d"));
}

TEST_CASE("edge-transition incidence matrix of the running example") {
    DirectedGraph d = fixtures::running_example();
    LabeledMatrix theta =
        edge_transition_incidence(d, all_transitions(running()), fixtures::running_example_orientation());
    CHECK(theta == fixtures::running_theta());
}

TEST_CASE("edge-transition incidence matrix with four parallel edges") {
    DirectedGraph d = fixtures::four_parallel_edges();
    TransitionSystem ts = all_transitions(d.underlying());
    TransitionalOrientation o =
        fixtures::containing_orientation(ts, {{"v1", "h_e1_v1"}, {"v2", "h_e2_v2"}});
    CHECK(edge_transition_incidence(d, ts, o) == fixtures::four_parallel_theta());
}

TEST_CASE("edge-transition incidence matrix with loops") {
    DirectedGraph d = fixtures::one_vertex_two_loops();
    TransitionSystem ts = all_transitions(d.underlying());
    TransitionalOrientation o = fixtures::containing_orientation(ts, {{"v", "h1"}});
    LabeledMatrix theta = edge_transition_incidence(d, ts, o);
    // Rows l1 = {h1,h4}, l2 = {h2,h3}; transitions t_i pair h1 with h_{i+1}.
    auto label_of = [&](const HalfEdgeId& mate) {
        for (const auto& t : ts.at("v")) {
            if (o.at(t).contains("h1") && o.at(t).contains(mate)) return t.label();
        }
        throw ContractError("missing transition");
    };
    LabeledMatrix expected = fixtures::from_table(
        {"l1", "l2"}, {label_of("h2"), label_of("h3"), label_of("h4")},
        {{-1, -1, 0}, {1, -1, 0}});
    CHECK(theta == expected);
}

TEST_CASE("incidence vectors of closed walks") {
    DirectedGraph d = fixtures::running_example();
    ClosedWalk w({{"h_e1_b", "h_e4_b"}, {"h_e4_d", "h_e8_d"}, {"h_e8_a", "h_e1_a"}});
    LabeledMatrix sigma = incidence_vector(d, w);
    CHECK(sigma == fixtures::from_table({"w"}, {"e1", "e2", "e3", "e4", "e5", "e6", "e7", "e8"},
                                        {{1, 0, 0, -1, 0, 0, 0, 1}}));
}

TEST_CASE("projection of a walk onto the touch graph") {
    const auto& f = running();
    CircuitPartition p = partition_from_transversal(f, two_circuit_transversal());
    ClosedWalk w({{"h_e1_b", "h_e4_b"}, {"h_e4_d", "h_e8_d"}, {"h_e8_a", "h_e1_a"}});
    ClosedWalk projected = project_walk(p, w);
    // Two steps survive: one at the circuit containing {h_e1_b,h_e2_b} and
    // one at the other circuit.
    CHECK(projected.size() == 2);
    ClosedWalk expected({{SingleTransition("h_e4_b", "h_e5_b").label(),
                          SingleTransition("h_e5_a", "h_e8_a").label()},
                         {SingleTransition("h_e1_a", "h_e6_a").label(),
                          SingleTransition("h_e1_b", "h_e2_b").label()}});
    CHECK(projected == expected);
}

TEST_CASE("directed touch graph follows the orientation") {
    const auto& f = running();
    CircuitPartition p = partition_from_transversal(f, two_circuit_transversal());
    TouchGraph tch = touch_graph(f, p);
    DirectedGraph dtch = directed_touch_graph(tch, fixtures::running_example_orientation());
    // At vertex a the orientation picks {h_e1_a,h_e6_a}, so the edge of the
    // a-transition points toward the circuit containing that single
    // transition.
    for (const auto& [label, t] : tch.edge_meaning) {
        if (t.vertex != "a") continue;
        CHECK(tch.half_edge_meaning.at(dtch.head(label)) == SingleTransition("h_e1_a", "h_e6_a"));
        CHECK(tch.half_edge_meaning.at(dtch.tail(label)) == SingleTransition("h_e5_a", "h_e8_a"));
    }
}

TEST_CASE("projection identity on loop examples") {
    DirectedGraph d = fixtures::one_vertex_two_loops();
    const HalfEdgeGraph& f = d.underlying();
    TransitionSystem ts = all_transitions(f);
    TransitionalOrientation o = fixtures::containing_orientation(ts, {{"v", "h1"}});
    LabeledMatrix theta = edge_transition_incidence(d, ts, o);
    ClosedWalk w({{"h1", "h2"}, {"h3", "h4"}});
    LabeledMatrix sigma = incidence_vector(d, w);
    CHECK(sigma == fixtures::from_table({"w"}, {"l1", "l2"}, {{1, 1}}));
    for (const auto& t : ts.at("v")) {
        CircuitPartition p = partition_from_transversal(f, Transversal{{"v", t}});
        std::vector<std::string> tau{t.label()};
        LabeledMatrix lhs = multiply(sigma, restrict_cols(theta, tau));
        DirectedGraph dtch = directed_touch_graph(touch_graph(f, p), o);
        LabeledMatrix rhs = incidence_vector(dtch, project_walk(p, w));
        CHECK(lhs == rhs);
    }
}

TEST_CASE("projection identity on random instances") {
    std::mt19937 rng(2026);
    for (int trial = 0; trial < 40; ++trial) {
        HalfEdgeGraph f = testing::random_four_regular(rng, 5);
        DirectedGraph d = testing::orient_as_stored(f);
        TransitionSystem ts = all_transitions(f);
        TransitionalOrientation o = testing::random_orientation(ts, rng);
        CircuitPartition walk_source = partition_from_transversal(f, testing::random_transversal(ts, rng));
        const ClosedWalk& w = walk_source.circuits[rng() % walk_source.size()].walk;
        CircuitPartition p = partition_from_transversal(f, testing::random_transversal(ts, rng));
        std::vector<std::string> tau;
        for (const auto& [v, t] : p.transversal) tau.push_back(t.label());
        std::sort(tau.begin(), tau.end());
        LabeledMatrix lhs = multiply(incidence_vector(d, w), restrict_cols(edge_transition_incidence(d, ts, o), tau));
        DirectedGraph dtch = directed_touch_graph(touch_graph(f, p), o);
        LabeledMatrix rhs = incidence_vector(dtch, project_walk(p, w));
        CHECK(lhs == rhs);
    }
}
