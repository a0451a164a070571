#include <doctest.h>

#include "helpers.hpp"
#include "ttu/fixtures.hpp"
#include "ttu/graph.hpp"

using namespace ttu;

TEST_CASE("running example graph validates as 4-regular") {
    HalfEdgeGraph f = fixtures::running_example().underlying();
    CHECK(validate_graph(f).valid());
    CHECK(validate_graph(f, true).valid());
    CHECK(f.is_four_regular());
    CHECK(f.n_vertices() == 4);
    CHECK(f.n_edges() == 8);
    CHECK(f.partner("h_e1_a") == "h_e1_b");
    CHECK(f.vertex_of("h_e3_d") == "d");
    CHECK_FALSE(f.is_loop("e1"));
}

TEST_CASE("single vertex with two loops is 4-regular") {
    HalfEdgeGraph g = fixtures::one_vertex_two_loops().underlying();
    CHECK(validate_graph(g, true).valid());
    CHECK(g.is_loop("l1"));
    CHECK(g.half_edges_at("v").size() == 4);
}

TEST_CASE("broken pairings are reported") {
    // A half-edge that appears in no edge.
    std::map<EdgeId, std::pair<HalfEdgeId, HalfEdgeId>> edges{{"e", {"h1", "h2"}}};
    std::map<HalfEdgeId, VertexId> epsilon{{"h1", "u"}, {"h2", "u"}, {"h3", "u"}};
    HalfEdgeGraph g({"u"}, edges, epsilon);
    auto report = validate_graph(g);
    CHECK_FALSE(report.valid());
}

TEST_CASE("connected components") {
    CHECK(connected_components(fixtures::running_example().underlying()).count() == 1);
    CHECK(connected_components(HalfEdgeGraph()).count() == 0);

    // Two disjoint copies of the running example.
    const HalfEdgeGraph f = fixtures::running_example().underlying();
    std::set<VertexId> vertices;
    std::map<EdgeId, std::pair<HalfEdgeId, HalfEdgeId>> edges;
    std::map<HalfEdgeId, VertexId> epsilon;
    for (const std::string tag : {"1", "2"}) {
        for (const auto& v : f.vertices()) vertices.insert(v + tag);
        for (const auto& [e, pair] : f.edges()) {
            edges[e + tag] = {pair.first + tag, pair.second + tag};
        }
        for (const auto& [h, v] : f.epsilon()) epsilon[h + tag] = v + tag;
    }
    HalfEdgeGraph doubled(std::move(vertices), std::move(edges), std::move(epsilon));
    CHECK(connected_components(doubled).count() == 2);
    CHECK(doubled.is_four_regular());
}

TEST_CASE("closed walk recognition") {
    HalfEdgeGraph f = fixtures::running_example().underlying();
    CHECK(is_closed_walk(f, fixtures::running_example_euler()));
    ClosedWalk w({{"h_e1_b", "h_e4_b"}, {"h_e4_d", "h_e8_d"}, {"h_e8_a", "h_e1_a"}});
    CHECK(is_closed_walk(f, w));
    CHECK(is_oriented_circuit(f, w));
    ClosedWalk broken({{"h_e1_b", "h_e4_b"}, {"h_e8_a", "h_e1_a"}});
    CHECK_FALSE(is_closed_walk(f, broken));
    ClosedWalk unknown(std::vector<WalkStep>{{"h_e1_b", "nope"}});
    CHECK_THROWS_AS(is_closed_walk(f, unknown), InputError);
}

TEST_CASE("walk equality is rotation invariant") {
    ClosedWalk a({{"x1", "x2"}, {"y1", "y2"}, {"z1", "z2"}});
    ClosedWalk b({{"y1", "y2"}, {"z1", "z2"}, {"x1", "x2"}});
    CHECK(a == b);
    CHECK(a.reversed() == b.reversed());
    CHECK_FALSE(a == a.reversed());
    CHECK(forget_orientation(a) == forget_orientation(a.reversed()));
}

TEST_CASE("edge traversals follow the walk") {
    HalfEdgeGraph f = fixtures::running_example().underlying();
    ClosedWalk w({{"h_e1_b", "h_e4_b"}, {"h_e4_d", "h_e8_d"}, {"h_e8_a", "h_e1_a"}});
    auto trav = edge_traversals(f, w);
    REQUIRE(trav.size() == 3);
    std::set<EdgeId> seen;
    for (const auto& t : trav) seen.insert(t.edge);
    CHECK(seen == std::set<EdgeId>{"e1", "e4", "e8"});
    CHECK(traversed_edges(f, w) == seen);
}

TEST_CASE("graph JSON round-trip") {
    DirectedGraph d = fixtures::running_example();
    nlohmann::json j = graph_to_json(d.underlying(), &d.orientation());
    DirectedGraph back = directed_graph_from_json(j);
    CHECK(back.underlying().edges() == d.underlying().edges());
    CHECK(back.orientation() == d.orientation());
    j.erase("orientation");
    CHECK(graph_from_json(j).n_edges() == 8);
    CHECK_THROWS_AS(directed_graph_from_json(j), InputError);
}

TEST_CASE("reversing an edge flips tail and head") {
    DirectedGraph d = fixtures::running_example();
    DirectedGraph r = d.with_reversed_edge("e1");
    CHECK(r.tail("e1") == d.head("e1"));
    CHECK(r.head("e1") == d.tail("e1"));
    CHECK(r.tail("e2") == d.tail("e2"));
}
