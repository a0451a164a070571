// Acceptance harness: one criterion per invocation (or all), printing a
// single pass/fail line per criterion.

#include <chrono>
#include <cstring>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "helpers.hpp"
#include "ttu/fixtures.hpp"
#include "ttu/representation.hpp"

using namespace ttu;

namespace {

struct Checker {
    bool ok = true;
    std::ostringstream log;

    void require(bool cond, const std::string& what) {
        if (!cond) {
            ok = false;
            log << "    failed: " << what << "\n";
        }
    }
};

// Independent rank oracle for Q(F) relative to an explicit transversal
// extension: |S| plus the drop in touch-graph components when the edges
// matching S are removed.
std::size_t qf_rank_in_extension(const HalfEdgeGraph& f, const std::vector<std::string>& s,
                                 const Transversal& t) {
    CircuitPartition p = partition_from_transversal(f, t);
    TouchGraph tch = touch_graph(f, p);
    std::set<EdgeId> removed;
    for (const auto& [edge, meaning] : tch.edge_meaning) {
        for (const auto& label : s) {
            if (meaning.label() == label) removed.insert(edge);
        }
    }
    if (removed.size() != s.size()) throw ContractError("extension does not contain the subtransversal");
    std::size_t before = connected_components(tch.graph).count();
    std::size_t after = connected_components(testing::without_edges(tch.graph, removed)).count();
    return s.size() + before - after;
}

void for_each_transversal(const TransitionSystem& ts, const std::function<void(const Transversal&)>& fn) {
    std::vector<const std::array<Transition, 3>*> slots;
    std::vector<VertexId> verts;
    for (const auto& [v, trs] : ts.by_vertex()) {
        verts.push_back(v);
        slots.push_back(&trs);
    }
    std::vector<std::size_t> pick(slots.size(), 0);
    while (true) {
        Transversal t;
        for (std::size_t i = 0; i < slots.size(); ++i) t.emplace(verts[i], (*slots[i])[pick[i]]);
        fn(t);
        std::size_t i = 0;
        while (i < pick.size() && pick[i] == 2) pick[i++] = 0;
        if (i == pick.size()) return;
        ++pick[i];
    }
}

// The strict sheltering construction: remove one base edge per component,
// take a strictly fundamental basis of the rest, multiply with the
// edge-transition incidence matrix of the full graph.
Representation strict_construction(const HalfEdgeGraph& f) {
    std::set<EdgeId> base = default_base(f);
    HalfEdgeGraph rest = testing::without_edges(f, base);
    DirectedGraph d_rest = testing::orient_as_stored(rest);
    WalkSet basis = strictly_fundamental_basis(rest, maximal_forest(rest), d_rest);
    DirectedGraph d = testing::orient_as_stored(f);
    return representation_matrix(f, basis, d, lexicographic_orientation(all_transitions(f)));
}

void criterion_1(Checker& c) {
    DirectedGraph d = fixtures::running_example();
    LabeledMatrix theta = edge_transition_incidence(d, all_transitions(d.underlying()),
                                                    fixtures::running_example_orientation());
    c.require(theta == fixtures::running_theta(), "edge-transition incidence matrix golden");
    c.require(incidence_matrix(d) == fixtures::running_incidence(), "incidence matrix golden");
}

void criterion_2(Checker& c) {
    DirectedGraph d = fixtures::running_example();
    const HalfEdgeGraph& f = d.underlying();
    ClosedWalk w({{"h_e1_b", "h_e4_b"}, {"h_e4_d", "h_e8_d"}, {"h_e8_a", "h_e1_a"}});
    LabeledMatrix sigma = incidence_vector(d, w);
    c.require(sigma == fixtures::from_table({"w"}, {"e1", "e2", "e3", "e4", "e5", "e6", "e7", "e8"},
                                            {{1, 0, 0, -1, 0, 0, 0, 1}}),
              "sigma(D,W) golden");

    LabeledMatrix product = multiply(sigma, fixtures::running_theta());
    c.require(product == fixtures::from_table({"w"}, fixtures::running_transition_order(),
                                              {{0, -1, 0, -1, -1, -1, 0, 1, 1, 0, 0, 0}}),
              "sigma times Theta golden");

    ClosedWalk circ = fixtures::running_example_euler();
    Transversal t;
    t.emplace("a", phi_chi_psi(f, circ, "a")[2]);
    t.emplace("b", phi_chi_psi(f, circ, "b")[0]);
    t.emplace("c", phi_chi_psi(f, circ, "c")[0]);
    t.emplace("d", phi_chi_psi(f, circ, "d")[2]);
    CircuitPartition p = partition_from_transversal(f, t);
    TouchGraph tch = touch_graph(f, p);
    DirectedGraph dtch = directed_touch_graph(tch, fixtures::running_example_orientation());
    LabeledMatrix projected = incidence_vector(dtch, project_walk(p, w));
    std::map<VertexId, int> expected{{"a", 1}, {"b", -1}, {"c", 0}, {"d", 0}};
    for (const auto& [edge, meaning] : tch.edge_meaning) {
        c.require(projected.at("w", edge) == expected.at(meaning.vertex),
                  "projected incidence entry at " + meaning.vertex);
    }
    std::vector<std::string> tau;
    for (const auto& [v, tr] : t) tau.push_back(tr.label());
    std::sort(tau.begin(), tau.end());
    c.require(multiply(sigma, restrict_cols(fixtures::running_theta(), tau)) ==
                  [&] {
                      LabeledMatrix renamed(std::vector<std::string>{"w"}, tau);
                      for (const auto& [edge, meaning] : tch.edge_meaning) {
                          renamed.set("w", meaning.label(), projected.at("w", edge));
                      }
                      return renamed;
                  }(),
              "restricted product equals projected incidence vector");
}

void criterion_3(Checker& c) {
    DirectedGraph d = fixtures::running_example();
    const HalfEdgeGraph& f = d.underlying();
    WalkSet basis = strictly_fundamental_basis(f, maximal_forest(f), d);
    c.require(cycle_matrix(f, basis, d).matrix == fixtures::running_cm(), "cycle matrix golden");
    Representation rep = representation_matrix(f, basis, d, fixtures::running_example_orientation());
    c.require(rep.matrix == fixtures::running_product(), "product matrix golden");
    c.require(is_sheltering(rep).sheltering, "sheltering over all subtransversals");
    c.require(is_ttu(rep).ttu, "total transversal unimodularity");
    // Strictness holds for the one-base-edge variant: drop the row of the
    // circuit through e8 and the remaining four rows have full rank 4.
    std::vector<std::string> rows{"C_e4", "C_e5", "C_e6", "C_e7"};
    Representation strict_variant{submatrix(rep.matrix, rows, rep.matrix.col_labels()), rep.target,
                                  rep.provenance};
    c.require(is_sheltering(strict_variant).sheltering, "four-row variant shelters");
    c.require(is_strict(strict_variant), "four-row variant is strict");
}

void criterion_4(Checker& c) {
    DirectedGraph d = fixtures::four_parallel_edges();
    const HalfEdgeGraph& f = d.underlying();
    TransitionalOrientation o = fixtures::containing_orientation(
        all_transitions(f), {{"v1", "h_e1_v1"}, {"v2", "h_e2_v2"}});

    WalkSet b{{"C_1", ClosedWalk({{"h_e1_v1", "h_e2_v1"}, {"h_e2_v2", "h_e1_v2"}})},
              {"C_2", ClosedWalk({{"h_e2_v2", "h_e3_v2"}, {"h_e3_v1", "h_e2_v1"}})},
              {"C_3", ClosedWalk({{"h_e3_v1", "h_e4_v1"}, {"h_e4_v2", "h_e3_v2"}})}};
    WalkSet bprime{{"C_1", ClosedWalk({{"h_e1_v1", "h_e2_v1"}, {"h_e2_v2", "h_e1_v2"}})},
                   {"C_2", ClosedWalk({{"h_e1_v1", "h_e3_v1"}, {"h_e3_v2", "h_e1_v2"}})},
                   {"C_3", ClosedWalk({{"h_e1_v1", "h_e4_v1"}, {"h_e4_v2", "h_e1_v2"}})}};

    Representation a = representation_matrix(f, b, d, o);
    Representation a_prime = representation_matrix(f, bprime, d, o);
    c.require(a.matrix == fixtures::four_parallel_a(), "matrix A golden");
    c.require(a_prime.matrix == fixtures::four_parallel_a_prime(), "matrix A-prime golden");

    // The named witness: rows C_1, C_3 and the columns chi(v1), psi(v2).
    ClosedWalk c1 = fixtures::four_parallel_euler();
    std::string chi_v1 = phi_chi_psi(f, c1, "v1")[1].label();
    std::string psi_v2 = phi_chi_psi(f, c1, "v2")[2].label();
    Rational named = det(submatrix(a.matrix, {"C_1", "C_3"}, {chi_v1, psi_v2}));
    c.require(named == 2 || named == -2, "named 2x2 submatrix has |det| 2");

    TtuResult bad = is_ttu(a);
    c.require(!bad.ttu, "matrix A fails the transversal unimodularity check");
    c.require(bad.witness.has_value() && bad.witness->rows == std::vector<std::string>{"C_1", "C_3"},
              "witness rows are C_1, C_3");
    c.require(bad.witness.has_value() &&
                  (bad.witness->determinant == 2 || bad.witness->determinant == -2),
              "witness determinant has absolute value 2");

    c.require(is_ttu(a_prime).ttu, "matrix A-prime passes");
    c.require(is_integral_cycle_basis(f, b, d), "B is an integral cycle basis");
}

void criterion_5(Checker& c) {
    HalfEdgeGraph f = fixtures::running_example().underlying();
    EulerSystem sys = euler_system(f);
    Representation rep = ias_from_euler(f, sys, {"e8"});
    c.require(rep.matrix == fixtures::running_ias(), "induced-circuit product matrix golden");
    std::string psi_b = phi_chi_psi(f, sys.circuits[0], "b")[2].label();
    c.require(rep.matrix.at("C_a", psi_b) == 2, "entry 2 at row C_a");

    bool all_small = true;
    for_each_transversal(all_transitions(f), [&](const Transversal& t) {
        std::vector<std::string> tau;
        for (const auto& [v, tr] : t) tau.push_back(tr.label());
        std::sort(tau.begin(), tau.end());
        Rational dt = det(restrict_cols(rep.matrix, tau));
        if (dt > 1 || dt < -1) all_small = false;
    });
    c.require(all_small, "every transversal 4x4 determinant has absolute value at most 1");
    c.require(is_sheltering(rep).sheltering, "sheltering");
    c.require(is_strict(rep), "strict");
}

void criterion_6(Checker& c) {
    std::mt19937 rng(424242);
    for (int trial = 0; trial < 200; ++trial) {
        HalfEdgeGraph f = testing::random_four_regular(rng, 6);
        DirectedGraph d = testing::orient_as_stored(f);
        TransitionSystem ts = all_transitions(f);
        TransitionalOrientation o = testing::random_orientation(ts, rng);
        CircuitPartition source = partition_from_transversal(f, testing::random_transversal(ts, rng));
        const ClosedWalk& w = source.circuits[rng() % source.size()].walk;
        CircuitPartition p = partition_from_transversal(f, testing::random_transversal(ts, rng));
        std::vector<std::string> tau;
        for (const auto& [v, t] : p.transversal) tau.push_back(t.label());
        std::sort(tau.begin(), tau.end());
        LabeledMatrix lhs =
            multiply(incidence_vector(d, w), restrict_cols(edge_transition_incidence(d, ts, o), tau));
        DirectedGraph dtch = directed_touch_graph(touch_graph(f, p), o);
        LabeledMatrix rhs = incidence_vector(dtch, project_walk(p, w));
        // Compare entrywise through the touch-graph edge meanings.
        bool match = true;
        TouchGraph tch = touch_graph(f, p);
        for (const auto& [edge, meaning] : tch.edge_meaning) {
            if (lhs.at("w", meaning.label()) != rhs.at("w", edge)) match = false;
        }
        if (!match) {
            c.require(false, "projection identity, trial " + std::to_string(trial));
            return;
        }
    }
}

void criterion_7(Checker& c) {
    auto catalog = fixtures::catalog();
    c.require(catalog.size() >= 10, "catalog has at least ten instances");
    for (const auto& [name, f] : catalog) {
        Representation rep = strict_construction(f);
        c.require(is_sheltering(rep).sheltering, name + ": sheltering");
        c.require(is_strict(rep), name + ": strict");
        c.require(is_ttu(rep).ttu, name + ": totally transversally unimodular");
    }
}

void criterion_8(Checker& c) {
    for (std::size_t n = 1; n <= 4; ++n) {
        for (const auto& g : testing::all_simple_graphs(n)) {
            if (!verify_multimatroid_axioms(z3(g)).valid()) {
                c.require(false, "z3 axioms, " + std::to_string(n) + " vertices");
                return;
            }
        }
    }
    for (const auto& [name, f] : fixtures::catalog()) {
        Multimatroid q = q_f(f);
        c.require(verify_multimatroid_axioms(q).valid(), name + ": rank axioms");

        // Extension independence: every transversal containing a
        // subtransversal assigns it the same rank.
        TransitionSystem ts = all_transitions(f);
        bool independent = true;
        for_each_subtransversal(q.partition(), [&](const std::vector<std::string>& s) {
            if (!independent) return;
            std::set<VertexId> used;
            for (const auto& label : s) used.insert(ts.by_label(label).vertex);
            std::size_t reference = q.rank(s);
            for_each_transversal(ts, [&](const Transversal& t) {
                if (!independent) return;
                for (const auto& label : s) {
                    if (t.at(ts.by_label(label).vertex).label() != label) return;
                }
                if (qf_rank_in_extension(f, s, t) != reference) independent = false;
            });
        });
        c.require(independent, name + ": extension-independent subtransversal rank");
    }
}

void criterion_9(Checker& c) {
    std::vector<std::pair<std::string, HalfEdgeGraph>> instances = fixtures::catalog();
    for (const auto& [name, f] : instances) {
        EulerSystem sys = euler_system(f);
        AdjacencyGraph g = interlacement_graph(f, sys);
        c.require(z3_equals_qf(g, f, sys).equal, name + ": isotropic equals Eulerian");
    }
}

void criterion_10(Checker& c) {
    for (std::size_t n = 1; n <= 4; ++n) {
        for (const auto& g : testing::all_simple_graphs(n)) {
            if (!is_circle_graph_bruteforce(g).is_circle) {
                c.require(false, "graph on " + std::to_string(n) + " vertices should be a circle graph");
                return;
            }
        }
    }
    c.require(is_circle_graph_bruteforce(fixtures::cycle_adjacency(5)).is_circle, "C5 is a circle graph");

    CircleCertificate c4 = ttu_certificate_for_circle_graph(fixtures::cycle_adjacency(4));
    c.require(c4.is_circle && c4.representation.has_value(), "C4 certificate produced");
    if (c4.representation) {
        c.require(is_sheltering(*c4.representation).sheltering, "C4 certificate shelters");
        c.require(is_strict(*c4.representation), "C4 certificate is strict");
        c.require(is_ttu(*c4.representation).ttu, "C4 certificate is totally transversally unimodular");
    }

    AdjacencyGraph w5 = fixtures::wheel5();
    c.require(!is_circle_graph_bruteforce(w5).is_circle, "W5 is not a circle graph");
    CircleCertificate refusal = ttu_certificate_for_circle_graph(w5);
    c.require(!refusal.is_circle && !refusal.refusal.empty(), "W5 certificate is refused");
}

using Criterion = void (*)(Checker&);

const std::vector<std::pair<int, Criterion>> kCriteria{
    {1, criterion_1}, {2, criterion_2}, {3, criterion_3}, {4, criterion_4}, {5, criterion_5},
    {6, criterion_6}, {7, criterion_7}, {8, criterion_8}, {9, criterion_9}, {10, criterion_10},
};

}  // namespace

int main(int argc, char** argv) {
    int only = 0;
    for (int i = 1; i < argc; ++i) {
        if (std::strcmp(argv[i], "--criterion") == 0 && i + 1 < argc) only = std::atoi(argv[++i]);
    }
    bool all_ok = true;
    for (const auto& [num, fn] : kCriteria) {
        if (only != 0 && num != only) continue;
        Checker c;
        auto start = std::chrono::steady_clock::now();
        try {
            fn(c);
        } catch (const std::exception& e) {
            c.require(false, std::string("exception: ") + e.what());
        }
        auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                      std::chrono::steady_clock::now() - start)
                      .count();
        std::cout << "criterion " << num << ": " << (c.ok ? "PASS" : "FAIL") << " (" << ms << " ms)\n"
                  << c.log.str();
        all_ok = all_ok && c.ok;
    }
    return all_ok ? 0 : 1;
}
