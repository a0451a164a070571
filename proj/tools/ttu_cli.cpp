#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "ttu/cycle_spaces.hpp"
#include "ttu/fixtures.hpp"
#include "ttu/four_regular.hpp"
#include "ttu/graph.hpp"
#include "ttu/matrix.hpp"
#include "ttu/multimatroid.hpp"
#include "ttu/representation.hpp"

namespace {

using nlohmann::json;
using namespace ttu;

json load_json(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw InputError("cannot open " + path);
    try {
        return json::parse(in);
    } catch (const json::parse_error& e) {
        throw InputError("parse error in " + path + ": " + e.what());
    }
}

std::set<EdgeId> parse_edge_list(const std::string& csv) {
    std::set<EdgeId> out;
    std::stringstream ss(csv);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (!item.empty()) out.insert(item);
    }
    return out;
}

SingleTransition parse_single_transition(const std::string& label) {
    // Accepts the {h1,h2} label format.
    if (label.size() < 5 || label.front() != '{' || label.back() != '}') {
        throw InputError("bad single transition label: " + label);
    }
    std::string body = label.substr(1, label.size() - 2);
    auto comma = body.find(',');
    if (comma == std::string::npos) throw InputError("bad single transition label: " + label);
    return SingleTransition(body.substr(0, comma), body.substr(comma + 1));
}

struct Orientations {
    DirectedGraph d;
    TransitionSystem ts;
    TransitionalOrientation o;
    EulerSystem euler;
    std::set<EdgeId> e_base;
};

// Resolves the transitional orientation: "hce" builds the deterministic
// Euler system and avoids each vertex's second-visit half-edge; any other
// value is a path to a JSON object {transition label: single transition}.
Orientations resolve(const DirectedGraph& d, const std::string& orientation_spec,
                     const std::string& e_base_csv, unsigned seed) {
    Orientations out;
    out.d = d;
    out.ts = all_transitions(d.underlying());
    out.euler = euler_system(d.underlying(), seed);
    out.e_base = e_base_csv.empty() ? default_base(d.underlying()) : parse_edge_list(e_base_csv);
    if (orientation_spec == "hce") {
        BestForestResult best = best_spanning_forest(d.underlying(), out.euler, out.e_base);
        std::map<VertexId, HalfEdgeId> avoid;
        for (const auto& [v, h] : best.second_visit_half) avoid[v] = h;
        out.o = fixtures::avoiding_orientation(out.ts, avoid);
    } else {
        json j = load_json(orientation_spec);
        std::map<std::string, SingleTransition> choice;
        for (const auto& [label, val] : j.items()) {
            choice[label] = parse_single_transition(val.get<std::string>());
        }
        out.o = TransitionalOrientation(out.ts, std::move(choice));
    }
    return out;
}

// Column order for text display: phi, chi, psi per vertex, vertices sorted.
std::vector<std::string> display_order(const HalfEdgeGraph& f, const EulerSystem& euler) {
    std::vector<std::string> out;
    for (const auto& v : f.vertices()) {
        auto triple = phi_chi_psi(f, euler.circuit_at(f, v), v);
        for (const auto& t : triple) out.push_back(t.label());
    }
    return out;
}

void emit_matrix(const LabeledMatrix& m, bool as_json, const std::vector<std::string>& col_order = {}) {
    if (as_json) {
        std::cout << matrix_to_json(m).dump(2) << "\n";
    } else {
        std::cout << to_text(m, col_order);
    }
}

int cmd_construct(const std::string& input, const std::string& what, const std::string& orientation_spec,
                  const std::string& e_base_csv, unsigned seed, bool as_json) {
    if (what == "ias-adjacency") {
        IsotropicMatrix ias = ias_matrix(adjacency_from_json(load_json(input)));
        emit_matrix(ias.matrix, as_json);
        return 0;
    }
    DirectedGraph d = directed_graph_from_json(load_json(input));
    auto report = validate_graph(d.underlying(), true);
    if (!report.valid()) {
        for (const auto& v : report.violations) std::cerr << "invalid graph: " << v << "\n";
        return 2;
    }
    if (what == "incidence") {
        emit_matrix(incidence_matrix(d), as_json);
        return 0;
    }
    Orientations ctx = resolve(d, orientation_spec, e_base_csv, seed);
    std::vector<std::string> order = as_json ? std::vector<std::string>{} : display_order(d.underlying(), ctx.euler);
    if (what == "theta") {
        emit_matrix(edge_transition_incidence(d, ctx.ts, ctx.o), as_json, order);
    } else if (what == "cm") {
        WalkSet basis = strictly_fundamental_basis(d.underlying(), maximal_forest(d.underlying()), d);
        emit_matrix(cycle_matrix(d.underlying(), basis, d).matrix, as_json);
    } else if (what == "product") {
        WalkSet basis = strictly_fundamental_basis(d.underlying(), maximal_forest(d.underlying()), d);
        emit_matrix(representation_matrix(d.underlying(), basis, d, ctx.o).matrix, as_json, order);
    } else if (what == "ias-from-euler") {
        emit_matrix(ias_from_euler(d.underlying(), ctx.euler, ctx.e_base).matrix, as_json, order);
    } else {
        throw InputError("unknown construction: " + what);
    }
    return 0;
}

int cmd_verify(const std::string& check, const std::string& graph_path, const std::string& matrix_path,
               const std::string& adjacency_path, unsigned seed, bool as_json) {
    json report;
    bool pass = false;
    if (check == "axioms") {
        Multimatroid z = adjacency_path.empty()
                             ? q_f(graph_from_json(load_json(graph_path)))
                             : z3(adjacency_from_json(load_json(adjacency_path)));
        AxiomReport r = verify_multimatroid_axioms(z);
        pass = r.valid();
        report = {{"check", "axioms"}, {"pass", pass}, {"violations", axiom_report_to_json(r)}};
    } else if (check == "z3-equals-qf") {
        HalfEdgeGraph f = graph_from_json(load_json(graph_path));
        EulerSystem c = euler_system(f, seed);
        AdjacencyGraph g = interlacement_graph(f, c);
        MultimatroidComparison cmp = z3_equals_qf(g, f, c);
        pass = cmp.equal;
        report = {{"check", "z3-equals-qf"}, {"pass", pass}};
        if (!pass) report["counterexample"] = cmp.counterexample;
    } else {
        Representation rep;
        rep.matrix = matrix_from_json(load_json(matrix_path));
        rep.target = q_f(graph_from_json(load_json(graph_path)));
        if (check == "ttu" || check == "transversal-ttu") {
            TtuResult r = is_ttu(rep, check == "transversal-ttu");
            pass = r.ttu;
            report = {{"check", check}, {"pass", pass}};
            if (r.witness) {
                report["witness"] = {{"rows", r.witness->rows},
                                     {"cols", r.witness->cols},
                                     {"determinant", rational_to_string(r.witness->determinant)}};
            }
        } else if (check == "sheltering") {
            ShelterResult r = is_sheltering(rep);
            pass = r.sheltering;
            report = {{"check", "sheltering"}, {"pass", pass}};
            if (!pass) report["counterexample"] = r.counterexample;
        } else if (check == "strict") {
            pass = is_strict(rep);
            report = {{"check", "strict"}, {"pass", pass}};
        } else {
            throw InputError("unknown check: " + check);
        }
    }
    if (as_json) {
        std::cout << report.dump(2) << "\n";
    } else {
        std::cout << report.at("check").get<std::string>() << ": " << (pass ? "pass" : "fail") << "\n";
        if (!pass) std::cout << report.dump(2) << "\n";
    }
    return pass ? 0 : 1;
}

int cmd_interlacement(const std::string& input, unsigned seed, bool as_json) {
    HalfEdgeGraph f = graph_from_json(load_json(input));
    AdjacencyGraph g = interlacement_graph(f, euler_system(f, seed));
    if (as_json) {
        std::cout << adjacency_to_json(g).dump(2) << "\n";
    } else {
        for (const auto& [u, v] : g.edges) std::cout << u << " -- " << v << "\n";
    }
    return 0;
}

int cmd_circle_check(const std::string& input, bool certificate, bool as_json) {
    AdjacencyGraph g = adjacency_from_json(load_json(input));
    if (certificate) {
        CircleCertificate cert = ttu_certificate_for_circle_graph(g);
        bool verified = cert.is_circle && cert.certificate.contains("checks") &&
                        cert.certificate["checks"]["sheltering"].get<bool>() &&
                        cert.certificate["checks"]["strict"].get<bool>() &&
                        cert.certificate["checks"]["ttu"].get<bool>();
        if (as_json) {
            std::cout << cert.certificate.dump(2) << "\n";
        } else if (cert.is_circle) {
            std::cout << "circle graph; certificate " << (verified ? "verified" : "FAILED") << "\n";
        } else {
            std::cout << cert.refusal << "\n";
        }
        return verified ? 0 : 1;
    }
    CircleCheck check = is_circle_graph_bruteforce(g);
    if (as_json) {
        std::cout << json{{"is_circle", check.is_circle}, {"word", check.word}}.dump(2) << "\n";
    } else if (check.is_circle) {
        std::cout << "circle graph, word:";
        for (const auto& v : check.word) std::cout << " " << v;
        std::cout << "\n";
    } else {
        std::cout << "not a circle graph\n";
    }
    return check.is_circle ? 0 : 1;
}

struct DemoOutcome {
    std::string name;
    bool pass;
    std::string detail;
};

std::string first_mismatch(const LabeledMatrix& actual, const LabeledMatrix& expected) {
    if (actual.row_labels() != expected.row_labels()) return "row label sets differ";
    if (actual.col_labels() != expected.col_labels()) return "column label sets differ";
    for (const auto& r : expected.row_labels()) {
        for (const auto& c : expected.col_labels()) {
            if (actual.at(r, c) != expected.at(r, c)) {
                return "entry (" + r + ", " + c + "): got " + rational_to_string(actual.at(r, c)) +
                       ", want " + rational_to_string(expected.at(r, c));
            }
        }
    }
    return {};
}

int cmd_demo(bool as_json) {
    std::vector<DemoOutcome> outcomes;
    auto check_matrix = [&](const std::string& name, const LabeledMatrix& actual,
                            const LabeledMatrix& expected) {
        std::string m = first_mismatch(actual, expected);
        outcomes.push_back({name, m.empty(), m});
    };
    auto check = [&](const std::string& name, bool ok, const std::string& detail = {}) {
        outcomes.push_back({name, ok, ok ? std::string{} : detail});
    };

    DirectedGraph d = fixtures::running_example();
    const HalfEdgeGraph& f = d.underlying();
    TransitionSystem ts = all_transitions(f);
    TransitionalOrientation o = fixtures::running_example_orientation();

    check_matrix("incidence-matrix", incidence_matrix(d), fixtures::running_incidence());
    check_matrix("edge-transition-incidence", edge_transition_incidence(d, ts, o),
                 fixtures::running_theta());

    {
        // Closed walk crossing e1, e4, e8 and its projection to the
        // two-circuit partition.
        ClosedWalk w({{"h_e1_b", "h_e4_b"}, {"h_e4_d", "h_e8_d"}, {"h_e8_a", "h_e1_a"}});
        LabeledMatrix sigma = incidence_vector(d, w);
        check_matrix("walk-incidence-vector", sigma,
                     fixtures::from_table({"w"}, {"e1", "e2", "e3", "e4", "e5", "e6", "e7", "e8"},
                                          {{1, 0, 0, -1, 0, 0, 0, 1}}));
        check_matrix("walk-vector-product", multiply(sigma, edge_transition_incidence(d, ts, o)),
                     fixtures::from_table({"w"}, fixtures::running_transition_order(),
                                          {{0, -1, 0, -1, -1, -1, 0, 1, 1, 0, 0, 0}}));
        ClosedWalk euler = fixtures::running_example_euler();
        Transversal tau;
        for (const auto& [v, kind] : std::map<VertexId, int>{{"a", 2}, {"b", 0}, {"c", 0}, {"d", 2}}) {
            tau.emplace(v, phi_chi_psi(f, euler, v)[static_cast<std::size_t>(kind)]);
        }
        CircuitPartition p = partition_from_transversal(f, tau);
        check("two-circuit-partition", p.size() == 2,
              "partition has " + std::to_string(p.size()) + " circuits");
        DirectedGraph dtch = directed_touch_graph(touch_graph(f, p), o);
        std::vector<std::string> tau_labels;
        for (const auto& [v, t] : tau) tau_labels.push_back(t.label());
        std::sort(tau_labels.begin(), tau_labels.end());
        LabeledMatrix projected = incidence_vector(dtch, project_walk(p, w));
        std::vector<std::vector<int>> want(1);
        for (const auto& l : tau_labels) {
            if (l == tau.at("a").label()) want[0].push_back(1);
            else if (l == tau.at("b").label()) want[0].push_back(-1);
            else want[0].push_back(0);
        }
        check_matrix("projected-walk-vector", projected,
                     fixtures::from_table({"w"}, tau_labels, want));
    }

    {
        WalkSet basis = strictly_fundamental_basis(f, maximal_forest(f), d);
        check_matrix("fundamental-cycle-matrix", cycle_matrix(f, basis, d).matrix,
                     fixtures::running_cm());
        Representation rep = representation_matrix(f, basis, d, o);
        check_matrix("fundamental-product", rep.matrix, fixtures::running_product());
    }

    {
        DirectedGraph d4 = fixtures::four_parallel_edges();
        const HalfEdgeGraph& f4 = d4.underlying();
        TransitionSystem ts4 = all_transitions(f4);
        TransitionalOrientation o4 =
            fixtures::containing_orientation(ts4, {{"v1", "h_e1_v1"}, {"v2", "h_e2_v2"}});
        check_matrix("four-parallel-edge-transition", edge_transition_incidence(d4, ts4, o4),
                     fixtures::four_parallel_theta());
        WalkSet b{{"C_1", ClosedWalk({{"h_e1_v1", "h_e2_v1"}, {"h_e2_v2", "h_e1_v2"}})},
                  {"C_2", ClosedWalk({{"h_e2_v2", "h_e3_v2"}, {"h_e3_v1", "h_e2_v1"}})},
                  {"C_3", ClosedWalk({{"h_e3_v1", "h_e4_v1"}, {"h_e4_v2", "h_e3_v2"}})}};
        check_matrix("four-parallel-cycle-matrix", cycle_matrix(f4, b, d4).matrix,
                     fixtures::four_parallel_cm_b());
        Representation a = representation_matrix(f4, b, d4, o4);
        check_matrix("four-parallel-product", a.matrix, fixtures::four_parallel_a());
        TtuResult bad = is_ttu(a);
        Rational witness_det = bad.witness ? bad.witness->determinant : Rational(0);
        check("four-parallel-ttu-failure",
              !bad.ttu && bad.witness && (witness_det == 2 || witness_det == -2),
              "expected a determinant-2 witness");
        // Fundamental circuits through e1, each oriented along e1.
        WalkSet bprime{{"C_1", ClosedWalk({{"h_e1_v1", "h_e2_v1"}, {"h_e2_v2", "h_e1_v2"}})},
                       {"C_2", ClosedWalk({{"h_e1_v1", "h_e3_v1"}, {"h_e3_v2", "h_e1_v2"}})},
                       {"C_3", ClosedWalk({{"h_e1_v1", "h_e4_v1"}, {"h_e4_v2", "h_e1_v2"}})}};
        check_matrix("four-parallel-fundamental-cycle-matrix", cycle_matrix(f4, bprime, d4).matrix,
                     fixtures::four_parallel_cm_bprime());
        Representation aprime = representation_matrix(f4, bprime, d4, o4);
        check_matrix("four-parallel-fundamental-product", aprime.matrix,
                     fixtures::four_parallel_a_prime());
        check("four-parallel-fundamental-ttu", is_ttu(aprime).ttu, "expected TTU to hold");
        check("four-parallel-integral-basis", is_integral_cycle_basis(f4, b, d4),
              "expected an integral cycle basis");
    }

    {
        EulerSystem c{{fixtures::running_example_euler()}};
        WalkSet gamma = induced_circuits(f, c, {"e8"});
        check_matrix("induced-circuit-cycle-matrix", cycle_matrix(f, gamma, d).matrix,
                     fixtures::running_gamma_cm());
        Representation rep = ias_from_euler(f, c, {"e8"});
        check_matrix("induced-circuit-product", rep.matrix, fixtures::running_ias());
    }

    bool all = true;
    for (const auto& out : outcomes) all = all && out.pass;
    if (as_json) {
        json j = json::array();
        for (const auto& out : outcomes) {
            j.push_back({{"name", out.name}, {"pass", out.pass}, {"detail", out.detail}});
        }
        std::cout << json{{"pass", all}, {"results", j}}.dump(2) << "\n";
    } else {
        for (const auto& out : outcomes) {
            std::cout << (out.pass ? "PASS" : "FAIL") << "  " << out.name;
            if (!out.pass) std::cout << "  (" << out.detail << ")";
            std::cout << "\n";
        }
    }
    return all ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"constructions and checks for transition matrices of 4-regular graphs"};
    app.require_subcommand(1);

    std::string input, matrix_path, adjacency_path, orientation_spec = "hce", e_base_csv, what, check_name;
    unsigned seed = 0;
    bool as_json = false, certificate = false;
    app.add_flag("--json", as_json, "machine-readable output");

    auto* construct = app.add_subcommand("construct", "build a matrix from a graph");
    construct->add_option("--input", input, "graph JSON")->required();
    construct->add_option("--what", what, "theta|incidence|cm|product|ias-from-euler|ias-adjacency")
        ->required();
    construct->add_option("--orientation", orientation_spec, "hce or path to orientation JSON");
    construct->add_option("--e-base", e_base_csv, "comma-separated based edge set");
    construct->add_option("--seed", seed, "Euler traversal seed");

    auto* verify = app.add_subcommand("verify", "run a check");
    verify->add_option("--check", check_name, "ttu|transversal-ttu|sheltering|strict|axioms|z3-equals-qf")
        ->required();
    verify->add_option("--input", input, "graph JSON");
    verify->add_option("--matrix", matrix_path, "matrix JSON");
    verify->add_option("--adjacency", adjacency_path, "adjacency JSON");
    verify->add_option("--seed", seed, "Euler traversal seed");

    auto* inter = app.add_subcommand("interlacement", "interlacement graph of the deterministic Euler system");
    inter->add_option("--input", input, "graph JSON")->required();
    inter->add_option("--seed", seed, "Euler traversal seed");

    auto* circle = app.add_subcommand("circle-check", "brute-force circle graph recognition");
    circle->add_option("--input", input, "adjacency JSON")->required();
    circle->add_flag("--certificate", certificate, "build and verify a full representation certificate");

    app.add_subcommand("demo-paper", "rebuild the reference example matrices and compare");

    CLI11_PARSE(app, argc, argv);

    try {
        if (app.got_subcommand("construct")) return cmd_construct(input, what, orientation_spec, e_base_csv, seed, as_json);
        if (app.got_subcommand("verify")) return cmd_verify(check_name, input, matrix_path, adjacency_path, seed, as_json);
        if (app.got_subcommand("interlacement")) return cmd_interlacement(input, seed, as_json);
        if (app.got_subcommand("circle-check")) return cmd_circle_check(input, certificate, as_json);
        if (app.got_subcommand("demo-paper")) return cmd_demo(as_json);
    } catch (const SizeError& e) {
        std::cerr << "size cap: " << e.what() << "\n";
        return 3;
    } catch (const InputError& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return 2;
    } catch (const ContractError& e) {
        std::cerr << "contract violation: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
