#include "ttu/representation.hpp"

#include <algorithm>

namespace ttu {

namespace {

nlohmann::json orientation_record(const TransitionalOrientation& o) {
    nlohmann::json j = nlohmann::json::object();
    for (const auto& [label, s] : o.choice()) j[label] = s.label();
    return j;
}

nlohmann::json walks_record(const WalkSet& walks) {
    nlohmann::json j = nlohmann::json::object();
    for (const auto& [k, w] : walks) j[k] = walk_to_json(w);
    return j;
}

void check_columns_match_ground(const Representation& rep) {
    std::vector<std::string> ground = rep.target.partition().ground();
    if (rep.matrix.col_labels() != ground) {
        throw ContractError("representation columns do not match the target ground set");
    }
}

}  // namespace

Representation representation_matrix(const HalfEdgeGraph& f, const WalkSet& walks,
                                     const DirectedGraph& d, const TransitionalOrientation& o) {
    TransitionSystem ts = all_transitions(f);
    LabeledMatrix theta = edge_transition_incidence(d, ts, o);
    CycleMatrix cm = cycle_matrix(f, walks, d);
    Representation rep;
    rep.matrix = multiply(cm.matrix, theta);
    rep.target = q_f(f);
    rep.provenance = {{"construction", "cycle_matrix_times_incidence"},
                      {"graph", graph_to_json(f, &d.orientation())},
                      {"walks", walks_record(walks)},
                      {"orientation", orientation_record(o)}};
    check_columns_match_ground(rep);
    return rep;
}

ShelterResult is_sheltering(const Representation& rep) {
    check_columns_match_ground(rep);
    if (rep.target.partition().size() > 8) throw SizeError("sheltering check capped at 8 skew classes");
    ShelterResult result;
    result.sheltering = true;
    for_each_subtransversal(rep.target.partition(), [&](const std::vector<std::string>& s) {
        if (!result.sheltering) return;
        if (rank_q(restrict_cols(rep.matrix, s)) != rep.target.rank(s)) {
            result.sheltering = false;
            result.counterexample = s;
        }
    });
    return result;
}

bool is_strict(const Representation& rep) {
    check_columns_match_ground(rep);
    // The maximum subtransversal rank is attained on a transversal.
    std::size_t best = 0;
    const auto& classes = rep.target.partition().classes;
    std::vector<std::string> current;
    std::function<void(std::size_t)> go = [&](std::size_t i) {
        if (i == classes.size()) {
            best = std::max(best, rep.target.rank(current));
            return;
        }
        for (const auto& l : classes[i]) {
            current.push_back(l);
            go(i + 1);
            current.pop_back();
        }
    };
    go(0);
    return rank_q(rep.matrix) == best;
}

TtuResult is_ttu(const Representation& rep, bool transversal_only) {
    check_columns_match_ground(rep);
    const auto& classes = rep.target.partition().classes;
    const std::size_t n_rows = rep.matrix.n_rows();

    std::vector<std::vector<std::string>> subs;
    {
        std::vector<std::string> current;
        std::function<void(std::size_t)> go = [&](std::size_t i) {
            if (i == classes.size()) {
                if (!current.empty() && (!transversal_only || current.size() == classes.size())) {
                    auto s = current;
                    std::sort(s.begin(), s.end());
                    subs.push_back(std::move(s));
                }
                return;
            }
            if (!transversal_only) go(i + 1);
            for (const auto& l : classes[i]) {
                current.push_back(l);
                go(i + 1);
                current.pop_back();
            }
        };
        go(0);
    }
    std::sort(subs.begin(), subs.end(), [](const auto& a, const auto& b) {
        return a.size() != b.size() ? a.size() < b.size() : a < b;
    });

    unsigned long long total = 0;
    for (const auto& s : subs) {
        if (s.size() > n_rows) continue;
        unsigned long long c = 1;
        for (std::size_t i = 0; i < s.size(); ++i) {
            c = c * (n_rows - i) / (i + 1);
            if (c > kTuEnumerationCap) break;
        }
        total += c;
        if (total > kTuEnumerationCap) throw SizeError("transversal unimodularity check exceeds enumeration cap");
    }

    TtuResult result;
    result.ttu = true;
    const auto& row_labels = rep.matrix.row_labels();
    for (const auto& s : subs) {
        const std::size_t k = s.size();
        if (k > n_rows) continue;
        std::vector<std::size_t> idx(k);
        for (std::size_t i = 0; i < k; ++i) idx[i] = i;
        while (true) {
            std::vector<std::string> rows;
            rows.reserve(k);
            for (auto i : idx) rows.push_back(row_labels[i]);
            Rational dv = det(submatrix(rep.matrix, rows, s));
            if (dv > 1 || dv < -1) {
                result.ttu = false;
                result.witness = TuWitness{rows, s, dv};
                return result;
            }
            // next combination
            std::size_t j = k;
            while (j > 0 && idx[j - 1] == n_rows - k + (j - 1)) --j;
            if (j == 0) break;
            ++idx[j - 1];
            for (std::size_t t = j; t < k; ++t) idx[t] = idx[t - 1] + 1;
        }
    }
    return result;
}

Representation ias_from_euler(const HalfEdgeGraph& f, const EulerSystem& c, const std::set<EdgeId>& e_base) {
    if (!is_based(f, e_base)) throw ContractError("edge set is not based (one edge per component)");
    // Direct each edge along its traversal by the Euler circuits.
    std::map<EdgeId, std::pair<HalfEdgeId, HalfEdgeId>> orientation;
    for (const auto& circuit : c.circuits) {
        for (const auto& t : edge_traversals(f, circuit)) {
            if (!orientation.emplace(t.edge, std::make_pair(t.from, t.to)).second) {
                throw ContractError("edge " + t.edge + " traversed twice; not an Euler system");
            }
        }
    }
    if (orientation.size() != f.n_edges()) throw ContractError("Euler system misses edges");
    DirectedGraph d(f, orientation);

    BestForestResult best = best_spanning_forest(f, c, e_base);
    WalkSet gamma = induced_circuits(f, c, e_base);

    TransitionSystem ts = all_transitions(f);
    std::map<std::string, SingleTransition> choice;
    for (const auto& [v, trs] : ts.by_vertex()) {
        const HalfEdgeId& avoid = best.second_visit_half.at(v);
        for (const auto& t : trs) {
            choice[t.label()] = t.a.contains(avoid) ? t.b : t.a;
        }
    }
    TransitionalOrientation o(ts, std::move(choice));

    auto build = [&](const DirectedGraph& dir) {
        return multiply(cycle_matrix(f, gamma, dir).matrix, edge_transition_incidence(dir, ts, o));
    };
    Representation rep;
    rep.matrix = build(d);
    if (f.n_edges() > 0) {
        DirectedGraph d2 = d.with_reversed_edge(f.edges().begin()->first);
        if (build(d2) != rep.matrix) {
            throw ContractError("matrix depends on the choice of edge directions");
        }
    }
    rep.target = q_f(f);
    rep.provenance = {{"construction", "induced_circuits_times_incidence"},
                      {"graph", graph_to_json(f, &d.orientation())},
                      {"e_base", e_base},
                      {"walks", walks_record(gamma)},
                      {"orientation", orientation_record(o)}};
    check_columns_match_ground(rep);
    return rep;
}

WordRealization realize_word(const std::vector<VertexId>& word) {
    std::map<VertexId, std::size_t> occurrences;
    for (const auto& v : word) occurrences[v]++;
    for (const auto& [v, n] : occurrences) {
        if (n != 2) throw InputError("symbol " + v + " occurs " + std::to_string(n) + " times, need 2");
    }
    const std::size_t len = word.size();
    WordRealization out;
    if (len == 0) return out;

    auto edge_id = [&](std::size_t i) {
        std::string num = std::to_string(i);
        if (num.size() < 2) num.insert(num.begin(), '0');
        return "e" + num;
    };
    std::set<VertexId> vertices(word.begin(), word.end());
    std::map<EdgeId, std::pair<HalfEdgeId, HalfEdgeId>> edges;
    std::map<HalfEdgeId, VertexId> epsilon;
    std::map<EdgeId, std::pair<HalfEdgeId, HalfEdgeId>> orientation;
    for (std::size_t i = 0; i < len; ++i) {
        EdgeId e = edge_id(i);
        HalfEdgeId h0 = "h_" + e + "_0", h1 = "h_" + e + "_1";
        edges[e] = {h0, h1};
        epsilon[h0] = word[i];
        epsilon[h1] = word[(i + 1) % len];
        orientation[e] = {h0, h1};
    }
    out.graph = HalfEdgeGraph(std::move(vertices), std::move(edges), std::move(epsilon));
    out.directed = DirectedGraph(out.graph, std::move(orientation));
    std::vector<WalkStep> steps;
    for (std::size_t i = 0; i < len; ++i) {
        steps.push_back(WalkStep{"h_" + edge_id((i + len - 1) % len) + "_1", "h_" + edge_id(i) + "_0"});
    }
    out.circuit.circuits.push_back(ClosedWalk(std::move(steps)));
    return out;
}

CircleCertificate ttu_certificate_for_circle_graph(const AdjacencyGraph& g) {
    CircleCertificate out;
    CircleCheck check = is_circle_graph_bruteforce(g);
    if (!check.is_circle) {
        out.refusal = "not a circle graph: no chord diagram on " + std::to_string(g.vertices.size()) +
                      " chords has an isomorphic interlacement graph";
        out.certificate = {{"graph", adjacency_to_json(g)}, {"is_circle", false}, {"refusal", out.refusal}};
        return out;
    }
    out.is_circle = true;
    if (g.vertices.empty()) {
        Representation rep;
        rep.target = z3(g);
        out.representation = rep;
        out.certificate = {{"graph", adjacency_to_json(g)},
                           {"is_circle", true},
                           {"word", nlohmann::json::array()},
                           {"checks", {{"sheltering", true}, {"strict", true}, {"ttu", true}}}};
        return out;
    }

    WordRealization real = realize_word(check.word);
    const HalfEdgeGraph& f = real.graph;
    AdjacencyGraph interlacement = interlacement_graph(f, real.circuit);
    if (!(interlacement.vertices == g.vertices && interlacement.edges == g.edges &&
          interlacement.loops == g.loops)) {
        throw ContractError("realizing word does not reproduce the input graph");
    }
    // Strict TTU construction: strictly fundamental basis of F minus one
    // base edge per component, multiplied with the edge-transition matrix.
    std::set<EdgeId> e_base = default_base(f);
    std::map<EdgeId, std::pair<HalfEdgeId, HalfEdgeId>> rest_edges;
    std::map<HalfEdgeId, VertexId> rest_eps;
    std::map<EdgeId, std::pair<HalfEdgeId, HalfEdgeId>> rest_orient;
    for (const auto& [e, pair] : f.edges()) {
        if (e_base.count(e)) continue;
        rest_edges[e] = pair;
        rest_eps[pair.first] = f.vertex_of(pair.first);
        rest_eps[pair.second] = f.vertex_of(pair.second);
        rest_orient[e] = real.directed.orientation().at(e);
    }
    HalfEdgeGraph rest(f.vertices(), std::move(rest_edges), std::move(rest_eps));
    DirectedGraph d_rest(rest, std::move(rest_orient));
    WalkSet basis = strictly_fundamental_basis(rest, maximal_forest(rest), d_rest);
    Representation rep = representation_matrix(f, basis, real.directed,
                                               lexicographic_orientation(all_transitions(f)));
    rep.provenance["e_base"] = e_base;

    // Relabel transitions to vertex-triple columns: the circuit's own
    // transition maps to I, the crossed one to A, the parallel one to I+A.
    std::map<std::string, std::string> col_map;
    for (const auto& v : f.vertices()) {
        auto triple = phi_chi_psi(f, real.circuit.circuit_at(f, v), v);
        col_map[triple[0].label()] = v + "|I";
        col_map[triple[1].label()] = v + "|A";
        col_map[triple[2].label()] = v + "|I+A";
    }
    std::vector<std::string> new_cols;
    for (const auto& c : rep.matrix.col_labels()) new_cols.push_back(col_map.at(c));
    LabeledMatrix relabeled(rep.matrix.row_labels(), new_cols);
    for (const auto& r : rep.matrix.row_labels()) {
        for (const auto& c : rep.matrix.col_labels()) {
            relabeled.set(r, col_map.at(c), rep.matrix.at(r, c));
        }
    }
    Representation final_rep;
    final_rep.matrix = std::move(relabeled);
    final_rep.target = z3(g);
    final_rep.provenance = rep.provenance;
    final_rep.provenance["column_relabeling"] = col_map;

    ShelterResult sh = is_sheltering(final_rep);
    bool st = is_strict(final_rep);
    TtuResult tu = is_ttu(final_rep);
    out.representation = final_rep;
    out.certificate = {{"graph", adjacency_to_json(g)},
                       {"is_circle", true},
                       {"word", check.word},
                       {"four_regular", rep.provenance.at("graph")},
                       {"euler_system", walk_to_json(real.circuit.circuits.front())},
                       {"e_base", e_base},
                       {"orientation", rep.provenance.at("orientation")},
                       {"matrix", matrix_to_json(final_rep.matrix)},
                       {"checks",
                        {{"sheltering", sh.sheltering}, {"strict", st}, {"ttu", tu.ttu}}}};
    return out;
}

}  // namespace ttu
