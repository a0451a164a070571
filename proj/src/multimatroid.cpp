#include "ttu/multimatroid.hpp"

#include <algorithm>
#include <bit>
#include <random>

#include <nlohmann/json.hpp>

namespace ttu {

std::vector<std::string> SkewPartition::ground() const {
    std::vector<std::string> out;
    for (const auto& c : classes) out.insert(out.end(), c.begin(), c.end());
    std::sort(out.begin(), out.end());
    return out;
}

std::size_t SkewPartition::class_of(const std::string& label) const {
    for (std::size_t i = 0; i < classes.size(); ++i) {
        if (std::find(classes[i].begin(), classes[i].end(), label) != classes[i].end()) return i;
    }
    throw InputError("label " + label + " not in the ground set");
}

Multimatroid::Multimatroid(SkewPartition partition, RankFn rank)
    : partition_(std::move(partition)), rank_(std::move(rank)) {
    for (auto& c : partition_.classes) std::sort(c.begin(), c.end());
    std::sort(partition_.classes.begin(), partition_.classes.end());
}

std::size_t Multimatroid::rank(std::vector<std::string> s) const {
    std::sort(s.begin(), s.end());
    std::set<std::size_t> used;
    for (const auto& l : s) {
        std::size_t cls;
        try {
            cls = partition_.class_of(l);
        } catch (const InputError& e) {
            throw ContractError(e.what());
        }
        if (!used.insert(cls).second) {
            throw ContractError("two elements of one skew class in a subtransversal");
        }
    }
    return rank_(s);
}

void for_each_subtransversal(const SkewPartition& p,
                             const std::function<void(const std::vector<std::string>&)>& fn) {
    std::vector<std::string> current;
    std::function<void(std::size_t)> go = [&](std::size_t i) {
        if (i == p.classes.size()) {
            std::vector<std::string> s = current;
            std::sort(s.begin(), s.end());
            fn(s);
            return;
        }
        go(i + 1);  // skip this class
        for (const auto& l : p.classes[i]) {
            current.push_back(l);
            go(i + 1);
            current.pop_back();
        }
    };
    go(0);
}

bool AdjacencyGraph::adjacent(const VertexId& u, const VertexId& v) const {
    if (u == v) return loops.count(u) > 0;
    return edges.count(u < v ? std::make_pair(u, v) : std::make_pair(v, u)) > 0;
}

nlohmann::json adjacency_to_json(const AdjacencyGraph& g) {
    nlohmann::json j;
    j["vertices"] = g.vertices;
    j["adjacency"] = nlohmann::json::array();
    for (const auto& [u, v] : g.edges) j["adjacency"].push_back({u, v});
    j["loops"] = g.loops;
    return j;
}

AdjacencyGraph adjacency_from_json(const nlohmann::json& j) {
    AdjacencyGraph g;
    try {
        for (const auto& v : j.at("vertices")) g.vertices.insert(v.get<std::string>());
        for (const auto& e : j.at("adjacency")) {
            if (!e.is_array() || e.size() != 2) throw InputError("adjacency entries must be pairs");
            VertexId u = e[0].get<std::string>(), v = e[1].get<std::string>();
            if (u == v) throw InputError("loop " + u + " belongs in the loops list, not adjacency");
            if (!g.vertices.count(u) || !g.vertices.count(v)) {
                throw InputError("adjacency references unknown vertex");
            }
            g.edges.insert(u < v ? std::make_pair(u, v) : std::make_pair(v, u));
        }
        if (j.contains("loops")) {
            for (const auto& v : j.at("loops")) {
                VertexId u = v.get<std::string>();
                if (!g.vertices.count(u)) throw InputError("loop at unknown vertex " + u);
                g.loops.insert(u);
            }
        }
    } catch (const nlohmann::json::exception& e) {
        throw InputError(std::string("bad adjacency JSON: ") + e.what());
    }
    return g;
}

IsotropicMatrix ias_matrix(const AdjacencyGraph& g) {
    for (const auto& [u, v] : g.edges) {
        if (!g.vertices.count(u) || !g.vertices.count(v) || u == v) {
            throw ContractError("adjacency is not a loopless symmetric relation on the vertex set");
        }
    }
    std::vector<std::string> rows(g.vertices.begin(), g.vertices.end());
    std::vector<std::string> cols;
    IsotropicMatrix out;
    for (const auto& v : rows) {
        out.vertex_triples.push_back({v + "|I", v + "|A", v + "|I+A"});
        for (const auto& c : out.vertex_triples.back()) cols.push_back(c);
    }
    out.matrix = LabeledMatrix(rows, cols);
    for (const auto& u : rows) {
        for (const auto& v : rows) {
            int a = g.adjacent(u, v) ? 1 : 0;
            int i = (u == v) ? 1 : 0;
            out.matrix.set(u, v + "|I", Rational(i));
            out.matrix.set(u, v + "|A", Rational(a));
            out.matrix.set(u, v + "|I+A", Rational((i + a) % 2));
        }
    }
    return out;
}

Multimatroid z3(const AdjacencyGraph& g) {
    IsotropicMatrix ias = ias_matrix(g);
    SkewPartition p;
    p.classes = ias.vertex_triples;
    LabeledMatrix m = ias.matrix;
    return Multimatroid(std::move(p), [m](const std::vector<std::string>& s) {
        return rank_gf2(restrict_cols(m, s));
    });
}

nlohmann::json axiom_report_to_json(const AxiomReport& r) {
    nlohmann::json out = nlohmann::json::array();
    for (const auto& v : r.violations) {
        out.push_back({{"axiom", v.axiom},
                       {"witness_subtransversal", v.witness_subtransversal},
                       {"details", v.details}});
    }
    return out;
}

AxiomReport verify_multimatroid_axioms(const Multimatroid& z) {
    const SkewPartition& p = z.partition();
    if (p.size() > 8) throw SizeError("axiom verification capped at 8 skew classes");
    AxiomReport report;

    std::map<std::vector<std::string>, std::size_t> r;
    for_each_subtransversal(p, [&](const std::vector<std::string>& s) { r[s] = z.rank(s); });

    auto with = [](std::vector<std::string> s, const std::string& x) {
        s.push_back(x);
        std::sort(s.begin(), s.end());
        return s;
    };
    auto name = [](const std::vector<std::string>& s) {
        std::string out = "{";
        for (std::size_t i = 0; i < s.size(); ++i) out += (i ? "," : "") + s[i];
        return out + "}";
    };

    if (r.at({}) != 0) {
        report.violations.push_back({"normalization", {}, "r(empty) = " + std::to_string(r.at({}))});
    }

    for (const auto& [s, rs] : r) {
        std::set<std::size_t> used;
        for (const auto& l : s) used.insert(p.class_of(l));

        std::vector<std::string> free_elems;  // elements of classes disjoint from s
        for (std::size_t ci = 0; ci < p.classes.size(); ++ci) {
            if (used.count(ci)) continue;
            for (const auto& x : p.classes[ci]) free_elems.push_back(x);
        }

        for (const auto& x : free_elems) {
            std::size_t rx = r.at(with(s, x));
            if (rx < rs || rx > rs + 1) {
                report.violations.push_back({"unit_increase", with(s, x),
                                             "r" + name(s) + " = " + std::to_string(rs) + " but r with " + x +
                                                 " = " + std::to_string(rx)});
            }
        }
        for (std::size_t i = 0; i < free_elems.size(); ++i) {
            for (std::size_t j = i + 1; j < free_elems.size(); ++j) {
                const auto& x = free_elems[i];
                const auto& y = free_elems[j];
                if (p.class_of(x) == p.class_of(y)) continue;
                std::size_t rx = r.at(with(s, x)), ry = r.at(with(s, y)), rxy = r.at(with(with(s, x), y));
                if (rx + ry < rxy + rs) {
                    report.violations.push_back({"submodularity", with(with(s, x), y),
                                                 "r(S+x) + r(S+y) = " + std::to_string(rx + ry) +
                                                     " < r(S+x+y) + r(S) = " + std::to_string(rxy + rs)});
                }
            }
        }
        for (std::size_t ci = 0; ci < p.classes.size(); ++ci) {
            if (used.count(ci)) continue;
            const auto& cls = p.classes[ci];
            for (std::size_t i = 0; i < cls.size(); ++i) {
                for (std::size_t j = i + 1; j < cls.size(); ++j) {
                    std::size_t rx = r.at(with(s, cls[i])), ry = r.at(with(s, cls[j]));
                    if (std::max(rx, ry) <= rs) {
                        report.violations.push_back(
                            {"skew_class_increase", s,
                             "neither " + cls[i] + " nor " + cls[j] + " raises r" + name(s)});
                    }
                }
            }
        }
    }
    return report;
}

namespace {

ClosedWalk walk_from_crossings(const std::vector<std::pair<HalfEdgeId, HalfEdgeId>>& trav) {
    std::vector<WalkStep> steps;
    for (std::size_t i = 0; i < trav.size(); ++i) {
        steps.push_back(WalkStep{trav[i].second, trav[(i + 1) % trav.size()].first});
    }
    return ClosedWalk(std::move(steps));
}

}  // namespace

EulerSystem euler_system(const HalfEdgeGraph& f, unsigned seed) {
    if (!f.is_four_regular()) throw ContractError("Euler systems are built for 4-regular graphs");
    std::map<HalfEdgeId, std::size_t> priority;
    {
        std::vector<HalfEdgeId> order;
        for (const auto& [h, _] : f.epsilon()) order.push_back(h);
        if (seed != 0) {
            std::mt19937 rng(seed);
            std::shuffle(order.begin(), order.end(), rng);
        }
        for (std::size_t i = 0; i < order.size(); ++i) priority[order[i]] = i;
    }
    std::set<HalfEdgeId> unused;
    for (const auto& [h, _] : f.epsilon()) unused.insert(h);

    auto pick = [&](const VertexId& v) -> std::optional<HalfEdgeId> {
        std::optional<HalfEdgeId> best;
        for (const auto& h : f.half_edges_at(v)) {
            if (unused.count(h) && (!best || priority.at(h) < priority.at(*best))) best = h;
        }
        return best;
    };
    // Greedy closed trail from v; consumes both half-edges of each edge.
    auto trace = [&](const VertexId& v0) {
        std::vector<std::pair<HalfEdgeId, HalfEdgeId>> trail;
        VertexId at = v0;
        while (auto h = pick(at)) {
            const HalfEdgeId& other = f.partner(*h);
            unused.erase(*h);
            unused.erase(other);
            trail.emplace_back(*h, other);
            at = f.vertex_of(other);
        }
        if (at != v0) throw ContractError("open trail in an even graph");
        return trail;
    };

    EulerSystem system;
    while (!unused.empty()) {
        HalfEdgeId h0 = *unused.begin();
        for (const auto& h : unused) {
            if (priority.at(h) < priority.at(h0)) h0 = h;
        }
        auto trail = trace(f.vertex_of(h0));
        // Splice in detours at visited vertices until the component is exhausted.
        bool spliced = true;
        while (spliced) {
            spliced = false;
            for (std::size_t i = 0; i < trail.size(); ++i) {
                const VertexId& v = f.vertex_of(trail[i].second);
                if (pick(v)) {
                    auto detour = trace(v);
                    trail.insert(trail.begin() + static_cast<std::ptrdiff_t>(i + 1),
                                 detour.begin(), detour.end());
                    spliced = true;
                    break;
                }
            }
        }
        system.circuits.push_back(walk_from_crossings(trail));
    }
    return system;
}

std::array<Transition, 3> phi_chi_psi(const HalfEdgeGraph& f, const ClosedWalk& c, const VertexId& v) {
    auto visits_of = [&](const ClosedWalk& w) {
        std::vector<WalkStep> at_v;
        for (const auto& s : w.steps()) {
            if (f.vertex_of(s.in) == v) at_v.push_back(s);
        }
        if (at_v.size() != 2) {
            throw ContractError("circuit visits " + v + " " + std::to_string(at_v.size()) + " times, need 2");
        }
        return at_v;
    };
    auto build = [&](const std::vector<WalkStep>& at_v) {
        const auto& [in1, out1] = at_v[0];
        const auto& [in2, out2] = at_v[1];
        return std::array<Transition, 3>{
            Transition(v, SingleTransition(in1, out1), SingleTransition(in2, out2)),  // phi
            Transition(v, SingleTransition(in1, out2), SingleTransition(in2, out1)),  // chi
            Transition(v, SingleTransition(in1, in2), SingleTransition(out1, out2)),  // psi
        };
    };
    auto result = build(visits_of(c));
    if (result != build(visits_of(c.reversed()))) {
        throw ContractError("transition triple depends on circuit orientation");
    }
    return result;
}

namespace {

HalfEdgeGraph delete_edges(const HalfEdgeGraph& g, const std::set<EdgeId>& removed) {
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

}  // namespace

Multimatroid q_f(const HalfEdgeGraph& f) {
    if (!f.is_four_regular()) throw ContractError("Q(F) is defined for 4-regular graphs");
    TransitionSystem ts = all_transitions(f);
    SkewPartition p;
    for (const auto& [v, trs] : ts.by_vertex()) {
        std::vector<std::string> cls;
        for (const auto& t : trs) cls.push_back(t.label());
        std::sort(cls.begin(), cls.end());
        p.classes.push_back(std::move(cls));
    }
    HalfEdgeGraph graph = f;
    auto rank = [graph, ts](const std::vector<std::string>& s) -> std::size_t {
        // Extend to the lexicographically least transversal through s and
        // compute the cographic rank of s's edges in the touch-graph.
        Transversal t;
        for (const auto& l : s) {
            const Transition& tr = ts.by_label(l);
            t.emplace(tr.vertex, tr);
        }
        for (const auto& [v, trs] : ts.by_vertex()) {
            if (t.count(v)) continue;
            const Transition* least = &trs[0];
            for (const auto& tr : trs) {
                if (tr.label() < least->label()) least = &tr;
            }
            t.emplace(v, *least);
        }
        CircuitPartition part = partition_from_transversal(graph, t);
        TouchGraph tch = touch_graph(graph, part);
        std::set<EdgeId> chosen(s.begin(), s.end());
        std::size_t c_full = connected_components(tch.graph).count();
        std::size_t c_minus = connected_components(delete_edges(tch.graph, chosen)).count();
        return s.size() + c_full - c_minus;
    };
    return Multimatroid(std::move(p), std::move(rank));
}

namespace {

std::set<std::size_t> transversal_classes(const Multimatroid& z, const std::vector<std::string>& t) {
    std::set<std::size_t> classes;
    for (const auto& l : t) {
        try {
            classes.insert(z.partition().class_of(l));
        } catch (const InputError& e) {
            throw ContractError(e.what());
        }
    }
    return classes;
}

}  // namespace

TransverseMatroid transverse_matroid(const Multimatroid& z, const std::vector<std::string>& t) {
    std::set<std::size_t> classes = transversal_classes(z, t);
    if (classes.size() != t.size() || classes.size() != z.partition().size()) {
        throw ContractError("not a transversal: need exactly one element per skew class");
    }
    TransverseMatroid m;
    m.ground.assign(t.begin(), t.end());
    std::sort(m.ground.begin(), m.ground.end());
    std::set<std::string> allowed(t.begin(), t.end());
    m.rank = [z, allowed](std::vector<std::string> s) {
        for (const auto& l : s) {
            if (!allowed.count(l)) throw ContractError(l + " is outside the transversal");
        }
        return z.rank(std::move(s));
    };
    return m;
}

Multimatroid minor_remove_transversal(const Multimatroid& z, const std::vector<std::string>& t) {
    std::set<std::size_t> classes = transversal_classes(z, t);
    if (classes.size() != t.size() || classes.size() != z.partition().size()) {
        throw ContractError("not a transversal: need exactly one element per skew class");
    }
    std::set<std::string> removed(t.begin(), t.end());
    SkewPartition p;
    for (const auto& cls : z.partition().classes) {
        std::vector<std::string> kept;
        for (const auto& l : cls) {
            if (!removed.count(l)) kept.push_back(l);
        }
        if (kept.empty()) throw ContractError("removing the transversal empties a skew class");
        p.classes.push_back(std::move(kept));
    }
    return Multimatroid(std::move(p), [z](const std::vector<std::string>& s) { return z.rank(s); });
}

AdjacencyGraph interlacement_graph(const HalfEdgeGraph& f, const EulerSystem& c) {
    if (!f.is_four_regular()) throw ContractError("interlacement needs a 4-regular graph");
    AdjacencyGraph g;
    g.vertices = f.vertices();
    for (const auto& circuit : c.circuits) {
        std::vector<VertexId> word;
        for (const auto& s : circuit.steps()) word.push_back(f.vertex_of(s.in));
        std::map<VertexId, std::vector<std::size_t>> pos;
        for (std::size_t i = 0; i < word.size(); ++i) pos[word[i]].push_back(i);
        for (const auto& [u, pu] : pos) {
            if (pu.size() != 2) throw ContractError("Euler circuit visits " + u + " other than twice");
            for (const auto& [v, pv] : pos) {
                if (!(u < v)) continue;
                bool inside1 = pu[0] < pv[0] && pv[0] < pu[1];
                bool inside2 = pu[0] < pv[1] && pv[1] < pu[1];
                if (inside1 != inside2) g.edges.insert({u, v});
            }
        }
    }
    return g;
}

MultimatroidComparison z3_equals_qf(const AdjacencyGraph& g, const HalfEdgeGraph& f, const EulerSystem& c) {
    if (g.vertices != f.vertices()) {
        throw ContractError("interlacement graph and 4-regular graph disagree on vertices");
    }
    Multimatroid zg = z3(g);
    Multimatroid qf = q_f(f);
    MultimatroidComparison result;
    for (const auto& v : f.vertices()) {
        auto triple = phi_chi_psi(f, c.circuit_at(f, v), v);
        result.bijection[triple[0].label()] = v + "|I";
        result.bijection[triple[1].label()] = v + "|A";
        result.bijection[triple[2].label()] = v + "|I+A";
    }
    result.equal = true;
    for_each_subtransversal(qf.partition(), [&](const std::vector<std::string>& s) {
        if (!result.equal) return;
        std::vector<std::string> mapped;
        for (const auto& l : s) mapped.push_back(result.bijection.at(l));
        if (qf.rank(s) != zg.rank(mapped)) {
            result.equal = false;
            result.counterexample = s;
        }
    });
    return result;
}

namespace {

// Chords of a diagram on 2n positions, as (low, high) position pairs.
using Matching = std::vector<std::pair<int, int>>;

void enumerate_matchings(int two_n, std::vector<int>& partner, Matching& chords,
                         const std::function<void(const Matching&)>& fn) {
    int p = 0;
    while (p < two_n && partner[p] >= 0) ++p;
    if (p == two_n) {
        fn(chords);
        return;
    }
    for (int q = p + 1; q < two_n; ++q) {
        if (partner[q] >= 0) continue;
        partner[p] = q;
        partner[q] = p;
        chords.emplace_back(p, q);
        enumerate_matchings(two_n, partner, chords, fn);
        chords.pop_back();
        partner[p] = -1;
        partner[q] = -1;
    }
}

// First-occurrence relabeling of the diagram's word, minimized over rotation
// and reflection.
std::string canonical_word(const Matching& chords, int two_n) {
    std::vector<int> chord_at(static_cast<std::size_t>(two_n));
    for (std::size_t i = 0; i < chords.size(); ++i) {
        chord_at[static_cast<std::size_t>(chords[i].first)] = static_cast<int>(i);
        chord_at[static_cast<std::size_t>(chords[i].second)] = static_cast<int>(i);
    }
    std::string best;
    for (int dir : {1, -1}) {
        for (int start = 0; start < two_n; ++start) {
            std::string w;
            std::map<int, char> relabel;
            for (int k = 0; k < two_n; ++k) {
                int pos = ((start + dir * k) % two_n + two_n) % two_n;
                auto [it, fresh] = relabel.emplace(chord_at[static_cast<std::size_t>(pos)],
                                                   static_cast<char>('a' + relabel.size()));
                w += it->second;
            }
            if (best.empty() || w < best) best = w;
        }
    }
    return best;
}

bool chords_cross(const std::pair<int, int>& a, const std::pair<int, int>& b) {
    bool inside1 = a.first < b.first && b.first < a.second;
    bool inside2 = a.first < b.second && b.second < a.second;
    return inside1 != inside2;
}

// Backtracking isomorphism between adjacency bitmasks with matching degrees.
bool find_isomorphism(const std::vector<unsigned>& g_adj, const std::vector<unsigned>& h_adj,
                      std::vector<int>& mapping) {
    const std::size_t n = g_adj.size();
    std::vector<int> image(n, -1);
    std::vector<bool> taken(n, false);
    std::function<bool(std::size_t)> go = [&](std::size_t i) -> bool {
        if (i == n) return true;
        for (std::size_t j = 0; j < n; ++j) {
            if (taken[j]) continue;
            if (std::popcount(g_adj[i]) != std::popcount(h_adj[j])) continue;
            bool ok = true;
            for (std::size_t k = 0; k < i; ++k) {
                bool e1 = (g_adj[i] >> k) & 1u;
                bool e2 = (h_adj[j] >> static_cast<unsigned>(image[k])) & 1u;
                if (e1 != e2) {
                    ok = false;
                    break;
                }
            }
            if (!ok) continue;
            image[i] = static_cast<int>(j);
            taken[j] = true;
            if (go(i + 1)) return true;
            taken[j] = false;
            image[i] = -1;
        }
        return false;
    };
    if (!go(0)) return false;
    mapping = image;
    return true;
}

}  // namespace

CircleCheck is_circle_graph_bruteforce(const AdjacencyGraph& g) {
    if (g.vertices.size() > 7) throw SizeError("circle recognition capped at 7 vertices");
    if (!g.loops.empty()) throw InputError("circle recognition expects a loopless simple graph");
    CircleCheck result;
    const std::vector<VertexId> verts(g.vertices.begin(), g.vertices.end());
    const int n = static_cast<int>(verts.size());
    if (n == 0) {
        result.is_circle = true;
        return result;
    }
    std::vector<unsigned> g_adj(static_cast<std::size_t>(n), 0);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            if (i != j && g.adjacent(verts[static_cast<std::size_t>(i)], verts[static_cast<std::size_t>(j)])) {
                g_adj[static_cast<std::size_t>(i)] |= 1u << j;
            }
        }
    }
    std::multiset<int> g_degrees;
    for (const auto& row : g_adj) g_degrees.insert(std::popcount(row));

    const int two_n = 2 * n;
    std::vector<int> partner(static_cast<std::size_t>(two_n), -1);
    Matching chords;
    std::set<std::string> seen;
    enumerate_matchings(two_n, partner, chords, [&](const Matching& m) {
        if (result.is_circle) return;
        if (!seen.insert(canonical_word(m, two_n)).second) return;
        std::vector<unsigned> h_adj(static_cast<std::size_t>(n), 0);
        for (int i = 0; i < n; ++i) {
            for (int j = i + 1; j < n; ++j) {
                if (chords_cross(m[static_cast<std::size_t>(i)], m[static_cast<std::size_t>(j)])) {
                    h_adj[static_cast<std::size_t>(i)] |= 1u << j;
                    h_adj[static_cast<std::size_t>(j)] |= 1u << i;
                }
            }
        }
        std::multiset<int> h_degrees;
        for (const auto& row : h_adj) h_degrees.insert(std::popcount(row));
        if (h_degrees != g_degrees) return;
        std::vector<int> mapping;
        if (!find_isomorphism(g_adj, h_adj, mapping)) return;
        result.is_circle = true;
        result.word.assign(static_cast<std::size_t>(two_n), VertexId());
        for (int i = 0; i < n; ++i) {
            const auto& chord = m[static_cast<std::size_t>(mapping[static_cast<std::size_t>(i)])];
            result.word[static_cast<std::size_t>(chord.first)] = verts[static_cast<std::size_t>(i)];
            result.word[static_cast<std::size_t>(chord.second)] = verts[static_cast<std::size_t>(i)];
        }
    });
    return result;
}

}  // namespace ttu
