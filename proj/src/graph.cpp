#include "swgraph/graph.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <nlohmann/json.hpp>
#include <set>

#include "swgraph/format.hpp"

namespace swgraph {

namespace {

// Two-means over the distinct weights; returns the split threshold, or
// nothing when every weight agrees within tol.
std::optional<double> cluster_split(std::vector<double> weights, double tol) {
    std::sort(weights.begin(), weights.end());
    weights.erase(std::unique(weights.begin(), weights.end(),
                              [tol](double a, double b) { return std::abs(a - b) <= tol; }),
                  weights.end());
    if (weights.size() < 2) return std::nullopt;
    double best_sse = std::numeric_limits<double>::max();
    std::size_t best_cut = 1;
    for (std::size_t cut = 1; cut < weights.size(); ++cut) {
        auto sse = [&](std::size_t lo, std::size_t hi) {
            double mean = 0;
            for (std::size_t i = lo; i < hi; ++i) mean += weights[i];
            mean /= static_cast<double>(hi - lo);
            double s = 0;
            for (std::size_t i = lo; i < hi; ++i) s += (weights[i] - mean) * (weights[i] - mean);
            return s;
        };
        const double total = sse(0, cut) + sse(cut, weights.size());
        if (total < best_sse) {
            best_sse = total;
            best_cut = cut;
        }
    }
    return 0.5 * (weights[best_cut - 1] + weights[best_cut]);
}

}  // namespace

std::string edge_class_name(EdgeClass c) {
    switch (c) {
        case EdgeClass::C1: return "C1";
        case EdgeClass::C2: return "C2";
        case EdgeClass::Uniform: return "UNIFORM";
    }
    return "UNIFORM";
}

EdgeClass edge_class_from_name(const std::string& name) {
    if (name == "C1") return EdgeClass::C1;
    if (name == "C2") return EdgeClass::C2;
    if (name == "UNIFORM") return EdgeClass::Uniform;
    throw std::invalid_argument("unknown edge class: " + name);
}

std::vector<int> EntangledGraph::isolated() const {
    std::vector<bool> touched(static_cast<std::size_t>(n) + 1, false);
    for (const auto& e : edges) touched[e.j] = touched[e.k] = true;
    std::vector<int> out;
    for (int v = 1; v <= n; ++v)
        if (!touched[v]) out.push_back(v);
    return out;
}

std::size_t EntangledGraph::count_class(EdgeClass c) const {
    return static_cast<std::size_t>(
        std::count_if(edges.begin(), edges.end(), [c](const GraphEdge& e) { return e.cls == c; }));
}

EntangledGraph build_graph(int n, const StandardYoungTableau& y, GraphMode mode) {
    const int s = label_second_row(n, y);  // validates the label
    EntangledGraph g;
    g.n = n;

    if (mode == GraphMode::closed_form) {
        for (int j = 1; j <= n; ++j)
            for (int k = j + 1; k <= n; ++k) {
                const Rational c = concurrence_closed_form(n, y, j, k);
                if (c.num == 0) continue;
                EdgeClass cls = EdgeClass::Uniform;
                if (s != 0) cls = (k == s) ? EdgeClass::C2 : EdgeClass::C1;
                g.edges.push_back({j, k, c.to_double(), cls, c});
            }
        return g;
    }

    const OneMagnonState state = build_state(n, y);
    std::vector<GraphEdge> edges;
    for (int j = 1; j <= n; ++j)
        for (int k = j + 1; k <= n; ++k) {
            const auto rho = reduced_density_fast(state, j, k);
            const double w = concurrence_numeric(rho).value;
            if (w < kEdgeThreshold) continue;
            edges.push_back({j, k, w, EdgeClass::Uniform, std::nullopt});
        }
    std::vector<double> weights;
    weights.reserve(edges.size());
    for (const auto& e : edges) weights.push_back(e.weight);
    if (const auto split = cluster_split(std::move(weights), kEdgeThreshold)) {
        for (auto& e : edges) e.cls = e.weight < *split ? EdgeClass::C1 : EdgeClass::C2;
    }
    g.edges = std::move(edges);
    return g;
}

std::vector<GraphEntry> enumerate_graphs(int n, GraphMode mode) {
    if (n < 2) throw std::invalid_argument("enumerate_graphs: requires n >= 2");
    std::vector<GraphEntry> out;
    out.reserve(n);
    for (int j = 1; j <= n; ++j) {
        GraphEntry entry;
        entry.word = one_magnon_word(n, j);
        entry.label = rs_one_magnon(n, j).q;
        entry.graph = build_graph(n, entry.label, mode);
        out.push_back(std::move(entry));
    }
    return out;
}

bool graph_equal(const EntangledGraph& a, const EntangledGraph& b, double tol) {
    if (a.n != b.n || a.edges.size() != b.edges.size()) return false;
    for (std::size_t i = 0; i < a.edges.size(); ++i) {
        const auto& x = a.edges[i];
        const auto& y = b.edges[i];
        if (x.j != y.j || x.k != y.k || std::abs(x.weight - y.weight) > tol) return false;
    }
    return true;
}

EntangledGraph permute_vertices(const EntangledGraph& g, const std::vector<int>& perm) {
    if (static_cast<int>(perm.size()) != g.n)
        throw std::invalid_argument("permute_vertices: permutation size must equal n");
    EntangledGraph out;
    out.n = g.n;
    out.edges = g.edges;
    for (auto& e : out.edges) {
        e.j = perm[e.j - 1];
        e.k = perm[e.k - 1];
        if (e.j > e.k) std::swap(e.j, e.k);
    }
    std::sort(out.edges.begin(), out.edges.end(), [](const GraphEdge& a, const GraphEdge& b) {
        return std::pair{a.j, a.k} < std::pair{b.j, b.k};
    });
    return out;
}

std::string to_dot(const EntangledGraph& g, const std::string& name) {
    std::string s = "graph \"" + name + "\" {\n  node [shape=circle];\n";
    for (int v = 1; v <= g.n; ++v) s += "  " + std::to_string(v) + ";\n";
    for (const auto& e : g.edges) {
        s += "  " + std::to_string(e.j) + " -- " + std::to_string(e.k);
        s += e.cls == EdgeClass::C2 ? " [style=dashed" : " [style=solid";
        s += ", label=\"" + (e.exact ? e.exact->str() : fmt_double(e.weight)) + "\"];\n";
    }
    s += "}\n";
    return s;
}

void to_json(nlohmann::json& j, const EntangledGraph& g) {
    nlohmann::json edges = nlohmann::json::array();
    for (const auto& e : g.edges)
        edges.push_back({{"j", e.j},
                         {"k", e.k},
                         {"weight", e.weight},
                         {"class", edge_class_name(e.cls)}});
    j = nlohmann::json{{"n", g.n}, {"edges", edges}};
}

void from_json(const nlohmann::json& j, EntangledGraph& g) {
    g.n = j.at("n").get<int>();
    g.edges.clear();
    for (const auto& e : j.at("edges")) {
        GraphEdge edge;
        edge.j = e.at("j").get<int>();
        edge.k = e.at("k").get<int>();
        edge.weight = e.at("weight").get<double>();
        edge.cls = edge_class_from_name(e.at("class").get<std::string>());
        g.edges.push_back(edge);
    }
}

}  // namespace swgraph
