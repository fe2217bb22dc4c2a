#pragma once

#include <nlohmann/json_fwd.hpp>
#include <optional>
#include <string>
#include <vector>

#include "swgraph/concurrence.hpp"
#include "swgraph/rs.hpp"

namespace swgraph {

/// Numeric-mode edges below this concurrence are treated as absent.
inline constexpr double kEdgeThreshold = 1e-9;

enum class EdgeClass { C1, C2, Uniform };

std::string edge_class_name(EdgeClass c);
EdgeClass edge_class_from_name(const std::string& name);

struct GraphEdge {
    int j = 0;
    int k = 0;  // j < k
    double weight = 0;
    EdgeClass cls = EdgeClass::Uniform;
    std::optional<Rational> exact;  // closed-form weight when known
};

/// Vertices 1..n; an edge wherever the pairwise concurrence is nonzero.
struct EntangledGraph {
    int n = 0;
    std::vector<GraphEdge> edges;  // sorted by (j, k)

    std::vector<int> isolated() const;
    std::size_t count_class(EdgeClass c) const;
};

enum class GraphMode { closed_form, numeric };

/// Closed-form mode reads weights and classes off the label; numeric mode
/// runs the full concurrence pipeline per pair, drops weights below
/// kEdgeThreshold, and tags classes by clustering the distinct weights
/// (a single cluster is tagged Uniform -- with one weight the edge roles
/// are indistinguishable without the label).
EntangledGraph build_graph(int n, const StandardYoungTableau& y, GraphMode mode);

struct GraphEntry {
    Word word;
    StandardYoungTableau label;
    EntangledGraph graph;
};

/// The classification pipeline: every one-deviation word through the RS
/// map, then the graph of the resulting label.
std::vector<GraphEntry> enumerate_graphs(int n, GraphMode mode = GraphMode::closed_form);

/// Same edge set with weights within tol (classes are not compared).
bool graph_equal(const EntangledGraph& a, const EntangledGraph& b, double tol);

/// Relabel vertices: perm[v-1] is the new name of vertex v (a bijection on
/// 1..n). Edges are renormalized to j < k and re-sorted.
EntangledGraph permute_vertices(const EntangledGraph& g, const std::vector<int>& perm);

/// DOT rendering: solid edges for C1/Uniform, dashed for C2; edge labels
/// use the exact rational weight when available.
std::string to_dot(const EntangledGraph& g, const std::string& name);

void to_json(nlohmann::json& j, const EntangledGraph& g);
void from_json(const nlohmann::json& j, EntangledGraph& g);

}  // namespace swgraph
