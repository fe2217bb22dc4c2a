#pragma once

#include <string>

#include "swgraph/graph.hpp"

namespace swgraph {

/// Output plus process exit status: 0 ok, 1 failed checks or computation
/// errors, 2 usage errors.
struct CommandResult {
    int status = 0;
    std::string output;
};

enum class OutputFormat { text, json, dot };

/// Exactly one of all/row/second_row selects the label(s).
struct LabelSelector {
    bool all = false;
    bool row = false;
    int second_row = 0;  // 0 = unset, otherwise 2..n
};

/// Renders the selected states as signed radical combinations of node kets
/// (text) or as the documented state schema (json).
CommandResult cmd_state(int n, const LabelSelector& sel, OutputFormat fmt);

/// Runs row insertion on a binary word and prints every snapshot.
CommandResult cmd_rs(const std::string& word, OutputFormat fmt);

/// Entangled graph(s) of the selected labels.
CommandResult cmd_graph(int n, const LabelSelector& sel, GraphMode mode, OutputFormat fmt);

/// One row per label: tableau, graph structure, exact and float
/// concurrences, and the worst closed-vs-numeric deviation.
CommandResult cmd_table(int n, OutputFormat fmt);

/// Runs every library cross-check for ring sizes 2..n_max; one line per
/// check, nonzero status if any fails.
CommandResult cmd_verify(int n_max, int cap);

}  // namespace swgraph
