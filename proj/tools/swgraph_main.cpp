// swgraph: one-magnon Schur-Weyl states, pairwise concurrence and
// entangled graphs for spin-1/2 rings.

#include <CLI11.hpp>
#include <cstdlib>
#include <iostream>
#include <map>
#include <string>

#include "swgraph/commands.hpp"
#include "swgraph/magnon_states.hpp"

namespace {

int default_cap() {
    if (const char* env = std::getenv("SWGRAPH_CAP")) {
        try {
            return std::stoi(env);
        } catch (const std::exception&) {
            std::cerr << "warning: ignoring non-numeric SWGRAPH_CAP\n";
        }
    }
    return swgraph::kDefaultBruteForceCap;
}

int emit(const swgraph::CommandResult& result) {
    (result.status == 0 ? std::cout : std::cerr) << result.output;
    return result.status;
}

}  // namespace

int main(int argc, char** argv) {
    using swgraph::GraphMode;
    using swgraph::LabelSelector;
    using swgraph::OutputFormat;

    CLI::App app{"entangled graphs of one-magnon Schur-Weyl states"};
    app.require_subcommand(1);

    const std::map<std::string, OutputFormat> format_names{
        {"text", OutputFormat::text}, {"json", OutputFormat::json}, {"dot", OutputFormat::dot}};
    const std::map<std::string, GraphMode> mode_names{{"closed", GraphMode::closed_form},
                                                      {"numeric", GraphMode::numeric}};

    int n = 0;
    LabelSelector sel;
    OutputFormat format = OutputFormat::text;
    GraphMode mode = GraphMode::closed_form;
    std::string word;
    int n_max = 10;
    int cap = default_cap();

    auto add_selector = [&](CLI::App* cmd) {
        cmd->add_option("--n", n, "ring size")->required();
        cmd->add_flag("--all", sel.all, "all n labels");
        cmd->add_flag("--row", sel.row, "the single-row label");
        cmd->add_option("--second-row", sel.second_row, "the label with this second-row entry");
    };
    auto add_format = [&](CLI::App* cmd, const std::string& choices) {
        cmd->add_option("--format", format, "output format")
            ->transform(CLI::CheckedTransformer(format_names, CLI::ignore_case))
            ->description("output format (" + choices + ")");
    };

    auto* state = app.add_subcommand("state", "print states as radical ket combinations");
    add_selector(state);
    add_format(state, "text, json");

    auto* rs = app.add_subcommand("rs", "trace row insertion on a binary word");
    rs->add_option("word", word, "word over {0,1}; may be empty")
        ->option_text("WORD");
    add_format(rs, "text, json");

    auto* graph = app.add_subcommand("graph", "emit entangled graphs");
    add_selector(graph);
    add_format(graph, "text, json, dot");
    graph->add_option("--mode", mode, "weight source")
        ->transform(CLI::CheckedTransformer(mode_names, CLI::ignore_case));

    auto* table = app.add_subcommand("table", "per-label concurrence report");
    table->add_option("--n", n, "ring size")->required();
    add_format(table, "text, json");

    auto* verify = app.add_subcommand("verify", "run every cross-check up to --n-max");
    verify->add_option("--n-max", n_max, "largest ring size to check");
    verify->add_option("--cap", cap, "brute-force cap (default SWGRAPH_CAP or 14)");

    CLI11_PARSE(app, argc, argv);

    try {
        if (app.got_subcommand(state)) return emit(swgraph::cmd_state(n, sel, format));
        if (app.got_subcommand(rs)) return emit(swgraph::cmd_rs(word, format));
        if (app.got_subcommand(graph)) return emit(swgraph::cmd_graph(n, sel, mode, format));
        if (app.got_subcommand(table)) return emit(swgraph::cmd_table(n, format));
        if (app.got_subcommand(verify)) return emit(swgraph::cmd_verify(n_max, cap));
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
