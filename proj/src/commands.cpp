#include "swgraph/commands.hpp"

#include <algorithm>
#include <cmath>
#include <nlohmann/json.hpp>

#include "swgraph/density.hpp"
#include "swgraph/format.hpp"
#include "swgraph/verify.hpp"

namespace swgraph {

namespace {

std::vector<StandardYoungTableau> select_labels(int n, const LabelSelector& sel) {
    if (n < 2) throw std::invalid_argument("requires --n >= 2");
    const int picked = (sel.all ? 1 : 0) + (sel.row ? 1 : 0) + (sel.second_row != 0 ? 1 : 0);
    if (picked != 1)
        throw std::invalid_argument("select exactly one of --all, --row, --second-row S");
    const auto labels = one_magnon_tableaux(n);
    if (sel.all) return labels;
    if (sel.row) return {labels[0]};
    if (sel.second_row < 2 || sel.second_row > n)
        throw std::invalid_argument("--second-row must be in 2..n");
    return {labels[sel.second_row - 1]};
}

std::string ket_run(int lo, int hi) {
    std::string s = "(";
    for (int j = lo; j <= hi; ++j) {
        if (j > lo) s += "+";
        s += "|" + std::to_string(j) + "⟩";
    }
    return s + ")";
}

std::string state_line(int n, const StandardYoungTableau& y) {
    const int s = label_second_row(n, y);
    std::string line = "|" + y.inline_str() + "⟩ = ";
    if (s == 0) {
        line += amplitude(n, y, 1).str() + " " + ket_run(1, n);
    } else {
        line += amplitude(n, y, s).str() + " |" + std::to_string(s) + "⟩ - " +
                (-amplitude(n, y, 1)).str() + " " + ket_run(1, s - 1);
    }
    return line;
}

std::string structure_str(int n, int s) {
    const int m = s == 0 ? n : s;
    std::string txt = "K" + std::to_string(m) + " on 1.." + std::to_string(m);
    if (m < n) {
        txt += ", isolated " + std::to_string(m + 1);
        if (m + 1 < n) txt += ".." + std::to_string(n);
    }
    return txt;
}

std::string graph_text(int n, const StandardYoungTableau& y, const EntangledGraph& g) {
    std::string out = "entangled graph for |" + y.inline_str() + "⟩, n = " + std::to_string(n) + ":\n";
    for (const auto& e : g.edges) {
        out += "  " + std::to_string(e.j) + " -- " + std::to_string(e.k) + "  " +
               edge_class_name(e.cls) + "  ";
        out += e.exact ? e.exact->str() + " (" + fmt_double(e.weight) + ")" : fmt_double(e.weight);
        out += "\n";
    }
    const auto iso = g.isolated();
    if (!iso.empty()) {
        out += "  isolated:";
        for (int v : iso) out += " " + std::to_string(v);
        out += "\n";
    }
    return out;
}

std::string pad(std::string s, std::size_t width) {
    // Column width in characters; the radical sign is 3 UTF-8 bytes.
    std::size_t chars = 0;
    for (char c : s)
        if ((c & 0xc0) != 0x80) ++chars;
    while (chars++ < width) s += ' ';
    return s;
}

CommandResult usage_error(const std::string& message) {
    return {2, "error: " + message + "\n"};
}

}  // namespace

CommandResult cmd_state(int n, const LabelSelector& sel, OutputFormat fmt) {
    try {
        if (fmt == OutputFormat::dot) return usage_error("state has no dot format");
        const auto labels = select_labels(n, sel);
        if (fmt == OutputFormat::text) {
            std::string out;
            for (const auto& y : labels) out += state_line(n, y) + "\n";
            return {0, out};
        }
        nlohmann::json j;
        if (labels.size() == 1) {
            j = build_state(n, labels[0]);
        } else {
            j = nlohmann::json::array();
            for (const auto& y : labels) j.push_back(build_state(n, y));
        }
        return {0, j.dump(2) + "\n"};
    } catch (const std::invalid_argument& e) {
        return usage_error(e.what());
    }
}

CommandResult cmd_rs(const std::string& word, OutputFormat fmt) {
    Word w;
    try {
        w = Word::parse_binary(word);
    } catch (const std::invalid_argument& e) {
        return usage_error(e.what());
    }
    if (fmt == OutputFormat::dot) return usage_error("rs has no dot format");
    const auto pair = rs_insert_word(w, true);
    if (fmt == OutputFormat::json) {
        nlohmann::json j = pair;
        j["word"] = word;
        return {0, j.dump(2) + "\n"};
    }
    std::string out;
    for (std::size_t i = 0; i < pair.trace.size(); ++i) {
        const auto& st = pair.trace[i];
        out += "step " + std::to_string(i + 1) + ": insert " + std::to_string(st.letter) +
               " → P = " + st.p.inline_str() + ", Q = " + st.q.inline_str() + "\n";
    }
    out += "final: P = " + pair.p.inline_str() + ", Q = " + pair.q.inline_str() + "\n";
    return {0, out};
}

CommandResult cmd_graph(int n, const LabelSelector& sel, GraphMode mode, OutputFormat fmt) {
    try {
        const auto labels = select_labels(n, sel);
        std::string out;
        nlohmann::json jarr = nlohmann::json::array();
        for (const auto& y : labels) {
            const auto g = build_graph(n, y, mode);
            switch (fmt) {
                case OutputFormat::text: out += graph_text(n, y, g); break;
                case OutputFormat::dot: out += to_dot(g, y.inline_str()); break;
                case OutputFormat::json: jarr.push_back(g); break;
            }
        }
        if (fmt == OutputFormat::json)
            out = (labels.size() == 1 ? jarr[0] : jarr).dump(2) + "\n";
        return {0, out};
    } catch (const std::invalid_argument& e) {
        return usage_error(e.what());
    }
}

CommandResult cmd_table(int n, OutputFormat fmt) {
    try {
        if (n < 2) return usage_error("requires --n >= 2");
        if (fmt == OutputFormat::dot) return usage_error("table has no dot format");

        struct Row {
            std::string tableau, structure, conc;
            double delta = 0;
            nlohmann::json jrow;
        };
        std::vector<Row> rows;
        for (const auto& y : one_magnon_tableaux(n)) {
            Row row;
            const int s = label_second_row(n, y);
            const auto st = build_state(n, y);
            row.tableau = y.inline_str();
            row.structure = structure_str(n, s);
            nlohmann::json jconc = nlohmann::json::object();
            if (s == 0) {
                const Rational c(2, n);
                row.conc = "C = " + c.str() + " (" + fmt_double(c.to_double()) + ")";
                jconc["C"] = {{"exact", c.str()}, {"float", c.to_double()}};
            } else {
                const Rational c2(2, s);
                if (s > 2) {
                    const Rational c1(2, static_cast<long long>(s) * (s - 1));
                    row.conc = "C1 = " + c1.str() + " (" + fmt_double(c1.to_double()) + "), ";
                    jconc["C1"] = {{"exact", c1.str()}, {"float", c1.to_double()}};
                }
                row.conc += "C2 = " + c2.str() + " (" + fmt_double(c2.to_double()) + ")";
                jconc["C2"] = {{"exact", c2.str()}, {"float", c2.to_double()}};
            }
            for (int j = 1; j <= n; ++j)
                for (int k = j + 1; k <= n; ++k) {
                    const double closed = concurrence_closed_form(n, y, j, k).to_double();
                    const double numeric =
                        concurrence_numeric(reduced_density_fast(st, j, k)).value;
                    row.delta = std::max(row.delta, std::abs(closed - numeric));
                }
            row.jrow = {{"tableau", y},
                        {"structure", row.structure},
                        {"concurrence", jconc},
                        {"max_delta", row.delta}};
            rows.push_back(std::move(row));
        }

        if (fmt == OutputFormat::json) {
            nlohmann::json j = nlohmann::json::array();
            for (auto& r : rows) j.push_back(r.jrow);
            return {0, j.dump(2) + "\n"};
        }
        std::size_t w0 = 15, w1 = 17, w2 = 13;
        for (const auto& r : rows) {
            w0 = std::max(w0, r.tableau.size() + 2);
            w1 = std::max(w1, r.structure.size() + 2);
            w2 = std::max(w2, r.conc.size() + 2);
        }
        std::string out = pad("Young tableau", w0) + pad("entangled graph", w1) +
                          pad("concurrence", w2) + "max |closed - numeric|\n";
        for (const auto& r : rows)
            out += pad(r.tableau, w0) + pad(r.structure, w1) + pad(r.conc, w2) +
                   fmt_double(r.delta) + "\n";
        return {0, out};
    } catch (const std::invalid_argument& e) {
        return usage_error(e.what());
    }
}

CommandResult cmd_verify(int n_max, int cap) {
    std::vector<Check> checks;
    try {
        checks = run_verification(n_max, cap);
    } catch (const ResourceLimitError& e) {
        return {1, std::string("error: ") + e.what() + "\n"};
    } catch (const std::invalid_argument& e) {
        return usage_error(e.what());
    }
    std::string out;
    std::size_t passed = 0;
    for (const auto& c : checks) {
        out += std::string(c.pass ? "[PASS] " : "[FAIL] ") + c.name + ": " + c.detail + "\n";
        passed += c.pass ? 1 : 0;
    }
    out += std::to_string(passed) + "/" + std::to_string(checks.size()) + " checks passed\n";
    return {passed == checks.size() ? 0 : 1, out};
}

}  // namespace swgraph
