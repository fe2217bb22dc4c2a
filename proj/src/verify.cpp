#include "swgraph/verify.hpp"

#include <algorithm>
#include <cmath>
#include <set>

#include "swgraph/concurrence.hpp"
#include "swgraph/density.hpp"
#include "swgraph/format.hpp"
#include "swgraph/graph.hpp"
#include "swgraph/rs.hpp"

namespace swgraph {

namespace {

struct Worst {
    double value = 0;
    std::string where;

    void update(double v, const std::string& w) {
        if (v > value) {
            value = v;
            where = w;
        }
    }
    std::string detail(double tol) const {
        return "worst " + fmt_double(value) + (where.empty() ? "" : " at " + where) +
               " (tol " + fmt_double(tol) + ")";
    }
};

std::string at(int n, int s, int j, int k) {
    return "n=" + std::to_string(n) + " s=" + std::to_string(s) + " pair(" + std::to_string(j) +
           "," + std::to_string(k) + ")";
}

Check check_label_counts(int n_max) {
    for (int n = 2; n <= n_max; ++n) {
        const auto labels = one_magnon_tableaux(n);
        const long long syt = count_syt_two_row(Partition({n - 1, 1}));
        if (static_cast<int>(labels.size()) != n || 1 + syt != n)
            return {"tableaux: N labels = 1 + |SYT(N-1,1)|", false, "fails at n=" + std::to_string(n)};
        for (const auto& y : labels) label_second_row(n, y);  // throws if malformed
    }
    return {"tableaux: N labels = 1 + |SYT(N-1,1)|", true, "n=2.." + std::to_string(n_max)};
}

Check check_hook_vs_enumeration(int n_max) {
    const int boxes_max = std::min(n_max, 12);
    for (int a = 1; a <= boxes_max; ++a)
        for (int b = 0; b <= std::min(a, boxes_max - a); ++b) {
            Partition shape(b == 0 ? std::vector<int>{a} : std::vector<int>{a, b});
            if (count_syt_two_row_hook(shape) != count_syt_two_row_enumerate(shape))
                return {"tableaux: hook length = enumeration", false,
                        "fails at shape (" + std::to_string(a) + "," + std::to_string(b) + ")"};
        }
    return {"tableaux: hook length = enumeration", true,
            "all two-row shapes up to " + std::to_string(boxes_max) + " boxes"};
}

Check check_kostka(int n_max) {
    const int boxes_max = std::min(n_max, 12);
    for (int a = 1; a <= boxes_max; ++a)
        for (int b = 0; b <= std::min(a, boxes_max - a); ++b)
            for (int ones = 0; ones <= a + b; ++ones) {
                Partition shape(b == 0 ? std::vector<int>{a} : std::vector<int>{a, b});
                const long long k = kostka_two_letter(shape, {a + b - ones, ones});
                if (k != 0 && k != 1)
                    return {"tableaux: two-letter Kostka numbers are 0 or 1", false,
                            "K=" + std::to_string(k) + " at shape (" + std::to_string(a) + "," +
                                std::to_string(b) + "), ones=" + std::to_string(ones)};
            }
    return {"tableaux: two-letter Kostka numbers are 0 or 1", true,
            "all two-row shapes up to " + std::to_string(boxes_max) + " boxes"};
}

Check check_sector_dimensions(int n_max) {
    for (int n = 2; n <= n_max; ++n) {
        long long sum = 0;
        for (int r = 0; r <= n; ++r) sum += sector_dimension(n, r);
        if (sum != (1LL << n))
            return {"tableaux: sector dimensions sum to 2^N", false, "fails at n=" + std::to_string(n)};
    }
    return {"tableaux: sector dimensions sum to 2^N", true, "n=2.." + std::to_string(n_max)};
}

Check check_gram(int n_max) {
    Worst worst;
    for (int n = 2; n <= n_max; ++n) {
        const auto g = gram_matrix(n);
        for (int a = 0; a < n; ++a)
            for (int b = 0; b < n; ++b)
                worst.update(std::abs(g[a][b] - (a == b ? 1.0 : 0.0)), "n=" + std::to_string(n));
    }
    return {"states: gram matrix = identity", worst.value <= 1e-12, worst.detail(1e-12)};
}

Check check_state_structure(int n_max) {
    for (int n = 2; n <= n_max; ++n) {
        for (const auto& y : one_magnon_tableaux(n)) {
            const auto st = build_state(n, y);  // checks the exact norm
            const int s = label_second_row(n, y);
            if (s == 0) continue;
            for (int j = 1; j <= n; ++j) {
                const auto& a = st.amplitudes[j - 1];
                const bool ok = (j < s && a.sign() < 0 && a == st.amplitudes[0]) ||
                                (j == s && a.sign() > 0) || (j > s && a.is_zero());
                if (!ok)
                    return {"states: sign/support split around the special node", false,
                            at(n, s, j, j)};
            }
        }
    }
    return {"states: sign/support split around the special node", true,
            "n=2.." + std::to_string(n_max)};
}

Check check_bijection(int n_max) {
    for (int n = 2; n <= n_max; ++n) {
        const auto classified = classify_all_configurations(n);
        std::set<StandardYoungTableau> image;
        for (const auto& [word, q] : classified) image.insert(q);
        const auto labels = one_magnon_tableaux(n);
        const std::set<StandardYoungTableau> expected(labels.begin(), labels.end());
        if (classified.size() != static_cast<std::size_t>(n) || image != expected)
            return {"rs: bijection onto the label set", false, "fails at n=" + std::to_string(n)};
    }
    return {"rs: bijection onto the label set", true, "n=2.." + std::to_string(n_max)};
}

Check check_rs_closed_form(int n_max) {
    for (int n = 2; n <= n_max; ++n)
        for (int j = 1; j <= n; ++j) {
            const auto engine = rs_insert_word(one_magnon_word(n, j));
            const auto closed = rs_one_magnon(n, j);
            if (!(engine.p == closed.p) || !(engine.q == closed.q))
                return {"rs: closed form = insertion engine", false,
                        "fails at n=" + std::to_string(n) + " j=" + std::to_string(j)};
        }
    return {"rs: closed form = insertion engine", true, "n=2.." + std::to_string(n_max)};
}

Check check_density_pair(int n_max, int cap) {
    Worst worst;
    for (int n = 2; n <= n_max; ++n)
        for (const auto& y : one_magnon_tableaux(n)) {
            const auto st = build_state(n, y);
            const auto full = embed_full(st, cap);
            const int s = label_second_row(n, y);
            for (int j = 1; j <= n; ++j)
                for (int k = j + 1; k <= n; ++k) {
                    const auto fast = reduced_density_fast(st, j, k);
                    const auto oracle = reduced_density_oracle(full, j, k, cap);
                    worst.update(max_abs_diff(fast.matrix, oracle.matrix), at(n, s, j, k));
                }
        }
    return {"density: fast path = partial-trace oracle", worst.value <= 1e-12,
            worst.detail(1e-12)};
}

Check check_concurrence_triple(int n_max) {
    Worst worst;
    for (int n = 2; n <= n_max; ++n)
        for (const auto& y : one_magnon_tableaux(n)) {
            const auto st = build_state(n, y);
            const int s = label_second_row(n, y);
            for (int j = 1; j <= n; ++j)
                for (int k = j + 1; k <= n; ++k) {
                    const auto rho = reduced_density_fast(st, j, k);
                    const double closed = concurrence_closed_form(n, y, j, k).to_double();
                    const double numeric = concurrence_numeric(rho).value;
                    const double oracle = concurrence_oracle(rho).value;
                    worst.update(std::abs(closed - numeric), at(n, s, j, k));
                    worst.update(std::abs(closed - oracle), at(n, s, j, k));
                    worst.update(std::abs(numeric - oracle), at(n, s, j, k));
                }
        }
    return {"concurrence: closed form = numeric = oracle", worst.value <= 1e-9,
            worst.detail(1e-9)};
}

Check check_product_rule(int n_max) {
    Worst worst;
    for (int n = 2; n <= n_max; ++n)
        for (const auto& y : one_magnon_tableaux(n)) {
            const auto st = build_state(n, y);
            const int s = label_second_row(n, y);
            for (int j = 1; j <= n; ++j)
                for (int k = j + 1; k <= n; ++k) {
                    const double numeric =
                        concurrence_numeric(reduced_density_fast(st, j, k)).value;
                    const double rule = 2.0 * std::abs(st.amp(j) * st.amp(k));
                    worst.update(std::abs(numeric - rule), at(n, s, j, k));
                }
        }
    return {"concurrence: one-magnon product rule 2|aj ak|", worst.value <= 1e-9,
            worst.detail(1e-9)};
}

Check check_graphs(int n_max) {
    for (int n = 2; n <= n_max; ++n) {
        const auto closed = enumerate_graphs(n, GraphMode::closed_form);
        const auto numeric = enumerate_graphs(n, GraphMode::numeric);
        for (int i = 0; i < n; ++i) {
            if (!graph_equal(closed[i].graph, numeric[i].graph, 1e-9))
                return {"graphs: closed form = numeric pipeline", false,
                        "fails at n=" + std::to_string(n) + " word " + closed[i].word.str()};
        }
    }
    return {"graphs: closed form = numeric pipeline", true, "n=2.." + std::to_string(n_max)};
}

Check check_graph_structure(int n_max) {
    const std::string name = "graphs: edge counts and isolated sets";
    for (int n = 2; n <= n_max; ++n)
        for (const auto& y : one_magnon_tableaux(n)) {
            const int s = label_second_row(n, y);
            const auto g = build_graph(n, y, GraphMode::closed_form);
            const int m = s == 0 ? n : s;  // complete component size
            const auto iso = g.isolated();
            std::vector<int> expect_iso;
            for (int v = m + 1; v <= n; ++v) expect_iso.push_back(v);
            if (static_cast<long long>(g.edges.size()) != static_cast<long long>(m) * (m - 1) / 2 ||
                iso != expect_iso)
                return {name, false, "fails at n=" + std::to_string(n) + " s=" + std::to_string(s)};
            if (s != 0 && g.count_class(EdgeClass::C2) != static_cast<std::size_t>(s - 1))
                return {name, false,
                        "C2 count fails at n=" + std::to_string(n) + " s=" + std::to_string(s)};
        }
    return {name, true, "n=2.." + std::to_string(n_max)};
}

Check check_graph_automorphism(int n_max) {
    const std::string name = "graphs: symmetric-part vertices interchangeable";
    for (int n = 2; n <= n_max; ++n)
        for (const auto& y : one_magnon_tableaux(n)) {
            const int s = label_second_row(n, y);
            const auto g = build_graph(n, y, GraphMode::closed_form);
            const int m = (s == 0 ? n : s - 1);  // vertices that may be permuted
            for (int u = 1; u <= m; ++u)
                for (int v = u + 1; v <= m; ++v) {
                    std::vector<int> perm(n);
                    for (int x = 1; x <= n; ++x) perm[x - 1] = x;
                    std::swap(perm[u - 1], perm[v - 1]);
                    if (!graph_equal(g, permute_vertices(g, perm), 1e-9))
                        return {name, false,
                                "swap(" + std::to_string(u) + "," + std::to_string(v) +
                                    ") fails at n=" + std::to_string(n) + " s=" + std::to_string(s)};
                }
        }
    return {name, true, "n=2.." + std::to_string(n_max)};
}

}  // namespace

std::vector<Check> run_verification(int n_max, int cap) {
    if (n_max < 2) throw std::invalid_argument("run_verification: requires n_max >= 2");
    if (n_max > cap)
        throw ResourceLimitError("run_verification: n_max " + std::to_string(n_max) +
                                 " exceeds the brute-force cap (" + std::to_string(cap) + ")");
    std::vector<Check> checks;
    checks.push_back(check_label_counts(n_max));
    checks.push_back(check_hook_vs_enumeration(n_max));
    checks.push_back(check_kostka(n_max));
    checks.push_back(check_sector_dimensions(n_max));
    checks.push_back(check_gram(n_max));
    checks.push_back(check_state_structure(n_max));
    checks.push_back(check_bijection(n_max));
    checks.push_back(check_rs_closed_form(n_max));
    checks.push_back(check_density_pair(n_max, cap));
    checks.push_back(check_concurrence_triple(n_max));
    checks.push_back(check_product_rule(n_max));
    checks.push_back(check_graphs(n_max));
    checks.push_back(check_graph_structure(n_max));
    checks.push_back(check_graph_automorphism(n_max));
    return checks;
}

}  // namespace swgraph
