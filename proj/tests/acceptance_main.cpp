// Acceptance suite: one line per criterion, nonzero exit if any fails.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "swgraph/commands.hpp"
#include "swgraph/concurrence.hpp"
#include "swgraph/density.hpp"
#include "swgraph/graph.hpp"
#include "swgraph/rs.hpp"
#include "swgraph/verify.hpp"

using namespace swgraph;

namespace {

struct Criterion {
    std::string name;
    std::function<std::string()> run;  // empty string = pass, otherwise failure text
    double budget_seconds = 0;         // 0 = no runtime requirement
};

std::string fail(const std::string& msg) { return msg; }

// ---- criterion 1: the five n=5 concurrence sets via the numeric pipeline

std::string run_table1() {
    struct Expected {
        int s;  // 0 = row label
        double c1, c2;  // 0 = class absent
    };
    const std::vector<Expected> table = {
        {2, 0.0, 1.0},
        {3, 1.0 / 3.0, 2.0 / 3.0},
        {4, 1.0 / 6.0, 1.0 / 2.0},
        {5, 1.0 / 10.0, 4.0 / 10.0},
        {0, 0.0, 4.0 / 10.0},  // uniform: every pair at 4/10
    };
    const auto labels = one_magnon_tableaux(5);
    for (const auto& expect : table) {
        const auto& y = expect.s == 0 ? labels[0] : labels[expect.s - 1];
        const auto st = build_state(5, y);
        for (int j = 1; j <= 5; ++j)
            for (int k = j + 1; k <= 5; ++k) {
                const double c = concurrence_numeric(reduced_density_fast(st, j, k)).value;
                double want = 0.0;
                if (expect.s == 0) want = expect.c2;
                else if (k < expect.s) want = expect.c1;
                else if (k == expect.s) want = expect.c2;
                if (std::abs(c - want) > 1e-9)
                    return fail("s=" + std::to_string(expect.s) + " pair(" + std::to_string(j) +
                                "," + std::to_string(k) + "): got " + std::to_string(c) +
                                ", want " + std::to_string(want));
            }
    }
    return {};
}

// ---- criterion 2: the five amplitude sets, exact radical form

std::string run_state_vectors() {
    using R = Radical;
    const std::vector<std::vector<Radical>> expected = {
        {R(-1, 1, 2), R(1, 1, 2), R(), R(), R()},
        {R(-1, 1, 6), R(-1, 1, 6), R(1, 2, 3), R(), R()},
        {R(-1, 1, 12), R(-1, 1, 12), R(-1, 1, 12), R(1, 3, 4), R()},
        {R(-1, 1, 20), R(-1, 1, 20), R(-1, 1, 20), R(-1, 1, 20), R(1, 4, 5)},
        {R(1, 1, 5), R(1, 1, 5), R(1, 1, 5), R(1, 1, 5), R(1, 1, 5)},
    };
    const std::vector<std::vector<std::string>> rendered = {
        {"-√2/2", "√2/2", "0", "0", "0"},
        {"-√6/6", "-√6/6", "√6/3", "0", "0"},
        {"-√3/6", "-√3/6", "-√3/6", "√3/2", "0"},
        {"-√5/10", "-√5/10", "-√5/10", "-√5/10", "2√5/5"},
        {"√5/5", "√5/5", "√5/5", "√5/5", "√5/5"},
    };
    const auto labels = one_magnon_tableaux(5);
    for (int s = 2; s <= 5; ++s) {
        const auto st = build_state(5, labels[s - 1]);
        if (st.amplitudes != expected[s - 2])
            return fail("amplitude set differs for second-row entry " + std::to_string(s));
        for (int j = 0; j < 5; ++j)
            if (st.amplitudes[j].str() != rendered[s - 2][j])
                return fail("radical rendering differs at s=" + std::to_string(s));
    }
    const auto row = build_state(5, labels[0]);
    if (row.amplitudes != expected[4]) return fail("row-label amplitude set differs");
    for (int j = 0; j < 5; ++j)
        if (row.amplitudes[j].str() != rendered[4][j]) return fail("row-label rendering differs");
    return {};
}

// ---- criterion 3: the worked insertion trace

std::string run_rs_example() {
    const auto r = cmd_rs("00100", OutputFormat::text);
    const std::string expected =
        "step 1: insert 0 → P = (0), Q = (1)\n"
        "step 2: insert 0 → P = (00), Q = (12)\n"
        "step 3: insert 1 → P = (001), Q = (123)\n"
        "step 4: insert 0 → P = (000/1), Q = (123/4)\n"
        "step 5: insert 0 → P = (0000/1), Q = (1235/4)\n"
        "final: P = (0000/1), Q = (1235/4)\n";
    if (r.status != 0) return fail("nonzero status");
    if (r.output != expected) return fail("trace differs:\n" + r.output);
    return {};
}

// ---- criterion 4: triple agreement, every state and pair, n = 2..12

std::string run_triple_agreement() {
    double worst_conc = 0, worst_density = 0;
    for (int n = 2; n <= 12; ++n)
        for (const auto& y : one_magnon_tableaux(n)) {
            const auto st = build_state(n, y);
            const auto full = embed_full(st);
            for (int j = 1; j <= n; ++j)
                for (int k = j + 1; k <= n; ++k) {
                    const auto fast = reduced_density_fast(st, j, k);
                    const auto oracle_rho = reduced_density_oracle(full, j, k);
                    worst_density =
                        std::max(worst_density, max_abs_diff(fast.matrix, oracle_rho.matrix));
                    const double closed = concurrence_closed_form(n, y, j, k).to_double();
                    const double numeric = concurrence_numeric(fast).value;
                    const double oracle = concurrence_oracle(fast).value;
                    worst_conc = std::max({worst_conc, std::abs(closed - numeric),
                                           std::abs(closed - oracle), std::abs(numeric - oracle)});
                }
        }
    if (worst_conc > 1e-9) return fail("concurrence routes differ by " + std::to_string(worst_conc));
    if (worst_density > 1e-12)
        return fail("density paths differ by " + std::to_string(worst_density));
    return {};
}

// ---- criterion 5: the RS bijection

std::string run_bijection() {
    for (int n = 2; n <= 12; ++n) {
        const auto classified = classify_all_configurations(n);
        std::set<StandardYoungTableau> image;
        for (const auto& [word, q] : classified) image.insert(q);
        const auto labels = one_magnon_tableaux(n);
        if (classified.size() != static_cast<std::size_t>(n) ||
            image != std::set<StandardYoungTableau>(labels.begin(), labels.end()))
            return fail("bijection fails at n=" + std::to_string(n));
    }
    return {};
}

// ---- criterion 6: basis and dimension identities

std::string run_basis_identities() {
    for (int n = 2; n <= 14; ++n) {
        const auto g = gram_matrix(n);
        for (int a = 0; a < n; ++a)
            for (int b = 0; b < n; ++b)
                if (std::abs(g[a][b] - (a == b ? 1.0 : 0.0)) > 1e-12)
                    return fail("gram deviates at n=" + std::to_string(n));
        long long sum = 0;
        for (int r = 0; r <= n; ++r) sum += sector_dimension(n, r);
        if (sum != (1LL << n)) return fail("sector sum fails at n=" + std::to_string(n));
        if (count_syt_two_row(Partition({n - 1, 1})) != n - 1)
            return fail("|SYT(n-1,1)| fails at n=" + std::to_string(n));
    }
    return {};
}

// ---- criterion 7: graph structure for every label, n = 2..12

std::string run_graph_structure() {
    for (int n = 2; n <= 12; ++n) {
        const auto labels = one_magnon_tableaux(n);
        for (int s = 2; s <= n; ++s) {
            const auto g = build_graph(n, labels[s - 1], GraphMode::closed_form);
            if (static_cast<long long>(g.edges.size()) != static_cast<long long>(s) * (s - 1) / 2)
                return fail("edge count fails at n=" + std::to_string(n) +
                            " s=" + std::to_string(s));
            if (g.count_class(EdgeClass::C2) != static_cast<std::size_t>(s - 1))
                return fail("special edge count fails at n=" + std::to_string(n) +
                            " s=" + std::to_string(s));
            std::vector<int> expect_iso;
            for (int v = s + 1; v <= n; ++v) expect_iso.push_back(v);
            if (g.isolated() != expect_iso)
                return fail("isolated set fails at n=" + std::to_string(n) +
                            " s=" + std::to_string(s));
            for (int u = 1; u < s - 1; ++u)
                for (int v = u + 1; v <= s - 1; ++v) {
                    std::vector<int> perm(n);
                    for (int x = 1; x <= n; ++x) perm[x - 1] = x;
                    std::swap(perm[u - 1], perm[v - 1]);
                    if (!graph_equal(g, permute_vertices(g, perm), 1e-9))
                        return fail("automorphism fails at n=" + std::to_string(n) +
                                    " s=" + std::to_string(s));
                }
        }
    }
    return {};
}

// ---- criterion 8: randomized robustness

Mat4 random_psd_unit_trace(std::mt19937& rng) {
    std::normal_distribution<double> g(0.0, 1.0);
    Mat4 a;
    for (auto& e : a.a) e = cdouble(g(rng), g(rng));
    Mat4 rho = a * a.adjoint();
    const double tr = rho.trace().real();
    for (auto& e : rho.a) e /= tr;
    return rho;
}

std::array<cdouble, 4> random_unitary_2x2(std::mt19937& rng) {
    std::normal_distribution<double> g(0.0, 1.0);
    cdouble a(g(rng), g(rng)), b(g(rng), g(rng));
    const double n1 = std::sqrt(std::norm(a) + std::norm(b));
    a /= n1;
    b /= n1;
    const double phi = std::uniform_real_distribution<double>(0, 6.283185307179586)(rng);
    const cdouble ph(std::cos(phi), std::sin(phi));
    return {a, -std::conj(b) * ph, b, std::conj(a) * ph};
}

std::string run_randomized() {
    std::mt19937 rng(987123);
    for (int trial = 0; trial < 100; ++trial) {
        const TwoQubitDensity rho(1, 2, random_psd_unit_trace(rng));
        const auto numeric = concurrence_numeric(rho);
        const auto oracle = concurrence_oracle(rho);
        if (std::abs(numeric.value - oracle.value) > 1e-9)
            return fail("eigenvalue paths differ at trial " + std::to_string(trial));
        for (int i = 0; i < 4; ++i)
            if (std::abs(numeric.sqrt_eigs[i] - oracle.sqrt_eigs[i]) > 1e-9)
                return fail("sqrt eigenvalues differ at trial " + std::to_string(trial));

        const std::array<cdouble, 4> u1 = random_unitary_2x2(rng);
        const std::array<cdouble, 4> u2 = random_unitary_2x2(rng);
        Mat4 u;
        for (int i = 0; i < 2; ++i)
            for (int j = 0; j < 2; ++j)
                for (int k = 0; k < 2; ++k)
                    for (int l = 0; l < 2; ++l)
                        u(i * 2 + k, j * 2 + l) = u1[i * 2 + j] * u2[k * 2 + l];
        const TwoQubitDensity rotated(1, 2, u * rho.matrix * u.adjoint());
        if (std::abs(concurrence_numeric(rotated).value - numeric.value) > 1e-9)
            return fail("local-unitary invariance fails at trial " + std::to_string(trial));
    }
    return {};
}

}  // namespace

int main() {
    const std::vector<Criterion> criteria = {
        {"criterion 1: five n=5 concurrence sets via the numeric pipeline (1e-9)", run_table1,
         1.0},
        {"criterion 2: five n=5 amplitude sets, exact radical form", run_state_vectors, 0},
        {"criterion 3: insertion trace for 00100 (five snapshots)", run_rs_example, 0},
        {"criterion 4: closed = numeric = oracle concurrence (1e-9) and fast = oracle density "
         "(1e-12), n=2..12",
         run_triple_agreement, 120.0},
        {"criterion 5: RS map is a bijection onto the label set, n=2..12", run_bijection, 0},
        {"criterion 6: gram = identity (1e-12, n=2..14) and dimension identities",
         run_basis_identities, 0},
        {"criterion 7: graph edge counts, isolated sets and automorphisms, n=2..12",
         run_graph_structure, 0},
        {"criterion 8: randomized eigenvalue-path agreement and local-unitary invariance (1e-9)",
         run_randomized, 0},
    };

    int failures = 0;
    for (const auto& c : criteria) {
        const auto start = std::chrono::steady_clock::now();
        std::string error;
        try {
            error = c.run();
        } catch (const std::exception& e) {
            error = std::string("exception: ") + e.what();
        }
        const double seconds =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        if (error.empty() && c.budget_seconds > 0 && seconds > c.budget_seconds)
            error = "runtime " + std::to_string(seconds) + "s exceeds " +
                    std::to_string(c.budget_seconds) + "s";
        if (error.empty()) {
            std::printf("PASS  %s  [%.3fs]\n", c.name.c_str(), seconds);
        } else {
            std::printf("FAIL  %s  [%.3fs]  %s\n", c.name.c_str(), seconds, error.c_str());
            ++failures;
        }
    }
    std::printf("%zu of %zu criteria passed\n", criteria.size() - failures, criteria.size());
    return failures == 0 ? 0 : 1;
}
