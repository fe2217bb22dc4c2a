#include "swgraph/magnon_states.hpp"

#include <cmath>
#include <nlohmann/json.hpp>
#include <numeric>

namespace swgraph {

int label_second_row(int n, const StandardYoungTableau& y) {
    if (n < 2) throw std::invalid_argument("label_second_row: requires n >= 2");
    const auto& rows = y.rows;
    if (rows.size() == 1 && static_cast<int>(rows[0].size()) == n) {
        for (int i = 0; i < n; ++i)
            if (rows[0][i] != i + 1)
                throw std::invalid_argument("label_second_row: not a one-magnon label");
        return 0;
    }
    if (rows.size() == 2 && static_cast<int>(rows[0].size()) == n - 1 && rows[1].size() == 1) {
        const int s = rows[1][0];
        int expect = 1;
        for (int e : rows[0]) {
            if (expect == s) ++expect;
            if (e != expect++)
                throw std::invalid_argument("label_second_row: not a one-magnon label");
        }
        return s;
    }
    throw std::invalid_argument("label_second_row: not a one-magnon label");
}

Radical amplitude(int n, const StandardYoungTableau& y, int j) {
    const int s = label_second_row(n, y);
    if (j < 1 || j > n) throw std::invalid_argument("amplitude: node index out of range");
    if (s == 0) return Radical(1, 1, n);
    if (j < s) return Radical(-1, 1, static_cast<long long>(s - 1) * s);
    if (j == s) return Radical(1, s - 1, s);
    return Radical();
}

OneMagnonState build_state(int n, const StandardYoungTableau& y) {
    OneMagnonState st;
    st.n = n;
    st.label = y;
    st.amplitudes.reserve(n);
    Rational norm2(0, 1);
    for (int j = 1; j <= n; ++j) {
        st.amplitudes.push_back(amplitude(n, y, j));
        norm2 = norm2 + st.amplitudes.back().squared();
    }
    if (!(norm2 == Rational(1, 1)))
        throw std::logic_error("build_state: squared amplitudes do not sum to 1");
    return st;
}

std::vector<double> OneMagnonState::amp_values() const {
    std::vector<double> v;
    v.reserve(amplitudes.size());
    for (const auto& a : amplitudes) v.push_back(a.value());
    return v;
}

double FullStateVector::norm() const {
    double s = 0;
    for (const auto& e : entries) s += std::norm(e);
    return std::sqrt(s);
}

FullStateVector embed_full(int n, std::span<const double> amplitudes, int cap) {
    if (static_cast<int>(amplitudes.size()) != n)
        throw std::invalid_argument("embed_full: amplitude count must equal n");
    if (n > cap)
        throw ResourceLimitError("embed_full: n exceeds the brute-force cap (" +
                                 std::to_string(cap) + ")");
    FullStateVector full;
    full.n = n;
    full.entries.assign(std::size_t{1} << n, 0.0);
    // Node 1 is the most significant bit of the basis index.
    for (int j = 1; j <= n; ++j) full.entries[std::size_t{1} << (n - j)] = amplitudes[j - 1];
    return full;
}

FullStateVector embed_full(const OneMagnonState& state, int cap) {
    const auto v = state.amp_values();
    return embed_full(state.n, v, cap);
}

std::vector<std::vector<double>> gram_matrix(int n) {
    if (n < 2) throw std::invalid_argument("gram_matrix: requires n >= 2");
    const auto labels = one_magnon_tableaux(n);
    std::vector<std::vector<double>> amps;
    amps.reserve(labels.size());
    for (const auto& y : labels) amps.push_back(build_state(n, y).amp_values());
    std::vector<std::vector<double>> g(n, std::vector<double>(n, 0.0));
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            g[a][b] = std::inner_product(amps[a].begin(), amps[a].end(), amps[b].begin(), 0.0);
    return g;
}

void to_json(nlohmann::json& j, const Radical& r) {
    j = nlohmann::json{{"sign", r.sign()}, {"p", r.p()}, {"q", r.q()}, {"float", r.value()}};
}

void from_json(const nlohmann::json& j, Radical& r) {
    r = Radical(j.at("sign").get<int>(), j.at("p").get<long long>(), j.at("q").get<long long>());
}

void to_json(nlohmann::json& j, const OneMagnonState& s) {
    j = nlohmann::json{{"n", s.n}, {"label", s.label}, {"amplitudes", s.amplitudes}};
}

void from_json(const nlohmann::json& j, OneMagnonState& s) {
    s.n = j.at("n").get<int>();
    s.label = j.at("label").get<StandardYoungTableau>();
    s.amplitudes = j.at("amplitudes").get<std::vector<Radical>>();
}

}  // namespace swgraph
