#include "swgraph/density.hpp"

#include <cmath>
#include <nlohmann/json.hpp>

namespace swgraph {

namespace {

constexpr double kEntryTolerance = 1e-12;

void validate_density(const Mat4& m) {
    if (max_abs_diff(m, m.adjoint()) > kEntryTolerance)
        throw std::invalid_argument("TwoQubitDensity: matrix is not Hermitian within 1e-12");
    if (std::abs(m.trace() - cdouble(1.0)) > kEntryTolerance)
        throw std::invalid_argument("TwoQubitDensity: trace is not 1 within 1e-12");
    const auto vals = hermitian_eigenvalues_sorted(m);
    if (vals[3] < -kPsdTolerance)
        throw NumericalError("TwoQubitDensity: eigenvalue below -1e-10; matrix is not PSD");
}

void check_pair(int n, int j, int k) {
    if (j < 1 || k < 1 || j >= k || k > n)
        throw std::invalid_argument("reduced density: requires 1 <= j < k <= n");
}

}  // namespace

TwoQubitDensity::TwoQubitDensity(int j_, int k_, const Mat4& m) : j(j_), k(k_), matrix(m) {
    if (j >= k || j < 1) throw std::invalid_argument("TwoQubitDensity: requires 1 <= j < k");
    validate_density(matrix);
}

TwoQubitDensity reduced_density_fast(int n, std::span<const double> amplitudes, int j, int k) {
    if (static_cast<int>(amplitudes.size()) != n)
        throw std::invalid_argument("reduced_density_fast: amplitude count must equal n");
    check_pair(n, j, k);
    double rest = 0;
    for (int m = 1; m <= n; ++m)
        if (m != j && m != k) rest += amplitudes[m - 1] * amplitudes[m - 1];
    const double aj = amplitudes[j - 1];
    const double ak = amplitudes[k - 1];
    Mat4 rho;
    rho(0, 0) = rest;
    rho(1, 1) = ak * ak;
    rho(2, 2) = aj * aj;
    rho(1, 2) = aj * ak;
    rho(2, 1) = aj * ak;
    return TwoQubitDensity(j, k, rho);
}

TwoQubitDensity reduced_density_fast(const OneMagnonState& state, int j, int k) {
    const auto v = state.amp_values();
    return reduced_density_fast(state.n, v, j, k);
}

TwoQubitDensity reduced_density_oracle(const FullStateVector& full, int j, int k, int cap) {
    const int n = full.n;
    if (n > cap)
        throw ResourceLimitError("reduced_density_oracle: n exceeds the brute-force cap (" +
                                 std::to_string(cap) + ")");
    check_pair(n, j, k);
    if (full.entries.size() != (std::size_t{1} << n))
        throw std::invalid_argument("reduced_density_oracle: entry count must be 2^n");

    // Node m occupies bit (n - m); index = sum over nodes of bit * 2^(n-m).
    const std::size_t bit_j = std::size_t{1} << (n - j);
    const std::size_t bit_k = std::size_t{1} << (n - k);

    // Enumerate the 2^(n-2) assignments of the remaining qubits by
    // spreading a compact counter over the non-(j,k) bit positions.
    std::vector<std::size_t> rest_bits;
    for (int m = 1; m <= n; ++m)
        if (m != j && m != k) rest_bits.push_back(std::size_t{1} << (n - m));

    Mat4 rho;
    const std::size_t rest_count = std::size_t{1} << rest_bits.size();
    for (std::size_t r = 0; r < rest_count; ++r) {
        std::size_t base = 0;
        for (std::size_t b = 0; b < rest_bits.size(); ++b)
            if ((r >> b) & 1U) base |= rest_bits[b];
        for (int row = 0; row < 4; ++row) {
            const std::size_t idx_row =
                base | ((row & 2) ? bit_j : 0) | ((row & 1) ? bit_k : 0);
            for (int col = 0; col < 4; ++col) {
                const std::size_t idx_col =
                    base | ((col & 2) ? bit_j : 0) | ((col & 1) ? bit_k : 0);
                rho(row, col) += full.entries[idx_row] * std::conj(full.entries[idx_col]);
            }
        }
    }
    return TwoQubitDensity(j, k, rho);
}

void to_json(nlohmann::json& j, const TwoQubitDensity& rho) {
    nlohmann::json m = nlohmann::json::array();
    for (int r = 0; r < 4; ++r) {
        nlohmann::json row = nlohmann::json::array();
        for (int c = 0; c < 4; ++c)
            row.push_back({rho.matrix(r, c).real(), rho.matrix(r, c).imag()});
        m.push_back(row);
    }
    j = nlohmann::json{{"pair", {rho.j, rho.k}}, {"matrix", m}};
}

TwoQubitDensity parse_density_json(const nlohmann::json& j) {
    Mat4 m;
    const auto& rows = j.at("matrix");
    for (int r = 0; r < 4; ++r)
        for (int c = 0; c < 4; ++c)
            m(r, c) = cdouble(rows.at(r).at(c).at(0).get<double>(),
                              rows.at(r).at(c).at(1).get<double>());
    return TwoQubitDensity(j.at("pair").at(0).get<int>(), j.at("pair").at(1).get<int>(), m);
}

}  // namespace swgraph
