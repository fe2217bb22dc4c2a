#include "swgraph/concurrence.hpp"

#include <algorithm>
#include <cmath>
#include <nlohmann/json.hpp>

#include "swgraph/polyroots.hpp"

namespace swgraph {

namespace {

ConcurrenceResult from_eigenvalues(std::array<double, 4> r) {
    std::sort(r.begin(), r.end(), std::greater<>());
    ConcurrenceResult out;
    for (int i = 0; i < 4; ++i) out.sqrt_eigs[i] = std::sqrt(std::max(r[i], 0.0));
    out.value = std::max(
        out.sqrt_eigs[0] - out.sqrt_eigs[1] - out.sqrt_eigs[2] - out.sqrt_eigs[3], 0.0);
    return out;
}

}  // namespace

Mat4 spin_flip_matrix(const Mat4& rho) {
    // F rho~ F with F = antidiag(-1, 1, 1, -1): entry (a,b) picks up the
    // complement indices and a sign per 00/11 slot.
    auto sign = [](int i) { return (i == 0 || i == 3) ? -1.0 : 1.0; };
    const Mat4 conj = rho.conjugate();
    Mat4 out;
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j)
            out(i, j) = sign(i) * sign(j) * conj(3 - i, 3 - j);
    return out;
}

Mat4 spin_flip(const TwoQubitDensity& rho) { return spin_flip_matrix(rho.matrix); }

ConcurrenceResult concurrence_numeric(const TwoQubitDensity& rho) {
    const Mat4 sqrt_rho = hermitian_sqrt_psd(rho.matrix, "concurrence_numeric(rho)");
    Mat4 m = sqrt_rho * spin_flip_matrix(rho.matrix) * sqrt_rho;
    // Symmetrize away the rounding skew before the Hermitian solve.
    m = m + m.adjoint();
    for (auto& e : m.a) e *= 0.5;
    const auto eig = hermitian_eigensystem(m);
    std::array<double, 4> r{};
    for (int i = 0; i < 4; ++i)
        r[i] = clamp_psd_eigenvalue(eig.values[i], "concurrence_numeric(M)");
    return from_eigenvalues(r);
}

ConcurrenceResult concurrence_oracle(const TwoQubitDensity& rho) {
    const Mat4 r1 = rho.matrix * spin_flip_matrix(rho.matrix);
    const Mat4 r2 = r1 * r1;
    const double p1 = r1.trace().real();
    const double p2 = r2.trace().real();
    const double p3 = (r2 * r1).trace().real();
    const double p4 = (r2 * r2).trace().real();
    // Newton's identities: elementary symmetric functions of the spectrum.
    const double e1 = p1;
    const double e2 = (e1 * p1 - p2) / 2.0;
    const double e3 = (e2 * p1 - e1 * p2 + p3) / 3.0;
    const double e4 = (e3 * p1 - e2 * p2 + e1 * p3 - p4) / 4.0;
    // x^4 - e1 x^3 + e2 x^2 - e3 x + e4; spectrum is real and in [0,1].
    const auto roots =
        real_roots_monic({e4, -e3, e2, -e1}, kEigenNoiseFloor, 1e-8);
    std::array<double, 4> r{};
    for (int i = 0; i < 4; ++i)
        r[i] = std::abs(roots[i]) < kEigenNoiseFloor ? 0.0 : std::max(roots[i], 0.0);
    return from_eigenvalues(r);
}

Rational concurrence_closed_form(int n, const StandardYoungTableau& y, int j, int k) {
    const int s = label_second_row(n, y);
    if (j < 1 || k < 1 || j >= k || k > n)
        throw std::invalid_argument("concurrence_closed_form: requires 1 <= j < k <= n");
    if (s == 0) return Rational(2, n);
    if (k < s) return Rational(2, static_cast<long long>(s) * (s - 1));
    if (k == s) return Rational(2, s);
    return Rational(0, 1);
}

void to_json(nlohmann::json& j, const ConcurrenceResult& c) {
    j = nlohmann::json{{"value", c.value}, {"sqrt_eigs", c.sqrt_eigs}};
}

void from_json(const nlohmann::json& j, ConcurrenceResult& c) {
    c.value = j.at("value").get<double>();
    c.sqrt_eigs = j.at("sqrt_eigs").get<std::array<double, 4>>();
}

nlohmann::json concurrence_json(const TwoQubitDensity& rho, const ConcurrenceResult& c) {
    return nlohmann::json{{"pair", {rho.j, rho.k}}, {"value", c.value}, {"sqrt_eigs", c.sqrt_eigs}};
}

}  // namespace swgraph
