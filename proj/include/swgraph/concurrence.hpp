#pragma once

#include <array>
#include <nlohmann/json_fwd.hpp>

#include "swgraph/density.hpp"
#include "swgraph/radical.hpp"

namespace swgraph {

/// Concurrence value together with the decreasing square roots of the
/// eigenvalues of rho * rho_tilde it was assembled from.
struct ConcurrenceResult {
    double value = 0;
    std::array<double, 4> sqrt_eigs{};  // decreasing
};

/// (sigma_y (x) sigma_y) conj(rho) (sigma_y (x) sigma_y); in the basis
/// (00,01,10,11) the flip operator is the anti-diagonal (-1, 1, 1, -1).
/// The usual construction conjugates; for the real symmetric matrices of
/// this pipeline that coincides with the transpose form.
Mat4 spin_flip_matrix(const Mat4& rho);
Mat4 spin_flip(const TwoQubitDensity& rho);

/// Hermitian route: the eigenvalues of rho * rho_tilde equal those of
/// M = sqrt(rho) * rho_tilde * sqrt(rho), which is Hermitian PSD, so a
/// Jacobi eigensolve suffices. Eigenvalues of rho or M below -1e-10 raise
/// NumericalError; magnitudes below the noise floor snap to zero.
ConcurrenceResult concurrence_numeric(const TwoQubitDensity& rho);

/// Independent route: eigenvalues of rho * rho_tilde from its quartic
/// characteristic polynomial (Faddeev-LeVerrier coefficients, then the
/// all-real-roots solver with zero-root deflation).
ConcurrenceResult concurrence_oracle(const TwoQubitDensity& rho);

/// Exact pairwise concurrence of the state labelled by y: 2/n on the
/// single-row label; for second-row entry s, 2/(s(s-1)) when k < s, 2/s
/// when k = s, and 0 when k > s.
Rational concurrence_closed_form(int n, const StandardYoungTableau& y, int j, int k);

void to_json(nlohmann::json& j, const ConcurrenceResult& c);
void from_json(const nlohmann::json& j, ConcurrenceResult& c);

/// The documented export form {pair, value, sqrt_eigs}.
nlohmann::json concurrence_json(const TwoQubitDensity& rho, const ConcurrenceResult& c);

}  // namespace swgraph
