#include "swgraph/hermitian_eig.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace swgraph {

namespace {

double offdiag_sum(const Mat4& m) {
    double s = 0;
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j)
            if (i != j) s += std::abs(m(i, j));
    return s;
}

}  // namespace

HermitianEig hermitian_eigensystem(const Mat4& a) {
    Mat4 m = a;
    Mat4 v = Mat4::identity();
    const double scale = std::max(1.0, max_abs(a));

    // 12 off-diagonal entries of rounding debris each ~eps*scale; anything
    // below this is converged for our purposes (eigenvalue error ~1e-14).
    const double done = 1e-14 * scale;

    for (int sweep = 0; sweep < 60; ++sweep) {
        if (offdiag_sum(m) <= done) break;
        if (sweep == 59)
            throw NumericalError("hermitian_eigensystem: Jacobi sweeps did not converge");
        for (int p = 0; p < 3; ++p) {
            for (int q = p + 1; q < 4; ++q) {
                const cdouble apq = m(p, q);
                const double r = std::abs(apq);
                if (r <= 1e-18 * scale) continue;
                // Phase away apq, then the usual real rotation.
                const cdouble phase = apq / r;  // e^{i phi}
                const double app = m(p, p).real();
                const double aqq = m(q, q).real();
                // smaller root of t^2 - 2*tau*t - 1 = 0 for the U = [[c,-s],[s,c]] convention
                const double tau = (aqq - app) / (2.0 * r);
                const double t =
                    (tau >= 0 ? -1.0 : 1.0) / (std::abs(tau) + std::sqrt(1.0 + tau * tau));
                const double c = 1.0 / std::sqrt(1.0 + t * t);
                const double s = t * c;

                Mat4 u = Mat4::identity();
                u(p, p) = c;
                u(p, q) = -s;
                u(q, p) = s * std::conj(phase);
                u(q, q) = c * std::conj(phase);

                m = u.adjoint() * m * u;
                v = v * u;
                // the pivot is zero by construction; drop its rounding
                // residue and keep m Hermitian
                m(p, q) = 0.0;
                m(q, p) = 0.0;
                for (int i = 0; i < 4; ++i) {
                    m(i, i) = m(i, i).real();
                    for (int j = i + 1; j < 4; ++j) {
                        const cdouble avg = 0.5 * (m(i, j) + std::conj(m(j, i)));
                        m(i, j) = avg;
                        m(j, i) = std::conj(avg);
                    }
                }
            }
        }
    }

    HermitianEig out;
    out.vectors = v;
    for (int i = 0; i < 4; ++i) out.values[i] = m(i, i).real();
    return out;
}

std::array<double, 4> hermitian_eigenvalues_sorted(const Mat4& a) {
    auto vals = hermitian_eigensystem(a).values;
    std::sort(vals.begin(), vals.end(), std::greater<>());
    return vals;
}

double clamp_psd_eigenvalue(double value, const char* what) {
    if (value < -kPsdTolerance)
        throw NumericalError(std::string(what) + ": eigenvalue " + std::to_string(value) +
                             " below -1e-10; input is not PSD within tolerance");
    if (value < kEigenNoiseFloor) return 0.0;
    return value;
}

Mat4 hermitian_sqrt_psd(const Mat4& a, const char* what) {
    const auto eig = hermitian_eigensystem(a);
    Mat4 d;
    for (int i = 0; i < 4; ++i) d(i, i) = std::sqrt(clamp_psd_eigenvalue(eig.values[i], what));
    return eig.vectors * d * eig.vectors.adjoint();
}

}  // namespace swgraph
