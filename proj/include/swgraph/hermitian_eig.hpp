#pragma once

#include <array>
#include <stdexcept>

#include "swgraph/mat4.hpp"

namespace swgraph {

/// Numerical failure: an input that should be PSD is not within tolerance,
/// or an iteration failed to converge.
struct NumericalError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Eigenvalues below -kPsdTolerance mean the input is not PSD within
/// tolerance; fail loudly rather than flooring.
inline constexpr double kPsdTolerance = 1e-10;

/// Eigenvalues with |value| below this floor are rounding debris of an
/// exact zero; they are snapped to 0 before any square root so that the
/// closed-form, numeric and polynomial routes agree to 1e-9.
inline constexpr double kEigenNoiseFloor = 1e-13;

/// a = vectors * diag(values) * vectors^dagger, vectors unitary
/// (columns are eigenvectors). values are unsorted.
struct HermitianEig {
    std::array<double, 4> values{};
    Mat4 vectors;
};

/// Cyclic Jacobi for a 4x4 complex Hermitian matrix. Quadratically
/// convergent; plenty for this size.
HermitianEig hermitian_eigensystem(const Mat4& a);

/// Eigenvalues only, sorted decreasing.
std::array<double, 4> hermitian_eigenvalues_sorted(const Mat4& a);

/// Clamp one eigenvalue of a nominally PSD matrix: values in
/// (-kPsdTolerance, kEigenNoiseFloor) snap to 0, values below
/// -kPsdTolerance raise NumericalError.
double clamp_psd_eigenvalue(double value, const char* what);

/// Principal square root of a PSD Hermitian matrix, with the clamp rule
/// above applied to its eigenvalues.
Mat4 hermitian_sqrt_psd(const Mat4& a, const char* what);

}  // namespace swgraph
