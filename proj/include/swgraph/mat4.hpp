#pragma once

#include <array>
#include <complex>

namespace swgraph {

using cdouble = std::complex<double>;

/// Dense 4x4 complex matrix, row-major. Just enough linear algebra for the
/// two-qubit pipeline; nothing here is meant to scale.
struct Mat4 {
    std::array<cdouble, 16> a{};

    cdouble& operator()(int i, int j) { return a[static_cast<std::size_t>(i) * 4 + j]; }
    const cdouble& operator()(int i, int j) const {
        return a[static_cast<std::size_t>(i) * 4 + j];
    }

    static Mat4 zero() { return {}; }
    static Mat4 identity();
    static Mat4 diag(double d0, double d1, double d2, double d3);

    Mat4 conjugate() const;
    Mat4 transpose() const;
    Mat4 adjoint() const { return conjugate().transpose(); }
    cdouble trace() const;

    Mat4 operator+(const Mat4& o) const;
    Mat4 operator*(const Mat4& o) const;
    bool operator==(const Mat4& o) const = default;
};

/// max_ij |a_ij - b_ij|
double max_abs_diff(const Mat4& x, const Mat4& y);
/// max_ij |a_ij|
double max_abs(const Mat4& x);

}  // namespace swgraph
