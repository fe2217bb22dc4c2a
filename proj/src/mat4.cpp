#include "swgraph/mat4.hpp"

#include <algorithm>

namespace swgraph {

Mat4 Mat4::identity() {
    Mat4 m;
    for (int i = 0; i < 4; ++i) m(i, i) = 1.0;
    return m;
}

Mat4 Mat4::diag(double d0, double d1, double d2, double d3) {
    Mat4 m;
    m(0, 0) = d0;
    m(1, 1) = d1;
    m(2, 2) = d2;
    m(3, 3) = d3;
    return m;
}

Mat4 Mat4::conjugate() const {
    Mat4 m;
    for (std::size_t i = 0; i < 16; ++i) m.a[i] = std::conj(a[i]);
    return m;
}

Mat4 Mat4::transpose() const {
    Mat4 m;
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) m(i, j) = (*this)(j, i);
    return m;
}

cdouble Mat4::trace() const {
    return (*this)(0, 0) + (*this)(1, 1) + (*this)(2, 2) + (*this)(3, 3);
}

Mat4 Mat4::operator+(const Mat4& o) const {
    Mat4 m;
    for (std::size_t i = 0; i < 16; ++i) m.a[i] = a[i] + o.a[i];
    return m;
}

Mat4 Mat4::operator*(const Mat4& o) const {
    Mat4 m;
    for (int i = 0; i < 4; ++i)
        for (int k = 0; k < 4; ++k) {
            const cdouble v = (*this)(i, k);
            if (v == 0.0) continue;
            for (int j = 0; j < 4; ++j) m(i, j) += v * o(k, j);
        }
    return m;
}

double max_abs_diff(const Mat4& x, const Mat4& y) {
    double m = 0;
    for (std::size_t i = 0; i < 16; ++i) m = std::max(m, std::abs(x.a[i] - y.a[i]));
    return m;
}

double max_abs(const Mat4& x) {
    double m = 0;
    for (std::size_t i = 0; i < 16; ++i) m = std::max(m, std::abs(x.a[i]));
    return m;
}

}  // namespace swgraph
