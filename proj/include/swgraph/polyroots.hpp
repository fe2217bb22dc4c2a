#pragma once

#include <vector>

namespace swgraph {

/// Roots of a monic polynomial x^d + c[d-1] x^(d-1) + ... + c[0] that is
/// known to have only real roots (d <= 4 here). Constant terms below
/// zero_tol are deflated as exact zero roots; the remaining roots are
/// isolated between the critical points (found recursively) and polished
/// with bisection + Newton. Returns d roots sorted decreasing.
/// Throws NumericalError if any returned root has |p(root)| > residual_tol.
std::vector<double> real_roots_monic(std::vector<double> coeffs, double zero_tol,
                                     double residual_tol);

}  // namespace swgraph
