#include "swgraph/polyroots.hpp"

#include <algorithm>
#include <cmath>

#include "swgraph/hermitian_eig.hpp"  // NumericalError

namespace swgraph {

namespace {

double eval(const std::vector<double>& c, double x) {
    double v = 1.0;  // monic leading term accumulates through Horner
    for (auto it = c.rbegin(); it != c.rend(); ++it) v = v * x + *it;
    return v;
}

std::vector<double> derivative_monic(const std::vector<double>& c) {
    const double d = static_cast<double>(c.size());
    std::vector<double> out(c.size() - 1);
    for (std::size_t i = 1; i < c.size(); ++i) out[i - 1] = static_cast<double>(i) * c[i] / d;
    return out;
}

double bisect(const std::vector<double>& c, double lo, double hi, double flo) {
    for (int it = 0; it < 200 && hi - lo > 0; ++it) {
        const double mid = 0.5 * (lo + hi);
        if (mid <= lo || mid >= hi) break;
        const double fm = eval(c, mid);
        if ((fm < 0) == (flo < 0) && fm != 0) {
            lo = mid;
            flo = fm;
        } else {
            hi = mid;
        }
    }
    double x = 0.5 * (lo + hi);
    // One Newton step to polish.
    std::vector<double> dc = derivative_monic(c);
    const double dpx = eval(dc, x) * static_cast<double>(c.size());
    if (dpx != 0) {
        const double step = eval(c, x) / dpx;
        if (std::abs(step) < (hi - lo) + 1e-15) x -= step;
    }
    return x;
}

// Monic polynomial with all real roots; roots in increasing order.
std::vector<double> solve_all_real(const std::vector<double>& c) {
    const std::size_t d = c.size();
    if (d == 0) return {};
    if (d == 1) return {-c[0]};
    if (d == 2) {
        const double b = c[1];
        double disc = b * b - 4.0 * c[0];
        const double scale = std::max({1.0, b * b, std::abs(c[0])});
        if (disc < -1e-6 * scale)
            throw NumericalError("real_roots_monic: quadratic discriminant is negative");
        disc = std::max(disc, 0.0);
        const double s = std::sqrt(disc);
        const double q = -(b + (b >= 0 ? s : -s)) / 2.0;
        double r0 = q;
        double r1 = (q != 0.0) ? c[0] / q : 0.0;
        if (r0 > r1) std::swap(r0, r1);
        return {r0, r1};
    }

    const std::vector<double> crit = solve_all_real(derivative_monic(c));
    double bound = 0;
    for (double ci : c) bound = std::max(bound, std::abs(ci));
    bound += 1.0;  // Cauchy bound for a monic polynomial

    std::vector<double> points;
    points.push_back(-bound);
    points.insert(points.end(), crit.begin(), crit.end());
    points.push_back(bound);
    std::sort(points.begin(), points.end());

    std::vector<double> roots;
    for (std::size_t i = 0; i + 1 < points.size(); ++i) {
        const double a = points[i];
        const double b = points[i + 1];
        if (!(a < b)) continue;
        const double fa = eval(c, a);
        const double fb = eval(c, b);
        if ((fa < 0) != (fb < 0) && fa != 0 && fb != 0) roots.push_back(bisect(c, a, b, fa));
    }

    // A root at a critical point is a multiple root (p and p' vanish
    // together). Bisection sees odd multiplicities once and even ones not
    // at all, so top the count up from the flat critical points.
    if (roots.size() < d) {
        const double flat_tol = 1e-10 * std::max(1.0, bound);
        std::vector<double> flats;  // deduplicated criticals with p ~ 0
        for (double cp : crit) {
            bool dup = false;
            for (double u : flats) dup |= std::abs(u - cp) <= 1e-9 * bound;
            if (!dup && std::abs(eval(c, cp)) <= flat_tol) flats.push_back(cp);
        }
        for (double cp : flats) {
            if (roots.size() + 2 > d) break;
            bool near_known = false;
            for (double r : roots) near_known |= std::abs(r - cp) <= 1e-7 * bound;
            if (near_known) continue;
            roots.push_back(cp);
            roots.push_back(cp);
        }
        // any remaining deficit is extra multiplicity at one of the flats
        while (roots.size() < d && !flats.empty()) {
            double best = flats[0];
            for (double cp : flats)
                if (std::abs(eval(c, cp)) < std::abs(eval(c, best))) best = cp;
            roots.push_back(best);
        }
    }
    if (roots.size() != d)
        throw NumericalError("real_roots_monic: failed to isolate all real roots");
    std::sort(roots.begin(), roots.end());
    return roots;
}

}  // namespace

std::vector<double> real_roots_monic(std::vector<double> coeffs, double zero_tol,
                                     double residual_tol) {
    std::vector<double> roots;
    while (!coeffs.empty() && std::abs(coeffs[0]) <= zero_tol) {
        roots.push_back(0.0);
        coeffs.erase(coeffs.begin());
    }
    const std::vector<double> rest = solve_all_real(coeffs);
    for (double r : rest) {
        if (std::abs(eval(coeffs, r)) > residual_tol)
            throw NumericalError("real_roots_monic: root residual above tolerance");
        roots.push_back(r);
    }
    std::sort(roots.begin(), roots.end(), std::greater<>());
    return roots;
}

}  // namespace swgraph
