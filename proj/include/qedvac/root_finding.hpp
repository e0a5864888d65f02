#ifndef QEDVAC_ROOT_FINDING_HPP
#define QEDVAC_ROOT_FINDING_HPP

// Bracketing scalar root finder (Brent's method: bisection + secant +
// inverse quadratic interpolation). Works on whatever coordinate the caller
// passes in; solvers that would overflow in linear variables are expected to
// hand in the log-space function.

#include <algorithm>
#include <cmath>
#include <limits>

#include "qedvac/errors.hpp"

namespace qedvac {

template <class F>
double find_root_brent(F&& f, double a, double b, double tol_abs = 1e-14,
                       double tol_rel = 1e-14, int max_iter = 200) {
    double fa = f(a);
    double fb = f(b);
    if (fa == 0.0)
        return a;
    if (fb == 0.0)
        return b;
    if ((fa > 0.0) == (fb > 0.0))
        throw DomainError("find_root_brent: interval does not bracket a root");

    double c = a, fc = fa;
    double d = b - a, e = d;
    for (int iter = 0; iter < max_iter; ++iter) {
        if ((fb > 0.0) == (fc > 0.0)) {
            c = a;
            fc = fa;
            d = e = b - a;
        }
        if (std::abs(fc) < std::abs(fb)) {
            a = b;
            b = c;
            c = a;
            fa = fb;
            fb = fc;
            fc = fa;
        }
        const double tol =
            2.0 * std::numeric_limits<double>::epsilon() * std::abs(b) +
            std::max(tol_abs, tol_rel * std::abs(b));
        const double m = 0.5 * (c - b);
        if (std::abs(m) <= tol || fb == 0.0)
            return b;

        if (std::abs(e) >= tol && std::abs(fa) > std::abs(fb)) {
            // Secant (two points) or inverse quadratic (three points).
            const double s = fb / fa;
            double p, q;
            if (a == c) {
                p = 2.0 * m * s;
                q = 1.0 - s;
            } else {
                const double qq = fa / fc;
                const double r = fb / fc;
                p = s * (2.0 * m * qq * (qq - r) - (b - a) * (r - 1.0));
                q = (qq - 1.0) * (r - 1.0) * (s - 1.0);
            }
            if (p > 0.0)
                q = -q;
            else
                p = -p;
            if (2.0 * p < std::min(3.0 * m * q - std::abs(tol * q),
                                   std::abs(e * q))) {
                e = d;
                d = p / q;
            } else {
                d = m;
                e = m;
            }
        } else {
            d = m;
            e = m;
        }
        a = b;
        fa = fb;
        b += (std::abs(d) > tol) ? d : (m > 0.0 ? tol : -tol);
        fb = f(b);
    }
    return b;
}

// Grows [lo, hi] upward by doubling hi until f changes sign, then solves.
// f(lo) and f(hi) must eventually straddle zero for increasing f.
template <class F>
double find_root_expanding(F&& f, double lo, double hi, double tol_abs = 1e-14,
                           double tol_rel = 1e-14) {
    double flo = f(lo);
    if (flo == 0.0)
        return lo;
    for (int i = 0; i < 80; ++i) {
        if ((f(hi) > 0.0) != (flo > 0.0))
            return find_root_brent(f, lo, hi, tol_abs, tol_rel);
        lo = hi;
        flo = f(lo);
        hi *= 2.0;
    }
    throw DomainError("find_root_expanding: no sign change found");
}

}  // namespace qedvac

#endif  // QEDVAC_ROOT_FINDING_HPP
