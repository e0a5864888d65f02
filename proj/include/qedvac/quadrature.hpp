#ifndef QEDVAC_QUADRATURE_HPP
#define QEDVAC_QUADRATURE_HPP

// Adaptive Gauss-Kronrod quadrature (7-point Gauss, 15-point Kronrod).
// The segment error estimate is |K15 - G7|; segments are bisected until the
// estimate meets the local share of the requested tolerance or the depth cap
// is reached. Callers get the achieved error estimate back and decide what to
// do with a non-converged result.

#include <algorithm>
#include <array>
#include <cmath>
#include <utility>

namespace qedvac {

struct QuadratureResult {
    double value = 0.0;
    double error_estimate = 0.0;
    bool converged = true;
};

namespace detail {

// Kronrod-15 abscissae on [0,1] (positive half) and weights; the odd-indexed
// abscissae are the embedded Gauss-7 nodes.
inline constexpr std::array<double, 8> kKronrodNodes = {
    0.991455371120812639206854697526329,
    0.949107912342758524526189684047851,
    0.864864423359769072789712788640926,
    0.741531185599394439863864773280788,
    0.586087235467691130294144838258730,
    0.405845151377397166906606412076961,
    0.207784955007898467600689403773245,
    0.000000000000000000000000000000000};

inline constexpr std::array<double, 8> kKronrodWeights = {
    0.022935322010529224963732008058970,
    0.063092092629978553290700663189204,
    0.104790010322250183839876322541518,
    0.140653259715525918745189590510238,
    0.169004726639267902826583426598550,
    0.190350578064785409913256402421014,
    0.204432940075298892414161999234649,
    0.209482141084727828012999174891714};

inline constexpr std::array<double, 4> kGaussWeights = {
    0.129484966168869693270611432679082,
    0.279705391489276667901467771423780,
    0.381830050505118944950369775488975,
    0.417959183673469387755102040816327};

template <class F>
inline void gauss_kronrod_15(F& f, double a, double b, double& kronrod,
                             double& err) {
    const double center = 0.5 * (a + b);
    const double half = 0.5 * (b - a);
    const double fc = f(center);
    double gauss = fc * kGaussWeights[3];
    kronrod = fc * kKronrodWeights[7];
    for (int i = 0; i < 7; ++i) {
        const double dx = half * kKronrodNodes[i];
        const double fsum = f(center - dx) + f(center + dx);
        kronrod += fsum * kKronrodWeights[i];
        if (i % 2 == 1)
            gauss += fsum * kGaussWeights[i / 2];
    }
    kronrod *= half;
    gauss *= half;
    err = std::abs(kronrod - gauss);
}

template <class F>
inline void integrate_segment(F& f, double a, double b, double abs_tol,
                              double rel_tol, int depth, int max_depth,
                              QuadratureResult& out) {
    double value = 0.0;
    double err = 0.0;
    gauss_kronrod_15(f, a, b, value, err);
    if (err <= abs_tol || err <= rel_tol * std::abs(value) ||
        depth >= max_depth) {
        out.value += value;
        out.error_estimate += err;
        return;
    }
    const double mid = 0.5 * (a + b);
    integrate_segment(f, a, mid, 0.5 * abs_tol, rel_tol, depth + 1, max_depth,
                      out);
    integrate_segment(f, mid, b, 0.5 * abs_tol, rel_tol, depth + 1, max_depth,
                      out);
}

inline void finish(QuadratureResult& out, double abs_tol, double rel_tol) {
    out.converged = out.error_estimate <=
                    std::max(abs_tol, rel_tol * std::abs(out.value));
}

}  // namespace detail

template <class F>
QuadratureResult integrate_adaptive(F&& f, double a, double b,
                                    double abs_tol = 1e-12,
                                    double rel_tol = 1e-12,
                                    int max_depth = 48) {
    QuadratureResult out;
    if (a == b)
        return out;
    detail::integrate_segment(f, a, b, abs_tol, rel_tol, 0, max_depth, out);
    detail::finish(out, abs_tol, rel_tol);
    return out;
}

// Same scheme with caller-chosen interior breakpoints, for integrands whose
// scale varies strongly over the interval.
template <class F, std::size_t N>
QuadratureResult integrate_adaptive_segmented(F&& f,
                                              const std::array<double, N>& pts,
                                              double abs_tol = 1e-12,
                                              double rel_tol = 1e-12,
                                              int max_depth = 48) {
    QuadratureResult out;
    for (std::size_t i = 0; i + 1 < N; ++i) {
        if (pts[i] == pts[i + 1])
            continue;
        detail::integrate_segment(f, pts[i], pts[i + 1], abs_tol, rel_tol, 0,
                                  max_depth, out);
    }
    detail::finish(out, abs_tol, rel_tol);
    return out;
}

}  // namespace qedvac

#endif  // QEDVAC_QUADRATURE_HPP
