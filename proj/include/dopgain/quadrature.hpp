#pragma once

#include <cmath>
#include <cstddef>
#include <span>
#include <stdexcept>
#include <utility>
#include <vector>

namespace dopgain {

namespace detail {

// Gauss-Kronrod 7-15 nodes and weights (QUADPACK dqk15).
inline constexpr double kGk15Node[8] = {
    0.991455371120812639206854697526329,
    0.949107912342758524526189684047851,
    0.864864423359769072789712788640926,
    0.741531185599394439863864773280788,
    0.586087235467691130294144838258730,
    0.405845151377397166906606412076961,
    0.207784955007898467600689403773245,
    0.000000000000000000000000000000000};

inline constexpr double kGk15WeightK[8] = {
    0.022935322010529224963732008058970,
    0.063092092629978553290700663189204,
    0.104790010322250183839876322541518,
    0.140653259715525918745189590510238,
    0.169004726639267902826583426598550,
    0.190350578064785409913256402421014,
    0.204432940075298892414161999234649,
    0.209482141084727828012999174891714};

inline constexpr double kGk15WeightG[4] = {
    0.129484966168869693270611432679082,
    0.279705391489276667901467771423780,
    0.381830050505118944950369775488975,
    0.417959183673469387755102040816327};

template <class F>
std::pair<double, double> gauss_kronrod_15(F&& f, double a, double b) {
    const double center = 0.5 * (a + b);
    const double half = 0.5 * (b - a);

    const double fc = f(center);
    double kronrod = kGk15WeightK[7] * fc;
    double gauss = kGk15WeightG[3] * fc;
    for (int i = 0; i < 7; ++i) {
        const double dx = half * kGk15Node[i];
        const double fsum = f(center - dx) + f(center + dx);
        kronrod += kGk15WeightK[i] * fsum;
        if (i % 2 == 1) gauss += kGk15WeightG[i / 2] * fsum;
    }
    kronrod *= half;
    gauss *= half;
    return {kronrod, std::abs(kronrod - gauss)};
}

}  // namespace detail

/// Adaptive Gauss-Kronrod integration of f over [a, b]. Panels are bisected
/// until the local error estimate satisfies the absolute or relative
/// tolerance. The Kronrod nodes are interior, so f is never evaluated at the
/// interval endpoints; integrable endpoint singularities are acceptable when
/// f stays finite at the actual evaluation points.
template <class F>
double integrate(F&& f, double a, double b, double abs_tol = 1e-13,
                 double rel_tol = 1e-11) {
    if (!(std::isfinite(a) && std::isfinite(b)))
        throw std::domain_error("integrate: bounds must be finite");
    if (a == b) return 0.0;

    constexpr int kMaxPanels = 4000;
    struct Panel {
        double a, b;
    };
    std::vector<Panel> stack;
    stack.reserve(64);
    stack.push_back({a, b});

    double total = 0.0;
    int processed = 0;
    while (!stack.empty()) {
        if (++processed > kMaxPanels)
            throw std::runtime_error("integrate: panel budget exhausted");
        const Panel p = stack.back();
        stack.pop_back();
        const auto [value, error] = detail::gauss_kronrod_15(f, p.a, p.b);
        if (error <= abs_tol || error <= rel_tol * std::abs(value)) {
            total += value;
            continue;
        }
        const double mid = 0.5 * (p.a + p.b);
        if (mid <= p.a || mid >= p.b) {  // interval at floating-point resolution
            total += value;
            continue;
        }
        stack.push_back({p.a, mid});
        stack.push_back({mid, p.b});
    }
    return total;
}

/// Trapezoidal rule on a tabulated function.
inline double trapezoid(std::span<const double> x, std::span<const double> y) {
    if (x.size() != y.size() || x.size() < 2)
        throw std::invalid_argument("trapezoid: need two equal-length arrays");
    double sum = 0.0;
    for (std::size_t i = 0; i + 1 < x.size(); ++i)
        sum += 0.5 * (y[i] + y[i + 1]) * (x[i + 1] - x[i]);
    return sum;
}

}  // namespace dopgain
