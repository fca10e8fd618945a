#pragma once

#include <cmath>
#include <complex>
#include <cstddef>
#include <type_traits>
#include <vector>

#include "valkit/errors.hpp"

namespace valkit {

struct GaussLegendreRule {
    std::vector<double> nodes;    // on (-1, 1), increasing
    std::vector<double> weights;  // positive, sum 2
};

// Nodes/weights by Newton iteration on the Legendre recurrence. Exact for
// polynomials of degree 2n-1 (checked in the test suite).
inline GaussLegendreRule make_gauss_legendre(int n) {
    if (n < 1) throw domain_error("make_gauss_legendre: order must be >= 1");
    GaussLegendreRule rule;
    rule.nodes.resize(n);
    rule.weights.resize(n);
    for (int k = 0; k < (n + 1) / 2; ++k) {
        // Tricomi-style initial guess, then Newton on P_n.
        double x = std::cos(M_PI * (k + 0.75) / (n + 0.5));
        double dp = 0;
        for (int iter = 0; iter < 100; ++iter) {
            double p0 = 1.0, p1 = x;
            for (int m = 2; m <= n; ++m) {
                double p2 = ((2 * m - 1) * x * p1 - (m - 1) * p0) / m;
                p0 = p1;
                p1 = p2;
            }
            dp = n * (x * p1 - p0) / (x * x - 1.0);
            double dx = p1 / dp;
            x -= dx;
            if (std::fabs(dx) < 1e-16) break;
        }
        rule.nodes[k] = -x;  // guesses enumerate roots from +1 downwards
        rule.nodes[n - 1 - k] = x;
        double w = 2.0 / ((1.0 - x * x) * dp * dp);
        rule.weights[k] = w;
        rule.weights[n - 1 - k] = w;
    }
    if (n % 2 == 1) rule.nodes[n / 2] = 0.0;  // exact symmetry for the middle node
    return rule;
}

// Cached rules for the embedded pair used by integrate(). Thread-safe: the
// cache is a function-local static built on first use.
inline const GaussLegendreRule& gauss_legendre(int n) {
    static const GaussLegendreRule rule10 = make_gauss_legendre(10);
    static const GaussLegendreRule rule21 = make_gauss_legendre(21);
    if (n == 10) return rule10;
    if (n == 21) return rule21;
    throw domain_error("gauss_legendre: only the embedded 10/21 pair is cached");
}

struct QuadOptions {
    double tol = 1e-8;       // absolute accuracy target for the whole interval
    int max_panels = 200000;
    bool extended = false;   // accumulate panel sums in long double
    // Rounding floor: once the 10-vs-21 disagreement is this small relative
    // to the panel's L1 mass (weighted sum of |f|), the disagreement is
    // dominated by roundoff in evaluating f itself, and subdividing cannot
    // shrink it -- both scale linearly with the width. The measured floor for
    // double-precision modular evaluations near the real axis is ~1e-13, so
    // the default sits an order above it. Accepted panels still charge their
    // disagreement to the error estimate.
    double noise_floor = 1e-12;
};

template <class T>
struct QuadResult {
    T value{};
    double error = 0;  // sum of accepted per-panel error estimates
    int panels = 0;
};

namespace quad_detail {

inline double abs_of(double x) { return std::fabs(x); }
inline double abs_of(const std::complex<double>& z) { return std::abs(z); }

template <class T>
struct wide {
    using type = long double;
};
template <class U>
struct wide<std::complex<U>> {
    using type = std::complex<long double>;
};

template <class F>
auto apply_rule(F&& f, const GaussLegendreRule& rule, double a, double b)
    -> decltype(f(0.0)) {
    using T = decltype(f(0.0));
    typename wide<T>::type acc{};
    const double half = 0.5 * (b - a), mid = 0.5 * (a + b);
    for (std::size_t k = 0; k < rule.nodes.size(); ++k)
        acc += static_cast<typename wide<T>::type>(f(mid + half * rule.nodes[k])) *
               static_cast<long double>(rule.weights[k]);
    return static_cast<T>(acc * static_cast<long double>(half));
}

// Same rule application, but also reports the panel's L1 mass
// (weighted sum of |f|), the natural scale for the rounding floor.
template <class F>
auto apply_rule_l1(F&& f, const GaussLegendreRule& rule, double a, double b,
                   double& l1) -> decltype(f(0.0)) {
    using T = decltype(f(0.0));
    typename wide<T>::type acc{};
    long double mass = 0;
    const double half = 0.5 * (b - a), mid = 0.5 * (a + b);
    for (std::size_t k = 0; k < rule.nodes.size(); ++k) {
        T fx = f(mid + half * rule.nodes[k]);
        acc += static_cast<typename wide<T>::type>(fx) *
               static_cast<long double>(rule.weights[k]);
        mass += static_cast<long double>(abs_of(fx)) *
                static_cast<long double>(rule.weights[k]);
    }
    l1 = static_cast<double>(mass * static_cast<long double>(std::fabs(half)));
    return static_cast<T>(acc * static_cast<long double>(half));
}

}  // namespace quad_detail

// Adaptive Gauss-Legendre with an embedded 10/21 pair. Panels are accepted
// when |GL21 - GL10| fits the panel's share of the tolerance; panels narrower
// than ~1e-13 of the interval are accepted unconditionally (their error is
// still charged to the estimate).
template <class F>
auto integrate(F&& f, double a, double b, QuadOptions opt = {})
    -> QuadResult<decltype(f(0.0))> {
    using T = decltype(f(0.0));
    QuadResult<T> out;
    if (a == b) return out;
    const GaussLegendreRule& lo = gauss_legendre(10);
    const GaussLegendreRule& hi = gauss_legendre(21);
    const double total = std::fabs(b - a);
    const double min_width = 1e-13 * total;

    typename quad_detail::wide<T>::type acc{};
    std::vector<std::pair<double, double>> stack{{a, b}};
    while (!stack.empty()) {
        auto [x0, x1] = stack.back();
        stack.pop_back();
        if (++out.panels > opt.max_panels)
            throw overflow_error("integrate: panel budget exceeded");
        T v_lo = quad_detail::apply_rule(f, lo, x0, x1);
        double l1_hi = 0;
        T v_hi = quad_detail::apply_rule_l1(f, hi, x0, x1, l1_hi);
        double err = quad_detail::abs_of(v_hi - v_lo);
        double width = std::fabs(x1 - x0);
        if (err <= opt.tol * (width / total) || err <= opt.noise_floor * l1_hi ||
            width <= min_width) {
            acc += static_cast<typename quad_detail::wide<T>::type>(v_hi);
            out.error += err;
        } else {
            double xm = 0.5 * (x0 + x1);
            stack.emplace_back(x0, xm);
            stack.emplace_back(xm, x1);
        }
    }
    out.value = static_cast<T>(acc);
    return out;
}

}  // namespace valkit
