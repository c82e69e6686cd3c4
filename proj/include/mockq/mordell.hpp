// Copyright 2026 The mockq Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef MOCKQ_MORDELL_HPP
#define MOCKQ_MORDELL_HPP

// Quadrature for the two Gaussian-type integrals of the transformation
// formulas:
//   mordell_integral(a) = int_{-inf}^{inf} e^{-a x^2} / cosh(a x) dx
//   watson_integral(a)  = int_0^{inf} e^{-3a x^2/4} cosh(a x/2) / cosh(3a x/2) dx
//
// Both integrands are analytic in a strip around the real axis and decay like
// Gaussians, so the equal-step trapezoid rule converges exponentially in 1/h.
// The domain is cut at X where the Gaussian factor drops below tol/100; the
// step is halved until two successive sums agree to tol/2.

#include <cmath>
#include <cstddef>
#include <numbers>
#include <string>

#include <mockq/complex.hpp>
#include <mockq/errors.hpp>
#include <mockq/numkernel.hpp>
#include <mockq/real.hpp>

namespace mockq
{

struct QuadratureResult {
    Complex value;
    // |T(h) - T(2h)| + analytic tail bound + rounding allowance.
    double err_estimate = 0.0;
    std::size_t nodes_used = 0;
    double truncation_point = 0.0;
    double step = 0.0;
    int levels = 0;
};

struct QuadratureOptions {
    double tol = 1e-20;
    // Required distance of arg(alpha) from +-pi/2, keeps cosh(alpha x) zero-free
    // near the real line.
    double arg_margin = 0.1;
    // 8 * 2^16 intervals on [0, X] at most.
    int max_levels = 16;
    // Overrides the automatic truncation point when > 0.
    double truncation_point = 0.0;
};

namespace detail
{

inline void check_alpha(const Complex &alpha, const QuadratureOptions &opts)
{
    if (!(alpha.real() > Real(0))) {
        throw DomainError("Re(alpha) must be > 0");
    }
    const double a = std::abs(arg(alpha).to_double());
    if (a > std::numbers::pi / 2 - opts.arg_margin) {
        throw DomainError("|arg(alpha)| must be <= pi/2 - " + std::to_string(opts.arg_margin));
    }
}

// Trapezoid sums of f on [-X, X] (full_line) or [0, X] with step halving.
// The first grid has 8 intervals on [0, X].
template <class F>
QuadratureResult trapezoid(F f, bool full_line, double X, double tail, const QuadratureOptions &opts,
                           const char *what)
{
    const Real Xr(X);
    std::size_t intervals = 8;
    Real h = Xr / Real(static_cast<long>(intervals));
    double absum = 0.0; // sum of |f| over all nodes, times the node's step
    std::size_t nodes = 0;

    auto node_sum = [&](std::size_t first, std::size_t stride, const Real &step) {
        Complex s;
        for (std::size_t k = first; k <= intervals; k += stride) {
            const Real x = step * Real(static_cast<long>(k));
            Complex v = f(x);
            if (full_line) {
                v += f(-x);
                ++nodes;
            }
            ++nodes;
            absum += magnitude(v) * step.to_double();
            s += v;
        }
        return s;
    };

    Complex f0 = f(Real(0));
    ++nodes;
    absum += magnitude(f0) * h.to_double();
    if (!full_line) {
        f0 = ldexp(f0, -1);
    }
    Complex total = (f0 + node_sum(1, 1, h)) * Complex(h);

    double diff = HUGE_VAL;
    for (int level = 1; level <= opts.max_levels; ++level) {
        intervals *= 2;
        h = ldexp(h, -1);
        absum *= 0.5;
        const Complex refined = ldexp(total, -1) + node_sum(1, 2, h) * Complex(h);
        diff = magnitude(refined - total);
        total = refined;
        const double scale = magnitude(total);
        const double rounding = 64.0 * unit_roundoff() * (absum + static_cast<double>(nodes) * scale);
        // Once the difference is below the truncation tail, refining further
        // cannot improve the total error.
        if (level >= 3 && (diff <= 0.5 * opts.tol * scale || diff <= rounding || diff <= tail)) {
            return {total, diff + tail + rounding, nodes, X, h.to_double(), level};
        }
    }
    throw NonConvergence(std::string(what) + ": step halving failed to contract (last difference " +
                         std::to_string(diff) + ")");
}

// Smallest X with exp(-rate X^2) < tol/100, and at least 1/Re(alpha) so the
// hyperbolic ratio in either integrand is bounded by 1 beyond X.
inline double truncation_point(double rate, double re_alpha, const QuadratureOptions &opts)
{
    if (opts.truncation_point > 0.0) {
        return opts.truncation_point;
    }
    const double x = std::sqrt(std::log(100.0 / opts.tol) / rate);
    return std::max(x, 1.0 / re_alpha);
}

} // namespace detail

inline QuadratureResult mordell_integral(const Complex &alpha, const QuadratureOptions &opts = {})
{
    detail::check_alpha(alpha, opts);
    const double a = alpha.real().to_double();
    const double X = detail::truncation_point(a, a, opts);
    // |f(x)| <= e^{-a x^2} once a|x| >= 1, so both tails together are at most
    // e^{-a X^2} / (a X).
    const double tail = std::exp(-a * X * X) / (a * X);
    auto f = [&](const Real &x) {
        const Complex ax = alpha * Complex(x);
        return exp(-(ax * Complex(x))) / cosh(ax);
    };
    return detail::trapezoid(f, true, X, tail, opts, "mordell_integral");
}

inline QuadratureResult watson_integral(const Complex &alpha, const QuadratureOptions &opts = {})
{
    detail::check_alpha(alpha, opts);
    const double a = alpha.real().to_double();
    const double X = detail::truncation_point(0.75 * a, a, opts);
    // cosh(u)/sinh(3u) <= 1 for u >= 1/2, so |f(x)| <= e^{-3a x^2/4} beyond X.
    const double tail = std::exp(-0.75 * a * X * X) / (1.5 * a * X);
    const Complex half = alpha * Complex(0.5);
    const Complex three_half = alpha * Complex(1.5);
    const Complex three_quarter = alpha * Complex(0.75);
    auto f = [&](const Real &x) {
        const Complex cx(x);
        return exp(-(three_quarter * cx * cx)) * cosh(half * cx) / cosh(three_half * cx);
    };
    return detail::trapezoid(f, false, X, tail, opts, "watson_integral");
}

// Full-line Mordell integral evaluated as twice the half-line trapezoid sum;
// agrees with mordell_integral by the x -> -x symmetry of the integrand.
inline QuadratureResult mordell_integral_half_line(const Complex &alpha, const QuadratureOptions &opts = {})
{
    detail::check_alpha(alpha, opts);
    const double a = alpha.real().to_double();
    const double X = detail::truncation_point(a, a, opts);
    const double tail = std::exp(-a * X * X) / (a * X);
    auto f = [&](const Real &x) {
        const Complex ax = alpha * Complex(x);
        return exp(-(ax * Complex(x))) / cosh(ax);
    };
    QuadratureResult r = detail::trapezoid(f, false, X, 0.5 * tail, opts, "mordell_integral_half_line");
    r.value = r.value * Complex(2);
    r.err_estimate *= 2.0;
    return r;
}

} // namespace mockq

#endif
