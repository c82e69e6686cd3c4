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

#ifndef MOCKQ_VERIFY_HPP
#define MOCKQ_VERIFY_HPP

// Each check builds the two sides of an identity from separate code paths and
// returns an IdentityReport. identity_registry() holds the named checks with
// their canonical grids; run_identity walks a grid.

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <future>
#include <map>
#include <numbers>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <nlohmann/json.hpp>

#include <mockq/complex.hpp>
#include <mockq/errors.hpp>
#include <mockq/mocktheta.hpp>
#include <mockq/mordell.hpp>
#include <mockq/numkernel.hpp>
#include <mockq/qexpand.hpp>

namespace mockq
{

using Params = std::map<std::string, Complex>;

struct IdentityReport {
    std::string identity;
    Params params;
    Complex lhs;
    Complex rhs;
    double abs_residual = 0.0;
    double rel_residual = 0.0;
    double tolerance = 0.0;
    bool passed = false;
    // Error estimates of the pieces, already scaled by their coefficients.
    std::vector<double> component_errors;

    double error_budget() const
    {
        double s = 0.0;
        for (double e : component_errors) {
            s += e;
        }
        return s;
    }
};

struct VerifyOptions {
    double tolerance = 1e-10;
    // Tolerance handed to the component evaluations; <= 0 picks
    // max(1e-20, 2^-(P-16)) for the working precision P.
    double eval_tol = 0.0;
    // Below this magnitude of both sides the absolute residual decides.
    double magnitude_floor = 1e-30;
    bool parallel = false;
};

inline double component_tolerance(const VerifyOptions &opts)
{
    if (opts.eval_tol > 0.0) {
        return opts.eval_tol;
    }
    return std::max(1e-20, std::ldexp(1.0, static_cast<int>(16 - working_precision())));
}

inline IdentityReport make_report(std::string name, Params params, Complex lhs, Complex rhs, double tolerance,
                                  std::vector<double> component_errors, double magnitude_floor = 1e-30)
{
    IdentityReport r;
    r.identity = std::move(name);
    r.params = std::move(params);
    r.abs_residual = magnitude(lhs - rhs);
    const double scale = std::max(magnitude(lhs), magnitude(rhs));
    r.rel_residual = scale > 0.0 ? r.abs_residual / scale : 0.0;
    r.tolerance = tolerance;
    r.passed = scale > magnitude_floor ? r.rel_residual <= tolerance : r.abs_residual <= tolerance;
    r.lhs = std::move(lhs);
    r.rhs = std::move(rhs);
    r.component_errors = std::move(component_errors);
    return r;
}

namespace detail
{

inline EvalOptions eval_options(const VerifyOptions &opts)
{
    return {.tol = component_tolerance(opts)};
}

inline QuadratureOptions quad_options(const VerifyOptions &opts)
{
    return {.tol = component_tolerance(opts)};
}

inline Complex pi_c()
{
    return Complex(Real::pi());
}

} // namespace detail

// Mordell integral against
//   -4 sqrt(pi/a) e^{-3a/4} h1(q) + (pi/a) e^{pi^2/(4a)} (h2(q1^2) - 1/2 [(q1^2;q1^2)_inf]^5 / [(q1^4;q1^4)_inf]^4)
// with q = e^{-a}, q1 = e^{-pi^2/a}. Fractional powers of q and q1 are
// exponentials of a.
inline IdentityReport check_main_theorem(const Complex &alpha, const VerifyOptions &opts = {})
{
    const QuadratureResult lhs = mordell_integral(alpha, detail::quad_options(opts));
    const EvalOptions eo = detail::eval_options(opts);
    const Complex pi = detail::pi_c();
    const Nome nome = nome_pair(alpha);
    const Nome dual_sq = nome_pair(Complex(2) * pi * pi / alpha); // q1^2
    const EvalResult h1 = h1_series(nome, eo);
    const EvalResult h2 = h2_series(dual_sq, eo);
    const EvalResult eta = eta_quotient_correction(dual_sq.q(), eo);
    const Complex c1 = Complex(-4) * sqrt(pi / alpha) * exp(Complex(-0.75) * alpha);
    const Complex c2 = pi / alpha * exp(pi * pi / (Complex(4) * alpha));
    Complex rhs = c1 * h1.value + c2 * (h2.value - Complex(0.5) * eta.value);
    const double m1 = magnitude(c1);
    const double m2 = magnitude(c2);
    return make_report("main-theorem", {{"alpha", alpha}}, lhs.value, std::move(rhs), opts.tolerance,
                       {lhs.err_estimate, m1 * h1.err_estimate, m2 * h2.err_estimate, 0.5 * m2 * eta.err_estimate},
                       opts.magnitude_floor);
}

namespace detail
{

inline Complex watson_rhs(const Complex &alpha, const EvalOptions &eo, std::vector<double> &errors)
{
    const Complex pi = pi_c();
    const Nome nome = nome_pair(alpha);
    const Nome dual_sq = nome_pair(Complex(2) * pi * pi / alpha);
    const EvalResult om = omega_series(nome, eo);
    const EvalResult f = f_series(dual_sq, eo);
    const Complex c1 = -(sqrt(Complex(4) * pi / (Complex(3) * alpha)) * exp(Complex(-2) * alpha / Complex(3)));
    const Complex c2 = Complex(1) / sqrt(Complex(3)) * (pi / alpha) * exp(pi * pi / (Complex(12) * alpha));
    errors.push_back(magnitude(c1) * om.err_estimate);
    errors.push_back(magnitude(c2) * f.err_estimate);
    return c1 * om.value + c2 * f.value;
}

} // namespace detail

// Watson's transformation of omega and f:
//   int_{-inf}^{inf} e^{-3a x^2/4} cosh(a x/2) / cosh(3a x/2) dx
//     = -sqrt(4 pi / (3a)) e^{-2a/3} omega(q) + (1/sqrt 3)(pi/a) e^{pi^2/(12a)} f(q1^2).
// The integrand is even; the left side is twice watson_integral.
inline IdentityReport check_watson(const Complex &alpha, const VerifyOptions &opts = {})
{
    const QuadratureResult half = watson_integral(alpha, detail::quad_options(opts));
    std::vector<double> errors{2.0 * half.err_estimate};
    Complex rhs = detail::watson_rhs(alpha, detail::eval_options(opts), errors);
    return make_report("watson", {{"alpha", alpha}}, half.value * Complex(2), std::move(rhs), opts.tolerance,
                       std::move(errors), opts.magnitude_floor);
}

// The same right side against the half-line integral alone. The residual is
// 1/2 relative: the right side equals the full-line integral.
inline IdentityReport check_watson_half_line(const Complex &alpha, const VerifyOptions &opts = {})
{
    const QuadratureResult half = watson_integral(alpha, detail::quad_options(opts));
    std::vector<double> errors{half.err_estimate};
    Complex rhs = detail::watson_rhs(alpha, detail::eval_options(opts), errors);
    return make_report("watson-half-line", {{"alpha", alpha}}, half.value, std::move(rhs), opts.tolerance,
                       std::move(errors), opts.magnitude_floor);
}

// D5(q) = 2 h1(q) - [(q^2;q^2)_inf / (q)_inf]^2 omega(q)
inline IdentityReport check_d5_decomposition(const Nome &nome, const VerifyOptions &opts = {})
{
    const EvalOptions eo = detail::eval_options(opts);
    const Complex &q = nome.q();
    const Complex q2 = q * q;
    const EvalResult d5 = d5_series(nome, eo);
    const EvalResult factor = qpoch_infinite(q2, q2, eo) / qpoch_infinite(q, q, eo);
    const EvalResult rhs = Complex(2) * h1_series(nome, eo) - factor * factor * omega_series(nome, eo);
    return make_report("d5-decomposition", {{"q", q}}, d5.value, rhs.value, opts.tolerance,
                       {d5.err_estimate, rhs.err_estimate}, opts.magnitude_floor);
}

// Exact form of the decomposition on integer coefficients up to q^{order-1}.
// lhs/rhs are the truncated polynomials at q = 1/2; abs_residual is the l1
// norm of the coefficient difference and must be exactly 0.
inline IdentityReport check_d5_decomposition_exact(std::size_t order)
{
    const qexpand::TruncatedSeries lhs = qexpand::d5(order);
    const qexpand::TruncatedSeries rhs = qexpand::d5_decomposition_rhs(order);
    mpz_class l1 = 0;
    for (std::size_t k = 0; k < order; ++k) {
        l1 += abs(mpz_class(lhs[k] - rhs[k]));
    }
    IdentityReport r = make_report("d5-decomposition-exact", {{"order", Complex(static_cast<long>(order))}},
                                   qexpand::series_eval(lhs, Complex(0.5)), qexpand::series_eval(rhs, Complex(0.5)),
                                   0.0, {});
    r.abs_residual = Real(l1).to_double();
    r.rel_residual = r.abs_residual == 0.0 ? 0.0 : r.abs_residual / std::max(magnitude(r.lhs), magnitude(r.rhs));
    r.passed = l1 == 0;
    return r;
}

// All representations of `tag` at q. lhs is the primary series; rhs is the
// representation farthest from it.
inline IdentityReport check_representations(FunctionTag tag, const Nome &nome, const VerifyOptions &opts = {})
{
    const EvalOptions eo = detail::eval_options(opts);
    std::vector<EvalResult> values;
    for (Representation r : representations(tag)) {
        values.push_back(evaluate(FunctionId(tag, r), nome, eo));
    }
    std::size_t worst = 0;
    double worst_diff = -1.0;
    for (std::size_t i = 0; i < values.size(); ++i) {
        const double d = magnitude(values[i].value - values[0].value);
        if (d > worst_diff) {
            worst_diff = d;
            worst = i;
        }
    }
    // Pairwise maximum may exceed the distance to the primary; report it.
    double pairwise = 0.0;
    for (std::size_t i = 0; i < values.size(); ++i) {
        for (std::size_t j = i + 1; j < values.size(); ++j) {
            pairwise = std::max(pairwise, magnitude(values[i].value - values[j].value));
        }
    }
    std::vector<double> errors;
    for (const auto &v : values) {
        errors.push_back(v.err_estimate);
    }
    IdentityReport r = make_report("representations-" + std::string(tag_name(tag)), {{"q", nome.q()}},
                                   values[0].value, values[worst].value, opts.tolerance, std::move(errors),
                                   opts.magnitude_floor);
    if (pairwise > r.abs_residual) {
        const double scale = std::max(magnitude(r.lhs), magnitude(r.rhs));
        r.abs_residual = pairwise;
        r.rel_residual = scale > 0.0 ? pairwise / scale : 0.0;
        r.passed = scale > opts.magnitude_floor ? r.rel_residual <= r.tolerance : r.abs_residual <= r.tolerance;
    }
    return r;
}

inline IdentityReport check_qhyper(const Complex &a, const Complex &b, const Complex &c, const Complex &z,
                                   const Nome &nome, const VerifyOptions &opts = {})
{
    const EvalOptions eo = detail::eval_options(opts);
    const EvalResult lhs = qhyper_lhs(a, b, c, z, nome, eo);
    const EvalResult rhs = qhyper_rhs(a, b, c, z, nome, eo);
    return make_report("qhyper", {{"a", a}, {"b", b}, {"c", c}, {"z", z}, {"q", nome.q()}}, lhs.value, rhs.value,
                       opts.tolerance, {lhs.err_estimate, rhs.err_estimate}, opts.magnitude_floor);
}

inline IdentityReport check_jacobi_triple_product(const Complex &z, const Complex &q, const VerifyOptions &opts = {})
{
    const EvalOptions eo = detail::eval_options(opts);
    const EvalResult sum = jacobi_theta_sum(z, q, eo);
    const EvalResult prod = jacobi_theta_product(z, q, eo);
    return make_report("jacobi-triple-product", {{"z", z}, {"q", q}}, sum.value, prod.value, opts.tolerance,
                       {sum.err_estimate, prod.err_estimate}, opts.magnitude_floor);
}

inline constexpr double radial_limit_tolerance = 1e-3;

// Value at t = 0 of the polynomial through (t_i, y_i) (Neville).
inline Complex extrapolate_to_zero(const std::vector<double> &t, std::vector<Complex> y)
{
    const std::size_t n = t.size();
    for (std::size_t m = 1; m < n; ++m) {
        for (std::size_t i = 0; i + m < n; ++i) {
            y[i] = (Complex(-t[i + m]) * y[i] + Complex(t[i]) * y[i + 1]) / Complex(t[i] - t[i + m]);
        }
    }
    return y[0];
}

// Radial limit of D5* toward exp(pi i / N): the series at r = 1 - 2^-k,
// k = 4..10, extrapolated polynomially in 1 - r, against d5_star_at_root(N).
// An empirical consistency check with a loose fixed tolerance.
inline IdentityReport check_radial_limit(long N, const VerifyOptions &opts = {})
{
    if (N < 1) {
        throw DomainError("N must be >= 1");
    }
    PrecisionScope scope(std::max(working_precision(), 192L));
    const Real theta = Real::pi() / Real(N);
    std::vector<double> t;
    std::vector<Complex> y;
    double err = 0.0;
    for (int k = 4; k <= 10; ++k) {
        const double tk = std::ldexp(1.0, -k);
        const Nome nome = Nome::from_q(polar(Real(1) - Real(tk), theta));
        const EvalResult v = d5_star_series(nome, {.tol = 1e-25, .allow_unsafe_radius = true});
        t.push_back(tk);
        y.push_back(v.value);
        err = std::max(err, v.err_estimate);
    }
    return make_report("d5-star-radial-limit", {{"N", Complex(N)}}, extrapolate_to_zero(t, y), d5_star_at_root(N),
                       radial_limit_tolerance, {err}, opts.magnitude_floor);
}

// Quantum invariant of the prism manifold M(2,2,2) at level N:
// (e^{2 pi i/N} - 1) tau_N = 2 (1 - 2 D5*(e^{pi i/N})).
struct WrtEntry {
    long N = 2;
    Complex tau;
    Complex d5_star_value;
};

inline WrtEntry wrt_entry(long N)
{
    if (N < 2) {
        throw DomainError("N must be >= 2 (e^{2 pi i/N} - 1 vanishes at N = 1)");
    }
    Complex d = d5_star_at_root(N);
    const Complex root = polar(Real(1), ldexp(Real::pi(), 1) / Real(N));
    Complex tau = Complex(2) * (Complex(1) - Complex(2) * d) / (root - Complex(1));
    return {N, std::move(tau), std::move(d)};
}

inline std::vector<WrtEntry> wrt_table(long n_min, long n_max)
{
    if (n_min < 2) {
        throw DomainError("N must be >= 2 (e^{2 pi i/N} - 1 vanishes at N = 1)");
    }
    if (n_max < n_min) {
        throw DomainError("N_max must be >= N_min");
    }
    std::vector<WrtEntry> rows;
    for (long n = n_min; n <= n_max; ++n) {
        rows.push_back(wrt_entry(n));
    }
    return rows;
}

// |(e^{2 pi i/N} - 1) tau - 2 (1 - 2 D5*)| for an entry.
inline double wrt_definition_residual(const WrtEntry &e)
{
    const Complex root = polar(Real(1), ldexp(Real::pi(), 1) / Real(e.N));
    return magnitude((root - Complex(1)) * e.tau - Complex(2) * (Complex(1) - Complex(2) * e.d5_star_value));
}

// The definitional identity with tau_N computed at twice the working precision.
inline IdentityReport check_wrt_definition(long N, const VerifyOptions &opts = {})
{
    WrtEntry fine;
    {
        PrecisionScope scope(2 * working_precision());
        fine = wrt_entry(N);
    }
    const Complex root = polar(Real(1), ldexp(Real::pi(), 1) / Real(N));
    Complex lhs = (root - Complex(1)) * fine.tau;
    Complex rhs = Complex(2) * (Complex(1) - Complex(2) * d5_star_at_root(N));
    return make_report("wrt-definition", {{"N", Complex(N)}}, std::move(lhs), std::move(rhs), opts.tolerance, {},
                       opts.magnitude_floor);
}

// Registry

struct Identity {
    std::string name;
    std::string summary;
    // Names of the point parameters accepted from the command line; empty when
    // only the canonical grid is supported.
    std::vector<std::string> point_params;
    std::function<std::vector<Params>()> canonical_grid;
    std::function<IdentityReport(const Params &, const VerifyOptions &)> run;
    // Tolerance that overrides VerifyOptions::tolerance (exact and empirical checks).
    std::optional<double> fixed_tolerance;
};

namespace detail
{

inline std::vector<Params> alpha_grid()
{
    std::vector<Params> g;
    for (Complex a : {Complex(0.5), Complex(1), Complex(2), Complex(Real::pi()), Complex(1.0, 0.4)}) {
        g.push_back({{"alpha", std::move(a)}});
    }
    return g;
}

inline std::vector<Params> q_grid()
{
    std::vector<Params> g;
    for (int k = 1; k <= 8; ++k) {
        g.push_back({{"q", Complex(Real(k) / Real(10))}});
    }
    for (int d : {6, 3}) {
        g.push_back({{"q", polar(Real(0.3), Real::pi() / Real(d))}});
    }
    return g;
}

// Deterministic uniform variate in [lo, hi) from the raw mt19937 stream.
inline double uniform(std::mt19937 &gen, double lo, double hi)
{
    return lo + (hi - lo) * (static_cast<double>(gen()) / 4294967296.0);
}

inline Complex random_disk_point(std::mt19937 &gen, double radius)
{
    const double r = radius * std::sqrt(uniform(gen, 0.0, 1.0));
    const double th = uniform(gen, -std::numbers::pi, std::numbers::pi);
    return Complex(r * std::cos(th), r * std::sin(th));
}

// Ten admissible tuples: the D5 substitution a = b = q, c = 0, z = q^2, the
// Euler case a = b = c = 0, and eight seeded random ones with |q|, |z| <= 0.5
// and |a|, |b|, |c| <= 0.9.
inline std::vector<Params> qhyper_grid()
{
    std::vector<Params> g;
    const Complex q(0.2);
    g.push_back({{"a", q}, {"b", q}, {"c", Complex(0)}, {"z", q * q}, {"q", q}});
    g.push_back({{"a", Complex(0)}, {"b", Complex(0)}, {"c", Complex(0)}, {"z", Complex(0.3)}, {"q", q}});
    std::mt19937 gen(20051024u);
    for (int i = 0; i < 8; ++i) {
        Params p;
        p["q"] = random_disk_point(gen, 0.5);
        p["z"] = random_disk_point(gen, 0.5);
        p["a"] = random_disk_point(gen, 0.9);
        p["b"] = random_disk_point(gen, 0.9);
        p["c"] = random_disk_point(gen, 0.9);
        g.push_back(std::move(p));
    }
    return g;
}

inline std::vector<Complex> jacobi_z_values()
{
    return {Complex(0.5), Complex(-1), Complex(1), Complex(1.2, 0.9), Complex(2)};
}

inline std::vector<Complex> jacobi_q_values()
{
    return {Complex(0.1), Complex(0.25), Complex(0.5), Complex(0.8), polar(Real(0.6), Real::pi() / Real(4))};
}

inline std::vector<Params> jacobi_grid()
{
    std::vector<Params> g;
    for (const Complex &z : jacobi_z_values()) {
        for (const Complex &q : jacobi_q_values()) {
            g.push_back({{"z", z}, {"q", q}});
        }
    }
    return g;
}

inline std::vector<Params> n_grid(long lo, long hi)
{
    std::vector<Params> g;
    for (long n = lo; n <= hi; ++n) {
        g.push_back({{"N", Complex(n)}});
    }
    return g;
}

inline const Complex &param(const Params &p, const std::string &name)
{
    const auto it = p.find(name);
    if (it == p.end()) {
        throw DomainError("missing parameter '" + name + "'");
    }
    return it->second;
}

inline long integer_param(const Params &p, const std::string &name)
{
    return std::lround(param(p, name).real().to_double());
}

} // namespace detail

inline const std::vector<Identity> &identity_registry()
{
    static const std::vector<Identity> registry = [] {
        using detail::param;
        std::vector<Identity> r;
        r.push_back({"main-theorem", "Mordell integral vs h1(q), h2(q1^2) and the eta quotient", {"alpha"},
                     detail::alpha_grid,
                     [](const Params &p, const VerifyOptions &o) { return check_main_theorem(param(p, "alpha"), o); },
                     std::nullopt});
        r.push_back({"watson", "Watson's transformation of omega(q) and f(q1^2)", {"alpha"}, detail::alpha_grid,
                     [](const Params &p, const VerifyOptions &o) { return check_watson(param(p, "alpha"), o); },
                     std::nullopt});
        r.push_back({"d5-decomposition", "D5 = 2 h1 - [(q^2;q^2)_inf/(q)_inf]^2 omega", {"q"}, detail::q_grid,
                     [](const Params &p, const VerifyOptions &o) {
                         return check_d5_decomposition(Nome::from_q(param(p, "q")), o);
                     },
                     std::nullopt});
        r.push_back({"d5-decomposition-exact", "the decomposition on integer coefficients", {"order"},
                     [] { return std::vector<Params>{{{"order", Complex(50)}}}; },
                     [](const Params &p, const VerifyOptions &) {
                         const long order = detail::integer_param(p, "order");
                         if (order < 1) {
                             throw DomainError("order must be >= 1");
                         }
                         return check_d5_decomposition_exact(static_cast<std::size_t>(order));
                     },
                     0.0});
        for (FunctionTag tag : {FunctionTag::d5, FunctionTag::omega, FunctionTag::f, FunctionTag::h1, FunctionTag::h2}) {
            r.push_back({"representations-" + std::string(tag_name(tag)),
                         "agreement of every representation of " + std::string(tag_name(tag)), {"q"}, detail::q_grid,
                         [tag](const Params &p, const VerifyOptions &o) {
                             return check_representations(tag, Nome::from_q(param(p, "q")), o);
                         },
                         std::nullopt});
        }
        r.push_back({"qhyper", "q-hypergeometric transformation on ten admissible tuples", {}, detail::qhyper_grid,
                     [](const Params &p, const VerifyOptions &o) {
                         return check_qhyper(param(p, "a"), param(p, "b"), param(p, "c"), param(p, "z"),
                                             Nome::from_q(param(p, "q")), o);
                     },
                     std::nullopt});
        r.push_back({"jacobi-triple-product", "sum_n z^n q^{n^2} vs its product form", {}, detail::jacobi_grid,
                     [](const Params &p, const VerifyOptions &o) {
                         return check_jacobi_triple_product(param(p, "z"), param(p, "q"), o);
                     },
                     std::nullopt});
        r.push_back({"wrt-definition", "(e^{2 pi i/N} - 1) tau_N = 2 (1 - 2 D5*(e^{pi i/N}))", {"N"},
                     [] { return detail::n_grid(2, 20); },
                     [](const Params &p, const VerifyOptions &o) {
                         return check_wrt_definition(detail::integer_param(p, "N"), o);
                     },
                     std::nullopt});
        r.push_back({"d5-star-radial-limit", "radial limit of D5* at exp(pi i/N) (empirical)", {"N"},
                     [] { return std::vector<Params>{{{"N", Complex(3)}}, {{"N", Complex(5)}}}; },
                     [](const Params &p, const VerifyOptions &o) {
                         return check_radial_limit(detail::integer_param(p, "N"), o);
                     },
                     radial_limit_tolerance});
        return r;
    }();
    return registry;
}

inline const Identity *find_identity(std::string_view name)
{
    for (const Identity &id : identity_registry()) {
        if (id.name == name) {
            return &id;
        }
    }
    return nullptr;
}

namespace detail
{

// Orders points by parameter name, then real part, then imaginary part.
inline bool params_less(const Params &a, const Params &b)
{
    auto ia = a.begin();
    auto ib = b.begin();
    for (; ia != a.end() && ib != b.end(); ++ia, ++ib) {
        if (ia->first != ib->first) {
            return ia->first < ib->first;
        }
        if (!(ia->second.real() == ib->second.real())) {
            return ia->second.real() < ib->second.real();
        }
        if (!(ia->second.imag() == ib->second.imag())) {
            return ia->second.imag() < ib->second.imag();
        }
    }
    return a.size() < b.size();
}

} // namespace detail

// Runs an identity over a grid; reports come back sorted by parameter.
// With opts.parallel every point runs on its own thread at the caller's
// working precision.
inline std::vector<IdentityReport> run_identity(const Identity &id, const std::vector<Params> &grid,
                                                VerifyOptions opts = {})
{
    if (id.fixed_tolerance) {
        opts.tolerance = *id.fixed_tolerance;
    }
    std::vector<IdentityReport> out;
    if (opts.parallel) {
        const long bits = working_precision();
        std::vector<std::future<IdentityReport>> jobs;
        for (const Params &p : grid) {
            jobs.push_back(std::async(std::launch::async, [&id, p, opts, bits] {
                PrecisionScope scope(bits);
                return id.run(p, opts);
            }));
        }
        for (auto &j : jobs) {
            out.push_back(j.get());
        }
    } else {
        for (const Params &p : grid) {
            out.push_back(id.run(p, opts));
        }
    }
    std::stable_sort(out.begin(), out.end(),
                     [](const IdentityReport &a, const IdentityReport &b) { return detail::params_less(a.params, b.params); });
    return out;
}

inline std::vector<IdentityReport> run_identity(const Identity &id, const VerifyOptions &opts = {})
{
    return run_identity(id, id.canonical_grid(), opts);
}

// Serialization

inline nlohmann::json complex_to_json(const Complex &z)
{
    return nlohmann::json::array({z.real().to_double(), z.imag().to_double()});
}

// {"identity", "params": {name: [re, im]}, "lhs", "rhs", "abs_residual", "rel_residual", "passed"}
inline nlohmann::json to_json(const IdentityReport &r)
{
    nlohmann::json params = nlohmann::json::object();
    for (const auto &[name, value] : r.params) {
        params[name] = complex_to_json(value);
    }
    return {{"identity", r.identity},
            {"params", std::move(params)},
            {"lhs", complex_to_json(r.lhs)},
            {"rhs", complex_to_json(r.rhs)},
            {"abs_residual", r.abs_residual},
            {"rel_residual", r.rel_residual},
            {"passed", r.passed}};
}

inline std::string format_complex(const Complex &z, int digits = 20)
{
    return z.to_string(digits);
}

// One line per report for terminal output.
inline std::string to_text(const IdentityReport &r)
{
    std::ostringstream os;
    os << (r.passed ? "PASS " : "FAIL ") << r.identity << " [";
    bool first = true;
    for (const auto &[name, value] : r.params) {
        os << (first ? "" : ", ") << name << "=" << value.to_string(6);
        first = false;
    }
    os << "] rel_residual=" << Real(r.rel_residual).to_string(3) << " abs_residual=" << Real(r.abs_residual).to_string(3)
       << " tol=" << Real(r.tolerance).to_string(2);
    return os.str();
}

// CSV header plus one "N,re,im" row per entry, tau printed with 30 decimals.
inline std::string wrt_csv(const std::vector<WrtEntry> &rows)
{
    std::ostringstream os;
    os << "N,re_tau,im_tau\n";
    for (const WrtEntry &e : rows) {
        os << e.N << ',' << e.tau.real().to_fixed(30) << ',' << e.tau.imag().to_fixed(30) << '\n';
    }
    return os.str();
}

inline nlohmann::json wrt_json(const std::vector<WrtEntry> &rows)
{
    nlohmann::json out = nlohmann::json::array();
    for (const WrtEntry &e : rows) {
        out.push_back({{"N", e.N}, {"tau", {e.tau.real().to_fixed(30), e.tau.imag().to_fixed(30)}}});
    }
    return out;
}

} // namespace mockq

#endif
