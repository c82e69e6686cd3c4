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

#ifndef MOCKQ_NUMKERNEL_HPP
#define MOCKQ_NUMKERNEL_HPP

// Numeric kernel: nomes, q-Pochhammer symbols, theta sums and the summation
// engines shared by every q-series in the library.
//
// Truncated sums carry a tail bound. For a one-sided series the caller
// supplies ratio(n) >= |t_{k+1} / t_k| for all k >= n, nonincreasing in n;
// once ratio(n) < 1 the tail after t_n is at most |t_n| r / (1 - r). The
// bound is valid for every |q| < 1, but evaluation refuses |q| > safe_radius
// unless EvalOptions::allow_unsafe_radius is set, in which case the sum stops
// on a last-term heuristic and the result is flagged Bound::heuristic.

#include <algorithm>
#include <cfloat>
#include <cmath>
#include <cstddef>
#include <functional>
#include <optional>
#include <string>

#include <mockq/complex.hpp>
#include <mockq/errors.hpp>
#include <mockq/real.hpp>

namespace mockq
{

inline constexpr double safe_radius = 0.95;

// How err_estimate was obtained.
enum class Bound {
    exact,     // finite computation, only rounding error
    geometric, // rigorous geometric tail bound
    heuristic, // last-term magnitude (beyond the safe radius)
};

inline const char *to_string(Bound b)
{
    switch (b) {
        case Bound::exact:
            return "exact";
        case Bound::geometric:
            return "geometric";
        case Bound::heuristic:
            return "heuristic";
    }
    return "?";
}

struct EvalResult {
    Complex value;
    double err_estimate = 0.0;
    std::size_t terms_used = 0;
    Bound bound = Bound::exact;
};

struct EvalOptions {
    // Relative tolerance for truncating sums and products.
    double tol = 1e-20;
    std::size_t max_terms = 200000;
    bool allow_unsafe_radius = false;
};

// A point q with |q| < 1, optionally generated as q = exp(-alpha) together
// with its dual nome q1 = exp(-pi^2 / alpha).
class Nome
{
public:
    static Nome from_q(Complex q)
    {
        if (!(abs(q) < Real(1))) {
            throw DomainError("|q| must be < 1 (got |q| = " + abs(q).to_string(6) + ")");
        }
        return Nome(std::move(q), std::nullopt, std::nullopt);
    }

    static Nome from_alpha(const Complex &alpha)
    {
        if (!(alpha.real() > Real(0))) {
            throw DomainError("Re(alpha) must be > 0 (got " + alpha.real().to_string(6) + ")");
        }
        const Real pi = Real::pi();
        Complex q = exp(-alpha);
        Complex q1 = exp(-(Complex(pi * pi) / alpha));
        return Nome(std::move(q), alpha, std::move(q1));
    }

    const Complex &q() const noexcept
    {
        return q_;
    }
    const std::optional<Complex> &alpha() const noexcept
    {
        return alpha_;
    }
    const std::optional<Complex> &dual() const noexcept
    {
        return q1_;
    }
    double modulus() const
    {
        return magnitude(q_);
    }

private:
    Nome(Complex q, std::optional<Complex> alpha, std::optional<Complex> q1)
        : q_(std::move(q)), alpha_(std::move(alpha)), q1_(std::move(q1))
    {
    }

    Complex q_;
    std::optional<Complex> alpha_;
    std::optional<Complex> q1_;
};

// q = exp(-alpha), q1 = exp(-pi^2/alpha); requires Re(alpha) > 0.
inline Nome nome_pair(const Complex &alpha)
{
    return Nome::from_alpha(alpha);
}

namespace detail
{

inline double checked_radius(const Complex &q, const EvalOptions &opts)
{
    if (!(abs(q) < Real(1))) {
        throw DomainError("|q| must be < 1 (got |q| = " + abs(q).to_string(6) + ")");
    }
    const double rho = magnitude(q);
    if (rho > safe_radius && !opts.allow_unsafe_radius) {
        throw DomainError("|q| = " + std::to_string(rho) + " exceeds the safe radius 0.95");
    }
    return rho;
}

inline bool unsafe(double rho)
{
    return rho > safe_radius;
}

// 1 / x, refusing values within working precision of zero.
inline Complex checked_inverse(const Complex &x, const char *what)
{
    if (magnitude(x) <= std::ldexp(1.0, static_cast<int>(-working_precision() / 2))) {
        throw PoleError(std::string("vanishing denominator in ") + what);
    }
    return Complex(1) / x;
}

inline double rounding_bound(double weighted, std::size_t n, double scale)
{
    return 16.0 * unit_roundoff() * (weighted + static_cast<double>(n) * scale);
}

// Sum t_0 + t_1 + ... with t_{n+1} = next(n, t_n). See the file comment for
// the contract on ratio.
template <class Next, class Ratio>
EvalResult sum_series(Complex term, Next next, Ratio ratio, double rho, const EvalOptions &opts, const char *what)
{
    const bool heuristic = unsafe(rho);
    Complex sum = term;
    double weighted = magnitude(term);
    double recent = 0.0;
    int small_run = 0;
    std::size_t n = 0;
    for (;;) {
        const double tn = magnitude(term);
        const double scale = magnitude(sum);
        if (!heuristic) {
            const double r = ratio(n);
            if (tn == 0.0 && r < 1.0) {
                return {sum, rounding_bound(weighted, n + 1, scale), n + 1, Bound::geometric};
            }
            if (r < 1.0) {
                const double tail = tn * r / (1.0 - r);
                if (tail <= opts.tol * scale) {
                    return {sum, tail + rounding_bound(weighted, n + 1, scale), n + 1, Bound::geometric};
                }
            }
        } else {
            recent = std::max(recent, tn);
            small_run = tn <= opts.tol * scale ? small_run + 1 : 0;
            if (small_run >= 3) {
                return {sum, recent + rounding_bound(weighted, n + 1, scale), n + 1, Bound::heuristic};
            }
            if (small_run == 0) {
                recent = 0.0;
            }
        }
        if (n + 1 >= opts.max_terms) {
            throw NonConvergence(std::string(what) + ": no convergence after " + std::to_string(opts.max_terms) +
                                 " terms");
        }
        term = next(n, term);
        ++n;
        sum += term;
        weighted += static_cast<double>(n + 1) * magnitude(term);
    }
}

// Bilateral sum over n in Z of term(n). pos_ratio(k) bounds |t_{k+1}/t_k| and
// neg_ratio(k) bounds |t_{-k-1}/t_{-k}|, both for all indices >= k. The two
// sides grow in lock-step rounds until both tails are below tol.
template <class Term, class PosRatio, class NegRatio>
EvalResult sum_bilateral(Term term, PosRatio pos_ratio, NegRatio neg_ratio, double rho, const EvalOptions &opts,
                         const char *what)
{
    const bool heuristic = unsafe(rho);
    Complex sum = term(0);
    Complex last_pos = sum;
    Complex last_neg = sum;
    long kp = 0;
    long kn = 0;
    double weighted = magnitude(sum);
    int small_run = 0;
    double recent = 0.0;
    for (;;) {
        const double scale = magnitude(sum);
        const double target = 0.5 * opts.tol * scale;
        auto side_tail = [&](const Complex &last, double r) {
            const double t = magnitude(last);
            if (t == 0.0 && r < 1.0) {
                return 0.0;
            }
            return r < 1.0 ? t * r / (1.0 - r) : HUGE_VAL;
        };
        const std::size_t used = static_cast<std::size_t>(kp + kn + 1);
        if (!heuristic) {
            const double tail_pos = side_tail(last_pos, pos_ratio(kp));
            const double tail_neg = side_tail(last_neg, neg_ratio(kn));
            const bool pos_done = tail_pos <= target;
            const bool neg_done = tail_neg <= target;
            if (pos_done && neg_done) {
                return {sum, tail_pos + tail_neg + rounding_bound(weighted, used, scale), used, Bound::geometric};
            }
            if (used + 2 > opts.max_terms) {
                throw NonConvergence(std::string(what) + ": no convergence after " + std::to_string(opts.max_terms) +
                                     " terms");
            }
            if (!pos_done) {
                last_pos = term(++kp);
                sum += last_pos;
                weighted += static_cast<double>(kp + 1) * magnitude(last_pos);
            }
            if (!neg_done) {
                last_neg = term(-(++kn));
                sum += last_neg;
                weighted += static_cast<double>(kn + 1) * magnitude(last_neg);
            }
        } else {
            const double t = std::max(magnitude(last_pos), magnitude(last_neg));
            recent = std::max(recent, t);
            small_run = (kp > 0 && t <= target) ? small_run + 1 : 0;
            if (small_run >= 3) {
                return {sum, 2.0 * recent + rounding_bound(weighted, used, scale), used, Bound::heuristic};
            }
            if (small_run == 0) {
                recent = 0.0;
            }
            if (used + 2 > opts.max_terms) {
                throw NonConvergence(std::string(what) + ": no convergence after " + std::to_string(opts.max_terms) +
                                     " terms");
            }
            last_pos = term(++kp);
            last_neg = term(-(++kn));
            sum += last_pos;
            sum += last_neg;
            weighted += static_cast<double>(kp + 1) * (magnitude(last_pos) + magnitude(last_neg));
        }
    }
}

inline Bound worse(Bound a, Bound b)
{
    return static_cast<int>(a) > static_cast<int>(b) ? a : b;
}

} // namespace detail

// Arithmetic on EvalResult with first-order error propagation plus a rounding
// allowance for the operation itself.
inline EvalResult operator*(const EvalResult &a, const EvalResult &b)
{
    const double ma = magnitude(a.value);
    const double mb = magnitude(b.value);
    Complex v = a.value * b.value;
    const double err = ma * b.err_estimate + mb * a.err_estimate + a.err_estimate * b.err_estimate +
                       4.0 * unit_roundoff() * ma * mb;
    return {std::move(v), err, a.terms_used + b.terms_used, detail::worse(a.bound, b.bound)};
}

inline EvalResult operator/(const EvalResult &a, const EvalResult &b)
{
    const double mb = magnitude(b.value);
    if (!(b.err_estimate < mb)) {
        throw PoleError("divisor is not separated from zero by its error estimate");
    }
    Complex v = a.value * detail::checked_inverse(b.value, "EvalResult division");
    const double mv = magnitude(v);
    const double err = (a.err_estimate + mv * b.err_estimate) / (mb - b.err_estimate) + 4.0 * unit_roundoff() * mv;
    return {std::move(v), err, a.terms_used + b.terms_used, detail::worse(a.bound, b.bound)};
}

inline EvalResult operator+(const EvalResult &a, const EvalResult &b)
{
    Complex v = a.value + b.value;
    const double err = a.err_estimate + b.err_estimate + 2.0 * unit_roundoff() * magnitude(v);
    return {std::move(v), err, a.terms_used + b.terms_used, detail::worse(a.bound, b.bound)};
}

inline EvalResult operator-(const EvalResult &a, const EvalResult &b)
{
    Complex v = a.value - b.value;
    const double err = a.err_estimate + b.err_estimate + 2.0 * unit_roundoff() * magnitude(v);
    return {std::move(v), err, a.terms_used + b.terms_used, detail::worse(a.bound, b.bound)};
}

// Exact scalar times a result.
inline EvalResult operator*(const Complex &c, const EvalResult &a)
{
    const double mc = magnitude(c);
    Complex v = c * a.value;
    return {std::move(v), mc * a.err_estimate + 2.0 * unit_roundoff() * mc * magnitude(a.value), a.terms_used,
            a.bound};
}

inline EvalResult pow(const EvalResult &a, int n)
{
    EvalResult r{Complex(1), 0.0, 0, Bound::exact};
    for (int i = 0; i < n; ++i) {
        r = r * a;
    }
    r.terms_used = a.terms_used;
    return r;
}

// (a; q)_n = prod_{k=0}^{n-1} (1 - a q^k); the empty product is 1.
inline Complex qpoch_finite(const Complex &a, const Complex &q, std::size_t n)
{
    Complex p(1);
    for (std::size_t k = 0; k < n; ++k) {
        p *= Complex(1) - a * pow(q, static_cast<long>(k));
    }
    return p;
}

// (a; q)_inf. Truncated after K factors once expm1(sum_{k>=K} |a||q|^k) <= tol,
// which bounds the relative size of the omitted factors.
inline EvalResult qpoch_infinite(const Complex &a, const Complex &q, const EvalOptions &opts = {})
{
    const double rho = detail::checked_radius(q, opts);
    const double am = magnitude(a);
    Complex prod(1);
    Complex aqk = a;
    double rk = 1.0;
    for (std::size_t k = 0;; ++k) {
        // rho^k accumulates one rounding per step in double; the factor keeps
        // the bound above the exact value, which it matches to first order
        // for positive real a and q.
        const double tail = am * rk / (1.0 - rho) * (1.0 + 4.0 * DBL_EPSILON * static_cast<double>(k + 4));
        if (tail < 0.5) {
            const double rel = std::expm1(tail);
            if (rel <= opts.tol) {
                const double mp = magnitude(prod);
                return {prod, rel * mp + 8.0 * unit_roundoff() * static_cast<double>(k + 1) * mp, k, Bound::geometric};
            }
        }
        if (k >= opts.max_terms) {
            throw NonConvergence("qpoch_infinite: no convergence after " + std::to_string(opts.max_terms) + " factors");
        }
        prod *= Complex(1) - aqk;
        aqk *= q;
        rk *= rho;
    }
}

// psi(q) = sum_{n>=0} q^{n(n+1)/2}; sum_{n>=0} q^{(2n+1)^2/4} = q^{1/4} psi(q).
inline EvalResult theta_psi(const Complex &q, const EvalOptions &opts = {})
{
    const double rho = detail::checked_radius(q, opts);
    Complex qn = q; // q^{n+1}
    return detail::sum_series(
        Complex(1),
        [&](std::size_t, const Complex &t) {
            Complex next = t * qn;
            qn *= q;
            return next;
        },
        [&](std::size_t n) { return std::pow(rho, static_cast<double>(n + 1)); }, rho, opts, "theta_psi");
}

// [(q;q)_inf]^5 / [(q^2;q^2)_inf]^4
inline EvalResult eta_quotient_correction(const Complex &q, const EvalOptions &opts = {})
{
    detail::checked_radius(q, opts);
    EvalOptions inner = opts;
    inner.tol = opts.tol / 10.0;
    const Complex q2 = q * q;
    const EvalResult p1 = qpoch_infinite(q, q, inner);
    const EvalResult p2 = qpoch_infinite(q2, q2, inner);
    return pow(p1, 5) / pow(p2, 4);
}

// sum_{n in Z} z^n q^{n^2}
inline EvalResult jacobi_theta_sum(const Complex &z, const Complex &q, const EvalOptions &opts = {})
{
    const double rho = detail::checked_radius(q, opts);
    if (z.is_zero()) {
        throw DomainError("z must be nonzero");
    }
    const double zm = magnitude(z);
    const Complex zinv = Complex(1) / z;
    return detail::sum_bilateral(
        [&](long n) {
            const Complex zn = n >= 0 ? pow(z, n) : pow(zinv, -n);
            return zn * pow(q, n * n);
        },
        [&](long k) { return zm * std::pow(rho, static_cast<double>(2 * k + 1)); },
        [&](long k) { return std::pow(rho, static_cast<double>(2 * k + 1)) / zm; }, rho, opts, "jacobi_theta_sum");
}

// (q^2;q^2)_inf (-zq;q^2)_inf (-q/z;q^2)_inf
inline EvalResult jacobi_theta_product(const Complex &z, const Complex &q, const EvalOptions &opts = {})
{
    detail::checked_radius(q, opts);
    if (z.is_zero()) {
        throw DomainError("z must be nonzero");
    }
    EvalOptions inner = opts;
    inner.tol = opts.tol / 4.0;
    const Complex q2 = q * q;
    return qpoch_infinite(q2, q2, inner) * qpoch_infinite(-(z * q), q2, inner) * qpoch_infinite(-(q / z), q2, inner);
}

// |sum_{n in Z} z^n q^{n^2} - (q^2;q^2)_inf (-zq;q^2)_inf (-z^{-1}q;q^2)_inf|,
// both sides evaluated independently at tol/100.
inline double jacobi_triple_product_residual(const Complex &z, const Complex &q, const EvalOptions &opts = {})
{
    EvalOptions inner = opts;
    inner.tol = opts.tol / 100.0;
    const EvalResult sum = jacobi_theta_sum(z, q, inner);
    const EvalResult prod = jacobi_theta_product(z, q, inner);
    return magnitude(sum.value - prod.value);
}

// Shape of an Appell-Lerch type bilateral sum
//   sum_{n in Z} s(n) q^{E(n)} / (1 - sigma q^{L(n)})
// with s(n) = (-1)^n when alternating, else 1; sigma = +1 for "1 - q^L" and
// -1 for "1 + q^L". E must be a quadratic with positive leading coefficient
// and L linear, so that the normalized exponents grow on both sides.
struct LerchShape {
    std::function<long(long)> exponent;
    std::function<long(long)> denom_exponent;
    bool alternating = false;
    int sigma = 1;
};

namespace detail
{

struct LerchTerm {
    int sign;
    long exponent;
    long denom_exponent; // >= 0
};

// Rewrites a negative denominator exponent:
// 1/(1 - s q^{-L}) = -s q^L / (1 - s q^L).
inline LerchTerm normalize(const LerchShape &shape, long n)
{
    int sign = (shape.alternating && (n % 2 != 0)) ? -1 : 1;
    long e = shape.exponent(n);
    long l = shape.denom_exponent(n);
    if (l < 0) {
        sign *= -shape.sigma;
        e += -l;
        l = -l;
    }
    return {sign, e, l};
}

} // namespace detail

inline EvalResult bilateral_lerch_sum(const Complex &q, const LerchShape &shape, const EvalOptions &opts = {})
{
    const double rho = detail::checked_radius(q, opts);
    auto term = [&](long n) {
        const detail::LerchTerm t = detail::normalize(shape, n);
        const Complex qe = pow(q, t.exponent);
        Complex denom = Complex(1) - Complex(shape.sigma) * pow(q, t.denom_exponent);
        Complex v = qe * detail::checked_inverse(denom, "Lerch sum");
        return t.sign < 0 ? -v : v;
    };
    auto ratio = [&, rho](long dir, long k) {
        const detail::LerchTerm a = detail::normalize(shape, dir * k);
        const detail::LerchTerm b = detail::normalize(shape, dir * (k + 1));
        const double num = 1.0 + std::pow(rho, static_cast<double>(a.denom_exponent));
        const double den = 1.0 - std::pow(rho, static_cast<double>(b.denom_exponent));
        if (den <= 0.0) {
            return HUGE_VAL;
        }
        return std::pow(rho, static_cast<double>(b.exponent - a.exponent)) * num / den;
    };
    return detail::sum_bilateral(
        term, [&](long k) { return ratio(1, k); }, [&](long k) { return ratio(-1, k); }, rho, opts, "Lerch sum");
}

} // namespace mockq

#endif
