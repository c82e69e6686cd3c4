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

#ifndef MOCKQ_MOCKTHETA_HPP
#define MOCKQ_MOCKTHETA_HPP

// D5 and D5*, the third order functions omega and f, and the auxiliary series
// h1 and h2. FunctionId pairs a function with one of its representations;
// `representations` lists which pairs exist.

#include <array>
#include <cmath>
#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <mockq/complex.hpp>
#include <mockq/errors.hpp>
#include <mockq/numkernel.hpp>
#include <mockq/qexpand.hpp>

namespace mockq
{

enum class FunctionTag { d5, d5_star, omega, f, h1, h2 };
enum class Representation { primary_series, alt_series, lerch };

inline constexpr std::array<FunctionTag, 6> all_tags = {FunctionTag::d5,    FunctionTag::d5_star, FunctionTag::omega,
                                                        FunctionTag::f,     FunctionTag::h1,      FunctionTag::h2};

inline std::vector<Representation> representations(FunctionTag tag)
{
    using R = Representation;
    switch (tag) {
        case FunctionTag::d5:
            return {R::primary_series, R::alt_series};
        case FunctionTag::d5_star:
            return {R::primary_series};
        case FunctionTag::omega:
        case FunctionTag::f:
            return {R::primary_series, R::alt_series, R::lerch};
        case FunctionTag::h1:
        case FunctionTag::h2:
            return {R::primary_series, R::lerch};
    }
    return {};
}

inline std::string_view tag_name(FunctionTag tag)
{
    switch (tag) {
        case FunctionTag::d5:
            return "d5";
        case FunctionTag::d5_star:
            return "d5-star";
        case FunctionTag::omega:
            return "omega";
        case FunctionTag::f:
            return "f";
        case FunctionTag::h1:
            return "h1";
        case FunctionTag::h2:
            return "h2";
    }
    return "?";
}

inline std::string_view representation_name(Representation r)
{
    switch (r) {
        case Representation::primary_series:
            return "series";
        case Representation::alt_series:
            return "alt";
        case Representation::lerch:
            return "lerch";
    }
    return "?";
}

inline std::optional<FunctionTag> parse_tag(std::string_view s)
{
    for (FunctionTag t : all_tags) {
        if (tag_name(t) == s) {
            return t;
        }
    }
    return std::nullopt;
}

inline std::optional<Representation> parse_representation(std::string_view s)
{
    for (Representation r : {Representation::primary_series, Representation::alt_series, Representation::lerch}) {
        if (representation_name(r) == s) {
            return r;
        }
    }
    return std::nullopt;
}

// A (function, representation) pair for which a formula exists.
class FunctionId
{
public:
    FunctionId(FunctionTag tag, Representation repr) : tag_(tag), repr_(repr)
    {
        for (Representation r : representations(tag)) {
            if (r == repr) {
                return;
            }
        }
        throw DomainError(std::string(tag_name(tag)) + " has no '" + std::string(representation_name(repr)) +
                          "' representation");
    }

    FunctionTag tag() const noexcept
    {
        return tag_;
    }
    Representation representation() const noexcept
    {
        return repr_;
    }
    std::string name() const
    {
        return std::string(tag_name(tag_)) + "/" + std::string(representation_name(repr_));
    }

    static std::vector<FunctionId> all()
    {
        std::vector<FunctionId> ids;
        for (FunctionTag t : all_tags) {
            for (Representation r : representations(t)) {
                ids.emplace_back(t, r);
            }
        }
        return ids;
    }

    friend bool operator==(const FunctionId &, const FunctionId &) = default;

private:
    FunctionTag tag_;
    Representation repr_;
};

namespace detail
{

inline double rpow(double rho, double e)
{
    return std::pow(rho, e);
}

inline EvalOptions component_options(const EvalOptions &opts)
{
    EvalOptions inner = opts;
    inner.tol = opts.tol / 10.0;
    return inner;
}

} // namespace detail

// sum_{n>=0} (-q)_n / (q;q^2)_{n+1} q^n
inline EvalResult d5_series(const Nome &nome, const EvalOptions &opts = {})
{
    const Complex &q = nome.q();
    const double rho = detail::checked_radius(q, opts);
    Complex qn1 = q; // q^{n+1}
    return detail::sum_series(
        detail::checked_inverse(Complex(1) - q, "d5_series"),
        [&](std::size_t, const Complex &t) {
            const Complex q2n3 = qn1 * qn1 * q;
            Complex next = t * q * (Complex(1) + qn1) * detail::checked_inverse(Complex(1) - q2n3, "d5_series");
            qn1 *= q;
            return next;
        },
        [&](std::size_t n) {
            return rho * (1.0 + detail::rpow(rho, n + 1.0)) / (1.0 - detail::rpow(rho, 2.0 * n + 3.0));
        },
        rho, opts, "d5_series");
}

// [(q;q^2)_inf]^{-2} sum_{n>=0} [(q;q^2)_n]^2 q^{2n}
inline EvalResult d5_alt(const Nome &nome, const EvalOptions &opts = {})
{
    const Complex &q = nome.q();
    const double rho = detail::checked_radius(q, opts);
    const EvalOptions inner = detail::component_options(opts);
    const Complex q2 = q * q;
    Complex q2n1 = q; // q^{2n+1}
    const EvalResult sum = detail::sum_series(
        Complex(1),
        [&](std::size_t, const Complex &t) {
            const Complex f = Complex(1) - q2n1;
            q2n1 *= q2;
            return t * f * f * q2;
        },
        [&](std::size_t n) {
            const double g = 1.0 + detail::rpow(rho, 2.0 * n + 1.0);
            return rho * rho * g * g;
        },
        rho, inner, "d5_alt");
    const EvalResult p = qpoch_infinite(q, q2, inner);
    return sum / (p * p);
}

// Left side of the q-hypergeometric transformation:
// sum_n (a;q^2)_n (b;q)_{2n} / [(q^2;q^2)_n (c;q)_{2n}] z^n
inline EvalResult qhyper_lhs(const Complex &a, const Complex &b, const Complex &c, const Complex &z, const Nome &nome,
                             const EvalOptions &opts = {})
{
    const Complex &q = nome.q();
    const double rho = detail::checked_radius(q, opts);
    if (!(abs(z) < Real(1))) {
        throw DomainError("|z| must be < 1");
    }
    const double am = magnitude(a);
    const double bm = magnitude(b);
    const double cm = magnitude(c);
    const double zm = magnitude(z);
    const Complex q2 = q * q;
    Complex q2n(1); // q^{2n}
    return detail::sum_series(
        Complex(1),
        [&](std::size_t, const Complex &t) {
            const Complex q2n1 = q2n * q;
            const Complex num = (Complex(1) - a * q2n) * (Complex(1) - b * q2n) * (Complex(1) - b * q2n1);
            const Complex den =
                (Complex(1) - q2n * q2) * (Complex(1) - c * q2n) * (Complex(1) - c * q2n1);
            q2n *= q2;
            return t * num * z * detail::checked_inverse(den, "qhyper_lhs");
        },
        [&](std::size_t n) {
            const double r2n = detail::rpow(rho, 2.0 * n);
            const double r2n1 = r2n * rho;
            if (cm * r2n >= 1.0) {
                return HUGE_VAL;
            }
            return (1.0 + am * r2n) * (1.0 + bm * r2n) * (1.0 + bm * r2n1) * zm /
                   ((1.0 - r2n * rho * rho) * (1.0 - cm * r2n) * (1.0 - cm * r2n1));
        },
        rho, opts, "qhyper_lhs");
}

// Right side of the q-hypergeometric transformation:
// (b)_inf (az;q^2)_inf / [(c)_inf (z;q^2)_inf] sum_m (c/b)_m (z;q^2)_m / [(q)_m (az;q^2)_m] b^m.
// (c/b)_m b^m is formed as prod_{k<m} (b - c q^k), so b = 0 is allowed.
inline EvalResult qhyper_rhs(const Complex &a, const Complex &b, const Complex &c, const Complex &z, const Nome &nome,
                             const EvalOptions &opts = {})
{
    const Complex &q = nome.q();
    const double rho = detail::checked_radius(q, opts);
    if (!(abs(z) < Real(1))) {
        throw DomainError("|z| must be < 1");
    }
    if (!(abs(b) < Real(1))) {
        throw DomainError("|b| must be < 1");
    }
    const EvalOptions inner = detail::component_options(opts);
    const Complex az = a * z;
    const double bm = magnitude(b);
    const double cm = magnitude(c);
    const double zm = magnitude(z);
    const double azm = magnitude(az);
    const Complex q2 = q * q;
    Complex qm(1);  // q^m
    Complex q2m(1); // q^{2m}
    const EvalResult sum = detail::sum_series(
        Complex(1),
        [&](std::size_t, const Complex &t) {
            const Complex num = (b - c * qm) * (Complex(1) - z * q2m);
            const Complex den = (Complex(1) - qm * q) * (Complex(1) - az * q2m);
            qm *= q;
            q2m *= q2;
            return t * num * detail::checked_inverse(den, "qhyper_rhs");
        },
        [&](std::size_t m) {
            const double rm = detail::rpow(rho, static_cast<double>(m));
            if (azm * rm * rm >= 1.0) {
                return HUGE_VAL;
            }
            return (bm + cm * rm) * (1.0 + zm * rm * rm) / ((1.0 - rm * rho) * (1.0 - azm * rm * rm));
        },
        rho, inner, "qhyper_rhs");
    const EvalResult pre = qpoch_infinite(b, q, inner) * qpoch_infinite(az, q2, inner) /
                           (qpoch_infinite(c, q, inner) * qpoch_infinite(z, q2, inner));
    return pre * sum;
}

// sum_{n>=0} (-1)^n q^{n(n+1)/2} (-q)_n / (q;q^2)_{n+1}
inline EvalResult d5_star_series(const Nome &nome, const EvalOptions &opts = {})
{
    const Complex &q = nome.q();
    const double rho = detail::checked_radius(q, opts);
    Complex qn1 = q;
    return detail::sum_series(
        detail::checked_inverse(Complex(1) - q, "d5_star_series"),
        [&](std::size_t, const Complex &t) {
            const Complex q2n3 = qn1 * qn1 * q;
            Complex next = -(t * qn1 * (Complex(1) + qn1)) *
                           detail::checked_inverse(Complex(1) - q2n3, "d5_star_series");
            qn1 *= q;
            return next;
        },
        [&](std::size_t n) {
            const double r = detail::rpow(rho, n + 1.0);
            return r * (1.0 + r) / (1.0 - detail::rpow(rho, 2.0 * n + 3.0));
        },
        rho, opts, "d5_star_series");
}

// D5* at q = exp(pi i / N): the summand vanishes for n >= N because (-q)_n
// contains 1 + q^N = 0, so the value is the finite sum over n < N.
inline Complex d5_star_at_root(long N)
{
    if (N < 1) {
        throw DomainError("N must be >= 1");
    }
    const Real theta = Real::pi() / Real(N);
    const Complex q = polar(Real(1), theta);
    Complex t = Complex(1) / (Complex(1) - q);
    Complex sum = t;
    Complex qn1 = q;
    for (long n = 0; n + 1 < N; ++n) {
        const Complex q2n3 = qn1 * qn1 * q;
        t = -(t * qn1 * (Complex(1) + qn1)) / (Complex(1) - q2n3);
        sum += t;
        qn1 *= q;
    }
    return sum;
}

// omega(q) = sum_{n>=0} q^{2n(n+1)} / [(q;q^2)_{n+1}]^2
inline EvalResult omega_series(const Nome &nome, const EvalOptions &opts = {})
{
    const Complex &q = nome.q();
    const double rho = detail::checked_radius(q, opts);
    const Complex q2 = q * q;
    const Complex q4 = q2 * q2;
    Complex q4n4 = q4;  // q^{4(n+1)}
    Complex q2n3 = q2 * q; // q^{2n+3}
    const Complex first = detail::checked_inverse(Complex(1) - q, "omega_series");
    return detail::sum_series(
        first * first,
        [&](std::size_t, const Complex &t) {
            const Complex d = detail::checked_inverse(Complex(1) - q2n3, "omega_series");
            Complex next = t * q4n4 * d * d;
            q4n4 *= q4;
            q2n3 *= q2;
            return next;
        },
        [&](std::size_t n) {
            const double d = 1.0 - detail::rpow(rho, 2.0 * n + 3.0);
            return detail::rpow(rho, 4.0 * n + 4.0) / (d * d);
        },
        rho, opts, "omega_series");
}

// omega(q) = sum_{n>=0} q^n / (q;q^2)_{n+1}
inline EvalResult omega_alt(const Nome &nome, const EvalOptions &opts = {})
{
    const Complex &q = nome.q();
    const double rho = detail::checked_radius(q, opts);
    const Complex q2 = q * q;
    Complex q2n3 = q2 * q;
    return detail::sum_series(
        detail::checked_inverse(Complex(1) - q, "omega_alt"),
        [&](std::size_t, const Complex &t) {
            Complex next = t * q * detail::checked_inverse(Complex(1) - q2n3, "omega_alt");
            q2n3 *= q2;
            return next;
        },
        [&](std::size_t n) { return rho / (1.0 - detail::rpow(rho, 2.0 * n + 3.0)); }, rho, opts, "omega_alt");
}

// f(q) = sum_{n>=0} q^{n^2} / [(-q)_n]^2
inline EvalResult f_series(const Nome &nome, const EvalOptions &opts = {})
{
    const Complex &q = nome.q();
    const double rho = detail::checked_radius(q, opts);
    const Complex q2 = q * q;
    Complex q2n1 = q; // q^{2n+1}
    Complex qn1 = q;  // q^{n+1}
    return detail::sum_series(
        Complex(1),
        [&](std::size_t, const Complex &t) {
            const Complex d = detail::checked_inverse(Complex(1) + qn1, "f_series");
            Complex next = t * q2n1 * d * d;
            q2n1 *= q2;
            qn1 *= q;
            return next;
        },
        [&](std::size_t n) {
            const double d = 1.0 - detail::rpow(rho, n + 1.0);
            return detail::rpow(rho, 2.0 * n + 1.0) / (d * d);
        },
        rho, opts, "f_series");
}

// f(q) = 2 - sum_{n>=0} (-1)^n q^n / (-q)_n
inline EvalResult f_alt(const Nome &nome, const EvalOptions &opts = {})
{
    const Complex &q = nome.q();
    const double rho = detail::checked_radius(q, opts);
    Complex qn1 = q;
    EvalResult sum = detail::sum_series(
        Complex(1),
        [&](std::size_t, const Complex &t) {
            Complex next = -(t * q) * detail::checked_inverse(Complex(1) + qn1, "f_alt");
            qn1 *= q;
            return next;
        },
        [&](std::size_t n) { return rho / (1.0 - detail::rpow(rho, n + 1.0)); }, rho, opts, "f_alt");
    sum.value = Complex(2) - sum.value;
    return sum;
}

// h1(q) = sum_{n>=0} (-q)_{2n} q^n / [(q;q^2)_{n+1}]^2
inline EvalResult h1_series(const Nome &nome, const EvalOptions &opts = {})
{
    const Complex &q = nome.q();
    const double rho = detail::checked_radius(q, opts);
    const Complex q2 = q * q;
    Complex q2n1 = q; // q^{2n+1}
    const Complex first = detail::checked_inverse(Complex(1) - q, "h1_series");
    return detail::sum_series(
        first * first,
        [&](std::size_t, const Complex &t) {
            const Complex q2n2 = q2n1 * q;
            const Complex q2n3 = q2n2 * q;
            const Complex d = detail::checked_inverse(Complex(1) - q2n3, "h1_series");
            Complex next = t * (Complex(1) + q2n1) * (Complex(1) + q2n2) * q * d * d;
            q2n1 *= q2;
            return next;
        },
        [&](std::size_t n) {
            const double d = 1.0 - detail::rpow(rho, 2.0 * n + 3.0);
            return rho * (1.0 + detail::rpow(rho, 2.0 * n + 1.0)) * (1.0 + detail::rpow(rho, 2.0 * n + 2.0)) /
                   (d * d);
        },
        rho, opts, "h1_series");
}

// h2(q) = sum_{n>=0} (-1)^n (q;q^2)_n q^{n^2} / [(-q^2;q^2)_n]^2
inline EvalResult h2_series(const Nome &nome, const EvalOptions &opts = {})
{
    const Complex &q = nome.q();
    const double rho = detail::checked_radius(q, opts);
    const Complex q2 = q * q;
    Complex q2n1 = q;
    return detail::sum_series(
        Complex(1),
        [&](std::size_t, const Complex &t) {
            const Complex q2n2 = q2n1 * q;
            const Complex d = detail::checked_inverse(Complex(1) + q2n2, "h2_series");
            Complex next = -(t * (Complex(1) - q2n1) * q2n1) * d * d;
            q2n1 *= q2;
            return next;
        },
        [&](std::size_t n) {
            const double d = 1.0 - detail::rpow(rho, 2.0 * n + 2.0);
            return detail::rpow(rho, 2.0 * n + 1.0) * (1.0 + detail::rpow(rho, 2.0 * n + 1.0)) / (d * d);
        },
        rho, opts, "h2_series");
}

// (q^2;q^2)_inf omega(q) = sum_n (-1)^n q^{3n(n+1)} / (1 - q^{2n+1})
inline EvalResult lerch_omega(const Nome &nome, const EvalOptions &opts = {})
{
    const Complex &q = nome.q();
    detail::checked_radius(q, opts);
    const EvalOptions inner = detail::component_options(opts);
    const LerchShape shape{[](long n) { return 3 * n * (n + 1); }, [](long n) { return 2 * n + 1; }, true, 1};
    const Complex q2 = q * q;
    return bilateral_lerch_sum(q, shape, inner) / qpoch_infinite(q2, q2, inner);
}

// (q)_inf f(q) = 2 sum_n (-1)^n q^{n(3n+1)/2} / (1 + q^n); the n = 0 term is 1/2.
inline EvalResult lerch_f(const Nome &nome, const EvalOptions &opts = {})
{
    const Complex &q = nome.q();
    detail::checked_radius(q, opts);
    const EvalOptions inner = detail::component_options(opts);
    const LerchShape shape{[](long n) { return n * (3 * n + 1) / 2; }, [](long n) { return n; }, true, -1};
    return Complex(2) * (bilateral_lerch_sum(q, shape, inner) / qpoch_infinite(q, q, inner));
}

// h1(q) = 1/2 (-q)_inf / (q)_inf sum_n (-1)^n q^{n(n+2)} / (1 - q^{2n+1})
inline EvalResult lerch_h1(const Nome &nome, const EvalOptions &opts = {})
{
    const Complex &q = nome.q();
    detail::checked_radius(q, opts);
    const EvalOptions inner = detail::component_options(opts);
    const LerchShape shape{[](long n) { return n * (n + 2); }, [](long n) { return 2 * n + 1; }, true, 1};
    const EvalResult ratio = qpoch_infinite(-q, q, inner) / qpoch_infinite(q, q, inner);
    return Complex(0.5) * (ratio * bilateral_lerch_sum(q, shape, inner));
}

// h2(q) = (q)_inf / [(q^2;q^2)_inf]^2 sum_n q^{n(n+1)/2} / (1 + q^n)
//         + 1/2 [(q)_inf]^5 / [(q^2;q^2)_inf]^4
inline EvalResult lerch_h2(const Nome &nome, const EvalOptions &opts = {})
{
    const Complex &q = nome.q();
    detail::checked_radius(q, opts);
    const EvalOptions inner = detail::component_options(opts);
    const LerchShape shape{[](long n) { return n * (n + 1) / 2; }, [](long n) { return n; }, false, -1};
    const Complex q2 = q * q;
    const EvalResult p2 = qpoch_infinite(q2, q2, inner);
    const EvalResult lead = qpoch_infinite(q, q, inner) / (p2 * p2) * bilateral_lerch_sum(q, shape, inner);
    return lead + Complex(0.5) * eta_quotient_correction(q, inner);
}

inline EvalResult evaluate(const FunctionId &id, const Nome &nome, const EvalOptions &opts = {})
{
    using R = Representation;
    const R r = id.representation();
    switch (id.tag()) {
        case FunctionTag::d5:
            return r == R::primary_series ? d5_series(nome, opts) : d5_alt(nome, opts);
        case FunctionTag::d5_star:
            return d5_star_series(nome, opts);
        case FunctionTag::omega:
            return r == R::primary_series ? omega_series(nome, opts)
                   : r == R::alt_series   ? omega_alt(nome, opts)
                                          : lerch_omega(nome, opts);
        case FunctionTag::f:
            return r == R::primary_series ? f_series(nome, opts)
                   : r == R::alt_series   ? f_alt(nome, opts)
                                          : lerch_f(nome, opts);
        case FunctionTag::h1:
            return r == R::primary_series ? h1_series(nome, opts) : lerch_h1(nome, opts);
        case FunctionTag::h2:
            return r == R::primary_series ? h2_series(nome, opts) : lerch_h2(nome, opts);
    }
    throw DomainError("unknown function");
}

// Exact integer expansion of the primary series.
inline qexpand::TruncatedSeries exact_expansion(FunctionTag tag, std::size_t order)
{
    switch (tag) {
        case FunctionTag::d5:
            return qexpand::d5(order);
        case FunctionTag::d5_star:
            return qexpand::d5_star(order);
        case FunctionTag::omega:
            return qexpand::omega(order);
        case FunctionTag::f:
            return qexpand::f(order);
        case FunctionTag::h1:
            return qexpand::h1(order);
        case FunctionTag::h2:
            return qexpand::h2(order);
    }
    throw DomainError("unknown function");
}

} // namespace mockq

#endif
