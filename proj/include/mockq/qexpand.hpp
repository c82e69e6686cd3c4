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

#ifndef MOCKQ_QEXPAND_HPP
#define MOCKQ_QEXPAND_HPP

// Exact truncated power series in q with arbitrary-size integer
// coefficients. Everything here is integer arithmetic; series_eval is the
// only bridge to floating point.

#include <cstddef>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include <gmpxx.h>

#include <mockq/complex.hpp>
#include <mockq/errors.hpp>

namespace mockq::qexpand
{

// Coefficients of q^0 .. q^{order-1}; everything at or above q^order is dropped.
class TruncatedSeries
{
public:
    explicit TruncatedSeries(std::size_t order) : c_(order) {}

    TruncatedSeries(std::size_t order, std::vector<mpz_class> coeffs) : c_(std::move(coeffs))
    {
        c_.resize(order);
    }

    static TruncatedSeries one(std::size_t order)
    {
        return monomial(1, 0, order);
    }

    // c q^e
    static TruncatedSeries monomial(const mpz_class &c, std::size_t e, std::size_t order)
    {
        TruncatedSeries s(order);
        if (e < order) {
            s.c_[e] = c;
        }
        return s;
    }

    std::size_t order() const noexcept
    {
        return c_.size();
    }
    const std::vector<mpz_class> &coeffs() const noexcept
    {
        return c_;
    }
    const mpz_class &operator[](std::size_t k) const
    {
        return c_[k];
    }
    mpz_class &operator[](std::size_t k)
    {
        return c_[k];
    }

    // Smallest exponent with a nonzero coefficient, if any.
    std::optional<std::size_t> min_exponent() const
    {
        for (std::size_t k = 0; k < c_.size(); ++k) {
            if (c_[k] != 0) {
                return k;
            }
        }
        return std::nullopt;
    }

    // Multiplication by q^k.
    TruncatedSeries shifted(std::size_t k) const
    {
        TruncatedSeries s(order());
        for (std::size_t i = 0; i + k < order(); ++i) {
            s.c_[i + k] = c_[i];
        }
        return s;
    }

    // *= (1 + c q^m), O(order).
    TruncatedSeries &mul_binomial(long c, std::size_t m)
    {
        if (m == 0) {
            for (auto &x : c_) {
                x *= (1 + c);
            }
            return *this;
        }
        for (std::size_t k = c_.size(); k-- > m;) {
            c_[k] += c * c_[k - m];
        }
        return *this;
    }

    // /= (1 + c q^m) for m >= 1; exact because the divisor has constant term 1.
    TruncatedSeries &div_binomial(long c, std::size_t m)
    {
        if (m == 0) {
            throw NonUnit("div_binomial needs a positive exponent");
        }
        for (std::size_t k = m; k < c_.size(); ++k) {
            c_[k] -= c * c_[k - m];
        }
        return *this;
    }

    TruncatedSeries operator-() const
    {
        TruncatedSeries s(*this);
        for (auto &x : s.c_) {
            x = -x;
        }
        return s;
    }
    TruncatedSeries &operator+=(const TruncatedSeries &o)
    {
        check_order(o);
        for (std::size_t k = 0; k < c_.size(); ++k) {
            c_[k] += o.c_[k];
        }
        return *this;
    }
    TruncatedSeries &operator-=(const TruncatedSeries &o)
    {
        check_order(o);
        for (std::size_t k = 0; k < c_.size(); ++k) {
            c_[k] -= o.c_[k];
        }
        return *this;
    }
    TruncatedSeries &operator*=(const mpz_class &c)
    {
        for (auto &x : c_) {
            x *= c;
        }
        return *this;
    }

    friend TruncatedSeries operator+(TruncatedSeries a, const TruncatedSeries &b)
    {
        return a += b;
    }
    friend TruncatedSeries operator-(TruncatedSeries a, const TruncatedSeries &b)
    {
        return a -= b;
    }
    friend TruncatedSeries operator*(const mpz_class &c, TruncatedSeries a)
    {
        return a *= c;
    }
    friend bool operator==(const TruncatedSeries &a, const TruncatedSeries &b)
    {
        return a.c_ == b.c_;
    }

    void check_order(const TruncatedSeries &o) const
    {
        if (o.order() != order()) {
            throw OrderMismatch("series orders differ: " + std::to_string(order()) + " vs " +
                                std::to_string(o.order()));
        }
    }

private:
    std::vector<mpz_class> c_;
};

// Exact product, truncated at the common order.
inline TruncatedSeries series_mul(const TruncatedSeries &a, const TruncatedSeries &b)
{
    a.check_order(b);
    const std::size_t n = a.order();
    TruncatedSeries r(n);
    for (std::size_t i = 0; i < n; ++i) {
        if (a[i] == 0) {
            continue;
        }
        for (std::size_t j = 0; i + j < n; ++j) {
            r[i + j] += a[i] * b[j];
        }
    }
    return r;
}

inline TruncatedSeries operator*(const TruncatedSeries &a, const TruncatedSeries &b)
{
    return series_mul(a, b);
}

// Inverse mod q^order of a series with constant term +1 or -1.
inline TruncatedSeries series_inv_unit(const TruncatedSeries &a)
{
    const std::size_t n = a.order();
    if (n == 0) {
        return a;
    }
    const mpz_class &c0 = a[0];
    if (c0 != 1 && c0 != -1) {
        throw NonUnit("constant term must be +1 or -1 (got " + c0.get_str() + ")");
    }
    TruncatedSeries r(n);
    r[0] = c0; // 1/c0 == c0 for c0 = +-1
    for (std::size_t k = 1; k < n; ++k) {
        mpz_class acc = 0;
        for (std::size_t j = 1; j <= k; ++j) {
            if (a[j] != 0) {
                acc += a[j] * r[k - j];
            }
        }
        r[k] = -c0 * acc;
    }
    return r;
}

// Signed monomial c q^j.
struct Monomial {
    long coeff = 1;
    std::size_t exponent = 0;
};

// prod_{k=0}^{n-1} (1 - c q^{j + k step}) mod q^order; n = nullopt means the
// infinite product, which needs j >= 1 to stabilize.
inline TruncatedSeries qpoch_series(Monomial a, std::size_t step, std::optional<std::size_t> n, std::size_t order)
{
    if (step == 0) {
        throw DomainError("qpoch_series: step must be positive");
    }
    if (!n && a.exponent == 0) {
        throw DomainError("qpoch_series: infinite product needs a positive base exponent");
    }
    TruncatedSeries s = TruncatedSeries::one(order);
    for (std::size_t k = 0; !n || k < *n; ++k) {
        const std::size_t e = a.exponent + k * step;
        if (e >= order) {
            break;
        }
        s.mul_binomial(-a.coeff, e);
    }
    return s;
}

// Horner evaluation at the working precision.
inline Complex series_eval(const TruncatedSeries &s, const Complex &q)
{
    Complex v;
    for (std::size_t k = s.order(); k-- > 0;) {
        v = v * q + Complex(Real(s[k]));
    }
    return v;
}

// "[c0, c1, ...]"
inline std::string format_coefficients(const TruncatedSeries &s)
{
    std::ostringstream os;
    os << '[';
    for (std::size_t k = 0; k < s.order(); ++k) {
        os << (k ? ", " : "") << s[k].get_str();
    }
    os << ']';
    return os.str();
}

// Expansions of the functions in the library. Each Eulerian sum is built
// term by term: the summand's rational part is updated with exact binomial
// multiplications/divisions, shifted by its known minimal exponent, and the
// loop ends once that exponent reaches the order.

// sum_{n>=0} (-q)_n / (q;q^2)_{n+1} q^n
inline TruncatedSeries d5(std::size_t order)
{
    TruncatedSeries sum(order);
    TruncatedSeries u = TruncatedSeries::one(order);
    u.div_binomial(-1, 1);
    for (std::size_t n = 0; n < order; ++n) {
        sum += u.shifted(n);
        u.mul_binomial(1, n + 1).div_binomial(-1, 2 * n + 3);
    }
    return sum;
}

// sum_{n>=0} (-1)^n q^{n(n+1)/2} (-q)_n / (q;q^2)_{n+1}
inline TruncatedSeries d5_star(std::size_t order)
{
    TruncatedSeries sum(order);
    TruncatedSeries u = TruncatedSeries::one(order);
    u.div_binomial(-1, 1);
    for (std::size_t n = 0; n * (n + 1) / 2 < order; ++n) {
        const TruncatedSeries t = u.shifted(n * (n + 1) / 2);
        if (n % 2 == 0) {
            sum += t;
        } else {
            sum -= t;
        }
        u.mul_binomial(1, n + 1).div_binomial(-1, 2 * n + 3);
    }
    return sum;
}

// sum_{n>=0} q^{2n(n+1)} / [(q;q^2)_{n+1}]^2
inline TruncatedSeries omega(std::size_t order)
{
    TruncatedSeries sum(order);
    TruncatedSeries v = TruncatedSeries::one(order);
    v.div_binomial(-1, 1).div_binomial(-1, 1);
    for (std::size_t n = 0; 2 * n * (n + 1) < order; ++n) {
        sum += v.shifted(2 * n * (n + 1));
        v.div_binomial(-1, 2 * n + 3).div_binomial(-1, 2 * n + 3);
    }
    return sum;
}

// sum_{n>=0} q^n / (q;q^2)_{n+1}
inline TruncatedSeries omega_alt(std::size_t order)
{
    TruncatedSeries sum(order);
    TruncatedSeries u = TruncatedSeries::one(order);
    u.div_binomial(-1, 1);
    for (std::size_t n = 0; n < order; ++n) {
        sum += u.shifted(n);
        u.div_binomial(-1, 2 * n + 3);
    }
    return sum;
}

// sum_{n>=0} q^{n^2} / [(-q)_n]^2
inline TruncatedSeries f(std::size_t order)
{
    TruncatedSeries sum(order);
    TruncatedSeries w = TruncatedSeries::one(order);
    for (std::size_t n = 0; n * n < order; ++n) {
        sum += w.shifted(n * n);
        w.div_binomial(1, n + 1).div_binomial(1, n + 1);
    }
    return sum;
}

// 2 - sum_{n>=0} (-1)^n q^n / (-q)_n
inline TruncatedSeries f_alt(std::size_t order)
{
    TruncatedSeries sum = mpz_class(2) * TruncatedSeries::one(order);
    TruncatedSeries w = TruncatedSeries::one(order);
    for (std::size_t n = 0; n < order; ++n) {
        const TruncatedSeries t = w.shifted(n);
        if (n % 2 == 0) {
            sum -= t;
        } else {
            sum += t;
        }
        w.div_binomial(1, n + 1);
    }
    return sum;
}

// sum_{n>=0} (-q)_{2n} q^n / [(q;q^2)_{n+1}]^2
inline TruncatedSeries h1(std::size_t order)
{
    TruncatedSeries sum(order);
    TruncatedSeries x = TruncatedSeries::one(order);
    x.div_binomial(-1, 1).div_binomial(-1, 1);
    for (std::size_t n = 0; n < order; ++n) {
        sum += x.shifted(n);
        x.mul_binomial(1, 2 * n + 1).mul_binomial(1, 2 * n + 2);
        x.div_binomial(-1, 2 * n + 3).div_binomial(-1, 2 * n + 3);
    }
    return sum;
}

// sum_{n>=0} (-1)^n (q;q^2)_n q^{n^2} / [(-q^2;q^2)_n]^2
inline TruncatedSeries h2(std::size_t order)
{
    TruncatedSeries sum(order);
    TruncatedSeries y = TruncatedSeries::one(order);
    for (std::size_t n = 0; n * n < order; ++n) {
        const TruncatedSeries t = y.shifted(n * n);
        if (n % 2 == 0) {
            sum += t;
        } else {
            sum -= t;
        }
        y.mul_binomial(-1, 2 * n + 1);
        y.div_binomial(1, 2 * n + 2).div_binomial(1, 2 * n + 2);
    }
    return sum;
}

// [(q;q)_inf]^5 / [(q^2;q^2)_inf]^4
inline TruncatedSeries eta_correction(std::size_t order)
{
    const TruncatedSeries p1 = qpoch_series({1, 1}, 1, std::nullopt, order);
    const TruncatedSeries p2 = qpoch_series({1, 2}, 2, std::nullopt, order);
    const TruncatedSeries p2inv = series_inv_unit(p2);
    TruncatedSeries r = TruncatedSeries::one(order);
    for (int i = 0; i < 5; ++i) {
        r = r * p1;
    }
    for (int i = 0; i < 4; ++i) {
        r = r * p2inv;
    }
    return r;
}

// [(q^2;q^2)_inf / (q)_inf]^2
inline TruncatedSeries omega_factor(std::size_t order)
{
    const TruncatedSeries p1 = qpoch_series({1, 1}, 1, std::nullopt, order);
    const TruncatedSeries p2 = qpoch_series({1, 2}, 2, std::nullopt, order);
    const TruncatedSeries ratio = p2 * series_inv_unit(p1);
    return ratio * ratio;
}

// 2 h1(q) - [(q^2;q^2)_inf / (q)_inf]^2 omega(q)
inline TruncatedSeries d5_decomposition_rhs(std::size_t order)
{
    return mpz_class(2) * h1(order) - omega_factor(order) * omega(order);
}

} // namespace mockq::qexpand

#endif
