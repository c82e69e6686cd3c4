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

#ifndef MOCKQ_TESTS_SUPPORT_HPP
#define MOCKQ_TESTS_SUPPORT_HPP

#include <cmath>
#include <complex>
#include <cstdint>
#include <random>
#include <vector>

#include <mockq/complex.hpp>

namespace mockq::testing
{

using cld = std::complex<long double>;

inline cld to_cld(const Complex &z)
{
    return {static_cast<long double>(z.real().to_double()), static_cast<long double>(z.imag().to_double())};
}

inline double rel_diff(const Complex &a, const Complex &b)
{
    const double scale = std::max(magnitude(a), magnitude(b));
    return scale == 0.0 ? 0.0 : magnitude(a - b) / scale;
}

inline double rel_diff(const Complex &a, cld b)
{
    const double scale = std::max<double>(magnitude(a), static_cast<double>(std::abs(b)));
    const cld d = to_cld(a) - b;
    return scale == 0.0 ? 0.0 : static_cast<double>(std::abs(d)) / scale;
}

// Uniform point in the disk of the given radius.
inline Complex disk_point(std::mt19937_64 &gen, double radius)
{
    std::uniform_real_distribution<double> u(0.0, 1.0);
    const double r = radius * std::sqrt(u(gen));
    const double th = 2.0 * M_PI * u(gen);
    return Complex(r * std::cos(th), r * std::sin(th));
}

// Dense integer polynomials truncated at a fixed order. Division by
// 1 - c q^m is done by multiplying with the geometric series
// sum_k c^k q^{mk}; nothing here shares code with the library pipelines.
struct Poly {
    std::vector<std::int64_t> c;

    explicit Poly(std::size_t order, std::int64_t c0 = 0) : c(order, 0)
    {
        if (order > 0) {
            c[0] = c0;
        }
    }

    std::size_t order() const
    {
        return c.size();
    }

    Poly operator*(const Poly &o) const
    {
        Poly r(order());
        for (std::size_t i = 0; i < order(); ++i) {
            if (c[i] == 0) {
                continue;
            }
            for (std::size_t j = 0; i + j < order(); ++j) {
                r.c[i + j] += c[i] * o.c[j];
            }
        }
        return r;
    }

    Poly &operator+=(const Poly &o)
    {
        for (std::size_t i = 0; i < order(); ++i) {
            c[i] += o.c[i];
        }
        return *this;
    }

    Poly &operator*=(std::int64_t k)
    {
        for (auto &x : c) {
            x *= k;
        }
        return *this;
    }

    Poly shifted(std::size_t k) const
    {
        Poly r(order());
        for (std::size_t i = 0; i + k < order(); ++i) {
            r.c[i + k] = c[i];
        }
        return r;
    }
};

// 1 - s q^m
inline Poly binomial(std::size_t order, std::int64_t s, std::size_t m)
{
    Poly p(order, 1);
    if (m < order) {
        p.c[m] -= s;
    }
    return p;
}

// 1 / (1 - s q^m), m >= 1
inline Poly geometric(std::size_t order, std::int64_t s, std::size_t m)
{
    Poly p(order);
    std::int64_t pw = 1;
    for (std::size_t e = 0; e < order; e += m) {
        p.c[e] = pw;
        pw *= s;
    }
    return p;
}

// (s q^a; q^step)_n
inline Poly pochhammer(std::size_t order, std::int64_t s, std::size_t a, std::size_t step, std::size_t n)
{
    Poly p(order, 1);
    for (std::size_t k = 0; k < n; ++k) {
        p = p * binomial(order, s, a + k * step);
    }
    return p;
}

// 1 / (s q^a; q^step)_n, a >= 1
inline Poly inverse_pochhammer(std::size_t order, std::int64_t s, std::size_t a, std::size_t step, std::size_t n)
{
    Poly p(order, 1);
    for (std::size_t k = 0; k < n; ++k) {
        p = p * geometric(order, s, a + k * step);
    }
    return p;
}

} // namespace mockq::testing

#endif
