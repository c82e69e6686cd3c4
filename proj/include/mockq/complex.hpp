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

#ifndef MOCKQ_COMPLEX_HPP
#define MOCKQ_COMPLEX_HPP

#include <complex>
#include <concepts>
#include <string>
#include <utility>

#include <mockq/real.hpp>

namespace mockq
{

// Complex number over Real; the scalar type of every numeric routine.
// Branch cuts follow the principal branch: arg in (-pi, pi].
class Complex
{
public:
    Complex() = default;
    Complex(Real re) : re_(std::move(re)) {}
    Complex(Real re, Real im) : re_(std::move(re)), im_(std::move(im)) {}
    Complex(double re, double im = 0.0) : re_(re), im_(im) {}
    template <std::integral I>
    Complex(I re) : re_(re)
    {
    }
    explicit Complex(std::complex<double> z) : re_(z.real()), im_(z.imag()) {}

    const Real &real() const noexcept
    {
        return re_;
    }
    const Real &imag() const noexcept
    {
        return im_;
    }

    bool is_zero() const noexcept
    {
        return re_.is_zero() && im_.is_zero();
    }
    bool is_finite() const noexcept
    {
        return re_.is_finite() && im_.is_finite();
    }
    std::complex<double> to_std() const noexcept
    {
        return {re_.to_double(), im_.to_double()};
    }
    std::string to_string(int digits = 20) const
    {
        return re_.to_string(digits) + (im_.sign() < 0 ? " - " : " + ") + abs(im_).to_string(digits) + "i";
    }

    Complex operator-() const
    {
        return {-re_, -im_};
    }
    Complex &operator+=(const Complex &o)
    {
        return *this = *this + o;
    }
    Complex &operator-=(const Complex &o)
    {
        return *this = *this - o;
    }
    Complex &operator*=(const Complex &o)
    {
        return *this = *this * o;
    }
    Complex &operator/=(const Complex &o)
    {
        return *this = *this / o;
    }

    friend Complex operator+(const Complex &a, const Complex &b)
    {
        return {a.re_ + b.re_, a.im_ + b.im_};
    }
    friend Complex operator-(const Complex &a, const Complex &b)
    {
        return {a.re_ - b.re_, a.im_ - b.im_};
    }
    friend Complex operator*(const Complex &a, const Complex &b)
    {
        return {a.re_ * b.re_ - a.im_ * b.im_, a.re_ * b.im_ + a.im_ * b.re_};
    }
    friend Complex operator/(const Complex &a, const Complex &b)
    {
        const Real d = b.re_ * b.re_ + b.im_ * b.im_;
        return {(a.re_ * b.re_ + a.im_ * b.im_) / d, (a.im_ * b.re_ - a.re_ * b.im_) / d};
    }
    friend bool operator==(const Complex &a, const Complex &b)
    {
        return a.re_ == b.re_ && a.im_ == b.im_;
    }

    friend Real abs(const Complex &z)
    {
        return hypot(z.re_, z.im_);
    }
    friend Real norm(const Complex &z)
    {
        return z.re_ * z.re_ + z.im_ * z.im_;
    }
    friend Real arg(const Complex &z)
    {
        Real a = atan2(z.im_, z.re_);
        // atan2(-0, x<0) gives -pi; the principal branch includes +pi only.
        if (a == -Real::pi()) {
            a = -a;
        }
        return a;
    }
    friend Complex conj(const Complex &z)
    {
        return {z.re_, -z.im_};
    }
    friend Complex exp(const Complex &z)
    {
        const Real m = exp(z.re_);
        return {m * cos(z.im_), m * sin(z.im_)};
    }
    friend Complex log(const Complex &z)
    {
        return {log(abs(z)), arg(z)};
    }
    friend Complex sqrt(const Complex &z)
    {
        if (z.is_zero()) {
            return {};
        }
        const Real r = sqrt(abs(z));
        const Real t = ldexp(arg(z), -1);
        return {r * cos(t), r * sin(t)};
    }
    friend Complex cosh(const Complex &z)
    {
        return {cosh(z.re_) * cos(z.im_), sinh(z.re_) * sin(z.im_)};
    }
    friend Complex sinh(const Complex &z)
    {
        return {sinh(z.re_) * cos(z.im_), cosh(z.re_) * sin(z.im_)};
    }
    // Integer power by repeated squaring; negative n inverts.
    friend Complex pow(const Complex &z, long n)
    {
        Complex base = n < 0 ? Complex(1) / z : z;
        unsigned long e = n < 0 ? static_cast<unsigned long>(-(n + 1)) + 1 : static_cast<unsigned long>(n);
        Complex r(1);
        while (e != 0) {
            if (e & 1) {
                r *= base;
            }
            e >>= 1;
            if (e != 0) {
                base *= base;
            }
        }
        return r;
    }

private:
    Real re_;
    Real im_;
};

// r * e^{i theta}
inline Complex polar(const Real &r, const Real &theta)
{
    return {r * cos(theta), r * sin(theta)};
}

// z * 2^e
inline Complex ldexp(const Complex &z, long e)
{
    return {ldexp(z.real(), e), ldexp(z.imag(), e)};
}

// Magnitude as a double; 0 on underflow.
inline double magnitude(const Complex &z)
{
    return abs(z).to_double();
}

} // namespace mockq

#endif
