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

#ifndef MOCKQ_REAL_HPP
#define MOCKQ_REAL_HPP

#include <cmath>
#include <concepts>
#include <cstdio>
#include <string>
#include <string_view>
#include <utility>

#include <gmpxx.h>
#include <mpfr.h>

#include <mockq/errors.hpp>

namespace mockq
{

inline constexpr long default_precision_bits = 128;

namespace detail
{

inline long &thread_precision() noexcept
{
    thread_local long bits = default_precision_bits;
    return bits;
}

} // namespace detail

// Precision (in bits) given to every Real created on the calling thread.
inline long working_precision() noexcept
{
    return detail::thread_precision();
}

// Sets the working precision of the calling thread for the lifetime of the
// scope. Worker threads start at default_precision_bits and must open their
// own scope.
class PrecisionScope
{
public:
    explicit PrecisionScope(long bits) : saved_(working_precision())
    {
        if (bits < MPFR_PREC_MIN || bits > 1L << 20) {
            throw DomainError("precision must be between " + std::to_string(MPFR_PREC_MIN) + " and 2^20 bits");
        }
        detail::thread_precision() = bits;
    }
    ~PrecisionScope()
    {
        detail::thread_precision() = saved_;
    }
    PrecisionScope(const PrecisionScope &) = delete;
    PrecisionScope &operator=(const PrecisionScope &) = delete;

private:
    long saved_;
};

// Unit roundoff 2^(1-P) of the working precision, as a double (0 once it
// underflows).
inline double unit_roundoff() noexcept
{
    return std::ldexp(1.0, static_cast<int>(1 - working_precision()));
}

// Binary floating point number with an explicit MPFR precision. Results of
// arithmetic are rounded to the working precision of the calling thread;
// copies keep the precision of their source.
class Real
{
public:
    Real()
    {
        mpfr_init2(v_, working_precision());
        mpfr_set_zero(v_, 1);
    }
    Real(double x)
    {
        mpfr_init2(v_, working_precision());
        mpfr_set_d(v_, x, MPFR_RNDN);
    }
    template <std::signed_integral I>
    Real(I x)
    {
        mpfr_init2(v_, working_precision());
        mpfr_set_si(v_, static_cast<long>(x), MPFR_RNDN);
    }
    template <std::unsigned_integral I>
    Real(I x)
    {
        mpfr_init2(v_, working_precision());
        mpfr_set_ui(v_, static_cast<unsigned long>(x), MPFR_RNDN);
    }
    explicit Real(const mpz_class &z)
    {
        mpfr_init2(v_, working_precision());
        mpfr_set_z(v_, z.get_mpz_t(), MPFR_RNDN);
    }
    // Decimal (or "inf"/"nan") literal, correctly rounded.
    explicit Real(std::string_view text)
    {
        mpfr_init2(v_, working_precision());
        const std::string s(text);
        char *end = nullptr;
        mpfr_strtofr(v_, s.c_str(), &end, 10, MPFR_RNDN);
        if (s.empty() || end != s.c_str() + s.size()) {
            mpfr_clear(v_);
            throw DomainError("not a number: '" + s + "'");
        }
    }

    Real(const Real &o)
    {
        mpfr_init2(v_, mpfr_get_prec(o.v_));
        mpfr_set(v_, o.v_, MPFR_RNDN);
    }
    Real(Real &&o) noexcept
    {
        mpfr_init2(v_, MPFR_PREC_MIN);
        mpfr_swap(v_, o.v_);
    }
    Real &operator=(const Real &o)
    {
        if (this != &o) {
            mpfr_set_prec(v_, mpfr_get_prec(o.v_));
            mpfr_set(v_, o.v_, MPFR_RNDN);
        }
        return *this;
    }
    Real &operator=(Real &&o) noexcept
    {
        mpfr_swap(v_, o.v_);
        return *this;
    }
    ~Real()
    {
        mpfr_clear(v_);
    }

    mpfr_srcptr get() const noexcept
    {
        return v_;
    }
    mpfr_ptr get() noexcept
    {
        return v_;
    }
    long precision() const noexcept
    {
        return static_cast<long>(mpfr_get_prec(v_));
    }

    double to_double() const noexcept
    {
        return mpfr_get_d(v_, MPFR_RNDN);
    }
    bool is_zero() const noexcept
    {
        return mpfr_zero_p(v_) != 0;
    }
    bool is_finite() const noexcept
    {
        return mpfr_number_p(v_) != 0;
    }
    int sign() const noexcept
    {
        return mpfr_sgn(v_);
    }

    // Scientific notation with `digits` significant digits.
    std::string to_string(int digits = 20) const
    {
        return format("%.*Re", digits - 1);
    }
    // Fixed notation with `decimals` digits after the point; a value that
    // rounds to zero prints without a minus sign.
    std::string to_fixed(int decimals) const
    {
        std::string s = format("%.*Rf", decimals);
        if (!s.empty() && s.front() == '-' && s.find_first_not_of("-0.") == std::string::npos) {
            s.erase(0, 1);
        }
        return s;
    }

    static Real pi()
    {
        Real r;
        mpfr_const_pi(r.v_, MPFR_RNDN);
        return r;
    }

    Real operator-() const
    {
        Real r;
        mpfr_neg(r.v_, v_, MPFR_RNDN);
        return r;
    }
    Real &operator+=(const Real &o)
    {
        return *this = *this + o;
    }
    Real &operator-=(const Real &o)
    {
        return *this = *this - o;
    }
    Real &operator*=(const Real &o)
    {
        return *this = *this * o;
    }
    Real &operator/=(const Real &o)
    {
        return *this = *this / o;
    }

    friend Real operator+(const Real &a, const Real &b)
    {
        Real r;
        mpfr_add(r.v_, a.v_, b.v_, MPFR_RNDN);
        return r;
    }
    friend Real operator-(const Real &a, const Real &b)
    {
        Real r;
        mpfr_sub(r.v_, a.v_, b.v_, MPFR_RNDN);
        return r;
    }
    friend Real operator*(const Real &a, const Real &b)
    {
        Real r;
        mpfr_mul(r.v_, a.v_, b.v_, MPFR_RNDN);
        return r;
    }
    friend Real operator/(const Real &a, const Real &b)
    {
        Real r;
        mpfr_div(r.v_, a.v_, b.v_, MPFR_RNDN);
        return r;
    }

    friend bool operator==(const Real &a, const Real &b)
    {
        return mpfr_equal_p(a.v_, b.v_) != 0;
    }
    friend bool operator<(const Real &a, const Real &b)
    {
        return mpfr_less_p(a.v_, b.v_) != 0;
    }
    friend bool operator>(const Real &a, const Real &b)
    {
        return b < a;
    }
    friend bool operator<=(const Real &a, const Real &b)
    {
        return mpfr_lessequal_p(a.v_, b.v_) != 0;
    }
    friend bool operator>=(const Real &a, const Real &b)
    {
        return b <= a;
    }

private:
    using unary_fn = int (*)(mpfr_ptr, mpfr_srcptr, mpfr_rnd_t);

    static Real apply(unary_fn f, const Real &x)
    {
        Real r;
        f(r.v_, x.v_, MPFR_RNDN);
        return r;
    }

    std::string format(const char *fmt, int digits) const
    {
        char *buf = nullptr;
        if (mpfr_asprintf(&buf, fmt, digits, v_) < 0) {
            throw Error("mpfr_asprintf failed");
        }
        std::string s(buf);
        mpfr_free_str(buf);
        return s;
    }

    friend Real abs(const Real &x)
    {
        return apply(mpfr_abs, x);
    }
    friend Real sqrt(const Real &x)
    {
        return apply(mpfr_sqrt, x);
    }
    friend Real exp(const Real &x)
    {
        return apply(mpfr_exp, x);
    }
    friend Real log(const Real &x)
    {
        return apply(mpfr_log, x);
    }
    friend Real sin(const Real &x)
    {
        return apply(mpfr_sin, x);
    }
    friend Real cos(const Real &x)
    {
        return apply(mpfr_cos, x);
    }
    friend Real sinh(const Real &x)
    {
        return apply(mpfr_sinh, x);
    }
    friend Real cosh(const Real &x)
    {
        return apply(mpfr_cosh, x);
    }
    friend Real atan2(const Real &y, const Real &x)
    {
        Real r;
        mpfr_atan2(r.v_, y.v_, x.v_, MPFR_RNDN);
        return r;
    }
    friend Real hypot(const Real &x, const Real &y)
    {
        Real r;
        mpfr_hypot(r.v_, x.v_, y.v_, MPFR_RNDN);
        return r;
    }
    friend Real pow(const Real &x, long n)
    {
        Real r;
        mpfr_pow_si(r.v_, x.v_, n, MPFR_RNDN);
        return r;
    }
    // x * 2^e.
    friend Real ldexp(const Real &x, long e)
    {
        Real r;
        mpfr_mul_2si(r.v_, x.v_, e, MPFR_RNDN);
        return r;
    }

    mpfr_t v_;
};

} // namespace mockq

#endif
