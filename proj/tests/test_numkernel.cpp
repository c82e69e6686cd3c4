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

#include <cmath>
#include <complex>
#include <random>
#include <string>

#include <gtest/gtest.h>

#include <mockq/numkernel.hpp>

#include "support.hpp"

namespace
{

using namespace mockq;
using mockq::testing::cld;
using mockq::testing::rel_diff;
using mockq::testing::to_cld;

// Euler's pentagonal number theorem:
// (q;q)_inf = sum_k (-1)^k q^{k(3k-1)/2} over all integers k.
cld pentagonal(cld q)
{
    cld s = 1;
    for (long k = 1; k < 200; ++k) {
        const long double sign = (k % 2 == 0) ? 1.0L : -1.0L;
        s += sign * (std::pow(q, static_cast<long double>(k * (3 * k - 1) / 2)) +
                     std::pow(q, static_cast<long double>(k * (3 * k + 1) / 2)));
    }
    return s;
}

cld brute_theta(cld z, cld q)
{
    cld s = 0;
    for (long n = -80; n <= 80; ++n) {
        s += std::pow(z, static_cast<long double>(n)) * std::pow(q, static_cast<long double>(n * n));
    }
    return s;
}

TEST(NomeTest, RejectsPointsOutsideTheDisk)
{
    try {
        Nome::from_q(Complex(1.5));
        FAIL() << "expected DomainError";
    } catch (const DomainError &e) {
        EXPECT_NE(std::string(e.what()).find("|q| must be < 1"), std::string::npos);
    }
    EXPECT_THROW(Nome::from_q(Complex(0.6, 0.8)), DomainError);
    EXPECT_NO_THROW(Nome::from_q(Complex(0.0)));
}

TEST(NomeTest, AlphaGivesBothNomes)
{
    EXPECT_THROW(Nome::from_alpha(Complex(0.0, 1.0)), DomainError);
    EXPECT_THROW(Nome::from_alpha(Complex(-1.0)), DomainError);
    const Nome n = nome_pair(Complex(1.0));
    EXPECT_LT(magnitude(n.q() - Complex(std::exp(-1.0))), 1e-16);
    ASSERT_TRUE(n.dual().has_value());
    EXPECT_LT(rel_diff(*n.dual(), cld(std::exp(-M_PI * M_PI))), 1e-15);
    // Inversion alpha -> pi^2/alpha swaps the two.
    const Nome m = nome_pair(Complex(Real::pi() * Real::pi()));
    EXPECT_LT(rel_diff(m.q(), *n.dual()), 1e-35);
}

TEST(QPochhammer, FiniteMatchesDirectProduct)
{
    const Complex a(0.4, -0.3);
    const Complex q(0.2, 0.5);
    cld p = 1;
    for (int k = 0; k < 9; ++k) {
        p *= cld(1) - to_cld(a) * std::pow(to_cld(q), static_cast<long double>(k));
    }
    EXPECT_LT(rel_diff(qpoch_finite(a, q, 9), p), 1e-16);
    EXPECT_EQ(qpoch_finite(a, q, 0), Complex(1));
}

TEST(QPochhammer, InfiniteMatchesPentagonalTheorem)
{
    std::mt19937_64 gen(7);
    for (int i = 0; i < 25; ++i) {
        const Complex q = mockq::testing::disk_point(gen, 0.85);
        const EvalResult r = qpoch_infinite(q, q);
        EXPECT_LT(rel_diff(r.value, pentagonal(to_cld(q))), 1e-15) << q.to_string(6);
        EXPECT_EQ(r.bound, Bound::geometric);
    }
}

TEST(QPochhammer, ZeroFactorIsExact)
{
    // (q^{-2}; q)_inf contains the factor 1 - q^{-2} q^2 = 0.
    const Complex q(0.5);
    const EvalResult r = qpoch_infinite(Complex(4), q);
    EXPECT_LT(magnitude(r.value), 1e-30);
}

TEST(QPochhammer, RefusesBeyondSafeRadius)
{
    EXPECT_THROW(qpoch_infinite(Complex(0.5), Complex(0.96)), DomainError);
    EvalOptions o;
    o.allow_unsafe_radius = true;
    o.tol = 1e-12;
    const EvalResult r = qpoch_infinite(Complex(0.5), Complex(0.96), o);
    EXPECT_TRUE(r.value.is_finite());
}

TEST(ErrorEstimates, CoverTheDistanceToAHighPrecisionValue)
{
    // Property: at tol = 1e-20 and 128 bits the reported error covers the
    // difference to the same quantity at 256 bits and tol = 1e-40.
    std::mt19937_64 gen(11);
    for (int i = 0; i < 40; ++i) {
        const Complex q = mockq::testing::disk_point(gen, 0.9);
        const Complex z = mockq::testing::disk_point(gen, 2.0) + Complex(0.1);
        const EvalResult lo_p = qpoch_infinite(z, q);
        const EvalResult lo_s = jacobi_theta_sum(z, q);
        const EvalResult lo_e = eta_quotient_correction(q);
        PrecisionScope s(256);
        const EvalOptions fine{.tol = 1e-40};
        EXPECT_LE(magnitude(lo_p.value - qpoch_infinite(z, q, fine).value), lo_p.err_estimate);
        EXPECT_LE(magnitude(lo_s.value - jacobi_theta_sum(z, q, fine).value), lo_s.err_estimate);
        EXPECT_LE(magnitude(lo_e.value - eta_quotient_correction(q, fine).value), lo_e.err_estimate);
    }
}

TEST(ThetaFunctions, PsiIsTriangularSum)
{
    const Complex q(0.3, 0.2);
    cld s = 0;
    for (int n = 0; n < 60; ++n) {
        s += std::pow(to_cld(q), static_cast<long double>(n * (n + 1) / 2));
    }
    EXPECT_LT(rel_diff(theta_psi(q).value, s), 1e-17);
    // Gauss: psi(q) = (q^2;q^2)_inf / (q;q^2)_inf.
    const Complex q2 = q * q;
    const EvalResult ratio = qpoch_infinite(q2, q2) / qpoch_infinite(q, q2);
    EXPECT_LT(rel_diff(theta_psi(q).value, ratio.value), 1e-19);
}

TEST(ThetaFunctions, EtaQuotientFromPentagonalSums)
{
    const Complex q(-0.4, 0.35);
    const cld p1 = pentagonal(to_cld(q));
    const cld p2 = pentagonal(to_cld(q * q));
    EXPECT_LT(rel_diff(eta_quotient_correction(q).value, std::pow(p1, 5.0L) / std::pow(p2, 4.0L)), 1e-15);
}

TEST(ThetaFunctions, TripleProductAgainstBruteForce)
{
    for (const Complex &z : {Complex(0.5), Complex(-1), Complex(1.2, 0.9)}) {
        for (const Complex &q : {Complex(0.1), Complex(0.5), Complex(0.4, -0.4)}) {
            const cld ref = brute_theta(to_cld(z), to_cld(q));
            EXPECT_LT(rel_diff(jacobi_theta_sum(z, q).value, ref), 1e-16);
            EXPECT_LT(rel_diff(jacobi_theta_product(z, q).value, ref), 1e-16);
            EXPECT_LT(jacobi_triple_product_residual(z, q, {.tol = 1e-28}), 1e-25);
        }
    }
}

TEST(ThetaFunctions, TripleProductVanishesAtMinusOneOverQ)
{
    // z = -1/q kills the factor (-q/z; q^2)_inf.
    const Complex q(0.5);
    const Complex z = Complex(-1) / q;
    EXPECT_LT(magnitude(jacobi_theta_product(z, q).value), 1e-30);
    EXPECT_LT(magnitude(jacobi_theta_sum(z, q).value), 1e-30);
}

TEST(ThetaFunctions, ZeroArgumentRejected)
{
    EXPECT_THROW(jacobi_theta_sum(Complex(0), Complex(0.5)), DomainError);
    EXPECT_THROW(jacobi_theta_product(Complex(0), Complex(0.5)), DomainError);
}

TEST(LerchSums, NormalizationOfNegativeDenominators)
{
    // 1/(1 - q^{-2}) = -q^2/(1 - q^2)
    const LerchShape shape{[](long n) { return n * n; }, [](long n) { return n; }, false, 1};
    const detail::LerchTerm t = detail::normalize(shape, -2);
    EXPECT_EQ(t.sign, -1);
    EXPECT_EQ(t.exponent, 6);
    EXPECT_EQ(t.denom_exponent, 2);
    // 1/(1 + q^{-3}) = q^3/(1 + q^3), alternating sign for odd n.
    const LerchShape plus{[](long n) { return n * n; }, [](long n) { return n; }, true, -1};
    const detail::LerchTerm u = detail::normalize(plus, -3);
    EXPECT_EQ(u.sign, -1);
    EXPECT_EQ(u.exponent, 12);
    EXPECT_EQ(u.denom_exponent, 3);
}

TEST(LerchSums, MatchesBruteForceBilateralSum)
{
    // sum_n (-1)^n q^{n(n+1)/2 + n} / (1 + q^n), n = 0 term is 1/2.
    const LerchShape shape{[](long n) { return n * (n + 1) / 2 + n; }, [](long n) { return n; }, true, -1};
    const Complex q(0.3, 0.45);
    const cld qq = to_cld(q);
    cld s = 0;
    for (long n = -60; n <= 60; ++n) {
        const cld num = std::pow(qq, static_cast<long double>(n * (n + 1) / 2 + n));
        s += ((n % 2 == 0) ? 1.0L : -1.0L) * num / (cld(1) + std::pow(qq, static_cast<long double>(n)));
    }
    EXPECT_LT(rel_diff(bilateral_lerch_sum(q, shape).value, s), 1e-16);
}

TEST(LerchSums, PoleIsReported)
{
    // 1/(1 - q^0) is a pole for every q.
    const LerchShape shape{[](long n) { return n * n; }, [](long n) { return n; }, false, 1};
    EXPECT_THROW(bilateral_lerch_sum(Complex(0.3), shape), PoleError);
}

TEST(EvalResultArithmetic, PropagatedErrorsAreUpperBounds)
{
    const EvalResult a{Complex(2.0), 1e-10, 3, Bound::geometric};
    const EvalResult b{Complex(-0.5, 0.25), 1e-12, 4, Bound::exact};
    // Perturb both operands by their full error and check the change stays
    // within the propagated estimate.
    const Complex da = a.value + Complex(1e-10);
    const Complex db = b.value + Complex(0.0, 1e-12);
    EXPECT_LE(magnitude(da * db - (a * b).value), (a * b).err_estimate);
    EXPECT_LE(magnitude(da / db - (a / b).value), (a / b).err_estimate);
    EXPECT_LE(magnitude(da + db - (a + b).value), (a + b).err_estimate);
    EXPECT_EQ((a * b).bound, Bound::geometric);
    EXPECT_EQ((a * b).terms_used, 7u);
}

TEST(EvalResultArithmetic, DivisionByUncertainZeroIsAPole)
{
    const EvalResult a{Complex(1.0), 0.0, 1, Bound::exact};
    const EvalResult z{Complex(1e-12), 1e-11, 1, Bound::geometric};
    EXPECT_THROW(a / z, PoleError);
}

TEST(BoundNames, AreStable)
{
    EXPECT_STREQ(to_string(Bound::exact), "exact");
    EXPECT_STREQ(to_string(Bound::geometric), "geometric");
    EXPECT_STREQ(to_string(Bound::heuristic), "heuristic");
}

} // namespace
