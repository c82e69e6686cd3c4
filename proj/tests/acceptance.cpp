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

// Acceptance gate: one PASS/FAIL line per criterion, exit status 1 if any
// criterion fails.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include <mockq/mockq.hpp>

namespace
{

using namespace mockq;

struct Outcome {
    bool passed = true;
    std::string detail;
};

int failures = 0;

void report(int number, const std::string &title, const Outcome &o)
{
    std::printf("%s criterion %d: %s (%s)\n", o.passed ? "PASS" : "FAIL", number, title.c_str(), o.detail.c_str());
    std::fflush(stdout);
    if (!o.passed) {
        ++failures;
    }
}

std::string sci(double x)
{
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.2e", x);
    return buf;
}

// Runs a registered identity on an explicit grid; passes when every report's
// relative residual is below tol.
Outcome identity_outcome(const std::string &name, const std::vector<Params> &grid, double tol)
{
    const Identity *id = find_identity(name);
    VerifyOptions o;
    o.tolerance = tol;
    Outcome out;
    double worst = 0.0;
    std::size_t n = 0;
    for (const IdentityReport &r : run_identity(*id, grid, o)) {
        worst = std::max(worst, r.rel_residual);
        out.passed = out.passed && r.passed;
        ++n;
    }
    out.detail = name + ": " + std::to_string(n) + " points, max rel_residual " + sci(worst) + " < " + sci(tol);
    return out;
}

std::vector<Params> real_q_grid()
{
    std::vector<Params> g;
    for (int k = 1; k <= 8; ++k) {
        g.push_back({{"q", Complex(Real(k) / Real(10))}});
    }
    return g;
}

std::vector<Params> alpha_grid(bool real_only)
{
    std::vector<Params> g;
    for (const Params &p : detail::alpha_grid()) {
        if (!real_only || p.at("alpha").imag().is_zero()) {
            g.push_back(p);
        }
    }
    return g;
}

Outcome coefficients()
{
    auto prefix = [](FunctionTag tag, std::size_t n) {
        std::vector<long> v;
        const qexpand::TruncatedSeries s = exact_expansion(tag, n);
        for (std::size_t k = 0; k < n; ++k) {
            v.push_back(s[k].get_si());
        }
        return v;
    };
    Outcome o;
    o.passed = prefix(FunctionTag::d5, 7) == std::vector<long>{1, 2, 4, 6, 10, 16, 23} &&
               prefix(FunctionTag::h1, 7) == std::vector<long>{1, 3, 7, 14, 27, 49, 84} &&
               prefix(FunctionTag::h2, 7) == std::vector<long>{1, -1, 1, 2, -1, -4, 1};
    const std::vector<long> star = prefix(FunctionTag::d5_star, 43);
    std::vector<long> want(43, 0);
    long sign = 1;
    for (std::size_t e : {0, 2, 6, 12, 20, 30, 42}) {
        want[e] = sign;
        sign = -sign;
    }
    o.passed = o.passed && star == want;
    o.detail = "D5, h1, h2 through q^6 and D5* through q^42, exact";
    return o;
}

Outcome decomposition()
{
    const IdentityReport exact = check_d5_decomposition_exact(50);
    Outcome numeric = identity_outcome("d5-decomposition", real_q_grid(), 1e-10);
    Outcome o;
    o.passed = exact.passed && exact.abs_residual == 0.0 && numeric.passed;
    o.detail = "coefficient residual through q^49 = " + sci(exact.abs_residual) + "; " + numeric.detail;
    return o;
}

Outcome representations_agree()
{
    Outcome o;
    std::string worst;
    for (const char *name :
         {"representations-omega", "representations-f", "representations-h1", "representations-h2", "representations-d5"}) {
        const Outcome r = identity_outcome(name, real_q_grid(), 1e-10);
        o.passed = o.passed && r.passed;
        worst += (worst.empty() ? "" : "; ") + r.detail;
    }
    o.detail = worst;
    return o;
}

Outcome wrt()
{
    Outcome o;
    const WrtEntry two = wrt_entry(2);
    const double tau2 = magnitude(two.tau - Complex(1));
    double def = 0.0;
    double drift = 0.0;
    const std::vector<WrtEntry> base = wrt_table(2, 20);
    std::vector<WrtEntry> doubled;
    {
        PrecisionScope s(2 * working_precision());
        doubled = wrt_table(2, 20);
    }
    for (std::size_t i = 0; i < base.size(); ++i) {
        def = std::max(def, wrt_definition_residual(base[i]));
        drift = std::max(drift, magnitude(base[i].tau - doubled[i].tau));
    }
    o.passed = tau2 < 1e-20 && def < 1e-25 && drift < 1e-25;
    o.detail = "|tau_2 - 1| = " + sci(tau2) + ", max definitional residual N=2..20 " + sci(def) +
               ", precision-doubling drift " + sci(drift);
    return o;
}

// Criterion 9: every numeric component of suites 2-7 recomputed at doubled
// precision (and a tighter truncation) moves by less than its err_estimate.
struct Soundness {
    std::size_t checked = 0;
    std::size_t violations = 0;
    double worst_ratio = 0.0;
    std::string first_violation;

    void check(const std::string &what, const Complex &lo, double err, const Complex &hi)
    {
        ++checked;
        const double moved = magnitude(lo - hi);
        if (err > 0.0) {
            worst_ratio = std::max(worst_ratio, moved / err);
        }
        if (!(moved < err)) {
            ++violations;
            std::fprintf(stderr, "violation: %s moved %.3e err %.3e\n", what.c_str(), moved, err);
            if (first_violation.empty()) {
                first_violation = what + " moved " + sci(moved) + " vs err " + sci(err);
            }
        }
    }
};

template <class Eval>
void sound(Soundness &s, const std::string &what, Eval eval)
{
    const auto lo = eval(EvalOptions{.tol = 1e-20});
    PrecisionScope scope(2 * working_precision());
    const auto hi = eval(EvalOptions{.tol = 1e-40});
    s.check(what, lo.value, lo.err_estimate, hi.value);
}

template <class Eval>
void sound_quad(Soundness &s, const std::string &what, Eval eval)
{
    const QuadratureResult lo = eval(QuadratureOptions{.tol = 1e-20});
    PrecisionScope scope(2 * working_precision());
    const QuadratureResult hi = eval(QuadratureOptions{.tol = 1e-40});
    s.check(what, lo.value, lo.err_estimate, hi.value);
}

Outcome soundness()
{
    Soundness s;
    const Complex pi = Complex(Real::pi());
    for (const Params &p : detail::alpha_grid()) {
        const Complex alpha = p.at("alpha");
        const std::string tag = " alpha=" + alpha.to_string(4);
        sound_quad(s, "mordell_integral" + tag, [&](const QuadratureOptions &o) { return mordell_integral(alpha, o); });
        sound_quad(s, "watson_integral" + tag, [&](const QuadratureOptions &o) { return watson_integral(alpha, o); });
        auto nome = [&] { return nome_pair(alpha); };
        auto dual_sq = [&] { return nome_pair(Complex(2) * Complex(Real::pi()) * Complex(Real::pi()) / alpha); };
        sound(s, "h1" + tag, [&](const EvalOptions &o) { return h1_series(nome(), o); });
        sound(s, "omega" + tag, [&](const EvalOptions &o) { return omega_series(nome(), o); });
        sound(s, "h2 dual" + tag, [&](const EvalOptions &o) { return h2_series(dual_sq(), o); });
        sound(s, "f dual" + tag, [&](const EvalOptions &o) { return f_series(dual_sq(), o); });
        sound(s, "eta dual" + tag, [&](const EvalOptions &o) { return eta_quotient_correction(dual_sq().q(), o); });
    }
    (void)pi;
    for (const Params &p : detail::q_grid()) {
        const Complex q = p.at("q");
        for (const FunctionId &id : FunctionId::all()) {
            if (id.tag() == FunctionTag::d5_star) {
                continue;
            }
            sound(s, id.name() + " q=" + q.to_string(4),
                  [&](const EvalOptions &o) { return evaluate(id, Nome::from_q(q), o); });
        }
        sound(s, "(q;q)_inf q=" + q.to_string(4), [&](const EvalOptions &o) { return qpoch_infinite(q, q, o); });
        sound(s, "(q^2;q^2)_inf q=" + q.to_string(4),
              [&](const EvalOptions &o) { return qpoch_infinite(q * q, q * q, o); });
    }
    for (const Params &p : detail::qhyper_grid()) {
        auto args = [&] { return std::tuple(p.at("a"), p.at("b"), p.at("c"), p.at("z"), Nome::from_q(p.at("q"))); };
        sound(s, "qhyper_lhs", [&](const EvalOptions &o) {
            auto [a, b, c, z, n] = args();
            return qhyper_lhs(a, b, c, z, n, o);
        });
        sound(s, "qhyper_rhs", [&](const EvalOptions &o) {
            auto [a, b, c, z, n] = args();
            return qhyper_rhs(a, b, c, z, n, o);
        });
    }
    for (const Params &p : detail::jacobi_grid()) {
        const Complex z = p.at("z");
        const Complex q = p.at("q");
        sound(s, "jacobi_theta_sum", [&](const EvalOptions &o) { return jacobi_theta_sum(z, q, o); });
        sound(s, "jacobi_theta_product", [&](const EvalOptions &o) { return jacobi_theta_product(z, q, o); });
    }
    Outcome o;
    o.passed = s.violations == 0;
    o.detail = std::to_string(s.checked) + " results, " + std::to_string(s.violations) +
               " violations, max |moved|/err_estimate " + sci(s.worst_ratio);
    if (!s.first_violation.empty()) {
        o.detail += "; first: " + s.first_violation;
    }
    return o;
}

Outcome radial()
{
    Outcome o;
    for (long N : {3L, 5L}) {
        const IdentityReport r = check_radial_limit(N);
        o.passed = o.passed && r.passed;
        o.detail += (o.detail.empty() ? "" : ", ") + std::string("N=") + std::to_string(N) + " |extrapolated - exact| " +
                    sci(r.abs_residual);
    }
    o.detail += " < 1e-3 (empirical)";
    return o;
}

} // namespace

int main()
{
    const auto start = std::chrono::steady_clock::now();
    std::printf("working precision %ld bits\n", working_precision());

    report(1, "known q-expansions of D5, h1, h2, D5*", coefficients());
    report(2, "Mordell integral transformation", identity_outcome("main-theorem", alpha_grid(false), 1e-8));

    report(3, "Watson transformation of omega and f", identity_outcome("watson", alpha_grid(true), 1e-8));
    {
        double worst = 0.0;
        for (const Params &p : alpha_grid(true)) {
            worst = std::max(worst, check_watson_half_line(p.at("alpha")).rel_residual);
        }
        std::printf("INFO criterion 3: with the integral over [0, inf) alone the relative residual is %.6f "
                    "(the right side equals the integral over the whole line)\n",
                    worst);
    }

    report(4, "D5 = 2 h1 - [(q^2;q^2)/(q)]^2 omega", decomposition());
    report(5, "primary, alternative and Lerch forms agree", representations_agree());
    report(6, "q-hypergeometric transformation", identity_outcome("qhyper", detail::qhyper_grid(), 1e-10));
    report(7, "Jacobi triple product", identity_outcome("jacobi-triple-product", detail::jacobi_grid(), 1e-10));
    report(8, "WRT invariant of M(2,2,2)", wrt());
    report(9, "error estimates survive precision doubling", soundness());
    report(10, "radial limit of D5* at exp(pi i/N)", radial());

    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::printf("%d of 10 criteria failed, %.2f s\n", failures, secs);
    return failures == 0 ? 0 : 1;
}
