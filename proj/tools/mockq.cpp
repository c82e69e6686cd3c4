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

// mockq: evaluate mock theta functions, run the identity suite, and dump
// exact coefficient and WRT tables.
//
// Exit codes: 0 success, 1 identity failure or numerical failure,
// 2 usage or domain error.

#include <cmath>
#include <cstdio>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include <mockq/mockq.hpp>

namespace
{

using namespace mockq;
using nlohmann::json;

constexpr std::size_t max_order = 4096;

enum class Format { text, json, csv };

struct RunConfig {
    long precision_bits = default_precision_bits;
    std::optional<double> tol;
    std::size_t order = 64;
    Format format = Format::text;
    bool parallel = false;
};

// A usage error detected after CLI11 parsing.
struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

Complex parse_point(const std::string &text, const char *flag)
{
    const auto comma = text.find(',');
    try {
        if (comma == std::string::npos) {
            return Complex(Real(std::string_view(text)));
        }
        return Complex(Real(std::string_view(text).substr(0, comma)), Real(std::string_view(text).substr(comma + 1)));
    } catch (const DomainError &) {
        throw UsageError(std::string(flag) + " expects RE[,IM], got '" + text + "'");
    }
}

// Significant digits worth printing for a value computed to tolerance tol.
int print_digits(double tol)
{
    const int available = static_cast<int>(std::floor((working_precision() - 1) * 0.30103));
    const int wanted = static_cast<int>(std::ceil(-std::log10(tol))) + 2;
    return std::max(6, std::min(available, wanted));
}

json decimal_pair(const Complex &z, int digits)
{
    return json::array({z.real().to_string(digits), z.imag().to_string(digits)});
}

std::string csv_number(const Real &x, int digits)
{
    return x.to_string(digits);
}

std::string sci(double x)
{
    std::ostringstream os;
    os.precision(3);
    os << std::scientific << x;
    return os.str();
}

int cmd_eval(const RunConfig &cfg, const std::string &fn, const std::string &repr_name,
             const std::optional<std::string> &q_text, const std::optional<std::string> &alpha_text)
{
    const auto tag = parse_tag(fn);
    if (!tag) {
        throw UsageError("unknown function '" + fn + "' (expected d5, d5-star, omega, f, h1, h2)");
    }
    const auto repr = parse_representation(repr_name);
    if (!repr) {
        throw UsageError("unknown representation '" + repr_name + "' (expected series, alt, lerch)");
    }
    if (q_text.has_value() == alpha_text.has_value()) {
        throw UsageError("eval needs exactly one of --q or --alpha");
    }
    const FunctionId id(*tag, *repr);
    const Nome nome = q_text ? Nome::from_q(parse_point(*q_text, "--q"))
                             : Nome::from_alpha(parse_point(*alpha_text, "--alpha"));
    const double tol = cfg.tol.value_or(EvalOptions{}.tol);
    const EvalResult r = evaluate(id, nome, {.tol = tol});
    const int digits = print_digits(tol);

    switch (cfg.format) {
    case Format::json: {
        json out{{"function", id.name()},
                 {"q", complex_to_json(nome.q())},
                 {"value", complex_to_json(r.value)},
                 {"value_decimal", decimal_pair(r.value, digits)},
                 {"err_estimate", r.err_estimate},
                 {"terms_used", r.terms_used},
                 {"bound", to_string(r.bound)}};
        if (nome.alpha()) {
            out["alpha"] = complex_to_json(*nome.alpha());
        }
        std::cout << out.dump(2) << '\n';
        break;
    }
    case Format::csv:
        std::cout << "function,re,im,err_estimate,terms_used,bound\n"
                  << id.name() << ',' << csv_number(r.value.real(), digits) << ','
                  << csv_number(r.value.imag(), digits) << ',' << sci(r.err_estimate) << ',' << r.terms_used << ','
                  << to_string(r.bound) << '\n';
        break;
    case Format::text:
        std::cout << id.name() << " at q = " << nome.q().to_string(digits) << '\n'
                  << "value        " << r.value.to_string(digits) << '\n'
                  << "err_estimate " << sci(r.err_estimate) << '\n'
                  << "terms_used   " << r.terms_used << '\n'
                  << "bound        " << to_string(r.bound) << '\n';
        break;
    }
    return 0;
}

int cmd_integral(const RunConfig &cfg, const std::string &kind, const std::optional<std::string> &alpha_text)
{
    if (!alpha_text) {
        throw UsageError("integral needs --alpha");
    }
    const Complex alpha = parse_point(*alpha_text, "--alpha");
    const double tol = cfg.tol.value_or(QuadratureOptions{}.tol);
    QuadratureResult r;
    if (kind == "mordell") {
        r = mordell_integral(alpha, {.tol = tol});
    } else if (kind == "watson") {
        r = watson_integral(alpha, {.tol = tol});
    } else {
        throw UsageError("unknown integral '" + kind + "' (expected mordell or watson)");
    }
    const int digits = print_digits(tol);
    switch (cfg.format) {
    case Format::json:
        std::cout << json{{"integral", kind},
                          {"alpha", complex_to_json(alpha)},
                          {"value", complex_to_json(r.value)},
                          {"value_decimal", decimal_pair(r.value, digits)},
                          {"err_estimate", r.err_estimate},
                          {"nodes_used", r.nodes_used},
                          {"truncation_point", r.truncation_point},
                          {"step", r.step},
                          {"levels", r.levels}}
                         .dump(2)
                  << '\n';
        break;
    case Format::csv:
        std::cout << "integral,re,im,err_estimate,nodes_used\n"
                  << kind << ',' << csv_number(r.value.real(), digits) << ',' << csv_number(r.value.imag(), digits)
                  << ',' << sci(r.err_estimate) << ',' << r.nodes_used << '\n';
        break;
    case Format::text:
        std::cout << kind << " integral at alpha = " << alpha.to_string(digits) << '\n'
                  << "value        " << r.value.to_string(digits) << '\n'
                  << "err_estimate " << sci(r.err_estimate) << '\n'
                  << "nodes_used   " << r.nodes_used << '\n'
                  << "truncation   " << r.truncation_point << '\n'
                  << "step         " << r.step << '\n';
        break;
    }
    return 0;
}

std::string params_field(const Params &p)
{
    std::string s;
    for (const auto &[name, value] : p) {
        if (!s.empty()) {
            s += ';';
        }
        s += name + "=" + value.real().to_string(17) + "," + value.imag().to_string(17);
    }
    return s;
}

struct PointFlags {
    std::optional<std::string> q;
    std::optional<std::string> alpha;
    std::optional<long> n;
    bool order_given = false;
};

// Grid for one identity: its canonical grid unless a point flag was given.
std::vector<Params> select_grid(const Identity &id, const PointFlags &flags, const RunConfig &cfg)
{
    Params point;
    auto accept = [&](const char *name, const char *flag, Complex value) {
        if (std::find(id.point_params.begin(), id.point_params.end(), name) == id.point_params.end()) {
            throw UsageError("identity '" + id.name + "' does not take " + flag);
        }
        point[name] = std::move(value);
    };
    if (flags.q) {
        accept("q", "--q", parse_point(*flags.q, "--q"));
    }
    if (flags.alpha) {
        accept("alpha", "--alpha", parse_point(*flags.alpha, "--alpha"));
    }
    if (flags.n) {
        accept("N", "--N", Complex(*flags.n));
    }
    if (flags.order_given && id.name == "d5-decomposition-exact") {
        point["order"] = Complex(static_cast<long>(cfg.order));
    }
    if (point.empty()) {
        return id.canonical_grid();
    }
    return {point};
}

int cmd_verify(const RunConfig &cfg, const std::string &name, const PointFlags &flags)
{
    std::vector<const Identity *> selected;
    if (name == "all") {
        if (flags.q || flags.alpha || flags.n) {
            throw UsageError("'verify all' runs the canonical grids and takes no point flags");
        }
        for (const Identity &id : identity_registry()) {
            selected.push_back(&id);
        }
    } else if (const Identity *id = find_identity(name)) {
        selected.push_back(id);
    } else {
        std::string known;
        for (const Identity &i : identity_registry()) {
            known += (known.empty() ? "" : ", ") + i.name;
        }
        throw UsageError("unknown identity '" + name + "' (known: " + known + ")");
    }

    VerifyOptions opts;
    opts.tolerance = cfg.tol.value_or(opts.tolerance);
    opts.parallel = cfg.parallel;

    std::vector<IdentityReport> reports;
    for (const Identity *id : selected) {
        const std::vector<Params> grid = select_grid(*id, flags, cfg);
        for (IdentityReport &r : run_identity(*id, grid, opts)) {
            reports.push_back(std::move(r));
        }
    }

    bool ok = true;
    for (const auto &r : reports) {
        ok = ok && r.passed;
    }
    switch (cfg.format) {
    case Format::json: {
        json out = json::array();
        for (const auto &r : reports) {
            out.push_back(to_json(r));
        }
        std::cout << out.dump(2) << '\n';
        break;
    }
    case Format::csv:
        std::cout << "identity,params,lhs_re,lhs_im,rhs_re,rhs_im,abs_residual,rel_residual,passed\n";
        for (const auto &r : reports) {
            std::cout << r.identity << ",\"" << params_field(r.params) << "\"," << r.lhs.real().to_string(17) << ','
                      << r.lhs.imag().to_string(17) << ',' << r.rhs.real().to_string(17) << ','
                      << r.rhs.imag().to_string(17) << ',' << sci(r.abs_residual) << ',' << sci(r.rel_residual) << ','
                      << (r.passed ? "true" : "false") << '\n';
        }
        break;
    case Format::text: {
        std::size_t passed = 0;
        for (const auto &r : reports) {
            std::cout << to_text(r) << '\n';
            passed += r.passed ? 1 : 0;
        }
        std::cout << passed << "/" << reports.size() << " passed\n";
        break;
    }
    }
    return ok ? 0 : 1;
}

int cmd_coeffs(const RunConfig &cfg, const std::string &fn)
{
    const auto tag = parse_tag(fn);
    if (!tag) {
        throw UsageError("unknown function '" + fn + "' (expected d5, d5-star, omega, f, h1, h2)");
    }
    const qexpand::TruncatedSeries s = exact_expansion(*tag, cfg.order);
    if (cfg.format == Format::csv) {
        std::cout << "exponent,coefficient\n";
        for (std::size_t k = 0; k < s.order(); ++k) {
            std::cout << k << ',' << s[k].get_str() << '\n';
        }
    } else {
        std::cout << qexpand::format_coefficients(s) << '\n';
    }
    return 0;
}

int cmd_wrt(const RunConfig &cfg, long n_min, long n_max)
{
    const std::vector<WrtEntry> rows = wrt_table(n_min, n_max);
    if (cfg.format == Format::json) {
        std::cout << wrt_json(rows).dump(2) << '\n';
    } else {
        std::cout << wrt_csv(rows);
    }
    return 0;
}

int cmd_list()
{
    for (const Identity &id : identity_registry()) {
        std::cout << id.name << "  " << id.summary << '\n';
    }
    return 0;
}

} // namespace

int main(int argc, char **argv)
{
    CLI::App app{"Mock theta functions, Mordell integrals and their transformation identities"};
    app.require_subcommand(1);
    app.fallthrough();

    RunConfig cfg;
    std::optional<double> tol;
    std::string format = "text";
    app.add_option("--precision", cfg.precision_bits, "working precision in bits (>= 53)")
        ->check(CLI::Range(53L, 1L << 20));
    app.add_option("--tol", tol, "identity tolerance for verify; evaluation tolerance for eval and integral")
        ->check(CLI::PositiveNumber);
    app.add_option("--order", cfg.order, "truncation order of integer series (1..4096)")
        ->check(CLI::Range(std::size_t{1}, max_order));
    app.add_option("--format", format, "output format")->check(CLI::IsMember({"text", "json", "csv"}));
    app.add_flag("--parallel", cfg.parallel, "evaluate grid points concurrently");

    PointFlags flags;
    long n_flag = 0;

    auto *eval = app.add_subcommand("eval", "evaluate a function at one point");
    std::string eval_fn;
    std::string repr = "series";
    eval->add_option("function", eval_fn, "d5, d5-star, omega, f, h1 or h2")->required();
    eval->add_option("--repr", repr, "series, alt or lerch");
    eval->add_option("--q", flags.q, "nome q as RE[,IM]");
    eval->add_option("--alpha", flags.alpha, "alpha as RE[,IM], q = exp(-alpha)");

    auto *verify = app.add_subcommand("verify", "run an identity (or 'all') and report residuals");
    std::string identity;
    verify->add_option("identity", identity, "identity name or 'all'")->required();
    verify->add_option("--q", flags.q, "single point q as RE[,IM]");
    verify->add_option("--alpha", flags.alpha, "single point alpha as RE[,IM]");
    auto *n_opt = verify->add_option("--N", n_flag, "single level N");

    auto *coeffs = app.add_subcommand("coeffs", "print exact coefficients up to q^(order-1)");
    std::string coeff_fn;
    coeffs->add_option("function", coeff_fn, "d5, d5-star, omega, f, h1 or h2")->required();

    auto *wrt = app.add_subcommand("wrt", "tau_N of M(2,2,2) for N_min <= N <= N_max");
    long n_min = 0;
    long n_max = 0;
    wrt->add_option("N_min", n_min)->required();
    wrt->add_option("N_max", n_max)->required();

    auto *integral = app.add_subcommand("integral", "evaluate the Mordell or Watson integral");
    std::string kind;
    integral->add_option("kind", kind, "mordell or watson")->required();
    integral->add_option("--alpha", flags.alpha, "alpha as RE[,IM]");

    auto *list = app.add_subcommand("list", "list registered identities");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError &e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    cfg.tol = tol;
    cfg.format = format == "json" ? Format::json : format == "csv" ? Format::csv : Format::text;
    flags.order_given = app.count("--order") > 0;
    if (n_opt->count() > 0) {
        flags.n = n_flag;
    }

    try {
        PrecisionScope scope(cfg.precision_bits);
        if (*eval) {
            return cmd_eval(cfg, eval_fn, repr, flags.q, flags.alpha);
        }
        if (*verify) {
            return cmd_verify(cfg, identity, flags);
        }
        if (*coeffs) {
            return cmd_coeffs(cfg, coeff_fn);
        }
        if (*wrt) {
            return cmd_wrt(cfg, n_min, n_max);
        }
        if (*integral) {
            return cmd_integral(cfg, kind, flags.alpha);
        }
        if (*list) {
            return cmd_list();
        }
    } catch (const UsageError &e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const DomainError &e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const PoleError &e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const Error &e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
    return 2;
}
