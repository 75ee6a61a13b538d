#include "logalg_cli/app.hpp"

#include "logalg_cli/acceptance.hpp"
#include "logalg_cli/registry.hpp"

#include "logalg/cyclotomic.hpp"
#include "logalg/error.hpp"
#include "logalg/examples.hpp"
#include "logalg/identities.hpp"
#include "logalg/lvalues.hpp"
#include "logalg/series_io.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <functional>
#include <iomanip>
#include <ostream>
#include <sstream>

namespace logalg::cli {

namespace {

using Json = nlohmann::ordered_json;

// Collects the result of one command. Text goes straight to `out`; with
// --json nothing but the final document is printed.
struct Output {
    std::ostream &out;
    bool json = false;
    Json result = Json::object();

    template <class T>
    Output &operator<<(const T &v)
    {
        if (!json) {
            out << v;
        }
        return *this;
    }
};

std::string rat(const Rational &r) { return to_string(r); }

Json quantity_json(const Quantity &q)
{
    Json j;
    j["name"] = q.name;
    j["value"] = q.value;
    if (q.expected) {
        j["expected"] = *q.expected;
    }
    j["residual"] = q.residual ? Json(format_sci(*q.residual)) : Json(nullptr);
    j["ok"] = q.ok;
    return j;
}

Json identity_json(const IdentityReport &r)
{
    Json j;
    j["identity"] = r.identity;
    j["prec"] = r.prec;
    j["mode"] = std::string(mode_name(r.mode));
    j["verdict"] = r.holds() ? "holds" : "fails";
    const auto fm = r.first_mismatch();
    j["first_mismatch"] = fm ? Json(*fm) : Json(nullptr);
    Json checks = Json::array();
    for (const IdentityCheck &c : r.checks) {
        Json cj;
        cj["name"] = c.name;
        cj["holds"] = c.holds;
        cj["compared_below"] = c.compared_below;
        cj["first_mismatch"] = c.first_mismatch ? Json(*c.first_mismatch) : Json(nullptr);
        if (c.first_mismatch) {
            cj["lhs"] = c.lhs_value;
            cj["rhs"] = c.rhs_value;
        }
        checks.push_back(cj);
    }
    j["checks"] = checks;
    return j;
}

// Text and JSON for a named list of series.
void print_series(Output &o, const std::string &key, const std::string &label, const std::string &text)
{
    o << std::left << std::setw(8) << label << text << "\n";
    o.result["series"][key] = text;
}

int cmd_describe(Output &o, const CurveSpec &s, int prec)
{
    const CurveModel c = s.model();
    o.result["curve"] = s.name;
    o << "curve " << s.name << "  [" << s.a[0] << "," << s.a[1] << "," << s.a[2] << "," << s.a[3] << "," << s.a[4]
      << "]  conductor " << s.conductor << "  sign " << (s.sign > 0 ? "+1" : "-1") << "\n\n";
    const std::vector<std::pair<std::string, Rational>> inv{
        {"b2", c.b2}, {"b4", c.b4}, {"b6", c.b6},    {"b8", c.b8},   {"c4", c.c4}, {"c6", c.c6},
        {"disc", c.discriminant}, {"g2", c.g2}, {"g3", c.g3}, {"A", c.A}, {"B", c.B}};
    for (const auto &[name, v] : inv) {
        o << "  " << std::left << std::setw(6) << name << rat(v) << "\n";
        o.result["invariants"][name] = rat(v);
    }
    o << "\nshort model  " << c.short_equation() << "\n\n";
    o.result["short_model"] = c.short_equation();
    const FormalXY xy = formal_xy(c, prec);
    const LogExp le = formal_log_exp(c, prec);
    print_series(o, "x", "x(t)", to_string(xy.x));
    print_series(o, "y", "y(t)", to_string(xy.y));
    print_series(o, "omega", "omega", "(" + to_string(invariant_differential(c, prec)) + ") dt");
    print_series(o, "log", "log", to_string(le.log));
    print_series(o, "exp", "exp", to_string(le.exp));
    return 0;
}

int cmd_series(Output &o, const CurveSpec &s, const std::string &kind, int prec, long m, bool raw)
{
    const CurveModel c = s.model();
    QSeries r;
    if (kind == "x" || kind == "y") {
        const FormalXY xy = formal_xy(c, prec);
        r = kind == "x" ? xy.x : xy.y;
    } else if (kind == "omega") {
        r = invariant_differential(c, prec);
    } else if (kind == "log" || kind == "exp") {
        const LogExp le = formal_log_exp(c, prec);
        r = kind == "log" ? le.log : le.exp;
    } else if (kind == "wp") {
        r = wp_series(c.g2, c.g3, prec);
    } else {
        r = mult_by_m(c, m, prec);
    }
    const std::string text = raw ? serialize(r) : to_string(r);
    o << text << "\n";
    o.result["curve"] = s.name;
    o.result["kind"] = kind;
    o.result["prec"] = prec;
    o.result["series"] = text;
    return 0;
}

int cmd_coeffs(Output &o, const NewformCoeffs &f, long level)
{
    Json list = Json::array();
    o << "level " << level << " (" << provenance_name(f.provenance) << ")\n";
    for (int n = 1; n < f.size(); ++n) {
        o << "  a_" << n << " = " << f[n] << "\n";
        list.push_back(f[n]);
    }
    o.result["level"] = level;
    o.result["source"] = std::string(provenance_name(f.provenance));
    o.result["a"] = list;
    return 0;
}

int cmd_phi(Output &o, const CurveSpec &s, int prec)
{
    const ParametrizationSeries ps = modular_xy(s.coefficients(prec + 4), s.model(), prec);
    o.result["curve"] = s.name;
    print_series(o, "X", "X(t)", to_string(ps.X));
    print_series(o, "Y", "Y(t)", to_string(ps.Y));
    print_series(o, "Phi", "Phi(t)", to_string(ps.Phi));
    print_series(o, "lambda", "lambda", to_string(ps.lambda));
    return 0;
}

int cmd_honda(Output &o, const CurveSpec &s, int degree)
{
    const HondaReport h = honda_group_law(s.coefficients(degree + 1), degree + 1);
    o.result["curve"] = s.name;
    o.result["degree"] = degree;
    o.result["integral"] = h.integral;
    if (h.integral) {
        o << "L(t1,t2) of " << s.name << " has integer coefficients to total degree " << degree << "\n";
        return 0;
    }
    const auto [i, j] = *h.offending;
    o << "coefficient of t1^" << i << " t2^" << j << " is " << rat(h.offending_value) << ", not an integer\n";
    o.result["offending"] = {{"i", i}, {"j", j}, {"value", rat(h.offending_value)}};
    return 1;
}

struct VerifyArgs {
    std::string identity = "logalg1a";
    std::string curve = "builtin:11";
    std::string beta = "1@1";
    int prec = 20;
    std::string mode = "exact";
    int samples = 5;
    unsigned long seed = 20240611;
    std::vector<int> fold_order;
};

int cmd_verify(Output &o, const VerifyArgs &a)
{
    const CurveSpec s = resolve_curve(a.curve);
    const CurveModel c = s.model();
    const NewformCoeffs f = s.coefficients(coefficients_needed(a.prec));
    MainOptions opt;
    opt.mode = a.mode == "specialize" ? VerifyMode::Specialize : VerifyMode::Exact;
    opt.samples = a.samples;
    opt.seed = a.seed;
    opt.fold_order = a.fold_order;

    IdentityReport r;
    if (a.identity == "logalg1a") {
        r = verify_logalg1a(f, c, a.prec);
    } else if (a.identity == "wp") {
        r = verify_wp_identities(f, c, a.prec);
    } else if (a.identity == "main-a") {
        r = verify_main_a(parse_beta(a.beta), f, c, a.prec, opt);
    } else {
        r = verify_main_b(parse_beta(a.beta), f, c, a.prec, opt);
    }
    o << r.summary() << "\n";
    for (const IdentityCheck &ch : r.checks) {
        o << "  " << ch.name << ": " << (ch.holds ? "holds" : "fails") << " below t^" << ch.compared_below;
        if (ch.first_mismatch) {
            o << ", first mismatch at t^" << *ch.first_mismatch << " (lhs " << ch.lhs_value << ", rhs " << ch.rhs_value
              << ")";
        }
        o << "\n";
    }
    if (!o.json) {
        o.out << std::fixed << std::setprecision(3) << "  time " << r.seconds << " s\n";
        o.out.unsetf(std::ios::floatfield);
    }
    o.result = identity_json(r);
    o.result["curve"] = s.name;
    if (a.identity == "main-a" || a.identity == "main-b") {
        o.result["beta"] = parse_beta(a.beta).to_string();
    }
    return r.holds() ? 0 : 1;
}

int cmd_lvalue(Output &o, const CurveSpec &s, int terms)
{
    const NumericValue L = L1_rapid(s.coefficients(terms + 1), s.conductor, s.sign, terms);
    const PeriodLattice lat = periods(s.model());
    o << "L(E,1)   " << format_complex(L.value, 12) << "  (tail <= " << format_sci(L.tail) << ")\n";
    o << "Omega    " << format_real(lat.Omega, 12) << "\n";
    o << "Omega'   " << format_complex(lat.OmegaPrime, 12) << "\n";
    o << "L/Omega  " << format_real(L.value.real() / lat.Omega, 12) << "\n";
    o.result = {{"curve", s.name},
                {"terms", terms},
                {"L", format_complex(L.value, 12)},
                {"tail", format_sci(L.tail)},
                {"Omega", format_real(lat.Omega, 12)},
                {"OmegaPrime", format_complex(lat.OmegaPrime, 12)},
                {"L_over_Omega", format_real(L.value.real() / lat.Omega, 12)}};
    return 0;
}

int cmd_twist(Output &o, const CurveSpec &s, const std::string &spec, int terms)
{
    const DirichletCharacter chi = DirichletCharacter::parse(spec);
    const TwistedValue L = L1_twisted(s.coefficients(terms + 1), s.conductor, chi, s.sign, terms);
    const GaussSum g = gauss_sum(chi);
    o << "character  " << chi.name() << " (modulus " << chi.modulus() << ", order " << chi.order() << ")\n";
    o << "g(chi)     " << format_complex(g.value, 12) << "   exact " << g.exact.to_string() << "\n";
    o << "C          " << L.C.to_string() << "\n";
    o << "S          " << format_complex(L.S, 12) << "\n";
    o << "S_conj     " << format_complex(L.S_conj, 12) << "\n";
    o << "L(E,chi,1) " << format_complex(L.value, 12) << "  (tail <= " << format_sci(L.tail) << ")\n";
    o.result = {{"curve", s.name},
                {"character", chi.name()},
                {"terms", terms},
                {"gauss_sum", format_complex(g.value, 12)},
                {"gauss_sum_exact", g.exact.to_string()},
                {"C", L.C.to_string()},
                {"S", format_complex(L.S, 12)},
                {"S_conj", format_complex(L.S_conj, 12)},
                {"L", format_complex(L.value, 12)},
                {"tail", format_sci(L.tail)}};
    if (L.imag_residual) {
        o << "|Im L|     " << format_sci(*L.imag_residual) << "\n";
        o.result["imag_residual"] = format_sci(*L.imag_residual);
    }
    return 0;
}

int cmd_example(Output &o, const std::string &which, const ExampleOptions &opt)
{
    const ExampleReport r = run_example(which, opt);
    o << "example " << r.which << "\n";
    Json inputs = Json::object();
    for (const auto &[k, v] : r.inputs) {
        o << "  " << k << ": " << v << "\n";
        inputs[k] = v;
    }
    o << "\n";
    Json inter = Json::array();
    for (const Quantity &q : r.intermediates) {
        o << (q.ok ? "  ok   " : "  FAIL ") << q.name << " = " << q.value;
        if (q.expected) {
            o << "   (expected " << *q.expected << ")";
        }
        if (q.residual) {
            o << "   [residual " << format_sci(*q.residual) << "]";
        }
        o << "\n";
        inter.push_back(quantity_json(q));
    }
    o << "\nexact result: L = " << r.exact_result << "\n";
    if (const auto bad = r.first_failure()) {
        o << "first failing quantity: " << *bad << "\n";
    }
    o.result = {{"example", r.which}, {"inputs", inputs}, {"intermediates", inter}, {"exact_result", r.exact_result}};
    o.result["ok"] = r.ok();
    return r.ok() ? 0 : 1;
}

int cmd_selftest(Output &o, const AcceptanceOptions &opt)
{
    const std::vector<CriterionResult> results = run_acceptance(opt);
    Json list = Json::array();
    double total = 0;
    for (const CriterionResult &r : results) {
        total += r.seconds;
        if (!o.json) {
            o.out << "criterion " << r.id << ": " << (r.pass ? "PASS" : "FAIL") << "  " << r.title << "  ("
                  << r.checks << " checks, " << std::fixed << std::setprecision(2) << r.seconds << " s)\n";
            o.out.unsetf(std::ios::floatfield);
            for (const std::string &d : r.details) {
                o.out << "    " << d << "\n";
            }
        }
        list.push_back({{"criterion", r.id}, {"title", r.title}, {"pass", r.pass}, {"checks", r.checks},
                        {"details", r.details}});
    }
    const bool ok = all_pass(results);
    if (!o.json) {
        o.out << (ok ? "all criteria pass" : "some criteria FAIL") << " (" << std::fixed << std::setprecision(2)
              << total << " s)\n";
        o.out.unsetf(std::ios::floatfield);
    }
    o.result = {{"prec", opt.prec}, {"criteria", list}, {"pass", ok}};
    if (opt.corrupt_a) {
        o.result["corrupt_a"] = *opt.corrupt_a;
    }
    return ok ? 0 : 1;
}

std::string echo(const std::vector<std::string> &args)
{
    std::string s = "logalg";
    for (const std::string &a : args) {
        s += " " + a;
    }
    return s;
}

} // namespace

int run_cli(const std::vector<std::string> &args, std::ostream &out, std::ostream &err)
{
    CLI::App app{"Log-algebraic identities and L-values of elliptic curves", "logalg"};
    app.require_subcommand(1);
    app.fallthrough(); // global flags may follow the subcommand
    bool json = false;
    std::string registry;
    app.add_flag("--json", json, "Print a JSON report instead of text");
    app.add_option("--registry", registry, "Curve registry directory (default: $LOGALG_CURVE_DIR)");

    std::function<int(Output &)> action;
    auto curve_ref = [&](const std::string &ref) { return resolve_curve(ref, registry); };
    // Precision options fall back to $LOGALG_PREC before their built-in default.
    auto prec_option = [](CLI::App *cmd, int &var, const std::string &help) {
        return cmd->add_option("--prec", var, help)->envname("LOGALG_PREC")->check(CLI::Range(1, 100000));
    };

    // curve
    CLI::App *curve = app.add_subcommand("curve", "Invariants and formal series of a curve");
    curve->require_subcommand(1);
    std::string ref = "builtin:11";
    int prec = 10;
    CLI::App *describe = curve->add_subcommand("describe", "Invariants table and the first terms of x, y, omega, log, exp");
    describe->add_option("curve", ref, "builtin:N, spec file or registry name")->required();
    prec_option(describe, prec, "Series known below t^prec");
    describe->callback([&] { action = [&](Output &o) { return cmd_describe(o, curve_ref(ref), prec); }; });

    std::string kind = "x";
    long mult = 2;
    bool raw = false;
    CLI::App *series = curve->add_subcommand("series", "One formal series of a curve");
    series->add_option("curve", ref, "builtin:N, spec file or registry name")->required();
    series->add_option("--kind", kind, "x, y, omega, log, exp, wp or mult")
        ->check(CLI::IsMember({"x", "y", "omega", "log", "exp", "wp", "mult"}));
    series->add_option("--m", mult, "Multiplier for --kind mult");
    series->add_flag("--raw", raw, "Lossless valuation;prec;coefficients line");
    prec_option(series, prec, "Series known below t^prec");
    series->callback([&] { action = [&](Output &o) { return cmd_series(o, curve_ref(ref), kind, prec, mult, raw); }; });

    // modform
    CLI::App *modform = app.add_subcommand("modform", "Newform coefficients and the modular parametrization");
    modform->require_subcommand(1);
    long level = 0;
    CLI::App *coeffs = modform->add_subcommand("coeffs", "Fourier coefficients a_n for n < prec");
    auto *level_opt = coeffs->add_option("--level", level, "Level with a shipped eta product");
    coeffs->add_option("--curve", ref, "Curve whose coefficient source to use")->excludes(level_opt);
    prec_option(coeffs, prec, "Number of coefficients (a_1 .. a_(prec-1))");
    coeffs->callback([&] {
        action = [&](Output &o) {
            if (level > 0) {
                return cmd_coeffs(o, eta_product_coeffs(level, prec), level);
            }
            const CurveSpec s = curve_ref(ref);
            return cmd_coeffs(o, s.coefficients(prec), s.conductor);
        };
    });
    CLI::App *phi = modform->add_subcommand("phi", "X(t), Y(t) and Phi(t) from the parametrization");
    phi->add_option("--curve", ref, "Curve")->required();
    prec_option(phi, prec, "Series known below t^prec");
    phi->callback([&] { action = [&](Output &o) { return cmd_phi(o, curve_ref(ref), prec); }; });
    int degree = 30;
    CLI::App *honda = modform->add_subcommand("honda", "Integrality of lambda^-1(lambda(t1) + lambda(t2))");
    honda->add_option("--curve", ref, "Curve");
    honda->add_option("--degree", degree, "Maximal total degree")->check(CLI::Range(1, 200));
    honda->callback([&] { action = [&](Output &o) { return cmd_honda(o, curve_ref(ref), degree); }; });

    // verify
    VerifyArgs va;
    CLI::App *verify = app.add_subcommand("verify", "Check an identity between power series exactly");
    verify->add_option("--identity", va.identity, "logalg1a, wp, main-a or main-b")
        ->check(CLI::IsMember({"logalg1a", "wp", "main-a", "main-b"}));
    verify->add_option("--curve", va.curve, "Curve");
    verify->add_option("--beta", va.beta, "Coefficients of beta, e.g. \"2,2,-4,-4,2,2@1\"");
    prec_option(verify, va.prec, "Compare coefficients below t^prec");
    verify->add_option("--mode", va.mode, "exact or specialize")->check(CLI::IsMember({"exact", "specialize"}));
    verify->add_option("--samples", va.samples, "Specialization points")->check(CLI::Range(1, 1000));
    verify->add_option("--seed", va.seed, "Seed for the specialization points");
    verify->add_option("--fold-order", va.fold_order, "Order of the nonzero beta terms in the group sum")
        ->delimiter(',');
    verify->callback([&] { action = [&](Output &o) { return cmd_verify(o, va); }; });

    // lvalue
    std::string lcurve = "builtin:11";
    int terms = 400;
    CLI::App *lvalue = app.add_subcommand("lvalue", "L(E,1) and the period lattice");
    lvalue->add_option("--curve", lcurve, "Curve");
    lvalue->add_option("--terms", terms, "Terms of the rapidly converging sum")->check(CLI::Range(1, 10000000));
    std::string chispec;
    int tterms = 2000;
    CLI::App *twist = lvalue->add_subcommand("twist", "L(E,chi,1) for a primitive Dirichlet character");
    twist->add_option("--char", chispec, "trivial, quad:D, cubic:p or order:k:p")->required();
    twist->add_option("--curve", lcurve, "Curve");
    twist->add_option("--terms", tterms, "Terms of each twisted sum")->check(CLI::Range(1, 10000000));
    lvalue->callback([&] {
        if (twist->parsed()) {
            action = [&](Output &o) { return cmd_twist(o, curve_ref(lcurve), chispec, tterms); };
        } else {
            action = [&](Output &o) { return cmd_lvalue(o, curve_ref(lcurve), terms); };
        }
    });

    // example
    std::string which;
    ExampleOptions eopt;
    CLI::App *example = app.add_subcommand("example", "Worked L-value examples for the conductor 11 curve");
    example->add_option("which", which, "one, two or three")->required()->check(CLI::IsMember({"one", "two", "three"}));
    example->add_option("--terms", eopt.terms, "Terms for L(E,1)")->check(CLI::Range(1, 10000000));
    example->add_option("--twist-terms", eopt.twist_terms, "Terms for the twisted sums")->check(CLI::Range(1, 10000000));
    example->add_option("--series-prec", eopt.series_prec, "Precision of X, Y, Phi")->check(CLI::Range(8, 100000));
    example->add_option("--denom-bound", eopt.denom_bound, "Denominator bound for recognition");
    example->add_option("--line-tol", eopt.line_tol, "Relative tolerance for lattice multiples");
    example->callback([&] { action = [&](Output &o) { return cmd_example(o, which, eopt); }; });

    // selftest
    AcceptanceOptions aopt;
    int corrupt = 0;
    CLI::App *selftest = app.add_subcommand("selftest", "Run the acceptance suite");
    selftest->add_option("--prec", aopt.prec, "Cap every precision (fast mode); 0 runs the full targets")
        ->check(CLI::Range(0, 1000));
    auto *corrupt_opt = selftest->add_option("--corrupt-a", corrupt, "Add 1 to the level-11 coefficient a_n")
                            ->check(CLI::Range(1, 1000));
    selftest->add_option("--seed", aopt.seed, "Seed for the property suites");
    selftest->callback([&] {
        if (corrupt_opt->count() > 0) {
            aopt.corrupt_a = corrupt;
        }
        action = [&](Output &o) { return cmd_selftest(o, aopt); };
    });

    try {
        std::vector<std::string> rev(args.rbegin(), args.rend());
        app.parse(rev);
    } catch (const CLI::ParseError &e) {
        std::ostringstream o, e2;
        const int code = app.exit(e, o, e2);
        out << o.str();
        err << e2.str();
        return code == 0 ? 0 : 2;
    }

    Output o{out, json};
    Json doc;
    doc["schema"] = kSchema;
    doc["command"] = echo(args);
    int code = 0;
    try {
        code = action(o);
        doc["status"] = code == 0 ? "ok" : "fail";
        doc["result"] = o.result;
    } catch (const Error &e) {
        code = 1;
        err << "error: " << e.what() << "\n";
        doc["status"] = "error";
        doc["error"] = {{"name", std::string(e.name())}, {"message", e.what()}};
    } catch (const std::exception &e) {
        code = 1;
        err << "error: " << e.what() << "\n";
        doc["status"] = "error";
        doc["error"] = {{"name", "InternalError"}, {"message", e.what()}};
    }
    if (json) {
        out << doc.dump(2) << "\n";
    }
    return code;
}

} // namespace logalg::cli
