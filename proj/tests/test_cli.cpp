#include "doctest.h"

#include "logalg/error.hpp"
#include "logalg_cli/app.hpp"
#include "logalg_cli/registry.hpp"

#include <json.hpp>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

using namespace logalg;
using namespace logalg::cli;
using Json = nlohmann::json;

namespace {

struct Run {
    int code;
    std::string out, err;
};

Run run(std::vector<std::string> args)
{
    std::ostringstream out, err;
    const int code = run_cli(args, out, err);
    return {code, out.str(), err.str()};
}

Json run_json(std::vector<std::string> args, int expect_code = 0)
{
    args.push_back("--json");
    const Run r = run(args);
    CHECK(r.code == expect_code);
    return Json::parse(r.out);
}

std::filesystem::path scratch_dir()
{
    const auto dir = std::filesystem::temp_directory_path() / "logalg_cli_test";
    std::filesystem::create_directories(dir);
    return dir;
}

void write_file(const std::filesystem::path &p, const std::string &text)
{
    std::ofstream(p) << text;
}

} // namespace

TEST_CASE("curve specs round-trip through their text form")
{
    for (const CurveSpec &s : builtin_curves()) {
        const CurveSpec t = parse_curve_spec(s.to_text());
        CHECK(t.to_text() == s.to_text());
        CHECK(t.conductor == s.conductor);
        CHECK(t.a == s.a);
    }
    CurveSpec s;
    s.name = "inline11";
    s.conductor = 11;
    s.a = {0, -1, 1, -10, -20};
    s.source = CoeffSource::Inline;
    s.ap = {{2, -2}, {3, -1}, {5, 1}, {7, -2}};
    s.sign = -1;
    const CurveSpec t = parse_curve_spec(s.to_text());
    CHECK(t.ap == s.ap);
    CHECK(t.sign == -1);
    CHECK(t.source == CoeffSource::Inline);
}

TEST_CASE("curve spec errors")
{
    auto code_of = [](const std::string &text) {
        try {
            parse_curve_spec(text);
        } catch (const Error &e) {
            return e.code();
        }
        return Errc::NotAUnit; // sentinel: nothing thrown
    };
    CHECK(code_of("coefficients = 0 -1 1 -10\nconductor = 11") == Errc::ParseError);
    CHECK(code_of("coefficients = 0 -1 1 -10 -20") == Errc::ParseError);
    CHECK(code_of("coefficients = 0 -1 1 -10 -20\nconductor = 11\nsign = 2") == Errc::ParseError);
    CHECK(code_of("coefficients = 0 -1 1 -10 -20\nconductor = 11\ncolour = blue") == Errc::ParseError);
    CHECK(code_of("coefficients = 0 -1 1 -10 -20\nconductor = 11\nsource = inline") == Errc::ParseError);
    CHECK(code_of("coefficients = 0 -1 1 -10 -20\nconductor = 11\nsource = file:/no/such/file") ==
          Errc::InvalidArgument);
    CHECK(code_of("coefficients = 0 -1 1 -10 -20\nconductor = 11\n") == Errc::NotAUnit);
}

TEST_CASE("curve references")
{
    CHECK(resolve_curve("builtin:11").name == "11a1");
    CHECK(resolve_curve("builtin:36").a == std::array<long, 5>{0, 0, 0, 0, 1});
    CHECK_THROWS_AS(resolve_curve("builtin:37"), Error);
    CHECK_THROWS_AS(resolve_curve("no-such-curve", scratch_dir()), Error);
}

TEST_CASE("registry lookup and coefficient files")
{
    const auto dir = scratch_dir();
    write_file(dir / "coeffs11.txt", "1 1\n2 -2\n3 -1\n4 2\n5 1\n6 2\n7 -2\n8 0\n9 -2\n10 -2\n");
    write_file(dir / "e11.curve", "# level 11\nname = e11\ncoefficients = 0 -1 1 -10 -20\nconductor = 11\n"
                                  "source = file:coeffs11.txt\nsign = +1\n");
    const CurveSpec s = resolve_curve("e11", dir);
    CHECK(s.source == CoeffSource::File);
    CHECK(s.coefficients(11)[10] == -2);
    CHECK(s.coefficients(6).size() == 6);

    const Run r = run({"--registry", dir.string(), "modform", "coeffs", "--curve", "e11", "--prec", "11"});
    CHECK(r.code == 0);
    CHECK(r.out.find("a_10 = -2") != std::string::npos);
}

TEST_CASE("curve describe shows the invariants and the short model")
{
    const Run r = run({"curve", "describe", "builtin:11"});
    CHECK(r.code == 0);
    CHECK(r.out.find("c4    496") != std::string::npos);
    CHECK(r.out.find("y^2 = x^3 - 31/3*x - 2501/108") != std::string::npos);
    CHECK(r.out.find("exp     z + 62/15*z^5 + 2501/252*z^7") != std::string::npos);

    const Json j = run_json({"curve", "describe", "builtin:11"});
    CHECK(j["schema"] == kSchema);
    CHECK(j["result"]["invariants"]["A"] == "-31/3");
    CHECK(j["result"]["invariants"]["B"] == "-2501/108");
}

TEST_CASE("default precision comes from the environment")
{
    ::setenv("LOGALG_PREC", "7", 1);
    const Json j = run_json({"curve", "series", "builtin:11", "--kind", "exp"});
    ::unsetenv("LOGALG_PREC");
    CHECK(j["result"]["prec"] == 7);
    CHECK(j["result"]["series"] == "z + 62/15*z^5 + O(z^7)");
    CHECK(run_json({"curve", "series", "builtin:11", "--kind", "exp", "--prec", "4"})["result"]["prec"] == 4);
}

TEST_CASE("modform commands")
{
    const Json c = run_json({"modform", "coeffs", "--level", "11", "--prec", "10"});
    CHECK(c["result"]["a"] == Json::array({1, -2, -1, 2, 1, 2, -2, 0, -2}));
    const Json p = run_json({"modform", "phi", "--curve", "builtin:11", "--prec", "8"});
    CHECK(p["result"]["series"]["Phi"] == "t - t^2 - 1/3*t^3 + 1/2*t^4 + 13/3*t^5 - 61/3*t^6 + 529/12*t^7 + O(t^8)");
    CHECK(run_json({"modform", "honda", "--curve", "builtin:14", "--degree", "12"})["result"]["integral"] == true);
}

TEST_CASE("verify reports a verdict and exits by it")
{
    const Json j = run_json({"verify", "--identity", "logalg1a", "--curve", "builtin:11", "--prec", "30"});
    CHECK(j["result"]["verdict"] == "holds");
    CHECK(j["result"]["first_mismatch"].is_null());
    const Json b = run_json({"verify", "--identity", "main-a", "--beta", "1,-1@1", "--prec", "10", "--mode",
                             "specialize", "--samples", "3"});
    CHECK(b["result"]["verdict"] == "holds");
    CHECK(b["result"]["mode"] == "specialize");

    // Coefficients that do not belong to the curve.
    const auto dir = scratch_dir();
    write_file(dir / "wrong.curve", "coefficients = 0 -1 1 -10 -20\nconductor = 11\nsource = inline\n"
                                    "ap = 2:1 3:-1 5:1 7:-2 11:1 13:4 17:-2 19:0 23:-1 29:0 31:7 37:3 41:-8\n");
    const Run bad = run({"verify", "--identity", "wp", "--curve", (dir / "wrong.curve").string(), "--prec", "12"});
    CHECK(bad.code == 1);
    CHECK(bad.err.find("NotParametrization") != std::string::npos);
}

TEST_CASE("L-values")
{
    const Json l = run_json({"lvalue", "--curve", "builtin:11", "--terms", "400"});
    CHECK(l["result"]["L"] == "0.253841860856");
    CHECK(l["result"]["Omega"] == "1.269209304280");
    const Json t = run_json({"lvalue", "twist", "--char", "quad:-3", "--terms", "2000"});
    CHECK(t["result"]["L"] == "1.684496332975");
    CHECK(t["result"]["C"] == "1");

    const Json e = run_json({"lvalue", "twist", "--char", "quad:-11"}, 1);
    CHECK(e["status"] == "error");
    CHECK(e["error"]["name"] == "BadTwist");
    CHECK(run({"lvalue", "twist", "--char", "quad:9"}).err.find("InvalidArgument") != std::string::npos);
}

TEST_CASE("examples produce deterministic JSON")
{
    const Run a = run({"example", "one", "--json"});
    const Run b = run({"example", "one", "--json"});
    CHECK(a.code == 0);
    CHECK(a.out == b.out);
    const Json j = Json::parse(a.out);
    CHECK(j["result"]["exact_result"] == "Omega/5");
    bool saw_expected = false;
    for (const Json &q : j["result"]["intermediates"]) {
        CHECK(q["ok"] == true);
        saw_expected = saw_expected || q.contains("expected");
    }
    CHECK(saw_expected);
    CHECK(run_json({"example", "two"})["result"]["exact_result"] == "(Omega - 2*Omega')/sqrt(-3)");

    const Run weak = run({"example", "one", "--terms", "5"});
    CHECK(weak.code == 1);
    CHECK(weak.out.find("first failing quantity: L(E,1)") != std::string::npos);
}

TEST_CASE("usage errors exit with 2")
{
    CHECK(run({}).code == 2);
    CHECK(run({"frobnicate"}).code == 2);
    CHECK(run({"verify", "--identity", "nonsense"}).code == 2);
    CHECK(run({"curve", "describe", "builtin:11", "--no-such-flag"}).code == 2);
    CHECK(run({"example", "four"}).code == 2);
    const Run h = run({"--help"});
    CHECK(h.code == 0);
    CHECK(h.out.find("selftest") != std::string::npos);
}

TEST_CASE("selftest fast mode and the mutation harness")
{
    const Json ok = run_json({"selftest", "--prec", "8"});
    CHECK(ok["result"]["pass"] == true);
    CHECK(ok["result"]["criteria"].size() == 7);

    const Json bad = run_json({"selftest", "--prec", "8", "--corrupt-a", "5"}, 1);
    const Json &c2 = bad["result"]["criteria"][1];
    CHECK(c2["pass"] == false);
    CHECK(c2["details"][0].get<std::string>().find("logalg1a prec=8 mode=exact: exp(lambda) = Phi fails at t^5") !=
          std::string::npos);
}
