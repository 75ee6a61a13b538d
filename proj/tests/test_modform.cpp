#include "doctest.h"
#include "testutil.hpp"

#include "logalg/curve.hpp"
#include "logalg/modform.hpp"
#include "logalg/point.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

using namespace logalg;

namespace {

Rational q(long n, long d = 1) { return make_rational(n, d); }

CurveModel curve11() { return derive_invariants({0, -1, 1, -10, -20}, 11); }

// Naive expansion of prod (1 - q^m)^2 (1 - q^(11m))^2 by multiplying binomials one at a time.
std::vector<long> brute_force_level11(int len)
{
    std::vector<long> p(static_cast<std::size_t>(len), 0);
    p[0] = 1;
    auto times_binomial = [&](int step) {
        for (int i = len - 1; i >= step; --i) {
            p[static_cast<std::size_t>(i)] -= p[static_cast<std::size_t>(i - step)];
        }
    };
    for (int m = 1; m < len; ++m) {
        times_binomial(m);
        times_binomial(m);
        if (11 * m < len) {
            times_binomial(11 * m);
            times_binomial(11 * m);
        }
    }
    return p;
}

std::string coeff_text(const NewformCoeffs &f, int upto)
{
    std::ostringstream os;
    os << "# level " << f.level << "\n";
    for (int n = 1; n < upto; ++n) {
        os << n << " " << f[n] << "\n";
    }
    return os.str();
}

std::map<long, long> primes_of(const NewformCoeffs &f)
{
    std::map<long, long> ap;
    for (int p = 2; p < f.size(); ++p) {
        bool prime = true;
        for (int d = 2; d * d <= p; ++d) {
            prime = prime && p % d != 0;
        }
        if (prime) {
            ap[p] = f[p];
        }
    }
    return ap;
}

} // namespace

TEST_CASE("eta product for level 11")
{
    const NewformCoeffs f = eta_product_coeffs(11, 201);
    const std::vector<long> first{1, -2, -1, 2, 1, 2, -2, 0, -2, -2};
    for (int n = 1; n <= 10; ++n) {
        CHECK(f[n] == first[static_cast<std::size_t>(n - 1)]);
    }
    CHECK(f[6] == f[2] * f[3]);
    CHECK(f.provenance == Provenance::EtaProduct);
    CHECK_NOTHROW(validate_eigenform(f));

    const auto brute = brute_force_level11(200);
    for (int n = 1; n < 201; ++n) {
        CHECK(f[n] == brute[static_cast<std::size_t>(n - 1)]);
    }
    CHECK_THROWS_WITH_AS(eta_product_coeffs(13, 20), doctest::Contains("NoEtaProduct"), Error);
    CHECK_THROWS_WITH_AS(f[201], doctest::Contains("InsufficientPrimeData"), Error);
}

TEST_CASE("eta products from config text")
{
    const EtaProduct p = parse_eta_config("# X0(11)\n1 2\n11 2\n");
    const NewformCoeffs f = eta_product_coeffs(p, 11, 100);
    CHECK(f.a == eta_product_coeffs(11, 100).a);
    EtaTable table;
    table.add(11, p);
    CHECK(eta_product_coeffs(11, 50, table).a == eta_product_coeffs(11, 50).a);
    CHECK_THROWS_WITH_AS(parse_eta_config("1 x\n"), doctest::Contains("line 1"), Error);
    CHECK_THROWS_WITH_AS(parse_eta_config("# nothing\n"), doctest::Contains("ParseError"), Error);
    CHECK_THROWS_WITH_AS(eta_product_coeffs(parse_eta_config("1 24\n2 1\n"), 2, 10), doctest::Contains("InvalidArgument"),
                         Error);
}

TEST_CASE("every builtin eta product is a Hecke eigenform")
{
    for (long level : EtaTable::builtin().levels()) {
        CAPTURE(level);
        const NewformCoeffs f = eta_product_coeffs(level, 300);
        CHECK_NOTHROW(validate_eigenform(f));
    }
}

TEST_CASE("Hecke expansion")
{
    const NewformCoeffs eta = eta_product_coeffs(11, 501);
    const NewformCoeffs h = hecke_expand(primes_of(eta), 11, 501);
    CHECK(h[1] == 1);
    CHECK(h[4] == 2);
    CHECK(h.a == eta.a);
    CHECK(h.provenance == Provenance::HeckeFromPrimes);

    std::map<long, long> partial{{2, -2}, {3, -1}, {5, 1}};
    CHECK_THROWS_WITH_AS(hecke_expand(partial, 11, 10), doctest::Contains("InsufficientPrimeData"), Error);
    CHECK(hecke_expand(partial, 11, 7)[6] == 2);
    CHECK(hecke_expand({}, 11, 2)[1] == 1);
}

TEST_CASE("coefficient files")
{
    const NewformCoeffs eta = eta_product_coeffs(11, 60);
    const NewformCoeffs back = parse_coeffs(coeff_text(eta, 60), 11);
    CHECK(back.a == eta.a);
    CHECK(back.provenance == Provenance::File);

    // Round-trip through an actual file.
    const std::string path = "logalg_test_coeffs.txt";
    {
        std::ofstream out(path);
        out << coeff_text(eta, 30);
    }
    CHECK(load_coeffs(path, 11).a == std::vector<long>(eta.a.begin(), eta.a.begin() + 30));
    std::remove(path.c_str());

    std::string text = coeff_text(eta, 10);
    const auto pos = text.find("\n6 2\n");
    REQUIRE(pos != std::string::npos);
    text.replace(pos, 5, "\n6 3\n");
    CHECK_THROWS_WITH_AS(parse_coeffs(text, 11), doctest::Contains("InvalidEigenform"), Error);
    CHECK_THROWS_WITH_AS(parse_coeffs("", 11), doctest::Contains("ParseError"), Error);
    CHECK_THROWS_WITH_AS(parse_coeffs("1 1\n2 -2\nthree -1\n"), doctest::Contains("line 3"), Error);
    CHECK_THROWS_WITH_AS(parse_coeffs("1 1\n3 -1\n"), doctest::Contains("line 2"), Error);
    CHECK_THROWS_WITH_AS(load_coeffs("/nonexistent/file"), doctest::Contains("ParseError"), Error);
    // a_4 = a_2^2 - 2 at a good prime; 3 breaks it.
    CHECK_THROWS_WITH_AS(parse_coeffs("1 1\n2 -2\n3 -1\n4 3\n", 11), doctest::Contains("InvalidEigenform"), Error);
}

TEST_CASE("lambda series")
{
    const NewformCoeffs f = eta_product_coeffs(11, 40);
    const QSeries lam = lambda_series(f, 6);
    CHECK(lam == QSeries(1, {q(1), q(-1), q(-1, 3), q(1, 2), q(1, 5)}, 6));
    const QSeries big = lambda_series(f, 30);
    CHECK((derive(big).shifted(1)) == newform_series(f, 30));
}

TEST_CASE("Honda formal group")
{
    const NewformCoeffs f = eta_product_coeffs(11, 40);
    const HondaReport rep = honda_group_law(f, 16);
    CHECK(rep.integral);
    CHECK(rep.law.coeff(1, 0) == 1);
    CHECK(rep.law.coeff(0, 1) == 1);
    CHECK(rep.law.coeff(1, 1) == -f[2]);
    for (int i = 2; i < 16; ++i) {
        CHECK(rep.law.coeff(i, 0) == 0);
    }
    // Same law through Lagrange reversion.
    const QSeries lam = lambda_series(f, 12);
    const GroupLaw alt = compose(reverse_lagrange(lam), GroupLaw::in_t1(lam, 12) + GroupLaw::in_t2(lam, 12));
    CHECK(!first_mismatch(alt, rep.law));

    // A sequence that is not an eigenform breaks integrality.
    NewformCoeffs bad = f;
    bad.a[3] = 0;
    const HondaReport broken = honda_group_law(bad, 10);
    CHECK_FALSE(broken.integral);
    REQUIRE(broken.offending);
    CHECK_FALSE(is_integral(broken.offending_value));
}

TEST_CASE("modular parametrization series for level 11")
{
    const CurveModel c = curve11();
    const NewformCoeffs f = eta_product_coeffs(11, 40);
    const ParametrizationSeries ps = modular_xy(f, c, 30);
    CHECK(ps.X.precision() == 30);
    CHECK(ps.Y.precision() == 30);
    const std::vector<Rational> X{1, 2, q(11, 3), 5, 8, 1, 7};
    const std::vector<Rational> Y{-1, -3, -7, q(-25, 2), -17, -26, -19};
    for (int i = 0; i < 7; ++i) {
        CHECK(ps.X.coeff(i - 2) == X[static_cast<std::size_t>(i)]);
        CHECK(ps.Y.coeff(i - 3) == Y[static_cast<std::size_t>(i)]);
    }
    const std::vector<Rational> Phi{1, -1, q(-1, 3), q(1, 2), q(13, 3), q(-61, 3), q(529, 12)};
    for (int i = 0; i < 7; ++i) {
        CHECK(ps.Phi.coeff(i + 1) == Phi[static_cast<std::size_t>(i)]);
    }
    CHECK(ps.Phi.coeff(5) == c.c4 / 120 + q(f[5], 5));

    const QSeries residual = ps.Y * ps.Y - (ps.X * ps.X * ps.X + ps.X.scaled(c.A) + QSeries::constant(c.B, 99, Var::q));
    CHECK(residual.is_zero());
    CHECK(residual.precision() >= 30 - 6);
    CHECK(!first_mismatch(derive(ps.X).shifted(1), (ps.Y * newform_series(f, 40)).scaled(Rational(2))));

    SUBCASE("X and Y are the formal coordinates pulled back along Phi")
    {
        const FormalXY xy = formal_xy(c, 30);
        CHECK(!first_mismatch(compose(xy.x, ps.Phi), ps.X));
        CHECK(!first_mismatch(compose(xy.y, ps.Phi), ps.Y));
        const QSeries w = invariant_differential(c, 30);
        CHECK(!first_mismatch(compose(w, ps.Phi) * derive(ps.Phi), newform_series(f, 31).shifted(-1)));
    }

    SUBCASE("Phi is a morphism from the Honda group to the curve's formal group")
    {
        const int P = 15;
        const GroupLaw L = honda_group_law(f, P).law;
        const GroupLaw F = group_law(c, P);
        auto lift = [](const Rational &x) { return x; };
        const QSeries a = testutil::random_reversible(P);
        const QSeries b = testutil::random_qseries(1, P);
        const QSeries phi = ps.Phi.truncated(P);
        const QSeries lhs = compose(phi, L.evaluate(a, b, lift));
        const QSeries rhs = F.evaluate(compose(phi, a), compose(phi, b), lift);
        CHECK(std::min(lhs.precision(), rhs.precision()) >= P - 1);
        CHECK(!first_mismatch(lhs, rhs));
    }
}

TEST_CASE("generic shape of the parametrization series")
{
    // The recursion makes sense for any normalized sequence and any curve.
    for (int trial = 0; trial < 5; ++trial) {
        const CurveModel c = curve_from_g(testutil::small_rational(), testutil::small_rational());
        NewformCoeffs f;
        f.a = {0, 1};
        for (int n = 2; n < 20; ++n) {
            f.a.push_back(std::uniform_int_distribution<long>(-5, 5)(testutil::rng()));
        }
        const Rational a2 = f[2], a3 = f[3], a4 = f[4], a5 = f[5];
        const ParametrizationSeries ps = modular_xy(f, c, 12);
        CHECK(ps.X.coeff(-2) == 1);
        CHECK(ps.X.coeff(-1) == -a2);
        CHECK(ps.X.coeff(0) == 3 * a2 * a2 / 4 - 2 * a3 / 3);
        CHECK(ps.Y.coeff(-3) == -1);
        CHECK(ps.Y.coeff(-2) == 3 * a2 / 2);
        CHECK(ps.Y.coeff(-1) == -(3 * a2 * a2 - 2 * a3) / 2);
        CHECK(ps.Phi.coeff(2) == a2 / 2);
        CHECK(ps.Phi.coeff(3) == a3 / 3);
        CHECK(ps.Phi.coeff(4) == a4 / 4);
        CHECK(ps.Phi.coeff(5) == c.c4 / 120 + a5 / 5);
        const LogExp le = formal_log_exp(c, 12);
        CHECK(!first_mismatch(compose(le.exp, ps.lambda), ps.Phi));
    }
}

TEST_CASE("shipped levels parametrize their optimal curves integrally")
{
    const std::vector<std::pair<long, std::array<Integer, 5>>> curves{
        {11, {0, -1, 1, -10, -20}}, {14, {1, 0, 1, 4, -6}}, {15, {1, 1, 1, -10, -10}}, {20, {0, 1, 0, 4, 4}},
        {24, {0, -1, 0, -4, 4}},    {27, {0, 0, 1, 0, -7}},  {32, {0, 0, 0, 4, 0}},      {36, {0, 0, 0, 0, 1}}};
    for (const auto &[level, e] : curves) {
        CAPTURE(level);
        const NewformCoeffs f = eta_product_coeffs(level, 80);
        CHECK_NOTHROW(modular_xy(f, derive_invariants(e, level), 70));
        CHECK(honda_group_law(f, 12).integral);
    }
}

TEST_CASE("wrong curve for the coefficients is detected")
{
    const NewformCoeffs f = eta_product_coeffs(11, 80);
    for (const auto &e : {std::array<Integer, 5>{0, 0, 0, -1, 1}, std::array<Integer, 5>{0, 0, 1, -1, 0},
                          std::array<Integer, 5>{0, -1, 1, -10, -19}}) {
        CHECK_THROWS_WITH_AS(modular_xy(f, derive_invariants(e), 70), doctest::Contains("NotParametrization"), Error);
    }
    // Curves isogenous to the optimal one whose formal groups are isomorphic
    // over Z pass the check: it detects incompatible inputs, not optimality.
    CHECK_NOTHROW(modular_xy(f, derive_invariants({0, -1, 1, 0, 0}, 11), 70));
    const NewformCoeffs g = eta_product_coeffs(14, 80);
    CHECK_THROWS_WITH_AS(modular_xy(g, curve11(), 70), doctest::Contains("NotParametrization"), Error);
    CHECK_THROWS_WITH_AS(modular_xy(f, curve11(), 78), doctest::Contains("InsufficientPrimeData"), Error);
}
