#include "doctest.h"
#include "testutil.hpp"

#include "logalg/series.hpp"
#include "logalg/series_io.hpp"

using namespace logalg;
using testutil::random_qseries;
using QS = TruncatedSeries<Rational>;
using PS = TruncatedSeries<QPoly>;

namespace {

QS poly_series(std::vector<long> c, int prec)
{
    std::vector<Rational> r(c.begin(), c.end());
    return QS(0, std::move(r), prec);
}

Rational q(long n, long d = 1) { return make_rational(n, d); }

} // namespace

TEST_CASE("inverse of 1 - t is the geometric series")
{
    const QS s = poly_series({1, -1}, 10);
    const QS inv = inverse(s);
    CHECK(inv.precision() == 10);
    for (int n = 0; n < 10; ++n) {
        CHECK(inv.coeff(n) == 1);
    }
    const QS one = s * inv;
    CHECK(one == QS::constant(1, 10));
}

TEST_CASE("precision rule for products")
{
    const QS t = QS::variable(8);
    const QS tt = t * t;
    CHECK(tt.valuation() == 2);
    CHECK(tt.precision() == 9);
    CHECK(tt.coeff(2) == 1);
    CHECK_THROWS_AS(tt.coeff(9), Error);

    // Laurent times power series: min(p1 + v2, p2 + v1).
    const QS a = random_qseries(-2, 5);
    const QS b = random_qseries(1, 7);
    CHECK((a * b).precision() == std::min(5 + 1, 7 - 2));
}

TEST_CASE("unknown coefficients are not zero")
{
    const QS z = QS::zero(5);
    CHECK(z.is_zero());
    CHECK(z.valuation() == 5);
    CHECK(z.coeff(4) == 0);
    CHECK_THROWS(z.coeff(5));
    CHECK((z + QS::variable(9)).precision() == 5);
}

TEST_CASE("errors carry their names")
{
    CHECK_THROWS_WITH_AS(inverse(QS::zero(5)), doctest::Contains("NotAUnit"), Error);
    CHECK_THROWS_WITH_AS(QS::variable(5) + QS::variable(5, Var::z), doctest::Contains("RingMismatch"), Error);
    CHECK_NOTHROW(QS::variable(5) + QS::variable(5, Var::q));
    CHECK_THROWS_WITH_AS(compose(QS::variable(5), poly_series({1, 1}, 5)), doctest::Contains("CompositionDomain"),
                         Error);
    CHECK_THROWS_WITH_AS(reverse(poly_series({0, 0, 1}, 5)), doctest::Contains("NotReversible"), Error);
    CHECK_THROWS_WITH_AS(integrate(QS::monomial(1, -1, 4)), doctest::Contains("LogarithmicTerm"), Error);

    // Over Q[u] a non-constant leading coefficient is not a unit.
    const PS s = PS::constant(QPoly::variable(), 4) + PS::variable(4);
    CHECK_THROWS_WITH_AS(inverse(s), doctest::Contains("NotAUnit"), Error);
}

TEST_CASE("compose")
{
    const QS t2 = QS::monomial(1, 2, 10);
    const QS g = poly_series({0, 1, 1}, 10);
    const QS r = compose(t2, g);
    CHECK(r.coeff(2) == 1);
    CHECK(r.coeff(3) == 2);
    CHECK(r.coeff(4) == 1);
    for (int n = 5; n < r.precision(); ++n) {
        CHECK(r.coeff(n) == 0);
    }

    SUBCASE("linear and multiplicative in the outer series")
    {
        const QS f1 = random_qseries(0, 12);
        const QS f2 = random_qseries(0, 12);
        const QS in = testutil::random_reversible(12);
        CHECK(compose(f1 + f2, in) == compose(f1, in) + compose(f2, in));
        CHECK(!first_mismatch(compose(f1 * f2, in), compose(f1, in) * compose(f2, in)));
    }

    SUBCASE("Laurent outer against direct expansion")
    {
        // f = c(-2) t^-2 + c(-1) t^-1 + ... composed with g; oracle expands powers of 1/g by hand.
        const QS f = random_qseries(-2, 9);
        const QS in = testutil::random_reversible(14);
        const QS got = compose(f, in);
        QS expect = QS::zero(got.precision());
        const QS ginv = inverse(in);
        for (int k = -2; k < f.precision(); ++k) {
            QS term = QS::constant(1, 40);
            const QS &base = k < 0 ? ginv : in;
            for (int j = 0; j < std::abs(k); ++j) {
                term = term * base;
            }
            expect = expect + term.scaled(f.coeff(k)).padded(got.precision());
        }
        CHECK(!first_mismatch(got, expect));
        CHECK(got.valuation() == -2);
    }
}

TEST_CASE("Laurent composition never claims coefficients it did not compute")
{
    for (int v = -5; v <= -1; ++v) {
        const QS outer = QS::monomial(1, v, 20);
        const QS inner = QS(1, {q(2), q(1), q(-3)}, 15);
        const QS got = compose(outer, inner);
        const QS exact = compose(outer, inner.padded(60));
        CHECK(got.precision() == v + 14);
        CHECK(!first_mismatch(got, exact));
    }
}

TEST_CASE("reverse agrees with Lagrange inversion and round-trips")
{
    CHECK(reverse(QS::variable(10)) == QS::variable(10));
    for (int trial = 0; trial < 50; ++trial) {
        const QS s = testutil::random_reversible(12);
        const QS g = reverse(s);
        CHECK(g.precision() == 12);
        CHECK(g == reverse_lagrange(s));
        CHECK(compose(s, g) == QS::variable(12));
        CHECK(compose(g, s) == QS::variable(12));
    }
}

TEST_CASE("derive and integrate")
{
    CHECK(derive(QS::constant(q(7, 3), 6)).is_zero());
    for (int trial = 0; trial < 20; ++trial) {
        const QS f = random_qseries(0, 15);
        CHECK(derive(integrate(f)) == f);
        CHECK(integrate(f).coeff(0) == 0);
    }
    // Laurent input without a 1/t term integrates fine.
    const QS l = QS(-3, {1, 5, 0}, 4);
    CHECK(derive(integrate(l)) == l);
}

TEST_CASE("ring axioms over Q and Q[u]")
{
    for (int trial = 0; trial < 10; ++trial) {
        const QS a = random_qseries(0, 12);
        const QS b = random_qseries(1, 13);
        const QS c = random_qseries(-1, 12);
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK(a * b == b * a);
        CHECK(a + b == b + a);
    }
    auto gen = [] { return testutil::small_poly(2); };
    for (int trial = 0; trial < 5; ++trial) {
        const PS a = testutil::random_series<QPoly>(0, 12, gen);
        const PS b = testutil::random_series<QPoly>(0, 12, gen);
        const PS c = testutil::random_series<QPoly>(0, 12, gen);
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK(a * b == b * a);
    }
}

TEST_CASE("precision soundness: recomputing at higher precision agrees below the old one")
{
    const QS s = testutil::random_reversible(30);
    const QS f = random_qseries(0, 30);
    auto pipeline = [&](int p) { return compose(f.truncated(p), reverse(s.truncated(p))) * inverse(f.truncated(p)); };
    const QS lo = pipeline(18);
    const QS hi = pipeline(28);
    CHECK(lo.precision() == 18);
    CHECK(!first_mismatch(lo, hi));
}

TEST_CASE("pretty printer and serialization")
{
    const QS s(1, {q(1), q(-1), q(-1, 3)}, 8);
    CHECK(to_string(s) == "t - t^2 - 1/3*t^3 + O(t^8)");
    CHECK(to_string(QS::zero(3)) == "O(t^3)");
    CHECK(to_string(QS(-2, {q(1), q(2)}, 0)) == "t^-2 + 2*t^-1 + O(t^0)");

    for (int trial = 0; trial < 20; ++trial) {
        const QS r = random_qseries(trial % 5 - 2, 10);
        CHECK(parse_series(serialize(r)) == r);
    }
    CHECK(serialize(s) == "1;8;1,-1,-1/3,0,0,0,0");
    CHECK_THROWS_WITH_AS(parse_series("1;x;3"), doctest::Contains("ParseError"), Error);
    CHECK_THROWS_WITH_AS(parse_series("1;3;1,2,3,4"), doctest::Contains("ParseError"), Error);
}
