#include "doctest.h"
#include "testutil.hpp"

#include "logalg/poly.hpp"
#include "logalg/ratfunc.hpp"

using namespace logalg;
using testutil::small_frac;

TEST_CASE("polynomial arithmetic")
{
    const QPoly u = QPoly::variable();
    const QPoly p = u * u - QPoly(1);
    const QPoly r = u - QPoly(1);
    const auto [quot, rem] = QPoly::divmod(p, r);
    CHECK(quot == u + QPoly(1));
    CHECK(rem.is_zero());
    CHECK(QPoly::gcd(p, r) == r);
    CHECK(QPoly::gcd(p * QPoly(make_rational(3, 2)), r * QPoly(5)) == r);
    CHECK(p(make_rational(3)) == 8);
    CHECK(p.inflate(2) == u * u * u * u - QPoly(1));
    CHECK(p.derivative() == QPoly(2) * u);
    CHECK(p.to_string() == "u^2 - 1");
    CHECK_THROWS_WITH_AS(QPoly::exact_div(p, u), doctest::Contains("NotAUnit"), Error);
}

TEST_CASE("polynomial gcd divides both and is monic")
{
    for (int trial = 0; trial < 30; ++trial) {
        const QPoly common = testutil::nonzero_poly(2);
        const QPoly a = common * testutil::nonzero_poly(3);
        const QPoly b = common * testutil::nonzero_poly(3);
        const QPoly g = QPoly::gcd(a, b);
        CHECK(g.leading() == 1);
        CHECK(QPoly::divmod(a, g).second.is_zero());
        CHECK(QPoly::divmod(b, g).second.is_zero());
        CHECK(QPoly::divmod(g, common.monic()).second.is_zero());
    }
}

TEST_CASE("fraction field stays reduced with a monic denominator")
{
    for (int trial = 0; trial < 40; ++trial) {
        const QFrac a = small_frac();
        const QFrac b = small_frac();
        const QFrac c = small_frac();
        for (const QFrac &x : {a + b, a - b, a * b, b.is_zero() ? a : a / b}) {
            CHECK(QPoly::gcd(x.num(), x.den()).degree() == 0);
            CHECK(x.den().leading() == 1);
        }
        CHECK((a + b) * c == a * c + b * c);
        CHECK((a * b) * c == a * (b * c));
        if (!a.is_zero()) {
            CHECK(a * a.inverse() == QFrac(1));
        }
    }
    const QFrac f(QPoly::variable() * QPoly::variable() - QPoly(1), QPoly(2) * QPoly::variable() - QPoly(2));
    CHECK(f.den() == QPoly(1));
    CHECK(f.num() == (QPoly::variable() + QPoly(1)) / make_rational(2));
    CHECK_THROWS_WITH_AS(QFrac(QPoly(1), QPoly::variable())(Rational(0)), doctest::Contains("NotAUnit"), Error);
}
