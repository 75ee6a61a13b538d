#include "doctest.h"
#include "testutil.hpp"

#include "logalg/cyclotomic.hpp"
#include "logalg/lvalues.hpp"

#include <cmath>
#include <numbers>

using namespace logalg;

namespace {

constexpr Real pi = std::numbers::pi_v<Real>;

CurveModel curve11() { return derive_invariants({0, -1, 1, -10, -20}, 11); }

Complex unit_root(long j, long n) { return std::polar<Real>(1, 2 * pi * j / n); }

// Direct complex sum of chi(j) e^(2 pi i j/m).
Complex brute_gauss(const DirichletCharacter &chi)
{
    Complex g = 0;
    for (int j = 0; j < chi.modulus(); ++j) {
        g += chi(j) * unit_root(j, chi.modulus());
    }
    return g;
}

long powmod(long b, long e, long m)
{
    long r = 1;
    for (b %= m; e > 0; e >>= 1, b = b * b % m) {
        if (e & 1) {
            r = r * b % m;
        }
    }
    return r;
}

// Real period by quadrature: Omega = integral over x >= e1 of dx/sqrt(x^3 + Ax + B),
// with x = e1 + tan(theta)^2 and Simpson's rule on [0, pi/2].
Real omega_by_quadrature(Real A, Real B, Real e1)
{
    auto g = [&](Real th) {
        if (th >= pi / 2) {
            return Real(2);
        }
        const Real s = std::tan(th);
        const Real x = e1 + s * s;
        const Real q = x * x + e1 * x + e1 * e1 + A;
        return 2 / (std::cos(th) * std::cos(th) * std::sqrt(q));
    };
    const int n = 20000;
    const Real h = pi / 2 / n;
    Real s = g(0) + g(pi / 2);
    for (int i = 1; i < n; ++i) {
        s += (i % 2 ? 4 : 2) * g(i * h);
    }
    return s * h / 3;
}

} // namespace

TEST_CASE("cyclotomic arithmetic")
{
    CHECK(cyclotomic_polynomial(7).to_string('z') == "z^6 + z^5 + z^4 + z^3 + z^2 + z + 1");
    CHECK(cyclotomic_polynomial(21).degree() == 12);
    const CycloElem z = CycloElem::zeta(21, 1);
    CycloElem p(21, Rational(1));
    for (int i = 0; i < 21; ++i) {
        p *= z;
    }
    CHECK(p == CycloElem(21, Rational(1)));
    const CycloElem s = CycloElem::sqrt_minus3(21);
    CHECK(s * s == CycloElem(21, Rational(-3)));
    CHECK(std::abs(s.to_complex() - Complex(0, std::sqrt(Real(3)))) < 1e-15L);
    CHECK(s.conj() == s * Rational(-1));
    CHECK_THROWS_WITH_AS(z + CycloElem::zeta(7, 1), doctest::Contains("RingMismatch"), Error);
    CHECK_THROWS_AS(CycloElem::sqrt_minus3(7), Error);
}

TEST_CASE("Dirichlet characters")
{
    SUBCASE("quadratic characters agree with Euler's criterion")
    {
        for (int D : {-3, -7, -11, 5, 13, -19}) {
            CAPTURE(D);
            const auto chi = DirichletCharacter::quadratic(D);
            const long p = std::abs(D);
            for (long n = 1; n < p; ++n) {
                const long e = powmod(n, (p - 1) / 2, p);
                CHECK(chi(n).real() == (e == 1 ? 1 : -1));
            }
            CHECK(chi(0) == Complex(0));
            CHECK(chi.is_primitive());
        }
        const auto chi4 = DirichletCharacter::quadratic(-4);
        CHECK(chi4(1).real() == 1);
        CHECK(chi4(3).real() == -1);
        CHECK(chi4(2) == Complex(0));
        CHECK_THROWS_AS(DirichletCharacter::quadratic(9), Error);
        CHECK_THROWS_AS(DirichletCharacter::quadratic(16), Error);
        CHECK_THROWS_AS(DirichletCharacter::quadratic(-75), Error);
    }

    SUBCASE("cubic character mod 7")
    {
        const auto psi = DirichletCharacter::parse("cubic:7");
        CHECK(psi.exponent(1) == 0);
        CHECK(psi.exponent(2) == 2);
        CHECK(psi.exponent(3) == 1);
        CHECK(psi.exponent(-11) == 1); // psi(-11) = rho
        CHECK(psi.exponent(-1) == 0);
        CHECK(psi.field_order() == 21);
        CHECK(psi.conj().exponent(3) == 2);
        for (long a = 1; a < 7; ++a) {
            for (long b = 1; b < 7; ++b) {
                CHECK(std::abs(psi(a * b) - psi(a) * psi(b)) < 1e-15L);
            }
        }
    }

    SUBCASE("parsing and validation")
    {
        CHECK(DirichletCharacter::parse("trivial").modulus() == 1);
        CHECK(DirichletCharacter::parse("quad:-3").name() == "quad:-3");
        CHECK(DirichletCharacter::parse("order:6:7").order() == 6);
        CHECK_THROWS_WITH_AS(DirichletCharacter::parse("cubic"), doctest::Contains("ParseError"), Error);
        CHECK_THROWS_WITH_AS(DirichletCharacter::parse("quad:x"), doctest::Contains("ParseError"), Error);
        CHECK_THROWS_AS(DirichletCharacter::parse("cubic:5"), Error);
        CHECK_THROWS_AS(DirichletCharacter(5, 2, {-1, 0, 0, 1, 1}), Error); // not multiplicative
    }
}

TEST_CASE("Gauss sums")
{
    const auto chi = DirichletCharacter::quadratic(-3);
    const GaussSum g3 = gauss_sum(chi);
    CHECK(g3.exact == CycloElem::sqrt_minus3(6));
    CHECK(std::abs(g3.value - Complex(0, std::sqrt(Real(3)))) < 1e-15L);

    const auto psi = DirichletCharacter::parse("cubic:7");
    const GaussSum g = gauss_sum(psi);
    const GaussSum gbar = gauss_sum(psi.conj());
    CHECK(std::abs(g.value - brute_gauss(psi)) < 1e-15L);
    CHECK(std::abs(std::norm(brute_gauss(psi)) - 7) < 1e-14L);
    CHECK(std::abs(brute_gauss(psi) * brute_gauss(psi.conj()) - Complex(7)) < 1e-14L);
    CHECK(g.exact * gbar.exact == CycloElem(21, Rational(7)));
    CHECK(g.exact * g.exact.conj() == CycloElem(21, Rational(7)));

    for (const char *spec : {"quad:-4", "quad:5", "quad:-7", "order:4:13", "order:6:19"}) {
        CAPTURE(spec);
        const auto c = DirichletCharacter::parse(spec);
        const GaussSum s = gauss_sum(c);
        CHECK(s.exact * s.exact.conj() == CycloElem(c.field_order(), Rational(c.modulus())));
        CHECK(std::abs(s.value - brute_gauss(c)) < 1e-14L);
    }

    // The character mod 6 induced from the one mod 3.
    const DirichletCharacter induced(6, 2, {-1, 0, -1, -1, -1, 1});
    CHECK(!induced.is_primitive());
    CHECK_THROWS_WITH_AS(gauss_sum(induced), doctest::Contains("NotPrimitive"), Error);

    SUBCASE("character sums at roots of unity")
    {
        // gamma(zeta^k) = conj(psi)(k) g(psi), exactly in Q(zeta_21).
        for (int k = 0; k < 7; ++k) {
            CAPTURE(k);
            CycloElem gamma(21, Rational(0)), gamma_bar(21, Rational(0));
            for (int j = 1; j < 7; ++j) {
                gamma += psi.exact(j) * CycloElem::zeta(21, 3L * j * k);
                gamma_bar += psi.conj().exact(j) * CycloElem::zeta(21, 3L * j * k);
            }
            CHECK(gamma == psi.conj().exact(k) * g.exact);
            CHECK(gamma_bar == psi.exact(k) * gbar.exact);
        }
    }
}

TEST_CASE("series evaluation")
{
    const QSeries s = QSeries::constant(Rational(7), 10) + QSeries::variable(10);
    CHECK(eval_series(s, 0).value == Complex(7));
    CHECK_THROWS_WITH_AS(eval_series(QSeries::monomial(Rational(1), -2, 5), 0), doctest::Contains("PoleAt"), Error);

    std::vector<Rational> ones(80, Rational(1));
    const QSeries geom(0, ones, 80);
    const SeriesValue v = eval_series(geom, Complex(0.5L));
    CHECK(std::abs(v.value - Complex(2)) <= v.tail * 1.01L);
    CHECK(v.tail < 1e-20L);
    CHECK(!v.heuristic);
    CHECK(std::abs(v.ratio - 0.5L) < 1e-12L);
    CHECK_THROWS_WITH_AS(eval_series(geom, Complex(1.5L)), doctest::Contains("DivergenceSuspected"), Error);
    CHECK(eval_series(geom, Complex(0.95L)).heuristic);
    CHECK_THROWS_WITH_AS(eval_series(geom, Complex(0.95L), true), doctest::Contains("DivergenceSuspected"), Error);

    SUBCASE("parametrization series at the fixed point of w_11")
    {
        const NewformCoeffs f = eta_product_coeffs(11, 210);
        const ParametrizationSeries ps = modular_xy(f, curve11(), 200);
        const Complex q0 = std::exp(-2 * pi / std::sqrt(Real(11)));
        const SeriesValue phi = eval_series(ps.Phi, q0);
        const SeriesValue X = eval_series(ps.X, q0);
        const SeriesValue Y = eval_series(ps.Y, q0);
        CHECK(std::abs(phi.value - Complex(0.1270624598L)) < 1e-10L);
        CHECK(std::abs(X.value.real() - 62.111554L) < 1e-6L);
        CHECK(std::abs(Y.value.real() + 488.826947L) < 1e-6L);
        CHECK(std::abs(phi.value + X.value / Y.value) < 1e-9L);
    }
}

TEST_CASE("central value of the level 11 L-function")
{
    const NewformCoeffs f = eta_product_coeffs(11, 900);
    const NumericValue L = L1_rapid(f, 11, 1, 400);
    CHECK(std::abs(L.value.real() - 0.2538418608L) < 1e-9L);
    CHECK(L1_rapid(f, 11, -1, 400).value == Complex(0));
    const NumericValue L2 = L1_rapid(f, 11, 1, 800);
    CHECK(std::abs(L2.value - L.value) <= L.tail);
    const NumericValue short_sum = L1_rapid(f, 11, 1, 20);
    CHECK(std::abs(L2.value - short_sum.value) <= short_sum.tail);
    CHECK_THROWS_AS(L1_rapid(f, 11, 0, 10), Error);
}

TEST_CASE("twisted L-values")
{
    const NewformCoeffs f = eta_product_coeffs(11, 2100);
    const TwistedValue chi = L1_twisted(f, 11, DirichletCharacter::quadratic(-3), 1, 2000);
    CHECK(std::abs(chi.value - Complex(1.6844963329L)) < 1e-9L);
    REQUIRE(chi.imag_residual);
    CHECK(*chi.imag_residual < 1e-15L);
    CHECK(chi.C == CycloElem(6, Rational(1)));

    const auto psi = DirichletCharacter::parse("cubic:7");
    const TwistedValue l = L1_twisted(f, 11, psi, 1, 2000);
    CHECK(std::abs(l.value.real() - 1.997106827L) < 1e-8L);
    CHECK(std::abs(l.value.imag() - 1.328439294L) < 1e-8L);
    CHECK(!l.imag_residual);
    // C = rho g(psi)/g(conj psi).
    const Complex C = unit_root(1, 3) * brute_gauss(psi) / brute_gauss(psi.conj());
    CHECK(std::abs(l.C.to_complex() - C) < 1e-15L);

    const TwistedValue plain = L1_twisted(f, 11, DirichletCharacter::trivial(), 1, 400);
    CHECK(std::abs(plain.value - L1_rapid(f, 11, 1, 400).value) < 1e-15L);
    CHECK(std::abs(L1_twisted(f, 11, DirichletCharacter::trivial(), -1, 400).value) < 1e-15L);

    CHECK_THROWS_WITH_AS(L1_twisted(f, 11, DirichletCharacter::quadratic(-11), 1, 100), doctest::Contains("BadTwist"),
                         Error);
    CHECK_THROWS_WITH_AS(L1_twisted(f, 11, DirichletCharacter(6, 2, {-1, 0, -1, -1, -1, 1}), 1, 100),
                         doctest::Contains("NotPrimitive"), Error);
}

TEST_CASE("period lattice")
{
    const CurveModel c = curve11();
    const PeriodLattice L = periods(c);
    CHECK(L.components == 1);
    CHECK(std::abs(L.Omega - 1.2692093042L) < 1e-9L);
    CHECK(std::abs(L.OmegaPrime.imag() + 1.4588166169L) < 1e-9L);
    CHECK(std::abs(L.OmegaPrime.real() - L.Omega / 2) < 1e-15L);

    const Real A = to_long_double(c.A), B = to_long_double(c.B);
    const auto e = real_roots(A, B);
    REQUIRE(e.size() == 1);
    CHECK(std::abs(omega_by_quadrature(A, B, e[0]) - L.Omega) < 1e-12L);

    // (x, y) -> (4x, 8y) maps the curve to A' = 16A, B' = 64B and divides periods by 2.
    const PeriodLattice L2 = periods(16 * A, 64 * B);
    CHECK(std::abs(L2.Omega - L.Omega / 2) < 1e-15L);
    CHECK(std::abs(L2.OmegaPrime - L.OmegaPrime / Real(2)) < 1e-15L);

    SUBCASE("half periods are the roots of the cubic")
    {
        const Real g2 = -4 * A, g3 = -4 * B;
        CHECK(std::abs(wp_numeric(L.Omega / 2, L, g2, g3).wp - Complex(e[0])) < 1e-12L);
        CHECK(std::abs(wp_numeric(L.Omega / 2, L, g2, g3).dwp) < 1e-10L);

        // y^2 = x^3 - 7x + 6 = (x - 1)(x - 2)(x + 3) has two real components.
        const PeriodLattice M = periods(-7, 6);
        CHECK(M.components == 2);
        CHECK(M.OmegaPrime.real() == 0);
        const auto r = real_roots(-7, 6);
        REQUIRE(r.size() == 3);
        CHECK(std::abs(r[0] - 2) < 1e-17L);
        CHECK(std::abs(r[2] + 3) < 1e-17L);
        CHECK(std::abs(omega_by_quadrature(-7, 6, r[0]) - M.Omega) < 1e-12L);
        CHECK(std::abs(wp_numeric(M.Omega / 2, M, 28, -24).wp - Complex(2)) < 1e-12L);
        CHECK(std::abs(wp_numeric(M.OmegaPrime / Real(2), M, 28, -24).wp - Complex(-3)) < 1e-12L);
        CHECK(std::abs(wp_numeric((M.Omega + M.OmegaPrime) / Real(2), M, 28, -24).wp - Complex(1)) < 1e-12L);
    }
}

TEST_CASE("Weierstrass function on the plane")
{
    const CurveModel c = curve11();
    const PeriodLattice L = periods(c);
    const Real g2 = to_long_double(c.g2), g3 = to_long_double(c.g3);
    std::uniform_real_distribution<Real> u(-3, 3);
    for (int i = 0; i < 40; ++i) {
        const Complex z(u(testutil::rng()), u(testutil::rng()));
        CAPTURE(z.real());
        CAPTURE(z.imag());
        const WpValue w = wp_numeric(z, L, g2, g3);
        const Real scale = std::max<Real>(1, std::abs(w.wp));
        CHECK(std::abs(wp_numeric(z + L.Omega, L, g2, g3).wp - w.wp) < 1e-9L * scale);
        CHECK(std::abs(wp_numeric(z + L.OmegaPrime, L, g2, g3).wp - w.wp) < 1e-9L * scale);
        CHECK(std::abs(wp_numeric(-z, L, g2, g3).dwp + w.dwp) < 1e-9L * scale * scale);
        // wp'^2 = 4 wp^3 - g2 wp - g3
        const Complex res = w.dwp * w.dwp - (Real(4) * w.wp * w.wp * w.wp - g2 * w.wp - g3);
        CHECK(std::abs(res) < 1e-9L * scale * scale * scale);
    }
    // Near the origin the Laurent series itself is an oracle.
    const Complex z(0.05L, 0.02L);
    const Complex series = Real(1) / (z * z) + Real(31.0L / 15) * z * z + Real(2501.0L / 756) * std::pow(z, 4) +
                          Real(961.0L / 675) * std::pow(z, 6) + Real(77531.0L / 41580) * std::pow(z, 8);
    CHECK(std::abs(wp_numeric(z, L, g2, g3).wp - series) < 1e-9L);

    CHECK_THROWS_WITH_AS(wp_numeric(0, L, g2, g3), doctest::Contains("PoleAt"), Error);
    CHECK_THROWS_WITH_AS(wp_numeric(L.Omega * Real(3) - L.OmegaPrime, L, g2, g3), doctest::Contains("PoleAt"), Error);
}

TEST_CASE("rational reconstruction of points")
{
    const ShortCurve<Rational> E{curve11().A, curve11().B};
    const auto p = recognize_point(AffinePoint<Complex>::affine(Complex(15.666666666667L), Complex(-60.499999999998L)),
                                   E, 10, 1e-9L);
    REQUIRE(p);
    CHECK(p->x == Rational(47, 3));
    CHECK(p->y == Rational(-121, 2));
    CHECK(!recognize_point(AffinePoint<Complex>::affine(Complex(62.111554L), Complex(-488.826947L)), E, 100, 1e-9L));
    CHECK(!recognize_point(AffinePoint<Complex>::affine(Complex(47.0L / 3, 0.1L), Complex(-60.5L)), E, 10, 1e-9L));
    CHECK(recognize_point(AffinePoint<Complex>::at_infinity(), E, 10, 1e-9L)->infinity);

    // Exact inputs round-trip.
    const auto q = recognize_point(AffinePoint<Complex>::affine(Complex(14.0L / 3), Complex(5.5L)), E, 10, 1e-12L);
    REQUIRE(q);
    CHECK(q->x == Rational(14, 3));
    CHECK(q->y == Rational(11, 2));

    CHECK_THROWS_WITH_AS(recognize_point(AffinePoint<Complex>::affine(Complex(0.5L), Complex(1.0L / 3)), E, 10, 1e-9L),
                         doctest::Contains("SpuriousMatch"), Error);

    CHECK(rational_reconstruct(0.142857142857142857L, 10, 1e-15L) == Rational(1, 7));
    CHECK(rational_reconstruct(-2.75L, 10, 1e-15L) == Rational(-11, 4));
    CHECK(!rational_reconstruct(std::numbers::pi_v<Real>, 100, 1e-9L));
}

TEST_CASE("multiples on a discrete line")
{
    const PeriodLattice L = periods(curve11());
    const LatticeMultiple m = lattice_multiple(0.2538418608559L, L.Omega, "Omega", Rational(2, 10));
    CHECK(m.k == 1);
    CHECK(m.multiple == Rational(1, 5));
    CHECK(m.expression() == "Omega/5");

    const Complex w = L.Omega - Real(2) * L.OmegaPrime;
    const LatticeMultiple h = lattice_multiple(w / Real(2), w, "Omega - 2*Omega'", Rational(1, 2));
    CHECK(h.k == 1);
    CHECK(h.expression() == "(Omega - 2*Omega')/2");

    CHECK(lattice_multiple(Real(10) * L.Omega, L.Omega, "Omega", Rational(1)).expression() == "10*Omega");
    CHECK(lattice_multiple(Real(-3) * L.Omega, L.Omega, "Omega", Rational(3, 2)).expression() == "-3*Omega");
    CHECK_THROWS_WITH_AS(lattice_multiple(0.2638L, L.Omega, "Omega", Rational(1, 5)), doctest::Contains("NotOnLine"),
                         Error);
    CHECK_THROWS_WITH_AS(lattice_multiple(Complex(0.2538418608559L, 0.01L), L.Omega, "Omega", Rational(1, 5)),
                         doctest::Contains("NotOnLine"), Error);
    CHECK_THROWS_AS(lattice_multiple(1, 1, "x", Rational(1, 61)), Error);
}
