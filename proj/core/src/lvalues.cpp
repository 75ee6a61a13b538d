#include "logalg/lvalues.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numbers>
#include <numeric>

namespace logalg {

namespace {

constexpr Real pi = std::numbers::pi_v<Real>;

Real agm(Real a, Real b)
{
    for (int i = 0; i < 100 && std::fabs(a - b) > 4 * std::numeric_limits<Real>::epsilon() * a; ++i) {
        const Real m = (a + b) / 2;
        b = std::sqrt(a * b);
        a = m;
    }
    return (a + b) / 2;
}

// Laurent coefficients of wp: wp(z) = z^-2 + sum_{k>=1} c_k z^(2k).
std::vector<Real> wp_coefficients(Real g2, Real g3, int count)
{
    std::vector<Real> c(static_cast<std::size_t>(count) + 1, 0);
    if (count >= 1) {
        c[1] = g2 / 20;
    }
    if (count >= 2) {
        c[2] = g3 / 28;
    }
    for (int k = 3; k <= count; ++k) {
        Real s = 0;
        for (int m = 1; m <= k - 2; ++m) {
            s += c[static_cast<std::size_t>(m)] * c[static_cast<std::size_t>(k - 1 - m)];
        }
        c[static_cast<std::size_t>(k)] = 3 * s / ((2 * k + 3) * (k - 2));
    }
    return c;
}

} // namespace

SeriesValue eval_series(const QSeries &s, Complex z, bool certified)
{
    const int v = s.valuation();
    const int p = s.precision();
    if (std::abs(z) == 0) {
        if (v < 0) {
            raise(Errc::PoleAt, "Laurent series evaluated at 0");
        }
        return {p > 0 ? Complex(to_long_double(s.coeff(0))) : Complex(0), 0, 0, false};
    }
    SeriesValue out;
    Complex zn = std::pow(z, v);
    std::vector<std::pair<int, Real>> mags; // (n, |c_n z^n|) for nonzero terms
    for (int n = v; n < p; ++n, zn *= z) {
        const Rational &c = s.coeff(n);
        if (sgn(c) == 0) {
            continue;
        }
        const Complex term = to_long_double(c) * zn;
        out.value += term;
        mags.emplace_back(n, std::abs(term));
    }
    if (mags.size() < 4) {
        out.heuristic = true;
        out.tail = mags.empty() ? 0 : mags.back().second;
        return out;
    }
    // Least-squares slope of log|term| over the last quarter of the terms.
    const std::size_t w = std::max<std::size_t>(4, mags.size() / 4);
    const std::size_t first = mags.size() - w;
    Real sx = 0, sy = 0, sxx = 0, sxy = 0;
    for (std::size_t i = first; i < mags.size(); ++i) {
        const Real x = mags[i].first;
        const Real y = std::log(std::max(mags[i].second, std::numeric_limits<Real>::min()));
        sx += x;
        sy += y;
        sxx += x * x;
        sxy += x * y;
    }
    const Real slope = (w * sxy - sx * sy) / (w * sxx - sx * sx);
    out.ratio = std::exp(slope);
    if (out.ratio >= 1) {
        raise(Errc::DivergenceSuspected, "terms are not decreasing (ratio " + format_real(out.ratio, 4) + ")");
    }
    out.tail = mags.back().second * out.ratio / (1 - out.ratio);
    out.heuristic = out.ratio > Real(0.9);
    if (certified && out.heuristic) {
        raise(Errc::DivergenceSuspected, "|z| is too close to the estimated radius of convergence");
    }
    return out;
}

NumericValue L1_rapid(const NewformCoeffs &f, long N, int eps, int terms)
{
    if (eps != 1 && eps != -1) {
        raise(Errc::InvalidArgument, "sign must be +1 or -1");
    }
    if (eps == -1) {
        return {0, 0};
    }
    const Real x = std::exp(-2 * pi / std::sqrt(static_cast<Real>(N)));
    Real sum = 0, xn = 1;
    for (int n = 1; n <= terms; ++n) {
        xn *= x;
        sum += static_cast<Real>(f[n]) / n * xn;
    }
    // |a_n|/n <= d(n)/sqrt(n) <= 2.
    const Real tail = 2 * 2 * xn * x / (1 - x);
    return {2 * sum, tail};
}

TwistedValue L1_twisted(const NewformCoeffs &f, long N, const DirichletCharacter &chi, int eps, int terms)
{
    if (eps != 1 && eps != -1) {
        raise(Errc::InvalidArgument, "sign must be +1 or -1");
    }
    const int m = chi.modulus();
    if (std::gcd(static_cast<long>(m), N) != 1) {
        raise(Errc::BadTwist, "modulus " + std::to_string(m) + " is not coprime to the level " + std::to_string(N));
    }
    const GaussSum g = gauss_sum(chi);
    const GaussSum gbar = gauss_sum(chi.conj());
    const int M = chi.field_order();
    // 1/g(conj chi) = conj(g(conj chi))/m.
    TwistedValue out;
    out.C = CycloElem(M, Rational(eps)) * chi.exact(-N) * g.exact * gbar.exact.conj() * Rational(1, m);

    const Real x = std::exp(-2 * pi / (m * std::sqrt(static_cast<Real>(N))));
    Real xn = 1;
    for (int n = 1; n <= terms; ++n) {
        xn *= x;
        const Complex c = static_cast<Real>(f[n]) / n * xn;
        out.S += chi(n) * c;
        out.S_conj += std::conj(chi(n)) * c;
    }
    out.value = out.S + out.C.to_complex() * out.S_conj;
    out.tail = 2 * 2 * 2 * xn * x / (1 - x);
    if (chi.is_real()) {
        out.imag_residual = std::fabs(out.value.imag());
    }
    return out;
}

std::pair<Real, Real> PeriodLattice::coordinates(Complex z) const
{
    const Real b = z.imag() / OmegaPrime.imag();
    const Real a = (z.real() - b * OmegaPrime.real()) / Omega;
    return {a, b};
}

std::vector<Real> real_roots(Real A, Real B)
{
    std::vector<Real> r;
    const Real disc = -(4 * A * A * A + 27 * B * B);
    if (disc > 0) {
        const Real s = 2 * std::sqrt(-A / 3);
        const Real phi = std::acos(std::clamp<Real>(3 * B / (A * s), -1, 1)) / 3;
        for (int k = 0; k < 3; ++k) {
            r.push_back(s * std::cos(phi - 2 * pi * k / 3));
        }
    } else {
        const Real D = std::sqrt(std::max<Real>(0, B * B / 4 + A * A * A / 27));
        r.push_back(std::cbrt(-B / 2 + D) + std::cbrt(-B / 2 - D));
    }
    for (Real &x : r) {
        for (int i = 0; i < 4; ++i) {
            const Real d = 3 * x * x + A;
            if (d != 0) {
                x -= (x * x * x + A * x + B) / d;
            }
        }
    }
    std::sort(r.begin(), r.end(), std::greater<>());
    return r;
}

PeriodLattice periods(Real A, Real B)
{
    if (4 * A * A * A + 27 * B * B == 0) {
        raise(Errc::SingularCurve, "x^3 + Ax + B has a repeated root");
    }
    const auto e = real_roots(A, B);
    PeriodLattice L;
    if (e.size() == 3) {
        L.components = 2;
        L.Omega = pi / agm(std::sqrt(e[0] - e[2]), std::sqrt(e[0] - e[1]));
        L.OmegaPrime = Complex(0, -pi / agm(std::sqrt(e[0] - e[2]), std::sqrt(e[1] - e[2])));
    } else {
        L.components = 1;
        const Real a = 3 * e[0];
        const Real b = std::sqrt(3 * e[0] * e[0] + A);
        L.Omega = 2 * pi / agm(2 * std::sqrt(b), std::sqrt(2 * b + a));
        L.OmegaPrime = Complex(L.Omega / 2, -pi / agm(2 * std::sqrt(b), std::sqrt(2 * b - a)));
    }
    return L;
}

PeriodLattice periods(const CurveModel &c) { return periods(to_long_double(c.A), to_long_double(c.B)); }

WpValue wp_numeric(Complex z, const PeriodLattice &L, Real g2, Real g3, Real tol)
{
    const Complex w1 = L.Omega, w2 = L.OmegaPrime;
    auto [a, b] = L.coordinates(z);
    z -= std::round(a) * w1 + std::round(b) * w2;
    // Move to the cell of the nearest lattice point.
    Real r0 = std::numeric_limits<Real>::max();
    Complex nearest = 0;
    for (int i = -1; i <= 1; ++i) {
        for (int j = -1; j <= 1; ++j) {
            const Complex w = Real(i) * w1 + Real(j) * w2;
            if (i != 0 || j != 0) {
                r0 = std::min(r0, std::abs(w));
            }
            if (std::abs(z - w) < std::abs(z - nearest)) {
                nearest = w;
            }
        }
    }
    z -= nearest;
    if (std::abs(z) <= tol * r0) {
        raise(Errc::PoleAt, "z is within " + format_real(tol * r0, 3) + " of a lattice point");
    }
    int halvings = 0;
    while (std::abs(z) > r0 / 4) {
        z /= Real(2);
        ++halvings;
    }
    // |z|/r0 <= 1/4, so 40 terms leave an error around 4^-80.
    const auto c = wp_coefficients(g2, g3, 40);
    const Complex z2 = z * z;
    Complex s = 0, ds = 0, zk = z2; // zk = z^(2k)
    for (int k = 1; k <= 40; ++k, zk *= z2) {
        s += c[static_cast<std::size_t>(k)] * zk;
        ds += Real(2 * k) * c[static_cast<std::size_t>(k)] * zk / z;
    }
    Complex x = Real(1) / z2 + s;
    Complex y = (Real(-2) / (z2 * z) + ds) / Real(2);
    const Complex A = -g2 / 4;
    for (int i = 0; i < halvings; ++i) {
        const Complex lam = (Real(3) * x * x + A) / (Real(2) * y);
        const Complex x2 = lam * lam - Real(2) * x;
        y = lam * (x - x2) - y;
        x = x2;
    }
    return {x, Real(2) * y};
}

std::optional<Rational> rational_reconstruct(Real x, long denom_bound, Real tol)
{
    if (!std::isfinite(x)) {
        return std::nullopt;
    }
    const Real scale = std::max<Real>(1, std::fabs(x));
    // Convergents h/k of the continued fraction of x.
    Integer h0 = 1, h1 = 0, k0 = 0, k1 = 1;
    Real r = x;
    for (int i = 0; i < 64; ++i) {
        const Real fl = std::floor(r);
        const Integer ai(static_cast<long>(fl));
        const Integer h = ai * h0 + h1, k = ai * k0 + k1;
        if (k > denom_bound) {
            break;
        }
        h1 = h0;
        h0 = h;
        k1 = k0;
        k0 = k;
        Rational q(h0, k0);
        q.canonicalize();
        if (std::fabs(to_long_double(q) - x) <= tol * scale) {
            return q;
        }
        if (r == fl) {
            break;
        }
        r = 1 / (r - fl);
    }
    return std::nullopt;
}

std::optional<AffinePoint<Rational>> recognize_point(const AffinePoint<Complex> &p, const ShortCurve<Rational> &E,
                                                     long denom_bound, Real tol)
{
    if (p.infinity) {
        return AffinePoint<Rational>::at_infinity();
    }
    const Real scale = std::max<Real>({1, std::abs(p.x), std::abs(p.y)});
    if (std::fabs(p.x.imag()) > tol * scale || std::fabs(p.y.imag()) > tol * scale) {
        return std::nullopt;
    }
    const auto x = rational_reconstruct(p.x.real(), denom_bound, tol);
    const auto y = rational_reconstruct(p.y.real(), denom_bound, tol);
    if (!x || !y) {
        return std::nullopt;
    }
    const auto q = AffinePoint<Rational>::affine(*x, *y);
    if (!on_curve(q, E)) {
        raise(Errc::SpuriousMatch, "(" + to_string(*x) + ", " + to_string(*y) + ") approximates the point but is off the curve");
    }
    return q;
}

std::string LatticeMultiple::expression() const
{
    const bool compound = generator.find_first_of(" +-") != std::string::npos;
    const std::string g = compound ? "(" + generator + ")" : generator;
    if (multiple == 0) {
        return "0";
    }
    const Integer &num = multiple.get_num();
    const Integer &den = multiple.get_den();
    std::string s;
    if (num == -1) {
        s = "-" + g;
    } else if (num == 1) {
        s = g;
    } else {
        s = num.get_str() + "*" + g;
    }
    if (den != 1) {
        s += "/" + den.get_str();
    }
    return s;
}

LatticeMultiple lattice_multiple(Complex v, Complex generator, std::string generator_name, const Rational &step,
                                 long denom_bound, Real rel_tol)
{
    if (sgn(step) <= 0 || step.get_den() > denom_bound) {
        raise(Errc::InvalidArgument, "step " + to_string(step) + " must be positive with denominator <= " +
                                         std::to_string(denom_bound));
    }
    const Complex unit = to_long_double(step) * generator;
    if (std::abs(unit) == 0) {
        raise(Errc::InvalidArgument, "zero generator");
    }
    LatticeMultiple out;
    out.k = std::lround((v / unit).real());
    out.step = step;
    out.step.canonicalize();
    out.multiple = out.step * Rational(out.k);
    out.generator = std::move(generator_name);
    out.residual = std::abs(v - static_cast<Real>(out.k) * unit);
    out.tol = rel_tol * std::abs(unit);
    if (!(out.residual < out.tol)) {
        raise(Errc::NotOnLine, "value is " + format_real(out.residual, 3) + " away from " + out.generator +
                                   " * " + to_string(step) + " * Z (tolerance " + format_real(out.tol, 3) + ")");
    }
    return out;
}

std::string format_real(Real x, int digits)
{
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.*Lf", digits, x);
    std::string s = buf;
    if (s.find_first_not_of("-0.") == std::string::npos) {
        s = s[0] == '-' ? s.substr(1) : s; // no "-0.000"
    }
    return s;
}

std::string format_sci(Real x, int digits)
{
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.*Le", digits, x);
    return buf;
}

std::string format_complex(Complex z, int digits)
{
    const std::string re = format_real(z.real(), digits);
    std::string im = format_real(std::fabs(z.imag()), digits);
    if (im.find_first_not_of("0.") == std::string::npos) {
        return re;
    }
    return re + (z.imag() < 0 ? " - " : " + ") + im + "i";
}

} // namespace logalg
