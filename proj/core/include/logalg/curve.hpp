#pragma once

#include "logalg/bivariate.hpp"
#include "logalg/rational.hpp"
#include "logalg/series.hpp"

#include <array>
#include <string>

namespace logalg {

/// Elliptic curve data. The working model is the short one
///     y^2 = x^3 + A x + B,   A = -g2/4,  B = -g3/4,
/// with g2 = c4/12 and g3 = c6/216, so that (wp(z), wp'(z)/2) lies on it.
struct CurveModel {
    // Long Weierstrass coefficients a1, a2, a3, a4, a6 (all zero for curves
    // built directly from g2, g3).
    std::array<Integer, 5> e{};
    bool has_long_model = false;
    long conductor = 0;

    Rational b2, b4, b6, b8;
    Rational c4, c6;
    Rational discriminant;
    Rational g2, g3;
    Rational A, B;

    bool singular() const { return discriminant == 0; }
    std::string short_equation() const;
};

/// Invariants of y^2 + a1 xy + a3 y = x^3 + a2 x^2 + a4 x + a6.
/// Throws SingularCurve when the discriminant vanishes.
CurveModel derive_invariants(const std::array<Integer, 5> &e, long conductor = 0);

/// Curve given by g2, g3 directly. Singular values are allowed here because
/// the formal series still make sense (g2 = g3 = 0 gives x = 1/t^2).
CurveModel curve_from_g(const Rational &g2, const Rational &g3);

/// Long-model point to short-model point and back.
std::pair<Rational, Rational> to_short(const CurveModel &c, const Rational &x, const Rational &y);
std::pair<Rational, Rational> from_short(const CurveModel &c, const Rational &x, const Rational &y);

using QSeries = TruncatedSeries<Rational>;
using GroupLaw = BivariateSeries<Rational>;

struct FormalXY {
    QSeries x; // t^-2 + ...
    QSeries y; // -t^-3 + ...
};

/// Formal coordinates in the parameter t = -x/y, both known below t^prec.
FormalXY formal_xy(const CurveModel &c, int prec);

/// dx/(2y) as a power series in t, known below t^prec.
QSeries invariant_differential(const CurveModel &c, int prec);

struct LogExp {
    QSeries log;
    QSeries exp;
};

/// log = integral of the invariant differential, exp its compositional inverse.
LogExp formal_log_exp(const CurveModel &c, int prec);

/// exp computed as -2 wp/wp' instead of by reversion.
QSeries exp_from_wp(const CurveModel &c, int prec);

/// F(t1, t2) = exp(log t1 + log t2) to total degree below prec.
GroupLaw group_law(const CurveModel &c, int prec);
GroupLaw group_law(const LogExp &le, int prec);

/// [m](t) = exp(m log t).
QSeries mult_by_m(const CurveModel &c, long m, int prec);
QSeries mult_by_m(const LogExp &le, long m, int prec);

/// Laurent expansion of the Weierstrass function in z, known below z^prec:
///     wp = z^-2 + sum_k c_k z^(2k),  c1 = g2/20, c2 = g3/28,
///     c_k = 3/((2k+3)(k-2)) * sum_{m=1}^{k-2} c_m c_(k-1-m).
template <CoefficientRing R>
TruncatedSeries<R> wp_series(const R &g2, const R &g3, int prec)
{
    using T = RingTraits<R>;
    if (prec < -1) {
        raise(Errc::InvalidArgument, "wp series precision must be at least -1");
    }
    // c[k] multiplies z^(2k); index 0 unused.
    const int kmax = prec <= 2 ? 0 : (prec - 1) / 2;
    std::vector<R> c(static_cast<std::size_t>(kmax + 1), T::zero());
    if (kmax >= 1) {
        c[1] = T::div_int(g2, 20);
    }
    if (kmax >= 2) {
        c[2] = T::div_int(g3, 28);
    }
    for (int k = 3; k <= kmax; ++k) {
        R acc = T::zero();
        for (int m = 1; m <= k - 2; ++m) {
            acc += c[static_cast<std::size_t>(m)] * c[static_cast<std::size_t>(k - 1 - m)];
        }
        c[static_cast<std::size_t>(k)] = T::div_int(T::mul_int(acc, 3), static_cast<long>(2 * k + 3) * (k - 2));
    }
    std::vector<R> out(static_cast<std::size_t>(prec + 2), T::zero());
    out[0] = T::one();
    for (int k = 1; k <= kmax; ++k) {
        out[static_cast<std::size_t>(2 * k + 2)] = c[static_cast<std::size_t>(k)];
    }
    return TruncatedSeries<R>(-2, std::move(out), prec, Var::z);
}

} // namespace logalg
