#pragma once

#include "logalg/error.hpp"
#include "logalg/ring.hpp"
#include "logalg/series.hpp"

#include <cmath>
#include <string>

namespace logalg {

// Zero tests used by the chord-tangent formulas. Exact fields compare with
// zero; complex numbers use an absolute tolerance; truncated series count as
// zero when every known coefficient vanishes.
inline bool negligible(const Rational &x, Real) { return sgn(x) == 0; }
inline bool negligible(const QFrac &x, Real) { return x.is_zero(); }
inline bool negligible(const Complex &x, Real tol) { return std::abs(x) <= tol; }
template <CoefficientRing R>
bool negligible(const TruncatedSeries<R> &x, Real)
{
    return x.is_zero();
}

inline Real magnitude(const Complex &x) { return std::abs(x); }
template <class F>
Real magnitude(const F &)
{
    return 1;
}

// n * x without needing a conversion from integers into F.
template <class F>
F times(long n, const F &x)
{
    return F(x * F(n));
}
template <CoefficientRing R>
TruncatedSeries<R> times(long n, const TruncatedSeries<R> &x)
{
    return x.scaled(RingTraits<R>::from_int(n));
}

/// y^2 = x^3 + A x + B over F. `tol` only matters for floating F.
template <class F>
struct ShortCurve {
    F A;
    F B;
    Real tol = 0;
};

template <class F>
struct AffinePoint {
    bool infinity = true;
    F x{};
    F y{};

    static AffinePoint at_infinity() { return {}; }
    static AffinePoint affine(F x, F y) { return {false, std::move(x), std::move(y)}; }
};

template <class F>
F curve_residual(const AffinePoint<F> &p, const ShortCurve<F> &c)
{
    return p.y * p.y - (p.x * p.x * p.x + c.A * p.x + c.B);
}

template <class F>
bool on_curve(const AffinePoint<F> &p, const ShortCurve<F> &c)
{
    if (p.infinity) {
        return true;
    }
    const Real scale = std::max<Real>({Real(1), magnitude(p.y) * magnitude(p.y), magnitude(p.x) * magnitude(p.x) * magnitude(p.x)});
    return negligible(curve_residual(p, c), c.tol * scale);
}

template <class F>
void require_on_curve(const AffinePoint<F> &p, const ShortCurve<F> &c)
{
    if (!on_curve(p, c)) {
        raise(Errc::NotOnCurve, "point does not satisfy y^2 = x^3 + Ax + B");
    }
}

template <class F>
AffinePoint<F> point_neg(const AffinePoint<F> &p)
{
    if (p.infinity) {
        return p;
    }
    return AffinePoint<F>::affine(p.x, F(-p.y));
}

/// Chord-tangent addition. Inputs are checked against the curve first.
template <class F>
AffinePoint<F> point_add(const AffinePoint<F> &p, const AffinePoint<F> &q, const ShortCurve<F> &c)
{
    require_on_curve(p, c);
    require_on_curve(q, c);
    if (p.infinity) {
        return q;
    }
    if (q.infinity) {
        return p;
    }
    const Real xs = std::max<Real>({Real(1), magnitude(p.x), magnitude(q.x)});
    const Real ys = std::max<Real>({Real(1), magnitude(p.y), magnitude(q.y)});
    F lambda;
    if (negligible(F(p.x - q.x), c.tol * xs)) {
        if (negligible(F(p.y + q.y), c.tol * ys)) {
            return AffinePoint<F>::at_infinity();
        }
        lambda = (times(3, F(p.x * p.x)) + c.A) / times(2, p.y);
    } else {
        lambda = (q.y - p.y) / (q.x - p.x);
    }
    F x3 = lambda * lambda - p.x - q.x;
    F y3 = lambda * (p.x - x3) - p.y;
    return AffinePoint<F>::affine(std::move(x3), std::move(y3));
}

template <class F>
AffinePoint<F> point_mul(AffinePoint<F> p, long m, const ShortCurve<F> &c)
{
    require_on_curve(p, c);
    if (m < 0) {
        p = point_neg(p);
        m = -m;
    }
    AffinePoint<F> acc = AffinePoint<F>::at_infinity();
    while (m > 0) {
        if (m & 1) {
            acc = point_add(acc, p, c);
        }
        m >>= 1;
        if (m > 0) {
            p = point_add(p, p, c);
        }
    }
    return acc;
}

} // namespace logalg
