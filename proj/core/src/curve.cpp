#include "logalg/curve.hpp"

#include "logalg/error.hpp"

namespace logalg {

namespace {

void finish_short(CurveModel &c)
{
    c.g2 = c.c4 / 12;
    c.g3 = c.c6 / 216;
    c.A = -c.g2 / 4;
    c.B = -c.g3 / 4;
    c.discriminant = (c.c4 * c.c4 * c.c4 - c.c6 * c.c6) / 1728;
}

std::string signed_term(const Rational &c, const std::string &suffix)
{
    if (c == 0) {
        return "";
    }
    std::string mag = to_string(Rational(abs(c)));
    if (!suffix.empty()) {
        mag = mag == "1" ? suffix : mag + "*" + suffix;
    }
    return (c < 0 ? " - " : " + ") + mag;
}

} // namespace

std::string CurveModel::short_equation() const
{
    return "y^2 = x^3" + signed_term(A, "x") + signed_term(B, "");
}

CurveModel derive_invariants(const std::array<Integer, 5> &e, long conductor)
{
    CurveModel c;
    c.e = e;
    c.has_long_model = true;
    c.conductor = conductor;
    const Rational a1(e[0]), a2(e[1]), a3(e[2]), a4(e[3]), a6(e[4]);
    c.b2 = a1 * a1 + 4 * a2;
    c.b4 = 2 * a4 + a1 * a3;
    c.b6 = a3 * a3 + 4 * a6;
    c.b8 = a1 * a1 * a6 + 4 * a2 * a6 - a1 * a3 * a4 + a2 * a3 * a3 - a4 * a4;
    c.c4 = c.b2 * c.b2 - 24 * c.b4;
    c.c6 = -c.b2 * c.b2 * c.b2 + 36 * c.b2 * c.b4 - 216 * c.b6;
    finish_short(c);
    if (c.discriminant == 0) {
        raise(Errc::SingularCurve, "discriminant of [" + to_string(e[0]) + "," + to_string(e[1]) + "," +
                                       to_string(e[2]) + "," + to_string(e[3]) + "," + to_string(e[4]) +
                                       "] is zero");
    }
    return c;
}

CurveModel curve_from_g(const Rational &g2, const Rational &g3)
{
    CurveModel c;
    c.c4 = 12 * g2;
    c.c6 = 216 * g3;
    finish_short(c);
    return c;
}

std::pair<Rational, Rational> to_short(const CurveModel &c, const Rational &x, const Rational &y)
{
    const Rational a1(c.e[0]), a3(c.e[2]);
    return {x + c.b2 / 12, y + (a1 * x + a3) / 2};
}

std::pair<Rational, Rational> from_short(const CurveModel &c, const Rational &x, const Rational &y)
{
    const Rational a1(c.e[0]), a3(c.e[2]);
    const Rational xl = x - c.b2 / 12;
    return {xl, y - (a1 * xl + a3) / 2};
}

FormalXY formal_xy(const CurveModel &c, int prec)
{
    if (prec < 1) {
        raise(Errc::InvalidArgument, "formal_xy needs prec >= 1");
    }
    // w = -1/y as a series in t = -x/y solves w = t^3 + A t w^2 + B w^3.
    // x = t/w needs w to relative precision prec + 2, y = -1/w to prec + 3.
    const int W = prec + 6;
    const QSeries t3 = QSeries::monomial(1, 3, W);
    const QSeries t = QSeries::variable(W);
    QSeries w = t3;
    for (int iter = 0; iter < W; ++iter) {
        const QSeries w2 = QSeries::multiply(w, w, W);
        QSeries next = t3;
        if (c.A != 0) {
            next += QSeries::multiply(t, w2, W).scaled(c.A);
        }
        if (c.B != 0) {
            next += QSeries::multiply(w2, w, W).scaled(c.B);
        }
        next = next.truncated(W);
        if (next == w) {
            break;
        }
        w = std::move(next);
    }
    const QSeries winv = inverse(w);
    return {(QSeries::variable(W) * winv).truncated(prec), (-winv).truncated(prec)};
}

QSeries invariant_differential(const CurveModel &c, int prec)
{
    const FormalXY xy = formal_xy(c, std::max(prec, 1));
    return (derive(xy.x) / xy.y.scaled(Rational(2))).truncated(prec);
}

LogExp formal_log_exp(const CurveModel &c, int prec)
{
    if (prec < 2) {
        raise(Errc::InvalidArgument, "formal_log_exp needs prec >= 2");
    }
    const QSeries log = integrate(invariant_differential(c, prec - 1)).truncated(prec);
    return {log, reverse(log).with_variable(Var::z)};
}

QSeries exp_from_wp(const CurveModel &c, int prec)
{
    const QSeries wp = wp_series(c.g2, c.g3, std::max(prec - 3, 0));
    return (wp.scaled(Rational(-2)) / derive(wp)).truncated(prec);
}

GroupLaw group_law(const LogExp &le, int prec)
{
    const GroupLaw sum = GroupLaw::in_t1(le.log, prec) + GroupLaw::in_t2(le.log, prec);
    return compose(le.exp, sum);
}

GroupLaw group_law(const CurveModel &c, int prec) { return group_law(formal_log_exp(c, std::max(prec, 2)), prec); }

QSeries mult_by_m(const LogExp &le, long m, int prec)
{
    if (m == 0) {
        return QSeries::zero(prec);
    }
    return compose(le.exp.truncated(prec), le.log.truncated(prec).scaled(Rational(m)));
}

QSeries mult_by_m(const CurveModel &c, long m, int prec)
{
    return mult_by_m(formal_log_exp(c, std::max(prec, 2)), m, prec);
}

} // namespace logalg
