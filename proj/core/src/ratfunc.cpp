#include "logalg/ratfunc.hpp"

#include "logalg/error.hpp"

namespace logalg {

QFrac::QFrac(const QPoly &num, const QPoly &den) : num_(num), den_(den)
{
    if (den_.is_zero()) {
        raise(Errc::NotAUnit, "rational function with zero denominator");
    }
    normalize();
}

void QFrac::normalize()
{
    if (num_.is_zero()) {
        den_ = QPoly(1);
        return;
    }
    if (den_.is_constant()) {
        const Rational d = den_.coeff(0);
        num_ /= d;
        den_ = QPoly(1);
        return;
    }
    QPoly g = QPoly::gcd(num_, den_);
    if (g.degree() > 0) {
        num_ = QPoly::exact_div(num_, g);
        den_ = QPoly::exact_div(den_, g);
    }
    const Rational lead = den_.leading();
    if (lead != 1) {
        num_ /= lead;
        den_ /= lead;
    }
}

QFrac &QFrac::operator+=(const QFrac &rhs)
{
    if (rhs.is_zero()) {
        return *this;
    }
    if (is_zero()) {
        return *this = rhs;
    }
    if (den_ == rhs.den_) {
        num_ += rhs.num_;
        if (den_.is_constant()) {
            return *this;
        }
    } else if (den_.is_constant() || rhs.den_.is_constant()) {
        // One side is a polynomial; the sum is already reduced.
        if (den_.is_constant()) {
            num_ = num_ * rhs.den_ + rhs.num_;
            den_ = rhs.den_;
        } else {
            num_ += rhs.num_ * den_;
        }
        return *this;
    } else {
        num_ = num_ * rhs.den_ + rhs.num_ * den_;
        den_ = den_ * rhs.den_;
    }
    normalize();
    return *this;
}

QFrac &QFrac::operator-=(const QFrac &rhs) { return *this += -rhs; }

QFrac QFrac::operator-() const
{
    QFrac r = *this;
    r.num_ = -r.num_;
    return r;
}

QFrac &QFrac::operator*=(const QFrac &rhs)
{
    if (is_zero() || rhs.is_zero()) {
        *this = QFrac();
        return *this;
    }
    if (den_.is_constant() && rhs.den_.is_constant()) {
        num_ *= rhs.num_;
        return *this;
    }
    // Cross-cancel before multiplying to keep degrees small.
    QPoly g1 = QPoly::gcd(num_, rhs.den_);
    QPoly g2 = QPoly::gcd(rhs.num_, den_);
    QPoly a = g1.degree() > 0 ? QPoly::exact_div(num_, g1) : num_;
    QPoly d = g1.degree() > 0 ? QPoly::exact_div(rhs.den_, g1) : rhs.den_;
    QPoly c = g2.degree() > 0 ? QPoly::exact_div(rhs.num_, g2) : rhs.num_;
    QPoly b = g2.degree() > 0 ? QPoly::exact_div(den_, g2) : den_;
    num_ = a * c;
    den_ = b * d;
    const Rational lead = den_.leading();
    if (lead != 1) {
        num_ /= lead;
        den_ /= lead;
    }
    return *this;
}

QFrac QFrac::inverse() const
{
    if (is_zero()) {
        raise(Errc::NotAUnit, "inverse of zero in Q(u)");
    }
    QFrac r;
    r.num_ = den_;
    r.den_ = num_;
    const Rational lead = r.den_.leading();
    r.num_ /= lead;
    r.den_ /= lead;
    return r;
}

QFrac &QFrac::operator/=(const QFrac &rhs) { return *this *= rhs.inverse(); }

Rational QFrac::operator()(const Rational &u) const
{
    const Rational d = den_(u);
    if (d == 0) {
        raise(Errc::NotAUnit, "rational function evaluated at a pole u = " + logalg::to_string(u));
    }
    return num_(u) / d;
}

std::string QFrac::to_string(char var) const
{
    if (den_.is_constant()) {
        return num_.to_string(var);
    }
    return "(" + num_.to_string(var) + ")/(" + den_.to_string(var) + ")";
}

std::string to_string(const QFrac &f) { return f.to_string(); }

} // namespace logalg
