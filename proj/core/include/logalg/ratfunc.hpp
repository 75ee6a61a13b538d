#pragma once

#include "logalg/poly.hpp"

#include <string>

namespace logalg {

/// Element of Q(u): reduced numerator/denominator with a monic denominator.
class QFrac {
public:
    QFrac() : den_(1) {}
    QFrac(long c) : num_(c), den_(1) {} // NOLINT(google-explicit-constructor)
    QFrac(const Rational &c) : num_(c), den_(1) {} // NOLINT(google-explicit-constructor)
    QFrac(const QPoly &p) : num_(p), den_(1) {} // NOLINT(google-explicit-constructor)
    QFrac(const QPoly &num, const QPoly &den);

    const QPoly &num() const noexcept { return num_; }
    const QPoly &den() const noexcept { return den_; }
    bool is_zero() const noexcept { return num_.is_zero(); }

    QFrac &operator+=(const QFrac &rhs);
    QFrac &operator-=(const QFrac &rhs);
    QFrac &operator*=(const QFrac &rhs);
    QFrac &operator/=(const QFrac &rhs);

    friend QFrac operator+(QFrac a, const QFrac &b) { return a += b; }
    friend QFrac operator-(QFrac a, const QFrac &b) { return a -= b; }
    friend QFrac operator*(QFrac a, const QFrac &b) { return a *= b; }
    friend QFrac operator/(QFrac a, const QFrac &b) { return a /= b; }
    QFrac operator-() const;

    // Representatives are canonical, so this agrees with cross-multiplication.
    friend bool operator==(const QFrac &a, const QFrac &b) { return a.num_ == b.num_ && a.den_ == b.den_; }
    friend bool operator!=(const QFrac &a, const QFrac &b) { return !(a == b); }

    QFrac inverse() const;
    /// Throws NotAUnit at a pole.
    Rational operator()(const Rational &u) const;

    std::string to_string(char var = 'u') const;

private:
    void normalize();

    QPoly num_;
    QPoly den_;
};

std::string to_string(const QFrac &f);

} // namespace logalg
