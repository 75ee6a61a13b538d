#pragma once

#include "logalg/rational.hpp"

#include <complex>
#include <string>
#include <utility>
#include <vector>

namespace logalg {

/// Dense univariate polynomial over Q in the variable u.
///
/// Stored as an integer coefficient vector over one positive common
/// denominator. The content of the numerator vector is coprime to the
/// denominator and there are no trailing zero coefficients, so equal
/// polynomials have identical representations.
class QPoly {
public:
    QPoly() = default;
    QPoly(long c); // NOLINT(google-explicit-constructor)
    QPoly(const Rational &c); // NOLINT(google-explicit-constructor)
    explicit QPoly(const std::vector<Rational> &coeffs);
    QPoly(std::vector<Integer> num, Integer den);

    static QPoly monomial(const Rational &c, int degree);
    static QPoly variable() { return monomial(Rational(1), 1); }

    /// -1 for the zero polynomial.
    int degree() const noexcept { return static_cast<int>(num_.size()) - 1; }
    bool is_zero() const noexcept { return num_.empty(); }
    bool is_constant() const noexcept { return num_.size() <= 1; }

    Rational coeff(int i) const;
    Rational leading() const;
    const std::vector<Integer> &numerators() const noexcept { return num_; }
    const Integer &denominator() const noexcept { return den_; }

    QPoly &operator+=(const QPoly &rhs);
    QPoly &operator-=(const QPoly &rhs);
    QPoly &operator*=(const QPoly &rhs);
    QPoly &operator*=(const Rational &c);
    QPoly &operator/=(const Rational &c);

    friend QPoly operator+(QPoly a, const QPoly &b) { return a += b; }
    friend QPoly operator-(QPoly a, const QPoly &b) { return a -= b; }
    friend QPoly operator*(const QPoly &a, const QPoly &b);
    friend QPoly operator*(QPoly a, const Rational &c) { return a *= c; }
    friend QPoly operator*(const Rational &c, QPoly a) { return a *= c; }
    friend QPoly operator/(QPoly a, const Rational &c) { return a /= c; }
    QPoly operator-() const;

    friend bool operator==(const QPoly &a, const QPoly &b) { return a.den_ == b.den_ && a.num_ == b.num_; }
    friend bool operator!=(const QPoly &a, const QPoly &b) { return !(a == b); }

    /// Euclidean division over Q; throws NotAUnit when dividing by zero.
    static std::pair<QPoly, QPoly> divmod(const QPoly &a, const QPoly &b);
    /// Exact quotient; throws NotAUnit if b does not divide a.
    static QPoly exact_div(const QPoly &a, const QPoly &b);
    /// Monic gcd (zero if both are zero).
    static QPoly gcd(const QPoly &a, const QPoly &b);

    QPoly monic() const;
    /// u -> u^k.
    QPoly inflate(int k) const;
    QPoly derivative() const;

    Rational operator()(const Rational &u) const;
    std::complex<long double> operator()(const std::complex<long double> &u) const;

    std::string to_string(char var = 'u') const;

private:
    void normalize();

    std::vector<Integer> num_;
    Integer den_ = 1;
};

std::string to_string(const QPoly &p);

} // namespace logalg
