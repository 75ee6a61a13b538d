#pragma once

#include "logalg/error.hpp"
#include "logalg/poly.hpp"
#include "logalg/ratfunc.hpp"
#include "logalg/rational.hpp"

#include <complex>
#include <concepts>
#include <cstdio>
#include <string>

namespace logalg {

using Real = long double;
using Complex = std::complex<Real>;

// Per-ring operations the series code needs beyond + - *.
template <class R>
struct RingTraits;

template <>
struct RingTraits<Rational> {
    static constexpr bool is_field = true;
    static Rational zero() { return Rational(0); }
    static Rational one() { return Rational(1); }
    static Rational from_int(long n) { return Rational(n); }
    static bool is_zero(const Rational &x) { return sgn(x) == 0; }
    static bool is_unit(const Rational &x) { return sgn(x) != 0; }
    static Rational inverse(const Rational &x)
    {
        if (sgn(x) == 0) {
            raise(Errc::NotAUnit, "inverse of 0 in Q");
        }
        return 1 / x;
    }
    static Rational div_int(const Rational &x, long n) { return x / Rational(n); }
    static Rational mul_int(const Rational &x, long n) { return x * Rational(n); }
    static std::string to_string(const Rational &x) { return logalg::to_string(x); }
    static bool is_simple(const Rational &) { return true; }
};

template <>
struct RingTraits<QPoly> {
    static constexpr bool is_field = false;
    static QPoly zero() { return QPoly(); }
    static QPoly one() { return QPoly(1); }
    static QPoly from_int(long n) { return QPoly(n); }
    static bool is_zero(const QPoly &x) { return x.is_zero(); }
    static bool is_unit(const QPoly &x) { return x.degree() == 0; }
    static QPoly inverse(const QPoly &x)
    {
        if (x.degree() != 0) {
            raise(Errc::NotAUnit, "polynomial " + x.to_string() + " is not a unit in Q[u]");
        }
        return QPoly(Rational(1) / x.coeff(0));
    }
    static QPoly div_int(const QPoly &x, long n) { return x / Rational(n); }
    static QPoly mul_int(const QPoly &x, long n) { return x * Rational(n); }
    static std::string to_string(const QPoly &x) { return x.to_string(); }
    static bool is_simple(const QPoly &x)
    {
        int terms = 0;
        for (int i = 0; i <= x.degree(); ++i) {
            terms += x.coeff(i) != 0 ? 1 : 0;
        }
        return terms <= 1;
    }
};

template <>
struct RingTraits<QFrac> {
    static constexpr bool is_field = true;
    static QFrac zero() { return QFrac(); }
    static QFrac one() { return QFrac(1); }
    static QFrac from_int(long n) { return QFrac(n); }
    static bool is_zero(const QFrac &x) { return x.is_zero(); }
    static bool is_unit(const QFrac &x) { return !x.is_zero(); }
    static QFrac inverse(const QFrac &x) { return x.inverse(); }
    static QFrac div_int(const QFrac &x, long n) { return x / QFrac(n); }
    static QFrac mul_int(const QFrac &x, long n) { return x * QFrac(n); }
    static std::string to_string(const QFrac &x) { return x.to_string(); }
    static bool is_simple(const QFrac &x) { return x.den().is_constant() && RingTraits<QPoly>::is_simple(x.num()); }
};

template <>
struct RingTraits<Complex> {
    static constexpr bool is_field = true;
    static Complex zero() { return {0, 0}; }
    static Complex one() { return {1, 0}; }
    static Complex from_int(long n) { return {static_cast<Real>(n), 0}; }
    static bool is_zero(const Complex &x) { return x == Complex(0, 0); }
    static bool is_unit(const Complex &x) { return x != Complex(0, 0); }
    static Complex inverse(const Complex &x)
    {
        if (x == Complex(0, 0)) {
            raise(Errc::NotAUnit, "inverse of complex zero");
        }
        return Real(1) / x;
    }
    static Complex div_int(const Complex &x, long n) { return x / static_cast<Real>(n); }
    static Complex mul_int(const Complex &x, long n) { return x * static_cast<Real>(n); }
    static std::string to_string(const Complex &x)
    {
        char buf[96];
        std::snprintf(buf, sizeof buf, "(%.18Lg%+.18Lgi)", x.real(), x.imag());
        return buf;
    }
    static bool is_simple(const Complex &) { return false; }
};

template <class R>
concept CoefficientRing = std::copyable<R> && requires(const R &a, const R &b, long n) {
    { RingTraits<R>::zero() } -> std::convertible_to<R>;
    { RingTraits<R>::one() } -> std::convertible_to<R>;
    { RingTraits<R>::is_zero(a) } -> std::same_as<bool>;
    { RingTraits<R>::is_unit(a) } -> std::same_as<bool>;
    { RingTraits<R>::inverse(a) } -> std::convertible_to<R>;
    { RingTraits<R>::div_int(a, n) } -> std::convertible_to<R>;
    { RingTraits<R>::to_string(a) } -> std::convertible_to<std::string>;
    R(a + b);
    R(a - b);
    R(a * b);
    R(-a);
};

} // namespace logalg
