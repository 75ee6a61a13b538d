#include "logalg/rational.hpp"

#include "logalg/error.hpp"

#include <cmath>
#include <string>

namespace logalg {

Rational make_rational(long num, long den)
{
    if (den == 0) {
        raise(Errc::InvalidArgument, "zero denominator");
    }
    Rational r(num, den);
    r.canonicalize();
    return r;
}

std::string to_string(const Rational &r)
{
    if (r.get_den() == 1) {
        return r.get_num().get_str();
    }
    return r.get_num().get_str() + "/" + r.get_den().get_str();
}

std::string to_string(const Integer &z) { return z.get_str(); }

Rational parse_rational(std::string_view text)
{
    auto trimmed = text;
    while (!trimmed.empty() && (trimmed.front() == ' ' || trimmed.front() == '\t')) {
        trimmed.remove_prefix(1);
    }
    while (!trimmed.empty() && (trimmed.back() == ' ' || trimmed.back() == '\t' || trimmed.back() == '\r')) {
        trimmed.remove_suffix(1);
    }
    if (trimmed.empty()) {
        raise(Errc::ParseError, "empty rational");
    }
    auto valid_int = [](std::string_view s) {
        if (!s.empty() && (s.front() == '-' || s.front() == '+')) {
            s.remove_prefix(1);
        }
        if (s.empty()) {
            return false;
        }
        for (char c : s) {
            if (c < '0' || c > '9') {
                return false;
            }
        }
        return true;
    };
    auto slash = trimmed.find('/');
    std::string num_s(trimmed.substr(0, slash));
    std::string den_s = slash == std::string_view::npos ? "1" : std::string(trimmed.substr(slash + 1));
    if (!valid_int(num_s) || !valid_int(den_s)) {
        raise(Errc::ParseError, "malformed rational '" + std::string(trimmed) + "'");
    }
    if (num_s.front() == '+') {
        num_s.erase(0, 1);
    }
    if (den_s.front() == '+') {
        den_s.erase(0, 1);
    }
    Integer num(num_s), den(den_s);
    if (den == 0) {
        raise(Errc::ParseError, "zero denominator in '" + std::string(trimmed) + "'");
    }
    Rational r(num, den);
    r.canonicalize();
    return r;
}

bool is_integral(const Rational &r) { return r.get_den() == 1; }

long double to_long_double(const Integer &z)
{
    const auto bits = static_cast<long>(mpz_sizeinbase(z.get_mpz_t(), 2));
    if (bits <= 63) {
        return static_cast<long double>(z.get_si());
    }
    Integer top;
    const long shift = bits - 63;
    mpz_tdiv_q_2exp(top.get_mpz_t(), z.get_mpz_t(), static_cast<mp_bitcnt_t>(shift));
    return std::ldexp(static_cast<long double>(top.get_si()), static_cast<int>(shift));
}

long double to_long_double(const Rational &r)
{
    const auto nbits = static_cast<long>(mpz_sizeinbase(r.get_num_mpz_t(), 2));
    const auto dbits = static_cast<long>(mpz_sizeinbase(r.get_den_mpz_t(), 2));
    if (nbits <= 63 && dbits <= 63) {
        return static_cast<long double>(r.get_num().get_si()) / static_cast<long double>(r.get_den().get_si());
    }
    // Keep 64 significant bits in the quotient before converting.
    Integer scaled = r.get_num();
    const long shift = 64 - (nbits - dbits);
    if (shift > 0) {
        mpz_mul_2exp(scaled.get_mpz_t(), scaled.get_mpz_t(), static_cast<mp_bitcnt_t>(shift));
    } else if (shift < 0) {
        mpz_tdiv_q_2exp(scaled.get_mpz_t(), scaled.get_mpz_t(), static_cast<mp_bitcnt_t>(-shift));
    }
    Integer q;
    mpz_tdiv_q(q.get_mpz_t(), scaled.get_mpz_t(), r.get_den_mpz_t());
    return std::ldexp(to_long_double(q), static_cast<int>(-shift));
}

Rational pow(const Rational &base, long exponent)
{
    if (exponent < 0) {
        if (base == 0) {
            raise(Errc::NotAUnit, "zero to a negative power");
        }
        Rational inv = 1 / base;
        return pow(inv, -exponent);
    }
    Rational result = 1;
    Rational b = base;
    auto e = static_cast<unsigned long>(exponent);
    while (e != 0) {
        if (e & 1U) {
            result *= b;
        }
        e >>= 1U;
        if (e != 0) {
            b *= b;
        }
    }
    return result;
}

} // namespace logalg
