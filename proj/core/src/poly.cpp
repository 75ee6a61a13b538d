#include "logalg/poly.hpp"

#include "logalg/error.hpp"

#include <algorithm>
#include <sstream>

namespace logalg {

namespace {

Integer lcm(const Integer &a, const Integer &b)
{
    Integer r;
    mpz_lcm(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return r;
}

// Primitive part of an integer vector (positive leading coefficient is not enforced).
Integer content(const std::vector<Integer> &v)
{
    Integer g = 0;
    for (const auto &c : v) {
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
        if (g == 1) {
            break;
        }
    }
    return g;
}

void make_primitive(std::vector<Integer> &v)
{
    Integer g = content(v);
    if (g > 1) {
        for (auto &c : v) {
            mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), g.get_mpz_t());
        }
    }
}

void trim(std::vector<Integer> &v)
{
    while (!v.empty() && v.back() == 0) {
        v.pop_back();
    }
}

} // namespace

QPoly::QPoly(long c)
{
    if (c != 0) {
        num_.emplace_back(c);
    }
}

QPoly::QPoly(const Rational &c)
{
    if (c != 0) {
        num_.push_back(c.get_num());
        den_ = c.get_den();
    }
}

QPoly::QPoly(const std::vector<Rational> &coeffs)
{
    Integer den = 1;
    for (const auto &c : coeffs) {
        den = lcm(den, c.get_den());
    }
    num_.reserve(coeffs.size());
    for (const auto &c : coeffs) {
        Integer scaled;
        mpz_divexact(scaled.get_mpz_t(), den.get_mpz_t(), c.get_den_mpz_t());
        num_.push_back(scaled * c.get_num());
    }
    den_ = den;
    normalize();
}

QPoly::QPoly(std::vector<Integer> num, Integer den) : num_(std::move(num)), den_(std::move(den))
{
    if (den_ == 0) {
        raise(Errc::NotAUnit, "polynomial with zero denominator");
    }
    if (den_ < 0) {
        den_ = -den_;
        for (auto &c : num_) {
            c = -c;
        }
    }
    normalize();
}

QPoly QPoly::monomial(const Rational &c, int degree)
{
    QPoly p;
    if (c == 0) {
        return p;
    }
    p.num_.assign(static_cast<std::size_t>(degree) + 1, Integer(0));
    p.num_.back() = c.get_num();
    p.den_ = c.get_den();
    return p;
}

void QPoly::normalize()
{
    trim(num_);
    if (num_.empty()) {
        den_ = 1;
        return;
    }
    Integer g = content(num_);
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), den_.get_mpz_t());
    if (g > 1) {
        for (auto &c : num_) {
            mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), g.get_mpz_t());
        }
        mpz_divexact(den_.get_mpz_t(), den_.get_mpz_t(), g.get_mpz_t());
    }
}

Rational QPoly::coeff(int i) const
{
    if (i < 0 || i > degree()) {
        return Rational(0);
    }
    Rational r(num_[static_cast<std::size_t>(i)], den_);
    r.canonicalize();
    return r;
}

Rational QPoly::leading() const { return is_zero() ? Rational(0) : coeff(degree()); }

QPoly &QPoly::operator+=(const QPoly &rhs)
{
    if (rhs.is_zero()) {
        return *this;
    }
    if (is_zero()) {
        return *this = rhs;
    }
    if (den_ == rhs.den_) {
        if (num_.size() < rhs.num_.size()) {
            num_.resize(rhs.num_.size());
        }
        for (std::size_t i = 0; i < rhs.num_.size(); ++i) {
            num_[i] += rhs.num_[i];
        }
    } else {
        Integer l = lcm(den_, rhs.den_);
        Integer fa, fb;
        mpz_divexact(fa.get_mpz_t(), l.get_mpz_t(), den_.get_mpz_t());
        mpz_divexact(fb.get_mpz_t(), l.get_mpz_t(), rhs.den_.get_mpz_t());
        if (num_.size() < rhs.num_.size()) {
            num_.resize(rhs.num_.size());
        }
        for (auto &c : num_) {
            c *= fa;
        }
        for (std::size_t i = 0; i < rhs.num_.size(); ++i) {
            mpz_addmul(num_[i].get_mpz_t(), rhs.num_[i].get_mpz_t(), fb.get_mpz_t());
        }
        den_ = l;
    }
    normalize();
    return *this;
}

QPoly &QPoly::operator-=(const QPoly &rhs) { return *this += -rhs; }

QPoly QPoly::operator-() const
{
    QPoly r = *this;
    for (auto &c : r.num_) {
        c = -c;
    }
    return r;
}

QPoly operator*(const QPoly &a, const QPoly &b)
{
    QPoly r;
    if (a.is_zero() || b.is_zero()) {
        return r;
    }
    r.num_.assign(a.num_.size() + b.num_.size() - 1, Integer(0));
    for (std::size_t i = 0; i < a.num_.size(); ++i) {
        if (a.num_[i] == 0) {
            continue;
        }
        for (std::size_t j = 0; j < b.num_.size(); ++j) {
            mpz_addmul(r.num_[i + j].get_mpz_t(), a.num_[i].get_mpz_t(), b.num_[j].get_mpz_t());
        }
    }
    r.den_ = a.den_ * b.den_;
    r.normalize();
    return r;
}

QPoly &QPoly::operator*=(const QPoly &rhs) { return *this = *this * rhs; }

QPoly &QPoly::operator*=(const Rational &c)
{
    if (c == 0) {
        num_.clear();
        den_ = 1;
        return *this;
    }
    for (auto &x : num_) {
        x *= c.get_num();
    }
    den_ *= c.get_den();
    normalize();
    return *this;
}

QPoly &QPoly::operator/=(const Rational &c)
{
    if (c == 0) {
        raise(Errc::NotAUnit, "division of a polynomial by zero");
    }
    Rational inv = 1 / c;
    return *this *= inv;
}

std::pair<QPoly, QPoly> QPoly::divmod(const QPoly &a, const QPoly &b)
{
    if (b.is_zero()) {
        raise(Errc::NotAUnit, "polynomial division by zero");
    }
    if (a.degree() < b.degree()) {
        return {QPoly(), a};
    }
    // Work with b's numerator vector; a/b = (A/da) / (B/db).
    const auto db = b.degree();
    std::vector<Rational> rem(a.num_.size());
    for (std::size_t i = 0; i < a.num_.size(); ++i) {
        rem[i] = Rational(a.num_[i], a.den_);
        rem[i].canonicalize();
    }
    std::vector<Rational> bc(b.num_.size());
    for (std::size_t i = 0; i < b.num_.size(); ++i) {
        bc[i] = Rational(b.num_[i], b.den_);
        bc[i].canonicalize();
    }
    const Rational lead_inv = 1 / bc.back();
    std::vector<Rational> quot(static_cast<std::size_t>(a.degree() - db) + 1);
    for (int k = a.degree() - db; k >= 0; --k) {
        Rational q = rem[static_cast<std::size_t>(k + db)] * lead_inv;
        quot[static_cast<std::size_t>(k)] = q;
        if (q == 0) {
            continue;
        }
        for (int j = 0; j <= db; ++j) {
            rem[static_cast<std::size_t>(k + j)] -= q * bc[static_cast<std::size_t>(j)];
        }
    }
    rem.resize(static_cast<std::size_t>(db));
    return {QPoly(quot), QPoly(rem)};
}

QPoly QPoly::exact_div(const QPoly &a, const QPoly &b)
{
    auto [q, r] = divmod(a, b);
    if (!r.is_zero()) {
        raise(Errc::NotAUnit, "inexact polynomial division");
    }
    return q;
}

QPoly QPoly::gcd(const QPoly &a, const QPoly &b)
{
    // Primitive remainder sequence on the integer numerators.
    std::vector<Integer> x = a.num_;
    std::vector<Integer> y = b.num_;
    if (x.size() < y.size()) {
        std::swap(x, y);
    }
    make_primitive(x);
    make_primitive(y);
    while (!y.empty()) {
        // x <- prem(x, y), made primitive.
        const Integer &ly = y.back();
        while (x.size() >= y.size() && !x.empty()) {
            const std::size_t shift = x.size() - y.size();
            Integer lx = x.back();
            Integer g;
            mpz_gcd(g.get_mpz_t(), lx.get_mpz_t(), ly.get_mpz_t());
            Integer fy, fx;
            mpz_divexact(fy.get_mpz_t(), ly.get_mpz_t(), g.get_mpz_t());
            mpz_divexact(fx.get_mpz_t(), lx.get_mpz_t(), g.get_mpz_t());
            for (auto &c : x) {
                c *= fy;
            }
            for (std::size_t j = 0; j < y.size(); ++j) {
                mpz_submul(x[shift + j].get_mpz_t(), fx.get_mpz_t(), y[j].get_mpz_t());
            }
            trim(x);
            make_primitive(x);
        }
        std::swap(x, y);
    }
    if (x.empty()) {
        return QPoly();
    }
    QPoly g(std::move(x), Integer(1));
    return g.monic();
}

QPoly QPoly::monic() const
{
    if (is_zero()) {
        return *this;
    }
    return *this / leading();
}

QPoly QPoly::inflate(int k) const
{
    if (k < 1) {
        raise(Errc::InvalidArgument, "inflate exponent must be positive");
    }
    if (is_zero() || k == 1) {
        return *this;
    }
    QPoly r;
    r.num_.assign(static_cast<std::size_t>(degree()) * static_cast<std::size_t>(k) + 1, Integer(0));
    for (std::size_t i = 0; i < num_.size(); ++i) {
        r.num_[i * static_cast<std::size_t>(k)] = num_[i];
    }
    r.den_ = den_;
    return r;
}

QPoly QPoly::derivative() const
{
    if (num_.size() <= 1) {
        return QPoly();
    }
    std::vector<Integer> d(num_.size() - 1);
    for (std::size_t i = 1; i < num_.size(); ++i) {
        d[i - 1] = num_[i] * static_cast<unsigned long>(i);
    }
    return QPoly(std::move(d), den_);
}

Rational QPoly::operator()(const Rational &u) const
{
    Rational acc = 0;
    for (auto it = num_.rbegin(); it != num_.rend(); ++it) {
        acc = acc * u + Rational(*it);
    }
    Rational r = acc / Rational(den_);
    return r;
}

std::complex<long double> QPoly::operator()(const std::complex<long double> &u) const
{
    std::complex<long double> acc = 0;
    for (auto it = num_.rbegin(); it != num_.rend(); ++it) {
        acc = acc * u + std::complex<long double>(to_long_double(*it));
    }
    return acc / to_long_double(den_);
}

std::string QPoly::to_string(char var) const
{
    if (is_zero()) {
        return "0";
    }
    std::ostringstream os;
    bool first = true;
    for (int i = degree(); i >= 0; --i) {
        Rational c = coeff(i);
        if (c == 0) {
            continue;
        }
        const bool neg = c < 0;
        Rational mag = neg ? Rational(-c) : c;
        if (first) {
            os << (neg ? "-" : "");
        } else {
            os << (neg ? " - " : " + ");
        }
        first = false;
        if (i == 0) {
            os << logalg::to_string(mag);
            continue;
        }
        if (mag != 1) {
            os << logalg::to_string(mag) << "*";
        }
        os << var;
        if (i > 1) {
            os << "^" << i;
        }
    }
    return os.str();
}

std::string to_string(const QPoly &p) { return p.to_string(); }

} // namespace logalg
