#pragma once

#include "logalg/error.hpp"
#include "logalg/ring.hpp"

#include <algorithm>
#include <limits>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace logalg {

// Variable tags are metadata. q and t name the same formal parameter.
enum class Var { t, z, q, u };

constexpr bool same_variable(Var a, Var b) noexcept
{
    auto canon = [](Var v) { return v == Var::q ? Var::t : v; };
    return canon(a) == canon(b);
}

constexpr char var_name(Var v) noexcept
{
    switch (v) {
    case Var::t: return 't';
    case Var::z: return 'z';
    case Var::q: return 'q';
    case Var::u: return 'u';
    }
    return '?';
}

/// Laurent or power series over R, known exactly below `precision()`.
///
/// Coefficients from the valuation up to precision - 1 are stored densely;
/// exponents at or above the precision are unknown (not zero). The leading
/// stored coefficient is nonzero unless the series is O(t^prec), in which
/// case valuation() == precision() and nothing is stored.
template <CoefficientRing R>
class TruncatedSeries {
public:
    using coeff_type = R;
    using traits = RingTraits<R>;

    TruncatedSeries() = default;

    /// `coeffs[i]` is the coefficient of t^(valuation + i). Missing trailing
    /// entries up to `prec` are taken as zero.
    TruncatedSeries(int valuation, std::vector<R> coeffs, int prec, Var var = Var::t)
        : val_(valuation), prec_(prec), var_(var), c_(std::move(coeffs))
    {
        if (valuation > prec && !c_.empty()) {
            raise(Errc::InvalidArgument, "series valuation above its precision");
        }
        const auto len = static_cast<std::size_t>(std::max(0, prec - valuation));
        if (c_.size() > len) {
            raise(Errc::InvalidArgument, "more coefficients than the precision allows");
        }
        c_.resize(len, traits::zero());
        normalize();
    }

    static TruncatedSeries zero(int prec, Var var = Var::t) { return TruncatedSeries(prec, {}, prec, var); }
    static TruncatedSeries constant(const R &c, int prec, Var var = Var::t)
    {
        return monomial(c, 0, prec, var);
    }
    static TruncatedSeries monomial(const R &c, int exponent, int prec, Var var = Var::t)
    {
        if (exponent >= prec) {
            return zero(prec, var);
        }
        return TruncatedSeries(exponent, {c}, prec, var);
    }
    /// The series t + O(t^prec).
    static TruncatedSeries variable(int prec, Var var = Var::t) { return monomial(traits::one(), 1, prec, var); }

    int valuation() const noexcept { return val_; }
    int precision() const noexcept { return prec_; }
    Var variable() const noexcept { return var_; }
    bool is_zero() const noexcept { return c_.empty(); }

    /// Coefficient of t^n; n must be below the precision.
    R coeff(int n) const
    {
        if (n >= prec_) {
            raise(Errc::InvalidArgument,
                  "coefficient of " + std::string(1, var_name(var_)) + "^" + std::to_string(n) + " is unknown (precision " +
                      std::to_string(prec_) + ")");
        }
        if (n < val_) {
            return traits::zero();
        }
        return c_[static_cast<std::size_t>(n - val_)];
    }

    const R &leading() const
    {
        if (c_.empty()) {
            raise(Errc::NotAUnit, "leading coefficient of a zero series");
        }
        return c_.front();
    }

    std::span<const R> coefficients() const noexcept { return c_; }

    TruncatedSeries truncated(int prec) const
    {
        if (prec >= prec_) {
            return *this;
        }
        if (prec <= val_) {
            return zero(prec, var_);
        }
        std::vector<R> c(c_.begin(), c_.begin() + (prec - val_));
        return TruncatedSeries(val_, std::move(c), prec, var_);
    }

    /// Declares unknown coefficients in [precision, prec) to be zero.
    TruncatedSeries padded(int prec) const
    {
        if (prec <= prec_) {
            return *this;
        }
        if (c_.empty()) {
            return zero(prec, var_);
        }
        return TruncatedSeries(val_, c_, prec, var_);
    }

    TruncatedSeries with_variable(Var v) const
    {
        TruncatedSeries r = *this;
        r.var_ = v;
        return r;
    }

    /// Multiplication by t^k.
    TruncatedSeries shifted(int k) const
    {
        TruncatedSeries r = *this;
        r.val_ += k;
        r.prec_ += k;
        return r;
    }

    template <class F>
    auto map(F &&f) const -> TruncatedSeries<std::decay_t<decltype(f(std::declval<const R &>()))>>
    {
        using S = std::decay_t<decltype(f(std::declval<const R &>()))>;
        std::vector<S> c;
        c.reserve(c_.size());
        for (const auto &x : c_) {
            c.push_back(f(x));
        }
        return TruncatedSeries<S>(val_, std::move(c), prec_, var_);
    }

    TruncatedSeries operator-() const
    {
        TruncatedSeries r = *this;
        for (auto &x : r.c_) {
            x = R(-x);
        }
        return r;
    }

    TruncatedSeries &operator+=(const TruncatedSeries &rhs) { return *this = add(*this, rhs, false); }
    TruncatedSeries &operator-=(const TruncatedSeries &rhs) { return *this = add(*this, rhs, true); }
    TruncatedSeries &operator*=(const TruncatedSeries &rhs) { return *this = multiply(*this, rhs); }

    friend TruncatedSeries operator+(const TruncatedSeries &a, const TruncatedSeries &b) { return add(a, b, false); }
    friend TruncatedSeries operator-(const TruncatedSeries &a, const TruncatedSeries &b) { return add(a, b, true); }
    friend TruncatedSeries operator*(const TruncatedSeries &a, const TruncatedSeries &b) { return multiply(a, b); }

    friend TruncatedSeries operator*(const R &c, const TruncatedSeries &s) { return s.scaled(c); }
    friend TruncatedSeries operator*(const TruncatedSeries &s, const R &c) { return s.scaled(c); }

    TruncatedSeries scaled(const R &c) const
    {
        std::vector<R> out;
        out.reserve(c_.size());
        for (const auto &x : c_) {
            out.push_back(R(c * x));
        }
        return TruncatedSeries(val_, std::move(out), prec_, var_);
    }

    /// Structural equality: same valuation, precision, and coefficients.
    friend bool operator==(const TruncatedSeries &a, const TruncatedSeries &b)
    {
        return a.val_ == b.val_ && a.prec_ == b.prec_ && same_variable(a.var_, b.var_) && a.c_ == b.c_;
    }

    /// Product truncated at `limit`; avoids computing coefficients nobody asked for.
    static TruncatedSeries multiply(const TruncatedSeries &a, const TruncatedSeries &b,
                                    int limit = std::numeric_limits<int>::max())
    {
        check_vars(a, b);
        const int prec = std::min({a.prec_ + b.val_, b.prec_ + a.val_, limit});
        const int val = a.val_ + b.val_;
        if (a.is_zero() || b.is_zero() || val >= prec) {
            return zero(prec, a.var_);
        }
        std::vector<R> out(static_cast<std::size_t>(prec - val), traits::zero());
        for (int n = val; n < prec; ++n) {
            const int lo = std::max(a.val_, n - b.prec_ + 1);
            const int hi = n - b.val_;
            R acc = traits::zero();
            for (int i = lo; i <= hi; ++i) {
                const R &x = a.c_[static_cast<std::size_t>(i - a.val_)];
                if (traits::is_zero(x)) {
                    continue;
                }
                const R &y = b.c_[static_cast<std::size_t>(n - i - b.val_)];
                if (traits::is_zero(y)) {
                    continue;
                }
                acc += x * y;
            }
            out[static_cast<std::size_t>(n - val)] = std::move(acc);
        }
        return TruncatedSeries(val, std::move(out), prec, a.var_);
    }

private:
    static void check_vars(const TruncatedSeries &a, const TruncatedSeries &b)
    {
        if (!same_variable(a.var_, b.var_)) {
            raise(Errc::RingMismatch, std::string("series in ") + var_name(a.var_) + " combined with series in " +
                                          var_name(b.var_));
        }
    }

    static TruncatedSeries add(const TruncatedSeries &a, const TruncatedSeries &b, bool subtract)
    {
        check_vars(a, b);
        const int prec = std::min(a.prec_, b.prec_);
        const int val = std::min(a.val_, b.val_);
        if (val >= prec) {
            return zero(prec, a.var_);
        }
        std::vector<R> out(static_cast<std::size_t>(prec - val), traits::zero());
        for (int n = a.val_; n < std::min(prec, a.prec_); ++n) {
            out[static_cast<std::size_t>(n - val)] = a.c_[static_cast<std::size_t>(n - a.val_)];
        }
        for (int n = b.val_; n < std::min(prec, b.prec_); ++n) {
            auto &slot = out[static_cast<std::size_t>(n - val)];
            const R &y = b.c_[static_cast<std::size_t>(n - b.val_)];
            if (subtract) {
                slot -= y;
            } else {
                slot += y;
            }
        }
        return TruncatedSeries(val, std::move(out), prec, a.var_);
    }

    void normalize()
    {
        std::size_t lead = 0;
        while (lead < c_.size() && traits::is_zero(c_[lead])) {
            ++lead;
        }
        if (lead == c_.size()) {
            c_.clear();
            val_ = prec_;
            return;
        }
        if (lead > 0) {
            c_.erase(c_.begin(), c_.begin() + static_cast<std::ptrdiff_t>(lead));
            val_ += static_cast<int>(lead);
        }
    }

    int val_ = 0;
    int prec_ = 0;
    Var var_ = Var::t;
    std::vector<R> c_;
};

/// First exponent below `upto` (and below both precisions) where a and b differ.
template <CoefficientRing R>
std::optional<int> first_mismatch(const TruncatedSeries<R> &a, const TruncatedSeries<R> &b,
                                  int upto = std::numeric_limits<int>::max())
{
    const int hi = std::min({a.precision(), b.precision(), upto});
    const int lo = std::min(a.valuation(), b.valuation());
    for (int n = lo; n < hi; ++n) {
        if (!(a.coeff(n) == b.coeff(n))) {
            return n;
        }
    }
    return std::nullopt;
}

/// Multiplicative inverse; the leading coefficient must be a unit of R.
template <CoefficientRing R>
TruncatedSeries<R> inverse(const TruncatedSeries<R> &s)
{
    using T = RingTraits<R>;
    if (s.is_zero()) {
        raise(Errc::NotAUnit, "inverse of a series with no known nonzero coefficient");
    }
    if (!T::is_unit(s.leading())) {
        raise(Errc::NotAUnit, "leading coefficient " + T::to_string(s.leading()) + " is not invertible");
    }
    const int v = s.valuation();
    const int rel = s.precision() - v;
    const auto c = s.coefficients();
    const R d0 = T::inverse(c[0]);
    std::vector<R> d(static_cast<std::size_t>(rel), T::zero());
    d[0] = d0;
    for (int k = 1; k < rel; ++k) {
        R acc = T::zero();
        for (int j = 1; j <= k; ++j) {
            const R &cj = c[static_cast<std::size_t>(j)];
            if (T::is_zero(cj)) {
                continue;
            }
            acc += cj * d[static_cast<std::size_t>(k - j)];
        }
        d[static_cast<std::size_t>(k)] = R(-(d0 * acc));
    }
    return TruncatedSeries<R>(-v, std::move(d), -v + rel, s.variable());
}

template <CoefficientRing R>
TruncatedSeries<R> operator/(const TruncatedSeries<R> &a, const TruncatedSeries<R> &b)
{
    return a * inverse(b);
}

/// s^n for n >= 0; negative n goes through the inverse. s^0 is 1 to the
/// relative precision of s.
template <CoefficientRing R>
TruncatedSeries<R> pow(const TruncatedSeries<R> &s, int n)
{
    using T = RingTraits<R>;
    if (n < 0) {
        return pow(inverse(s), -n);
    }
    if (n == 0) {
        return TruncatedSeries<R>::constant(T::one(), s.precision() - s.valuation(), s.variable());
    }
    TruncatedSeries<R> result = s;
    for (int i = 1; i < n; ++i) {
        result = result * s;
    }
    return result;
}

/// outer(inner(t)). inner needs positive valuation; a Laurent outer also
/// needs an invertible leading coefficient in inner.
template <CoefficientRing R>
TruncatedSeries<R> compose(const TruncatedSeries<R> &outer, const TruncatedSeries<R> &inner)
{
    using T = RingTraits<R>;
    using S = TruncatedSeries<R>;
    const int w = inner.valuation();
    const int q = inner.precision();
    if (w < 1) {
        raise(Errc::CompositionDomain, "inner series has a nonzero constant or negative-order term");
    }
    const int v = outer.valuation();
    const int p = outer.precision();
    const Var var = inner.variable();

    // Each nonzero c_k * inner^k is known below k*w + (q - w); the unknown
    // tail of outer starts at inner^p.
    long target = static_cast<long>(p) * w;
    for (int k = v; k < p; ++k) {
        if (k != 0 && !T::is_zero(outer.coeff(k))) {
            target = std::min(target, static_cast<long>(k) * w + (q - w));
        }
    }
    const int limit = static_cast<int>(target);
    const int base = std::min(0, v * w);
    if (base >= limit) {
        return S::zero(limit, var);
    }
    std::vector<R> acc(static_cast<std::size_t>(limit - base), T::zero());
    auto accumulate = [&](const R &c, const S &power) {
        for (int n = power.valuation(); n < std::min(limit, power.precision()); ++n) {
            const R &x = power.coefficients()[static_cast<std::size_t>(n - power.valuation())];
            if (!T::is_zero(x)) {
                acc[static_cast<std::size_t>(n - base)] += c * x;
            }
        }
    };

    if (v <= 0 && 0 < p && 0 < limit) {
        acc[static_cast<std::size_t>(0 - base)] += outer.coeff(0);
    }
    if (p > 1) {
        const S g = inner.truncated(limit);
        S power = g;
        for (int k = 1; k < p && k * w < limit; ++k) {
            if (k > 1) {
                power = S::multiply(power, g, limit);
            }
            if (k >= v) {
                const R c = outer.coeff(k);
                if (!T::is_zero(c)) {
                    accumulate(c, power);
                }
            }
        }
    }
    if (v < 0) {
        const S h = inverse(inner);
        S power = h;
        for (int j = 1; j <= -v; ++j) {
            if (j > 1) {
                // No early truncation: each factor h has negative valuation and
                // would eat into the precision still needed by later powers.
                power = power * h;
            }
            if (-j < p) {
                const R c = outer.coeff(-j);
                if (!T::is_zero(c)) {
                    accumulate(c, power);
                }
            }
        }
    }
    return S(base, std::move(acc), limit, var);
}

template <CoefficientRing R>
TruncatedSeries<R> derive(const TruncatedSeries<R> &s)
{
    using T = RingTraits<R>;
    const int v = s.valuation();
    const int p = s.precision();
    if (s.is_zero()) {
        return TruncatedSeries<R>::zero(p - 1, s.variable());
    }
    std::vector<R> out;
    out.reserve(static_cast<std::size_t>(p - v));
    for (int n = v; n < p; ++n) {
        out.push_back(T::mul_int(s.coeff(n), n));
    }
    return TruncatedSeries<R>(v - 1, std::move(out), p - 1, s.variable());
}

/// Antiderivative with zero constant term. A t^-1 term has no antiderivative.
template <CoefficientRing R>
TruncatedSeries<R> integrate(const TruncatedSeries<R> &s)
{
    using T = RingTraits<R>;
    const int v = s.valuation();
    const int p = s.precision();
    if (p <= -1 || (v <= -1 && !T::is_zero(s.coeff(-1)))) {
        raise(Errc::LogarithmicTerm, "integrand has a (possibly unknown) t^-1 term");
    }
    if (s.is_zero()) {
        return TruncatedSeries<R>::zero(p + 1, s.variable());
    }
    std::vector<R> out;
    out.reserve(static_cast<std::size_t>(p - v));
    for (int n = v; n < p; ++n) {
        out.push_back(n == -1 ? T::zero() : T::div_int(s.coeff(n), n + 1));
    }
    return TruncatedSeries<R>(v + 1, std::move(out), p + 1, s.variable());
}

namespace detail {

template <CoefficientRing R>
void check_reversible(const TruncatedSeries<R> &s)
{
    if (s.is_zero() || s.valuation() != 1) {
        raise(Errc::NotReversible, "series must have valuation exactly 1 (got " +
                                       std::to_string(s.is_zero() ? s.precision() : s.valuation()) + ")");
    }
    if (!RingTraits<R>::is_unit(s.leading())) {
        raise(Errc::NotReversible, "linear coefficient is not a unit");
    }
}

} // namespace detail

/// Compositional inverse by Newton iteration: g with s(g(t)) = t.
template <CoefficientRing R>
TruncatedSeries<R> reverse(const TruncatedSeries<R> &s)
{
    using T = RingTraits<R>;
    using S = TruncatedSeries<R>;
    detail::check_reversible(s);
    const int p = s.precision();
    const Var var = s.variable();
    S g = S::monomial(T::inverse(s.leading()), 1, std::min(p, 2), var);
    const S ds = derive(s);
    int n = g.precision();
    while (n < p) {
        const int m = std::min(2 * n, p);
        const S ge = g.padded(m);
        const S err = compose(s.truncated(m), ge) - S::variable(m, var);
        const S slope = compose(ds.truncated(m - 1), ge);
        g = (ge - err / slope).truncated(m);
        n = m;
    }
    return g;
}

/// Compositional inverse by Lagrange inversion: [t^n] g = (1/n) [z^(n-1)] (z/s(z))^n.
/// Cubic cost; kept as an independent route for cross-checks.
template <CoefficientRing R>
TruncatedSeries<R> reverse_lagrange(const TruncatedSeries<R> &s)
{
    using T = RingTraits<R>;
    using S = TruncatedSeries<R>;
    detail::check_reversible(s);
    const int p = s.precision();
    const S h = inverse(s.shifted(-1));
    std::vector<R> out(static_cast<std::size_t>(std::max(p - 1, 0)), T::zero());
    S power = h;
    for (int n = 1; n < p; ++n) {
        if (n > 1) {
            power = S::multiply(power, h, p - 1);
        }
        out[static_cast<std::size_t>(n - 1)] = T::div_int(power.coeff(n - 1), n);
    }
    return S(1, std::move(out), p, s.variable());
}

/// t -> c t, i.e. the coefficient of t^n is multiplied by c^n.
template <CoefficientRing R>
TruncatedSeries<R> scale_variable(const TruncatedSeries<R> &s, const R &c)
{
    using T = RingTraits<R>;
    if (s.is_zero()) {
        return s;
    }
    const int v = s.valuation();
    const int p = s.precision();
    std::vector<R> out;
    out.reserve(static_cast<std::size_t>(p - v));
    R cn = T::one();
    if (v < 0) {
        const R ci = T::inverse(c);
        for (int i = 0; i < -v; ++i) {
            cn *= ci;
        }
    } else {
        for (int i = 0; i < v; ++i) {
            cn *= c;
        }
    }
    for (int n = v; n < p; ++n) {
        out.push_back(R(s.coeff(n) * cn));
        cn *= c;
    }
    return TruncatedSeries<R>(v, std::move(out), p, s.variable());
}

} // namespace logalg
