#pragma once

#include "logalg/series.hpp"

#include <algorithm>
#include <optional>
#include <utility>
#include <vector>

namespace logalg {

/// Power series in t1, t2 known for total degree below `precision()`.
template <CoefficientRing R>
class BivariateSeries {
public:
    using traits = RingTraits<R>;

    BivariateSeries() = default;
    explicit BivariateSeries(int prec) : prec_(std::max(prec, 0)) { reset(); }

    static BivariateSeries in_t1(const TruncatedSeries<R> &s, int prec) { return embed(s, prec, true); }
    static BivariateSeries in_t2(const TruncatedSeries<R> &s, int prec) { return embed(s, prec, false); }

    int precision() const noexcept { return prec_; }

    const R &coeff(int i, int j) const
    {
        if (i < 0 || j < 0 || i + j >= prec_) {
            raise(Errc::InvalidArgument, "bivariate coefficient outside the known range");
        }
        return rows_[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
    }
    R &coeff(int i, int j) { return rows_[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]; }

    BivariateSeries swapped() const
    {
        BivariateSeries r(prec_);
        for (int i = 0; i < prec_; ++i) {
            for (int j = 0; i + j < prec_; ++j) {
                r.coeff(j, i) = coeff(i, j);
            }
        }
        return r;
    }

    friend BivariateSeries operator+(const BivariateSeries &a, const BivariateSeries &b)
    {
        BivariateSeries r(std::min(a.prec_, b.prec_));
        for (int i = 0; i < r.prec_; ++i) {
            for (int j = 0; i + j < r.prec_; ++j) {
                r.coeff(i, j) = a.coeff(i, j) + b.coeff(i, j);
            }
        }
        return r;
    }

    friend BivariateSeries operator*(const BivariateSeries &a, const BivariateSeries &b)
    {
        // Both operands are assumed to start in total degree >= 0; the result
        // is only claimed to the smaller precision.
        BivariateSeries r(std::min(a.prec_, b.prec_));
        const int p = r.prec_;
        for (int i1 = 0; i1 < p; ++i1) {
            for (int j1 = 0; i1 + j1 < p; ++j1) {
                const R &x = a.coeff(i1, j1);
                if (traits::is_zero(x)) {
                    continue;
                }
                for (int i2 = 0; i1 + j1 + i2 < p; ++i2) {
                    for (int j2 = 0; i1 + j1 + i2 + j2 < p; ++j2) {
                        const R &y = b.coeff(i2, j2);
                        if (!traits::is_zero(y)) {
                            r.coeff(i1 + i2, j1 + j2) += x * y;
                        }
                    }
                }
            }
        }
        return r;
    }

    BivariateSeries scaled(const R &c) const
    {
        BivariateSeries r(prec_);
        for (int i = 0; i < prec_; ++i) {
            for (int j = 0; i + j < prec_; ++j) {
                r.coeff(i, j) = R(c * coeff(i, j));
            }
        }
        return r;
    }

    bool has_zero_constant() const { return prec_ == 0 || traits::is_zero(coeff(0, 0)); }

    /// Coefficientwise comparison below the smaller precision; returns the first (i, j) that differs.
    friend std::optional<std::pair<int, int>> first_mismatch(const BivariateSeries &a, const BivariateSeries &b)
    {
        const int p = std::min(a.prec_, b.prec_);
        for (int d = 0; d < p; ++d) {
            for (int i = 0; i <= d; ++i) {
                if (!(a.coeff(i, d - i) == b.coeff(i, d - i))) {
                    return std::make_pair(i, d - i);
                }
            }
        }
        return std::nullopt;
    }

    /// Substitutes univariate series (same variable, positive valuation) for t1 and t2.
    template <CoefficientRing S, class Lift>
    TruncatedSeries<S> evaluate(const TruncatedSeries<S> &a, const TruncatedSeries<S> &b, Lift &&lift) const
    {
        using ST = RingTraits<S>;
        using Ser = TruncatedSeries<S>;
        const int wa = a.valuation();
        const int wb = b.valuation();
        if (wa < 1 || wb < 1) {
            raise(Errc::CompositionDomain, "group-law arguments need positive valuation");
        }
        const Var var = a.variable();
        long target = static_cast<long>(prec_) * std::min(wa, wb);
        for (int i = 0; i < prec_; ++i) {
            for (int j = 0; i + j < prec_; ++j) {
                if (traits::is_zero(coeff(i, j))) {
                    continue;
                }
                long known = std::numeric_limits<int>::max();
                if (i > 0) {
                    known = std::min<long>(known, static_cast<long>(i) * wa + j * wb + (a.precision() - wa));
                }
                if (j > 0) {
                    known = std::min<long>(known, static_cast<long>(i) * wa + j * wb + (b.precision() - wb));
                }
                target = std::min(target, known);
            }
        }
        const int limit = static_cast<int>(target);
        const Ser at = a.truncated(limit);
        const Ser bt = b.truncated(limit);

        std::vector<Ser> apow;
        apow.reserve(static_cast<std::size_t>(prec_));
        apow.push_back(Ser::constant(ST::one(), limit, var));
        for (int i = 1; i < prec_ && i * wa < limit; ++i) {
            apow.push_back(Ser::multiply(apow.back(), at, limit));
        }

        // Horner in t2 over inner sums in t1.
        auto row = [&](int j) {
            std::vector<S> acc(static_cast<std::size_t>(std::max(limit, 0)), ST::zero());
            for (int i = 0; i + j < prec_ && i < static_cast<int>(apow.size()); ++i) {
                const R &c = coeff(i, j);
                if (traits::is_zero(c)) {
                    continue;
                }
                const S cl = lift(c);
                const Ser &pw = apow[static_cast<std::size_t>(i)];
                for (int n = pw.valuation(); n < std::min(limit, pw.precision()); ++n) {
                    const S &x = pw.coefficients()[static_cast<std::size_t>(n - pw.valuation())];
                    if (!ST::is_zero(x)) {
                        acc[static_cast<std::size_t>(n)] += cl * x;
                    }
                }
            }
            return Ser(0, std::move(acc), std::max(limit, 0), var);
        };

        int top = prec_ - 1;
        while (top > 0 && top * wb >= limit) {
            --top;
        }
        Ser result = row(top);
        for (int j = top - 1; j >= 0; --j) {
            result = Ser::multiply(result, bt, limit) + row(j);
        }
        return result.truncated(limit);
    }

    /// outer(self) for a univariate outer; self must have zero constant term.
    friend BivariateSeries compose(const TruncatedSeries<R> &outer, const BivariateSeries &inner)
    {
        if (!inner.has_zero_constant()) {
            raise(Errc::CompositionDomain, "bivariate inner series has a constant term");
        }
        if (outer.valuation() < 0) {
            raise(Errc::CompositionDomain, "Laurent outer series in a bivariate composition");
        }
        const int p = std::min(inner.prec_, outer.precision());
        BivariateSeries result(p);
        if (outer.valuation() == 0 && p > 0) {
            result.coeff(0, 0) = outer.coeff(0);
        }
        BivariateSeries power = inner.truncated(p);
        for (int k = 1; k < p; ++k) {
            if (k > 1) {
                power = power * inner.truncated(p);
            }
            const R c = k >= outer.valuation() ? outer.coeff(k) : traits::zero();
            if (traits::is_zero(c)) {
                continue;
            }
            for (int i = 0; i < p; ++i) {
                for (int j = 0; i + j < p; ++j) {
                    const R &x = power.coeff(i, j);
                    if (!traits::is_zero(x)) {
                        result.coeff(i, j) += c * x;
                    }
                }
            }
        }
        return result;
    }

    BivariateSeries truncated(int prec) const
    {
        if (prec >= prec_) {
            return *this;
        }
        BivariateSeries r(prec);
        for (int i = 0; i < prec; ++i) {
            for (int j = 0; i + j < prec; ++j) {
                r.coeff(i, j) = coeff(i, j);
            }
        }
        return r;
    }

private:
    static BivariateSeries embed(const TruncatedSeries<R> &s, int prec, bool first)
    {
        if (s.valuation() < 0) {
            raise(Errc::CompositionDomain, "cannot embed a Laurent series as a bivariate power series");
        }
        BivariateSeries r(std::min(prec, s.precision()));
        for (int n = s.valuation(); n < r.prec_; ++n) {
            if (first) {
                r.coeff(n, 0) = s.coeff(n);
            } else {
                r.coeff(0, n) = s.coeff(n);
            }
        }
        return r;
    }

    void reset()
    {
        rows_.assign(static_cast<std::size_t>(prec_), {});
        for (int i = 0; i < prec_; ++i) {
            rows_[static_cast<std::size_t>(i)].assign(static_cast<std::size_t>(prec_ - i), traits::zero());
        }
    }

    int prec_ = 0;
    std::vector<std::vector<R>> rows_;
};

} // namespace logalg
