#pragma once

#include "logalg/series.hpp"

#include <sstream>
#include <string>
#include <string_view>

namespace logalg {

/// Human-readable form, e.g. "t - t^2 - 1/3*t^3 + O(t^8)".
template <CoefficientRing R>
std::string to_string(const TruncatedSeries<R> &s)
{
    using T = RingTraits<R>;
    const char v = var_name(s.variable());
    std::ostringstream os;
    bool first = true;
    auto power = [&](int n) {
        std::string p(1, v);
        if (n != 1) {
            p += "^" + std::to_string(n);
        }
        return p;
    };
    for (int n = s.valuation(); n < s.precision(); ++n) {
        const R c = s.coeff(n);
        if (T::is_zero(c)) {
            continue;
        }
        std::string cs = T::to_string(c);
        bool neg = false;
        if (T::is_simple(c) && !cs.empty() && cs.front() == '-') {
            neg = true;
            cs.erase(0, 1);
        } else if (!T::is_simple(c)) {
            cs = "(" + cs + ")";
        }
        if (first) {
            os << (neg ? "-" : "");
        } else {
            os << (neg ? " - " : " + ");
        }
        first = false;
        if (n == 0) {
            os << cs;
        } else if (cs == "1") {
            os << power(n);
        } else {
            os << cs << "*" << power(n);
        }
    }
    if (!first) {
        os << " + ";
    }
    os << "O(" << power(s.precision()) << ")";
    return os.str();
}

/// Lossless line format "valuation;prec;c0,c1,..." (c0 is the coefficient at the valuation).
std::string serialize(const TruncatedSeries<Rational> &s);

/// Inverse of serialize(); throws ParseError on malformed input.
TruncatedSeries<Rational> parse_series(std::string_view line, Var var = Var::t);

} // namespace logalg
