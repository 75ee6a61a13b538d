#include "logalg/series_io.hpp"

#include <charconv>

namespace logalg {

std::string serialize(const TruncatedSeries<Rational> &s)
{
    std::string out = std::to_string(s.valuation()) + ";" + std::to_string(s.precision()) + ";";
    bool first = true;
    for (const auto &c : s.coefficients()) {
        if (!first) {
            out += ",";
        }
        first = false;
        out += to_string(c);
    }
    return out;
}

namespace {

int parse_int(std::string_view text, const char *what)
{
    int value = 0;
    const auto *end = text.data() + text.size();
    auto [ptr, ec] = std::from_chars(text.data(), end, value);
    if (ec != std::errc() || ptr != end) {
        raise(Errc::ParseError, std::string("bad ") + what + " '" + std::string(text) + "'");
    }
    return value;
}

} // namespace

TruncatedSeries<Rational> parse_series(std::string_view line, Var var)
{
    const auto s1 = line.find(';');
    const auto s2 = s1 == std::string_view::npos ? s1 : line.find(';', s1 + 1);
    if (s2 == std::string_view::npos) {
        raise(Errc::ParseError, "expected 'valuation;prec;coefficients'");
    }
    const int val = parse_int(line.substr(0, s1), "valuation");
    const int prec = parse_int(line.substr(s1 + 1, s2 - s1 - 1), "precision");
    std::vector<Rational> coeffs;
    std::string_view rest = line.substr(s2 + 1);
    while (!rest.empty() && (rest.back() == '\n' || rest.back() == '\r')) {
        rest.remove_suffix(1);
    }
    while (!rest.empty()) {
        const auto comma = rest.find(',');
        coeffs.push_back(parse_rational(rest.substr(0, comma)));
        if (comma == std::string_view::npos) {
            break;
        }
        rest.remove_prefix(comma + 1);
    }
    if (prec < val && !coeffs.empty()) {
        raise(Errc::ParseError, "precision below valuation");
    }
    if (static_cast<long>(coeffs.size()) > static_cast<long>(prec) - val) {
        raise(Errc::ParseError, "more coefficients than the precision allows");
    }
    return TruncatedSeries<Rational>(std::min(val, prec), std::move(coeffs), prec, var);
}

} // namespace logalg
