#include "logalg/modform.hpp"

#include "logalg/error.hpp"

#include <charconv>
#include <fstream>
#include <numeric>
#include <sstream>

namespace logalg {

std::string_view provenance_name(Provenance p) noexcept
{
    switch (p) {
    case Provenance::EtaProduct: return "eta-product";
    case Provenance::HeckeFromPrimes: return "hecke";
    case Provenance::File: return "file";
    }
    return "unknown";
}

long NewformCoeffs::operator[](int n) const
{
    if (n < 1 || n >= size()) {
        raise(Errc::InsufficientPrimeData, "a_" + std::to_string(n) + " is not available (have " +
                                               std::to_string(size() - 1) + " coefficients)");
    }
    return a[static_cast<std::size_t>(n)];
}

namespace {

std::vector<int> smallest_prime_factors(int n)
{
    std::vector<int> spf(static_cast<std::size_t>(std::max(n, 2)), 0);
    for (int i = 2; i < n; ++i) {
        if (spf[static_cast<std::size_t>(i)] == 0) {
            for (int j = i; j < n; j += i) {
                if (spf[static_cast<std::size_t>(j)] == 0) {
                    spf[static_cast<std::size_t>(j)] = i;
                }
            }
        }
    }
    return spf;
}

[[noreturn]] void bad_eigenform(const std::string &what) { raise(Errc::InvalidEigenform, what); }

using ZVec = std::vector<Integer>;

ZVec zmul(const ZVec &a, const ZVec &b, std::size_t len)
{
    ZVec out(len, 0);
    for (std::size_t i = 0; i < a.size() && i < len; ++i) {
        if (a[i] == 0) {
            continue;
        }
        for (std::size_t j = 0; j < b.size() && i + j < len; ++j) {
            out[i + j] += a[i] * b[j];
        }
    }
    return out;
}

// Inverse of a power series with constant term 1.
ZVec zinv(const ZVec &a, std::size_t len)
{
    ZVec d(len, 0);
    d[0] = 1;
    for (std::size_t k = 1; k < len; ++k) {
        Integer acc = 0;
        for (std::size_t j = 1; j <= k && j < a.size(); ++j) {
            acc += a[j] * d[k - j];
        }
        d[k] = -acc;
    }
    return d;
}

// prod_{m>=1} (1 - q^(d m)) below q^len via Euler's pentagonal theorem.
ZVec euler_product(int d, std::size_t len)
{
    ZVec e(len, 0);
    if (len > 0) {
        e[0] = 1;
    }
    for (long k = 1;; ++k) {
        bool any = false;
        for (long s : {k, -k}) {
            const long g = s * (3 * s - 1) / 2 * d;
            if (g < static_cast<long>(len)) {
                e[static_cast<std::size_t>(g)] += (k % 2 == 0) ? 1 : -1;
                any = true;
            }
        }
        if (!any) {
            break;
        }
    }
    return e;
}

std::string trim(std::string_view s)
{
    const auto b = s.find_first_not_of(" \t\r");
    if (b == std::string_view::npos) {
        return {};
    }
    const auto e = s.find_last_not_of(" \t\r");
    return std::string(s.substr(b, e - b + 1));
}

bool parse_long(std::string_view s, long &out)
{
    if (!s.empty() && s.front() == '+') {
        s.remove_prefix(1);
    }
    const auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), out);
    return ec == std::errc() && p == s.data() + s.size();
}

// Splits a non-comment line into exactly two integer fields.
bool two_fields(const std::string &line, long &first, long &second)
{
    std::istringstream is(line);
    std::string a, b, extra;
    if (!(is >> a >> b) || (is >> extra)) {
        return false;
    }
    return parse_long(a, first) && parse_long(b, second);
}

} // namespace

void validate_eigenform(const NewformCoeffs &f)
{
    const int n = f.size();
    if (n < 2) {
        raise(Errc::ParseError, "no coefficients");
    }
    if (f.a[1] != 1) {
        bad_eigenform("a_1 = " + std::to_string(f.a[1]) + ", expected 1");
    }
    for (int m = 2; m < n; ++m) {
        for (int k = m + 1; static_cast<long>(m) * k < n; ++k) {
            if (std::gcd(m, k) != 1) {
                continue;
            }
            const long lhs = f.a[static_cast<std::size_t>(m * k)];
            const long rhs = f.a[static_cast<std::size_t>(m)] * f.a[static_cast<std::size_t>(k)];
            if (lhs != rhs) {
                bad_eigenform("a_" + std::to_string(m * k) + " = " + std::to_string(lhs) + " but a_" +
                              std::to_string(m) + " * a_" + std::to_string(k) + " = " + std::to_string(rhs));
            }
        }
    }
    if (f.level <= 0) {
        return;
    }
    const auto spf = smallest_prime_factors(n);
    for (int p = 2; p < n; ++p) {
        if (spf[static_cast<std::size_t>(p)] != p) {
            continue;
        }
        const bool bad = f.level % p == 0;
        const long ap = f.a[static_cast<std::size_t>(p)];
        long prev = 1;
        long cur = ap;
        for (long pk = static_cast<long>(p) * p; pk < n; pk *= p) {
            const long expect = bad ? cur * ap : ap * cur - p * prev;
            if (f.a[static_cast<std::size_t>(pk)] != expect) {
                bad_eigenform("a_" + std::to_string(pk) + " = " + std::to_string(f.a[static_cast<std::size_t>(pk)]) +
                              " violates the Hecke recursion at p = " + std::to_string(p) + " (expected " +
                              std::to_string(expect) + ")");
            }
            prev = cur;
            cur = expect;
        }
    }
}

const EtaTable &EtaTable::builtin()
{
    static const EtaTable table = [] {
        EtaTable t;
        t.add(11, {{{1, 2}, {11, 2}}});
        t.add(14, {{{1, 1}, {2, 1}, {7, 1}, {14, 1}}});
        t.add(15, {{{1, 1}, {3, 1}, {5, 1}, {15, 1}}});
        t.add(20, {{{2, 2}, {10, 2}}});
        t.add(24, {{{2, 1}, {4, 1}, {6, 1}, {12, 1}}});
        t.add(27, {{{3, 2}, {9, 2}}});
        t.add(32, {{{4, 2}, {8, 2}}});
        t.add(36, {{{6, 4}}});
        return t;
    }();
    return table;
}

void EtaTable::add(long level, EtaProduct p) { table_[level] = std::move(p); }

const EtaProduct *EtaTable::find(long level) const
{
    const auto it = table_.find(level);
    return it == table_.end() ? nullptr : &it->second;
}

std::vector<long> EtaTable::levels() const
{
    std::vector<long> out;
    for (const auto &[level, p] : table_) {
        out.push_back(level);
    }
    return out;
}

EtaProduct parse_eta_config(std::string_view text)
{
    EtaProduct p;
    std::istringstream is{std::string(text)};
    std::string raw;
    int lineno = 0;
    while (std::getline(is, raw)) {
        ++lineno;
        const std::string line = trim(raw.substr(0, raw.find('#')));
        if (line.empty()) {
            continue;
        }
        long d = 0, r = 0;
        if (!two_fields(line, d, r) || d < 1) {
            raise(Errc::ParseError, "line " + std::to_string(lineno) + ": expected 'd r_d', got '" + line + "'");
        }
        p.factors.emplace_back(static_cast<int>(d), static_cast<int>(r));
    }
    if (p.factors.empty()) {
        raise(Errc::ParseError, "eta product has no factors");
    }
    return p;
}

NewformCoeffs eta_product_coeffs(const EtaProduct &p, long level, int prec)
{
    long shift24 = 0;
    for (const auto &[d, r] : p.factors) {
        shift24 += static_cast<long>(d) * r;
    }
    if (shift24 != 24) {
        raise(Errc::InvalidArgument, "eta product does not start at q^1 (sum d*r_d = " + std::to_string(shift24) + ")");
    }
    const std::size_t len = static_cast<std::size_t>(std::max(prec - 1, 0));
    ZVec prod(len, 0);
    if (len > 0) {
        prod[0] = 1;
    }
    for (const auto &[d, r] : p.factors) {
        ZVec base = euler_product(d, len);
        if (r < 0) {
            base = zinv(base, len);
        }
        for (int i = 0; i < std::abs(r); ++i) {
            prod = zmul(prod, base, len);
        }
    }
    NewformCoeffs f;
    f.level = level;
    f.provenance = Provenance::EtaProduct;
    f.a.assign(static_cast<std::size_t>(std::max(prec, 1)), 0);
    for (std::size_t i = 0; i < len; ++i) {
        if (!prod[i].fits_slong_p()) {
            raise(Errc::InvalidArgument, "eta product coefficient too large");
        }
        f.a[i + 1] = prod[i].get_si();
    }
    return f;
}

NewformCoeffs eta_product_coeffs(long level, int prec, const EtaTable &table)
{
    const EtaProduct *p = table.find(level);
    if (p == nullptr) {
        raise(Errc::NoEtaProduct, "no eta product registered for level " + std::to_string(level));
    }
    return eta_product_coeffs(*p, level, prec);
}

NewformCoeffs hecke_expand(const std::map<long, long> &ap, long level, int prec)
{
    NewformCoeffs f;
    f.level = level;
    f.provenance = Provenance::HeckeFromPrimes;
    f.a.assign(static_cast<std::size_t>(std::max(prec, 1)), 0);
    if (prec > 1) {
        f.a[1] = 1;
    }
    const auto spf = smallest_prime_factors(prec);
    for (int n = 2; n < prec; ++n) {
        const int p = spf[static_cast<std::size_t>(n)];
        int m = n;
        int pk = 1;
        int k = 0;
        while (m % p == 0) {
            m /= p;
            pk *= p;
            ++k;
        }
        if (m > 1) {
            f.a[static_cast<std::size_t>(n)] = f.a[static_cast<std::size_t>(pk)] * f.a[static_cast<std::size_t>(m)];
            continue;
        }
        // n = p^k.
        const auto it = ap.find(p);
        if (it == ap.end()) {
            raise(Errc::InsufficientPrimeData, "a_p missing for p = " + std::to_string(p));
        }
        if (k == 1) {
            f.a[static_cast<std::size_t>(n)] = it->second;
        } else if (level % p == 0) {
            f.a[static_cast<std::size_t>(n)] = it->second * f.a[static_cast<std::size_t>(n / p)];
        } else {
            f.a[static_cast<std::size_t>(n)] =
                it->second * f.a[static_cast<std::size_t>(n / p)] - p * f.a[static_cast<std::size_t>(n / p / p)];
        }
    }
    return f;
}

NewformCoeffs parse_coeffs(std::string_view text, long level)
{
    NewformCoeffs f;
    f.level = level;
    f.provenance = Provenance::File;
    std::istringstream is{std::string(text)};
    std::string raw;
    int lineno = 0;
    while (std::getline(is, raw)) {
        ++lineno;
        const std::string line = trim(raw.substr(0, raw.find('#')));
        if (line.empty()) {
            continue;
        }
        long n = 0, an = 0;
        if (!two_fields(line, n, an)) {
            raise(Errc::ParseError, "line " + std::to_string(lineno) + ": expected 'n a_n', got '" + line + "'");
        }
        if (n != f.size()) {
            raise(Errc::ParseError, "line " + std::to_string(lineno) + ": expected index " + std::to_string(f.size()) +
                                        ", got " + std::to_string(n));
        }
        f.a.push_back(an);
    }
    if (f.size() < 2) {
        raise(Errc::ParseError, "coefficient file contains no coefficients");
    }
    validate_eigenform(f);
    return f;
}

NewformCoeffs load_coeffs(const std::string &path, long level)
{
    std::ifstream in(path);
    if (!in) {
        raise(Errc::ParseError, "cannot open coefficient file '" + path + "'");
    }
    std::stringstream ss;
    ss << in.rdbuf();
    return parse_coeffs(ss.str(), level);
}

QSeries lambda_series(const NewformCoeffs &f, int prec)
{
    std::vector<Rational> c;
    for (int n = 1; n < prec; ++n) {
        c.push_back(Rational(f[n], n));
    }
    for (auto &x : c) {
        x.canonicalize();
    }
    return QSeries(1, std::move(c), prec);
}

QSeries newform_series(const NewformCoeffs &f, int prec)
{
    std::vector<Rational> c;
    for (int n = 1; n < prec; ++n) {
        c.emplace_back(f[n]);
    }
    return QSeries(1, std::move(c), prec);
}

HondaReport honda_group_law(const NewformCoeffs &f, int prec)
{
    if (prec < 2) {
        raise(Errc::InvalidArgument, "honda_group_law needs prec >= 2");
    }
    const QSeries lam = lambda_series(f, prec);
    const QSeries inv = reverse(lam);
    HondaReport rep;
    rep.law = compose(inv, GroupLaw::in_t1(lam, prec) + GroupLaw::in_t2(lam, prec));
    for (int d = 0; d < prec && rep.integral; ++d) {
        for (int i = 0; i <= d; ++i) {
            const Rational &c = rep.law.coeff(i, d - i);
            if (!is_integral(c)) {
                rep.integral = false;
                rep.offending = std::make_pair(i, d - i);
                rep.offending_value = c;
                break;
            }
        }
    }
    return rep;
}

ParametrizationSeries modular_xy(const NewformCoeffs &f, const CurveModel &c, int prec)
{
    if (prec < 5) {
        raise(Errc::InvalidArgument, "modular_xy needs prec >= 5");
    }
    // Index i stands for q^(i-2) in X and q^(i-3) in Y; unknowns run to i = prec + 2.
    const int top = prec + 2;
    if (f.size() <= top + 1) {
        raise(Errc::InsufficientPrimeData, "modular_xy at prec " + std::to_string(prec) + " needs a_n for n <= " +
                                               std::to_string(top + 1));
    }
    auto F = [&](int k) { return Rational(f[k + 1]); }; // f = q * sum F[k] q^k
    const auto len = static_cast<std::size_t>(top + 1);
    std::vector<Rational> x(len, 0), y(len, 0);
    std::vector<Rational> S(len, 0); // S[m] = [q^(m-4)] X^2
    x[0] = 1;
    y[0] = -1;
    S[0] = 1;

    for (int n = 1; n <= top; ++n) {
        const auto un = static_cast<std::size_t>(n);
        Rational r1 = 0;
        for (int j = 0; j < n; ++j) {
            r1 += y[static_cast<std::size_t>(j)] * F(n - j);
        }
        r1 *= 2;

        Rational partial = 0; // part of S[n] not involving x[n]
        for (int i = 1; i < n; ++i) {
            partial += x[static_cast<std::size_t>(i)] * x[un - static_cast<std::size_t>(i)];
        }
        Rational r2 = partial;
        for (int k = 1; k <= n; ++k) {
            r2 += F(k) * S[un - static_cast<std::size_t>(k)];
        }
        r2 *= 3;
        if (n >= 4) {
            r2 += c.A * F(n - 4);
        }

        // (n-2) x - 2 y = r1,  (n-3) y - 6 x = r2.
        if (n == 6) {
            if (r2 != -Rational(3, 2) * r1) {
                raise(Errc::NotParametrization, "the two differential equations disagree at q^4");
            }
            Rational known = 0; // [q^0] (Y^2 - X^3 - A X - B) with x[6] = y[6] = 0
            for (int i = 1; i < 6; ++i) {
                known += y[static_cast<std::size_t>(i)] * y[static_cast<std::size_t>(6 - i)];
            }
            for (int i = 0; i <= 6; ++i) {
                for (int j = 0; i + j <= 6; ++j) {
                    const int k = 6 - i - j;
                    if (i == 6 || j == 6 || k == 6) {
                        continue;
                    }
                    known -= x[static_cast<std::size_t>(i)] * x[static_cast<std::size_t>(j)] * x[static_cast<std::size_t>(k)];
                }
            }
            known -= c.A * x[2] + c.B;
            x[un] = (r1 + known) / 7;
        } else {
            x[un] = ((n - 3) * r1 + 2 * r2) / ((n - 6) * (n + 1));
        }
        y[un] = ((n - 2) * x[un] - r1) / 2;
        if ((n - 3) * y[un] - 6 * x[un] != r2) {
            raise(Errc::NotParametrization, "recursion inconsistent at q^" + std::to_string(n - 3));
        }
        S[un] = partial + 2 * x[0] * x[un];
    }

    ParametrizationSeries ps;
    ps.X = QSeries(-2, std::vector<Rational>(x.begin(), x.end() - 1), prec, Var::q);
    ps.Y = QSeries(-3, std::move(y), prec, Var::q);

    const QSeries residual = ps.Y * ps.Y - (ps.X * ps.X * ps.X + ps.X.scaled(c.A) + QSeries::constant(c.B, prec, Var::q));
    if (!residual.is_zero()) {
        raise(Errc::NotParametrization, "series do not satisfy the curve equation at q^" +
                                            std::to_string(residual.valuation()));
    }
    if (c.has_long_model) {
        const Rational a1(c.e[0]), a3(c.e[2]);
        const QSeries xl = ps.X - QSeries::constant(c.b2 / 12, prec, Var::q);
        const QSeries yl = ps.Y - (xl.scaled(a1) + QSeries::constant(a3, prec, Var::q)).scaled(Rational(1, 2));
        for (const QSeries *s : {&xl, &yl}) {
            for (int n = s->valuation(); n < s->precision(); ++n) {
                if (!is_integral(s->coeff(n))) {
                    raise(Errc::NotParametrization, "coefficient of q^" + std::to_string(n) + " in the " +
                                                        (s == &xl ? std::string("x") : std::string("y")) +
                                                        "-series of the long model is " + to_string(s->coeff(n)) +
                                                        ", not an integer");
                }
            }
        }
    }
    ps.lambda = lambda_series(f, prec);
    ps.Phi = phi_series(ps);
    return ps;
}

QSeries phi_series(const ParametrizationSeries &ps)
{
    return (-(ps.X / ps.Y)).truncated(ps.X.precision()).with_variable(Var::t);
}

} // namespace logalg
