#include "logalg/identities.hpp"

#include "logalg/point.hpp"
#include "logalg/series_io.hpp"

#include <chrono>
#include <random>
#include <sstream>

namespace logalg {

int BetaPoly::degree() const noexcept
{
    for (int k = static_cast<int>(m.size()) - 1; k >= 0; --k) {
        if (m[static_cast<std::size_t>(k)] != 0) {
            return k;
        }
    }
    return -1;
}

QPoly BetaPoly::as_poly() const
{
    std::vector<Rational> c;
    for (long x : m) {
        c.emplace_back(x);
    }
    return QPoly(c);
}

std::string BetaPoly::to_string() const { return as_poly().to_string(); }

BetaPoly parse_beta(std::string_view text)
{
    std::string body(text);
    long shift = 0;
    if (const auto at = body.find('@'); at != std::string::npos) {
        try {
            std::size_t used = 0;
            shift = std::stol(body.substr(at + 1), &used);
            if (used != body.size() - at - 1 || shift < 0) {
                throw std::invalid_argument("shift");
            }
        } catch (const std::exception &) {
            raise(Errc::ParseError, "bad shift in beta '" + std::string(text) + "'");
        }
        body.resize(at);
    }
    BetaPoly b;
    b.m.assign(static_cast<std::size_t>(shift), 0);
    std::istringstream is(body);
    std::string item;
    while (std::getline(is, item, ',')) {
        try {
            std::size_t used = 0;
            const long v = std::stol(item, &used);
            if (item.find_first_not_of(" \t", used) != std::string::npos) {
                throw std::invalid_argument("trailing");
            }
            b.m.push_back(v);
        } catch (const std::exception &) {
            raise(Errc::ParseError, "bad coefficient '" + item + "' in beta '" + std::string(text) + "'");
        }
    }
    if (b.is_zero()) {
        raise(Errc::ParseError, "beta '" + std::string(text) + "' is zero");
    }
    return b;
}

std::string_view mode_name(VerifyMode m) noexcept { return m == VerifyMode::Exact ? "exact" : "specialize"; }

bool IdentityReport::holds() const
{
    for (const auto &c : checks) {
        if (!c.holds) {
            return false;
        }
    }
    return !checks.empty();
}

std::optional<int> IdentityReport::first_mismatch() const
{
    std::optional<int> best;
    for (const auto &c : checks) {
        if (c.first_mismatch && (!best || *c.first_mismatch < *best)) {
            best = c.first_mismatch;
        }
    }
    return best;
}

std::string IdentityReport::summary() const
{
    std::ostringstream os;
    os << identity << " prec=" << prec << " mode=" << mode_name(mode) << ": ";
    if (holds()) {
        os << "holds";
        return os.str();
    }
    for (const auto &c : checks) {
        if (c.holds) {
            continue;
        }
        os << c.name;
        if (c.first_mismatch) {
            os << " fails at t^" << *c.first_mismatch << " (lhs " << c.lhs_value << ", rhs " << c.rhs_value << ")";
        } else {
            os << " fails: only known below t^" << c.compared_below;
        }
        break;
    }
    return os.str();
}

namespace {

using Clock = std::chrono::steady_clock;

template <CoefficientRing R>
IdentityCheck compare(std::string name, const TruncatedSeries<R> &lhs, const TruncatedSeries<R> &rhs, int upto)
{
    IdentityCheck c;
    c.name = std::move(name);
    c.compared_below = std::min({lhs.precision(), rhs.precision(), upto});
    if (const auto n = first_mismatch(lhs, rhs, upto)) {
        c.holds = false;
        c.first_mismatch = n;
        c.lhs_value = RingTraits<R>::to_string(lhs.coeff(*n));
        c.rhs_value = RingTraits<R>::to_string(rhs.coeff(*n));
    } else if (c.compared_below < upto) {
        c.holds = false;
    }
    return c;
}

template <CoefficientRing R>
R rpow(const R &x, int n)
{
    R r = RingTraits<R>::one();
    for (int i = 0; i < n; ++i) {
        r *= x;
    }
    return r;
}

template <CoefficientRing R>
R lift_to(const Rational &x)
{
    if constexpr (std::is_same_v<R, Rational>) {
        return x;
    } else {
        return R(x);
    }
}

template <CoefficientRing R>
TruncatedSeries<R> lift_series(const QSeries &s)
{
    return s.map([](const Rational &x) { return lift_to<R>(x); });
}

// beta(v) for v in R, Horner.
template <CoefficientRing R>
R beta_at(const BetaPoly &beta, const R &v)
{
    R acc = RingTraits<R>::zero();
    for (int k = beta.degree(); k >= 0; --k) {
        acc = acc * v + lift_to<R>(Rational(beta.m[static_cast<std::size_t>(k)]));
    }
    return acc;
}

// sum_{n<prec} a_n beta(u^n)/n t^n with u a ring element.
template <CoefficientRing R>
TruncatedSeries<R> harmonic(const BetaPoly &beta, const NewformCoeffs &f, const R &u, int prec)
{
    std::vector<R> c;
    R un = RingTraits<R>::one();
    for (int n = 1; n < prec; ++n) {
        un *= u;
        Rational an(f[n], n);
        an.canonicalize();
        c.push_back(R(lift_to<R>(an) * beta_at(beta, un)));
    }
    return TruncatedSeries<R>(1, std::move(c), prec);
}

std::vector<int> nonzero_terms(const BetaPoly &beta, const std::vector<int> &order)
{
    std::vector<int> ks;
    for (int k = 0; k <= beta.degree(); ++k) {
        if (beta.m[static_cast<std::size_t>(k)] != 0) {
            ks.push_back(k);
        }
    }
    if (order.empty()) {
        return ks;
    }
    if (order.size() != ks.size()) {
        raise(Errc::InvalidArgument, "fold order must permute the " + std::to_string(ks.size()) + " nonzero terms");
    }
    std::vector<int> out;
    std::vector<bool> seen(ks.size(), false);
    for (int i : order) {
        if (i < 0 || i >= static_cast<int>(ks.size()) || seen[static_cast<std::size_t>(i)]) {
            raise(Errc::InvalidArgument, "fold order is not a permutation");
        }
        seen[static_cast<std::size_t>(i)] = true;
        out.push_back(ks[static_cast<std::size_t>(i)]);
    }
    return out;
}

template <CoefficientRing R>
std::pair<TruncatedSeries<R>, TruncatedSeries<R>> main_a_sides(const BetaPoly &beta, const NewformCoeffs &f,
                                                               const LogExp &le, const GroupLaw &F, const QSeries &phi,
                                                               const R &u, int prec, const std::vector<int> &order)
{
    using S = TruncatedSeries<R>;
    const S lhs = compose(lift_series<R>(le.exp.truncated(prec)), harmonic(beta, f, u, prec));

    auto lift = [](const Rational &x) { return lift_to<R>(x); };
    const S phiR = lift_series<R>(phi.truncated(prec));
    std::optional<S> acc;
    for (int k : nonzero_terms(beta, order)) {
        const long mk = beta.m[static_cast<std::size_t>(k)];
        const S inner = scale_variable(phiR, rpow(u, k));
        const S term = compose(lift_series<R>(mult_by_m(le, mk, prec)), inner);
        acc = acc ? F.evaluate(*acc, term, lift) : term;
    }
    return {lhs, acc->truncated(prec)};
}

template <CoefficientRing K>
std::pair<TruncatedSeries<K>, TruncatedSeries<K>> main_b_generic(const BetaPoly &beta, const NewformCoeffs &f,
                                                                 const CurveModel &c, const ParametrizationSeries &ps,
                                                                 const K &u, int prec, const std::vector<int> &order)
{
    using S = TruncatedSeries<K>;
    const int P = prec + 3;
    const S wp = lift_series<K>(wp_series(c.g2, c.g3, P));
    const S lhs = compose(wp, harmonic(beta, f, u, P));

    constexpr int huge = 1 << 20;
    const ShortCurve<S> E{S::constant(lift_to<K>(c.A), huge), S::constant(lift_to<K>(c.B), huge), 0};
    const S X = lift_series<K>(ps.X).with_variable(Var::t);
    const S Y = lift_series<K>(ps.Y).with_variable(Var::t);
    AffinePoint<S> acc = AffinePoint<S>::at_infinity();
    for (int k : nonzero_terms(beta, order)) {
        const K uk = rpow(u, k);
        const auto pk = AffinePoint<S>::affine(scale_variable(X, uk), scale_variable(Y, uk));
        acc = point_add(acc, point_mul(pk, beta.m[static_cast<std::size_t>(k)], E), E);
    }
    if (acc.infinity) {
        raise(Errc::DegenerateSum, "the point sum is the origin of E identically");
    }
    return {lhs, acc.x};
}

// Seeded specialization points avoiding 0, +-1 and the roots of beta.
std::vector<Rational> sample_points(const BetaPoly &beta, int count, unsigned long seed)
{
    std::mt19937_64 gen(seed);
    std::uniform_int_distribution<long> num(-9, 9), den(1, 7);
    std::vector<Rational> out;
    const QPoly b = beta.as_poly();
    for (int attempts = 0; static_cast<int>(out.size()) < count && attempts < 1000; ++attempts) {
        Rational r(num(gen), den(gen));
        r.canonicalize();
        if (r == 0 || abs(r) == 1 || b(r) == 0) {
            continue;
        }
        if (std::find(out.begin(), out.end(), r) == out.end()) {
            out.push_back(r);
        }
    }
    return out;
}

void require_coefficients(const NewformCoeffs &f, int prec)
{
    if (f.size() < coefficients_needed(prec)) {
        raise(Errc::InsufficientPrimeData, "verification at prec " + std::to_string(prec) + " needs a_n for n < " +
                                               std::to_string(coefficients_needed(prec)));
    }
}

void require_side(const ModularSide &side, int prec)
{
    if (side.prec < prec) {
        raise(Errc::InvalidArgument, "modular side computed to prec " + std::to_string(side.prec) + ", need " +
                                         std::to_string(prec));
    }
}

double since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

} // namespace

PSeries twisted_harmonic(const BetaPoly &beta, const NewformCoeffs &f, int prec)
{
    const QPoly b = beta.as_poly();
    std::vector<QPoly> c;
    for (int n = 1; n < prec; ++n) {
        c.push_back(b.inflate(n) * Rational(f[n], n));
    }
    return PSeries(1, std::move(c), prec);
}

int coefficients_needed(int prec) { return prec + 4; }

ModularSide modular_side(const NewformCoeffs &f, const CurveModel &c, int prec)
{
    return {modular_xy(f, c, prec), prec};
}

IdentityReport verify_logalg1a(const NewformCoeffs &f, const CurveModel &c, const ModularSide &side, int prec)
{
    const auto t0 = Clock::now();
    if (prec < 2) {
        raise(Errc::InvalidArgument, "verify_logalg1a needs prec >= 2");
    }
    require_side(side, prec);
    IdentityReport rep{"logalg1a", prec, VerifyMode::Exact, {}, 0};
    const LogExp le = formal_log_exp(c, prec);
    const QSeries lhs = compose(le.exp, lambda_series(f, prec));
    rep.checks.push_back(compare("exp(lambda) = Phi", lhs, side.ps.Phi, prec));
    rep.seconds = since(t0);
    return rep;
}

IdentityReport verify_logalg1a(const NewformCoeffs &f, const CurveModel &c, int prec)
{
    require_coefficients(f, std::max(prec, 5));
    return verify_logalg1a(f, c, modular_side(f, c, std::max(prec, 5)), prec);
}

IdentityReport verify_wp_identities(const NewformCoeffs &f, const CurveModel &c, const ModularSide &side, int prec)
{
    const auto t0 = Clock::now();
    if (prec < 3) {
        raise(Errc::InvalidArgument, "verify_wp_identities needs prec >= 3");
    }
    require_side(side, prec);
    IdentityReport rep{"wp", prec, VerifyMode::Exact, {}, 0};
    const int P = prec + 4;
    const QSeries wp = wp_series(c.g2, c.g3, P);
    const QSeries lam = lambda_series(f, P);
    const QSeries X = compose(wp, lam);
    const QSeries Y = compose(derive(wp).scaled(Rational(1, 2)), lam);
    rep.checks.push_back(compare("wp(lambda) = X", X, side.ps.X, prec));
    rep.checks.push_back(compare("wp'(lambda)/2 = Y", Y, side.ps.Y, prec));
    rep.seconds = since(t0);
    return rep;
}

IdentityReport verify_wp_identities(const NewformCoeffs &f, const CurveModel &c, int prec)
{
    require_coefficients(f, std::max(prec, 5));
    return verify_wp_identities(f, c, modular_side(f, c, std::max(prec, 5)), prec);
}

IdentityReport verify_main_a(const BetaPoly &beta, const NewformCoeffs &f, const CurveModel &c,
                             const ModularSide &side, int prec, const MainOptions &opt)
{
    const auto t0 = Clock::now();
    if (prec < 2) {
        raise(Errc::InvalidArgument, "verify_main_a needs prec >= 2");
    }
    if (beta.is_zero()) {
        raise(Errc::InvalidArgument, "beta must be nonzero");
    }
    require_side(side, prec);
    IdentityReport rep{"main-a", prec, opt.mode, {}, 0};
    const LogExp le = formal_log_exp(c, prec);
    const GroupLaw F = group_law(le, prec);
    if (opt.mode == VerifyMode::Exact) {
        const auto [lhs, rhs] = main_a_sides<QPoly>(beta, f, le, F, side.ps.Phi, QPoly::variable(), prec, opt.fold_order);
        rep.checks.push_back(compare("over Q[u]", lhs, rhs, prec));
    } else {
        for (const Rational &u : sample_points(beta, opt.samples, opt.seed)) {
            const auto [lhs, rhs] = main_a_sides<Rational>(beta, f, le, F, side.ps.Phi, u, prec, opt.fold_order);
            rep.checks.push_back(compare("u = " + to_string(u), lhs, rhs, prec));
        }
    }
    rep.seconds = since(t0);
    return rep;
}

IdentityReport verify_main_a(const BetaPoly &beta, const NewformCoeffs &f, const CurveModel &c, int prec,
                             const MainOptions &opt)
{
    require_coefficients(f, std::max(prec, 5));
    return verify_main_a(beta, f, c, modular_side(f, c, std::max(prec, 5)), prec, opt);
}

MainBSides main_b_sides(const BetaPoly &beta, const NewformCoeffs &f, const CurveModel &c, const ModularSide &side,
                        int prec)
{
    const QFrac u(QPoly::variable());
    auto [lhs, rhs] = main_b_generic<QFrac>(beta, f, c, side.ps, u, prec, {});
    return {lhs, rhs};
}

IdentityReport verify_main_b(const BetaPoly &beta, const NewformCoeffs &f, const CurveModel &c,
                             const ModularSide &side, int prec, const MainOptions &opt)
{
    const auto t0 = Clock::now();
    if (prec < 4) {
        raise(Errc::InvalidArgument, "verify_main_b needs prec >= 4");
    }
    if (beta.is_zero()) {
        raise(Errc::InvalidArgument, "beta must be nonzero");
    }
    require_side(side, prec);
    IdentityReport rep{"main-b", prec, opt.mode, {}, 0};
    if (opt.mode == VerifyMode::Exact) {
        const QFrac u(QPoly::variable());
        const auto [lhs, rhs] = main_b_generic<QFrac>(beta, f, c, side.ps, u, prec, opt.fold_order);
        rep.checks.push_back(compare("over Q(u)", lhs, rhs, prec));
    } else {
        for (const Rational &u : sample_points(beta, opt.samples, opt.seed)) {
            const auto [lhs, rhs] = main_b_generic<Rational>(beta, f, c, side.ps, u, prec, opt.fold_order);
            rep.checks.push_back(compare("u = " + to_string(u), lhs, rhs, prec));
        }
    }
    rep.seconds = since(t0);
    return rep;
}

IdentityReport verify_main_b(const BetaPoly &beta, const NewformCoeffs &f, const CurveModel &c, int prec,
                             const MainOptions &opt)
{
    // The chord-tangent sum loses a few orders of relative precision when
    // leading terms cancel; retry with a longer modular side if needed.
    IdentityReport rep;
    for (int extra = 4; extra <= 32; extra *= 2) {
        const int sp = prec + extra;
        require_coefficients(f, sp);
        rep = verify_main_b(beta, f, c, modular_side(f, c, sp), prec, opt);
        bool short_only = false;
        for (const auto &ch : rep.checks) {
            short_only = short_only || (!ch.holds && !ch.first_mismatch);
        }
        if (!short_only) {
            break;
        }
    }
    return rep;
}

} // namespace logalg
