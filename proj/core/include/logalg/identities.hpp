#pragma once

#include "logalg/curve.hpp"
#include "logalg/modform.hpp"
#include "logalg/poly.hpp"
#include "logalg/ratfunc.hpp"

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace logalg {

/// beta = sum_k m_k u^k with integer m_k; m[k] multiplies u^k.
struct BetaPoly {
    std::vector<long> m;

    int degree() const noexcept;
    bool is_zero() const noexcept { return degree() < 0; }
    QPoly as_poly() const;
    std::string to_string() const;
};

/// "c0,c1,...@s" means c0 u^s + c1 u^(s+1) + ...; the "@s" suffix is optional (s = 0).
BetaPoly parse_beta(std::string_view text);

using PSeries = TruncatedSeries<QPoly>;
using FSeries = TruncatedSeries<QFrac>;

/// sum_{n<prec} a_n beta(u^n)/n t^n over Q[u].
PSeries twisted_harmonic(const BetaPoly &beta, const NewformCoeffs &f, int prec);

enum class VerifyMode { Exact, Specialize };

std::string_view mode_name(VerifyMode m) noexcept;

/// One compared pair of series.
struct IdentityCheck {
    std::string name;
    bool holds = true;
    int compared_below = 0;           // exponents below this were compared
    std::optional<int> first_mismatch; // exponent of the first differing coefficient
    std::string lhs_value, rhs_value;  // the two coefficients at that exponent
};

struct IdentityReport {
    std::string identity;
    int prec = 0;
    VerifyMode mode = VerifyMode::Exact;
    std::vector<IdentityCheck> checks;
    double seconds = 0;

    bool holds() const;
    /// Earliest failing exponent over all checks.
    std::optional<int> first_mismatch() const;
    std::string summary() const;
};

/// The modular side of the identities: X, Y, Phi from the parametrization.
/// Kept separate from the coefficients so that the harmonic side can be
/// perturbed independently in mutation tests.
struct ModularSide {
    ParametrizationSeries ps;
    int prec = 0;
};

/// Number of coefficients a_n needed by the verifiers at this precision.
int coefficients_needed(int prec);

ModularSide modular_side(const NewformCoeffs &f, const CurveModel &c, int prec);

/// exp(lambda(t)) = Phi(t).
IdentityReport verify_logalg1a(const NewformCoeffs &f, const CurveModel &c, int prec);
IdentityReport verify_logalg1a(const NewformCoeffs &f, const CurveModel &c, const ModularSide &side, int prec);

/// wp(lambda(t)) = X(t) and wp'(lambda(t))/2 = Y(t).
IdentityReport verify_wp_identities(const NewformCoeffs &f, const CurveModel &c, int prec);
IdentityReport verify_wp_identities(const NewformCoeffs &f, const CurveModel &c, const ModularSide &side, int prec);

struct MainOptions {
    VerifyMode mode = VerifyMode::Exact;
    int samples = 5;              // specialization points
    unsigned long seed = 20240611; // for the specialization points
    std::vector<int> fold_order;  // permutation of the nonzero terms; empty = ascending k
};

/// exp(sum a_n beta(u^n)/n t^n) = sum over k (formal group) of [m_k](Phi(u^k t)), in Q[u][[t]].
IdentityReport verify_main_a(const BetaPoly &beta, const NewformCoeffs &f, const CurveModel &c, int prec,
                             const MainOptions &opt = {});
IdentityReport verify_main_a(const BetaPoly &beta, const NewformCoeffs &f, const CurveModel &c,
                             const ModularSide &side, int prec, const MainOptions &opt = {});

/// wp(sum a_n beta(u^n)/n t^n) = x(sum over k (curve group) of m_k P(u^k t)), in Q(u)((t)).
/// Throws DegenerateSum if the point sum is identically the origin.
IdentityReport verify_main_b(const BetaPoly &beta, const NewformCoeffs &f, const CurveModel &c, int prec,
                             const MainOptions &opt = {});
IdentityReport verify_main_b(const BetaPoly &beta, const NewformCoeffs &f, const CurveModel &c,
                             const ModularSide &side, int prec, const MainOptions &opt = {});

/// Left- and right-hand sides of Main(b) over Q(u), exposed for inspection.
struct MainBSides {
    FSeries lhs;
    FSeries rhs;
};
MainBSides main_b_sides(const BetaPoly &beta, const NewformCoeffs &f, const CurveModel &c, const ModularSide &side,
                        int prec);

} // namespace logalg
