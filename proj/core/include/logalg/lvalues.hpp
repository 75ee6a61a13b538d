#pragma once

#include "logalg/curve.hpp"
#include "logalg/cyclotomic.hpp"
#include "logalg/modform.hpp"
#include "logalg/point.hpp"

#include <optional>
#include <string>

namespace logalg {

struct SeriesValue {
    Complex value;
    Real tail = 0;          // geometric extrapolation of the omitted terms
    Real ratio = 0;         // estimated |c_n z^n| decay ratio near the end
    bool heuristic = false; // ratio close to 1, z near the estimated radius
};

/// sum c_n z^n over the known coefficients, in ascending n.
/// Throws DivergenceSuspected when the terms grow, or when `certified` is
/// requested and the estimate is only heuristic. z = 0 returns the constant
/// term (PoleAt for a Laurent series).
SeriesValue eval_series(const QSeries &s, Complex z, bool certified = false);

struct NumericValue {
    Complex value;
    Real tail = 0;
};

/// (1 + eps) sum_{n <= terms} (a_n/n) exp(-2 pi n/sqrt N).
NumericValue L1_rapid(const NewformCoeffs &f, long N, int eps, int terms);

struct TwistedValue {
    Complex value;
    Real tail = 0;
    Complex S;         // sum chi(n) a_n/n e^(-2 pi n/(m sqrt N))
    Complex S_conj;    // same with conj(chi)
    CycloElem C;       // eps chi(-N) g(chi)/g(conj chi), exact
    std::optional<Real> imag_residual; // |Im L| for real characters
};

/// L(f, chi, 1) = S_chi + C S_conj(chi) for primitive chi of modulus coprime to N.
/// Throws BadTwist or NotPrimitive.
TwistedValue L1_twisted(const NewformCoeffs &f, long N, const DirichletCharacter &chi, int eps, int terms);

/// Z Omega + Z Omega'. With one real component Re(Omega') = Omega/2, with two
/// Omega' is purely imaginary; in both cases Im(Omega') < 0.
struct PeriodLattice {
    Real Omega = 0;
    Complex OmegaPrime;
    int components = 1;

    /// Real coordinates (a, b) with z = a Omega + b Omega'.
    std::pair<Real, Real> coordinates(Complex z) const;
};

/// AGM periods of y^2 = x^3 + A x + B, the lattice of wp with g2 = -4A, g3 = -4B.
PeriodLattice periods(Real A, Real B);
PeriodLattice periods(const CurveModel &c);

/// Real roots of x^3 + A x + B in decreasing order (one or three of them).
std::vector<Real> real_roots(Real A, Real B);

struct WpValue {
    Complex wp;
    Complex dwp;
};

/// wp(z) and wp'(z) for the lattice L of (g2, g3): reduce z to the cell of 0,
/// halve into the disc where the Laurent series converges fast, then double
/// back with the duplication formula. Throws PoleAt near lattice points.
WpValue wp_numeric(Complex z, const PeriodLattice &L, Real g2, Real g3, Real tol = 1e-12L);

/// Best continued-fraction approximation with denominator <= bound and error
/// <= tol (relative to max(1, |x|)).
std::optional<Rational> rational_reconstruct(Real x, long denom_bound, Real tol);

/// Rational point close to p, or nullopt. A reconstruction that is off the
/// curve throws SpuriousMatch.
std::optional<AffinePoint<Rational>> recognize_point(const AffinePoint<Complex> &p, const ShortCurve<Rational> &E,
                                                     long denom_bound, Real tol);

struct LatticeMultiple {
    long k = 0;          // v = k * step * generator
    Rational step;
    Rational multiple;   // k * step
    std::string generator;
    Real residual = 0;
    Real tol = 0;

    /// e.g. "Omega/5", "10*Omega", "(Omega - 2*Omega')/2".
    std::string expression() const;
};

/// Locates v on the discrete line step*generator*Z. Throws NotOnLine when the
/// residual reaches tol = rel_tol*|step*generator|, InvalidArgument when the
/// step denominator exceeds denom_bound.
LatticeMultiple lattice_multiple(Complex v, Complex generator, std::string generator_name, const Rational &step,
                                 long denom_bound = 60, Real rel_tol = 1e-6L);

std::string format_real(Real x, int digits = 10);
std::string format_complex(Complex z, int digits = 10);
std::string format_sci(Real x, int digits = 2);

} // namespace logalg
