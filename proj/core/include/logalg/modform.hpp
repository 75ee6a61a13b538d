#pragma once

#include "logalg/curve.hpp"

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace logalg {

enum class Provenance { EtaProduct, HeckeFromPrimes, File };

std::string_view provenance_name(Provenance p) noexcept;

/// Fourier coefficients a_1, a_2, ... of a normalized weight-2 newform.
/// a_n is known for 1 <= n < size(); index 0 holds 0.
struct NewformCoeffs {
    long level = 0;
    std::vector<long> a{0};
    Provenance provenance = Provenance::File;

    int size() const noexcept { return static_cast<int>(a.size()); }
    long operator[](int n) const;
};

/// Checks a_1 = 1, multiplicativity on coprime indices, and the prime-power
/// recursions (the latter only when the level is known). Throws InvalidEigenform.
void validate_eigenform(const NewformCoeffs &f);

/// prod_d eta(d tau)^(r_d), written as q^(sum d r_d / 24) prod_d prod_m (1 - q^(d m))^(r_d).
struct EtaProduct {
    std::vector<std::pair<int, int>> factors; // (d, r_d)
};

/// Level -> eta product for weight-2 newforms. Ships with the levels whose
/// newform is a single eta product; more can be added from config text.
class EtaTable {
public:
    static const EtaTable &builtin();

    void add(long level, EtaProduct p);
    const EtaProduct *find(long level) const;
    std::vector<long> levels() const;

private:
    std::map<long, EtaProduct> table_;
};

/// Parses lines "d r_d" ('#' starts a comment). Throws ParseError.
EtaProduct parse_eta_config(std::string_view text);

/// a_n for n < prec from the eta product registered for level N. Throws NoEtaProduct.
NewformCoeffs eta_product_coeffs(long level, int prec, const EtaTable &table = EtaTable::builtin());

/// Coefficients of an arbitrary eta product with total q-shift 1 (any level).
NewformCoeffs eta_product_coeffs(const EtaProduct &p, long level, int prec);

/// a_n for n < prec from a_p at primes via multiplicativity and the Hecke
/// recursions; primes dividing the level use a_(p^k) = a_p^k.
/// Throws InsufficientPrimeData when a prime below prec is missing.
NewformCoeffs hecke_expand(const std::map<long, long> &ap, long level, int prec);

/// Lines "n a_n", ascending n from 1 without gaps, '#' comments allowed.
/// Throws ParseError (with line number) or InvalidEigenform.
NewformCoeffs parse_coeffs(std::string_view text, long level = 0);
NewformCoeffs load_coeffs(const std::string &path, long level = 0);

/// sum_{n<prec} (a_n/n) t^n.
QSeries lambda_series(const NewformCoeffs &f, int prec);

/// sum_{n<prec} a_n t^n.
QSeries newform_series(const NewformCoeffs &f, int prec);

struct HondaReport {
    GroupLaw law;
    bool integral = true;
    // First (i, j) in order of total degree whose coefficient is not an integer.
    std::optional<std::pair<int, int>> offending;
    Rational offending_value;
};

/// L(t1, t2) = lambda^-1(lambda(t1) + lambda(t2)) to total degree below prec,
/// with an integrality scan of every coefficient.
HondaReport honda_group_law(const NewformCoeffs &f, int prec);

struct ParametrizationSeries {
    QSeries X;      // q^-2 + ...
    QSeries Y;      // -q^-3 + ...
    QSeries Phi;    // -X/Y = t + ...
    QSeries lambda; // sum (a_n/n) t^n
};

/// Solves q dX/dq = 2 Y f together with q dY/dq = (3X^2 + A) f degree by
/// degree. The linear system for the coefficient pair at q^(n-2), q^(n-3) has
/// determinant (n-6)(n+1); at n = 6 the curve equation fixes the pair and the
/// two differential equations must agree. X, Y, Phi are known below q^prec.
///
/// When the curve has a long model the result is also required to come from
/// an integral parametrization: X - b2/12 and Y - (a1 (X - b2/12) + a3)/2
/// must have integer coefficients. Any failure throws NotParametrization.
ParametrizationSeries modular_xy(const NewformCoeffs &f, const CurveModel &c, int prec);

/// -X/Y truncated to the precision of X.
QSeries phi_series(const ParametrizationSeries &ps);

} // namespace logalg
