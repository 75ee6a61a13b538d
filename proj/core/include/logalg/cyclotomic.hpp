#pragma once

#include "logalg/poly.hpp"
#include "logalg/ring.hpp"

#include <string>
#include <string_view>
#include <vector>

namespace logalg {

/// Phi_n(z) over Q.
const QPoly &cyclotomic_polynomial(int n);

/// Element of Q(zeta_n), stored as a polynomial in zeta_n of degree < phi(n).
class CycloElem {
public:
    CycloElem() = default;
    CycloElem(int n, const Rational &c);
    CycloElem(int n, const QPoly &p);

    /// zeta_n^k for any integer k.
    static CycloElem zeta(int n, long k);
    /// sqrt(-3) = zeta_3 - zeta_3^2, requires 3 | n.
    static CycloElem sqrt_minus3(int n);

    int order() const noexcept { return n_; }
    const QPoly &poly() const noexcept { return p_; }

    bool is_rational() const { return p_.is_constant(); }
    Rational rational_value() const; // throws InvalidArgument unless rational

    /// Complex conjugation, zeta -> zeta^-1.
    CycloElem conj() const;
    Complex to_complex() const;
    std::string to_string() const;

    CycloElem &operator+=(const CycloElem &rhs);
    CycloElem &operator-=(const CycloElem &rhs);
    CycloElem &operator*=(const CycloElem &rhs);
    friend CycloElem operator+(CycloElem a, const CycloElem &b) { return a += b; }
    friend CycloElem operator-(CycloElem a, const CycloElem &b) { return a -= b; }
    friend CycloElem operator*(CycloElem a, const CycloElem &b) { return a *= b; }
    friend CycloElem operator*(CycloElem a, const Rational &c)
    {
        a.p_ *= c;
        return a;
    }
    friend bool operator==(const CycloElem &a, const CycloElem &b) { return a.n_ == b.n_ && a.p_ == b.p_; }

private:
    void check(const CycloElem &other) const;

    int n_ = 1;
    QPoly p_;
};

/// Dirichlet character of modulus m and order k with values in the k-th roots
/// of unity. chi(n) = rho_k^e(n) for units, 0 otherwise, rho_k = exp(2 pi i/k).
class DirichletCharacter {
public:
    /// Table of exponents indexed by n mod m; -1 marks non-units.
    /// Throws InvalidArgument unless chi(1) = 1 and chi is multiplicative.
    DirichletCharacter(int modulus, int order, std::vector<int> exponents, std::string name = {});

    static DirichletCharacter trivial();
    /// Kronecker symbol (D/.) for a fundamental discriminant D.
    static DirichletCharacter quadratic(int D);
    /// Order-k character mod the prime p sending the least primitive root to rho_k.
    static DirichletCharacter from_primitive_root(int p, int k);
    /// "trivial", "quad:D", "cubic:p" or "order:k:p". Throws ParseError.
    static DirichletCharacter parse(std::string_view spec);

    int modulus() const noexcept { return m_; }
    int order() const noexcept { return k_; }
    const std::string &name() const noexcept { return name_; }
    /// Q(zeta_M) with M = lcm(m, k) holds every value and the Gauss sum.
    int field_order() const noexcept;

    int exponent(long n) const;
    bool is_unit(long n) const { return exponent(n) >= 0; }
    Complex operator()(long n) const;
    CycloElem exact(long n) const;
    bool is_real() const noexcept { return k_ <= 2; }
    bool is_primitive() const;

    DirichletCharacter conj() const;

private:
    int m_;
    int k_;
    std::vector<int> e_;
    std::string name_;
};

struct GaussSum {
    CycloElem exact;
    Complex value;
};

/// g(chi) = sum_{j mod m} chi(j) zeta_m^j, with |g|^2 = m verified exactly.
/// Throws NotPrimitive for imprimitive characters.
GaussSum gauss_sum(const DirichletCharacter &chi);

} // namespace logalg
