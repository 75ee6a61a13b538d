#include "logalg/cyclotomic.hpp"

#include <map>
#include <mutex>
#include <numbers>
#include <numeric>

namespace logalg {

namespace {

long mod(long a, long m)
{
    const long r = a % m;
    return r < 0 ? r + m : r;
}

// Kronecker symbol (a/n) for n >= 1.
int kronecker(long a, long n)
{
    int result = 1;
    while (n % 2 == 0) {
        n /= 2;
        if (a % 2 == 0) {
            return 0;
        }
        const long r = mod(a, 8);
        if (r == 3 || r == 5) {
            result = -result;
        }
    }
    // Jacobi symbol for odd n.
    a = mod(a, n);
    while (a != 0) {
        while (a % 2 == 0) {
            a /= 2;
            const long r = n % 8;
            if (r == 3 || r == 5) {
                result = -result;
            }
        }
        std::swap(a, n);
        if (a % 4 == 3 && n % 4 == 3) {
            result = -result;
        }
        a %= n;
    }
    return n == 1 ? result : 0;
}

bool is_prime(int p)
{
    if (p < 2) {
        return false;
    }
    for (int d = 2; d * d <= p; ++d) {
        if (p % d == 0) {
            return false;
        }
    }
    return true;
}

int least_primitive_root(int p)
{
    for (int g = 2; g < p; ++g) {
        long x = 1;
        int ord = 0;
        do {
            x = x * g % p;
            ++ord;
        } while (x != 1);
        if (ord == p - 1) {
            return g;
        }
    }
    return 1; // p = 2
}

const QPoly &cyclotomic_locked(int n, std::map<int, QPoly> &cache)
{
    if (auto it = cache.find(n); it != cache.end()) {
        return it->second;
    }
    QPoly p = QPoly::monomial(Rational(1), n) - QPoly(1);
    for (int d = 1; d < n; ++d) {
        if (n % d == 0) {
            p = QPoly::exact_div(p, cyclotomic_locked(d, cache));
        }
    }
    return cache.emplace(n, p).first->second;
}

} // namespace

const QPoly &cyclotomic_polynomial(int n)
{
    if (n < 1) {
        raise(Errc::InvalidArgument, "cyclotomic polynomial needs n >= 1");
    }
    static std::mutex mu;
    static std::map<int, QPoly> cache;
    std::lock_guard lock(mu);
    return cyclotomic_locked(n, cache);
}

CycloElem::CycloElem(int n, const Rational &c) : n_(n), p_(c)
{
    if (n < 1) {
        raise(Errc::InvalidArgument, "Q(zeta_n) needs n >= 1");
    }
}

CycloElem::CycloElem(int n, const QPoly &p) : n_(n), p_(QPoly::divmod(p, cyclotomic_polynomial(n)).second)
{
}

CycloElem CycloElem::zeta(int n, long k) { return CycloElem(n, QPoly::monomial(Rational(1), static_cast<int>(mod(k, n)))); }

CycloElem CycloElem::sqrt_minus3(int n)
{
    if (n % 3 != 0) {
        raise(Errc::InvalidArgument, "sqrt(-3) is not in Q(zeta_" + std::to_string(n) + ")");
    }
    return zeta(n, n / 3) - zeta(n, 2 * n / 3);
}

Rational CycloElem::rational_value() const
{
    if (!is_rational()) {
        raise(Errc::InvalidArgument, to_string() + " is not rational");
    }
    return p_.coeff(0);
}

CycloElem CycloElem::conj() const
{
    QPoly q;
    for (int i = 0; i <= p_.degree(); ++i) {
        q += QPoly::monomial(p_.coeff(i), static_cast<int>(mod(-i, n_)));
    }
    return CycloElem(n_, q);
}

Complex CycloElem::to_complex() const
{
    const Real a = 2 * std::numbers::pi_v<Real> / n_;
    return p_(Complex(std::cos(a), std::sin(a)));
}

std::string CycloElem::to_string() const { return p_.to_string('z'); }

void CycloElem::check(const CycloElem &other) const
{
    if (n_ != other.n_) {
        raise(Errc::RingMismatch,
              "Q(zeta_" + std::to_string(n_) + ") and Q(zeta_" + std::to_string(other.n_) + ") elements mixed");
    }
}

CycloElem &CycloElem::operator+=(const CycloElem &rhs)
{
    check(rhs);
    p_ += rhs.p_;
    return *this;
}

CycloElem &CycloElem::operator-=(const CycloElem &rhs)
{
    check(rhs);
    p_ -= rhs.p_;
    return *this;
}

CycloElem &CycloElem::operator*=(const CycloElem &rhs)
{
    check(rhs);
    p_ = QPoly::divmod(p_ * rhs.p_, cyclotomic_polynomial(n_)).second;
    return *this;
}

DirichletCharacter::DirichletCharacter(int modulus, int order, std::vector<int> exponents, std::string name)
    : m_(modulus), k_(order), e_(std::move(exponents)), name_(std::move(name))
{
    if (m_ < 1 || k_ < 1 || static_cast<int>(e_.size()) != m_) {
        raise(Errc::InvalidArgument, "character table must have one entry per residue");
    }
    for (int n = 0; n < m_; ++n) {
        const bool unit = std::gcd(n, m_) == 1;
        if (unit != (e_[static_cast<std::size_t>(n)] >= 0) || e_[static_cast<std::size_t>(n)] >= k_) {
            raise(Errc::InvalidArgument, "character value at " + std::to_string(n) + " is inconsistent");
        }
    }
    if (e_[static_cast<std::size_t>(1 % m_)] != 0) {
        raise(Errc::InvalidArgument, "chi(1) must be 1");
    }
    for (int a = 0; a < m_; ++a) {
        for (int b = a; b < m_; ++b) {
            if (is_unit(a) && is_unit(b) && exponent(static_cast<long>(a) * b) != (exponent(a) + exponent(b)) % k_) {
                raise(Errc::InvalidArgument, "character is not multiplicative at " + std::to_string(a) + ", " +
                                                 std::to_string(b));
            }
        }
    }
    if (name_.empty()) {
        name_ = "mod " + std::to_string(m_) + " order " + std::to_string(k_);
    }
}

DirichletCharacter DirichletCharacter::trivial() { return DirichletCharacter(1, 1, {0}, "trivial"); }

DirichletCharacter DirichletCharacter::quadratic(int D)
{
    auto squarefree = [](long n) {
        n = std::abs(n);
        for (long d = 2; d * d <= n; ++d) {
            if (n % (d * d) == 0) {
                return false;
            }
        }
        return true;
    };
    const bool fundamental = (mod(D, 4) == 1 && D != 1 && squarefree(D)) ||
                             (D % 4 == 0 && (mod(D / 4, 4) == 2 || mod(D / 4, 4) == 3) && squarefree(D / 4));
    if (!fundamental) {
        raise(Errc::InvalidArgument, std::to_string(D) + " is not a fundamental discriminant");
    }
    const int m = std::abs(D);
    std::vector<int> e(static_cast<std::size_t>(m));
    for (int n = 0; n < m; ++n) {
        const int s = kronecker(D, n == 0 ? m : n);
        e[static_cast<std::size_t>(n)] = s == 0 ? -1 : (s == 1 ? 0 : 1);
    }
    return DirichletCharacter(m, 2, std::move(e), "quad:" + std::to_string(D));
}

DirichletCharacter DirichletCharacter::from_primitive_root(int p, int k)
{
    if (!is_prime(p) || k < 1 || (p - 1) % k != 0) {
        raise(Errc::InvalidArgument, "order " + std::to_string(k) + " character mod " + std::to_string(p) +
                                         " needs a prime p with k | p - 1");
    }
    const int g = least_primitive_root(p);
    std::vector<int> e(static_cast<std::size_t>(p), -1);
    long x = 1;
    for (int j = 0; j < p - 1; ++j) {
        e[static_cast<std::size_t>(x)] = j % k;
        x = x * g % p;
    }
    std::string name = k == 3 ? "cubic:" + std::to_string(p) : "order:" + std::to_string(k) + ":" + std::to_string(p);
    return DirichletCharacter(p, k, std::move(e), std::move(name));
}

DirichletCharacter DirichletCharacter::parse(std::string_view spec)
{
    const std::string s(spec);
    try {
        if (s == "trivial") {
            return trivial();
        }
        if (s.rfind("quad:", 0) == 0) {
            return quadratic(std::stoi(s.substr(5)));
        }
        if (s.rfind("cubic:", 0) == 0) {
            return from_primitive_root(std::stoi(s.substr(6)), 3);
        }
        if (s.rfind("order:", 0) == 0) {
            const auto colon = s.find(':', 6);
            if (colon != std::string::npos) {
                return from_primitive_root(std::stoi(s.substr(colon + 1)), std::stoi(s.substr(6, colon - 6)));
            }
        }
    } catch (const std::logic_error &) {
        // fall through to the ParseError below
    }
    raise(Errc::ParseError, "bad character '" + s + "' (expected trivial, quad:D, cubic:p or order:k:p)");
}

int DirichletCharacter::field_order() const noexcept { return std::lcm(m_, k_); }

int DirichletCharacter::exponent(long n) const { return e_[static_cast<std::size_t>(mod(n, m_))]; }

Complex DirichletCharacter::operator()(long n) const
{
    const int e = exponent(n);
    if (e < 0) {
        return 0;
    }
    const Real a = 2 * std::numbers::pi_v<Real> * e / k_;
    return {std::cos(a), std::sin(a)};
}

CycloElem DirichletCharacter::exact(long n) const
{
    const int M = field_order();
    const int e = exponent(n);
    if (e < 0) {
        return CycloElem(M, Rational(0));
    }
    return CycloElem::zeta(M, static_cast<long>(e) * (M / k_));
}

bool DirichletCharacter::is_primitive() const
{
    for (int d = 1; d < m_; ++d) {
        if (m_ % d != 0) {
            continue;
        }
        bool induced = true;
        for (int a = 1; a < m_ && induced; a += d) {
            if (is_unit(a) && exponent(a) != 0) {
                induced = false;
            }
        }
        if (induced) {
            return false;
        }
    }
    return true;
}

DirichletCharacter DirichletCharacter::conj() const
{
    std::vector<int> e = e_;
    for (int &x : e) {
        if (x > 0) {
            x = k_ - x;
        }
    }
    return DirichletCharacter(m_, k_, std::move(e), "conj(" + name_ + ")");
}

GaussSum gauss_sum(const DirichletCharacter &chi)
{
    if (!chi.is_primitive()) {
        raise(Errc::NotPrimitive, "character " + chi.name() + " is not primitive");
    }
    const int M = chi.field_order();
    const int m = chi.modulus();
    CycloElem g(M, Rational(0));
    for (int j = 0; j < m; ++j) {
        if (chi.is_unit(j)) {
            g += chi.exact(j) * CycloElem::zeta(M, static_cast<long>(j) * (M / m));
        }
    }
    if (!(g * g.conj() == CycloElem(M, Rational(m)))) {
        raise(Errc::InvalidArgument, "|g|^2 != m for " + chi.name());
    }
    return {g, g.to_complex()};
}

} // namespace logalg
