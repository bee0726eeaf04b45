#pragma once

#include <string>
#include <utility>
#include <vector>

#include "eulercat/rational.hpp"

namespace eulercat {

/// Formal variable tag. Carried on every polynomial and rational function so
/// that values living in Q[t] and Q[u] cannot be mixed silently.
enum class Var : unsigned char { t, u };

inline char var_name(Var v) { return v == Var::t ? 't' : 'u'; }

/// Polynomial over Q with ascending coefficients and no trailing zeros.
/// The zero polynomial has an empty coefficient vector (degree -1).
class Poly {
 public:
    explicit Poly(Var var) : var_(var) {}
    Poly(Var var, std::vector<Rat> ascending_coeffs);

    static Poly constant(Var var, const Rat& c);
    static Poly monomial(Var var, std::size_t power, const Rat& c = Rat(1));

    Var var() const { return var_; }
    bool is_zero() const { return c_.empty(); }
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    /// Coefficient of x^k; zero beyond the stored degree.
    Rat coeff(std::size_t k) const { return k < c_.size() ? c_[k] : Rat(0); }
    const Rat& leading() const;
    const std::vector<Rat>& coeffs() const { return c_; }

    Poly operator+(const Poly& o) const;
    Poly operator-(const Poly& o) const;
    Poly operator-() const;
    Poly operator*(const Poly& o) const;
    Poly scaled(const Rat& c) const;
    /// Multiply by x^k.
    Poly shifted(std::size_t k) const;

    Rat eval(const Rat& x) const;
    Poly derivative() const;

    bool operator==(const Poly& o) const = default;

 private:
    Var var_;
    std::vector<Rat> c_;

    void trim();
    friend std::pair<Poly, Poly> poly_divmod(const Poly& a, const Poly& b);
};

/// Euclidean division: a = q*b + r with deg r < deg b. Throws on zero divisor.
std::pair<Poly, Poly> poly_divmod(const Poly& a, const Poly& b);

/// Monic gcd; gcd(0, 0) = 0.
Poly poly_gcd(Poly a, Poly b);

/// True iff gcd(p, p') is constant. Throws std::invalid_argument on the zero polynomial.
bool poly_squarefree(const Poly& p);

/// Unique polynomial of degree < points.size() through the given (x, y) pairs.
/// The x values must be pairwise distinct.
Poly poly_interpolate(Var var, const std::vector<std::pair<Rat, Rat>>& points);

/// Ascending coefficient list, e.g. "[1, 0, -2/3]"; the zero polynomial is "[]".
std::string to_string(const Poly& p);

}  // namespace eulercat
