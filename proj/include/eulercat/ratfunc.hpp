#pragma once

#include <optional>
#include <string>
#include <vector>

#include "eulercat/poly.hpp"

namespace eulercat {

/// Truncated power series c_0..c_N. When produced from a category every
/// coefficient is a nonnegative integer (it counts nondegenerate simplices).
struct SeriesTruncation {
    std::vector<Rat> coeffs;
    std::size_t order() const { return coeffs.size() - 1; }
};

/// Normalized ratio of polynomials over Q: denominator monic and nonzero,
/// numerator and denominator coprime. Equality is structural.
class RatFunc {
 public:
    /// Normalizes p/q. Throws std::invalid_argument on q = 0 or variable mismatch.
    RatFunc(Poly num, Poly den);

    static RatFunc zero(Var var);
    static RatFunc constant(Var var, const Rat& c);

    Var var() const { return num_.var(); }
    const Poly& num() const { return num_; }
    const Poly& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }

    bool operator==(const RatFunc& o) const = default;

 private:
    Poly num_, den_;
};

/// Spec-facing alias for the normalizing constructor.
inline RatFunc ratfunc_normalize(Poly p, Poly q) { return RatFunc(std::move(p), std::move(q)); }

/// p(x)/q(x), or nullopt when q(x) = 0 (the function has a pole at x;
/// "undefined" is a legitimate value, not an error).
std::optional<Rat> ratfunc_eval(const RatFunc& f, const Rat& x);

/// First N+1 power-series coefficients of f at 0. Requires den(0) != 0;
/// throws std::domain_error on a pole at 0. Satisfies q*series = p mod x^{N+1}.
SeriesTruncation ratfunc_series(const RatFunc& f, std::size_t n);

/// Given g in the variable u, return the rational function in t equal to
/// (1 - u) * g(u) under the change of variable u = 1 + 1/t. Implemented by
/// clearing denominators symbolically, so it is total and exact.
RatFunc ratfunc_substitute_mobius(const RatFunc& g);

/// "num / den" with both sides as ascending coefficient lists.
std::string to_string(const RatFunc& f);

std::string to_string(const SeriesTruncation& s);

}  // namespace eulercat
