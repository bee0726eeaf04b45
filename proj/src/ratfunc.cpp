#include "eulercat/ratfunc.hpp"

#include <stdexcept>
#include <utility>

namespace eulercat {

RatFunc::RatFunc(Poly num, Poly den) : num_(std::move(num)), den_(std::move(den)) {
    if (num_.var() != den_.var())
        throw std::invalid_argument("RatFunc: variable mismatch");
    if (den_.is_zero())
        throw std::invalid_argument("RatFunc: zero denominator");
    if (num_.is_zero()) {
        den_ = Poly::constant(num_.var(), Rat(1));
        return;
    }
    Poly g = poly_gcd(num_, den_);
    if (g.degree() > 0) {
        num_ = poly_divmod(num_, g).first;
        den_ = poly_divmod(den_, g).first;
    }
    Rat lead = den_.leading();
    if (lead != 1) {
        Rat inv = Rat(1) / lead;
        num_ = num_.scaled(inv);
        den_ = den_.scaled(inv);
    }
}

RatFunc RatFunc::zero(Var var) {
    return RatFunc(Poly(var), Poly::constant(var, Rat(1)));
}

RatFunc RatFunc::constant(Var var, const Rat& c) {
    return RatFunc(Poly::constant(var, c), Poly::constant(var, Rat(1)));
}

std::optional<Rat> ratfunc_eval(const RatFunc& f, const Rat& x) {
    Rat q = f.den().eval(x);
    if (q == 0) return std::nullopt;
    return f.num().eval(x) / q;
}

SeriesTruncation ratfunc_series(const RatFunc& f, std::size_t n) {
    Rat q0 = f.den().coeff(0);
    if (q0 == 0)
        throw std::domain_error("ratfunc_series: pole at 0");
    // Long division p = q * c mod x^{n+1}, solving for c term by term.
    std::vector<Rat> c(n + 1);
    for (std::size_t k = 0; k <= n; ++k) {
        Rat acc = f.num().coeff(k);
        for (std::size_t j = 1; j <= k; ++j)
            acc -= f.den().coeff(j) * c[k - j];
        c[k] = acc / q0;
    }
    return SeriesTruncation{std::move(c)};
}

RatFunc ratfunc_substitute_mobius(const RatFunc& g) {
    if (g.var() != Var::u)
        throw std::invalid_argument("ratfunc_substitute_mobius: expected a function of u");
    // u = 1 + 1/t, and we want (1 - u) g(u) = -(1/t) g(1 + 1/t). Multiplying
    // numerator and denominator by t^d clears the inner fractions:
    //   g(1 + 1/t) = P(t)/Q(t),  P = sum p_k (t+1)^k t^{d-k},  Q likewise,
    // with d = max(deg p, deg q). Hence the result is (-P) / (t Q).
    const Poly& p = g.num();
    const Poly& q = g.den();
    int d = std::max(p.degree(), q.degree());
    if (d < 0) d = 0;

    Poly t_plus_1(Var::t, {Rat(1), Rat(1)});
    std::vector<Poly> pow;  // (t+1)^k for k = 0..d
    pow.reserve(d + 1);
    pow.push_back(Poly::constant(Var::t, Rat(1)));
    for (int k = 1; k <= d; ++k) pow.push_back(pow.back() * t_plus_1);

    auto lift = [&](const Poly& a) {
        Poly acc(Var::t);
        for (int k = 0; k <= a.degree(); ++k) {
            Rat ak = a.coeff(k);
            if (ak == 0) continue;
            acc = acc + pow[k].scaled(ak).shifted(d - k);
        }
        return acc;
    };
    Poly big_p = lift(p);
    Poly big_q = lift(q);
    return RatFunc(-big_p, big_q.shifted(1));
}

std::string to_string(const RatFunc& f) {
    return to_string(f.num()) + " / " + to_string(f.den());
}

std::string to_string(const SeriesTruncation& s) {
    return list_str(s.coeffs);
}

}  // namespace eulercat
