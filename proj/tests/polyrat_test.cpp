#include <random>
#include <stdexcept>
#include <vector>

#include "doctest.h"
#include "eulercat/category.hpp"
#include "eulercat/euler.hpp"
#include "eulercat/poly.hpp"
#include "eulercat/ratfunc.hpp"

namespace {

using namespace eulercat;

Poly random_poly(std::mt19937_64& rng, Var var, int max_deg) {
    std::uniform_int_distribution<int> deg(0, max_deg);
    std::uniform_int_distribution<long> num(-5, 5);
    std::uniform_int_distribution<long> den(1, 3);
    std::vector<Rat> c(static_cast<std::size_t>(deg(rng)) + 1);
    for (auto& v : c) v = make_rat(num(rng), den(rng));
    return Poly(var, std::move(c));
}

} // namespace

TEST_CASE("poly basics: degree, coefficients, trimming") {
    const Poly zero(Var::t);
    CHECK(zero.is_zero());
    CHECK(zero.degree() == -1);
    CHECK(to_string(zero) == "[]");

    const Poly p(Var::t, {Rat(1), Rat(0), Rat(2), Rat(0)}); // trailing zero trims
    CHECK(p.degree() == 2);
    CHECK(p.coeff(0) == Rat(1));
    CHECK(p.coeff(1) == Rat(0));
    CHECK(p.coeff(7) == Rat(0));
    CHECK(to_string(p) == "[1, 0, 2]");
    CHECK(p.eval(Rat(3)) == Rat(19));
}

TEST_CASE("poly product and shift") {
    const Poly a(Var::t, {Rat(1), Rat(1)});      // 1 + t
    const Poly b(Var::t, {Rat(-1), Rat(1)});     // -1 + t
    CHECK(a * b == Poly(Var::t, {Rat(-1), Rat(0), Rat(1)}));
    CHECK(a.shifted(2) == Poly(Var::t, {Rat(0), Rat(0), Rat(1), Rat(1)}));
    CHECK((a - a).is_zero());
}

TEST_CASE("divmod reconstructs the dividend") {
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 80; ++trial) {
        const Poly a = random_poly(rng, Var::t, 6);
        Poly b = random_poly(rng, Var::t, 3);
        if (b.is_zero()) b = Poly(Var::t, {Rat(1), Rat(1)});
        const auto [q, r] = poly_divmod(a, b);
        CAPTURE(trial);
        CHECK(q * b + r == a);
        CHECK(r.degree() < b.degree());
    }
    CHECK_THROWS_AS(poly_divmod(Poly(Var::t, {Rat(1)}), Poly(Var::t)), std::invalid_argument);
}

TEST_CASE("gcd is monic and divides both arguments") {
    std::mt19937_64 rng(22);
    for (int trial = 0; trial < 60; ++trial) {
        const Poly common = random_poly(rng, Var::u, 2);
        const Poly a = random_poly(rng, Var::u, 3) * common;
        const Poly b = random_poly(rng, Var::u, 3) * common;
        const Poly g = poly_gcd(a, b);
        CAPTURE(trial);
        if (g.is_zero()) {
            CHECK(a.is_zero());
            CHECK(b.is_zero());
            continue;
        }
        CHECK(g.leading() == Rat(1));
        if (!a.is_zero()) CHECK(poly_divmod(a, g).second.is_zero());
        if (!b.is_zero()) CHECK(poly_divmod(b, g).second.is_zero());
        if (!common.is_zero()) CHECK(g.degree() >= common.degree());
    }
    CHECK(poly_gcd(Poly(Var::t), Poly(Var::t)).is_zero());
}

TEST_CASE("squarefree detection") {
    // u^2 - 3u + 2 = (u-1)(u-2): squarefree
    CHECK(poly_squarefree(Poly(Var::u, {Rat(2), Rat(-3), Rat(1)})));
    // u^2: not squarefree
    CHECK_FALSE(poly_squarefree(Poly(Var::u, {Rat(0), Rat(0), Rat(1)})));
    CHECK(poly_squarefree(Poly::constant(Var::u, Rat(5))));
    CHECK_THROWS_AS(poly_squarefree(Poly(Var::u)), std::invalid_argument);
}

TEST_CASE("interpolation reproduces the polynomial through its points") {
    std::mt19937_64 rng(33);
    for (int trial = 0; trial < 50; ++trial) {
        const Poly p = random_poly(rng, Var::t, 4);
        std::vector<std::pair<Rat, Rat>> pts;
        for (long x = 0; x <= p.degree(); ++x) pts.push_back({make_rat(x), p.eval(make_rat(x))});
        if (pts.empty()) pts.push_back({Rat(0), p.eval(Rat(0))});
        CAPTURE(trial);
        CHECK(poly_interpolate(Var::t, pts) == p);
    }
}

TEST_CASE("ratfunc normalization is canonical") {
    // (2t^2 + 2t) / (2t) reduces to (1 + t) / 1
    const RatFunc f(Poly(Var::t, {Rat(0), Rat(2), Rat(2)}), Poly(Var::t, {Rat(0), Rat(2)}));
    CHECK(f.num() == Poly(Var::t, {Rat(1), Rat(1)}));
    CHECK(f.den() == Poly(Var::t, {Rat(1)}));

    // normalization is idempotent
    const RatFunc again(f.num(), f.den());
    CHECK(again == f);

    // zero numerator forces denominator 1
    const RatFunc z(Poly(Var::t), Poly(Var::t, {Rat(3), Rat(7)}));
    CHECK(z.is_zero());
    CHECK(z == RatFunc::zero(Var::t));
    CHECK(z.den() == Poly(Var::t, {Rat(1)}));

    CHECK_THROWS_AS(RatFunc(Poly(Var::t, {Rat(1)}), Poly(Var::t)), std::invalid_argument);
    CHECK_THROWS_AS(RatFunc(Poly(Var::t, {Rat(1)}), Poly(Var::u, {Rat(1)})),
                    std::invalid_argument);
}

TEST_CASE("ratfunc equality ignores representation") {
    const RatFunc a(Poly(Var::u, {Rat(2)}), Poly(Var::u, {Rat(5), Rat(-1)}));
    const RatFunc b(Poly(Var::u, {Rat(-4)}), Poly(Var::u, {Rat(-10), Rat(2)}));
    CHECK(a == b);
}

TEST_CASE("ratfunc_eval evaluates and reports poles") {
    const RatFunc f(Poly(Var::u, {Rat(1), Rat(1)}), Poly(Var::u, {Rat(-2), Rat(1)})); // (1+u)/(u-2)
    CHECK(ratfunc_eval(f, Rat(0)) == make_rat(-1, 2));
    CHECK(ratfunc_eval(f, Rat(3)) == Rat(4));
    CHECK(ratfunc_eval(f, Rat(2)) == std::nullopt);
}

TEST_CASE("series coefficients satisfy the defining congruence") {
    std::mt19937_64 rng(44);
    for (int trial = 0; trial < 60; ++trial) {
        const Poly p = random_poly(rng, Var::t, 5);
        Poly q = random_poly(rng, Var::t, 4);
        if (q.coeff(0) == Rat(0)) q = q + Poly::constant(Var::t, Rat(1));
        const RatFunc f(p, q);
        const std::size_t order = 16;
        const SeriesTruncation s = ratfunc_series(f, order);
        REQUIRE(s.coeffs.size() == order + 1);

        // den * series == num modulo t^{order+1}
        const Poly series_poly(Var::t, s.coeffs);
        const Poly product = f.den() * series_poly;
        CAPTURE(trial);
        for (std::size_t k = 0; k <= order; ++k) CHECK(product.coeff(k) == f.num().coeff(k));
    }
}

TEST_CASE("series expansion rejects a pole at the origin") {
    const RatFunc f(Poly(Var::t, {Rat(1)}), Poly(Var::t, {Rat(0), Rat(1)})); // 1/t
    CHECK_THROWS_AS(ratfunc_series(f, 4), std::domain_error);
}

TEST_CASE("the u = 1 + 1/t substitution carries g to f") {
    std::mt19937_64 rng(55);
    for (int trial = 0; trial < 50; ++trial) {
        const std::size_t m = 1 + trial % 4;
        const CountMatrix z = random_category_matrix(m, 2 + trial % 4, 1000 + trial);
        CAPTURE(trial);
        CHECK(ratfunc_substitute_mobius(g_ratfunc(z)) == f_series_ratfunc(z));
    }
    CHECK_THROWS_AS(
        ratfunc_substitute_mobius(RatFunc(Poly(Var::t, {Rat(1)}), Poly(Var::t, {Rat(1)}))),
        std::invalid_argument);
}

TEST_CASE("substitution on a known function") {
    // g(u) = 2/(5-u)  ->  f(t) = (1-u) * g(u) with u = 1 + 1/t is 2t/(4t-1)... times -1/-1:
    // (1-u) = -1/t, so f(t) = (-2/t) / (4 - 1/t) = -2/(4t - 1) = (1/2)/(1/4 - t) normalized.
    const RatFunc g(Poly(Var::u, {Rat(2)}), Poly(Var::u, {Rat(5), Rat(-1)}));
    const RatFunc f = ratfunc_substitute_mobius(g);
    CHECK(f == RatFunc(Poly(Var::t, {Rat(-2)}), Poly(Var::t, {Rat(-1), Rat(4)})));
}

TEST_CASE("canonical string forms") {
    const RatFunc g(Poly(Var::u, {Rat(-1)}), Poly(Var::u, {Rat(-2), Rat(1)}));
    CHECK(to_string(g) == "[-1] / [-2, 1]");
    SeriesTruncation s;
    s.coeffs = {Rat(1), make_rat(1, 2), Rat(-3)};
    CHECK(to_string(s) == "[1, 1/2, -3]");
    CHECK(s.order() == 2);
}
