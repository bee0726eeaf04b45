// Acceptance gate: one pass/fail line per criterion. Each criterion is a
// self-contained closure; a failure carries the first broken expectation.

#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "eulercat/category.hpp"
#include "eulercat/euler.hpp"
#include "eulercat/exactmath.hpp"
#include "eulercat/minor_sums.hpp"
#include "eulercat/ratfunc.hpp"

namespace {

using namespace eulercat;

struct Failure {
    std::string detail;
};

void req(bool cond, const std::string& detail) {
    if (!cond) throw Failure{detail};
}

RatFunc in_u(std::vector<Rat> num, std::vector<Rat> den) {
    return RatFunc(Poly(Var::u, std::move(num)), Poly(Var::u, std::move(den)));
}

// Does w solve Z·w = 1 (column side) or wᵀ·Z = 1ᵀ (row side)?
bool solves(const CountMatrix& z, const std::vector<Rat>& w, Side side) {
    const QMatrix q = side == Side::weighting ? z.to_q() : z.to_q().transpose();
    for (std::size_t i = 0; i < z.dim(); ++i) {
        Rat row(0);
        for (std::size_t j = 0; j < z.dim(); ++j) row += q.at(i, j) * w[j];
        if (row != Rat(1)) return false;
    }
    return true;
}

Rat sum(const std::vector<Rat>& v) {
    Rat out(0);
    for (const Rat& x : v) out += x;
    return out;
}

void criterion_monoids() {
    for (long order : {1L, 2L, 3L, 6L}) {
        const CountMatrix z = CountMatrix::from_rows({{order}});
        const EulerReport r = build_report(z);
        const std::string tag = "order " + std::to_string(order);

        // f = 1 / (1 - (order-1) t)
        const RatFunc expected_f(Poly(Var::t, {Rat(1)}),
                                 Poly(Var::t, {Rat(1), make_rat(-(order - 1))}));
        req(r.f == expected_f, tag + ": f is not 1/(1-(o-1)t)");

        const Rat inv = make_rat(1, order);
        req(r.chi_sigma == inv, tag + ": chi_sigma != 1/o");
        req(r.chi == inv, tag + ": chi != 1/o");
        req(mobius_chi(z) == inv, tag + ": Mobius inversion != 1/o");
        req(r.weighting && r.weighting->total() == inv, tag + ": weighting total != 1/o");
        req(r.coweighting && r.coweighting->total() == inv, tag + ": coweighting total != 1/o");
    }
}

void criterion_coweighting_only() {
    const CountMatrix z =
        CountMatrix::from_rows({{2, 2, 1, 1}, {2, 2, 1, 2}, {1, 1, 1, 1}, {0, 0, 0, 1}});
    const EulerReport r = build_report(z);
    req(r.coweighting.has_value(), "expected a coweighting");
    req(!r.weighting.has_value(), "expected no weighting");
    req(!r.chi.has_value(), "chi must be undefined");
    req(r.diagonalizable, "matrix must be diagonalizable");
    req(r.chi_sigma == Rat(1), "chi_sigma must equal 1");
}

void criterion_weighting_only() {
    const CountMatrix z =
        CountMatrix::from_rows({{6, 6, 15, 9}, {6, 6, 6, 6}, {6, 6, 9, 7}, {6, 30, 9, 15}});
    const EulerReport r = build_report(z);

    // g = 4(1+u) / (u(36-u)) before normalization
    req(r.g == in_u({Rat(4), Rat(4)}, {Rat(0), Rat(36), Rat(-1)}),
        "g != 4(1+u)/(u(36-u))");

    const std::vector<Rat> w = {make_rat(1, 6), Rat(0), Rat(0), Rat(0)};
    const std::vector<Rat> cw = {Rat(0), make_rat(1, 6), Rat(0), Rat(0)};
    req(solves(z, w, Side::weighting), "(1/6,0,0,0) is not a weighting");
    req(solves(z, cw, Side::coweighting), "(0,1/6,0,0) is not a coweighting");
    req(r.weighting && r.weighting->values == w, "computed weighting differs");
    req(r.coweighting && r.coweighting->values == cw, "computed coweighting differs");
    req(r.chi == make_rat(1, 6), "chi != 1/6");

    req(!series_chi(z).has_value(), "chi_sigma must be undefined (coefficient path)");
    req(!ratfunc_eval(g_ratfunc(z), Rat(0)).has_value(),
        "chi_sigma must be undefined (g(0) path)");
}

void criterion_no_weightings() {
    const CountMatrix z = CountMatrix::from_rows({{2, 4}, {1, 2}});
    const EulerReport r = build_report(z);
    req(r.g == in_u({Rat(1), Rat(2)}, {Rat(0), Rat(4), Rat(-1)}), "g != (1+2u)/(u(4-u))");
    req(!r.weighting.has_value(), "expected no weighting");
    req(!r.coweighting.has_value(), "expected no coweighting");
    req(!r.chi.has_value(), "chi must be undefined");
    req(!r.chi_sigma.has_value(), "chi_sigma must be undefined");
}

void criterion_disagreement() {
    const CountMatrix z = CountMatrix::from_rows({{2, 2, 2}, {2, 2, 2}, {2, 8, 5}});
    const EulerReport r = build_report(z);
    req(r.chi == make_rat(1, 2), "chi != 1/2");
    req(r.chi_sigma == make_rat(1, 3), "chi_sigma != 1/3");
    req(r.g == in_u({Rat(3)}, {Rat(9), Rat(-1)}), "g != 3/(9-u)");
}

void criterion_inflation() {
    const CountMatrix base = CountMatrix::from_rows({{3, 3}, {2, 2}});
    const EulerReport rb = build_report(base);
    req(rb.chi_sigma == make_rat(2, 5), "base chi_sigma != 2/5");
    req(rb.g == in_u({Rat(2)}, {Rat(5), Rat(-1)}), "base g != 2/(5-u)");

    const CountMatrix doubled = duplicate_object(base, 1);
    req(doubled == CountMatrix::from_rows({{3, 3, 3}, {2, 2, 2}, {2, 2, 2}}),
        "duplicate_object printed the wrong matrix");
    const EulerReport rd = build_report(doubled);
    req(rd.chi_sigma == make_rat(3, 7), "inflated chi_sigma != 3/7");
    req(rd.g == in_u({Rat(3)}, {Rat(7), Rat(-1)}), "inflated g != 3/(7-u)");
    req(*rb.chi_sigma != *rd.chi_sigma, "chi_sigma failed to change under duplication");
}

void criterion_sharpness() {
    const CountMatrix a = CountMatrix::from_rows({{2, 3, 5}, {2, 3, 5}, {2, 1, 3}});
    const EulerReport ra = build_report(a);
    req(ra.weighting.has_value(), "expected a weighting");
    req(!ra.diagonalizable, "matrix must not be diagonalizable");
    req(ra.g == in_u({Rat(2), Rat(3)}, {Rat(0), Rat(8), Rat(-1)}), "g != (2+3u)/(u(8-u))");
    req(!ra.chi_sigma.has_value(), "chi_sigma must be undefined");

    const CountMatrix b = CountMatrix::from_rows({{2, 3}, {2, 3}});
    const EulerReport rb = build_report(b);
    req(rb.g == in_u({Rat(2)}, {Rat(5), Rat(-1)}), "g != 2/(5-u)");
    req(rb.chi_sigma == make_rat(2, 5), "chi_sigma != 2/5");

    const std::vector<Rat> w1 = {make_rat(1, 2), Rat(0)};
    const std::vector<Rat> w2 = {Rat(0), make_rat(1, 3)};
    req(solves(b, w1, Side::weighting) && solves(b, w2, Side::weighting),
        "(1/2,0) and (0,1/3) must both be weightings");
    req(sum(w1) == make_rat(1, 2) && sum(w2) == make_rat(1, 3),
        "weighting totals must be 1/2 and 1/3");
    req(sum(w1) != sum(w2), "the two totals must differ");
    req(!rb.chi.has_value(), "chi must be undefined");
}

void criterion_non_category() {
    const auto started = std::chrono::steady_clock::now();
    const CategoryMatrixResult r = is_category_matrix(CountMatrix::from_rows({{1, 2}, {1, 2}}));
    const auto elapsed = std::chrono::steady_clock::now() - started;
    req(r.verdict == CategoryMatrixResult::Verdict::no,
        "search must refute the matrix");
    req(elapsed < std::chrono::seconds(1), "search exceeded one second");
}

void criterion_route_agreement() {
    std::mt19937_64 rng(1009);
    std::uniform_int_distribution<std::size_t> dim(1, 8);
    std::uniform_int_distribution<std::uint64_t> entry(2, 6);
    for (int trial = 0; trial < 200; ++trial) {
        const CountMatrix z = random_category_matrix(dim(rng), entry(rng), 50000 + trial);
        const MinorSums subset = minor_sums(z.to_q());
        const auto [d, e] = char_data_polynomial(z.to_q());
        req(subset.d == d && subset.e == e,
            "routes disagree on trial " + std::to_string(trial));
    }
}

void criterion_inflation_theorem() {
    std::mt19937_64 rng(1013);
    std::uniform_int_distribution<std::size_t> dim(1, 4);
    std::uniform_int_distribution<std::uint64_t> entry(2, 5);
    std::uniform_int_distribution<int> copies(1, 3);
    int verified = 0;
    for (int trial = 0; verified < 100 && trial < 2000; ++trial) {
        const CountMatrix z = random_category_matrix(dim(rng), entry(rng), 60000 + trial);
        if (det(z.to_q()) == Rat(0)) continue;
        const Rat expected = *mobius_chi(z);

        CountMatrix inflated = z;
        for (int k = copies(rng); k > 0; --k) {
            std::uniform_int_distribution<std::size_t> at(0, inflated.dim() - 1);
            inflated = duplicate_object(inflated, at(rng));
        }
        const std::string tag = "trial " + std::to_string(trial);
        const std::optional<Rat> chi = euler_characteristic(inflated);
        const std::optional<Rat> cs = series_chi(inflated);
        req(chi == expected, tag + ": chi of the inflation != entry_sum(Z^-1)");
        req(cs == expected, tag + ": chi_sigma of the inflation != entry_sum(Z^-1)");
        ++verified;
    }
    req(verified == 100, "not enough invertible samples");
}

void criterion_diagonalizable_proposition() {
    std::mt19937_64 rng(1019);
    std::uniform_int_distribution<std::size_t> dim(1, 6);
    std::uniform_int_distribution<std::uint64_t> entry(2, 5);
    int premise_held = 0;
    for (int trial = 0; premise_held < 200 && trial < 4000; ++trial) {
        const CountMatrix z = random_category_matrix(dim(rng), entry(rng), 70000 + trial);
        const bool one_sided = find_weighting(z, Side::weighting).has_value() ||
                               find_weighting(z, Side::coweighting).has_value();
        if (!one_sided || !is_diagonalizable(z)) continue;
        ++premise_held;
        req(series_chi(z).has_value(),
            "chi_sigma undefined despite the hypotheses, trial " + std::to_string(trial));
    }
    req(premise_held == 200, "not enough samples satisfying the hypotheses");
}

void criterion_oracles() {
    // chain counts vs entry sums of powers vs series coefficients
    std::mt19937_64 rng(1021);
    int categories_used = 0;
    for (int trial = 0; trial < 80; ++trial) {
        const CountMatrix z = random_category_matrix(1 + trial % 3, 2, 80000 + trial);
        if (z.total() > 12) continue;
        ++categories_used;
        const CatPresentation c = category_from_matrix(z);
        const EulerReport r = build_report(z);
        const QMatrix n = z.to_q() - QMatrix::identity(z.dim());
        QMatrix power = QMatrix::identity(z.dim());
        for (std::size_t len = 0; len <= 6; ++len) {
            const Rat chains = make_rat(static_cast<long>(count_nondegenerate_chains(c, len)));
            const std::string tag =
                "trial " + std::to_string(trial) + ", length " + std::to_string(len);
            req(chains == entry_sum(power), tag + ": chains != entry_sum((Z-I)^n)");
            req(chains == r.series_prefix.coeffs[len], tag + ": chains != series coefficient");
            power = power * n;
        }
    }
    req(categories_used >= 20, "not enough small categories sampled");

    // permutation-expansion adjugate sums on every matrix of dimension <= 5
    std::vector<QMatrix> pool = {
        CountMatrix::from_rows({{1}}).to_q(),
        CountMatrix::from_rows({{6}}).to_q(),
        CountMatrix::from_rows({{2, 4}, {1, 2}}).to_q(),
        CountMatrix::from_rows({{2, 3}, {2, 3}}).to_q(),
        CountMatrix::from_rows({{3, 3}, {2, 2}}).to_q(),
        CountMatrix::from_rows({{2, 2, 2}, {2, 2, 2}, {2, 8, 5}}).to_q(),
        CountMatrix::from_rows({{2, 3, 5}, {2, 3, 5}, {2, 1, 3}}).to_q(),
        CountMatrix::from_rows({{3, 3, 3}, {2, 2, 2}, {2, 2, 2}}).to_q(),
    };
    std::uniform_int_distribution<long> pick(-5, 5);
    for (int trial = 0; trial < 60; ++trial) {
        QMatrix m(1 + trial % 5);
        for (std::size_t i = 0; i < m.dim(); ++i)
            for (std::size_t j = 0; j < m.dim(); ++j) m.at(i, j) = make_rat(pick(rng));
        pool.push_back(m);
    }
    for (std::size_t k = 0; k < pool.size(); ++k) {
        const Rat oracle = s_adj_permutation_oracle(pool[k]);
        req(oracle == adj_entry_sum(pool[k]) && oracle == entry_sum(adjugate(pool[k])),
            "permutation oracle disagrees on pool matrix " + std::to_string(k));
    }
}

void criterion_substitution_identity() {
    std::vector<CountMatrix> pool = {
        CountMatrix::from_rows({{1}}),
        CountMatrix::from_rows({{2}}),
        CountMatrix::from_rows({{3}}),
        CountMatrix::from_rows({{6}}),
        CountMatrix::from_rows({{2, 2, 1, 1}, {2, 2, 1, 2}, {1, 1, 1, 1}, {0, 0, 0, 1}}),
        CountMatrix::from_rows({{6, 6, 15, 9}, {6, 6, 6, 6}, {6, 6, 9, 7}, {6, 30, 9, 15}}),
        CountMatrix::from_rows({{2, 4}, {1, 2}}),
        CountMatrix::from_rows({{2, 2, 2}, {2, 2, 2}, {2, 8, 5}}),
        CountMatrix::from_rows({{3, 3}, {2, 2}}),
        CountMatrix::from_rows({{3, 3, 3}, {2, 2, 2}, {2, 2, 2}}),
        CountMatrix::from_rows({{2, 3, 5}, {2, 3, 5}, {2, 1, 3}}),
        CountMatrix::from_rows({{2, 3}, {2, 3}}),
        CountMatrix::from_rows({{1, 2}, {1, 2}}),
    };
    std::mt19937_64 rng(1031);
    std::uniform_int_distribution<std::size_t> dim(1, 6);
    std::uniform_int_distribution<std::uint64_t> entry(2, 6);
    for (int trial = 0; trial < 100; ++trial)
        pool.push_back(random_category_matrix(dim(rng), entry(rng), 90000 + trial));

    for (std::size_t k = 0; k < pool.size(); ++k) {
        req(ratfunc_substitute_mobius(g_ratfunc(pool[k])) == f_series_ratfunc(pool[k]),
            "f != (1-u)g on pool matrix " + std::to_string(k));
    }
}

} // namespace

int main() {
    const std::vector<std::pair<std::string, std::function<void()>>> criteria = {
        {"cyclic monoids: f = 1/(1-(o-1)t), chi = chi_sigma = 1/o by every route",
         criterion_monoids},
        {"coweighting without weighting: chi undefined yet chi_sigma = 1",
         criterion_coweighting_only},
        {"weighting pair gives chi = 1/6 while chi_sigma is undefined on both paths",
         criterion_weighting_only},
        {"no weighting on either side: chi and chi_sigma both undefined",
         criterion_no_weightings},
        {"chi = 1/2 and chi_sigma = 1/3 on the same matrix", criterion_disagreement},
        {"object duplication moves chi_sigma from 2/5 to 3/7", criterion_inflation},
        {"sharpness: non-diagonalizable case and the two-totals weighting case",
         criterion_sharpness},
        {"[[1,2],[1,2]] refuted by exhaustive search within one second",
         criterion_non_category},
        {"subset enumeration equals polynomial expansion on 200 random matrices",
         criterion_route_agreement},
        {"inflating invertible matrices keeps chi_sigma = chi = entry_sum(Z^-1), 100 cases",
         criterion_inflation_theorem},
        {"one-sided weighting plus diagonalizability defines chi_sigma, 200 cases",
         criterion_diagonalizable_proposition},
        {"chain counts, matrix powers, series coefficients, and the permutation oracle agree",
         criterion_oracles},
        {"f(t) = (1-u)g(u) under u = 1+1/t, exactly, on the whole matrix pool",
         criterion_substitution_identity},
    };

    int failed = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        const auto& [label, run] = criteria[i];
        std::string verdict = "PASS";
        std::string detail;
        try {
            run();
        } catch (const Failure& f) {
            verdict = "FAIL";
            detail = f.detail;
            ++failed;
        } catch (const std::exception& e) {
            verdict = "FAIL";
            detail = std::string("unexpected exception: ") + e.what();
            ++failed;
        }
        std::printf("criterion %2zu: %s  %s", i + 1, verdict.c_str(), label.c_str());
        if (!detail.empty()) std::printf("  [%s]", detail.c_str());
        std::printf("\n");
    }

    std::printf("acceptance: %zu/%zu criteria passed\n", criteria.size() - failed,
                criteria.size());
    return failed == 0 ? 0 : 1;
}
