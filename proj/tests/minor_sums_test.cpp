#include <random>
#include <stdexcept>
#include <vector>

#include "doctest.h"
#include "eulercat/exactmath.hpp"
#include "eulercat/minor_sums.hpp"

namespace {

using namespace eulercat;

QMatrix random_int_matrix(std::mt19937_64& rng, std::size_t m, long lo, long hi) {
    std::uniform_int_distribution<long> pick(lo, hi);
    QMatrix out(m);
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < m; ++j) out.at(i, j) = make_rat(pick(rng));
    return out;
}

Rat binomial(std::size_t n, std::size_t k) {
    Rat out(1);
    for (std::size_t i = 0; i < k; ++i) {
        out *= make_rat(static_cast<long>(n - i));
        out /= make_rat(static_cast<long>(i + 1));
    }
    return out;
}

} // namespace

TEST_CASE("serial and parallel kernels agree") {
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 25; ++trial) {
        const std::size_t m = trial % 9; // 0 through 8
        const QMatrix a = random_int_matrix(rng, m, -3, 6);
        CAPTURE(trial);
        CHECK(minor_sums_serial(a) == minor_sums_parallel(a));
    }
    // one larger case
    const QMatrix big = random_int_matrix(rng, 10, 0, 4);
    CHECK(minor_sums_serial(big) == minor_sums_parallel(big));
}

TEST_CASE("subset sums on known matrices") {
    const MinorSums s = minor_sums(QMatrix::from_ints({{2, 4}, {1, 2}}));
    CHECK(s.d == std::vector<Rat>{Rat(0), Rat(4), Rat(1)});
    CHECK(s.e == std::vector<Rat>{Rat(-1), Rat(2), Rat(0)});

    const MinorSums t = minor_sums(
        QMatrix::from_ints({{2, 2, 1, 1}, {2, 2, 1, 2}, {1, 1, 1, 1}, {0, 0, 0, 1}}));
    CHECK(t.d == std::vector<Rat>{Rat(0), Rat(2), Rat(7), Rat(6), Rat(1)});
    CHECK(t.e == std::vector<Rat>{Rat(0), Rat(2), Rat(6), Rat(4), Rat(0)});
}

TEST_CASE("subset sums of the identity follow the binomial formula") {
    // Deleting any r indices from I_m leaves I_{m-r}: determinant 1 and
    // adjugate entry sum m-r, so d[r] = C(m,r) and e[r] = C(m,r)*(m-r).
    for (std::size_t m = 0; m <= 6; ++m) {
        const MinorSums s = minor_sums(QMatrix::identity(m));
        REQUIRE(s.d.size() == m + 1);
        REQUIRE(s.e.size() == m + 1);
        for (std::size_t r = 0; r <= m; ++r) {
            CAPTURE(m);
            CAPTURE(r);
            CHECK(s.d[r] == binomial(m, r));
            CHECK(s.e[r] == binomial(m, r) * make_rat(static_cast<long>(m - r)));
        }
    }
}

TEST_CASE("each subset contributes its determinant and adjugate sum") {
    // Direct cross-check against det/adj_entry_sum over explicit subsets.
    std::mt19937_64 rng(17);
    for (int trial = 0; trial < 20; ++trial) {
        const std::size_t m = 1 + trial % 4;
        const QMatrix a = random_int_matrix(rng, m, -4, 4);
        std::vector<Rat> d(m + 1, Rat(0)), e(m + 1, Rat(0));
        for (std::size_t mask = 0; mask < (std::size_t{1} << m); ++mask) {
            std::vector<std::size_t> removed;
            for (std::size_t i = 0; i < m; ++i)
                if (mask & (std::size_t{1} << i)) removed.push_back(i);
            const QMatrix sub = delete_rc(a, removed);
            d[removed.size()] += det(sub);
            e[removed.size()] += adj_entry_sum(sub);
        }
        const MinorSums s = minor_sums(a);
        CAPTURE(trial);
        CHECK(s.d == d);
        CHECK(s.e == e);
    }
}

TEST_CASE("boundary conventions") {
    const MinorSums empty = minor_sums(QMatrix(0));
    CHECK(empty.d == std::vector<Rat>{Rat(1)});
    CHECK(empty.e == std::vector<Rat>{Rat(0)});

    const MinorSums one = minor_sums(QMatrix::from_ints({{5}}));
    CHECK(one.d == std::vector<Rat>{Rat(5), Rat(1)});
    CHECK(one.e == std::vector<Rat>{Rat(1), Rat(0)});
}

TEST_CASE("dimension guard refuses absurd inputs") {
    CHECK_THROWS_AS(minor_sums_serial(QMatrix(63)), std::invalid_argument);
    CHECK_THROWS_AS(minor_sums_parallel(QMatrix(63)), std::invalid_argument);
}
