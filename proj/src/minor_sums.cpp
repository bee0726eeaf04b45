#include "eulercat/minor_sums.hpp"

#include <bit>
#include <cstdint>
#include <stdexcept>

#include "eulercat/exactmath.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace eulercat {

namespace {

// Accumulates the (det, adjugate entry sum) contribution of one deletion
// pattern. s(adj M) is recovered from two determinants via the rank-one
// update identity det(M + J) = det(M) + s(adj M), J the all-ones matrix.
void accumulate_mask(const QMatrix& z, std::uint64_t mask, std::vector<Rat>& d,
                     std::vector<Rat>& e) {
    std::size_t n = z.dim();
    std::size_t r = static_cast<std::size_t>(std::popcount(mask));
    std::vector<std::size_t> keep;
    keep.reserve(n - r);
    for (std::size_t i = 0; i < n; ++i)
        if (!(mask >> i & 1)) keep.push_back(i);

    std::size_t k = keep.size();
    QMatrix sub(k);
    QMatrix sub_plus_j(k);
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < k; ++j) {
            sub.at(i, j) = z.at(keep[i], keep[j]);
            sub_plus_j.at(i, j) = sub.at(i, j) + 1;
        }
    Rat a = det(sub);
    d[r] += a;
    e[r] += det(sub_plus_j) - a;
}

void check_dim(const QMatrix& z) {
    if (z.dim() >= 63)
        throw std::invalid_argument("minor_sums: dimension too large for subset enumeration");
}

}  // namespace

MinorSums minor_sums_serial(const QMatrix& z) {
    check_dim(z);
    std::size_t n = z.dim();
    MinorSums out{std::vector<Rat>(n + 1), std::vector<Rat>(n + 1)};
    std::uint64_t total = std::uint64_t{1} << n;
    for (std::uint64_t mask = 0; mask < total; ++mask)
        accumulate_mask(z, mask, out.d, out.e);
    return out;
}

MinorSums minor_sums_parallel(const QMatrix& z) {
#ifdef _OPENMP
    check_dim(z);
    std::size_t n = z.dim();
    MinorSums out{std::vector<Rat>(n + 1), std::vector<Rat>(n + 1)};
    std::uint64_t total = std::uint64_t{1} << n;
    int max_threads = omp_get_max_threads();
    std::vector<std::vector<Rat>> d_part(max_threads, std::vector<Rat>(n + 1));
    std::vector<std::vector<Rat>> e_part(max_threads, std::vector<Rat>(n + 1));
#pragma omp parallel
    {
        int tid = omp_get_thread_num();
#pragma omp for schedule(dynamic, 64)
        for (std::int64_t mask = 0; mask < static_cast<std::int64_t>(total); ++mask)
            accumulate_mask(z, static_cast<std::uint64_t>(mask), d_part[tid], e_part[tid]);
    }
    // Merge per-thread partials in thread order. Rational addition is exact,
    // so any order would produce the same sums; this one is just tidy.
    for (int t = 0; t < max_threads; ++t)
        for (std::size_t r = 0; r <= n; ++r) {
            out.d[r] += d_part[t][r];
            out.e[r] += e_part[t][r];
        }
    return out;
#else
    return minor_sums_serial(z);
#endif
}

}  // namespace eulercat
