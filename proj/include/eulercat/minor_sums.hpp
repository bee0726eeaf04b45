#pragma once

#include <vector>

#include "eulercat/qmatrix.hpp"

namespace eulercat {

/// Subset sums over principal submatrices of a square matrix Z: for each
/// r, d[r] is the sum of det(Z with rows and columns R deleted) over all
/// r-element index subsets R, and e[r] is the matching sum of adjugate
/// entry sums. Both vectors have size dim+1; the empty-matrix conventions
/// give d[dim] = 1 and e[dim] = 0.
struct MinorSums {
    std::vector<Rat> d, e;
    bool operator==(const MinorSums&) const = default;
};

/// Single-threaded enumeration of all 2^dim subsets. Kept as the reference
/// implementation for testing the parallel kernel.
MinorSums minor_sums_serial(const QMatrix& z);

/// Same sums with the subset loop split across OpenMP threads. Exact
/// rational arithmetic makes the reduction order irrelevant, so the result
/// is identical to the serial one. Falls back to the serial loop when
/// compiled without OpenMP.
MinorSums minor_sums_parallel(const QMatrix& z);

inline MinorSums minor_sums(const QMatrix& z) { return minor_sums_parallel(z); }

}  // namespace eulercat
