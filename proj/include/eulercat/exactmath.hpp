#pragma once

// Exact linear algebra over Q: determinants, adjugates, linear solving,
// principal submatrix deletion, minimal polynomials.

#include <cstddef>
#include <vector>

#include "eulercat/poly.hpp"
#include "eulercat/qmatrix.hpp"
#include "eulercat/rational.hpp"

namespace eulercat {

/// Outcome of solving M x = b over Q. When consistent, `particular` is the
/// reduced-row-echelon solution with every free variable set to zero, so the
/// result is deterministic. `nullity` is the dimension of the solution space
/// of the homogeneous system.
struct LinearSolution {
    bool consistent = false;
    std::vector<Rat> particular;  // present (length dim) iff consistent
    std::size_t nullity = 0;
};

/// Exact determinant. det of the 0x0 matrix is 1.
Rat det(const QMatrix& m);

/// adj(M), satisfying M*adj(M) = adj(M)*M = det(M)*I. adj of the 0x0 matrix
/// is the 0x0 matrix; adj of any 1x1 matrix is [[1]].
QMatrix adjugate(const QMatrix& m);

/// s(M) = sum of all entries; 0 for the 0x0 matrix.
Rat entry_sum(const QMatrix& m);

/// entry_sum(adjugate(M)) computed as det(M + J) - det(M), where J is the
/// all-ones matrix (rank-one-update determinant identity). Two determinants
/// instead of an explicit adjugate.
Rat adj_entry_sum(const QMatrix& m);

/// Solve M x = b exactly. b.size() must equal m.dim().
LinearSolution solve_right(const QMatrix& m, const std::vector<Rat>& b);

/// Internal workhorse shared by solve_right and minimal_polynomial: solves a
/// rectangular system given as rows x cols entries (row-major).
LinearSolution solve_rectangular(std::size_t rows, std::size_t cols,
                                 const std::vector<Rat>& entries, const std::vector<Rat>& b);

/// Delete row i and column i for every i in `indices` (0-based, duplicates
/// ignored). Throws std::out_of_range on an index >= dim.
QMatrix delete_rc(const QMatrix& m, const std::vector<std::size_t>& indices);

/// Monic polynomial p of least degree with p(M) = 0, in the variable u.
/// Divides the characteristic polynomial; degree <= dim. Requires dim >= 1.
Poly minimal_polynomial(const QMatrix& m);

/// Coefficients a_0..a_m of det(uI - M), ascending, computed by the
/// Faddeev-LeVerrier trace recursion (no determinants).
std::vector<Rat> charpoly_ascending(const QMatrix& m);

}  // namespace eulercat
