#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "eulercat/qmatrix.hpp"

namespace eulercat {

/// Marks an empty cell in a composition table (pair not composable, or not
/// yet filled in during search).
inline constexpr std::size_t kNoArrow = static_cast<std::size_t>(-1);

struct Arrow {
    std::string name;
    std::size_t src = 0;
    std::size_t tgt = 0;
    bool operator==(const Arrow&) const = default;
};

/// A finite category as explicit data: objects, arrows, an identity arrow
/// per object, and the full composition table. compose[g][f] holds g∘f and
/// must be kNoArrow exactly when tgt(f) != src(g). Object order is part of
/// the data (the count matrix depends on it).
struct CatPresentation {
    std::vector<std::string> objects;
    std::vector<Arrow> arrows;
    std::vector<std::size_t> identities;           // object index -> arrow index
    std::vector<std::vector<std::size_t>> compose;  // [g][f] -> g∘f

    bool is_identity_arrow(std::size_t a) const;

    bool operator==(const CatPresentation&) const = default;
};

struct Violation {
    std::string law;
    std::string detail;
};

/// Empty result iff c is a well-formed category: structurally sound
/// (indices in range, names unique, tables correctly shaped), composition
/// total on composable pairs and typed correctly, identity and
/// associativity laws satisfied. Each violation names the law broken and
/// the witnessing data.
std::vector<Violation> validate(const CatPresentation& c);

/// Z with Z_ij = number of arrows from object i to object j.
/// Throws std::invalid_argument when c does not validate.
CountMatrix count_matrix(const CatPresentation& c);

/// Number of chains x_0 -> x_1 -> ... -> x_n of composable arrows none of
/// which is an identity (the nondegenerate n-simplices of the nerve).
/// Counted by explicit path enumeration, deliberately not by matrix powers:
/// this function is the independent oracle the matrix formulas are tested
/// against. Throws std::invalid_argument when c does not validate.
std::uint64_t count_nondegenerate_chains(const CatPresentation& c, std::size_t n);

/// Full subcategory on one representative per isomorphism class (the first
/// object of each class in presentation order). Isomorphisms are found by
/// exhaustive hom-set search. Throws std::invalid_argument when c does not
/// validate.
CatPresentation skeleton(const CatPresentation& c);

/// Realizes a count matrix as an actual category: identities 1_i, a
/// designated non-identity arrow phi_ij for each inhabited hom-set (the
/// lowest-indexed one), and composition g∘f = phi_ik whenever neither
/// factor is an identity. Requires Z transitive with every diagonal entry
/// >= 2; throws std::invalid_argument otherwise.
CatPresentation category_from_matrix(const CountMatrix& z);

struct CategoryMatrixResult {
    enum class Verdict { yes, no, inconclusive };
    Verdict verdict;
    /// Present iff verdict == yes: the first category found in the search
    /// order (deterministic).
    std::optional<CatPresentation> witness;
};

/// Decides by exhaustive backtracking whether some category has count
/// matrix Z. Identities are assigned first, then composition cells are
/// filled in a fixed order with unit-law forcing and associativity
/// propagation. Matrices that fail the reflexivity or transitivity
/// necessary conditions are refuted immediately; matrices with more than
/// `budget` total arrows come back inconclusive.
CategoryMatrixResult is_category_matrix(const CountMatrix& z, std::uint64_t budget = 10);

/// Random m×m matrix with off-diagonal entries uniform in [1, max_entry]
/// and diagonal entries uniform in [2, max_entry]; such a matrix is always
/// the count matrix of a category. Deterministic for a fixed seed (the
/// bounded draws use explicit rejection sampling, so the stream does not
/// depend on the standard library's distribution internals).
CountMatrix random_category_matrix(std::size_t m, std::uint64_t max_entry, std::uint64_t seed);

/// (m+1)x(m+1) matrix modelling the adjunction of an object isomorphic to
/// object i: row and column i are replicated as the new last row/column.
/// i is 0-based; throws std::out_of_range when i >= dim.
CountMatrix duplicate_object(const CountMatrix& z, std::size_t i);

}  // namespace eulercat
