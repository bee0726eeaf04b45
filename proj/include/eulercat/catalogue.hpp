#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "eulercat/qmatrix.hpp"

namespace eulercat {

/// A worked example together with its independently established invariants,
/// stored in the same canonical string forms the CLI prints. An empty
/// expectation string means "not checked for this entry".
struct CatalogueEntry {
    std::string name;
    std::string group;
    CountMatrix z;
    std::string chi;              // "p/q" or "undefined"
    std::string chi_sigma;        // likewise
    std::string g;                // rational function in u, "num / den"
    std::string f;                // rational function in t
    std::string weighting;        // "(a, b, ...)" or "none"
    std::string coweighting;      // likewise
    std::string diagonalizable;   // "yes" / "no"
    std::string category_verdict; // is_category_matrix under the default budget
};

/// The built-in examples: the cyclic monoids, the one-sided and two-sided
/// degenerate cases, an inflation pair, and a non-category matrix.
const std::vector<CatalogueEntry>& builtin_catalogue();

/// Recomputes every entry whose name or group contains `filter` (all entries
/// when the filter is empty) and compares against the stored expectations,
/// printing one line per entry and a summary. Returns 0 when everything
/// matches, 1 otherwise.
int run_catalogue(const std::vector<CatalogueEntry>& entries, const std::string& filter,
                  std::ostream& out);

} // namespace eulercat
