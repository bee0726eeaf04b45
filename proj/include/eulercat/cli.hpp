#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>

#include "eulercat/category.hpp"
#include "eulercat/euler.hpp"

namespace eulercat {

// Process exit codes shared by every subcommand.
inline constexpr int kExitOk = 0;          // success; an undefined invariant is still success
inline constexpr int kExitCheckFailed = 1; // a verification or expectation failed
inline constexpr int kExitInputError = 2;  // unreadable, unparsable, or invalid input

// Canonical string forms used by the report, the verifier, and the example
// catalogue. Byte-stable by construction: tests compare them verbatim.
std::string render_rat(const std::optional<Rat>& value);                     // "undefined" when absent
std::string render_weighting(const std::optional<Weighting>& w);            // "none" when absent
std::string render_yes_no(bool b);
std::string render_verdict(CategoryMatrixResult::Verdict v);
std::string render_report(const EulerReport& report);

// Subcommand entry points. `format` overrides extension-based detection
// ("matrix" or "category"); each returns one of the exit codes above.
int cmd_report(const std::string& path, const std::optional<std::string>& format,
               std::size_t series_terms, std::ostream& out, std::ostream& err);
int cmd_series(const std::string& path, const std::optional<std::string>& format,
               std::size_t count, std::ostream& out, std::ostream& err);
int cmd_verify(const std::string& path, const std::optional<std::string>& format,
               std::ostream& out, std::ostream& err);
int cmd_examples(const std::string& filter, std::ostream& out);
int cmd_gen(std::size_t dim, std::uint64_t max_entry, std::uint64_t seed,
            const std::optional<std::string>& out_path, std::ostream& out, std::ostream& err);
int cmd_check_matrix(const std::string& path, std::uint64_t budget,
                     const std::optional<std::string>& witness_path, std::ostream& out,
                     std::ostream& err);

} // namespace eulercat
