#include "eulercat/cli.hpp"

#include <ostream>
#include <sstream>
#include <utility>

#include "eulercat/catalogue.hpp"
#include "eulercat/io.hpp"
#include "eulercat/ratfunc.hpp"

namespace eulercat {

std::string render_rat(const std::optional<Rat>& value) {
    return value ? rat_str(*value) : "undefined";
}

std::string render_weighting(const std::optional<Weighting>& w) {
    return w ? vec_str(w->values) : "none";
}

std::string render_yes_no(bool b) { return b ? "yes" : "no"; }

std::string render_verdict(CategoryMatrixResult::Verdict v) {
    switch (v) {
        case CategoryMatrixResult::Verdict::yes: return "yes";
        case CategoryMatrixResult::Verdict::no: return "no";
        case CategoryMatrixResult::Verdict::inconclusive: return "inconclusive";
    }
    return "inconclusive";
}

std::string render_report(const EulerReport& report) {
    const std::size_t m = report.z.dim();
    std::ostringstream out;
    out << "matrix (" << m << "x" << m << "):\n";
    for (std::size_t i = 0; i < m; ++i) {
        out << " ";
        for (std::size_t j = 0; j < m; ++j) out << " " << report.z.at(i, j);
        out << "\n";
    }
    out << "weighting: " << render_weighting(report.weighting) << "\n";
    out << "coweighting: " << render_weighting(report.coweighting) << "\n";
    out << "chi: " << render_rat(report.chi) << "\n";
    out << "mobius_inversion: " << render_yes_no(report.has_mobius) << "\n";
    out << "d: " << list_str(report.char_data.d) << "\n";
    out << "e: " << list_str(report.char_data.e) << "\n";
    out << "l: " << report.char_data.l << "\n";
    out << "g(u): " << to_string(report.g) << "\n";
    out << "f(t): " << to_string(report.f) << "\n";
    out << "chi_sigma: " << render_rat(report.chi_sigma) << "\n";
    out << "diagonalizable: " << render_yes_no(report.diagonalizable) << "\n";
    out << "series: " << to_string(report.series_prefix) << "\n";
    return std::move(out).str();
}

namespace {

InputFormat resolve_format(const std::string& path, const std::optional<std::string>& format) {
    if (!format) return detect_format(path);
    if (*format == "matrix") return InputFormat::matrix;
    if (*format == "category") return InputFormat::category;
    throw ParseError("unknown format '" + *format + "' (expected 'matrix' or 'category')");
}

struct LoadedInput {
    CountMatrix z;
    std::optional<CatPresentation> presentation;
};

// Parses the input and, for category files, checks the axioms. Throws
// ParseError with a readable message on any failure.
LoadedInput load_input(const std::string& path, const std::optional<std::string>& format) {
    const InputFormat fmt = resolve_format(path, format);
    const std::string text = read_file(path);
    if (fmt == InputFormat::matrix) {
        return {parse_matrix_file(text), std::nullopt};
    }
    CatPresentation cat = parse_category_file(text);
    const std::vector<Violation> violations = validate(cat);
    if (!violations.empty()) {
        throw ParseError("invalid category: " + violations.front().law + ": " +
                         violations.front().detail);
    }
    CountMatrix z = count_matrix(cat);
    return {std::move(z), std::move(cat)};
}

void print_check(std::ostream& out, const CheckResult& check) {
    out << "check " << check.name << ": ";
    switch (check.status) {
        case CheckStatus::ok: out << "ok"; break;
        case CheckStatus::fail: out << "FAIL (" << check.detail << ")"; break;
        case CheckStatus::skipped: out << "skipped (" << check.detail << ")"; break;
    }
    out << "\n";
}

// Chain counts above this many arrows get slow; the verifier skips the
// enumeration rather than stall on large inputs.
constexpr std::uint64_t kChainArrowLimit = 12;
constexpr std::size_t kChainDepth = 6;

CheckResult chains_check(const CatPresentation& cat, const EulerReport& report) {
    CheckResult result;
    result.name = "series_matches_chains";
    if (cat.arrows.size() > kChainArrowLimit) {
        result.status = CheckStatus::skipped;
        result.detail = "arrow count exceeds enumeration limit";
        return result;
    }
    for (std::size_t n = 0; n <= kChainDepth && n < report.series_prefix.coeffs.size(); ++n) {
        const Rat counted = make_rat(Int(count_nondegenerate_chains(cat, n)), Int(1));
        if (counted != report.series_prefix.coeffs[n]) {
            result.status = CheckStatus::fail;
            result.detail = "length " + std::to_string(n) + ": enumerated " + rat_str(counted) +
                            ", series coefficient " + rat_str(report.series_prefix.coeffs[n]);
            return result;
        }
    }
    result.status = CheckStatus::ok;
    return result;
}

} // namespace

int cmd_report(const std::string& path, const std::optional<std::string>& format,
               std::size_t series_terms, std::ostream& out, std::ostream& err) {
    try {
        const LoadedInput input = load_input(path, format);
        out << render_report(build_report(input.z, series_terms));
        return kExitOk;
    } catch (const ParseError& e) {
        err << "error: " << e.what() << "\n";
        return kExitInputError;
    }
}

int cmd_series(const std::string& path, const std::optional<std::string>& format,
               std::size_t count, std::ostream& out, std::ostream& err) {
    try {
        const LoadedInput input = load_input(path, format);
        out << to_string(build_report(input.z, count).series_prefix) << "\n";
        return kExitOk;
    } catch (const ParseError& e) {
        err << "error: " << e.what() << "\n";
        return kExitInputError;
    }
}

int cmd_verify(const std::string& path, const std::optional<std::string>& format,
               std::ostream& out, std::ostream& err) {
    InputFormat fmt;
    std::string text;
    try {
        fmt = resolve_format(path, format);
        text = read_file(path);
    } catch (const ParseError& e) {
        err << "error: " << e.what() << "\n";
        return kExitInputError;
    }

    std::optional<CatPresentation> presentation;
    CountMatrix z;
    if (fmt == InputFormat::category) {
        try {
            presentation = parse_category_file(text);
        } catch (const ParseError& e) {
            err << "error: " << e.what() << "\n";
            return kExitInputError;
        }
        const std::vector<Violation> violations = validate(*presentation);
        if (!violations.empty()) {
            for (const auto& v : violations) {
                out << "check category_axioms: FAIL (" << v.law << ": " << v.detail << ")\n";
            }
            out << "result: FAIL\n";
            return kExitCheckFailed;
        }
        out << "check category_axioms: ok\n";
        z = count_matrix(*presentation);
    } else {
        try {
            z = parse_matrix_file(text);
        } catch (const ParseError& e) {
            err << "error: " << e.what() << "\n";
            return kExitInputError;
        }
    }

    const EulerReport report = build_report(z);
    bool all_ok = true;
    bool two_path_ok = false;
    for (const auto& check : report.checks) {
        print_check(out, check);
        if (check.status == CheckStatus::fail) all_ok = false;
        if (check.name == "chi_sigma_two_path" && check.status == CheckStatus::ok) {
            two_path_ok = true;
        }
    }
    if (presentation) {
        const CheckResult chains = chains_check(*presentation, report);
        print_check(out, chains);
        if (chains.status == CheckStatus::fail) all_ok = false;
    }

    out << "chi_sigma: " << render_rat(report.chi_sigma)
        << (two_path_ok ? " (consistent on both paths)" : "") << "\n";
    out << "result: " << (all_ok ? "PASS" : "FAIL") << "\n";
    return all_ok ? kExitOk : kExitCheckFailed;
}

int cmd_examples(const std::string& filter, std::ostream& out) {
    return run_catalogue(builtin_catalogue(), filter, out);
}

int cmd_gen(std::size_t dim, std::uint64_t max_entry, std::uint64_t seed,
            const std::optional<std::string>& out_path, std::ostream& out, std::ostream& err) {
    if (dim < 1) {
        err << "error: -m must be at least 1\n";
        return kExitInputError;
    }
    if (max_entry < 2) {
        err << "error: --max-entry must be at least 2 (identities force positive diagonals)\n";
        return kExitInputError;
    }
    const CountMatrix z = random_category_matrix(dim, max_entry, seed);
    std::ostringstream text;
    text << "# random category matrix: m=" << dim << " max-entry=" << max_entry
         << " seed=" << seed << "\n"
         << serialize_matrix(z);
    if (!out_path) {
        out << text.str();
        return kExitOk;
    }
    try {
        write_file(*out_path, text.str());
    } catch (const ParseError& e) {
        err << "error: " << e.what() << "\n";
        return kExitInputError;
    }
    return kExitOk;
}

int cmd_check_matrix(const std::string& path, std::uint64_t budget,
                     const std::optional<std::string>& witness_path, std::ostream& out,
                     std::ostream& err) {
    CountMatrix z;
    try {
        z = parse_matrix_file(read_file(path));
    } catch (const ParseError& e) {
        err << "error: " << e.what() << "\n";
        return kExitInputError;
    }
    const CategoryMatrixResult result = is_category_matrix(z, budget);
    out << render_verdict(result.verdict) << "\n";
    if (witness_path) {
        if (!result.witness) {
            err << "error: no witness to emit (verdict is " << render_verdict(result.verdict)
                << ")\n";
            return kExitInputError;
        }
        try {
            write_file(*witness_path, serialize_category(*result.witness));
        } catch (const ParseError& e) {
            err << "error: " << e.what() << "\n";
            return kExitInputError;
        }
    }
    return kExitOk;
}

} // namespace eulercat
