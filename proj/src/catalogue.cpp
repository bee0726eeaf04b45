#include "eulercat/catalogue.hpp"

#include <algorithm>
#include <cstdint>
#include <ostream>
#include <string>
#include <vector>

#include "eulercat/cli.hpp"
#include "eulercat/euler.hpp"

namespace eulercat {

namespace {

CatalogueEntry cyclic_monoid(std::uint64_t n, std::string chi, std::string g, std::string f,
                             std::string w) {
    CatalogueEntry e;
    e.name = "monoid-order-" + std::to_string(n);
    e.group = "monoids";
    e.z = CountMatrix::from_rows({{static_cast<std::int64_t>(n)}});
    e.chi = chi;
    e.chi_sigma = chi; // one idempotent class, both invariants coincide
    e.g = std::move(g);
    e.f = std::move(f);
    e.weighting = w;
    e.coweighting = std::move(w);
    e.diagonalizable = "yes";
    e.category_verdict = "yes";
    return e;
}

std::vector<CatalogueEntry> make_catalogue() {
    std::vector<CatalogueEntry> entries;

    entries.push_back(cyclic_monoid(1, "1", "[-1] / [-1, 1]", "[1] / [1]", "(1)"));
    entries.push_back(cyclic_monoid(2, "1/2", "[-1] / [-2, 1]", "[-1] / [-1, 1]", "(1/2)"));
    entries.push_back(cyclic_monoid(3, "1/3", "[-1] / [-3, 1]", "[-1/2] / [-1/2, 1]", "(1/3)"));
    entries.push_back(cyclic_monoid(6, "1/6", "[-1] / [-6, 1]", "[-1/5] / [-1/5, 1]", "(1/6)"));

    {
        // Coweighting but no weighting; the series invariant still exists.
        CatalogueEntry e;
        e.name = "coweighting-no-weighting-4x4";
        e.group = "one-sided";
        e.z = CountMatrix::from_rows({{2, 2, 1, 1}, {2, 2, 1, 2}, {1, 1, 1, 1}, {0, 0, 0, 1}});
        e.chi = "undefined";
        e.chi_sigma = "1";
        e.g = "[2, -4] / [2, -5, 1]";
        e.f = "[-2, -1] / [-1/2, 3/2, 1]";
        e.weighting = "none";
        e.coweighting = "(0, 0, 1, 0)";
        e.diagonalizable = "yes";
        e.category_verdict = "inconclusive"; // 18 arrows, over the default search budget
        entries.push_back(e);
    }
    {
        // Weighting and coweighting with equal totals, but the series
        // invariant hits the pole: e_r is nonzero below l.
        CatalogueEntry e;
        e.name = "weighting-no-series-4x4";
        e.group = "one-sided";
        e.z = CountMatrix::from_rows({{6, 6, 15, 9}, {6, 6, 6, 6}, {6, 6, 9, 7}, {6, 30, 9, 15}});
        e.chi = "1/6";
        e.chi_sigma = "undefined";
        e.g = "[-4, -4] / [0, -36, 1]";
        e.f = "[-4/35, -8/35] / [-1/35, 34/35, 1]";
        e.weighting = "(1/6, 0, 0, 0)";
        e.coweighting = "(0, 1/6, 0, 0)";
        e.diagonalizable = "no";
        e.category_verdict = "inconclusive";
        entries.push_back(e);
    }
    {
        // Singular yet transitive and reflexive; neither invariant exists.
        CatalogueEntry e;
        e.name = "no-weightings-2x2";
        e.group = "degenerate";
        e.z = CountMatrix::from_rows({{2, 4}, {1, 2}});
        e.chi = "undefined";
        e.chi_sigma = "undefined";
        e.g = "[-1, -2] / [0, -4, 1]";
        e.f = "[-2/3, -1] / [-1/3, 2/3, 1]";
        e.weighting = "none";
        e.coweighting = "none";
        e.diagonalizable = "yes";
        e.category_verdict = "yes";
        entries.push_back(e);
    }
    {
        // Both invariants are defined and they disagree: 1/2 versus 1/3.
        CatalogueEntry e;
        e.name = "chi-vs-chi-sigma-3x3";
        e.group = "differing-values";
        e.z = CountMatrix::from_rows({{2, 2, 2}, {2, 2, 2}, {2, 8, 5}});
        e.chi = "1/2";
        e.chi_sigma = "1/3";
        e.g = "[-3] / [-9, 1]";
        e.f = "[-3/8] / [-1/8, 1]";
        e.weighting = "(1/2, 0, 0)";
        e.coweighting = "(1/2, 0, 0)";
        e.diagonalizable = "no";
        e.category_verdict = "inconclusive";
        entries.push_back(e);
    }
    {
        CatalogueEntry e;
        e.name = "inflation-base-2x2";
        e.group = "inflation";
        e.z = CountMatrix::from_rows({{3, 3}, {2, 2}});
        e.chi = "undefined";
        e.chi_sigma = "2/5";
        e.g = "[-2] / [-5, 1]";
        e.f = "[-1/2] / [-1/4, 1]";
        e.weighting = "none";
        e.coweighting = "(1/3, 0)";
        e.diagonalizable = "yes";
        e.category_verdict = "yes";
        entries.push_back(e);
    }
    {
        // The same matrix with its second object duplicated. chi_sigma moves
        // from 2/5 to 3/7: the series invariant is not stable under
        // equivalence-preserving object duplication.
        CatalogueEntry e;
        e.name = "inflation-duplicated-3x3";
        e.group = "inflation";
        e.z = CountMatrix::from_rows({{3, 3, 3}, {2, 2, 2}, {2, 2, 2}});
        e.chi = "undefined";
        e.chi_sigma = "3/7";
        e.g = "[-3] / [-7, 1]";
        e.f = "[-1/2] / [-1/6, 1]";
        e.weighting = "none";
        e.coweighting = "(1/3, 0, 0)";
        e.diagonalizable = "yes";
        e.category_verdict = "inconclusive";
        entries.push_back(e);
    }
    {
        // Weighting exists but the matrix is not diagonalizable, and the
        // series invariant is undefined: diagonalizability matters.
        CatalogueEntry e;
        e.name = "nondiagonalizable-3x3";
        e.group = "sharpness";
        e.z = CountMatrix::from_rows({{2, 3, 5}, {2, 3, 5}, {2, 1, 3}});
        e.chi = "undefined";
        e.chi_sigma = "undefined";
        e.g = "[-2, -3] / [0, -8, 1]";
        e.f = "[-3/7, -5/7] / [-1/7, 6/7, 1]";
        e.weighting = "(1/2, 0, 0)";
        e.coweighting = "none";
        e.diagonalizable = "no";
        e.category_verdict = "inconclusive";
        entries.push_back(e);
    }
    {
        // Weighting total 1/2, chi_sigma 2/5: without a coweighting the
        // weighting total need not equal the series value.
        CatalogueEntry e;
        e.name = "two-weighting-totals-2x2";
        e.group = "sharpness";
        e.z = CountMatrix::from_rows({{2, 3}, {2, 3}});
        e.chi = "undefined";
        e.chi_sigma = "2/5";
        e.g = "[-2] / [-5, 1]";
        e.f = "[-1/2] / [-1/4, 1]";
        e.weighting = "(1/2, 0)";
        e.coweighting = "none";
        e.diagonalizable = "yes";
        e.category_verdict = "yes";
        entries.push_back(e);
    }
    {
        // Reflexive and transitive, yet no category has this hom-count
        // matrix; the refutation is by exhaustive composition search.
        CatalogueEntry e;
        e.name = "non-category-2x2";
        e.group = "non-category";
        e.z = CountMatrix::from_rows({{1, 2}, {1, 2}});
        e.chi = "undefined";
        e.category_verdict = "no";
        entries.push_back(e);
    }

    return entries;
}

struct FieldCheck {
    const char* label;
    const std::string* expected;
    std::string actual;
};

} // namespace

const std::vector<CatalogueEntry>& builtin_catalogue() {
    static const std::vector<CatalogueEntry> entries = make_catalogue();
    return entries;
}

int run_catalogue(const std::vector<CatalogueEntry>& entries, const std::string& filter,
                  std::ostream& out) {
    std::vector<const CatalogueEntry*> selected;
    for (const auto& e : entries) {
        if (filter.empty() || e.name.find(filter) != std::string::npos ||
            e.group.find(filter) != std::string::npos) {
            selected.push_back(&e);
        }
    }
    if (selected.empty()) {
        out << "no catalogue entries match filter '" << filter << "'\n";
        return 0;
    }

    std::size_t width = 0;
    for (const auto* e : selected) width = std::max(width, e->name.size());

    std::size_t mismatched = 0;
    for (const auto* e : selected) {
        const EulerReport report = build_report(e->z);

        std::vector<FieldCheck> fields;
        fields.push_back({"chi", &e->chi, render_rat(report.chi)});
        fields.push_back({"chi_sigma", &e->chi_sigma, render_rat(report.chi_sigma)});
        fields.push_back({"g", &e->g, to_string(report.g)});
        fields.push_back({"f", &e->f, to_string(report.f)});
        fields.push_back({"weighting", &e->weighting, render_weighting(report.weighting)});
        fields.push_back({"coweighting", &e->coweighting, render_weighting(report.coweighting)});
        fields.push_back(
            {"diagonalizable", &e->diagonalizable, render_yes_no(report.diagonalizable)});
        if (!e->category_verdict.empty()) {
            fields.push_back({"category", &e->category_verdict,
                              render_verdict(is_category_matrix(e->z).verdict)});
        }

        std::string complaint;
        bool internal_ok = true;
        for (const auto& check : report.checks) {
            if (check.status == CheckStatus::fail) {
                internal_ok = false;
                complaint = "internal check " + check.name + " failed";
            }
        }
        for (const auto& field : fields) {
            if (field.expected->empty() || *field.expected == field.actual) continue;
            if (!complaint.empty()) complaint += "; ";
            complaint += std::string(field.label) + ": expected " + *field.expected + ", got " +
                         field.actual;
        }

        out << e->name << std::string(width - e->name.size() + 2, ' ');
        if (complaint.empty() && internal_ok) {
            out << "PASS\n";
        } else {
            out << "FAIL (" << complaint << ")\n";
            ++mismatched;
        }
    }

    out << "checked " << selected.size() << " of " << entries.size() << " entries: ";
    if (mismatched == 0) {
        out << "all match\n";
        return 0;
    }
    out << mismatched << (mismatched == 1 ? " mismatch\n" : " mismatches\n");
    return 1;
}

} // namespace eulercat
