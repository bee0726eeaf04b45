#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "eulercat/qmatrix.hpp"
#include "eulercat/ratfunc.hpp"

namespace eulercat {

enum class Side { weighting, coweighting };

/// Exact solution of Z·w = (1,…,1) (weighting) or wᵀ·Z = (1,…,1)
/// (coweighting).
struct Weighting {
    std::vector<Rat> values;
    Side side = Side::weighting;
    Rat total() const;
};

/// Coefficients of det(Z − uI) and s(adj(Z − uI)) in the alternating
/// convention det(Z − uI) = Σ_r (−1)^r d_r u^r (and likewise e_r), which
/// makes d_r the sum of det(Z\R) over r-element deletion sets R and e_r the
/// matching sum of adjugate entry sums. l is the least r with d_r ≠ 0
/// (always exists: d_m = 1).
struct CharPolyData {
    std::vector<Rat> d, e;
    std::size_t l = 0;
    bool subset_ran = false;   // the 2^m subset enumeration ran (dim within limit)
    bool routes_agree = true;  // subset sums matched the polynomial expansion exactly
};

enum class CheckStatus { ok, fail, skipped };

struct CheckResult {
    std::string name;
    CheckStatus status = CheckStatus::ok;
    std::string detail;  // reason when failed or skipped
};

/// Everything the front end prints, plus the outcomes of the internal
/// cross-checks (each one an identity that must hold; a failure means an
/// implementation bug, never bad input).
struct EulerReport {
    CountMatrix z;
    std::optional<Weighting> weighting;
    std::optional<Weighting> coweighting;
    std::optional<Rat> chi;
    bool has_mobius = false;
    RatFunc f = RatFunc::zero(Var::t);
    RatFunc g = RatFunc::zero(Var::u);
    CharPolyData char_data;
    std::optional<Rat> chi_sigma;
    bool diagonalizable = false;
    SeriesTruncation series_prefix;
    std::vector<CheckResult> checks;

    bool all_checks_ok() const;
};

/// Canonical solution (free variables zero) of the weighting equation on
/// the requested side, or absent when the system is inconsistent.
std::optional<Weighting> find_weighting(const CountMatrix& z, Side side);

/// Total weight, defined exactly when both a weighting and a coweighting
/// exist (their totals then agree).
std::optional<Rat> euler_characteristic(const CountMatrix& z);

/// entry_sum(Z⁻¹) when Z is invertible (Möbius inversion), absent otherwise.
std::optional<Rat> mobius_chi(const CountMatrix& z);

/// The rational function in t whose power series at 0 is Σ c_n tⁿ with
/// c_n = entry_sum((Z−I)ⁿ): s(adj(I−(Z−I)t)) / det(I−(Z−I)t). Computed
/// directly in t by exact interpolation, independently of g_ratfunc.
RatFunc f_series_ratfunc(const CountMatrix& z);

/// g(u) = s(adj(Z−uI)) / det(Z−uI), normalized. Related to f by the change
/// of variable u = 1 + 1/t: f(t) = (1−u)·g(u).
RatFunc g_ratfunc(const CountMatrix& z);

/// Dimension cap for the 2^m subset enumeration inside char_data.
inline constexpr std::size_t kSubsetLimit = 12;

/// The polynomial-expansion route for (d, e) alone: det(Z−uI) via the exact
/// characteristic-polynomial trace recursion, s(adj(Z−uI)) via cofactor
/// adjugates at interpolation points chosen off the spectrum. No dimension
/// limit. Exposed separately so tests can compare it with the subset route.
std::pair<std::vector<Rat>, std::vector<Rat>> char_data_polynomial(const QMatrix& z);

/// Computes (d, e, l) by BOTH the subset enumeration and the polynomial
/// expansion when dim ≤ kSubsetLimit and records whether they agreed (they
/// must: the two are equal as a theorem). Above the limit the polynomial
/// route runs alone and subset_ran is false.
CharPolyData char_data(const CountMatrix& z);

/// χ_Σ = e_l/d_l, defined exactly when e_r = 0 for all r < l. Agrees with
/// g(0) in definedness and value; the coefficient form is the source of
/// truth and the g(0) evaluation is a cross-check in build_report.
std::optional<Rat> series_chi(const CountMatrix& z);

/// True iff the minimal polynomial of Z is squarefree.
bool is_diagonalizable(const CountMatrix& z);

/// s(adj(M)) by literal expansion over all permutations:
/// Σ_σ sgn(σ)·F(M_{1σ(1)}, …, M_{mσ(m)}) with F(x₁,…,x_m) = Σ_i Π_{j≠i} x_j.
/// Factorial cost; throws std::invalid_argument for dim > 6. This is a test
/// oracle, independent of both the cofactor and determinant-update routes.
Rat s_adj_permutation_oracle(const QMatrix& m);

/// Populates every field and runs the internal cross-checks: subset vs
/// polynomial (d, e); f = (1−u)g under substitution; series coefficients vs
/// entry_sum((Z−I)ⁿ); χ_Σ vs g(0); weighting totals; Möbius vs weighting χ.
EulerReport build_report(const CountMatrix& z, std::size_t series_terms = 8);

}  // namespace eulercat
