#include "eulercat/euler.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "eulercat/exactmath.hpp"
#include "eulercat/minor_sums.hpp"

namespace eulercat {

Rat Weighting::total() const {
    Rat sum(0);
    for (const Rat& v : values) sum += v;
    return sum;
}

bool EulerReport::all_checks_ok() const {
    for (const auto& c : checks)
        if (c.status == CheckStatus::fail) return false;
    return true;
}

std::optional<Weighting> find_weighting(const CountMatrix& z, Side side) {
    QMatrix m = z.to_q();
    if (side == Side::coweighting) m = m.transpose();
    std::vector<Rat> ones(z.dim(), Rat(1));
    LinearSolution sol = solve_right(m, ones);
    if (!sol.consistent) return std::nullopt;
    return Weighting{std::move(sol.particular), side};
}

std::optional<Rat> euler_characteristic(const CountMatrix& z) {
    auto w = find_weighting(z, Side::weighting);
    if (!w) return std::nullopt;
    auto cw = find_weighting(z, Side::coweighting);
    if (!cw) return std::nullopt;
    return w->total();
}

std::optional<Rat> mobius_chi(const CountMatrix& z) {
    QMatrix m = z.to_q();
    Rat dt = det(m);
    if (dt == 0) return std::nullopt;
    return entry_sum(adjugate(m)) / dt;
}

RatFunc f_series_ratfunc(const CountMatrix& z) {
    std::size_t m = z.dim();
    QMatrix n = z.to_q() - QMatrix::identity(m);

    auto at = [&](long t) {  // I - (Z-I)t
        return QMatrix::identity(m) - n.scaled(Rat(t));
    };
    std::vector<std::pair<Rat, Rat>> den_pts, num_pts;
    for (std::size_t k = 0; k <= m; ++k)
        den_pts.emplace_back(Rat(static_cast<long>(k)), det(at(static_cast<long>(k))));
    for (std::size_t k = 0; k < m; ++k)
        num_pts.emplace_back(Rat(static_cast<long>(k)), adj_entry_sum(at(static_cast<long>(k))));
    return RatFunc(poly_interpolate(Var::t, num_pts), poly_interpolate(Var::t, den_pts));
}

std::pair<std::vector<Rat>, std::vector<Rat>> char_data_polynomial(const QMatrix& z) {
    std::size_t m = z.dim();
    // det(uI - Z) ascending; det(Z - uI) = (-1)^m det(uI - Z), and the
    // alternating convention flips the sign once more per degree.
    std::vector<Rat> a = charpoly_ascending(z);
    std::vector<Rat> d(m + 1);
    for (std::size_t r = 0; r <= m; ++r) d[r] = (m + r) % 2 == 0 ? a[r] : -a[r];

    // s(adj(Z - uI)) has degree <= m-1: interpolate it at m points where
    // Z - uI is nonsingular (integer u = 0, 1, 2, ..., skipping eigenvalues).
    std::vector<std::pair<Rat, Rat>> pts;
    for (long u = 0; pts.size() < m; ++u) {
        Rat uu(u);
        Rat char_at = 0;  // det(uI - Z) via the ascending coefficients
        for (std::size_t r = m + 1; r-- > 0;) char_at = char_at * uu + a[r];
        if (char_at == 0) continue;
        QMatrix shifted = z - QMatrix::identity(m).scaled(uu);
        pts.emplace_back(uu, entry_sum(adjugate(shifted)));
    }
    Poly sadj = poly_interpolate(Var::u, pts);
    std::vector<Rat> e(m + 1);
    for (std::size_t r = 0; r < m; ++r) e[r] = r % 2 == 0 ? sadj.coeff(r) : -sadj.coeff(r);
    return {std::move(d), std::move(e)};
}

CharPolyData char_data(const CountMatrix& z) {
    CharPolyData out;
    auto [dp, ep] = char_data_polynomial(z.to_q());
    if (z.dim() <= kSubsetLimit) {
        MinorSums ms = minor_sums(z.to_q());
        out.subset_ran = true;
        out.routes_agree = ms.d == dp && ms.e == ep;
        out.d = std::move(ms.d);
        out.e = std::move(ms.e);
    } else {
        out.d = std::move(dp);
        out.e = std::move(ep);
    }
    out.l = 0;
    while (out.d[out.l] == 0) ++out.l;  // terminates: d_m = 1
    return out;
}

namespace {

std::optional<Rat> chi_sigma_from(const CharPolyData& cd) {
    for (std::size_t r = 0; r < cd.l; ++r)
        if (cd.e[r] != 0) return std::nullopt;
    return cd.e[cd.l] / cd.d[cd.l];
}

RatFunc g_from(const CharPolyData& cd) {
    std::vector<Rat> num(cd.e.size()), den(cd.d.size());
    for (std::size_t r = 0; r < cd.e.size(); ++r) num[r] = r % 2 == 0 ? cd.e[r] : -cd.e[r];
    for (std::size_t r = 0; r < cd.d.size(); ++r) den[r] = r % 2 == 0 ? cd.d[r] : -cd.d[r];
    return RatFunc(Poly(Var::u, std::move(num)), Poly(Var::u, std::move(den)));
}

}  // namespace

RatFunc g_ratfunc(const CountMatrix& z) { return g_from(char_data(z)); }

std::optional<Rat> series_chi(const CountMatrix& z) { return chi_sigma_from(char_data(z)); }

bool is_diagonalizable(const CountMatrix& z) {
    if (z.dim() == 0) return true;
    return poly_squarefree(minimal_polynomial(z.to_q()));
}

Rat s_adj_permutation_oracle(const QMatrix& m) {
    std::size_t n = m.dim();
    if (n > 6) throw std::invalid_argument("s_adj_permutation_oracle: dimension too large");

    std::vector<std::size_t> perm(n);
    std::iota(perm.begin(), perm.end(), std::size_t{0});
    Rat total(0);
    do {
        int inversions = 0;
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = i + 1; j < n; ++j)
                if (perm[i] > perm[j]) ++inversions;
        // F of the diagonal family x_i = M_{i,perm(i)}
        Rat f_val(0);
        for (std::size_t i = 0; i < n; ++i) {
            Rat prod(1);
            for (std::size_t j = 0; j < n; ++j)
                if (j != i) prod *= m.at(j, perm[j]);
            f_val += prod;
        }
        total += inversions % 2 == 0 ? f_val : -f_val;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return total;
}

EulerReport build_report(const CountMatrix& z, std::size_t series_terms) {
    if (series_terms < 1) series_terms = 1;
    EulerReport r;
    r.z = z;
    r.weighting = find_weighting(z, Side::weighting);
    r.coweighting = find_weighting(z, Side::coweighting);
    if (r.weighting && r.coweighting) r.chi = r.weighting->total();

    QMatrix zq = z.to_q();
    Rat dt = det(zq);
    r.has_mobius = dt != 0;

    r.char_data = char_data(z);
    r.g = g_from(r.char_data);
    r.f = f_series_ratfunc(z);
    r.chi_sigma = chi_sigma_from(r.char_data);
    r.diagonalizable = is_diagonalizable(z);
    r.series_prefix = ratfunc_series(r.f, series_terms - 1);

    auto add = [&](std::string name, CheckStatus status, std::string detail = "") {
        r.checks.push_back({std::move(name), status, std::move(detail)});
    };
    auto verdict = [](bool ok) { return ok ? CheckStatus::ok : CheckStatus::fail; };

    if (!r.char_data.subset_ran)
        add("proposition_minor_sums", CheckStatus::skipped, "dimension exceeds subset limit");
    else
        add("proposition_minor_sums", verdict(r.char_data.routes_agree),
            r.char_data.routes_agree ? "" : "subset sums differ from polynomial expansion");

    bool fg = ratfunc_substitute_mobius(r.g) == r.f;
    add("fg_substitution", verdict(fg), fg ? "" : "(1-u)g(u) under u=1+1/t differs from f(t)");

    bool series_ok = true;
    QMatrix n = zq - QMatrix::identity(z.dim());
    QMatrix power = QMatrix::identity(z.dim());
    for (std::size_t k = 0; k < series_terms; ++k) {
        if (entry_sum(power) != r.series_prefix.coeffs[k]) series_ok = false;
        power = power * n;
    }
    add("series_matches_powers", verdict(series_ok),
        series_ok ? "" : "series coefficients differ from entry_sum((Z-I)^n)");

    std::optional<Rat> g0 = ratfunc_eval(r.g, Rat(0));
    bool two_path = g0.has_value() == r.chi_sigma.has_value() &&
                    (!g0 || *g0 == *r.chi_sigma);
    add("chi_sigma_two_path", verdict(two_path),
        two_path ? "" : "e_l/d_l disagrees with g(0)");

    if (r.weighting && r.coweighting)
        add("weighting_totals", verdict(r.weighting->total() == r.coweighting->total()),
            r.weighting->total() == r.coweighting->total()
                ? ""
                : "weighting and coweighting totals differ");
    else
        add("weighting_totals", CheckStatus::skipped, "chi undefined");

    if (r.has_mobius) {
        std::optional<Rat> mob = mobius_chi(z);
        bool ok = mob && r.chi && *mob == *r.chi;
        add("mobius_agreement", verdict(ok), ok ? "" : "entry_sum(Z^-1) differs from total weight");
    } else {
        add("mobius_agreement", CheckStatus::skipped, "Z is singular");
    }
    return r;
}

}  // namespace eulercat
