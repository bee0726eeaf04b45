#include "eulercat/category.hpp"

#include <algorithm>
#include <random>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>

namespace eulercat {

bool CatPresentation::is_identity_arrow(std::size_t a) const {
    for (std::size_t id : identities)
        if (id == a) return true;
    return false;
}

namespace {

std::string pair_detail(const CatPresentation& c, std::size_t g, std::size_t f) {
    return "(" + c.arrows[g].name + ", " + c.arrows[f].name + ")";
}

bool structurally_sound(const CatPresentation& c, std::vector<Violation>& out) {
    std::size_t nobj = c.objects.size();
    std::size_t narr = c.arrows.size();
    std::size_t before = out.size();

    std::set<std::string> obj_names;
    for (const auto& name : c.objects)
        if (!obj_names.insert(name).second)
            out.push_back({"duplicate object name", name});

    std::set<std::string> arr_names;
    for (const auto& a : c.arrows) {
        if (!arr_names.insert(a.name).second)
            out.push_back({"duplicate arrow name", a.name});
        if (a.src >= nobj || a.tgt >= nobj)
            out.push_back({"arrow endpoint out of range", a.name});
    }

    if (c.identities.size() != nobj)
        out.push_back({"identity assignment", "expected exactly one identity arrow per object"});
    else
        for (std::size_t i = 0; i < nobj; ++i) {
            std::size_t id = c.identities[i];
            if (id >= narr)
                out.push_back({"identity assignment",
                               "identity of " + c.objects[i] + " is not an arrow"});
            else if (c.arrows[id].src != i || c.arrows[id].tgt != i)
                out.push_back({"identity endpoints",
                               c.arrows[id].name + " is not an endomorphism of " + c.objects[i]});
        }

    if (c.compose.size() != narr) {
        out.push_back({"composition table shape", "expected one row per arrow"});
    } else {
        for (const auto& row : c.compose)
            if (row.size() != narr) {
                out.push_back({"composition table shape", "expected one column per arrow"});
                break;
            }
    }
    return out.size() == before;
}

}  // namespace

std::vector<Violation> validate(const CatPresentation& c) {
    std::vector<Violation> out;
    if (!structurally_sound(c, out)) return out;

    std::size_t narr = c.arrows.size();
    for (std::size_t g = 0; g < narr; ++g)
        for (std::size_t f = 0; f < narr; ++f) {
            bool composable = c.arrows[f].tgt == c.arrows[g].src;
            std::size_t v = c.compose[g][f];
            if (!composable) {
                if (v != kNoArrow)
                    out.push_back({"composition defined for non-composable pair",
                                   pair_detail(c, g, f)});
                continue;
            }
            if (v == kNoArrow)
                out.push_back({"composition undefined for composable pair", pair_detail(c, g, f)});
            else if (v >= narr)
                out.push_back({"composition entry out of range", pair_detail(c, g, f)});
            else if (c.arrows[v].src != c.arrows[f].src || c.arrows[v].tgt != c.arrows[g].tgt)
                out.push_back({"source/target mismatch",
                               pair_detail(c, g, f) + " -> " + c.arrows[v].name});
        }
    if (!out.empty()) return out;  // the law checks below assume a sound total table

    for (std::size_t f = 0; f < narr; ++f) {
        std::size_t right = c.identities[c.arrows[f].src];
        std::size_t left = c.identities[c.arrows[f].tgt];
        if (c.compose[f][right] != f)
            out.push_back({"identity law", c.arrows[f].name + " ∘ " + c.arrows[right].name +
                                               " != " + c.arrows[f].name});
        if (c.compose[left][f] != f)
            out.push_back({"identity law", c.arrows[left].name + " ∘ " + c.arrows[f].name +
                                               " != " + c.arrows[f].name});
    }

    for (std::size_t f = 0; f < narr; ++f)
        for (std::size_t g = 0; g < narr; ++g) {
            if (c.arrows[f].tgt != c.arrows[g].src) continue;
            std::size_t gf = c.compose[g][f];
            for (std::size_t h = 0; h < narr; ++h) {
                if (c.arrows[g].tgt != c.arrows[h].src) continue;
                if (c.compose[h][gf] != c.compose[c.compose[h][g]][f])
                    out.push_back({"associativity",
                                   "(" + c.arrows[h].name + ", " + c.arrows[g].name + ", " +
                                       c.arrows[f].name + ")"});
            }
        }
    return out;
}

namespace {

void require_valid(const CatPresentation& c, const char* who) {
    std::vector<Violation> v = validate(c);
    if (!v.empty())
        throw std::invalid_argument(std::string(who) + ": invalid category: " + v.front().law +
                                    " " + v.front().detail);
}

}  // namespace

CountMatrix count_matrix(const CatPresentation& c) {
    require_valid(c, "count_matrix");
    std::size_t m = c.objects.size();
    std::vector<std::int64_t> entries(m * m, 0);
    for (const auto& a : c.arrows) entries[a.src * m + a.tgt] += 1;
    return CountMatrix(m, std::move(entries));
}

std::uint64_t count_nondegenerate_chains(const CatPresentation& c, std::size_t n) {
    require_valid(c, "count_nondegenerate_chains");
    std::size_t m = c.objects.size();
    if (n == 0) return m;

    std::vector<std::vector<std::size_t>> out_arrows(m);
    for (std::size_t a = 0; a < c.arrows.size(); ++a)
        if (!c.is_identity_arrow(a)) out_arrows[c.arrows[a].src].push_back(a);

    // Plain depth-first walk over composable sequences of non-identity
    // arrows. No memoization: that would collapse this into the matrix-power
    // computation it exists to check.
    auto walk = [&](auto&& self, std::size_t obj, std::size_t remaining) -> std::uint64_t {
        if (remaining == 0) return 1;
        std::uint64_t total = 0;
        for (std::size_t a : out_arrows[obj]) total += self(self, c.arrows[a].tgt, remaining - 1);
        return total;
    };
    std::uint64_t total = 0;
    for (std::size_t x = 0; x < m; ++x) total += walk(walk, x, n);
    return total;
}

CatPresentation skeleton(const CatPresentation& c) {
    require_valid(c, "skeleton");
    std::size_t m = c.objects.size();
    std::size_t narr = c.arrows.size();

    auto isomorphic = [&](std::size_t a, std::size_t b) {
        for (std::size_t f = 0; f < narr; ++f) {
            if (c.arrows[f].src != a || c.arrows[f].tgt != b) continue;
            for (std::size_t g = 0; g < narr; ++g) {
                if (c.arrows[g].src != b || c.arrows[g].tgt != a) continue;
                if (c.compose[g][f] == c.identities[a] && c.compose[f][g] == c.identities[b])
                    return true;
            }
        }
        return false;
    };

    // Class representative = smallest isomorphic object index.
    std::vector<std::size_t> rep(m);
    for (std::size_t i = 0; i < m; ++i) rep[i] = i;
    for (std::size_t b = 0; b < m; ++b)
        for (std::size_t a = 0; a < b; ++a)
            if (rep[a] == a && rep[b] == b && isomorphic(a, b)) rep[b] = a;

    std::vector<std::size_t> obj_map(m, kNoArrow);
    CatPresentation s;
    for (std::size_t i = 0; i < m; ++i)
        if (rep[i] == i) {
            obj_map[i] = s.objects.size();
            s.objects.push_back(c.objects[i]);
        }

    std::vector<std::size_t> arr_map(narr, kNoArrow);
    for (std::size_t a = 0; a < narr; ++a)
        if (obj_map[c.arrows[a].src] != kNoArrow && obj_map[c.arrows[a].tgt] != kNoArrow) {
            arr_map[a] = s.arrows.size();
            s.arrows.push_back(
                {c.arrows[a].name, obj_map[c.arrows[a].src], obj_map[c.arrows[a].tgt]});
        }

    s.identities.resize(s.objects.size());
    for (std::size_t i = 0; i < m; ++i)
        if (obj_map[i] != kNoArrow) s.identities[obj_map[i]] = arr_map[c.identities[i]];

    std::size_t kept = s.arrows.size();
    s.compose.assign(kept, std::vector<std::size_t>(kept, kNoArrow));
    for (std::size_t g = 0; g < narr; ++g)
        for (std::size_t f = 0; f < narr; ++f) {
            if (arr_map[g] == kNoArrow || arr_map[f] == kNoArrow) continue;
            if (c.compose[g][f] == kNoArrow) continue;
            s.compose[arr_map[g]][arr_map[f]] = arr_map[c.compose[g][f]];
        }
    return s;
}

CatPresentation category_from_matrix(const CountMatrix& z) {
    std::size_t m = z.dim();
    for (std::size_t i = 0; i < m; ++i)
        if (z.at(i, i) < 2)
            throw std::invalid_argument("category_from_matrix: diagonal entry " +
                                        std::to_string(z.at(i, i)) + " < 2 at object " +
                                        std::to_string(i + 1));
    if (!z.is_transitive())
        throw std::invalid_argument("category_from_matrix: matrix is not transitive");

    CatPresentation c;
    for (std::size_t i = 0; i < m; ++i) c.objects.push_back("a" + std::to_string(i + 1));

    c.identities.resize(m);
    // phi[i][j] = the designated non-identity arrow i -> j: the lowest-indexed
    // one, which is the first listed except on the diagonal where the identity
    // comes first.
    std::vector<std::size_t> phi(m * m, kNoArrow);
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < m; ++j) {
            std::int64_t count = z.at(i, j);
            std::string stem = "f" + std::to_string(i + 1) + "_" + std::to_string(j + 1) + "_";
            if (i == j) {
                c.identities[i] = c.arrows.size();
                c.arrows.push_back({"1_a" + std::to_string(i + 1), i, i});
                phi[i * m + j] = c.arrows.size();
                for (std::int64_t k = 1; k < count; ++k)
                    c.arrows.push_back({stem + std::to_string(k), i, j});
            } else if (count > 0) {
                phi[i * m + j] = c.arrows.size();
                for (std::int64_t k = 1; k <= count; ++k)
                    c.arrows.push_back({stem + std::to_string(k), i, j});
            }
        }

    std::size_t narr = c.arrows.size();
    c.compose.assign(narr, std::vector<std::size_t>(narr, kNoArrow));
    for (std::size_t f = 0; f < narr; ++f)
        for (std::size_t g = 0; g < narr; ++g) {
            if (c.arrows[f].tgt != c.arrows[g].src) continue;
            if (f == c.identities[c.arrows[f].src])
                c.compose[g][f] = g;
            else if (g == c.identities[c.arrows[g].tgt])
                c.compose[g][f] = f;
            else
                c.compose[g][f] = phi[c.arrows[f].src * m + c.arrows[g].tgt];
        }
    return c;
}

namespace {

// Backtracking search used by is_category_matrix. Arrows are laid out
// hom-set by hom-set in row-major (src, tgt) order; the identity of each
// object is chosen from its diagonal hom-set, unit laws are filled in, and
// the remaining composition cells are assigned depth-first in a fixed order
// with associativity propagated to a fixpoint after every assignment.
class CategorySearch {
 public:
    explicit CategorySearch(const CountMatrix& z) : m_(z.dim()) {
        hom_start_.assign(m_ * m_ + 1, 0);
        for (std::size_t i = 0; i < m_; ++i)
            for (std::size_t j = 0; j < m_; ++j) {
                std::size_t cell = i * m_ + j;
                hom_start_[cell + 1] =
                    hom_start_[cell] + static_cast<std::size_t>(z.at(i, j));
            }
        narr_ = hom_start_[m_ * m_];
        src_.resize(narr_);
        tgt_.resize(narr_);
        for (std::size_t i = 0; i < m_; ++i)
            for (std::size_t j = 0; j < m_; ++j)
                for (std::size_t a = hom_start_[i * m_ + j]; a < hom_start_[i * m_ + j + 1]; ++a) {
                    src_[a] = i;
                    tgt_[a] = j;
                }
    }

    std::optional<CatPresentation> run() {
        ids_.assign(m_, 0);
        return try_identities(0);
    }

 private:
    std::size_t hom_begin(std::size_t i, std::size_t j) const { return hom_start_[i * m_ + j]; }
    std::size_t hom_end(std::size_t i, std::size_t j) const { return hom_start_[i * m_ + j + 1]; }

    std::optional<CatPresentation> try_identities(std::size_t obj) {
        if (obj == m_) return search_table();
        for (std::size_t a = hom_begin(obj, obj); a < hom_end(obj, obj); ++a) {
            ids_[obj] = a;
            if (auto found = try_identities(obj + 1)) return found;
        }
        return std::nullopt;
    }

    bool set_cell(std::size_t g, std::size_t f, std::size_t v) {
        std::size_t& cell = comp_[g * narr_ + f];
        if (cell != kNoArrow) return cell == v;
        cell = v;
        trail_.emplace_back(g, f);
        --unassigned_;
        return true;
    }

    void undo_to(std::size_t mark) {
        while (trail_.size() > mark) {
            auto [g, f] = trail_.back();
            trail_.pop_back();
            comp_[g * narr_ + f] = kNoArrow;
            ++unassigned_;
        }
    }

    bool is_id(std::size_t a) const { return ids_[src_[a]] == a && src_[a] == tgt_[a]; }

    // Enforce h∘(g∘f) = (h∘g)∘f on every triple whose value can currently be
    // chased on both sides; force the last missing cell when one side is
    // known. Returns false on contradiction.
    bool propagate() {
        bool changed = true;
        while (changed) {
            changed = false;
            for (std::size_t f = 0; f < narr_; ++f)
                for (std::size_t g = 0; g < narr_; ++g) {
                    if (tgt_[f] != src_[g]) continue;
                    std::size_t gf = comp_[g * narr_ + f];
                    for (std::size_t h = 0; h < narr_; ++h) {
                        if (tgt_[g] != src_[h]) continue;
                        std::size_t hg = comp_[h * narr_ + g];
                        std::size_t lhs =
                            gf == kNoArrow ? kNoArrow : comp_[h * narr_ + gf];
                        std::size_t rhs =
                            hg == kNoArrow ? kNoArrow : comp_[hg * narr_ + f];
                        if (lhs != kNoArrow && rhs != kNoArrow) {
                            if (lhs != rhs) return false;
                        } else if (lhs != kNoArrow && hg != kNoArrow) {
                            if (!set_cell(hg, f, lhs)) return false;
                            changed = true;
                        } else if (rhs != kNoArrow && gf != kNoArrow) {
                            if (!set_cell(h, gf, rhs)) return false;
                            changed = true;
                        }
                    }
                }
        }
        return true;
    }

    std::optional<CatPresentation> search_table() {
        comp_.assign(narr_ * narr_, kNoArrow);
        trail_.clear();

        cells_.clear();
        unassigned_ = 0;
        for (std::size_t g = 0; g < narr_; ++g)
            for (std::size_t f = 0; f < narr_; ++f) {
                if (tgt_[f] != src_[g]) continue;
                ++unassigned_;
                if (!is_id(f) && !is_id(g)) cells_.emplace_back(g, f);
            }
        for (std::size_t f = 0; f < narr_; ++f) {
            if (!set_cell(f, ids_[src_[f]], f)) return std::nullopt;
            if (!set_cell(ids_[tgt_[f]], f, f)) return std::nullopt;
        }
        if (!propagate()) return std::nullopt;
        return dfs(0);
    }

    std::optional<CatPresentation> dfs(std::size_t pos) {
        while (pos < cells_.size() && comp_[cells_[pos].first * narr_ + cells_[pos].second] != kNoArrow)
            ++pos;
        if (unassigned_ == 0) return build_witness();
        if (pos == cells_.size()) return std::nullopt;  // cannot happen, defensive

        auto [g, f] = cells_[pos];
        std::size_t i = src_[f];
        std::size_t k = tgt_[g];
        for (std::size_t cand = hom_begin(i, k); cand < hom_end(i, k); ++cand) {
            std::size_t mark = trail_.size();
            if (set_cell(g, f, cand) && propagate())
                if (auto found = dfs(pos + 1)) return found;
            undo_to(mark);
        }
        return std::nullopt;
    }

    CatPresentation build_witness() const {
        CatPresentation c;
        for (std::size_t i = 0; i < m_; ++i) c.objects.push_back("a" + std::to_string(i + 1));
        for (std::size_t a = 0; a < narr_; ++a)
            c.arrows.push_back({"x" + std::to_string(a + 1), src_[a], tgt_[a]});
        c.identities = ids_;
        c.compose.assign(narr_, std::vector<std::size_t>(narr_, kNoArrow));
        for (std::size_t g = 0; g < narr_; ++g)
            for (std::size_t f = 0; f < narr_; ++f)
                if (tgt_[f] == src_[g]) c.compose[g][f] = comp_[g * narr_ + f];
        return c;
    }

    std::size_t m_;
    std::size_t narr_ = 0;
    std::vector<std::size_t> hom_start_, src_, tgt_, ids_, comp_;
    std::vector<std::pair<std::size_t, std::size_t>> cells_, trail_;
    std::size_t unassigned_ = 0;
};

}  // namespace

CategoryMatrixResult is_category_matrix(const CountMatrix& z, std::uint64_t budget) {
    using Verdict = CategoryMatrixResult::Verdict;
    // Necessary conditions: a category has identities (diagonal >= 1) and
    // composites (transitivity). These refute regardless of budget.
    if (!z.is_reflexive() || !z.is_transitive()) return {Verdict::no, std::nullopt};
    if (static_cast<std::uint64_t>(z.total()) > budget) return {Verdict::inconclusive, std::nullopt};

    CategorySearch search(z);
    if (auto witness = search.run()) return {Verdict::yes, std::move(witness)};
    return {Verdict::no, std::nullopt};
}

namespace {

// Uniform draw from [0, range) by rejection, so results depend only on the
// mt19937_64 stream and stay reproducible across standard libraries.
std::uint64_t bounded_draw(std::mt19937_64& rng, std::uint64_t range) {
    std::uint64_t threshold = (0 - range) % range;
    std::uint64_t x;
    do {
        x = rng();
    } while (x < threshold);
    return x % range;
}

}  // namespace

CountMatrix random_category_matrix(std::size_t m, std::uint64_t max_entry, std::uint64_t seed) {
    if (m < 1) throw std::invalid_argument("random_category_matrix: m must be >= 1");
    if (max_entry < 2) throw std::invalid_argument("random_category_matrix: max_entry must be >= 2");
    std::mt19937_64 rng(seed);
    std::vector<std::int64_t> entries(m * m);
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < m; ++j)
            entries[i * m + j] = i == j
                                     ? static_cast<std::int64_t>(2 + bounded_draw(rng, max_entry - 1))
                                     : static_cast<std::int64_t>(1 + bounded_draw(rng, max_entry));
    return CountMatrix(m, std::move(entries));
}

CountMatrix duplicate_object(const CountMatrix& z, std::size_t i) {
    std::size_t m = z.dim();
    if (i >= m) throw std::out_of_range("duplicate_object: object index out of range");
    auto map = [&](std::size_t k) { return k < m ? k : i; };
    std::vector<std::int64_t> entries((m + 1) * (m + 1));
    for (std::size_t a = 0; a <= m; ++a)
        for (std::size_t b = 0; b <= m; ++b) entries[a * (m + 1) + b] = z.at(map(a), map(b));
    return CountMatrix(m + 1, std::move(entries));
}

}  // namespace eulercat
