#include "eulercat/exactmath.hpp"

#include <algorithm>
#include <stdexcept>

namespace eulercat {

// Bareiss fraction-free elimination. Denominators are cleared row by row so
// the elimination runs on integers; every division in the update step is
// exact, which bounds intermediate entry growth.
Rat det(const QMatrix& m) {
    const std::size_t n = m.dim();
    if (n == 0) return Rat(1);

    std::vector<Int> a(n * n);
    Int scale(1);  // det(m) = det(a) / scale
    for (std::size_t i = 0; i < n; ++i) {
        Int rowlcm(1);
        for (std::size_t j = 0; j < n; ++j) {
            mpz_lcm(rowlcm.get_mpz_t(), rowlcm.get_mpz_t(), m.at(i, j).get_den_mpz_t());
        }
        for (std::size_t j = 0; j < n; ++j) {
            const Rat& v = m.at(i, j);
            a[i * n + j] = v.get_num() * (rowlcm / v.get_den());
        }
        scale *= rowlcm;
    }

    int sign = 1;
    Int prev(1);
    for (std::size_t k = 0; k + 1 < n; ++k) {
        std::size_t pivot = k;
        while (pivot < n && a[pivot * n + k] == 0) ++pivot;
        if (pivot == n) return Rat(0);
        if (pivot != k) {
            for (std::size_t j = k; j < n; ++j) std::swap(a[pivot * n + j], a[k * n + j]);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                Int t = a[i * n + j] * a[k * n + k] - a[i * n + k] * a[k * n + j];
                mpz_divexact(a[i * n + j].get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
            }
            a[i * n + k] = 0;
        }
        prev = a[k * n + k];
    }

    Int d = a[n * n - 1];
    if (sign < 0) d = -d;
    return make_rat(d, scale);
}

QMatrix adjugate(const QMatrix& m) {
    const std::size_t n = m.dim();
    if (n == 0) return QMatrix(0);
    QMatrix adj(n);
    if (n == 1) {
        adj.at(0, 0) = 1;  // det of the empty minor
        return adj;
    }
    QMatrix minor(n - 1);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            // adj_{ij} = (-1)^{i+j} det(m with row j and column i deleted)
            std::size_t r = 0;
            for (std::size_t row = 0; row < n; ++row) {
                if (row == j) continue;
                std::size_t c = 0;
                for (std::size_t col = 0; col < n; ++col) {
                    if (col == i) continue;
                    minor.at(r, c) = m.at(row, col);
                    ++c;
                }
                ++r;
            }
            Rat cof = det(minor);
            if ((i + j) & 1) cof = -cof;
            adj.at(i, j) = cof;
        }
    }
    return adj;
}

Rat entry_sum(const QMatrix& m) {
    Rat s(0);
    for (std::size_t i = 0; i < m.dim(); ++i)
        for (std::size_t j = 0; j < m.dim(); ++j) s += m.at(i, j);
    return s;
}

Rat adj_entry_sum(const QMatrix& m) {
    const std::size_t n = m.dim();
    QMatrix mj = m;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) mj.at(i, j) += 1;
    return det(mj) - det(m);
}

LinearSolution solve_rectangular(std::size_t rows, std::size_t cols,
                                 const std::vector<Rat>& entries, const std::vector<Rat>& b) {
    if (entries.size() != rows * cols || b.size() != rows) {
        throw std::invalid_argument("solve_rectangular: shape mismatch");
    }
    const std::size_t w = cols + 1;  // augmented width
    std::vector<Rat> a(rows * w);
    for (std::size_t i = 0; i < rows; ++i) {
        for (std::size_t j = 0; j < cols; ++j) a[i * w + j] = entries[i * cols + j];
        a[i * w + cols] = b[i];
    }

    // Gauss-Jordan to reduced row echelon form; first nonzero entry pivots.
    std::vector<std::size_t> pivot_col;
    std::size_t row = 0;
    for (std::size_t col = 0; col < cols && row < rows; ++col) {
        std::size_t pr = row;
        while (pr < rows && a[pr * w + col] == 0) ++pr;
        if (pr == rows) continue;
        if (pr != row) {
            for (std::size_t j = col; j < w; ++j) std::swap(a[pr * w + j], a[row * w + j]);
        }
        const Rat inv = Rat(1) / a[row * w + col];
        for (std::size_t j = col; j < w; ++j) a[row * w + j] *= inv;
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == row) continue;
            const Rat f = a[i * w + col];
            if (f == 0) continue;
            for (std::size_t j = col; j < w; ++j) a[i * w + j] -= f * a[row * w + j];
        }
        pivot_col.push_back(col);
        ++row;
    }

    LinearSolution sol;
    sol.nullity = cols - pivot_col.size();
    for (std::size_t i = row; i < rows; ++i) {
        if (a[i * w + cols] != 0) {
            sol.consistent = false;
            return sol;
        }
    }
    sol.consistent = true;
    sol.particular.assign(cols, Rat(0));  // free variables stay zero
    for (std::size_t r = 0; r < pivot_col.size(); ++r) {
        sol.particular[pivot_col[r]] = a[r * w + cols];
    }
    return sol;
}

LinearSolution solve_right(const QMatrix& m, const std::vector<Rat>& b) {
    if (b.size() != m.dim()) throw std::invalid_argument("solve_right: rhs length mismatch");
    std::vector<Rat> entries;
    entries.reserve(m.dim() * m.dim());
    for (std::size_t i = 0; i < m.dim(); ++i)
        for (std::size_t j = 0; j < m.dim(); ++j) entries.push_back(m.at(i, j));
    return solve_rectangular(m.dim(), m.dim(), entries, b);
}

QMatrix delete_rc(const QMatrix& m, const std::vector<std::size_t>& indices) {
    const std::size_t n = m.dim();
    std::vector<bool> drop(n, false);
    for (std::size_t i : indices) {
        if (i >= n) throw std::out_of_range("delete_rc: index out of range");
        drop[i] = true;
    }
    std::vector<std::size_t> keep;
    for (std::size_t i = 0; i < n; ++i)
        if (!drop[i]) keep.push_back(i);
    QMatrix out(keep.size());
    for (std::size_t i = 0; i < keep.size(); ++i)
        for (std::size_t j = 0; j < keep.size(); ++j) out.at(i, j) = m.at(keep[i], keep[j]);
    return out;
}

Poly minimal_polynomial(const QMatrix& m) {
    const std::size_t n = m.dim();
    if (n == 0) throw std::invalid_argument("minimal_polynomial: dim must be >= 1");

    // Krylov search on vectorized powers: the least k for which M^k is a
    // linear combination of I, M, ..., M^{k-1} gives the minimal polynomial.
    std::vector<QMatrix> powers;
    powers.push_back(QMatrix::identity(n));
    for (std::size_t k = 1; k <= n; ++k) {
        powers.push_back(powers.back() * m);
        const std::size_t rows = n * n;
        std::vector<Rat> a(rows * k);
        std::vector<Rat> b(rows);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) {
                const std::size_t r = i * n + j;
                for (std::size_t c = 0; c < k; ++c) a[r * k + c] = powers[c].at(i, j);
                b[r] = powers[k].at(i, j);
            }
        LinearSolution s = solve_rectangular(rows, k, a, b);
        if (s.consistent) {
            std::vector<Rat> coeffs(k + 1);
            for (std::size_t c = 0; c < k; ++c) coeffs[c] = -s.particular[c];
            coeffs[k] = 1;
            return Poly(Var::u, std::move(coeffs));
        }
    }
    throw std::logic_error("minimal_polynomial: no annihilating polynomial up to dim");
}

std::vector<Rat> charpoly_ascending(const QMatrix& m) {
    const std::size_t n = m.dim();
    // Faddeev-LeVerrier: N_1 = M, c_{n-k} = -tr(N_k)/k, N_{k+1} = M (N_k + c_{n-k} I).
    std::vector<Rat> c(n + 1);
    c[n] = 1;
    QMatrix nk = m;
    for (std::size_t k = 1; k <= n; ++k) {
        Rat tr(0);
        for (std::size_t i = 0; i < n; ++i) tr += nk.at(i, i);
        c[n - k] = -tr / Rat(static_cast<long>(k));
        if (k < n) {
            for (std::size_t i = 0; i < n; ++i) nk.at(i, i) += c[n - k];
            nk = m * nk;
        }
    }
    return c;
}

}  // namespace eulercat
