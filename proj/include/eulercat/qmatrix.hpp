#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "eulercat/rational.hpp"

namespace eulercat {

/// Dense square matrix over Q, row-major. The 0x0 matrix is a legal value.
class QMatrix {
 public:
    QMatrix() = default;
    explicit QMatrix(std::size_t dim) : dim_(dim), a_(dim * dim) {}
    QMatrix(std::size_t dim, std::vector<Rat> entries);

    static QMatrix identity(std::size_t dim);
    /// Rows given as nested initializer data; throws if the grid is not square.
    static QMatrix from_rows(const std::vector<std::vector<Rat>>& rows);
    static QMatrix from_ints(const std::vector<std::vector<long>>& rows);

    std::size_t dim() const { return dim_; }
    const Rat& at(std::size_t i, std::size_t j) const { return a_[i * dim_ + j]; }
    Rat& at(std::size_t i, std::size_t j) { return a_[i * dim_ + j]; }

    QMatrix transpose() const;

    QMatrix operator+(const QMatrix& o) const;
    QMatrix operator-(const QMatrix& o) const;
    QMatrix operator*(const QMatrix& o) const;
    QMatrix scaled(const Rat& c) const;

    bool operator==(const QMatrix& o) const = default;

 private:
    std::size_t dim_ = 0;
    std::vector<Rat> a_;
};

/// Square matrix of natural numbers: the arrow-count matrix of a finite
/// category (entry (i,j) counts arrows from object i to object j).
class CountMatrix {
 public:
    CountMatrix() = default;
    CountMatrix(std::size_t dim, std::vector<std::int64_t> entries);

    static CountMatrix from_rows(const std::vector<std::vector<std::int64_t>>& rows);

    std::size_t dim() const { return dim_; }
    std::int64_t at(std::size_t i, std::size_t j) const { return a_[i * dim_ + j]; }

    /// All diagonal entries >= 1.
    bool is_reflexive() const;
    /// Z_ij >= 1 and Z_jk >= 1 imply Z_ik >= 1.
    bool is_transitive() const;

    std::int64_t total() const;  // sum of all entries

    QMatrix to_q() const;

    bool operator==(const CountMatrix& o) const = default;

 private:
    std::size_t dim_ = 0;
    std::vector<std::int64_t> a_;
};

}  // namespace eulercat
