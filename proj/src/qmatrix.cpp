#include "eulercat/qmatrix.hpp"

#include <stdexcept>

namespace eulercat {

QMatrix::QMatrix(std::size_t dim, std::vector<Rat> entries) : dim_(dim), a_(std::move(entries)) {
    if (a_.size() != dim_ * dim_) {
        throw std::invalid_argument("QMatrix: entry count does not match dimension");
    }
}

QMatrix QMatrix::identity(std::size_t dim) {
    QMatrix m(dim);
    for (std::size_t i = 0; i < dim; ++i) m.at(i, i) = 1;
    return m;
}

QMatrix QMatrix::from_rows(const std::vector<std::vector<Rat>>& rows) {
    QMatrix m(rows.size());
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (rows[i].size() != rows.size()) {
            throw std::invalid_argument("QMatrix::from_rows: grid is not square");
        }
        for (std::size_t j = 0; j < rows[i].size(); ++j) m.at(i, j) = rows[i][j];
    }
    return m;
}

QMatrix QMatrix::from_ints(const std::vector<std::vector<long>>& rows) {
    QMatrix m(rows.size());
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (rows[i].size() != rows.size()) {
            throw std::invalid_argument("QMatrix::from_ints: grid is not square");
        }
        for (std::size_t j = 0; j < rows[i].size(); ++j) m.at(i, j) = rows[i][j];
    }
    return m;
}

QMatrix QMatrix::transpose() const {
    QMatrix m(dim_);
    for (std::size_t i = 0; i < dim_; ++i)
        for (std::size_t j = 0; j < dim_; ++j) m.at(j, i) = at(i, j);
    return m;
}

QMatrix QMatrix::operator+(const QMatrix& o) const {
    if (dim_ != o.dim_) throw std::invalid_argument("QMatrix +: dimension mismatch");
    QMatrix m(dim_);
    for (std::size_t k = 0; k < a_.size(); ++k) m.a_[k] = a_[k] + o.a_[k];
    return m;
}

QMatrix QMatrix::operator-(const QMatrix& o) const {
    if (dim_ != o.dim_) throw std::invalid_argument("QMatrix -: dimension mismatch");
    QMatrix m(dim_);
    for (std::size_t k = 0; k < a_.size(); ++k) m.a_[k] = a_[k] - o.a_[k];
    return m;
}

QMatrix QMatrix::operator*(const QMatrix& o) const {
    if (dim_ != o.dim_) throw std::invalid_argument("QMatrix *: dimension mismatch");
    QMatrix m(dim_);
    for (std::size_t i = 0; i < dim_; ++i)
        for (std::size_t k = 0; k < dim_; ++k) {
            const Rat& aik = at(i, k);
            if (aik == 0) continue;
            for (std::size_t j = 0; j < dim_; ++j) m.at(i, j) += aik * o.at(k, j);
        }
    return m;
}

QMatrix QMatrix::scaled(const Rat& c) const {
    QMatrix m(dim_);
    for (std::size_t k = 0; k < a_.size(); ++k) m.a_[k] = a_[k] * c;
    return m;
}

CountMatrix::CountMatrix(std::size_t dim, std::vector<std::int64_t> entries)
    : dim_(dim), a_(std::move(entries)) {
    if (a_.size() != dim_ * dim_) {
        throw std::invalid_argument("CountMatrix: entry count does not match dimension");
    }
    for (std::int64_t v : a_) {
        if (v < 0) throw std::invalid_argument("CountMatrix: negative entry");
    }
}

CountMatrix CountMatrix::from_rows(const std::vector<std::vector<std::int64_t>>& rows) {
    std::vector<std::int64_t> flat;
    flat.reserve(rows.size() * rows.size());
    for (const auto& r : rows) {
        if (r.size() != rows.size()) {
            throw std::invalid_argument("CountMatrix::from_rows: grid is not square");
        }
        flat.insert(flat.end(), r.begin(), r.end());
    }
    return CountMatrix(rows.size(), std::move(flat));
}

bool CountMatrix::is_reflexive() const {
    for (std::size_t i = 0; i < dim_; ++i)
        if (at(i, i) < 1) return false;
    return true;
}

bool CountMatrix::is_transitive() const {
    for (std::size_t i = 0; i < dim_; ++i)
        for (std::size_t j = 0; j < dim_; ++j) {
            if (at(i, j) < 1) continue;
            for (std::size_t k = 0; k < dim_; ++k)
                if (at(j, k) >= 1 && at(i, k) < 1) return false;
        }
    return true;
}

std::int64_t CountMatrix::total() const {
    std::int64_t s = 0;
    for (std::int64_t v : a_) s += v;
    return s;
}

QMatrix CountMatrix::to_q() const {
    QMatrix m(dim_);
    for (std::size_t i = 0; i < dim_; ++i)
        for (std::size_t j = 0; j < dim_; ++j) m.at(i, j) = make_rat(at(i, j));
    return m;
}

}  // namespace eulercat
