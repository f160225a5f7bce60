#include "g2def/matrix.hpp"

#include <algorithm>

#include "g2def/errors.hpp"

namespace g2def {

FieldMatrix FieldMatrix::identity(std::size_t n) {
    FieldMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = FieldElem(1);
    return m;
}

FieldMatrix FieldMatrix::operator+(const FieldMatrix& o) const {
    require(rows_ == o.rows_ && cols_ == o.cols_, "matrix shape mismatch in +");
    FieldMatrix out(rows_, cols_);
    for (std::size_t k = 0; k < entries_.size(); ++k)
        out.entries_[k] = entries_[k] + o.entries_[k];
    return out;
}

FieldMatrix FieldMatrix::operator-(const FieldMatrix& o) const {
    require(rows_ == o.rows_ && cols_ == o.cols_, "matrix shape mismatch in -");
    FieldMatrix out(rows_, cols_);
    for (std::size_t k = 0; k < entries_.size(); ++k)
        out.entries_[k] = entries_[k] - o.entries_[k];
    return out;
}

FieldMatrix FieldMatrix::operator*(const FieldMatrix& o) const {
    require(cols_ == o.rows_, "matrix shape mismatch in *");
    FieldMatrix out(rows_, o.cols_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t k = 0; k < cols_; ++k) {
            const FieldElem& a = at(i, k);
            if (a.is_zero()) continue;
            for (std::size_t j = 0; j < o.cols_; ++j) {
                const FieldElem& b = o.at(k, j);
                if (!b.is_zero()) out.at(i, j) += a * b;
            }
        }
    return out;
}

FieldMatrix FieldMatrix::operator*(const FieldElem& s) const {
    FieldMatrix out(rows_, cols_);
    for (std::size_t k = 0; k < entries_.size(); ++k) out.entries_[k] = entries_[k] * s;
    return out;
}

FieldMatrix FieldMatrix::transpose() const {
    FieldMatrix out(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) out.at(j, i) = at(i, j);
    return out;
}

FieldVector FieldMatrix::apply(const FieldVector& v) const {
    require(v.size() == cols_, "matrix/vector shape mismatch");
    FieldVector out(rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j)
            if (!at(i, j).is_zero() && !v[j].is_zero()) out[i] += at(i, j) * v[j];
    return out;
}

std::vector<std::size_t> FieldMatrix::rref() {
    std::vector<std::size_t> pivots;
    std::size_t row = 0;
    for (std::size_t col = 0; col < cols_ && row < rows_; ++col) {
        // First nonzero entry in this column at or below `row` is the pivot.
        std::size_t p = row;
        while (p < rows_ && at(p, col).is_zero()) ++p;
        if (p == rows_) continue;
        if (p != row)
            for (std::size_t j = 0; j < cols_; ++j) std::swap(at(p, j), at(row, j));
        FieldElem scale = at(row, col).inv();
        for (std::size_t j = col; j < cols_; ++j) at(row, j) = at(row, j) * scale;
        for (std::size_t i = 0; i < rows_; ++i) {
            if (i == row || at(i, col).is_zero()) continue;
            FieldElem f = at(i, col);
            for (std::size_t j = col; j < cols_; ++j)
                at(i, j) -= f * at(row, j);
        }
        pivots.push_back(col);
        ++row;
    }
    return pivots;
}

std::size_t FieldMatrix::rank() const {
    FieldMatrix m(*this);
    return m.rref().size();
}

std::vector<FieldVector> FieldMatrix::nullspace() const {
    FieldMatrix m(*this);
    std::vector<std::size_t> pivots = m.rref();
    std::vector<bool> is_pivot(cols_, false);
    for (std::size_t p : pivots) is_pivot[p] = true;
    std::vector<FieldVector> basis;
    for (std::size_t free = 0; free < cols_; ++free) {
        if (is_pivot[free]) continue;
        FieldVector x(cols_);
        x[free] = FieldElem(1);
        for (std::size_t r = 0; r < pivots.size(); ++r)
            x[pivots[r]] = -m.at(r, free);
        basis.push_back(std::move(x));
    }
    return basis;
}

FieldMatrix FieldMatrix::inverse() const {
    require(rows_ == cols_, "inverse of non-square matrix");
    FieldMatrix aug(rows_, 2 * cols_);
    for (std::size_t i = 0; i < rows_; ++i) {
        for (std::size_t j = 0; j < cols_; ++j) aug.at(i, j) = at(i, j);
        aug.at(i, cols_ + i) = FieldElem(1);
    }
    std::vector<std::size_t> pivots = aug.rref();
    require(pivots.size() == rows_ &&
                (rows_ == 0 || pivots.back() == rows_ - 1),
            "matrix is singular");
    FieldMatrix out(rows_, cols_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) out.at(i, j) = aug.at(i, cols_ + j);
    return out;
}

Coordinatizer::Coordinatizer(const FieldMatrix& columns)
    : n_(columns.rows()), d_(columns.cols()) {
    FieldMatrix aug(n_, d_ + n_);
    for (std::size_t i = 0; i < n_; ++i) {
        for (std::size_t j = 0; j < d_; ++j) aug.at(i, j) = columns.at(i, j);
        aug.at(i, d_ + i) = FieldElem(1);
    }
    auto pivots = aug.rref();
    for (std::size_t t = 0; t < d_; ++t)
        require(t < pivots.size() && pivots[t] == t, "coordinatizer columns are not independent");
    R_ = FieldMatrix(n_, n_);
    for (std::size_t i = 0; i < n_; ++i)
        for (std::size_t j = 0; j < n_; ++j) R_.at(i, j) = aug.at(i, d_ + j);
}

bool Coordinatizer::in_span(const FieldVector& v) const {
    require(v.size() == n_, "vector length mismatch in coordinatizer");
    FieldVector y = R_.apply(v);
    for (std::size_t i = d_; i < n_; ++i)
        if (!y[i].is_zero()) return false;
    return true;
}

FieldVector Coordinatizer::coords(const FieldVector& v) const {
    require(v.size() == n_, "vector length mismatch in coordinatizer");
    FieldVector y = R_.apply(v);
    for (std::size_t i = d_; i < n_; ++i)
        require(y[i].is_zero(), "vector is outside the span of the coordinatizer columns");
    y.resize(d_);
    return y;
}

FieldElem dot(const FieldVector& a, const FieldVector& b) {
    require(a.size() == b.size(), "vector length mismatch in dot");
    FieldElem s;
    for (std::size_t k = 0; k < a.size(); ++k)
        if (!a[k].is_zero() && !b[k].is_zero()) s += a[k] * b[k];
    return s;
}

FieldVector operator+(const FieldVector& a, const FieldVector& b) {
    require(a.size() == b.size(), "vector length mismatch in +");
    FieldVector out(a.size());
    for (std::size_t k = 0; k < a.size(); ++k) out[k] = a[k] + b[k];
    return out;
}

FieldVector operator-(const FieldVector& a, const FieldVector& b) {
    require(a.size() == b.size(), "vector length mismatch in -");
    FieldVector out(a.size());
    for (std::size_t k = 0; k < a.size(); ++k) out[k] = a[k] - b[k];
    return out;
}

FieldVector operator*(const FieldElem& s, const FieldVector& v) {
    FieldVector out(v.size());
    for (std::size_t k = 0; k < v.size(); ++k) out[k] = s * v[k];
    return out;
}

bool is_zero(const FieldVector& v) {
    return std::all_of(v.begin(), v.end(), [](const FieldElem& x) { return x.is_zero(); });
}

} // namespace g2def
