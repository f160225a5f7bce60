#pragma once

#include <cstddef>
#include <vector>

#include "g2def/field.hpp"

namespace g2def {

using FieldVector = std::vector<FieldElem>;

// Dense matrix over Q(i, √2, √3, √5).  0×n and n×0 shapes are legal.
class FieldMatrix {
public:
    FieldMatrix() = default;
    FieldMatrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), entries_(rows * cols) {}

    static FieldMatrix identity(std::size_t n);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    FieldElem& at(std::size_t i, std::size_t j) { return entries_[i * cols_ + j]; }
    const FieldElem& at(std::size_t i, std::size_t j) const { return entries_[i * cols_ + j]; }

    bool operator==(const FieldMatrix& o) const = default;

    FieldMatrix operator+(const FieldMatrix& o) const;
    FieldMatrix operator-(const FieldMatrix& o) const;
    FieldMatrix operator*(const FieldMatrix& o) const;
    FieldMatrix operator*(const FieldElem& s) const;
    FieldMatrix transpose() const;
    FieldVector apply(const FieldVector& v) const;

    // Reduce in place to reduced row echelon form using the first-nonzero
    // pivot in each column (deterministic); returns the pivot columns.
    std::vector<std::size_t> rref();

    std::size_t rank() const;
    // Exact basis of {x : Mx = 0}, one vector per free column in ascending
    // column order; a 0×n matrix yields the full standard basis.
    std::vector<FieldVector> nullspace() const;
    // Inverse of a square matrix; throws invariant_violation if singular.
    FieldMatrix inverse() const;

private:
    std::size_t rows_ = 0, cols_ = 0;
    std::vector<FieldElem> entries_;
};

// Exact coordinates with respect to a fixed list of independent columns.
// Row-reduces [M | I] once so that R·M = [I; 0]; then M·x = v has the
// solution x = (R·v) head, and v lies in the span iff the tail vanishes.
class Coordinatizer {
public:
    // columns: n×d with independent columns; throws invariant_violation
    // otherwise.
    explicit Coordinatizer(const FieldMatrix& columns);

    std::size_t dim() const { return d_; }
    bool in_span(const FieldVector& v) const;
    // Throws invariant_violation when v is outside the span.
    FieldVector coords(const FieldVector& v) const;

private:
    std::size_t n_ = 0, d_ = 0;
    FieldMatrix R_;
};

FieldElem dot(const FieldVector& a, const FieldVector& b);
FieldVector operator+(const FieldVector& a, const FieldVector& b);
FieldVector operator-(const FieldVector& a, const FieldVector& b);
FieldVector operator*(const FieldElem& s, const FieldVector& v);
bool is_zero(const FieldVector& v);

} // namespace g2def
