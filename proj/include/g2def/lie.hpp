#pragma once

#include <vector>

#include "g2def/matrix.hpp"

namespace g2def {

// One structure constant c_{ij}^k, with 1-based basis indices.
struct StructEntry {
    int i = 0, j = 0, k = 0;
    FieldElem c;
};

// Lie algebra presented by structure constants on a fixed basis e_1..e_n,
// [e_i, e_j] = sum_k c_{ij}^k e_k.  The presentation fixes antisymmetry in
// (i, j) at construction time; the Jacobi identity is a separate check so
// that deliberately broken test algebras can still be built.
class LieAlgebra {
public:
    LieAlgebra() = default;

    // Entries may list each unordered pair once (either order) or both; a
    // missing opposite order is filled in by antisymmetry, and conflicting
    // or repeated entries are rejected.
    LieAlgebra(int dim, const std::vector<StructEntry>& entries);

    int dim() const { return dim_; }

    // c_{ij}^k with 0-based indices.
    const FieldElem& c(int i, int j, int k) const { return table_[(i * dim_ + j) * dim_ + k]; }

    FieldVector bracket(const FieldVector& X, const FieldVector& Y) const;

    // ad(X) as a matrix: column j holds the coordinates of [X, e_j].
    FieldMatrix ad(const FieldVector& X) const;

    // Killing form B(X, Y) = trace(ad X . ad Y).
    FieldElem killing(const FieldVector& X, const FieldVector& Y) const;
    const FieldMatrix& killing_matrix() const { return killing_; }

    // Exact Jacobi identity over all basis triples.
    void check_jacobi() const;

    // Nonzero constants with i < j, 1-based, in lexicographic order.
    std::vector<StructEntry> sparse_constants() const;

private:
    int dim_ = 0;
    std::vector<FieldElem> table_; // c_{ij}^k at [(i*dim + j)*dim + k]
    FieldMatrix killing_;          // cached B(e_i, e_j)
};

} // namespace g2def
