#include "g2def/lie.hpp"

#include <string>

#include "g2def/errors.hpp"

namespace g2def {

namespace {

std::string triple_str(int i, int j, int k) {
    return "(" + std::to_string(i) + "," + std::to_string(j) + "," + std::to_string(k) + ")";
}

} // namespace

LieAlgebra::LieAlgebra(int dim, const std::vector<StructEntry>& entries)
    : dim_(dim), table_(static_cast<std::size_t>(dim) * dim * dim) {
    require(dim >= 1, "Lie algebra dimension must be positive");
    std::vector<char> given(table_.size(), 0);
    for (const auto& e : entries) {
        require(e.i >= 1 && e.i <= dim && e.j >= 1 && e.j <= dim && e.k >= 1 && e.k <= dim,
                "structure constant index out of range at " + triple_str(e.i, e.j, e.k));
        require(!(e.i == e.j && !e.c.is_zero()),
                "structure constant c_ii must vanish at " + triple_str(e.i, e.j, e.k));
        std::size_t idx = (static_cast<std::size_t>(e.i - 1) * dim + (e.j - 1)) * dim + (e.k - 1);
        require(!given[idx], "structure constant listed twice at " + triple_str(e.i, e.j, e.k));
        given[idx] = 1;
        table_[idx] = e.c;
    }
    // Fill in or cross-check the opposite order.
    for (int i = 0; i < dim; ++i)
        for (int j = 0; j < dim; ++j)
            for (int k = 0; k < dim; ++k) {
                std::size_t ij = (static_cast<std::size_t>(i) * dim + j) * dim + k;
                std::size_t ji = (static_cast<std::size_t>(j) * dim + i) * dim + k;
                if (!given[ij]) continue;
                if (given[ji]) {
                    require(table_[ji] == -table_[ij],
                            "structure constants violate antisymmetry at " +
                                triple_str(i + 1, j + 1, k + 1));
                } else {
                    table_[ji] = -table_[ij];
                    given[ji] = 1;
                }
            }

    // Cache the Killing form: B_pq = sum_{k,l} c_{pk}^l c_{ql}^k.
    killing_ = FieldMatrix(dim, dim);
    for (int p = 0; p < dim; ++p)
        for (int q = p; q < dim; ++q) {
            FieldElem b;
            for (int k = 0; k < dim; ++k)
                for (int l = 0; l < dim; ++l) {
                    const FieldElem& a = c(p, k, l);
                    if (a.is_zero()) continue;
                    const FieldElem& d = c(q, l, k);
                    if (d.is_zero()) continue;
                    b += a * d;
                }
            killing_.at(p, q) = b;
            killing_.at(q, p) = b;
        }
}

FieldVector LieAlgebra::bracket(const FieldVector& X, const FieldVector& Y) const {
    require(static_cast<int>(X.size()) == dim_ && static_cast<int>(Y.size()) == dim_,
            "bracket arguments must have the algebra's dimension");
    FieldVector out(dim_);
    for (int i = 0; i < dim_; ++i) {
        if (X[i].is_zero()) continue;
        for (int j = 0; j < dim_; ++j) {
            if (Y[j].is_zero()) continue;
            FieldElem s = X[i] * Y[j];
            for (int k = 0; k < dim_; ++k) {
                const FieldElem& ck = c(i, j, k);
                if (!ck.is_zero()) out[k] += s * ck;
            }
        }
    }
    return out;
}

FieldMatrix LieAlgebra::ad(const FieldVector& X) const {
    require(static_cast<int>(X.size()) == dim_, "ad argument must have the algebra's dimension");
    FieldMatrix M(dim_, dim_);
    for (int i = 0; i < dim_; ++i) {
        if (X[i].is_zero()) continue;
        for (int j = 0; j < dim_; ++j)
            for (int k = 0; k < dim_; ++k) {
                const FieldElem& ck = c(i, j, k);
                if (!ck.is_zero()) M.at(k, j) += X[i] * ck;
            }
    }
    return M;
}

FieldElem LieAlgebra::killing(const FieldVector& X, const FieldVector& Y) const {
    require(static_cast<int>(X.size()) == dim_ && static_cast<int>(Y.size()) == dim_,
            "Killing form arguments must have the algebra's dimension");
    FieldElem out;
    for (int p = 0; p < dim_; ++p) {
        if (X[p].is_zero()) continue;
        for (int q = 0; q < dim_; ++q) {
            if (Y[q].is_zero()) continue;
            const FieldElem& b = killing_.at(p, q);
            if (!b.is_zero()) out += X[p] * Y[q] * b;
        }
    }
    return out;
}

void LieAlgebra::check_jacobi() const {
    FieldVector ei(dim_), ej(dim_), ek(dim_);
    for (int i = 0; i < dim_; ++i)
        for (int j = i + 1; j < dim_; ++j)
            for (int k = j + 1; k < dim_; ++k) {
                // [e_i,[e_j,e_k]] + [e_j,[e_k,e_i]] + [e_k,[e_i,e_j]] = 0,
                // reading the inner brackets straight off the table.
                FieldVector jk(dim_), ki(dim_), ij(dim_);
                for (int l = 0; l < dim_; ++l) {
                    jk[l] = c(j, k, l);
                    ki[l] = c(k, i, l);
                    ij[l] = c(i, j, l);
                }
                ei.assign(dim_, FieldElem());
                ei[i] = FieldElem(1);
                ej.assign(dim_, FieldElem());
                ej[j] = FieldElem(1);
                ek.assign(dim_, FieldElem());
                ek[k] = FieldElem(1);
                FieldVector sum = bracket(ei, jk) + bracket(ej, ki) + bracket(ek, ij);
                require(is_zero(sum),
                        "Jacobi identity fails on basis triple " + triple_str(i + 1, j + 1, k + 1));
            }
}

std::vector<StructEntry> LieAlgebra::sparse_constants() const {
    std::vector<StructEntry> out;
    for (int i = 0; i < dim_; ++i)
        for (int j = i + 1; j < dim_; ++j)
            for (int k = 0; k < dim_; ++k)
                if (!c(i, j, k).is_zero()) out.push_back({i + 1, j + 1, k + 1, c(i, j, k)});
    return out;
}

} // namespace g2def
