#pragma once

#include <map>
#include <string>
#include <vector>

#include "g2def/matrix.hpp"

namespace g2def {

// Strictly increasing tuple of 1-based frame indices; length = form degree.
using MultiIndex = std::vector<int>;

// All strictly increasing k-tuples from 1..n, in lexicographic order.
std::vector<MultiIndex> all_multi_indices(int n, int k);

// Sparse exterior k-form on R^n with an orthonormal frame e_1..e_n.
// Terms map strictly increasing multi-indices to nonzero coefficients, so
// structural equality is mathematical equality.  Evaluation convention:
// (e^{i1..ik})(e_{j1},..,e_{jk}) = det(delta_{i_a j_b}).
class KForm {
public:
    KForm() = default;
    KForm(int n, int k);

    // Monomial c·e^{idx}; idx may be unsorted (its permutation sign is
    // absorbed) and a repeated index yields zero.
    static KForm monomial(int n, std::vector<int> idx, const FieldElem& c = FieldElem(1));

    int n() const { return n_; }
    int degree() const { return k_; }
    bool is_zero() const { return terms_.empty(); }
    const std::map<MultiIndex, FieldElem>& terms() const { return terms_; }
    FieldElem coeff(const MultiIndex& idx) const;

    // Accumulate c·e^{idx} (idx unsorted allowed), dropping zero results.
    void add_term(std::vector<int> idx, const FieldElem& c);

    KForm operator-() const;
    KForm operator+(const KForm& o) const;
    KForm operator-(const KForm& o) const;
    KForm operator*(const FieldElem& s) const;
    KForm& operator+=(const KForm& o) { return *this = *this + o; }
    KForm& operator-=(const KForm& o) { return *this = *this - o; }
    bool operator==(const KForm& o) const = default;

    // Text encoding: `<FieldElem>*e{i1..ik}` terms joined by " + ";
    // a multi-term coefficient is parenthesized, e.g. "(1 + 1*r2)*e12".
    std::string str() const;
    static KForm parse(const std::string& s, int n, int k);

private:
    int n_ = 7, k_ = 0;
    std::map<MultiIndex, FieldElem> terms_;
};

inline KForm operator*(const FieldElem& s, const KForm& w) { return w * s; }
inline std::string to_string(const KForm& w) { return w.str(); }

KForm wedge(const KForm& a, const KForm& b);

// Interior product X ⌟ w; vectors are identified with 1-forms by the frame.
KForm contract(const FieldVector& X, const KForm& w);
KForm contract_basis(int i, const KForm& w); // e_i ⌟ w

// Hodge star: ∗e^I = orientation · sign(I, I^c) · e^{I^c}.
KForm hodge(const KForm& w, int orientation = 1);

// Bilinear inner product making the monomials e^I orthonormal.
FieldElem inner(const KForm& a, const KForm& b);

KForm one_form(const FieldVector& X, int n);
FieldVector vector_of(const KForm& one_form); // degree-1 forms only

// Element of T*⊗Λ^s: component i is the e^i-slot.
struct FormValuedCovector {
    std::vector<KForm> components; // size n, common degree s

    static FormValuedCovector zero(int n, int s);
};

// The wedging map ε(F) = Σᵢ e^i ∧ Fᵢ.
KForm eps(const FormValuedCovector& F);

// Coordinates of w in the monomial basis enumerated by `index_list`;
// w must be supported on that list.
FieldVector kform_coords(const KForm& w, const std::vector<MultiIndex>& index_list);
KForm kform_from_coords(const FieldVector& coords, const std::vector<MultiIndex>& index_list,
                        int n, int k);

} // namespace g2def
