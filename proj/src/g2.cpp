#include "g2def/g2.hpp"

#include <algorithm>
#include <random>

#include "g2def/errors.hpp"

namespace g2def {

// ---------------------------------------------------------------- SymTensor

SymTensor SymTensor::sym(int a, int b) {
    SymTensor h;
    FieldElem half(make_rational(1, 2));
    h.m_.at(a - 1, b - 1) += half;
    h.m_.at(b - 1, a - 1) += half;
    return h;
}

std::vector<SymTensor> SymTensor::traceless_basis() {
    std::vector<SymTensor> out;
    for (int a = 1; a <= 7; ++a)
        for (int b = a + 1; b <= 7; ++b) out.push_back(sym(a, b));
    for (int a = 1; a <= 6; ++a) {
        SymTensor h;
        h.set(a, a, FieldElem(1));
        h.set(a + 1, a + 1, FieldElem(-1));
        out.push_back(h);
    }
    return out;
}

void SymTensor::set(int i, int j, const FieldElem& c) {
    m_.at(i - 1, j - 1) = c;
    m_.at(j - 1, i - 1) = c;
}

FieldElem SymTensor::trace() const {
    FieldElem t;
    for (int i = 1; i <= 7; ++i) t += at(i, i);
    return t;
}

bool SymTensor::is_zero() const {
    for (int i = 1; i <= 7; ++i)
        for (int j = i; j <= 7; ++j)
            if (!at(i, j).is_zero()) return false;
    return true;
}

SymTensor SymTensor::operator-() const {
    SymTensor h(*this);
    h.m_ = h.m_ * FieldElem(-1);
    return h;
}

SymTensor SymTensor::operator+(const SymTensor& o) const {
    SymTensor h(*this);
    h.m_ = h.m_ + o.m_;
    return h;
}

SymTensor SymTensor::operator-(const SymTensor& o) const {
    SymTensor h(*this);
    h.m_ = h.m_ - o.m_;
    return h;
}

SymTensor SymTensor::operator*(const FieldElem& s) const {
    SymTensor h(*this);
    h.m_ = h.m_ * s;
    return h;
}

// ------------------------------------------------------------------ frames

namespace {

// σ(e_a, e_b, e_c) for arbitrary index order (0 on repeats).
FieldElem sigma_eval(const KForm& sigma, int a, int b, int c) {
    return inner(sigma, KForm::monomial(sigma.n(), {a, b, c}));
}

// α(e_a, e_b) for a 2-form.
FieldElem alpha_eval(const KForm& alpha, int a, int b) {
    return inner(alpha, KForm::monomial(alpha.n(), {a, b}));
}

G2Frame build_frame(const KForm& sigma, int orientation) {
    G2Frame f;
    f.sigma = sigma;
    f.star_sigma = hodge(sigma, orientation);
    f.orientation = orientation;
    for (int i = 1; i <= 7; ++i)
        for (int j = 1; j <= 7; ++j) {
            FieldVector v(7);
            for (int k = 1; k <= 7; ++k) v[k - 1] = sigma_eval(sigma, i, j, k);
            f.cross_table[i - 1][j - 1] = std::move(v);
        }
    return f;
}

FieldVector basis_vec(int i) {
    FieldVector X(7);
    X[i - 1] = FieldElem(1);
    return X;
}

// N×N orthogonal projector onto the row span of V (rows must have real
// coefficients so the bilinear Gram matrix is invertible).
FieldMatrix span_projector(const FieldMatrix& V, const char* what) {
    FieldMatrix gram = V * V.transpose();
    if (gram.rank() != V.rows())
        throw invariant_violation(std::string("3-form not stable: degenerate span of ") + what);
    return V.transpose() * gram.inverse() * V;
}

} // namespace

G2Frame standard_g2() {
    KForm s(7, 3);
    s.add_term({1, 2, 3}, FieldElem(1));
    s.add_term({1, 4, 5}, FieldElem(1));
    s.add_term({2, 4, 6}, FieldElem(1));
    s.add_term({3, 4, 7}, FieldElem(1));
    s.add_term({1, 6, 7}, FieldElem(-1));
    s.add_term({2, 5, 7}, FieldElem(1));
    s.add_term({3, 5, 6}, FieldElem(-1));
    return build_frame(s, 1);
}

bool induces_metric(const KForm& sigma, int orientation) {
    if (sigma.n() != 7 || sigma.degree() != 3) return false;
    for (int i = 1; i <= 7; ++i)
        for (int j = i; j <= 7; ++j) {
            KForm seven = wedge(wedge(contract_basis(i, sigma), contract_basis(j, sigma)), sigma);
            KForm expected(7, 7);
            if (i == j)
                expected.add_term({1, 2, 3, 4, 5, 6, 7}, FieldElem(-6 * orientation));
            if (seven != expected) return false;
        }
    return true;
}

G2Frame g2_frame_from(const KForm& sigma, int orientation) {
    require(induces_metric(sigma, orientation),
            "3-form does not induce the frame metric with this orientation");
    return build_frame(sigma, orientation);
}

FieldVector cross(const FieldVector& X, const FieldVector& Y, const G2Frame& frame) {
    FieldVector out(7);
    for (int i = 1; i <= 7; ++i) {
        if (X[i - 1].is_zero()) continue;
        for (int j = 1; j <= 7; ++j) {
            if (Y[j - 1].is_zero()) continue;
            FieldElem c = X[i - 1] * Y[j - 1];
            const FieldVector& p = frame.cross_table[i - 1][j - 1];
            for (int k = 0; k < 7; ++k)
                if (!p[k].is_zero()) out[k] += c * p[k];
        }
    }
    return out;
}

FieldVector cross_of_two_form(const KForm& alpha, const G2Frame& frame) {
    require(alpha.degree() == 2 && alpha.n() == 7, "expected a 2-form on R7");
    FieldVector out(7);
    for (const auto& [idx, c] : alpha.terms()) {
        const FieldVector& p = frame.cross_table[idx[0] - 1][idx[1] - 1];
        for (int k = 0; k < 7; ++k)
            if (!p[k].is_zero()) out[k] += c * p[k];
    }
    return out;
}

FieldVector two_form_action(const KForm& alpha, const FieldVector& Y) {
    require(alpha.degree() == 2, "two_form_action needs a 2-form");
    require(static_cast<int>(Y.size()) == alpha.n(), "vector dimension mismatch");
    FieldVector out(Y.size());
    // ⟨A(e_l), e_z⟩ = α(e_l, e_z).
    for (const auto& [idx, c] : alpha.terms()) {
        int a = idx[0], b = idx[1];
        out[b - 1] += c * Y[a - 1];
        out[a - 1] -= c * Y[b - 1];
    }
    return out;
}

KForm two_form_action(const KForm& alpha, const KForm& w) {
    require(alpha.degree() == 2, "two_form_action needs a 2-form");
    require(alpha.n() == w.n(), "form dimension mismatch");
    KForm out(w.n(), w.degree());
    if (w.degree() == 0) return out; // scalars are acted on trivially
    for (int l = 1; l <= w.n(); ++l)
        out += wedge(contract_basis(l, alpha), contract_basis(l, w));
    return out;
}

SymTensor two_form_action(const KForm& alpha, const SymTensor& h) {
    require(alpha.degree() == 2 && alpha.n() == 7, "expected a 2-form on R7");
    FieldMatrix A(7, 7), H(7, 7);
    for (int l = 1; l <= 7; ++l)
        for (int z = 1; z <= 7; ++z) {
            if (l < z) A.at(z - 1, l - 1) = alpha_eval(alpha, l, z);
            if (l > z) A.at(z - 1, l - 1) = -alpha_eval(alpha, z, l);
            H.at(z - 1, l - 1) = h.at(z, l);
        }
    FieldMatrix M = A * H - H * A;
    SymTensor out;
    for (int i = 1; i <= 7; ++i)
        for (int j = i; j <= 7; ++j) {
            require(M.at(i - 1, j - 1) == M.at(j - 1, i - 1),
                    "two-form action broke symmetry");
            out.set(i, j, M.at(i - 1, j - 1));
        }
    return out;
}

FieldVector p_action(const FieldVector& X, const FieldVector& Y, const G2Frame& frame) {
    return two_form_action(contract(X, frame.sigma), Y);
}

KForm p_action(const FieldVector& X, const KForm& w, const G2Frame& frame) {
    return two_form_action(contract(X, frame.sigma), w);
}

SymTensor p_action(const FieldVector& X, const SymTensor& h, const G2Frame& frame) {
    return two_form_action(contract(X, frame.sigma), h);
}

// -------------------------------------------------------------- projectors

ProjectorSet projectors(const KForm& sigma, int orientation) {
    require(sigma.n() == 7 && sigma.degree() == 3, "expected a 3-form on R7");
    require(induces_metric(sigma, orientation),
            "3-form not stable: does not induce the frame metric");
    ProjectorSet ps;
    ps.orientation_ = orientation;
    ps.idx2_ = all_multi_indices(7, 2);
    ps.idx3_ = all_multi_indices(7, 3);
    KForm star = hodge(sigma, orientation);

    FieldMatrix v1(1, 35);
    {
        FieldVector c = kform_coords(sigma, ps.idx3_);
        for (std::size_t a = 0; a < 35; ++a) v1.at(0, a) = c[a];
    }
    FieldMatrix v7(7, 35);
    for (int i = 1; i <= 7; ++i) {
        FieldVector c = kform_coords(contract_basis(i, star), ps.idx3_);
        for (std::size_t a = 0; a < 35; ++a) v7.at(i - 1, a) = c[a];
    }
    // The two spans must be orthogonal for the complement construction.
    FieldMatrix crossgram = v1 * v7.transpose();
    for (std::size_t j = 0; j < 7; ++j)
        require(crossgram.at(0, j).is_zero(), "3-form not stable: sigma not orthogonal to its 7-dim span");

    ps.p3_1_ = span_projector(v1, "sigma");
    ps.p3_7_ = span_projector(v7, "e_i contracted with *sigma");
    ps.p3_27_ = FieldMatrix::identity(35) - ps.p3_1_ - ps.p3_7_;

    FieldMatrix w7(7, 21);
    for (int i = 1; i <= 7; ++i) {
        FieldVector c = kform_coords(contract_basis(i, sigma), ps.idx2_);
        for (std::size_t a = 0; a < 21; ++a) w7.at(i - 1, a) = c[a];
    }
    ps.p2_7_ = span_projector(w7, "e_i contracted with sigma");
    ps.p2_14_ = FieldMatrix::identity(21) - ps.p2_7_;

    // Rank = trace for an exact projector.
    auto check_rank = [](const FieldMatrix& P, long want) {
        FieldElem t;
        for (std::size_t i = 0; i < P.rows(); ++i) t += P.at(i, i);
        require(t == FieldElem(want), "3-form not stable: projector rank is off");
    };
    check_rank(ps.p3_1_, 1);
    check_rank(ps.p3_7_, 7);
    check_rank(ps.p3_27_, 27);
    check_rank(ps.p2_7_, 7);
    check_rank(ps.p2_14_, 14);
    return ps;
}

KForm ProjectorSet::project(Component c, const KForm& w) const {
    switch (c) {
        case Component::l4_1:
        case Component::l4_7:
        case Component::l4_27: {
            require(w.degree() == 4, "degree-4 component of a non-4-form");
            Component base = c == Component::l4_1    ? Component::l3_1
                             : c == Component::l4_7 ? Component::l3_7
                                                    : Component::l3_27;
            return hodge(project(base, hodge(w, orientation_)), orientation_);
        }
        case Component::l5_7:
        case Component::l5_14: {
            require(w.degree() == 5, "degree-5 component of a non-5-form");
            Component base = c == Component::l5_7 ? Component::l2_7 : Component::l2_14;
            return hodge(project(base, hodge(w, orientation_)), orientation_);
        }
        default:
            break;
    }
    const bool deg2 = (c == Component::l2_7 || c == Component::l2_14);
    require(w.degree() == (deg2 ? 2 : 3), "form degree does not match the component");
    const std::vector<MultiIndex>& idx = deg2 ? idx2_ : idx3_;
    const FieldMatrix& P = c == Component::l2_7    ? p2_7_
                           : c == Component::l2_14 ? p2_14_
                           : c == Component::l3_1  ? p3_1_
                           : c == Component::l3_7  ? p3_7_
                                                   : p3_27_;
    return kform_from_coords(P.apply(kform_coords(w, idx)), idx, 7, deg2 ? 2 : 3);
}

std::size_t ProjectorSet::rank(Component c) const {
    switch (c) {
        case Component::l2_7:
        case Component::l5_7:
            return 7;
        case Component::l2_14:
        case Component::l5_14:
            return 14;
        case Component::l3_1:
        case Component::l4_1:
            return 1;
        case Component::l3_7:
        case Component::l4_7:
            return 7;
        default:
            return 27;
    }
}

Lambda27Basis lambda27_basis(const KForm& sigma, int orientation) {
    Lambda27Basis b;
    b.three_indices = all_multi_indices(7, 3);
    KForm star = hodge(sigma, orientation);
    FieldMatrix M(8, 35);
    {
        FieldVector c = kform_coords(sigma, b.three_indices);
        for (std::size_t a = 0; a < 35; ++a) M.at(0, a) = c[a];
    }
    for (int i = 1; i <= 7; ++i) {
        FieldVector c = kform_coords(contract_basis(i, star), b.three_indices);
        for (std::size_t a = 0; a < 35; ++a) M.at(i, a) = c[a];
    }
    auto ns = M.nullspace();
    require(ns.size() == 27, "3-form not stable: Lambda3_27 complement is not 27-dimensional");
    b.rows = FieldMatrix(27, 35);
    for (std::size_t r = 0; r < 27; ++r)
        for (std::size_t a = 0; a < 35; ++a) b.rows.at(r, a) = ns[r][a];
    FieldMatrix gram = b.rows * b.rows.transpose();
    b.coord_map = gram.inverse() * b.rows;
    for (std::size_t r = 0; r < 27; ++r) {
        FieldVector row(35);
        for (std::size_t a = 0; a < 35; ++a) row[a] = b.rows.at(r, a);
        b.forms.push_back(kform_from_coords(row, b.three_indices, 7, 3));
    }
    return b;
}

FieldVector Lambda27Basis::coords(const KForm& w) const {
    FieldVector c = kform_coords(w, three_indices);
    FieldVector x = coord_map.apply(c);
    FieldVector back = rows.transpose().apply(x);
    for (std::size_t a = 0; a < 35; ++a)
        require(back[a] == c[a], "3-form is not in Lambda3_27");
    return x;
}

KForm Lambda27Basis::form_of(const FieldVector& x) const {
    require(x.size() == 27, "Lambda3_27 coordinates must have length 27");
    return kform_from_coords(rows.transpose().apply(x), three_indices, 7, 3);
}

// ------------------------------------------------------------- i and j maps

KForm bryant_i(const SymTensor& h, const G2Frame& frame) {
    require(h.is_traceless(), "symmetric tensor must be traceless");
    // On decomposables, α⊙β ↦ α∧(β⌟σ) + β∧(α⌟σ); in evaluation-matrix
    // coordinates (where α⊙β has entries ½) this is 2·Σ h_ij e^i∧(e_j⌟σ).
    KForm out(7, 3);
    for (int i = 1; i <= 7; ++i) {
        KForm slot(7, 2);
        for (int j = 1; j <= 7; ++j)
            if (!h.at(i, j).is_zero()) slot += contract_basis(j, frame.sigma) * h.at(i, j);
        out += wedge(KForm::monomial(7, {i}), slot);
    }
    return out * FieldElem(2);
}

SymTensor bryant_j(const KForm& gamma, const G2Frame& frame) {
    require(gamma.n() == 7 && gamma.degree() == 3, "expected a 3-form on R7");
    require(wedge(gamma, frame.sigma).is_zero() && wedge(gamma, frame.star_sigma).is_zero(),
            "3-form is not in Lambda3_27 (wedge conditions fail)");
    SymTensor out;
    for (int x = 1; x <= 7; ++x)
        for (int y = x; y <= 7; ++y) {
            KForm seven =
                wedge(wedge(contract_basis(x, frame.sigma), contract_basis(y, frame.sigma)), gamma);
            out.set(x, y, hodge(seven, frame.orientation).coeff({}));
        }
    require(out.is_traceless(), "j-image failed to be traceless");
    return out;
}

// --------------------------------------------------- T*⊗Λ³₂₇ and the Casimir

FormValuedCovector covector_of_matrix(const FieldMatrix& V, const Lambda27Basis& b) {
    require(V.rows() == 7 && V.cols() == 27, "expected a 7x27 coefficient matrix");
    FormValuedCovector F = FormValuedCovector::zero(7, 3);
    for (int i = 0; i < 7; ++i) {
        FieldVector x(27);
        for (int a = 0; a < 27; ++a) x[a] = V.at(i, a);
        F.components[i] = b.form_of(x);
    }
    return F;
}

FieldMatrix matrix_of_covector(const FormValuedCovector& F, const Lambda27Basis& b) {
    require(F.components.size() == 7, "expected 7 components");
    FieldMatrix V(7, 27);
    for (int i = 0; i < 7; ++i) {
        FieldVector x = b.coords(F.components[i]);
        for (int a = 0; a < 27; ++a) V.at(i, a) = x[a];
    }
    return V;
}

G2Casimir::G2Casimir(const G2Frame& frame)
    : frame_(frame), basis27_(lambda27_basis(frame.sigma, frame.orientation)) {
    // Λ²₁₄ as the orthocomplement of the e_i⌟σ span inside Λ².
    auto idx2 = all_multi_indices(7, 2);
    FieldMatrix M(7, 21);
    for (int i = 1; i <= 7; ++i) {
        FieldVector c = kform_coords(contract_basis(i, frame.sigma), idx2);
        for (std::size_t a = 0; a < 21; ++a) M.at(i - 1, a) = c[a];
    }
    auto ns = M.nullspace();
    require(ns.size() == 14, "Lambda2_14 complement is not 14-dimensional");
    // Orthogonalize so the Casimir needs only 14 diagonal terms.
    std::vector<FieldVector> ortho;
    for (const FieldVector& v : ns) {
        FieldVector u = v;
        for (const FieldVector& w : ortho) {
            FieldElem coeff = dot(u, w) * dot(w, w).inv();
            u = u - coeff * w;
        }
        require(!g2def::is_zero(u), "orthogonalization collapsed a basis vector");
        ortho.push_back(std::move(u));
    }
    for (const FieldVector& u : ortho) {
        basis14_.push_back(kform_from_coords(u, idx2, 7, 2));
        inv_norm2_.push_back(dot(u, u).inv());
    }
    // Action matrices on 1-forms and on Λ³₂₇ coordinates.
    for (const KForm& beta : basis14_) {
        FieldMatrix T(7, 7);
        for (int i = 1; i <= 7; ++i) {
            FieldVector col = vector_of(two_form_action(beta, KForm::monomial(7, {i})));
            for (int z = 0; z < 7; ++z) T.at(z, i - 1) = col[z];
        }
        T_.push_back(std::move(T));
        FieldMatrix S(27, 27);
        for (int a = 0; a < 27; ++a) {
            FieldVector col = basis27_.coords(two_form_action(beta, basis27_.forms[a]));
            for (int b2 = 0; b2 < 27; ++b2) S.at(b2, a) = col[b2];
        }
        // Store transposed: ρ(β)V = T·V + V·Sᵀ.
        S_.push_back(S.transpose());
    }
}

FieldMatrix G2Casimir::rho(std::size_t a, const FieldMatrix& V) const {
    return T_[a] * V + V * S_[a];
}

FieldMatrix G2Casimir::apply(const FieldMatrix& V) const {
    require(V.rows() == 7 && V.cols() == 27, "expected a 7x27 coefficient matrix");
    FieldMatrix out(7, 27);
    for (std::size_t a = 0; a < basis14_.size(); ++a)
        out = out + rho(a, rho(a, V)) * inv_norm2_[a];
    return out;
}

KForm G2Casimir::apply(const KForm& w) const {
    KForm out(w.n(), w.degree());
    for (std::size_t a = 0; a < basis14_.size(); ++a)
        out += two_form_action(basis14_[a], two_form_action(basis14_[a], w)) * inv_norm2_[a];
    return out;
}

FieldElem G2Casimir::trace189() const {
    auto trace_prod = [](const FieldMatrix& A, const FieldMatrix& B) {
        FieldElem t;
        for (std::size_t i = 0; i < A.rows(); ++i)
            for (std::size_t j = 0; j < A.cols(); ++j)
                if (!A.at(i, j).is_zero() && !B.at(j, i).is_zero())
                    t += A.at(i, j) * B.at(j, i);
        return t;
    };
    auto trace_of = [](const FieldMatrix& A) {
        FieldElem t;
        for (std::size_t i = 0; i < A.rows(); ++i) t += A.at(i, i);
        return t;
    };
    FieldElem total;
    for (std::size_t a = 0; a < basis14_.size(); ++a) {
        // tr((T⊗1 + 1⊗S)²) = 27·tr(T²) + 2·tr(T)tr(S) + 7·tr(S²).
        FieldElem t = FieldElem(27) * trace_prod(T_[a], T_[a]) +
                      FieldElem(2) * trace_of(T_[a]) * trace_of(S_[a]) +
                      FieldElem(7) * trace_prod(S_[a], S_[a]);
        total += t * inv_norm2_[a];
    }
    return total;
}

std::vector<FieldElem> G2Casimir::eigenvalues189() {
    return {FieldElem(-4), FieldElem(-8), FieldElem(make_rational(-28, 3)), FieldElem(-14),
            FieldElem(-16)};
}

FieldMatrix G2Casimir::isotypic_project(const FieldMatrix& V, const FieldElem& target) const {
    FieldMatrix W = V;
    for (const FieldElem& lam : eigenvalues189()) {
        if (lam == target) continue;
        W = (apply(W) - W * lam) * (target - lam).inv();
    }
    return W;
}

// ----------------------------------------------------- equivariant contractions

KForm sum_p_contract(const FormValuedCovector& F, const G2Frame& frame) {
    require(F.components.size() == 7, "expected 7 components");
    KForm out(7, F.components[0].degree());
    for (int i = 1; i <= 7; ++i) out += p_action(basis_vec(i), F.components[i - 1], frame);
    return out;
}

SymTensor sum_p_contract(const std::vector<SymTensor>& F, const G2Frame& frame) {
    require(F.size() == 7, "expected 7 components");
    SymTensor out;
    for (int i = 1; i <= 7; ++i) out = out + p_action(basis_vec(i), F[i - 1], frame);
    return out;
}

std::vector<SymTensor> i2_embed(const SymTensor& h, const G2Frame& frame) {
    std::vector<SymTensor> F;
    for (int k = 1; k <= 7; ++k) {
        FieldMatrix N(7, 7);
        for (int m = 1; m <= 7; ++m)
            for (int d = 1; d <= 7; ++d) {
                FieldElem v;
                for (int c = 1; c <= 7; ++c) {
                    const FieldElem& s = frame.cross_table[k - 1][c - 1][m - 1];
                    if (!s.is_zero() && !h.at(c, d).is_zero()) v += s * h.at(c, d);
                }
                N.at(m - 1, d - 1) = v;
            }
        // π₀: symmetrize and remove the trace.
        FieldElem tr;
        for (int m = 0; m < 7; ++m) tr += N.at(m, m);
        tr = tr * FieldElem(make_rational(1, 7));
        SymTensor comp;
        for (int m = 1; m <= 7; ++m)
            for (int d = m; d <= 7; ++d) {
                FieldElem v = (N.at(m - 1, d - 1) + N.at(d - 1, m - 1)) *
                              FieldElem(make_rational(1, 2));
                if (m == d) v -= tr;
                comp.set(m, d, v);
            }
        F.push_back(std::move(comp));
    }
    return F;
}

// ------------------------------------------------------------------- suites

bool CheckReport::all_passed() const {
    return std::all_of(checks.begin(), checks.end(), [](const auto& c) { return c.second; });
}

namespace {

FieldVector random_vector(std::mt19937_64& rng) {
    std::uniform_int_distribution<int> num(-4, 4), den(1, 3), idx(0, 15), keep(0, 2);
    FieldVector X(7);
    for (int i = 0; i < 7; ++i) {
        if (keep(rng) == 0) continue; // keep the vectors sparse
        FieldElem c = FieldElem(make_rational(num(rng), den(rng))) *
                      FieldElem::radical(static_cast<unsigned>(idx(rng)) & 7u);
        if (idx(rng) & 8) c = c * FieldElem::imaginary_unit();
        X[i] = c;
    }
    return X;
}

} // namespace

CheckReport identity_suite(const G2Frame& frame) {
    CheckReport report;
    const KForm& sg = frame.sigma;
    const KForm& ssg = frame.star_sigma;
    const int ori = frame.orientation;

    // Vector pool: the frame basis plus seeded random field-valued vectors.
    std::vector<FieldVector> pool;
    for (int i = 1; i <= 7; ++i) pool.push_back(basis_vec(i));
    std::mt19937_64 rng(0x5eed5eedULL);
    for (int t = 0; t < 100; ++t) pool.push_back(random_vector(rng));

    auto sample_pairs = [&](auto&& fn) {
        bool ok = true;
        for (int i = 1; i <= 7 && ok; ++i)
            for (int j = 1; j <= 7 && ok; ++j) ok = fn(basis_vec(i), basis_vec(j));
        std::mt19937_64 r2(0xabcdULL);
        std::uniform_int_distribution<std::size_t> pick(0, pool.size() - 1);
        for (int t = 0; t < 100 && ok; ++t) ok = fn(pool[pick(r2)], pool[pick(r2)]);
        return ok;
    };
    auto sample_triples = [&](auto&& fn) {
        bool ok = true;
        for (int i = 1; i <= 7 && ok; ++i)
            for (int j = 1; j <= 7 && ok; ++j)
                for (int k = 1; k <= 7 && ok; ++k)
                    ok = fn(basis_vec(i), basis_vec(j), basis_vec(k));
        std::mt19937_64 r2(0xdcbaULL);
        std::uniform_int_distribution<std::size_t> pick(0, pool.size() - 1);
        for (int t = 0; t < 100 && ok; ++t) ok = fn(pool[pick(r2)], pool[pick(r2)], pool[pick(r2)]);
        return ok;
    };
    auto sample_single = [&](auto&& fn) {
        bool ok = true;
        for (const FieldVector& X : pool) {
            ok = fn(X);
            if (!ok) break;
        }
        return ok;
    };

    report.checks.emplace_back("<P(X,Y),Z> = <X,P(Y,Z)>", sample_triples([&](auto X, auto Y, auto Z) {
        return dot(cross(X, Y, frame), Z) == dot(X, cross(Y, Z, frame));
    }));
    report.checks.emplace_back(
        "P(X,P(X,Y)) = -|X|^2 Y + <X,Y> X", sample_pairs([&](auto X, auto Y) {
            FieldVector lhs = cross(X, cross(X, Y, frame), frame);
            FieldVector rhs = dot(X, Y) * X - dot(X, X) * Y;
            return lhs == rhs;
        }));
    report.checks.emplace_back(
        "2P(P(X,Y),Z) = P(P(Y,Z),X) + P(P(Z,X),Y) + 3<X,Z>Y - 3<Y,Z>X",
        sample_triples([&](auto X, auto Y, auto Z) {
            FieldVector lhs = FieldElem(2) * cross(cross(X, Y, frame), Z, frame);
            FieldVector rhs = cross(cross(Y, Z, frame), X, frame) +
                              cross(cross(Z, X, frame), Y, frame) +
                              (FieldElem(3) * dot(X, Z)) * Y - (FieldElem(3) * dot(Y, Z)) * X;
            return lhs == rhs;
        }));
    report.checks.emplace_back("(X_|sigma)^sigma = -2 X^(*sigma)", sample_single([&](auto X) {
        return wedge(contract(X, sg), sg) == wedge(one_form(X, 7), ssg) * FieldElem(-2);
    }));
    report.checks.emplace_back("(X_|sigma)^(*sigma) = 3 *X", sample_single([&](auto X) {
        return wedge(contract(X, sg), ssg) == hodge(one_form(X, 7), ori) * FieldElem(3);
    }));
    report.checks.emplace_back(
        "sum_i (e_i_|X_|sigma)_|(e^i^sigma) = 3 X_|(*sigma)", sample_single([&](auto X) {
            KForm acc(7, 3);
            for (int i = 1; i <= 7; ++i) {
                KForm of = contract_basis(i, contract(X, sg)); // 1-form
                acc += contract(vector_of(of), wedge(KForm::monomial(7, {i}), sg));
            }
            return acc == contract(X, ssg) * FieldElem(3);
        }));
    report.checks.emplace_back(
        "sum_i (e_i_|X_|sigma)^(e_i_|sigma) = 3 X_|(*sigma)", sample_single([&](auto X) {
            KForm acc(7, 3);
            for (int i = 1; i <= 7; ++i)
                acc += wedge(contract_basis(i, contract(X, sg)), contract_basis(i, sg));
            return acc == contract(X, ssg) * FieldElem(3);
        }));
    report.checks.emplace_back(
        "(X_|Y_|sigma)_|sigma + X_|Y_|(*sigma) = -X^Y", sample_pairs([&](auto X, auto Y) {
            KForm one = contract(X, contract(Y, sg)); // X⌟Y⌟σ = σ(Y,X,·)
            KForm lhs = contract(vector_of(one), sg) + contract(X, contract(Y, ssg));
            return lhs == -wedge(one_form(X, 7), one_form(Y, 7));
        }));
    report.checks.emplace_back("P(X_|sigma) = 3X", sample_single([&](auto X) {
        return cross_of_two_form(contract(X, sg), frame) == FieldElem(3) * X;
    }));
    return report;
}

CheckReport schur_suite() {
    CheckReport report;
    G2Frame frame = standard_g2();
    auto idx2 = all_multi_indices(7, 2);
    auto idx3 = all_multi_indices(7, 3);

    auto so7_casimir = [&](const KForm& w) {
        KForm out(w.n(), w.degree());
        for (const MultiIndex& ij : idx2) {
            KForm alpha = KForm::monomial(7, ij);
            out += two_form_action(alpha, two_form_action(alpha, w));
        }
        return out;
    };

    {
        bool ok = true;
        for (int i = 1; i <= 7 && ok; ++i) {
            KForm w = KForm::monomial(7, {i});
            ok = so7_casimir(w) == w * FieldElem(-6);
        }
        report.checks.emplace_back("so(7) Casimir = -6 on 1-forms", ok);
    }
    {
        bool ok = true;
        for (const MultiIndex& idx : idx3) {
            KForm w = KForm::monomial(7, idx);
            if (so7_casimir(w) != w * FieldElem(-12)) {
                ok = false;
                break;
            }
        }
        report.checks.emplace_back("so(7) Casimir = -12 on 3-forms", ok);
    }

    G2Casimir cas(frame);
    const Lambda27Basis& b27 = cas.basis27();

    {
        bool ok = true;
        for (const KForm& g : b27.forms) {
            KForm acc(7, 3);
            for (int i = 1; i <= 7; ++i)
                acc += p_action(basis_vec(i), p_action(basis_vec(i), g, frame), frame);
            if (acc != g * FieldElem(-8)) {
                ok = false;
                break;
            }
        }
        report.checks.emplace_back("sum_i P_i P_i = -8 on Lambda3_27", ok);
    }
    {
        bool ok = true;
        for (const SymTensor& h : SymTensor::traceless_basis()) {
            SymTensor acc;
            for (int i = 1; i <= 7; ++i)
                acc = acc + p_action(basis_vec(i), p_action(basis_vec(i), h, frame), frame);
            if (!(acc == h * FieldElem(-14))) {
                ok = false;
                break;
            }
        }
        report.checks.emplace_back("sum_i P_i P_i = -14 on S2_0", ok);
    }
    {
        bool ok = true;
        for (const KForm& g : b27.forms) {
            KForm acc(7, 4);
            for (int i = 1; i <= 7; ++i)
                acc += wedge(KForm::monomial(7, {i}), p_action(basis_vec(i), g, frame));
            if (acc != hodge(g) * FieldElem(-2)) {
                ok = false;
                break;
            }
        }
        report.checks.emplace_back("sum_i e^i ^ P_i = -2 * on Lambda3_27", ok);
    }
    {
        bool ok = true;
        for (const KForm& beta : cas.basis14())
            if (cas.apply(beta) != beta * FieldElem(-8)) {
                ok = false;
                break;
            }
        report.checks.emplace_back("G2 Casimir = -8 on Lambda2_14", ok);
    }
    {
        bool ok = true;
        for (const KForm& g : b27.forms)
            if (cas.apply(g) != g * FieldElem(make_rational(-28, 3))) {
                ok = false;
                break;
            }
        report.checks.emplace_back("G2 Casimir = -28/3 on Lambda3_27", ok);
    }
    report.checks.emplace_back("G2 Casimir trace on T^*xLambda3_27 = -2520",
                               cas.trace189() == FieldElem(-2520));

    // Deterministic test elements of T*⊗Λ³₂₇ with components in several
    // isotypic pieces (checked nonzero below).
    std::vector<FieldMatrix> tests;
    {
        FieldMatrix V1(7, 27);
        V1.at(0, 0) = FieldElem(1);
        FieldMatrix V2(7, 27);
        V2.at(3, 16) = FieldElem::sqrt2();
        V2.at(6, 20) = FieldElem(1) + FieldElem::imaginary_unit();
        V2.at(1, 5) = FieldElem(make_rational(2, 3));
        tests.push_back(std::move(V1));
        tests.push_back(std::move(V2));
    }
    {
        bool ok = true;
        for (const FieldMatrix& V : tests) {
            FieldMatrix W = V;
            for (const FieldElem& lam : G2Casimir::eigenvalues189())
                W = cas.apply(W) - W * lam;
            if (!(W == FieldMatrix(7, 27))) {
                ok = false;
                break;
            }
        }
        report.checks.emplace_back("G2 Casimir killed by its minimal polynomial on T^*xLambda3_27",
                                   ok);
    }
    {
        // Component constants of Σ P_{eᵢ}∘eᵢ⌟ on T*⊗Λ³₂₇, tested on
        // Casimir-projected embedded elements.
        bool ok_t = true, ok_27 = true, nonzero_t = false, nonzero_27 = false;
        for (const FieldMatrix& V : tests) {
            FieldMatrix Vt = cas.isotypic_project(V, FieldElem(-4));
            if (!(Vt == FieldMatrix(7, 27))) {
                nonzero_t = true;
                FormValuedCovector Ft = covector_of_matrix(Vt, b27);
                ok_t = ok_t && sum_p_contract(Ft, frame) == hodge(eps(Ft)) * FieldElem(-3);
            }
            FieldMatrix V27 = cas.isotypic_project(V, FieldElem(make_rational(-28, 3)));
            if (!(V27 == FieldMatrix(7, 27))) {
                nonzero_27 = true;
                FormValuedCovector F27 = covector_of_matrix(V27, b27);
                ok_27 = ok_27 && sum_p_contract(F27, frame) == hodge(eps(F27));
            }
        }
        report.checks.emplace_back("sum_i P_i(F_i) = -3*eps(F) on the T component", ok_t && nonzero_t);
        report.checks.emplace_back("sum_i P_i(F_i) = *eps(F) on the Lambda3_27 component",
                                   ok_27 && nonzero_27);
    }
    {
        bool ok = true;
        for (const SymTensor& h : SymTensor::traceless_basis()) {
            SymTensor got = sum_p_contract(i2_embed(h, frame), frame);
            if (!(got == h * FieldElem(-7))) {
                ok = false;
                break;
            }
        }
        report.checks.emplace_back("Q o i2 = -7 on S2_0", ok);
    }
    return report;
}

LaplaceBookkeeping laplace_eigen_bookkeeping(const FieldElem& tau0) {
    require(!tau0.is_zero(), "tau0 must be nonzero");
    LaplaceBookkeeping out;
    out.root_minus_tau0 = -tau0;
    out.root_half_tau0 = tau0 * FieldElem(make_rational(1, 2));
    FieldElem t2 = tau0 * tau0;
    // Both roots satisfy λ² + (τ₀/2)λ − τ₀²/2 = 0.
    for (const FieldElem& lam : {out.root_minus_tau0, out.root_half_tau0}) {
        FieldElem residue =
            lam * lam + tau0 * FieldElem(make_rational(1, 2)) * lam - t2 * FieldElem(make_rational(1, 2));
        require(residue.is_zero(), "quadratic root bookkeeping failed");
    }
    auto form_eig = [&](const FieldElem& lam) {
        return lam * lam + tau0 * FieldElem(make_rational(1, 6)) * lam;
    };
    out.eig_at_minus_tau0 = form_eig(out.root_minus_tau0); // 5τ₀²/6
    out.eig_at_half_tau0 = form_eig(out.root_half_tau0);   // τ₀²/3
    out.eig_coclosed = t2 * FieldElem(make_rational(1, 2));
    out.c = tau0 * FieldElem(make_rational(5, 6));
    return out;
}

} // namespace g2def
