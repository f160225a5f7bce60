#include <array>
#include <map>
#include <utility>

#include "g2def/errors.hpp"
#include "g2def/space.hpp"

namespace g2def {

namespace {

// ---------------------------------------------------------------------------
// Quaternions with field coefficients, for the sp(2) ⊕ sp(1) model.

struct Quat {
    std::array<FieldElem, 4> c{}; // components along 1, i, j, k
};

Quat operator+(const Quat& a, const Quat& b) {
    Quat out;
    for (int t = 0; t < 4; ++t) out.c[t] = a.c[t] + b.c[t];
    return out;
}

Quat operator-(const Quat& a, const Quat& b) {
    Quat out;
    for (int t = 0; t < 4; ++t) out.c[t] = a.c[t] - b.c[t];
    return out;
}

Quat operator*(const FieldElem& s, const Quat& a) {
    Quat out;
    for (int t = 0; t < 4; ++t) out.c[t] = s * a.c[t];
    return out;
}

Quat operator*(const Quat& a, const Quat& b) {
    // Basis products: unit_table[s][t] is the index of the product of units
    // s·t, with sign sign_table[s][t]; i·j = k, j·k = i, k·i = j.
    static const int unit_table[4][4] = {{0, 1, 2, 3}, {1, 0, 3, 2}, {2, 3, 0, 1}, {3, 2, 1, 0}};
    static const int sign_table[4][4] = {{1, 1, 1, 1}, {1, -1, 1, -1}, {1, -1, -1, 1}, {1, 1, -1, -1}};
    Quat out;
    for (int s = 0; s < 4; ++s) {
        if (a.c[s].is_zero()) continue;
        for (int t = 0; t < 4; ++t) {
            if (b.c[t].is_zero()) continue;
            FieldElem term = a.c[s] * b.c[t];
            if (sign_table[s][t] < 0) term = -term;
            out.c[unit_table[s][t]] += term;
        }
    }
    return out;
}

Quat unit_quat(int t) {
    Quat q;
    q.c[t] = FieldElem(1);
    return q;
}

// 2×2 quaternionic matrices, row-major.
using QMat = std::array<Quat, 4>;

QMat operator*(const QMat& A, const QMat& B) {
    QMat out;
    for (int i = 0; i < 2; ++i)
        for (int k = 0; k < 2; ++k)
            out[2 * i + k] = A[2 * i] * B[k] + A[2 * i + 1] * B[2 + k];
    return out;
}

// Element of sp(2) ⊕ sp(1).
struct SpPair {
    QMat M;
    Quat q;
};

SpPair sp_bracket(const SpPair& a, const SpPair& b) {
    QMat ab = a.M * b.M;
    QMat ba = b.M * a.M;
    QMat M;
    for (int t = 0; t < 4; ++t) M[t] = ab[t] - ba[t];
    return {M, a.q * b.q - b.q * a.q};
}

FieldVector sp_flatten(const SpPair& a) {
    FieldVector v;
    v.reserve(20);
    for (int t = 0; t < 4; ++t)
        for (int s = 0; s < 4; ++s) v.push_back(a.M[t].c[s]);
    for (int s = 0; s < 4; ++s) v.push_back(a.q.c[s]);
    return v;
}

SpPair sp_scale(const FieldElem& s, const SpPair& a) {
    SpPair out;
    for (int t = 0; t < 4; ++t) out.M[t] = s * a.M[t];
    out.q = s * a.q;
    return out;
}

// ---------------------------------------------------------------------------
// Complex matrices over the field's own i, for the su(3) ⊕ su(2) model.

template <int N>
using CMat = std::array<FieldElem, static_cast<std::size_t>(N) * N>;

template <int N>
CMat<N> cbracket(const CMat<N>& A, const CMat<N>& B) {
    CMat<N> out{};
    for (int i = 0; i < N; ++i)
        for (int j = 0; j < N; ++j) {
            FieldElem s;
            for (int k = 0; k < N; ++k) s += A[i * N + k] * B[k * N + j] - B[i * N + k] * A[k * N + j];
            out[i * N + j] = s;
        }
    return out;
}

// Element of su(3) ⊕ su(2).
struct SuPair {
    CMat<3> A{};
    CMat<2> b{};
};

SuPair su_bracket(const SuPair& x, const SuPair& y) { return {cbracket<3>(x.A, y.A), cbracket<2>(x.b, y.b)}; }

FieldVector su_flatten(const SuPair& x) {
    FieldVector v;
    v.reserve(13);
    for (const auto& e : x.A) v.push_back(e);
    for (const auto& e : x.b) v.push_back(e);
    return v;
}

SuPair su_scale(const FieldElem& s, const SuPair& x) {
    SuPair out;
    for (int t = 0; t < 9; ++t) out.A[t] = s * x.A[t];
    for (int t = 0; t < 4; ++t) out.b[t] = s * x.b[t];
    return out;
}

// ---------------------------------------------------------------------------
// Generic: structure constants of a model basis, via exact coordinates in
// any injective linear flattening.

template <class Elem, class BracketFn, class FlattenFn>
LieAlgebra algebra_from_model(const std::vector<Elem>& basis, BracketFn br, FlattenFn fl) {
    int d = static_cast<int>(basis.size());
    std::vector<FieldVector> flat;
    flat.reserve(d);
    for (const auto& e : basis) flat.push_back(fl(e));
    std::size_t n = flat[0].size();
    FieldMatrix M(n, d);
    for (int j = 0; j < d; ++j)
        for (std::size_t i = 0; i < n; ++i) M.at(i, j) = flat[j][i];
    Coordinatizer co(M);
    std::vector<StructEntry> entries;
    for (int i = 0; i < d; ++i)
        for (int j = i + 1; j < d; ++j) {
            FieldVector x = co.coords(fl(br(basis[i], basis[j])));
            for (int k = 0; k < d; ++k)
                if (!x[k].is_zero()) entries.push_back({i + 1, j + 1, k + 1, x[k]});
        }
    return LieAlgebra(d, entries);
}

// The model bases below list h first and the frame of m last, so the space's
// h_basis and m_frame are standard basis vectors of g.
ReductiveSpace space_on_model_basis(std::string name, LieAlgebra g, std::size_t h_dim,
                                    Rational c2, int orientation) {
    ReductiveSpace s;
    s.name = std::move(name);
    s.g = std::move(g);
    int n = s.g.dim();
    for (std::size_t t = 0; t < static_cast<std::size_t>(n); ++t) {
        FieldVector v(n);
        v[t] = FieldElem(1);
        if (t < h_dim)
            s.h_basis.push_back(std::move(v));
        else
            s.m_frame.push_back(std::move(v));
    }
    s.c2 = std::move(c2);
    s.orientation = orientation;
    verify_space(s);
    return s;
}

// ---------------------------------------------------------------------------
// Squashed 7-sphere: (Sp(2) × Sp(1)) / (Sp(1)_up × Sp(1)_diag), metric
// -B/24.  h is spanned by the upper sp(1) block and the diagonal copy
// {((0,0;0,a), a)}; the frame mixes the lower block with the sp(1) factor.

ReductiveSpace make_squashed_s7() {
    FieldElem inv_r5 = FieldElem::sqrt5() * FieldElem(make_rational(1, 5)); // 1/sqrt(5)
    auto upper = [](int t) {
        SpPair p;
        p.M[0] = unit_quat(t);
        return p;
    };
    auto lower = [](int t) {
        SpPair p;
        p.M[3] = unit_quat(t);
        return p;
    };
    std::vector<SpPair> basis;
    for (int t = 1; t <= 3; ++t) basis.push_back(upper(t)); // sp(1) up
    for (int t = 1; t <= 3; ++t) {                          // sp(1) diagonal
        SpPair p = lower(t);
        p.q = unit_quat(t);
        basis.push_back(p);
    }
    for (int t = 1; t <= 3; ++t) { // e_1..e_3 = (1/sqrt5)((0,0;0,2a), -3a)
        SpPair p;
        p.M[3] = FieldElem(2) * unit_quat(t);
        p.q = FieldElem(-3) * unit_quat(t);
        basis.push_back(sp_scale(inv_r5, p));
    }
    for (int t = 0; t <= 3; ++t) { // e_4..e_7 = ((0,x;-conj(x),0), 0)
        SpPair p;
        p.M[1] = unit_quat(t);
        p.M[2] = t == 0 ? FieldElem(-1) * unit_quat(0) : unit_quat(t);
        basis.push_back(p);
    }
    LieAlgebra g = algebra_from_model(basis, sp_bracket, sp_flatten);
    return space_on_model_basis("squashed-s7", std::move(g), 6, make_rational(1, 24), 1);
}

// ---------------------------------------------------------------------------
// N(1,1): (SU(3) × SU(2)) / (U(1) × SU(2)_diag), metric -B/24.  h is spanned
// by C = (diag(i,i,-2i), 0) and the diagonal su(2) {((a,0;0,0), a)}.

ReductiveSpace make_n11() {
    FieldElem i = FieldElem::imaginary_unit();
    FieldElem r2 = FieldElem::sqrt2();
    FieldElem inv_r5 = FieldElem::sqrt5() * FieldElem(make_rational(1, 5));

    // I, J, K of su(2) and their upper-left embeddings into su(3).
    auto su2 = [&](int t) {
        CMat<2> a{};
        if (t == 1) {
            a[0] = i;
            a[3] = -i;
        } else if (t == 2) {
            a[1] = FieldElem(-1);
            a[2] = FieldElem(1);
        } else {
            a[1] = i;
            a[2] = i;
        }
        return a;
    };
    auto embed = [](const CMat<2>& a) {
        CMat<3> A{};
        A[0] = a[0];
        A[1] = a[1];
        A[3] = a[2];
        A[4] = a[3];
        return A;
    };

    std::vector<SuPair> basis;
    SuPair C;
    C.A[0] = i;
    C.A[4] = i;
    C.A[8] = FieldElem(-2) * i;
    basis.push_back(C);
    for (int t = 1; t <= 3; ++t) basis.push_back({embed(su2(t)), su2(t)}); // su(2) diagonal
    for (int t = 1; t <= 3; ++t) { // e_1..e_3 = -(1/sqrt5)((2a,0;0,0), -3a)
        SuPair p{embed(su2(t)), su2(t)};
        for (auto& e : p.A) e = FieldElem(2) * e;
        for (auto& e : p.b) e = FieldElem(-3) * e;
        basis.push_back(su_scale(-inv_r5, p));
    }
    auto column = [&](int row, const FieldElem& x) { // x at (row,3), -conj(x) at (3,row)
        SuPair p;
        p.A[3 * row + 2] = x;
        p.A[6 + row] = -x.conj_i();
        return p;
    };
    basis.push_back(column(0, r2));     // e_4
    basis.push_back(column(0, r2 * i)); // e_5
    basis.push_back(column(1, r2));     // e_6
    basis.push_back(column(1, r2 * i)); // e_7

    LieAlgebra g = algebra_from_model(basis, su_bracket, su_flatten);
    return space_on_model_basis("n11", std::move(g), 4, make_rational(1, 24), 1);
}

// ---------------------------------------------------------------------------
// SO(5)/SO(3) with so(3) embedded by its action on traceless symmetric 3×3
// matrices.  Working in the basis v_1 = E11-E22, v_2 = E11+E22-2E33,
// v_3 = E12+E21, v_4 = E13+E31, v_5 = E23+E32 of that space keeps every
// matrix rational: so(5) becomes the algebra of 5×5 matrices skew with
// respect to the trace form Q = diag(2,6,2,2,2).

FieldMatrix so3_action(int t) {
    // Matrix of S -> [A_t, S] on the v-basis, A_1 = E23-E32, A_2 = E31-E13,
    // A_3 = E12-E21.  Integer entries, tabulated from the commutators.
    static const int tab[3][5][5] = {
        // [A_1, v_j]: v_1 -> v_5, v_2 -> -3v_5, v_3 -> v_4, v_4 -> -v_3,
        //             v_5 -> -v_1 + (E33-E22 part): see below.
        {{0, 0, 0, 0, -1}, {0, 0, 0, 0, 1}, {0, 0, 0, -1, 0}, {0, 0, 1, 0, 0}, {1, -3, 0, 0, 0}},
        {{0, 0, 0, 1, 0}, {0, 0, 0, 3, 0}, {0, 0, 0, 0, -1}, {-1, -3, 0, 0, 0}, {0, 0, 1, 0, 0}},
        {{0, 0, -2, 0, 0}, {0, 0, 0, 0, 0}, {2, 0, 0, 0, 0}, {0, 0, 0, 0, -1}, {0, 0, 0, 1, 0}},
    };
    FieldMatrix M(5, 5);
    for (int r = 0; r < 5; ++r)
        for (int c = 0; c < 5; ++c)
            if (tab[t][r][c] != 0) M.at(r, c) = FieldElem(tab[t][r][c]);
    return M;
}

FieldMatrix mat_bracket(const FieldMatrix& A, const FieldMatrix& B) { return A * B - B * A; }

FieldVector mat_flatten(const FieldMatrix& A) {
    FieldVector v;
    v.reserve(A.rows() * A.cols());
    for (std::size_t i = 0; i < A.rows(); ++i)
        for (std::size_t j = 0; j < A.cols(); ++j) v.push_back(A.at(i, j));
    return v;
}

FieldElem mat_trace_pair(const FieldMatrix& A, const FieldMatrix& B) {
    FieldElem s;
    for (std::size_t i = 0; i < A.rows(); ++i)
        for (std::size_t j = 0; j < A.cols(); ++j)
            if (!A.at(i, j).is_zero() && !B.at(j, i).is_zero()) s += A.at(i, j) * B.at(j, i);
    return s;
}

ReductiveSpace make_so5_so3() {
    const std::array<int, 5> Qdiag = {2, 6, 2, 2, 2};
    std::vector<FieldMatrix> h;
    for (int t = 0; t < 3; ++t) h.push_back(so3_action(t));

    // Basis of the Q-skew algebra: L_ab = (1/Q_aa) E_ab - (1/Q_bb) E_ba.
    std::vector<FieldMatrix> L;
    for (int a = 0; a < 5; ++a)
        for (int b = a + 1; b < 5; ++b) {
            FieldMatrix m(5, 5);
            m.at(a, b) = FieldElem(make_rational(1, Qdiag[a]));
            m.at(b, a) = FieldElem(make_rational(-1, Qdiag[b]));
            L.push_back(m);
        }

    // m = trace-orthocomplement of h inside so(5), in L coordinates.
    FieldMatrix ortho(3, 10);
    for (int t = 0; t < 3; ++t)
        for (int c = 0; c < 10; ++c) ortho.at(t, c) = mat_trace_pair(h[t], L[c]);
    std::vector<FieldVector> null = ortho.nullspace();
    require(null.size() == 7, "so5-so3: the complement of so(3) is not 7-dimensional");
    auto from_coords = [&](const FieldVector& x) {
        FieldMatrix m(5, 5);
        for (int c = 0; c < 10; ++c)
            if (!x[c].is_zero()) m = m + L[c] * x[c];
        return m;
    };
    std::vector<FieldMatrix> mbasis;
    for (const auto& x : null) mbasis.push_back(from_coords(x));

    // Split m by the weight of ad_H, H = so3_action(2), and take one exactly
    // normalized vector per weight plus its normalized ad_H image.  Pairs
    // from different weights are orthogonal since ad_H is metric-skew, and
    // within a pair v ⊥ ad_H(v) for the same reason.
    FieldMatrix mflat(25, 7);
    for (int j = 0; j < 7; ++j) {
        FieldVector f = mat_flatten(mbasis[j]);
        for (int i = 0; i < 25; ++i) mflat.at(i, j) = f[i];
    }
    Coordinatizer mco(mflat);
    FieldMatrix T(7, 7);
    for (int j = 0; j < 7; ++j) {
        FieldVector x = mco.coords(mat_flatten(mat_bracket(h[2], mbasis[j])));
        for (int k = 0; k < 7; ++k) T.at(k, j) = x[k];
    }
    FieldMatrix T2 = T * T;

    // <X, Y> = -c^2 B = -3 tr(XY) with c^2 = 1.
    auto metric = [&](const FieldMatrix& A, const FieldMatrix& B) {
        return FieldElem(-3) * mat_trace_pair(A, B);
    };
    auto normalized = [&](const FieldMatrix& v) {
        FieldElem n2 = metric(v, v);
        require(n2.is_rational(), "so5-so3: weight vector norm is not rational");
        auto root = sqrt_of_rational(n2.as_rational());
        require(root.has_value(), "so5-so3: weight vector norm has no square root in the field");
        return v * root->inv();
    };

    std::vector<FieldMatrix> frame;
    for (int wsq = 9; wsq >= 0; --wsq) {
        auto wroot = sqrt_of_rational(Rational(wsq));
        if (!wroot) continue;
        FieldMatrix shifted = T2;
        for (int d = 0; d < 7; ++d) shifted.at(d, d) += FieldElem(wsq);
        std::vector<FieldVector> eig = shifted.nullspace();
        if (eig.empty()) continue;
        if (wsq == 0) {
            require(eig.size() == 1, "so5-so3: the zero weight space is not a line");
            frame.push_back(normalized(from_mcoords(mbasis, eig[0])));
        } else {
            require(eig.size() == 2, "so5-so3: weight spaces must be planes");
            FieldMatrix v = normalized(from_mcoords(mbasis, eig[0]));
            frame.push_back(v);
            frame.push_back(mat_bracket(h[2], v) * wroot->inv());
        }
    }
    require(frame.size() == 7, "so5-so3: weight spaces do not fill the complement");

    std::vector<FieldMatrix> basis = h;
    for (auto& f : frame) basis.push_back(std::move(f));
    LieAlgebra g = algebra_from_model(basis, mat_bracket, mat_flatten);
    return space_on_model_basis("so5-so3", std::move(g), 3, Rational(1), 1);
}

} // namespace

ReductiveSpace builtin_space(const std::string& name) {
    if (name == "squashed-s7") return make_squashed_s7();
    if (name == "n11") return make_n11();
    if (name == "so5-so3") return make_so5_so3();
    throw parse_error("unknown builtin space: " + name +
                      " (available: so5-so3, squashed-s7, n11)");
}

std::vector<std::string> builtin_space_names() { return {"so5-so3", "squashed-s7", "n11"}; }

} // namespace g2def
