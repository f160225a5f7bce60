#pragma once

#include <array>
#include <string>
#include <utility>
#include <vector>

#include "g2def/kform.hpp"

namespace g2def {

// Symmetric 7×7 bilinear form with exact entries (1-based indices).
class SymTensor {
public:
    SymTensor() : m_(7, 7) {}

    // e^a ⊙ e^b = ½(e^a⊗e^b + e^b⊗e^a), the symmetric part of e^a⊗e^b
    // (so e^a ⊙ e^a = e^a⊗e^a).  This normalization is what makes
    // j ∘ i = −8·id come out exactly.
    static SymTensor sym(int a, int b);
    // 21 off-diagonal e^a⊙e^b (a<b, lexicographic) then the 6 diagonal
    // differences e^a⊗e^a − e^{a+1}⊗e^{a+1}: a basis of S²₀.
    static std::vector<SymTensor> traceless_basis();

    const FieldElem& at(int i, int j) const { return m_.at(i - 1, j - 1); }
    void set(int i, int j, const FieldElem& c);

    FieldElem trace() const;
    bool is_traceless() const { return trace().is_zero(); }
    bool is_zero() const;

    SymTensor operator-() const;
    SymTensor operator+(const SymTensor& o) const;
    SymTensor operator-(const SymTensor& o) const;
    SymTensor operator*(const FieldElem& s) const;
    bool operator==(const SymTensor& o) const = default;

private:
    FieldMatrix m_;
};

inline SymTensor operator*(const FieldElem& s, const SymTensor& h) { return h * s; }

// A G2-structure on R⁷ presented by its 3-form: σ, ∗σ, and the cross
// product table ⟨P(eᵢ,eⱼ), e_k⟩ = σ(eᵢ,eⱼ,e_k).
struct G2Frame {
    KForm sigma;      // degree 3
    KForm star_sigma; // degree 4
    int orientation = 1;
    std::array<std::array<FieldVector, 7>, 7> cross_table; // P(eᵢ,eⱼ)
};

// σ = e¹²³ + e¹⁴⁵ + e²⁴⁶ + e³⁴⁷ − e¹⁶⁷ + e²⁵⁷ − e³⁵⁶ with orientation +1.
G2Frame standard_g2();

// Frame from any 3-form that induces the frame metric (checked); throws
// invariant_violation otherwise.
G2Frame g2_frame_from(const KForm& sigma, int orientation);

// True iff eᵢ⌟σ ∧ eⱼ⌟σ ∧ σ = −6 δᵢⱼ · orientation · e^{1…7} for all i, j.
bool induces_metric(const KForm& sigma, int orientation);

// Cross product P(X,Y), bilinear in field-valued coordinates.
FieldVector cross(const FieldVector& X, const FieldVector& Y, const G2Frame& frame);
// P extended to 2-forms: P(α) = Σ_{i<j} α_ij P(eᵢ,eⱼ).
FieldVector cross_of_two_form(const KForm& alpha, const G2Frame& frame);

// Action of a 2-form α, identified with the skew map A, ⟨A(Y),Z⟩ = α(Y,Z):
// A(Y) on vectors; Σ_l (e_l⌟α)∧(e_l⌟w) on forms (the metric-dual action);
// H ↦ AH − HA on symmetric tensors.
FieldVector two_form_action(const KForm& alpha, const FieldVector& Y);
KForm two_form_action(const KForm& alpha, const KForm& w);
SymTensor two_form_action(const KForm& alpha, const SymTensor& h);

// P_X := two_form_action(X ⌟ σ, ·).
FieldVector p_action(const FieldVector& X, const FieldVector& Y, const G2Frame& frame);
KForm p_action(const FieldVector& X, const KForm& w, const G2Frame& frame);
SymTensor p_action(const FieldVector& X, const SymTensor& h, const G2Frame& frame);

// Orthogonal projectors onto the G2-irreducible pieces of Λ²..Λ⁵:
// Λ³₁ = span{σ}, Λ³₇ = span{eᵢ⌟∗σ}, Λ³₂₇ their orthocomplement,
// Λ²₇ = span{eᵢ⌟σ}, Λ²₁₄ its complement; degrees 4, 5 by Hodge conjugation.
enum class Component { l2_7, l2_14, l3_1, l3_7, l3_27, l4_1, l4_7, l4_27, l5_7, l5_14 };

class ProjectorSet {
public:
    KForm project(Component c, const KForm& w) const;
    std::size_t rank(Component c) const;
    int orientation() const { return orientation_; }

private:
    friend ProjectorSet projectors(const KForm& sigma, int orientation);
    std::vector<MultiIndex> idx2_, idx3_;
    FieldMatrix p2_7_, p2_14_, p3_1_, p3_7_, p3_27_;
    int orientation_ = 1;
};

ProjectorSet projectors(const KForm& sigma, int orientation);

// Exact basis of Λ³₂₇ (27 rational coordinate rows in the 35 monomials)
// with the coordinatization map for it.
struct Lambda27Basis {
    std::vector<MultiIndex> three_indices; // the 35 monomials, lexicographic
    FieldMatrix rows;                      // 27×35
    FieldMatrix coord_map;                 // 27×35, coords = coord_map · coeffs
    std::vector<KForm> forms;              // the same 27 basis forms

    // Coordinates of w in this basis; throws invariant_violation when w is
    // not in Λ³₂₇ (reconstruction mismatch).
    FieldVector coords(const KForm& w) const;
    KForm form_of(const FieldVector& coords) const;
};

Lambda27Basis lambda27_basis(const KForm& sigma, int orientation);

// The traceless-symmetric ↔ Λ³₂₇ identifications:
// i(h) = Σ_{i,j} h_ij e^i ∧ (e_j ⌟ σ) and j(γ)(X,Y) = ∗((X⌟σ)∧(Y⌟σ)∧γ),
// with j ∘ i = −8·id.
KForm bryant_i(const SymTensor& h, const G2Frame& frame);
SymTensor bryant_j(const KForm& gamma, const G2Frame& frame);

// Elements of T*⊗Λ³₂₇ as 7×27 coefficient matrices V against a
// Lambda27Basis: component i of the covector is Σ_a V_{ia}·basis_a.
FormValuedCovector covector_of_matrix(const FieldMatrix& V, const Lambda27Basis& b);
FieldMatrix matrix_of_covector(const FormValuedCovector& F, const Lambda27Basis& b);

// Casimir of the G2 action on T*⊗Λ³₂₇, built from an exact orthogonal
// basis of Λ²₁₄ ≅ g2 (normalized by the 2-form inner product).  Its five
// eigenvalues −4, −8, −28/3, −14, −16 separate the isotypic components,
// which is what the suite uses to manufacture equivariantly embedded test
// elements without hand-built embeddings.
class G2Casimir {
public:
    explicit G2Casimir(const G2Frame& frame);

    const Lambda27Basis& basis27() const { return basis27_; }
    const std::vector<KForm>& basis14() const { return basis14_; }

    // Casimir applied to a p-form (p = 1, 2, 3) or to V ∈ T*⊗Λ³₂₇.
    KForm apply(const KForm& w) const;
    FieldMatrix apply(const FieldMatrix& V) const;

    // Exact trace over the 189-dimensional space T*⊗Λ³₂₇.
    FieldElem trace189() const;

    // Predicted eigenvalues on T*⊗Λ³₂₇, one per isotypic component:
    // 7 ↦ −4, 64 ↦ −14, 14 ↦ −8, 27 ↦ −28/3, 77 ↦ −16.
    static std::vector<FieldElem> eigenvalues189();

    // Π_{λ≠target}(Cas − λ)/(target − λ) applied to V: the isotypic
    // projector for the component with Casimir eigenvalue `target`.
    FieldMatrix isotypic_project(const FieldMatrix& V, const FieldElem& target) const;

private:
    FieldMatrix rho(std::size_t a, const FieldMatrix& V) const;
    G2Frame frame_;
    Lambda27Basis basis27_;
    std::vector<KForm> basis14_;      // orthogonal over Q
    std::vector<FieldElem> inv_norm2_;
    std::vector<FieldMatrix> T_, S_;  // 7×7 and 27×27 action matrices
};

// Σᵢ P_{eᵢ}(Fᵢ): the equivariant map T*⊗Λ³ → Λ³ (and T*⊗S²₀ → S²₀).
KForm sum_p_contract(const FormValuedCovector& F, const G2Frame& frame);
SymTensor sum_p_contract(const std::vector<SymTensor>& F, const G2Frame& frame);

// The embedding i₂ : S²₀ → T*⊗S²₀, i₂(h) = (1⊗π₀)∘C(g⊗h) with
// C(a⊗b⊗c⊗d) = a⊗P(b,c)⊗d; component k is π₀(N⁽ᵏ⁾), N⁽ᵏ⁾_{md} = Σ_c σ(k,c,m) h_{cd}.
std::vector<SymTensor> i2_embed(const SymTensor& h, const G2Frame& frame);

struct CheckReport {
    std::vector<std::pair<std::string, bool>> checks;
    bool all_passed() const;
};

// Exact verification of the cross-product and contraction identities:
// the three P-composition laws and the six σ/∗σ identities, on every
// basis pair and on seeded random field-valued vectors.
CheckReport identity_suite(const G2Frame& frame);

// Exact verification of the equivariant-map constants used by the flat
// reductions: so(7)- and G2-Casimir eigenvalues, Σ PᵢPᵢ on Λ³₂₇ and S²₀,
// Σ eⁱ∧P_{eᵢ} = −2∗ on Λ³₂₇, the two component constants of Σ P_{eᵢ}∘eᵢ⌟
// on T*⊗Λ³₂₇, and Q∘i₂ = −7 on S²₀.
CheckReport schur_suite();

// Eigenvalue bookkeeping for the deformation problem: the roots of
// λ² + (τ₀/2)λ − τ₀²/2 = 0, the form-Laplacian eigenvalues they induce via
// λ² + (τ₀/6)λ (plus τ₀²/2 for the coclosed case), and c = (5/6)τ₀.
struct LaplaceBookkeeping {
    FieldElem root_minus_tau0;  // −τ₀
    FieldElem root_half_tau0;   // τ₀/2
    FieldElem eig_at_minus_tau0; // 5τ₀²/6
    FieldElem eig_at_half_tau0;  // τ₀²/3
    FieldElem eig_coclosed;      // τ₀²/2
    FieldElem c;                 // (5/6)τ₀
};

LaplaceBookkeeping laplace_eigen_bookkeeping(const FieldElem& tau0);

} // namespace g2def
