#pragma once

#include <string>
#include <vector>

#include "g2def/kform.hpp"
#include "g2def/lie.hpp"
#include "g2def/rational.hpp"

namespace g2def {

// Homogeneous space G/H with a reductive splitting g = h ⊕ m presented by an
// orthonormal frame e_1..e_7 of m, the metric on m being -c^2·B for the
// Killing form B of g.  The struct itself carries no guarantees; builders
// (builtin_space, the JSON loaders) run verify_space before handing one out.
struct ReductiveSpace {
    std::string name;
    LieAlgebra g;
    std::vector<FieldVector> h_basis; // vectors in g coordinates
    std::vector<FieldVector> m_frame; // e_1..e_7 in g coordinates
    Rational c2 = 1;
    int orientation = 1;

    // <X, Y> = -c^2 B(X, Y) on g; restricted to m this is the metric.
    FieldElem metric(const FieldVector& X, const FieldVector& Y) const;
};

// Checks, exactly and in this order: the Jacobi identity, that h ∪ m is a
// basis of g, [h,h] ⊆ h, [h,m] ⊆ m, h ⊥ m for the Killing form, that the
// frame is orthonormal for -c^2 B, c^2 > 0, and orientation = ±1.  Throws
// invariant_violation naming the first failure.
void verify_space(const ReductiveSpace& s);

// Torsion of the canonical connection as an exact 3-form in frame
// coordinates: T(X,Y,Z) = -<[X,Y]_m, Z>, the m-part taken along h.  Total
// antisymmetry is verified and fails (invariant_violation) when the split is
// not naturally reductive for this frame and metric.
KForm torsion_form(const ReductiveSpace& s);

struct NearlyParallelData {
    FieldElem tau0;   // -sqrt(6/(5c^2)), the negative root
    KForm sigma_o;    // -(6/tau0)·torsion, a stable 3-form inducing the metric
    FieldElem scal;   // 63/(20c^2)
};

// Derives the nearly parallel structure carried by the torsion and verifies
// it: torsion nonzero, tau0 exactly representable, |sigma_o|^2 = 7, sigma_o
// induces the metric for the stored orientation, and the scalar curvature
// 63/(20c^2) agrees with the trace formula -3/2·|T|^2 + 7/(2c^2).  Throws
// invariant_violation when the space does not carry one.
NearlyParallelData nearly_parallel_data(const ReductiveSpace& s);

// ad_X restricted to m (X ∈ h), in frame coordinates as the 2-form
// alpha(e_i, e_j) = <[X, e_i], e_j>; skewness is verified.
KForm isotropy_two_form(const ReductiveSpace& s, const FieldVector& X);

// Derivation action of ad_X|_m on a form over the frame; annihilates
// sigma_o for every X ∈ h exactly when the structure is invariant.
KForm isotropy_action(const ReductiveSpace& s, const FieldVector& X, const KForm& w);

// Built-in spaces: "so5-so3", "squashed-s7", "n11".  Constructed from their
// matrix models at first use, then verified and cached.
ReductiveSpace builtin_space(const std::string& name);
std::vector<std::string> builtin_space_names();

// JSON wire format, 1-based indices:
//   { "name": str, "dim": int,
//     "structure_constants": [[i, j, k, "FieldElem"], ...],
//     "h_basis": [["FieldElem", ...], ...], "m_frame": [...],
//     "c2": "p/q", "orientation": 1 | -1 }
ReductiveSpace space_from_json(const std::string& text);
std::string space_to_json(const ReductiveSpace& s);

// Reads the file at path and parses it with space_from_json.
ReductiveSpace load_space(const std::string& path);

} // namespace g2def
