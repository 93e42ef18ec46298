#pragma once

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "coxcone/submodular.hpp"

namespace coxcone {

// --- Support-function generators --------------------------------------------

// Support function of the weight polytope conv(W·x) for dominant x:
// h(wλ_i) = <λ_i, x>. Throws PreconditionError if x is not dominant.
SupportFunction support_weight_polytope(const CoxeterFan& fan, const Vector& x_dominant);
// The fundamental coweight polytope P(λ_k^∨); h(wλ_i) = (A^{-1})_{ki}.
SupportFunction support_coweight_polytope(const CoxeterFan& fan, int k);

// Σ_{α∈psi} of the segment [-α/2, α/2] (centered) or [0, α] (uncentered).
// Every vector in psi must be a positive root.
SupportFunction support_zonotope(const CoxeterFan& fan, const std::vector<Vector>& psi,
                                 bool centered);

// a·h1 + b·h2 for a, b >= 0.
SupportFunction minkowski(const SupportFunction& h1, const SupportFunction& h2,
                          const Scalar& a, const Scalar& b);

// The restriction of the linear function <·, v> to the rays.
SupportFunction linear_support(const CoxeterFan& fan, const Vector& v);

// λ_I = Σ_{i∉I} λ_i, whose stabilizer is W_I.
Vector parabolic_weight(const RootSystem& rs, NodeSet I);

// --- Realization -------------------------------------------------------------

struct VertexSet {
  std::vector<Vector> vertices;         // simple-root coordinates
  std::vector<std::size_t> chamber_map;  // chamber (ElemId) -> vertex index
};

// The vertices of P_h, one candidate per chamber, deduplicated in chamber
// order. Throws PreconditionError if h is not submodular, and Error if a
// candidate fails the ray inequalities (which would indicate an oracle bug).
VertexSet vertices(const SubmodularCone& cone, const SupportFunction& h);

// True iff every vertex of P_h lies in the coroot lattice. Crystallographic
// systems only.
bool lattice_check(const SubmodularCone& cone, const SupportFunction& h);

// --- Symmetric cone ----------------------------------------------------------

struct SymmetricVerdict {
  bool member = true;
  Vector coeffs;               // v = Σ coeffs_k · row_k(A^{-1})
  std::optional<int> outside;  // first negative coefficient
};

// v = (h(λ_1), ..., h(λ_d)) of a W-symmetric function.
SymmetricVerdict symmetric_membership(const RootSystem& rs, const Vector& v);

// --- Indecomposability -------------------------------------------------------

// Indices into fan.walls() whose wall-crossing functional vanishes at h.
std::vector<std::size_t> active_walls(const CoxeterFan& fan, const SupportFunction& h);

// Dimension of the space cut out by the active wall equations, modulo global
// linear functions. Throws PreconditionError if h is not submodular.
long nef_dimension_at(const SubmodularCone& cone, const SupportFunction& h);
bool is_indecomposable(const SubmodularCone& cone, const SupportFunction& h);

// Predicts indecomposability of the i-th fundamental weight polytope: true
// iff every Dynkin edge at i is unlabeled. Crystallographic systems only.
bool predict_indecomposable_weight(const RootSystem& rs, int i);

// True iff every Dynkin edge at i is unlabeled (P(λ_i) has only triangles
// as 2-faces).
bool only_triangular_2faces(const RootSystem& rs, int i);

// Nef dimension of conv(points) in R^3 computed from scratch: facets by
// brute force over vertex triples, then one unknown per facet value and per
// vertex coordinate. Independent of the Coxeter fan; all points must be
// vertices of a full-dimensional polytope.
long hull_nef_dimension(const std::vector<Vector>& points);

// --- Face orbits ---------------------------------------------------------------

struct FaceOrbit {
  NodeSet J = 0;
  int dim = 0;
};

// W-orbits of faces of P(λ) for λ with stabilizer W_I: the sets J with no
// connected component of Γ|_J inside I, by increasing bitmask.
std::vector<FaceOrbit> face_orbits(const RootSystem& rs, NodeSet I);

// --- Coxeter matroids and Bruhat interval polytopes ----------------------------

struct MatroidVerdict {
  bool matroid = true;
  std::optional<std::pair<ElemId, ElemId>> violating_edge;
  std::vector<std::pair<ElemId, ElemId>> edges;  // all edges of Q(M)
};

// Whether every edge of conv{w·λ_I : w ∈ M} is parallel to a root. Elements
// of M must be distinct minimal representatives of cosets of W_I.
MatroidVerdict coxeter_matroid_check(const RootSystem& rs, const WeylGroup& W, NodeSet I,
                                     const std::vector<ElemId>& M);

// Whether p and q span an edge of conv(points), all points being vertices.
bool is_edge(const std::vector<Vector>& points, std::size_t p, std::size_t q);

// {z·λ_I : u <= z <= v in Bruhat order}, deduplicated in group order.
std::vector<Vector> bruhat_interval_polytope(const RootSystem& rs, const WeylGroup& W,
                                             ElemId u, ElemId v, NodeSet I);

}  // namespace coxcone
