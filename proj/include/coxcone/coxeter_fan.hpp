#pragma once

#include <cstddef>
#include <optional>
#include <random>
#include <unordered_map>
#include <unordered_set>
#include <utility>
#include <vector>

#include "coxcone/weyl_group.hpp"

namespace coxcone {

using RayId = std::uint32_t;

// A conjugate w·λ_owner of a fundamental weight.
struct Ray {
  int owner = 0;
  Vector coords;
  ElemId witness = 0;
};

// Sparse linear functional on the ray set, sorted by ray id.
using RayFunctional = std::vector<std::pair<RayId, Scalar>>;

// The wall between chambers w and w·s_gen. `relation` is the wall-crossing
// functional: +1 on wλ_gen and ws_genλ_gen, +A_{j,gen} on wλ_j for neighbors
// j of gen. A convex PL function has relation(h) >= 0.
struct Wall {
  ElemId coset_rep = 0;  // shorter of {w, w s_gen}
  ElemId other = 0;      // coset_rep·s_gen
  int gen = 0;
  RayFunctional relation;
};

struct DominantRep {
  ElemId w = 0;
  Vector coeffs;  // x = w·Σ coeffs_i λ_i, all coeffs >= 0
};

Scalar apply_functional(const RayFunctional& f, const std::vector<Scalar>& values);

// The Coxeter complex: rays, chamber/ray incidence, walls and point location.
// Rays are numbered in order of first appearance scanning chambers in the
// Weyl group's canonical order and, within a chamber, by owner index.
class CoxeterFan {
 public:
  CoxeterFan(const RootSystem& rs, const WeylGroup& W);

  const RootSystem& root_system() const { return *rs_; }
  const WeylGroup& weyl_group() const { return *W_; }
  int rank() const { return rs_->rank(); }

  const std::vector<Ray>& rays() const { return rays_; }
  std::size_t num_rays() const { return rays_.size(); }
  const Ray& ray(RayId r) const { return rays_[r]; }
  std::optional<RayId> find_ray(const Vector& coords) const;
  // The ray w·λ_i of chamber w.
  RayId chamber_ray(ElemId w, int i) const {
    return chamber_rays_[static_cast<std::size_t>(w) * rank() + i];
  }

  const std::vector<Wall>& walls() const { return walls_; }

  // Point location by descending through simple reflections. With `rng`, the
  // reflection applied at each step is chosen at random among the valid ones.
  DominantRep dominant_rep(const Vector& x, std::mt19937* rng = nullptr) const;

  // Evaluates the piecewise-linear extension of `values` (indexed by ray id).
  Scalar eval_pl(const std::vector<Scalar>& values, const Vector& x,
                 std::mt19937* rng = nullptr) const;
  // The same, from a precomputed location.
  Scalar eval_pl(const std::vector<Scalar>& values, const DominantRep& loc) const;

  // True iff both rays lie in a common chamber.
  bool span_face(RayId r, RayId s) const;

 private:
  const RootSystem* rs_;
  const WeylGroup* W_;
  std::vector<Ray> rays_;
  std::unordered_map<Vector, RayId, VectorHash> ray_index_;
  std::vector<RayId> chamber_rays_;
  std::vector<Wall> walls_;
  std::unordered_set<std::uint64_t> face_pairs_;
};

}  // namespace coxcone
