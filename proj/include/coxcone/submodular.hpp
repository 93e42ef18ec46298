#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "coxcone/coxeter_fan.hpp"

namespace coxcone {

// A total function on the rays of a Coxeter fan, indexed by RayId.
class SupportFunction {
 public:
  SupportFunction() = default;
  explicit SupportFunction(std::vector<Scalar> values) : values_(std::move(values)) {}
  static SupportFunction zero(std::size_t num_rays) {
    return SupportFunction(std::vector<Scalar>(num_rays));
  }

  // Builds h from (ray coordinates, value) pairs; throws InputError naming the
  // absent rays if the map is partial, or an unknown ray if one is present.
  static SupportFunction from_entries(const CoxeterFan& fan,
                                      const std::vector<std::pair<Vector, Scalar>>& entries);

  std::size_t size() const { return values_.size(); }
  const Scalar& operator[](RayId r) const { return values_[r]; }
  Scalar& operator[](RayId r) { return values_[r]; }
  const std::vector<Scalar>& values() const { return values_; }

  friend bool operator==(const SupportFunction&, const SupportFunction&) = default;

 private:
  std::vector<Scalar> values_;
};

// One deduplicated local inequality functional(h) >= 0. `coset_key` is the
// minimal representative of w·W_{[d]-N(gen)}; the functional is read off at
// w = coset_key.
struct FacetInequality {
  int gen = 0;
  ElemId coset_key = 0;
  RayFunctional functional;
};

// One inequality per (i, left coset of W_{[d]-N(i)}), grouped by i and then
// ordered by the Weyl group's canonical element order.
std::vector<FacetInequality> facet_inequalities(const CoxeterFan& fan);

enum class ClassicalType { A, BC, D };

// Closed-form facet counts. Type A uses the ground-set size d, i.e. the root
// system A_{d-1}; BC_d and D_d use the rank. Throws InputError outside
// A: d >= 2, BC: d >= 2, D: d >= 3.
std::uint64_t facet_count_formula(ClassicalType type, int d);

struct LocalVerdict {
  bool member = true;
  std::optional<std::size_t> violated;  // index into SubmodularCone::facets()
};

struct GlobalVerdict {
  bool member = true;
  std::optional<std::pair<RayId, RayId>> violated_pair;
};

// Membership oracles for the cone of convex piecewise-linear functions on a
// Coxeter fan. Facets are computed on construction; the point locations of
// ray sums used by the global oracle are cached on first use.
class SubmodularCone {
 public:
  explicit SubmodularCone(const CoxeterFan& fan);

  const CoxeterFan& fan() const { return *fan_; }
  const std::vector<FacetInequality>& facets() const { return facets_; }

  // Checks every deduplicated facet; reports the first violated one.
  LocalVerdict check_local(const SupportFunction& h) const;
  // Checks h(r) + h(r') >= h(r + r') over all unordered ray pairs; reports the
  // first violating pair in (r, r') lexicographic order.
  GlobalVerdict check_global(const SupportFunction& h) const;

 private:
  void ensure_pairs() const;

  const CoxeterFan* fan_;
  std::vector<FacetInequality> facets_;
  mutable std::vector<DominantRep> pair_locations_;  // row-major over r < r'
};

LocalVerdict is_submodular_local(const SubmodularCone& cone, const SupportFunction& h);
GlobalVerdict is_submodular_global(const SubmodularCone& cone, const SupportFunction& h);

// True iff every value is an integer. Throws InputError for
// non-crystallographic root systems.
bool is_discrete(const RootSystem& rs, const SupportFunction& h);

}  // namespace coxcone
