#include "coxcone/submodular.hpp"

#include <algorithm>
#include <string>

#include "coxcone/error.hpp"

namespace coxcone {

namespace {

std::string format_vector(const Vector& v) {
  std::string out = "[";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i != 0) out += ",";
    out += v[i].to_string();
  }
  return out + "]";
}

std::uint64_t pow_u64(std::uint64_t base, int exp) {
  std::uint64_t r = 1;
  for (int k = 0; k < exp; ++k) r *= base;
  return r;
}

}  // namespace

SupportFunction SupportFunction::from_entries(
    const CoxeterFan& fan, const std::vector<std::pair<Vector, Scalar>>& entries) {
  std::vector<std::optional<Scalar>> values(fan.num_rays());
  for (const auto& [coords, value] : entries) {
    const auto r = fan.find_ray(coords);
    if (!r) throw InputError("unknown ray " + format_vector(coords));
    values[*r] = value;
  }
  std::vector<Scalar> out;
  std::string missing;
  std::size_t num_missing = 0;
  for (RayId r = 0; r < values.size(); ++r) {
    if (!values[r]) {
      if (num_missing < 8) missing += " " + format_vector(fan.ray(r).coords);
      ++num_missing;
      continue;
    }
    out.push_back(*values[r]);
  }
  if (num_missing != 0) {
    throw InputError("support function is missing " + std::to_string(num_missing) +
                     " of " + std::to_string(values.size()) + " rays:" + missing +
                     (num_missing > 8 ? " ..." : ""));
  }
  return SupportFunction(std::move(out));
}

std::vector<FacetInequality> facet_inequalities(const CoxeterFan& fan) {
  const RootSystem& rs = fan.root_system();
  const WeylGroup& W = fan.weyl_group();
  const int d = rs.rank();
  std::vector<FacetInequality> out;
  for (int i = 0; i < d; ++i) {
    NodeSet stabilizer = all_nodes(d);
    for (int j : rs.neighbors(i)) stabilizer &= ~node_set({j});
    for (ElemId w = 0; w < W.order(); ++w) {
      // Minimal coset representatives have no descent inside the stabilizer.
      bool minimal = true;
      for (int j = 0; j < d && minimal; ++j) {
        if (contains(stabilizer, j) && W.length(W.right_mul(w, j)) < W.length(w)) {
          minimal = false;
        }
      }
      if (!minimal) continue;
      FacetInequality f;
      f.gen = i;
      f.coset_key = w;
      f.functional.emplace_back(fan.chamber_ray(w, i), Scalar(1));
      f.functional.emplace_back(fan.chamber_ray(W.right_mul(w, i), i), Scalar(1));
      for (int j : rs.neighbors(i)) {
        f.functional.emplace_back(fan.chamber_ray(w, j), rs.cartan()(j, i));
      }
      std::sort(f.functional.begin(), f.functional.end(),
                [](const auto& x, const auto& y) { return x.first < y.first; });
      out.push_back(std::move(f));
    }
  }
  return out;
}

std::uint64_t facet_count_formula(ClassicalType type, int d) {
  const auto n = static_cast<std::uint64_t>(d);
  switch (type) {
    case ClassicalType::A:
      if (d < 2) break;
      return n * (n - 1) * pow_u64(2, d) / 8;
    case ClassicalType::BC:
      if (d < 2) break;
      return 2 * n * (n - 1) * pow_u64(3, d - 2) + n * pow_u64(2, d - 1);
    case ClassicalType::D:
      if (d < 3) break;
      return 2 * n * (n - 1) * pow_u64(3, d - 2) - n * (n - 1) * pow_u64(2, d - 2);
  }
  throw InputError("no facet count formula for d = " + std::to_string(d));
}

SubmodularCone::SubmodularCone(const CoxeterFan& fan)
    : fan_(&fan), facets_(facet_inequalities(fan)) {}

LocalVerdict SubmodularCone::check_local(const SupportFunction& h) const {
  for (std::size_t k = 0; k < facets_.size(); ++k) {
    if (apply_functional(facets_[k].functional, h.values()).sign() < 0) {
      return {false, k};
    }
  }
  return {};
}

void SubmodularCone::ensure_pairs() const {
  if (!pair_locations_.empty() || fan_->num_rays() < 2) return;
  const std::size_t n = fan_->num_rays();
  pair_locations_.reserve(n * (n - 1) / 2);
  for (RayId r = 0; r < n; ++r) {
    for (RayId s = r + 1; s < n; ++s) {
      pair_locations_.push_back(
          fan_->dominant_rep(add(fan_->ray(r).coords, fan_->ray(s).coords)));
    }
  }
}

GlobalVerdict SubmodularCone::check_global(const SupportFunction& h) const {
  ensure_pairs();
  const std::size_t n = fan_->num_rays();
  std::size_t k = 0;
  for (RayId r = 0; r < n; ++r) {
    for (RayId s = r + 1; s < n; ++s, ++k) {
      const Scalar lhs = h[r] + h[s];
      if (lhs < fan_->eval_pl(h.values(), pair_locations_[k])) {
        return {false, std::make_pair(r, s)};
      }
    }
  }
  return {};
}

LocalVerdict is_submodular_local(const SubmodularCone& cone, const SupportFunction& h) {
  return cone.check_local(h);
}

GlobalVerdict is_submodular_global(const SubmodularCone& cone, const SupportFunction& h) {
  return cone.check_global(h);
}

bool is_discrete(const RootSystem& rs, const SupportFunction& h) {
  if (!rs.is_crystallographic()) {
    throw InputError("discrete functions are only defined for crystallographic systems; " +
                     rs.name() + " is not");
  }
  return std::all_of(h.values().begin(), h.values().end(),
                     [](const Scalar& x) { return x.is_integer(); });
}

}  // namespace coxcone
