#include "coxcone/coxeter_fan.hpp"

#include <algorithm>

namespace coxcone {

Scalar apply_functional(const RayFunctional& f, const std::vector<Scalar>& values) {
  Scalar s;
  for (const auto& [r, c] : f) {
    if (!values[r].is_zero()) s += c * values[r];
  }
  return s;
}

CoxeterFan::CoxeterFan(const RootSystem& rs, const WeylGroup& W) : rs_(&rs), W_(&W) {
  const int d = rs.rank();
  chamber_rays_.reserve(W.order() * d);
  for (ElemId w = 0; w < W.order(); ++w) {
    for (int i = 0; i < d; ++i) {
      Vector coords = W.apply(w, rs.fundamental_weight(i));
      auto [it, inserted] = ray_index_.emplace(coords, static_cast<RayId>(rays_.size()));
      if (inserted) rays_.push_back({i, std::move(coords), w});
      chamber_rays_.push_back(it->second);
    }
  }

  const std::size_t n = rays_.size();
  for (ElemId w = 0; w < W.order(); ++w) {
    for (int i = 0; i < d; ++i) {
      for (int j = i + 1; j < d; ++j) {
        auto a = static_cast<std::uint64_t>(chamber_ray(w, i));
        auto b = static_cast<std::uint64_t>(chamber_ray(w, j));
        if (a > b) std::swap(a, b);
        face_pairs_.insert(a * n + b);
      }
    }
  }

  const Matrix& A = rs.cartan();
  for (ElemId w = 0; w < W.order(); ++w) {
    for (int i = 0; i < d; ++i) {
      const ElemId ws = W.right_mul(w, i);
      if (W.length(ws) < W.length(w)) continue;
      Wall wall;
      wall.coset_rep = w;
      wall.other = ws;
      wall.gen = i;
      wall.relation.emplace_back(chamber_ray(w, i), Scalar(1));
      wall.relation.emplace_back(chamber_ray(ws, i), Scalar(1));
      for (int j : rs.neighbors(i)) wall.relation.emplace_back(chamber_ray(w, j), A(j, i));
      std::sort(wall.relation.begin(), wall.relation.end(),
                [](const auto& x, const auto& y) { return x.first < y.first; });
      walls_.push_back(std::move(wall));
    }
  }
}

std::optional<RayId> CoxeterFan::find_ray(const Vector& coords) const {
  auto it = ray_index_.find(coords);
  if (it == ray_index_.end()) return std::nullopt;
  return it->second;
}

DominantRep CoxeterFan::dominant_rep(const Vector& x, std::mt19937* rng) const {
  const int d = rank();
  Vector cur = x;
  ElemId w = W_->identity();
  std::vector<int> negative;
  while (true) {
    negative.clear();
    for (int i = 0; i < d; ++i) {
      if (rs_->coroot_pairing(cur, i).sign() < 0) {
        negative.push_back(i);
        if (rng == nullptr) break;
      }
    }
    if (negative.empty()) break;
    int i = negative.front();
    if (rng != nullptr) {
      std::uniform_int_distribution<std::size_t> pick(0, negative.size() - 1);
      i = negative[pick(*rng)];
    }
    cur = rs_->reflect(cur, i);
    w = W_->right_mul(w, i);
  }
  DominantRep rep{w, Vector(d)};
  for (int i = 0; i < d; ++i) rep.coeffs[i] = rs_->coroot_pairing(cur, i);
  return rep;
}

Scalar CoxeterFan::eval_pl(const std::vector<Scalar>& values, const DominantRep& loc) const {
  Scalar s;
  for (int i = 0; i < rank(); ++i) {
    if (!loc.coeffs[i].is_zero()) s += loc.coeffs[i] * values[chamber_ray(loc.w, i)];
  }
  return s;
}

Scalar CoxeterFan::eval_pl(const std::vector<Scalar>& values, const Vector& x,
                           std::mt19937* rng) const {
  return eval_pl(values, dominant_rep(x, rng));
}

bool CoxeterFan::span_face(RayId r, RayId s) const {
  if (r == s) return true;
  auto a = static_cast<std::uint64_t>(r);
  auto b = static_cast<std::uint64_t>(s);
  if (a > b) std::swap(a, b);
  return face_pairs_.count(a * rays_.size() + b) != 0;
}

}  // namespace coxcone
