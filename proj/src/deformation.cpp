#include "coxcone/deformation.hpp"

#include <algorithm>
#include <string>
#include <unordered_map>

#include "coxcone/error.hpp"
#include "coxcone/exact_lp.hpp"

namespace coxcone {

namespace {

void require_submodular(const SubmodularCone& cone, const SupportFunction& h) {
  if (h.size() != cone.fan().num_rays()) {
    throw InputError("support function has " + std::to_string(h.size()) + " values, fan has " +
                     std::to_string(cone.fan().num_rays()) + " rays");
  }
  if (!cone.check_local(h).member) {
    throw PreconditionError("support function is not submodular");
  }
}

bool parallel(const Vector& x, const Vector& y) {
  std::size_t k = 0;
  while (k < y.size() && y[k].is_zero()) ++k;
  if (k == y.size()) return is_zero(x);
  return x == scale(x[k] / y[k], y);
}

}  // namespace

SupportFunction support_weight_polytope(const CoxeterFan& fan, const Vector& x_dominant) {
  const RootSystem& rs = fan.root_system();
  if (!rs.is_dominant(x_dominant)) throw PreconditionError("point is not dominant");
  std::vector<Scalar> by_owner(rs.rank());
  for (int i = 0; i < rs.rank(); ++i) by_owner[i] = rs.pair(rs.fundamental_weight(i), x_dominant);
  SupportFunction h = SupportFunction::zero(fan.num_rays());
  for (RayId r = 0; r < fan.num_rays(); ++r) h[r] = by_owner[fan.ray(r).owner];
  return h;
}

SupportFunction support_coweight_polytope(const CoxeterFan& fan, int k) {
  return support_weight_polytope(fan, fan.root_system().fundamental_coweight(k));
}

SupportFunction support_zonotope(const CoxeterFan& fan, const std::vector<Vector>& psi,
                                 bool centered) {
  const RootSystem& rs = fan.root_system();
  std::vector<Vector> dual;
  for (const auto& alpha : psi) {
    if (!rs.is_positive_root(alpha)) throw InputError("zonotope generator is not a positive root");
    dual.push_back(rs.gram() * alpha);
  }
  const Scalar half = Scalar::fraction(1, 2);
  SupportFunction h = SupportFunction::zero(fan.num_rays());
  for (RayId r = 0; r < fan.num_rays(); ++r) {
    Scalar s;
    for (const auto& g : dual) {
      const Scalar p = dot(fan.ray(r).coords, g);
      if (centered) {
        s += half * p.abs();
      } else if (p.sign() > 0) {
        s += p;
      }
    }
    h[r] = std::move(s);
  }
  return h;
}

SupportFunction minkowski(const SupportFunction& h1, const SupportFunction& h2, const Scalar& a,
                          const Scalar& b) {
  if (h1.size() != h2.size()) throw InputError("Minkowski sum of functions on different ray sets");
  if (a.sign() < 0 || b.sign() < 0) throw InputError("Minkowski coefficients must be nonnegative");
  std::vector<Scalar> out(h1.size());
  for (RayId r = 0; r < h1.size(); ++r) out[r] = a * h1[r] + b * h2[r];
  return SupportFunction(std::move(out));
}

SupportFunction linear_support(const CoxeterFan& fan, const Vector& v) {
  const Vector gv = fan.root_system().gram() * v;
  SupportFunction h = SupportFunction::zero(fan.num_rays());
  for (RayId r = 0; r < fan.num_rays(); ++r) h[r] = dot(fan.ray(r).coords, gv);
  return h;
}

Vector parabolic_weight(const RootSystem& rs, NodeSet I) {
  Vector x(rs.rank());
  for (int i = 0; i < rs.rank(); ++i) {
    if (!contains(I, i)) x = add(x, rs.fundamental_weight(i));
  }
  return x;
}

VertexSet vertices(const SubmodularCone& cone, const SupportFunction& h) {
  require_submodular(cone, h);
  const CoxeterFan& fan = cone.fan();
  const RootSystem& rs = fan.root_system();
  const WeylGroup& W = fan.weyl_group();
  const int d = rs.rank();

  VertexSet out;
  out.chamber_map.reserve(W.order());
  std::unordered_map<Vector, std::size_t, VectorHash> index;
  for (ElemId w = 0; w < W.order(); ++w) {
    // Dual-basis solve: <wλ_j, wα_i^∨> = δ_ij.
    Vector local(d);
    for (int i = 0; i < d; ++i) {
      local[i] = h[fan.chamber_ray(w, i)] * rs.simple_coroot(i)[i];
    }
    Vector v = W.apply(w, local);
    auto [it, inserted] = index.emplace(v, out.vertices.size());
    if (inserted) out.vertices.push_back(std::move(v));
    out.chamber_map.push_back(it->second);
  }

  for (std::size_t k = 0; k < out.vertices.size(); ++k) {
    const Vector gv = rs.gram() * out.vertices[k];
    for (RayId r = 0; r < fan.num_rays(); ++r) {
      if (dot(fan.ray(r).coords, gv) > h[r]) {
        throw Error("vertex candidate violates a ray inequality; oracle inconsistency");
      }
    }
  }
  return out;
}

bool lattice_check(const SubmodularCone& cone, const SupportFunction& h) {
  const RootSystem& rs = cone.fan().root_system();
  if (!rs.is_crystallographic()) {
    throw InputError("coroot lattice check needs a crystallographic system; " + rs.name() +
                     " is not");
  }
  const VertexSet vs = vertices(cone, h);
  for (const auto& v : vs.vertices) {
    for (int i = 0; i < rs.rank(); ++i) {
      // v = Σ y_i α_i^∨ with α_i^∨ = (2 / G_ii) α_i.
      if (!(v[i] / rs.simple_coroot(i)[i]).is_integer()) return false;
    }
  }
  return true;
}

SymmetricVerdict symmetric_membership(const RootSystem& rs, const Vector& v) {
  if (v.size() != static_cast<std::size_t>(rs.rank())) {
    throw InputError("symmetric function needs one value per fundamental weight");
  }
  SymmetricVerdict out;
  out.coeffs = rs.cartan().transpose() * v;
  for (int k = 0; k < rs.rank(); ++k) {
    if (out.coeffs[k].sign() < 0) {
      out.member = false;
      out.outside = k;
      break;
    }
  }
  return out;
}

std::vector<std::size_t> active_walls(const CoxeterFan& fan, const SupportFunction& h) {
  std::vector<std::size_t> out;
  const auto& walls = fan.walls();
  for (std::size_t k = 0; k < walls.size(); ++k) {
    if (apply_functional(walls[k].relation, h.values()).is_zero()) out.push_back(k);
  }
  return out;
}

long nef_dimension_at(const SubmodularCone& cone, const SupportFunction& h) {
  require_submodular(cone, h);
  const CoxeterFan& fan = cone.fan();
  SparseEliminator elim(fan.num_rays());
  for (std::size_t k : active_walls(fan, h)) {
    const auto& rel = fan.walls()[k].relation;
    elim.insert(SparseRow(rel.begin(), rel.end()));
  }
  return static_cast<long>(elim.nullity()) - fan.rank();
}

bool is_indecomposable(const SubmodularCone& cone, const SupportFunction& h) {
  return nef_dimension_at(cone, h) == 1;
}

bool only_triangular_2faces(const RootSystem& rs, int i) {
  for (int j : rs.neighbors(i)) {
    if (rs.coxeter_label(i, j) != 3) return false;
  }
  return true;
}

bool predict_indecomposable_weight(const RootSystem& rs, int i) {
  if (!rs.is_crystallographic()) {
    throw InputError("the weight-polytope indecomposability rule only holds for "
                     "crystallographic systems; " + rs.name() + " is not");
  }
  return only_triangular_2faces(rs, i);
}

long hull_nef_dimension(const std::vector<Vector>& points) {
  for (const auto& p : points) {
    if (p.size() != 3) throw InputError("hull oracle is limited to dimension 3");
  }
  const std::size_t n = points.size();
  std::vector<Vector> normals;
  std::vector<std::vector<std::size_t>> tight;
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = a + 1; b < n; ++b) {
      const Vector u = sub(points[b], points[a]);
      for (std::size_t c = b + 1; c < n; ++c) {
        const Vector v = sub(points[c], points[a]);
        Vector normal = {u[1] * v[2] - u[2] * v[1], u[2] * v[0] - u[0] * v[2],
                         u[0] * v[1] - u[1] * v[0]};
        if (is_zero(normal)) continue;
        const Scalar level = dot(normal, points[a]);
        int side = 0;
        bool facet = true;
        for (const auto& p : points) {
          const int s = (dot(normal, p) - level).sign();
          if (s == 0) continue;
          if (side == 0) side = s;
          if (s != side) {
            facet = false;
            break;
          }
        }
        if (!facet) continue;
        if (side > 0) normal = scale(Scalar(-1), normal);
        std::size_t k = 0;
        while (normal[k].is_zero()) ++k;
        normal = scale(normal[k].abs().inverse(), normal);
        if (std::find(normals.begin(), normals.end(), normal) != normals.end()) continue;
        const Scalar top = dot(normal, points[a]);
        std::vector<std::size_t> on;
        for (std::size_t p = 0; p < n; ++p) {
          if (dot(normal, points[p]) == top) on.push_back(p);
        }
        normals.push_back(std::move(normal));
        tight.push_back(std::move(on));
      }
    }
  }
  // Unknowns: facet values g_k, then vertex coordinates x_p.
  const std::size_t f = normals.size();
  SparseEliminator elim(f + 3 * n);
  for (std::size_t k = 0; k < f; ++k) {
    for (std::size_t p : tight[k]) {
      SparseRow row;
      row.emplace_back(k, Scalar(1));
      for (std::size_t j = 0; j < 3; ++j) {
        if (!normals[k][j].is_zero()) row.emplace_back(f + 3 * p + j, -normals[k][j]);
      }
      elim.insert(std::move(row));
    }
  }
  return static_cast<long>(elim.nullity()) - 3;
}

std::vector<FaceOrbit> face_orbits(const RootSystem& rs, NodeSet I) {
  const int d = rs.rank();
  std::vector<FaceOrbit> out;
  for (NodeSet J = 0; J <= all_nodes(d); ++J) {
    NodeSet unvisited = J;
    bool ok = true;
    while (unvisited != 0 && ok) {
      // Flood-fill one component of Γ|_J.
      NodeSet component = unvisited & (~unvisited + 1);
      NodeSet frontier = component;
      while (frontier != 0) {
        const int v = std::countr_zero(frontier);
        frontier &= frontier - 1;
        for (int u : rs.neighbors(v)) {
          if (contains(J, u) && !contains(component, u)) {
            component |= node_set({u});
            frontier |= node_set({u});
          }
        }
      }
      unvisited &= ~component;
      if ((component & ~I) == 0) ok = false;
    }
    if (ok) out.push_back({J, std::popcount(J)});
  }
  return out;
}

bool is_edge(const std::vector<Vector>& points, std::size_t p, std::size_t q) {
  const std::size_t n = points[p].size();
  std::vector<LinearConstraint> cons;
  cons.push_back({sub(points[p], points[q]), Relation::kEq, Scalar()});
  for (std::size_t r = 0; r < points.size(); ++r) {
    if (r == p || r == q) continue;
    cons.push_back({sub(points[p], points[r]), Relation::kGe, Scalar(1)});
  }
  return find_feasible_point(n, cons).has_value();
}

MatroidVerdict coxeter_matroid_check(const RootSystem& rs, const WeylGroup& W, NodeSet I,
                                     const std::vector<ElemId>& M) {
  if (M.empty()) throw PreconditionError("Coxeter matroid needs a nonempty set of cosets");
  const Vector base = parabolic_weight(rs, I);
  std::vector<Vector> points;
  for (ElemId w : M) {
    if (W.coset_canonical(w, I) != w) {
      throw PreconditionError("element is not the minimal representative of its coset");
    }
    Vector p = W.apply(w, base);
    if (std::find(points.begin(), points.end(), p) != points.end()) {
      throw PreconditionError("duplicate coset in Coxeter matroid");
    }
    points.push_back(std::move(p));
  }

  MatroidVerdict out;
  for (std::size_t a = 0; a < points.size(); ++a) {
    for (std::size_t b = a + 1; b < points.size(); ++b) {
      if (!is_edge(points, a, b)) continue;
      out.edges.emplace_back(M[a], M[b]);
      const Vector diff = sub(points[a], points[b]);
      const bool along_root =
          std::any_of(rs.positive_roots().begin(), rs.positive_roots().end(),
                      [&](const Vector& beta) { return parallel(diff, beta); });
      if (!along_root && out.matroid) {
        out.matroid = false;
        out.violating_edge = std::make_pair(M[a], M[b]);
      }
    }
  }
  return out;
}

std::vector<Vector> bruhat_interval_polytope(const RootSystem& rs, const WeylGroup& W, ElemId u,
                                             ElemId v, NodeSet I) {
  if (!W.bruhat_leq(u, v)) throw PreconditionError("u is not below v in Bruhat order");
  if (W.coset_canonical(v, I) != v) {
    throw PreconditionError("v is not a minimal coset representative");
  }
  const Vector base = parabolic_weight(rs, I);
  std::vector<Vector> out;
  for (ElemId z = 0; z < W.order(); ++z) {
    if (!W.bruhat_leq(u, z) || !W.bruhat_leq(z, v)) continue;
    Vector p = W.apply(z, base);
    if (std::find(out.begin(), out.end(), p) == out.end()) out.push_back(std::move(p));
  }
  return out;
}

}  // namespace coxcone
