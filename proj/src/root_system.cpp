#include "coxcone/root_system.hpp"

#include <algorithm>
#include <deque>
#include <unordered_set>

#include "coxcone/error.hpp"

namespace coxcone {

namespace {

Matrix gram_from_edges(int d, const std::vector<std::pair<int, int>>& edges) {
  Matrix g(d, d);
  for (int i = 0; i < d; ++i) g(i, i) = 2;
  for (auto [i, j] : edges) {
    g(i, j) = -1;
    g(j, i) = -1;
  }
  return g;
}

Matrix path_gram(int d) {
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i + 1 < d; ++i) edges.emplace_back(i, i + 1);
  return gram_from_edges(d, edges);
}

// Simple roots of the classical families as columns in R^n.
Matrix classical_roots(Family family, int d) {
  const int n = family == Family::A ? d + 1 : d;
  Matrix r(n, d);
  const int chain = family == Family::A ? d : d - 1;  // roots e_i - e_{i+1}
  for (int i = 0; i < chain; ++i) {
    r(i, i) = 1;
    r(i + 1, i) = -1;
  }
  switch (family) {
    case Family::B:
      r(d - 1, d - 1) = 1;
      break;
    case Family::C:
      r(d - 1, d - 1) = 2;
      break;
    case Family::D:
      r(d - 2, d - 1) = 1;
      r(d - 1, d - 1) = 1;
      break;
    default:
      break;
  }
  return r;
}

Matrix golden_path_gram(int d) {
  Matrix g = path_gram(d);
  g(d - 2, d - 1) = -Scalar::golden();
  g(d - 1, d - 2) = -Scalar::golden();
  return g;
}

Matrix g2_gram() {
  Matrix g(2, 2);
  g(0, 0) = Scalar::fraction(2, 3);
  g(1, 1) = 2;
  g(0, 1) = -1;
  g(1, 0) = -1;
  return g;
}

Matrix exceptional_gram(const RootSystemSpec& spec) {
  switch (spec.family) {
    case Family::E6:
      // 1-3-4-5-6 with 2 attached to 4.
      return gram_from_edges(6, {{0, 2}, {2, 3}, {3, 4}, {4, 5}, {1, 3}});
    case Family::F4: {
      Matrix g(4, 4);
      g(0, 0) = 2;
      g(1, 1) = 2;
      g(2, 2) = 1;
      g(3, 3) = 1;
      g(0, 1) = g(1, 0) = -1;
      g(1, 2) = g(2, 1) = -1;
      g(2, 3) = g(3, 2) = Scalar::fraction(-1, 2);
      return g;
    }
    case Family::G2:
      return g2_gram();
    case Family::H3:
      return golden_path_gram(3);
    case Family::H4:
      return golden_path_gram(4);
    case Family::I2:
      switch (spec.dihedral_m) {
        case 3:
          return path_gram(2);
        case 4:
          return classical_roots(Family::B, 2).transpose() * classical_roots(Family::B, 2);
        case 5:
          return golden_path_gram(2);
        default:
          return g2_gram();
      }
    default:
      throw InputError("no Gram matrix for " + spec.name());
  }
}

}  // namespace

std::string family_name(Family f) {
  switch (f) {
    case Family::A: return "A";
    case Family::B: return "B";
    case Family::C: return "C";
    case Family::D: return "D";
    case Family::E6: return "E6";
    case Family::E7: return "E7";
    case Family::E8: return "E8";
    case Family::F4: return "F4";
    case Family::G2: return "G2";
    case Family::H3: return "H3";
    case Family::H4: return "H4";
    case Family::I2: return "I2";
  }
  return "?";
}

Family parse_family(const std::string& name) {
  std::string upper = name;
  std::transform(upper.begin(), upper.end(), upper.begin(),
                 [](unsigned char c) { return static_cast<char>(std::toupper(c)); });
  static const std::pair<const char*, Family> kNames[] = {
      {"A", Family::A},   {"B", Family::B},   {"C", Family::C},
      {"D", Family::D},   {"E", Family::E6},  {"E6", Family::E6},
      {"E7", Family::E7}, {"E8", Family::E8}, {"F", Family::F4},
      {"F4", Family::F4}, {"G", Family::G2},  {"G2", Family::G2},
      {"H", Family::H3},  {"H3", Family::H3}, {"H4", Family::H4},
      {"I", Family::I2},  {"I2", Family::I2}};
  for (const auto& [key, fam] : kNames) {
    if (upper == key) return fam;
  }
  throw InputError("unknown root system family \"" + name + "\"");
}

RootSystemSpec parse_spec(const std::string& family, int rank, int dihedral_m) {
  RootSystemSpec spec;
  spec.family = parse_family(family);
  spec.rank = rank;
  spec.dihedral_m = dihedral_m;
  if (family == "E" || family == "e") {
    if (rank == 7) spec.family = Family::E7;
    if (rank == 8) spec.family = Family::E8;
  }
  if ((family == "H" || family == "h") && rank == 4) spec.family = Family::H4;
  if (spec.family != Family::I2 && dihedral_m != 0) {
    throw InputError("--m only applies to I2(m)");
  }
  spec.validate();
  return spec;
}

void RootSystemSpec::validate() const {
  auto bad = [&](const std::string& why) {
    throw InputError("invalid root system " + name() + ": " + why);
  };
  if (rank < 1) bad("rank must be positive");
  switch (family) {
    case Family::A:
      break;
    case Family::B:
    case Family::C:
      if (rank < 2) bad("rank must be at least 2");
      break;
    case Family::D:
      if (rank < 3) bad("rank must be at least 3");
      break;
    case Family::E6:
      if (rank != 6) bad("E6 has rank 6");
      break;
    case Family::E7:
    case Family::E8:
      bad("E7/E8 Weyl groups exceed the supported enumeration scale");
      break;
    case Family::F4:
      if (rank != 4) bad("F4 has rank 4");
      break;
    case Family::G2:
      if (rank != 2) bad("G2 has rank 2");
      break;
    case Family::H3:
      if (rank != 3) bad("H3 has rank 3");
      break;
    case Family::H4:
      if (rank != 4) bad("H4 has rank 4");
      break;
    case Family::I2:
      if (rank != 2) bad("I2(m) has rank 2");
      if (dihedral_m < 3 || dihedral_m > 6) bad("only m in {3,4,5,6} is supported");
      break;
  }
}

std::string RootSystemSpec::name() const {
  switch (family) {
    case Family::A:
    case Family::B:
    case Family::C:
    case Family::D:
      return family_name(family) + std::to_string(rank);
    case Family::I2:
      return "I2(" + std::to_string(dihedral_m) + ")";
    default:
      return family_name(family);
  }
}

int label_from_cartan_product(const Scalar& product) {
  if (product.is_zero()) return 2;
  if (product == Scalar(1)) return 3;
  if (product == Scalar(2)) return 4;
  if (product == Scalar(3)) return 6;
  if (product == Scalar::golden() * Scalar::golden()) return 5;
  throw Error("Cartan product " + product.to_string() +
              " does not match a supported Coxeter label");
}

RootSystem RootSystem::build(const RootSystemSpec& spec) {
  spec.validate();
  RootSystem rs;
  rs.spec_ = spec;
  rs.rank_ = spec.rank;
  const int d = spec.rank;

  switch (spec.family) {
    case Family::A:
    case Family::B:
    case Family::C:
    case Family::D: {
      Matrix roots = classical_roots(spec.family, d);
      rs.gram_ = roots.transpose() * roots;
      rs.ambient_roots_ = std::move(roots);
      break;
    }
    default:
      rs.gram_ = exceptional_gram(spec);
  }

  rs.crystallographic_ = true;
  rs.cartan_ = Matrix(d, d);
  for (int i = 0; i < d; ++i) {
    for (int j = 0; j < d; ++j) {
      rs.cartan_(i, j) = Scalar(2) * rs.gram_(i, j) / rs.gram_(i, i);
      if (!rs.cartan_(i, j).is_integer()) rs.crystallographic_ = false;
    }
  }
  rs.inverse_cartan_ = rs.cartan_.inverse();

  rs.neighbors_.assign(d, {});
  rs.labels_.assign(d, std::vector<int>(d, 2));
  for (int i = 0; i < d; ++i) {
    rs.labels_[i][i] = 1;
    for (int j = i + 1; j < d; ++j) {
      const int m = label_from_cartan_product(rs.cartan_(i, j) * rs.cartan_(j, i));
      rs.labels_[i][j] = rs.labels_[j][i] = m;
      if (m >= 3) {
        rs.edges_.push_back({i, j, m});
        rs.neighbors_[i].push_back(j);
        rs.neighbors_[j].push_back(i);
      }
    }
  }
  for (auto& n : rs.neighbors_) std::sort(n.begin(), n.end());

  rs.weights_.resize(d);
  rs.coweights_.resize(d);
  rs.coroots_.resize(d);
  for (int j = 0; j < d; ++j) {
    rs.weights_[j] = rs.inverse_cartan_.col(j);
    // <λ_j^∨, α_i> = δ_ij, so λ_j^∨ = (2 / G_jj) λ_j.
    rs.coweights_[j] = scale(Scalar(2) / rs.gram_(j, j), rs.weights_[j]);
    rs.coroots_[j] = Vector(d);
    rs.coroots_[j][j] = Scalar(2) / rs.gram_(j, j);
  }

  // Close the simple roots under the simple reflections.
  std::unordered_set<Vector, VectorHash> seen;
  std::deque<Vector> queue;
  for (int i = 0; i < d; ++i) {
    Vector a = rs.simple_root(i);
    seen.insert(a);
    queue.push_back(std::move(a));
  }
  std::vector<Vector> all_roots;
  while (!queue.empty()) {
    Vector r = std::move(queue.front());
    queue.pop_front();
    for (int i = 0; i < d; ++i) {
      Vector s = rs.reflect(r, i);
      if (seen.insert(s).second) queue.push_back(std::move(s));
    }
    all_roots.push_back(std::move(r));
  }
  for (auto& r : all_roots) {
    if (std::all_of(r.begin(), r.end(), [](const Scalar& x) { return x.sign() >= 0; })) {
      rs.positive_roots_.push_back(std::move(r));
    }
  }
  // By height, simple roots first in index order.
  std::sort(rs.positive_roots_.begin(), rs.positive_roots_.end(),
            [](const Vector& x, const Vector& y) {
              Scalar hx, hy;
              for (const auto& c : x) hx += c;
              for (const auto& c : y) hy += c;
              if (hx != hy) return hx < hy;
              return std::lexicographical_compare(x.begin(), x.end(), y.begin(), y.end(),
                                                  [](const Scalar& a, const Scalar& b) {
                                                    return a > b;
                                                  });
            });
  return rs;
}

bool RootSystem::is_classical() const {
  switch (spec_.family) {
    case Family::A:
    case Family::B:
    case Family::C:
    case Family::D:
      return true;
    default:
      return false;
  }
}

int RootSystem::coxeter_label(int i, int j) const { return labels_[i][j]; }

Vector RootSystem::simple_root(int i) const {
  Vector v(rank_);
  v[i] = 1;
  return v;
}

Vector RootSystem::rho() const {
  Vector r(rank_);
  for (const auto& w : weights_) r = add(r, w);
  return r;
}

Scalar RootSystem::pair(const Vector& x, const Vector& y) const {
  return dot(x, gram_ * y);
}

Scalar RootSystem::coroot_pairing(const Vector& x, int i) const {
  Scalar s;
  for (int j = 0; j < rank_; ++j) {
    if (!cartan_(i, j).is_zero() && !x[j].is_zero()) s += cartan_(i, j) * x[j];
  }
  return s;
}

Vector RootSystem::reflect(const Vector& x, int i) const {
  Vector out = x;
  out[i] -= coroot_pairing(x, i);
  return out;
}

bool RootSystem::is_dominant(const Vector& x) const {
  for (int i = 0; i < rank_; ++i) {
    if (coroot_pairing(x, i).sign() < 0) return false;
  }
  return true;
}

bool RootSystem::is_positive_root(const Vector& v) const {
  return std::find(positive_roots_.begin(), positive_roots_.end(), v) !=
         positive_roots_.end();
}

bool RootSystem::is_root(const Vector& v) const {
  Vector neg = v;
  for (auto& x : neg) x = -x;
  return is_positive_root(v) || is_positive_root(neg);
}

std::size_t RootSystem::ambient_dim() const {
  return ambient_roots_ ? ambient_roots_->rows() : 0;
}

Vector RootSystem::to_ambient(const Vector& root_coords) const {
  if (!ambient_roots_) throw InputError(name() + " has no classical ambient embedding");
  if (root_coords.size() != static_cast<std::size_t>(rank_)) {
    throw InputError("vector has wrong dimension for " + name());
  }
  return *ambient_roots_ * root_coords;
}

Vector RootSystem::to_root_coords(const Vector& ambient) const {
  if (!ambient_roots_) throw InputError(name() + " has no classical ambient embedding");
  if (ambient.size() != ambient_dim()) {
    throw InputError("ambient vector has wrong dimension for " + name());
  }
  if (spec_.family == Family::A) {
    // Center, then partial sums invert α_i = e_i - e_{i+1}.
    Scalar mean;
    for (const auto& y : ambient) mean += y;
    mean /= Scalar(static_cast<long>(ambient.size()));
    Vector x(rank_);
    Scalar running;
    for (int i = 0; i < rank_; ++i) {
      running += ambient[i] - mean;
      x[i] = running;
    }
    return x;
  }
  return ambient_roots_->inverse() * ambient;
}

}  // namespace coxcone
