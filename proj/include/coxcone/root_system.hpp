#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "coxcone/matrix.hpp"

namespace coxcone {

enum class Family { A, B, C, D, E6, E7, E8, F4, G2, H3, H4, I2 };

std::string family_name(Family f);
Family parse_family(const std::string& name);  // throws InputError

struct RootSystemSpec;
// Builds and validates a spec from a family name and rank; a bare "E" or "H"
// picks the member of that rank (E7, H4, ...).
RootSystemSpec parse_spec(const std::string& family, int rank, int dihedral_m = 0);

struct RootSystemSpec {
  Family family = Family::A;
  int rank = 1;
  int dihedral_m = 0;  // only meaningful for I2

  // Throws InputError on an invalid family/rank/m combination, including
  // E7/E8 which are beyond the enumeration scale this library supports.
  void validate() const;
  std::string name() const;  // e.g. "C3", "I2(5)"
};

struct DynkinEdge {
  int i;
  int j;
  int label;  // m_ij >= 3
};

// An irreducible finite root system with every vector expressed in the basis
// of simple roots. The inner product is the Gram matrix G_ij = <α_i, α_j>.
// Indices are 0-based internally; node i here is node i+1 in the usual
// Bourbaki-style pictures.
class RootSystem {
 public:
  static RootSystem build(const RootSystemSpec& spec);

  const RootSystemSpec& spec() const { return spec_; }
  std::string name() const { return spec_.name(); }
  int rank() const { return rank_; }
  bool is_crystallographic() const { return crystallographic_; }
  bool is_classical() const;

  const Matrix& cartan() const { return cartan_; }
  const Matrix& inverse_cartan() const { return inverse_cartan_; }
  const Matrix& gram() const { return gram_; }

  const std::vector<DynkinEdge>& dynkin_edges() const { return edges_; }
  // m_ij, with 2 for non-adjacent distinct nodes.
  int coxeter_label(int i, int j) const;
  const std::vector<int>& neighbors(int i) const { return neighbors_[i]; }

  const std::vector<Vector>& positive_roots() const { return positive_roots_; }
  const Vector& fundamental_weight(int i) const { return weights_[i]; }
  const Vector& fundamental_coweight(int i) const { return coweights_[i]; }
  const Vector& simple_coroot(int i) const { return coroots_[i]; }
  Vector simple_root(int i) const;
  // Σ of fundamental weights = half the sum of positive roots.
  Vector rho() const;

  // <x, y> through the Gram matrix.
  Scalar pair(const Vector& x, const Vector& y) const;
  // <x, α_i^∨> = (A x)_i, the i-th coordinate of x in the weight basis.
  Scalar coroot_pairing(const Vector& x, int i) const;
  // s_i(x) = x - <x, α_i^∨> α_i
  Vector reflect(const Vector& x, int i) const;
  bool is_dominant(const Vector& x) const;

  bool is_root(const Vector& v) const;
  bool is_positive_root(const Vector& v) const;

  // Classical families only; for type A the ambient space is R^{d+1} and
  // ambient vectors are taken modulo the all-ones vector (the returned
  // representative has coordinate sum zero).
  bool has_ambient() const { return is_classical(); }
  std::size_t ambient_dim() const;
  Vector to_ambient(const Vector& root_coords) const;    // throws InputError
  Vector to_root_coords(const Vector& ambient) const;    // throws InputError

 private:
  RootSystemSpec spec_;
  int rank_ = 0;
  bool crystallographic_ = true;
  Matrix gram_;
  Matrix cartan_;
  Matrix inverse_cartan_;
  std::vector<DynkinEdge> edges_;
  std::vector<std::vector<int>> neighbors_;
  std::vector<std::vector<int>> labels_;
  std::vector<Vector> positive_roots_;
  std::vector<Vector> weights_;
  std::vector<Vector> coweights_;
  std::vector<Vector> coroots_;
  // Columns are the simple roots in the orthonormal ambient basis.
  std::optional<Matrix> ambient_roots_;
};

// Recovers m from A_ij A_ji = 4 cos²(π/m); returns 2 for a zero product.
// Throws Error for values that do not correspond to m in {2,3,4,5,6}.
int label_from_cartan_product(const Scalar& product);

}  // namespace coxcone
