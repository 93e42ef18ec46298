#pragma once

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <span>
#include <unordered_map>
#include <vector>

#include "coxcone/root_system.hpp"

namespace coxcone {

// Subsets of the Dynkin nodes as bitmasks; bit i is node i (0-based).
using NodeSet = std::uint32_t;

inline NodeSet node_set(std::initializer_list<int> nodes) {
  NodeSet s = 0;
  for (int i : nodes) s |= NodeSet{1} << i;
  return s;
}
inline bool contains(NodeSet s, int i) { return ((s >> i) & 1U) != 0; }
inline NodeSet all_nodes(int d) { return (NodeSet{1} << d) - 1; }

using ElemId = std::uint32_t;

struct WeylElement {
  Matrix matrix;           // action on simple-root coordinates
  std::vector<int> word;   // one reduced word, generators applied left to right
  int length = 0;
};

// The Weyl group enumerated as exact matrices, in breadth-first order from the
// identity (element 0) under right multiplication by simple reflections. The
// BFS order is the canonical element order used everywhere downstream.
class WeylGroup {
 public:
  static constexpr std::size_t kDefaultCap = 200000;

  // Throws CapExceeded if the group has more than `cap` elements.
  static WeylGroup enumerate(const RootSystem& rs, std::size_t cap = kDefaultCap);

  int rank() const { return rank_; }
  std::size_t order() const { return elements_.size(); }
  const WeylElement& element(ElemId w) const { return elements_[w]; }
  const Matrix& generator(int i) const { return generators_[i]; }
  int length(ElemId w) const { return elements_[w].length; }

  ElemId identity() const { return 0; }
  ElemId longest() const { return longest_; }
  // w·s_i
  ElemId right_mul(ElemId w, int i) const {
    return cayley_[static_cast<std::size_t>(w) * rank_ + i];
  }
  ElemId multiply(ElemId u, ElemId v) const;
  ElemId inverse(ElemId w) const;
  ElemId from_word(std::span<const int> word) const;
  std::optional<ElemId> find(const Matrix& m) const;

  Vector apply(ElemId w, const Vector& x) const { return elements_[w].matrix * x; }

  // The parabolic subgroup generated by {s_i : i in I}, in BFS order.
  std::vector<ElemId> parabolic(NodeSet I) const;
  // Minimum-length element of the left coset w·W_I.
  ElemId coset_canonical(ElemId w, NodeSet I) const;

  bool bruhat_leq(ElemId u, ElemId v) const;
  // Right weak order: v = u·s_{i1}···s_{ik} with lengths adding up.
  bool weak_leq(ElemId u, ElemId v) const;

  // Deduplicated orbit W·x, in BFS order from x.
  std::vector<Vector> orbit(const Vector& x) const;

 private:
  WeylGroup() = default;

  int rank_ = 0;
  std::vector<Matrix> generators_;
  // s_i only changes the columns j of w with A_ij != 0.
  Matrix cartan_;
  std::vector<WeylElement> elements_;
  std::vector<ElemId> cayley_;
  ElemId longest_ = 0;
  // matrix hash -> elements with that hash
  std::unordered_multimap<std::size_t, ElemId> index_;
};

}  // namespace coxcone
