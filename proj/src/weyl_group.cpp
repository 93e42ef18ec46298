#include "coxcone/weyl_group.hpp"

#include <algorithm>
#include <deque>

#include "coxcone/error.hpp"

namespace coxcone {

namespace {

std::size_t hash_matrix(const Matrix& m) {
  std::size_t h = m.rows();
  for (const auto& x : m.entries()) h = h * 0x100000001b3ULL ^ x.hash();
  return h;
}

}  // namespace

WeylGroup WeylGroup::enumerate(const RootSystem& rs, std::size_t cap) {
  WeylGroup g;
  const int d = rs.rank();
  g.rank_ = d;
  g.cartan_ = rs.cartan();
  for (int i = 0; i < d; ++i) {
    // Column j of s_i is e_j - A_ij e_i.
    Matrix s = Matrix::identity(d);
    for (int j = 0; j < d; ++j) s(i, j) -= rs.cartan()(i, j);
    g.generators_.push_back(std::move(s));
  }

  g.elements_.push_back({Matrix::identity(d), {}, 0});
  g.index_.emplace(hash_matrix(g.elements_[0].matrix), 0);

  for (std::size_t w = 0; w < g.elements_.size(); ++w) {
    for (int i = 0; i < d; ++i) {
      Matrix m = g.elements_[w].matrix;
      const Vector col_i = m.col(i);
      for (int j = 0; j < d; ++j) {
        const Scalar& a = g.cartan_(i, j);
        if (a.is_zero()) continue;
        for (int r = 0; r < d; ++r) m(r, j) -= a * col_i[r];
      }
      std::optional<ElemId> found = g.find(m);
      if (!found) {
        if (g.elements_.size() >= cap) throw CapExceeded(cap, g.elements_.size());
        const auto id = static_cast<ElemId>(g.elements_.size());
        const std::size_t h = hash_matrix(m);
        std::vector<int> word = g.elements_[w].word;
        word.push_back(i);
        const int len = g.elements_[w].length + 1;
        g.elements_.push_back({std::move(m), std::move(word), len});
        g.index_.emplace(h, id);
        found = id;
      }
      g.cayley_.push_back(*found);
    }
  }
  g.longest_ = static_cast<ElemId>(g.elements_.size() - 1);
  return g;
}

std::optional<ElemId> WeylGroup::find(const Matrix& m) const {
  auto [lo, hi] = index_.equal_range(hash_matrix(m));
  for (auto it = lo; it != hi; ++it) {
    if (elements_[it->second].matrix == m) return it->second;
  }
  return std::nullopt;
}

ElemId WeylGroup::from_word(std::span<const int> word) const {
  ElemId w = identity();
  for (int i : word) w = right_mul(w, i);
  return w;
}

ElemId WeylGroup::multiply(ElemId u, ElemId v) const {
  for (int i : elements_[v].word) u = right_mul(u, i);
  return u;
}

ElemId WeylGroup::inverse(ElemId w) const {
  const auto& word = elements_[w].word;
  ElemId out = identity();
  for (auto it = word.rbegin(); it != word.rend(); ++it) out = right_mul(out, *it);
  return out;
}

std::vector<ElemId> WeylGroup::parabolic(NodeSet I) const {
  std::vector<ElemId> out{identity()};
  std::vector<bool> seen(order(), false);
  seen[identity()] = true;
  for (std::size_t k = 0; k < out.size(); ++k) {
    for (int i = 0; i < rank_; ++i) {
      if (!contains(I, i)) continue;
      const ElemId next = right_mul(out[k], i);
      if (!seen[next]) {
        seen[next] = true;
        out.push_back(next);
      }
    }
  }
  return out;
}

ElemId WeylGroup::coset_canonical(ElemId w, NodeSet I) const {
  bool descended = true;
  while (descended) {
    descended = false;
    for (int i = 0; i < rank_; ++i) {
      if (!contains(I, i)) continue;
      const ElemId ws = right_mul(w, i);
      if (length(ws) < length(w)) {
        w = ws;
        descended = true;
      }
    }
  }
  return w;
}

bool WeylGroup::bruhat_leq(ElemId u, ElemId v) const {
  // If v·s < v then u <= v iff min(u, u·s) <= v·s; peel s off the end of a
  // reduced word of v until a length comparison settles it.
  while (true) {
    if (u == identity()) return true;
    if (length(u) > length(v)) return false;
    if (length(u) == length(v)) return u == v;
    const int s = elements_[v].word.back();
    v = right_mul(v, s);
    const ElemId us = right_mul(u, s);
    if (length(us) < length(u)) u = us;
  }
}

bool WeylGroup::weak_leq(ElemId u, ElemId v) const {
  return length(u) + length(multiply(inverse(u), v)) == length(v);
}

std::vector<Vector> WeylGroup::orbit(const Vector& x) const {
  std::vector<Vector> out{x};
  std::unordered_map<Vector, std::size_t, VectorHash> seen{{x, 0}};
  for (std::size_t k = 0; k < out.size(); ++k) {
    for (int i = 0; i < rank_; ++i) {
      Vector y = generators_[i] * out[k];
      if (seen.emplace(y, out.size()).second) out.push_back(std::move(y));
    }
  }
  return out;
}

}  // namespace coxcone
