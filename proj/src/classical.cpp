#include "coxcone/classical.hpp"

#include <algorithm>
#include <bit>
#include <string>

#include "coxcone/error.hpp"

namespace coxcone {

namespace {

std::uint32_t bit(int k) { return std::uint32_t{1} << k; }

SignedSet with(SignedSet s, int k, bool negative) {
  if (negative) {
    s.neg |= bit(k);
  } else {
    s.pos |= bit(k);
  }
  return s;
}

std::vector<int> free_coords(SignedSet s, int d) {
  std::vector<int> out;
  for (int k = 0; k < d; ++k) {
    if ((s.support() & bit(k)) == 0) out.push_back(k);
  }
  return out;
}

void require_family(const RootSystem& rs, std::initializer_list<Family> families,
                    const char* what) {
  for (Family f : families) {
    if (rs.spec().family == f) return;
  }
  throw InputError(std::string(what) + " is not defined for " + rs.name());
}

RayId lookup(const CoxeterFan& fan, const Vector& coords) {
  const auto r = fan.find_ray(coords);
  if (!r) throw Error("ray dictionary does not match the fan of " + fan.root_system().name());
  return *r;
}

void sort_functional(RayFunctional& f) {
  std::sort(f.begin(), f.end(), [](const auto& x, const auto& y) { return x.first < y.first; });
}

}  // namespace

int SignedSet::size() const { return std::popcount(pos | neg); }

SignedSet signed_meet(SignedSet s, SignedSet t) { return {s.pos & t.pos, s.neg & t.neg}; }

SignedSet signed_join(SignedSet s, SignedSet t) {
  const std::uint32_t p = s.pos | t.pos;
  const std::uint32_t n = s.neg | t.neg;
  const std::uint32_t conflict = p & n;
  return {p & ~conflict, n & ~conflict};
}

std::vector<SignedSet> all_signed_sets(int d) {
  std::size_t total = 1;
  for (int k = 0; k < d; ++k) total *= 3;
  std::vector<SignedSet> out;
  out.reserve(total);
  for (std::size_t code = 0; code < total; ++code) {
    SignedSet s;
    std::size_t c = code;
    for (int k = 0; k < d; ++k, c /= 3) {
      if (c % 3 == 1) s.pos |= bit(k);
      if (c % 3 == 2) s.neg |= bit(k);
    }
    out.push_back(s);
  }
  return out;
}

const Scalar& SetFunction::operator()(Subset s) const {
  if (!values_[s]) throw InputError("set function undefined at subset mask " + std::to_string(s));
  return *values_[s];
}

SignedSetFunction::SignedSetFunction(int d) : d_(d) {
  std::size_t total = 1;
  for (int k = 0; k < d; ++k) total *= 3;
  values_.resize(total);
}

std::size_t SignedSetFunction::code(SignedSet s) const {
  std::size_t c = 0;
  for (int k = d_ - 1; k >= 0; --k) {
    c *= 3;
    if ((s.pos & bit(k)) != 0) c += 1;
    if ((s.neg & bit(k)) != 0) c += 2;
  }
  return c;
}

Scalar SignedSetFunction::operator()(SignedSet s) const {
  const auto& v = values_[code(s)];
  if (v) return *v;
  if (s.empty()) return Scalar();
  throw InputError("signed set function undefined at a set of size " +
                   std::to_string(s.size()));
}

// --- Type A -----------------------------------------------------------------

Vector typeA_ray(const RootSystem& rs, Subset s) {
  Vector ambient(rs.rank() + 1);
  for (int k = 0; k <= rs.rank(); ++k) {
    if ((s & bit(k)) != 0) ambient[k] = 1;
  }
  return rs.to_root_coords(ambient);
}

SupportFunction encode_typeA(const CoxeterFan& fan, const SetFunction& f) {
  const RootSystem& rs = fan.root_system();
  require_family(rs, {Family::A}, "type-A encoding");
  const int d = rs.rank() + 1;
  if (f.ground_size() != d) throw InputError("set function ground set does not match " + rs.name());
  const Subset full = bit(d) - 1;
  for (Subset end : {Subset{0}, full}) {
    if (f.has(end) && !f(end).is_zero()) {
      throw PreconditionError("type-A set function must vanish on the empty and full sets");
    }
  }
  SupportFunction h = SupportFunction::zero(fan.num_rays());
  for (Subset s = 1; s < full; ++s) h[lookup(fan, typeA_ray(rs, s))] = f(s);
  return h;
}

SetFunction decode_typeA(const CoxeterFan& fan, const SupportFunction& h) {
  const RootSystem& rs = fan.root_system();
  require_family(rs, {Family::A}, "type-A decoding");
  const int d = rs.rank() + 1;
  const Subset full = bit(d) - 1;
  SetFunction f(d);
  f.set(0, Scalar());
  f.set(full, Scalar());
  for (Subset s = 1; s < full; ++s) f.set(s, h[lookup(fan, typeA_ray(rs, s))]);
  return f;
}

SetFunction to_classical_submodular(const SetFunction& f, const Scalar& alpha) {
  SetFunction out(f.ground_size());
  const Subset full = bit(f.ground_size()) - 1;
  for (Subset s = 0; s <= full; ++s) {
    const Scalar base = f.has(s) ? f(s) : Scalar();
    out.set(s, base + alpha * Scalar(std::popcount(s)));
  }
  return out;
}

namespace {

Scalar set_value(const SetFunction& f, Subset s) {
  const Subset full = bit(f.ground_size()) - 1;
  if (!f.has(s) && (s == 0 || s == full)) return Scalar();
  return f(s);
}

}  // namespace

bool submodular_local_classical(const SetFunction& f) {
  const int d = f.ground_size();
  const Subset full = bit(d) - 1;
  for (Subset s = 0; s <= full; ++s) {
    for (int a = 0; a < d; ++a) {
      if ((s & bit(a)) != 0) continue;
      for (int b = a + 1; b < d; ++b) {
        if ((s & bit(b)) != 0) continue;
        const Scalar lhs = set_value(f, s | bit(a)) + set_value(f, s | bit(b));
        const Scalar rhs = set_value(f, s) + set_value(f, s | bit(a) | bit(b));
        if (lhs < rhs) return false;
      }
    }
  }
  return true;
}

bool submodular_global_classical(const SetFunction& f) {
  const Subset full = bit(f.ground_size()) - 1;
  for (Subset s = 0; s <= full; ++s) {
    for (Subset t = s + 1; t <= full; ++t) {
      if (set_value(f, s) + set_value(f, t) < set_value(f, s & t) + set_value(f, s | t)) {
        return false;
      }
    }
  }
  return true;
}

std::vector<RayFunctional> classical_typeA_functionals(const CoxeterFan& fan) {
  const RootSystem& rs = fan.root_system();
  require_family(rs, {Family::A}, "type-A inequalities");
  const int d = rs.rank() + 1;
  const Subset full = bit(d) - 1;
  auto ray_of = [&](Subset s) { return lookup(fan, typeA_ray(rs, s)); };
  std::vector<RayFunctional> out;
  for (Subset s = 0; s <= full; ++s) {
    for (int a = 0; a < d; ++a) {
      if ((s & bit(a)) != 0) continue;
      for (int b = a + 1; b < d; ++b) {
        if ((s & bit(b)) != 0) continue;
        RayFunctional f;
        f.emplace_back(ray_of(s | bit(a)), Scalar(1));
        f.emplace_back(ray_of(s | bit(b)), Scalar(1));
        if (s != 0) f.emplace_back(ray_of(s), Scalar(-1));
        if ((s | bit(a) | bit(b)) != full) f.emplace_back(ray_of(s | bit(a) | bit(b)), Scalar(-1));
        sort_functional(f);
        out.push_back(std::move(f));
      }
    }
  }
  return out;
}

// --- Types B/C/D ------------------------------------------------------------

Vector signed_ray(const RootSystem& rs, SignedSet s) {
  require_family(rs, {Family::B, Family::C, Family::D}, "signed-set rays");
  const int d = rs.rank();
  if (s.empty() || !s.admissible()) throw InputError("signed ray needs a nonempty admissible set");
  const Family fam = rs.spec().family;
  if (fam == Family::D && s.size() == d - 1) {
    throw InputError("D" + std::to_string(d) + " has no ray e_S with |S| = d-1");
  }
  Vector ambient(d);
  for (int k = 0; k < d; ++k) {
    if ((s.pos & bit(k)) != 0) ambient[k] = 1;
    if ((s.neg & bit(k)) != 0) ambient[k] = -1;
  }
  if (s.size() == d && fam != Family::C) ambient = scale(Scalar::fraction(1, 2), ambient);
  return rs.to_root_coords(ambient);
}

SupportFunction encode_typeBC(const CoxeterFan& fan, const SignedSetFunction& f) {
  const RootSystem& rs = fan.root_system();
  require_family(rs, {Family::B, Family::C}, "bisubmodular encoding");
  const int d = rs.rank();
  if (f.ground_size() != d) throw InputError("signed set function does not match " + rs.name());
  const bool halve = rs.spec().family == Family::B;
  SupportFunction h = SupportFunction::zero(fan.num_rays());
  for (const SignedSet& s : all_signed_sets(d)) {
    if (s.empty()) continue;
    Scalar v = f(s);
    if (halve && s.size() == d) v /= Scalar(2);
    h[lookup(fan, signed_ray(rs, s))] = std::move(v);
  }
  return h;
}

SignedSetFunction decode_typeBC(const CoxeterFan& fan, const SupportFunction& h) {
  const RootSystem& rs = fan.root_system();
  require_family(rs, {Family::B, Family::C}, "bisubmodular decoding");
  const int d = rs.rank();
  const bool halve = rs.spec().family == Family::B;
  SignedSetFunction f(d);
  f.set({}, Scalar());
  for (const SignedSet& s : all_signed_sets(d)) {
    if (s.empty()) continue;
    Scalar v = h[lookup(fan, signed_ray(rs, s))];
    if (halve && s.size() == d) v *= Scalar(2);
    f.set(s, std::move(v));
  }
  return f;
}

bool bisubmodular_local_displayed(const SignedSetFunction& f) {
  const int d = f.ground_size();
  for (const SignedSet& s : all_signed_sets(d)) {
    const std::vector<int> open = free_coords(s, d);
    if (s.size() <= d - 2) {
      for (std::size_t x = 0; x < open.size(); ++x) {
        for (std::size_t y = x + 1; y < open.size(); ++y) {
          for (int signs = 0; signs < 4; ++signs) {
            const SignedSet sa = with(s, open[x], (signs & 1) != 0);
            const SignedSet sb = with(s, open[y], (signs & 2) != 0);
            const SignedSet sab = with(sa, open[y], (signs & 2) != 0);
            if (f(sa) + f(sb) < f(s) + f(sab)) return false;
          }
        }
      }
    } else if (s.size() == d - 1) {
      const int a = open.front();
      if (f(with(s, a, false)) + f(with(s, a, true)) < Scalar(2) * f(s)) return false;
    }
  }
  return true;
}

bool bisubmodular_global_displayed(const SignedSetFunction& f) {
  const std::vector<SignedSet> sets = all_signed_sets(f.ground_size());
  for (std::size_t i = 0; i < sets.size(); ++i) {
    for (std::size_t j = i + 1; j < sets.size(); ++j) {
      const SignedSet s = sets[i];
      const SignedSet t = sets[j];
      if (f(s) + f(t) < f(signed_meet(s, t)) + f(signed_join(s, t))) return false;
    }
  }
  return true;
}

SupportFunction encode_typeD(const CoxeterFan& fan, const SignedSetFunction& f,
                             const SignedSetFunction& g) {
  const RootSystem& rs = fan.root_system();
  require_family(rs, {Family::D}, "disubmodular encoding");
  const int d = rs.rank();
  if (f.ground_size() != d || g.ground_size() != d) {
    throw InputError("signed set functions do not match " + rs.name());
  }
  SupportFunction h = SupportFunction::zero(fan.num_rays());
  for (const SignedSet& s : all_signed_sets(d)) {
    if (s.empty() || s.size() == d - 1) continue;
    h[lookup(fan, signed_ray(rs, s))] = s.size() == d ? g(s) : f(s);
  }
  return h;
}

SignedSetFunction disubmodular_bridge(const SignedSetFunction& f, const SignedSetFunction& g) {
  const int d = f.ground_size();
  SignedSetFunction h(d);
  h.set({}, Scalar());
  for (const SignedSet& s : all_signed_sets(d)) {
    if (s.empty()) continue;
    if (s.size() <= d - 2) {
      h.set(s, f(s));
    } else if (s.size() == d - 1) {
      const int a = free_coords(s, d).front();
      h.set(s, g(with(s, a, false)) + g(with(s, a, true)));
    } else {
      h.set(s, Scalar(2) * g(s));
    }
  }
  return h;
}

bool disubmodular_local_displayed(const SignedSetFunction& f, const SignedSetFunction& g) {
  const int d = f.ground_size();
  for (const SignedSet& s : all_signed_sets(d)) {
    const std::vector<int> open = free_coords(s, d);
    if (s.size() <= d - 4) {
      for (std::size_t x = 0; x < open.size(); ++x) {
        for (std::size_t y = x + 1; y < open.size(); ++y) {
          for (int signs = 0; signs < 4; ++signs) {
            const SignedSet sa = with(s, open[x], (signs & 1) != 0);
            const SignedSet sb = with(s, open[y], (signs & 2) != 0);
            const SignedSet sab = with(sa, open[y], (signs & 2) != 0);
            if (f(sa) + f(sb) < f(s) + f(sab)) return false;
          }
        }
      }
    } else if (s.size() == d - 3) {
      for (std::size_t c = 0; c < 3; ++c) {
        const int a = open[(c + 1) % 3];
        const int b = open[(c + 2) % 3];
        for (int signs = 0; signs < 4; ++signs) {
          const SignedSet sa = with(s, a, (signs & 1) != 0);
          const SignedSet sb = with(s, b, (signs & 2) != 0);
          const SignedSet sab = with(sa, b, (signs & 2) != 0);
          const Scalar rhs = f(s) + g(with(sab, open[c], false)) + g(with(sab, open[c], true));
          if (f(sa) + f(sb) < rhs) return false;
        }
      }
    } else if (s.size() == d - 2) {
      for (int signs = 0; signs < 4; ++signs) {
        const bool na = (signs & 1) != 0;
        const bool nb = (signs & 2) != 0;
        const SignedSet sab = with(with(s, open[0], na), open[1], nb);
        const SignedSet opposite = with(with(s, open[0], !na), open[1], !nb);
        if (g(sab) + g(opposite) < f(s)) return false;
      }
    }
  }
  return true;
}

}  // namespace coxcone
