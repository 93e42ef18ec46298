#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "coxcone/submodular.hpp"

namespace coxcone {

// Subsets of the ground set [d] as bitmasks (bit k is element k+1).
using Subset = std::uint32_t;

// An admissible signed subset of [±d]: `pos` holds k for +k, `neg` holds k
// for -k, and the two never overlap.
struct SignedSet {
  std::uint32_t pos = 0;
  std::uint32_t neg = 0;

  int size() const;
  bool empty() const { return (pos | neg) == 0; }
  std::uint32_t support() const { return pos | neg; }
  bool admissible() const { return (pos & neg) == 0; }

  friend bool operator==(const SignedSet&, const SignedSet&) = default;
};

// S ⊓ T: the common signed elements.
SignedSet signed_meet(SignedSet s, SignedSet t);
// S ⊔ T: elements of S ∪ T whose negation is not also in S ∪ T.
SignedSet signed_join(SignedSet s, SignedSet t);
// All admissible signed subsets of [±d] including the empty one, ordered by
// their ternary code.
std::vector<SignedSet> all_signed_sets(int d);

// A partial function on subsets of [d].
class SetFunction {
 public:
  explicit SetFunction(int d) : d_(d), values_(std::size_t{1} << d) {}

  int ground_size() const { return d_; }
  bool has(Subset s) const { return values_[s].has_value(); }
  void set(Subset s, Scalar v) { values_[s] = std::move(v); }
  // Throws InputError when undefined.
  const Scalar& operator()(Subset s) const;

 private:
  int d_;
  std::vector<std::optional<Scalar>> values_;
};

// A partial function on admissible signed subsets of [±d].
class SignedSetFunction {
 public:
  explicit SignedSetFunction(int d);

  int ground_size() const { return d_; }
  bool has(SignedSet s) const { return values_[code(s)].has_value(); }
  void set(SignedSet s, Scalar v) { values_[code(s)] = std::move(v); }
  // The empty set evaluates to 0 when unset. Throws InputError when
  // undefined otherwise.
  Scalar operator()(SignedSet s) const;

  std::size_t code(SignedSet s) const;

 private:
  int d_;
  std::vector<std::optional<Scalar>> values_;
};

// --- Type A: submodular functions ------------------------------------------

// Root coordinates of the ray ē_S of A_{d-1}, for ∅ ⊊ S ⊊ [d].
Vector typeA_ray(const RootSystem& rs, Subset s);

// h(ē_S) = f(S). Requires f(∅) = f([d]) = 0 and every proper nonempty S
// defined; throws PreconditionError / InputError otherwise. `fan` must be of
// type A_{d-1}.
SupportFunction encode_typeA(const CoxeterFan& fan, const SetFunction& f);
SetFunction decode_typeA(const CoxeterFan& fan, const SupportFunction& h);

// Classical submodular function F(S) = f(S) + alpha |S|.
SetFunction to_classical_submodular(const SetFunction& f, const Scalar& alpha);

// The displayed 3-term system f(Sa)+f(Sb) >= f(S)+f(Sab), and the 4-term
// lattice system f(S)+f(T) >= f(S∩T)+f(S∪T); f(∅) = f([d]) = 0 assumed.
bool submodular_local_classical(const SetFunction& f);
bool submodular_global_classical(const SetFunction& f);

// The 3-term inequalities as functionals on the rays of `fan` (type A_{d-1}),
// one per (S, {a, b}); empty and full sets contribute nothing.
std::vector<RayFunctional> classical_typeA_functionals(const CoxeterFan& fan);

// --- Types B/C: bisubmodular functions -------------------------------------

// Root coordinates of e_S in B_d/C_d/D_d, or of e_S / 2 where the ray
// dictionary uses the half vector (|S| = d in B_d and D_d).
Vector signed_ray(const RootSystem& rs, SignedSet s);

// h(e_S) = f(S) on C_d. On B_d the same f describes the same piecewise-linear
// function, so the ray e_S / 2 (|S| = d) receives f(S) / 2.
SupportFunction encode_typeBC(const CoxeterFan& fan, const SignedSetFunction& f);
SignedSetFunction decode_typeBC(const CoxeterFan& fan, const SupportFunction& h);

// Displayed local system (the |S| <= d-2 and |S| = d-1 families) and the
// global system f(S)+f(T) >= f(S⊓T)+f(S⊔T); f(∅) = 0.
bool bisubmodular_local_displayed(const SignedSetFunction& f);
bool bisubmodular_global_displayed(const SignedSetFunction& f);

// --- Type D: disubmodular functions ----------------------------------------

// f on admissible sets of size <= d-2, g on admissible sets of size d:
// h(e_S) = f(S), h(e_S / 2) = g(S).
SupportFunction encode_typeD(const CoxeterFan& fan, const SignedSetFunction& f,
                             const SignedSetFunction& g);
// Extends (f, g) to all admissible sets: f, then g(Sa)+g(Sā) at size d-1,
// then 2g(S) at size d.
SignedSetFunction disubmodular_bridge(const SignedSetFunction& f, const SignedSetFunction& g);
// The displayed three-family local D_d system.
bool disubmodular_local_displayed(const SignedSetFunction& f, const SignedSetFunction& g);

}  // namespace coxcone
