#pragma once

#include <memory>

#include "coxcone/submodular.hpp"

namespace coxcone {

// A root system with its Weyl group, fan and cone, built once. The members
// refer to each other, so a System is neither copied nor moved.
struct System {
  System(const RootSystemSpec& spec, std::size_t cap);
  System(const System&) = delete;
  System& operator=(const System&) = delete;

  static std::unique_ptr<System> build(const RootSystemSpec& spec,
                                       std::size_t cap = WeylGroup::kDefaultCap) {
    return std::make_unique<System>(spec, cap);
  }

  RootSystem rs;
  WeylGroup W;
  CoxeterFan fan;
  SubmodularCone cone;
};

inline System::System(const RootSystemSpec& spec, std::size_t cap)
    : rs(RootSystem::build(spec)), W(WeylGroup::enumerate(rs, cap)), fan(rs, W), cone(fan) {}

}  // namespace coxcone
