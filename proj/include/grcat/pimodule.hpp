#pragma once

#include <memory>
#include <vector>

#include "grcat/abelian.hpp"
#include "grcat/group.hpp"

namespace grcat {

/// A finite group acting on a finite abelian coefficient group by
/// automorphisms: action[s] is the automorphism for group element s.
struct PiModule {
  FiniteGroup pi;
  FiniteAbelianGroup coeff;
  std::vector<AbelianHom> action;

  std::vector<long long> act(int s, const std::vector<long long>& v) const {
    return action[s].apply(v);
  }
};

using ModulePtr = std::shared_ptr<const PiModule>;

ModulePtr make_module(FiniteGroup pi, FiniteAbelianGroup coeff, std::vector<AbelianHom> action);
ModulePtr trivial_module(FiniteGroup pi, FiniteAbelianGroup coeff);

/// Restrict the action along a homomorphism into the acting group.
ModulePtr restrict_along(const GroupHom& phi, const ModulePtr& m);

bool modules_equal(const PiModule& a, const PiModule& b);
bool action_is_trivial(const PiModule& m);

}  // namespace grcat
