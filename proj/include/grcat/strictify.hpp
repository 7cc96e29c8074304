#pragma once

#include "grcat/functors.hpp"

namespace grcat {

/// A strict model for a reduced type: the automorphism categorical group of a
/// chosen base group, restricted along psi, together with an equivalence from
/// the given type to the model's reduction.
struct StrictifyResult {
  std::shared_ptr<const AutData> aut;   // automorphisms of the realizing group
  PullbackResult model;                 // restricted strict categorical group
  ReductionResult model_reduction;      // its reduction
  AbelianHom coeff_iso;                 // coefficients -> model coefficients
  GrFunctorData equivalence;            // type -> reduced model type
};

/// Realize a type as the restriction of an automorphism categorical group.
/// `g` is the candidate base group and `psi` maps the type's base group into
/// the outer automorphism classes of g.  Throws RealizationMismatch when no
/// equivariant coefficient identification makes the associators agree.
StrictifyResult strictify(const GrType& type, const FiniteGroup& g, const std::vector<int>& psi,
                          const Caps& caps = {});

}  // namespace grcat
