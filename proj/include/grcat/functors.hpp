#pragma once

#include "grcat/skeletal.hpp"

namespace grcat {

/// Monoidal functor between reduced types: a base-group homomorphism phi, an
/// equivariant coefficient map f, and a degree-2 comparison cochain g over the
/// source base group with coefficients restricted along phi.
struct GrFunctorData {
  GrType source, target;
  GroupHom phi;
  AbelianHom f;
  Cochain g;
};

/// Restriction of the target coefficients to a module over the source base.
ModulePtr restricted_coefficients(const GrType& source, const GrType& target,
                                  const GroupHom& phi);

/// Obstruction cocycle: pullback of the target associator minus pushforward
/// of the source associator; its class decides realizability of (phi, f).
Cochain obstruction(const GrType& source, const GrType& target, const GroupHom& phi,
                    const AbelianHom& f);

/// First triple where the functor compatibility equation fails, or nullopt.
std::optional<std::vector<int>> gr_functor_check(const GrFunctorData& F);

GrFunctorData make_gr_functor(GrType source, GrType target, GroupHom phi, AbelianHom f, Cochain g);

std::optional<GrFunctorData> try_realize(const GrType& source, const GrType& target,
                                         const GroupHom& phi, const AbelianHom& f);
GrFunctorData realize(const GrType& source, const GrType& target, const GroupHom& phi,
                      const AbelianHom& f, const Caps& caps = {});

GrFunctorData identity_functor(const GrType& t);
GrFunctorData compose_functors(const GrFunctorData& outer, const GrFunctorData& inner);

/// Homotopy between functors with the same (phi, f): a degree-1 cochain whose
/// coboundary bridges the comparison cochains.
struct Homotopy {
  Cochain u;
};

std::optional<Homotopy> find_homotopy(const GrFunctorData& a, const GrFunctorData& b);
bool are_homotopic(const GrFunctorData& a, const GrFunctorData& b);

/// All monoidal self-homotopies of a functor (degree-1 cocycles).
std::vector<Cochain> functor_automorphisms(const GrFunctorData& F, long long cap = 2'000'000);

/// Homotopy classification of the functors extending (phi, f).
struct FunctorClassification {
  bool realizable = false;
  std::vector<long long> obstruction_class;  // class coordinates when nonzero
  std::vector<GrFunctorData> classes;
  CohomologyGroup h2;
};

FunctorClassification classify_functors(const GrType& source, const GrType& target,
                                        const GroupHom& phi, const AbelianHom& f,
                                        const Caps& caps = {});

/// First pair where the braiding compatibility equation fails for a functor
/// between braided types with the given braiding cochains, or nullopt.
std::optional<std::vector<int>> braided_compatibility_check(const GrFunctorData& F,
                                                            const Cochain& eta_source,
                                                            const Cochain& eta_target);

}  // namespace grcat
