#pragma once

#include "grcat/skeletal.hpp"

namespace grcat {

/// A group to extend, a base group, and a homomorphism of the base into the
/// outer automorphism classes of the kernel group.
struct AbstractKernel {
  FiniteGroup pi;
  FiniteGroup g;
  std::shared_ptr<const AutData> aut;  // of g
  GroupHom psi;                        // pi -> aut->out
};

AbstractKernel make_kernel(FiniteGroup pi, FiniteGroup g, std::vector<int> psi,
                           const Caps& caps = {});

/// Schreier data: one automorphism per base element (identity at the base
/// identity) and a normalized map f into the kernel group relating the chosen
/// automorphisms to the products of the base.
struct FactorSet {
  std::vector<int> lift;            // automorphism index per base element
  std::vector<std::vector<int>> f;  // base x base -> kernel element
};

/// Which factor-set condition fails: 1 is the lift compatibility
/// F_x F_y = mu_{f(x,y)} F_{xy}, 2 is the twisted cocycle condition
/// F_x(f(y,z)) f(x,yz) = f(x,y) f(xy,z), 3 is normalization.
struct FactorSetWitness {
  int condition = 0;
  std::vector<int> tuple;
};

std::optional<FactorSetWitness> factor_set_check(const FiniteGroup& pi, const AutData& aut,
                                                 const FactorSet& fs);

/// A group extension of the kernel group by the base: the total group with
/// the inclusion of the kernel, the projection onto the base, and the induced
/// map into outer automorphism classes.
struct Extension {
  FiniteGroup b;
  GroupHom i;                          // g -> b
  GroupHom p;                          // b -> pi
  GroupHom psi_induced;                // pi -> Out(g)
  std::shared_ptr<const AutData> aut;  // of g
};

/// Total group on pairs (a, x) indexed x * |G| + a with the product
/// (a,x)(b,y) = (a F_x(b) f(x,y), xy).
Extension build_extension(const FiniteGroup& pi, const FiniteGroup& g, const FactorSet& fs,
                          const Caps& caps = {});

/// Factor set extracted through the smallest-preimage transversal.
FactorSet factor_set_of(const Extension& e);

/// Witness t with t(identity) = identity making the translation
/// (a, x) -> (a t(x), x) a congruence from a to b, or nullopt.  Throws
/// IncompatibleKernels when the induced outer actions differ.
std::optional<std::vector<int>> congruent(const Extension& a, const Extension& b,
                                          const Caps& caps = {});

/// The central obstruction of an abstract kernel: deterministic lifts, the
/// smallest valid f, and the resulting degree-3 cocycle over the center of
/// the kernel group with the base acting through the chosen lifts.
struct KernelObstruction {
  AbstractKernel kernel;
  std::vector<int> lifts;           // automorphism index per base element
  std::vector<std::vector<int>> f;  // base x base -> kernel element
  std::vector<int> center_elements;
  AbelianDecomposition center;
  ModulePtr module;  // the center as a base module
  Cochain k;
  std::vector<long long> k_class;
};

KernelObstruction kernel_obstruction(const AbstractKernel& kernel, const Caps& caps = {});
std::vector<long long> kernel_obstruction_class(const AbstractKernel& kernel,
                                                const Caps& caps = {});

/// Congruence classes of extensions inducing the kernel's outer action: empty
/// exactly when the obstruction class is nonzero, otherwise one pairwise
/// non-congruent extension per degree-2 class.
struct ExtensionEnumeration {
  KernelObstruction obstruction;
  CohomologyGroup h2;
  std::vector<FactorSet> factor_sets;
  std::vector<Extension> classes;
};

ExtensionEnumeration enumerate_extensions(const AbstractKernel& kernel, const Caps& caps = {});

}  // namespace grcat
