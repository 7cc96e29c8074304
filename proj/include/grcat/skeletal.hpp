#pragma once

#include <functional>
#include <memory>
#include <optional>
#include <utility>

#include "grcat/aut.hpp"
#include "grcat/caps.hpp"
#include "grcat/cohomology.hpp"

namespace grcat {

/// Reduced type of a categorical group: a base group, an abelian coefficient
/// module over it, and a normalized degree-3 cocycle (the associator data).
struct GrType {
  ModulePtr module;
  Cochain h;

  const FiniteGroup& pi() const { return module->pi; }
  const FiniteAbelianGroup& coeff() const { return module->coeff; }
};

GrType make_gr_type(ModulePtr module, Cochain h);
bool types_equal(const GrType& a, const GrType& b);

/// Morphism (obj, u): obj -> obj of the skeletal model; u is a coefficient
/// value.  Composition adds labels, tensor twists the right label by the
/// action of the left object.
struct SkelMor {
  int obj = 0;
  std::vector<long long> u;
};

SkelMor skel_id(const GrType& t, int obj);
SkelMor skel_compose(const GrType& t, const SkelMor& second, const SkelMor& first);
SkelMor skel_tensor(const GrType& t, const SkelMor& left, const SkelMor& right);
SkelMor skel_assoc(const GrType& t, int x, int y, int z);
SkelMor skel_invert(const GrType& t, const SkelMor& f);

/// First identity-free 4-tuple where the two re-bracketing routes of the
/// associator differ, or nullopt when they all agree.
std::optional<std::vector<int>> pentagon_check(const GrType& t);

/// Strict categorical group presented through callables: objects are indices
/// 0..object_count-1 with the unit at 0 and a strictly associative and unital
/// tensor on objects; morphism labels are integers and the identity label of
/// the unit object must sort first among its endomorphism labels.
struct Mor {
  int src = 0;
  int dst = 0;
  long long label = 0;

  bool operator==(const Mor&) const = default;
};

struct StrictGrCat {
  int object_count = 0;  // negative marks an unenumerable object class
  std::function<int(int, int)> tensor_obj;
  std::function<std::vector<long long>(int, int)> hom;  // sorted labels src -> dst
  std::function<Mor(int)> id;
  std::function<Mor(const Mor&, const Mor&)> compose;  // second after first
  std::function<Mor(const Mor&, const Mor&)> tensor;
};

Mor invert_mor(const StrictGrCat& c, const Mor& f);

/// Strict categorical group of a group's automorphisms: objects are the
/// automorphisms, a morphism alpha -> beta is a group element c with
/// alpha = (conjugation by c) after beta, and tensor is composition.
StrictGrCat aut_g_category(std::shared_ptr<const AutData> a, const Caps& caps = {});

/// Reduction of a strict categorical group to its type: component group on
/// isomorphism classes, coefficient module on the unit endomorphisms, and the
/// associator cocycle measured through chosen comparison isomorphisms.
struct ReductionResult {
  FiniteGroup pi0;
  AbelianDecomposition pi1;
  ModulePtr module;
  Cochain h;
  std::vector<int> class_of;               // object -> class
  std::vector<int> stick;                  // class -> smallest member object
  std::vector<Mor> iso;                    // object -> chosen iso onto its stick
  std::vector<long long> end_unit_labels;  // sorted labels of End(unit)

  GrType type() const { return GrType{module, h}; }
};

ReductionResult reduce_strict(const StrictGrCat& c, const Caps& caps = {});

/// Restriction of a strict categorical group along a homomorphism into its
/// component group; objects are pairs (x, object in the class hit by x),
/// ordered x-major so the reduced component group is indexed like the source.
struct PullbackResult {
  StrictGrCat cat;
  std::vector<std::pair<int, int>> objects;
};

PullbackResult pullback_strict(const StrictGrCat& c, const ReductionResult& red,
                               const GroupHom& psi, const Caps& caps = {});

}  // namespace grcat
