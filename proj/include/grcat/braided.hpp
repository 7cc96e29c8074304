#pragma once

#include "grcat/functors.hpp"

namespace grcat {

/// Braiding data over an abelian base with trivial action: a degree-3 cochain
/// h and a degree-2 cochain eta subject to three identities (cocycle condition
/// on h plus the two mixed identities that mirror the hexagon axioms).
struct AbelianCocyclePair {
  ModulePtr module;
  Cochain h;
  Cochain eta;
};

/// Which of the three identities fails, and where.
struct AbelianCocycleWitness {
  int identity = 0;  // 1, 2 or 3
  std::vector<int> tuple;
};

std::optional<AbelianCocycleWitness> abelian_cocycle_check(const AbelianCocyclePair& p);

/// Validated pair; requires an abelian base group acting trivially.
AbelianCocyclePair make_abelian_pair(ModulePtr module, Cochain h, Cochain eta);

/// Boundary of a degree-2 cochain in the braided sense: its ordinary
/// coboundary paired with its antisymmetrization g(x,y) - g(y,x).
AbelianCocyclePair abelian_coboundary(const Cochain& g);

/// A reduced type together with a braiding cochain.
struct BraidedGrType {
  GrType type;
  Cochain eta;
};

BraidedGrType make_braided(GrType type, Cochain eta);

/// First triple where a hexagon route comparison fails, or nullopt.  These
/// compose the actual skeletal routes, so they hold exactly when the
/// corresponding mixed identity does.
std::optional<std::vector<int>> hexagon_check_1(const GrType& t, const Cochain& eta);
std::optional<std::vector<int>> hexagon_check_2(const GrType& t, const Cochain& eta);

/// A function from an abelian base group into coefficient coordinates.
struct QuadraticMap {
  FiniteGroup pi;
  FiniteAbelianGroup coeff;
  std::vector<std::vector<long long>> values;  // one per base element

  bool operator==(const QuadraticMap&) const = default;
};

/// Diagonal of a braiding cochain, t(x) = eta(x, x).
QuadraticMap trace_of(const Cochain& eta);

/// Quadratic: t(0) = 0, t(-x) = t(x), and the polarization
/// b(x, y) = t(x+y) - t(x) - t(y) is additive in each argument.
bool is_quadratic(const QuadraticMap& q);

/// The looser reading that drops the evenness requirement.
bool is_quadratic_polarization_only(const QuadraticMap& q);

std::vector<QuadraticMap> enumerate_quadratic_maps(const FiniteGroup& pi,
                                                   const FiniteAbelianGroup& coeff,
                                                   long long cap = 2'000'000);
long long count_polarization_only_maps(const FiniteGroup& pi, const FiniteAbelianGroup& coeff,
                                       long long cap = 2'000'000);

/// Classes of braiding pairs modulo braided boundaries, as a finite quotient
/// of the combined (h, eta) lattice, computed in residues mod the coefficient
/// exponent.
struct AbelianCohomology {
  ModulePtr module;
  ModQuotient quotient;
  long long h_dim = 0;  // leading coordinates of the combined lattice

  long long order() const { return quotient.order(); }
  const std::vector<long long>& factors() const { return quotient.factors; }
  std::vector<long long> class_of(const AbelianCocyclePair& p) const;
  AbelianCocyclePair representative(const std::vector<long long>& cls) const;
  std::vector<AbelianCocyclePair> class_representatives(long long cap = 2'000'000) const;
};

AbelianCohomology abelian_h3(ModulePtr module);

/// A degree-2 cochain whose braided boundary is the pair, if one exists.
std::optional<Cochain> abelian_bounding_cochain(const AbelianCocyclePair& p);

/// Comparison of the braided classification with the direct enumeration of
/// quadratic maps: the diagonal map on classes should be a bijection onto the
/// quadratic maps.
struct EmCheckReport {
  long long cohomology_order = 0;
  std::vector<long long> cohomology_factors;
  long long quadratic_count = 0;
  long long polarization_only_count = 0;
  bool traces_quadratic = false;
  bool traces_additive = false;
  bool traces_distinct = false;
  bool traces_cover = false;

  bool match() const {
    return traces_quadratic && traces_additive && traces_distinct && traces_cover;
  }
};

EmCheckReport em_check(const FiniteGroup& pi, const FiniteAbelianGroup& coeff,
                       const Caps& caps = {});

}  // namespace grcat
