#pragma once

#include <optional>
#include <vector>

#include "grcat/caps.hpp"
#include "grcat/cochain.hpp"
#include "grcat/mat.hpp"

namespace grcat {

/// Coboundary of a cochain, evaluated at one output tuple (input degree <= 3).
std::vector<long long> coboundary_at(const Cochain& c, const std::vector<int>& tuple);

/// Full coboundary as a stored cochain (input degree <= 2).
Cochain coboundary(const Cochain& c);

/// First tuple (lexicographic, identity-free) where the cocycle condition
/// fails, or nullopt if the cochain is a cocycle.
std::optional<std::vector<int>> cocycle_check(const Cochain& c);

/// Dense integer coordinates for normalized cochains of one degree: one block
/// of coefficient coordinates per identity-free tuple, tuples in lexicographic
/// order.
long long cochain_dim(const PiModule& m, int degree);
std::vector<long long> level_moduli(const PiModule& m, int degree);
std::vector<int> tuple_at(const PiModule& m, int degree, long long t);
Mat lift_cochain(const Cochain& c);
Cochain unlift_cochain(ModulePtr module, int degree, const Mat& column);

/// Matrix of the coboundary map out of the given degree (0 through 3).
Mat coboundary_matrix(const PiModule& m, int degree);

/// Cohomology of the module in one degree, as a quotient of the cocycle
/// lattice by boundaries plus coefficient periods.  Computed in residues mod
/// the coefficient exponent, which bounds every intermediate value.
struct CohomologyGroup {
  ModulePtr module;
  int degree = 0;
  ModQuotient quotient;

  long long order() const { return quotient.order(); }
  const std::vector<long long>& factors() const { return quotient.factors; }
  std::vector<long long> class_of(const Cochain& z) const;
  Cochain representative(const std::vector<long long>& cls) const;
  std::vector<Cochain> class_representatives(long long cap = 2'000'000) const;
};

CohomologyGroup cohomology_group(ModulePtr module, int degree);

/// A cochain one degree down whose coboundary equals the target, if one
/// exists.  The target must be a cocycle for the result to be meaningful.
std::optional<Cochain> bounding_cochain(const Cochain& target);

/// Every normalized cocycle of the degree (not just one per class).
std::vector<Cochain> all_cocycles(ModulePtr module, int degree, long long cap = 2'000'000);

/// Push a cochain forward along an equivariant coefficient map into another
/// module over the same acting group.
Cochain pushforward(const AbelianHom& f, const ModulePtr& target_module, const Cochain& c);

/// Pull a cochain back along a homomorphism of acting groups; the result lives
/// over the restricted module.
Cochain pullback(const GroupHom& phi, const Cochain& c);

}  // namespace grcat
