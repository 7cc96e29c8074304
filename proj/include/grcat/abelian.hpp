#pragma once

#include <map>
#include <string>
#include <vector>

#include "grcat/group.hpp"
#include "grcat/mat.hpp"

namespace grcat {

/// Finite abelian group presented as a direct sum of cyclic groups
/// Z/f_1 x ... x Z/f_k with every factor >= 2 (the trivial group has an empty
/// factor list).  Elements are coordinate vectors reduced mod the factors.
struct FiniteAbelianGroup {
  std::vector<long long> factors;

  int rank() const { return static_cast<int>(factors.size()); }
  long long order() const;
  long long exponent() const;  // lcm of the factors, 1 for the trivial group
  std::vector<long long> zero() const { return std::vector<long long>(factors.size(), 0); }
  std::vector<long long> reduce(std::vector<long long> v) const;
  std::vector<long long> add(const std::vector<long long>& a, const std::vector<long long>& b) const;
  std::vector<long long> neg(const std::vector<long long>& a) const;
  std::vector<long long> sub(const std::vector<long long>& a, const std::vector<long long>& b) const;
  std::vector<long long> smul(long long k, const std::vector<long long>& a) const;
  long long index_of(const std::vector<long long>& v) const;  // mixed radix, last coordinate fastest
  std::vector<long long> element(long long index) const;
  std::string label(const std::vector<long long>& v) const;
  bool operator==(const FiniteAbelianGroup&) const = default;
};

FiniteAbelianGroup abelian_group(std::vector<long long> factors);

/// Invariant factors d_1 | d_2 | ... of the group (independent of presentation).
std::vector<long long> invariant_factors(const FiniteAbelianGroup& g);
bool same_abstract_group(const FiniteAbelianGroup& a, const FiniteAbelianGroup& b);

/// Cayley-table form of the group, elements ordered by index_of.
FiniteGroup cayley_of(const FiniteAbelianGroup& g);

/// An abelian finite group given by a Cayley table, rewritten in invariant
/// factor coordinates.  `coords[a]` are the coordinates of table element a and
/// `generators[t]` is the table element with coordinates e_t.
struct AbelianDecomposition {
  FiniteAbelianGroup group;
  std::vector<std::vector<long long>> coords;
  std::vector<int> generators;
  std::map<std::vector<long long>, int> lookup;

  int element_of(const std::vector<long long>& v) const;
};

AbelianDecomposition decompose_abelian(const FiniteGroup& g);

/// Homomorphism between finite abelian groups, stored as a matrix whose column
/// j is the image of the j-th source generator, entries reduced mod the target
/// factors row-wise.
struct AbelianHom {
  FiniteAbelianGroup source, target;
  Mat m;

  std::vector<long long> apply(const std::vector<long long>& v) const;
  bool operator==(const AbelianHom&) const = default;
};

AbelianHom make_abelian_hom(FiniteAbelianGroup source, FiniteAbelianGroup target, Mat m);
AbelianHom identity_abelian_hom(const FiniteAbelianGroup& g);
AbelianHom zero_abelian_hom(const FiniteAbelianGroup& source, const FiniteAbelianGroup& target);
AbelianHom compose_abelian(const AbelianHom& outer, const AbelianHom& inner);
bool is_abelian_iso(const AbelianHom& f);
AbelianHom invert_abelian_iso(const AbelianHom& f);

std::vector<AbelianHom> all_abelian_homs(const FiniteAbelianGroup& source,
                                         const FiniteAbelianGroup& target,
                                         long long cap = 2'000'000);
std::vector<AbelianHom> all_abelian_isos(const FiniteAbelianGroup& source,
                                         const FiniteAbelianGroup& target,
                                         long long cap = 2'000'000);

struct AbelianHomAnalysis {
  long long kernel_order = 0;
  long long image_order = 0;
  long long cokernel_order = 0;
  std::vector<long long> cokernel_factors;
};

AbelianHomAnalysis analyze_hom(const AbelianHom& f);

}  // namespace grcat
