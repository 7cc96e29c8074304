#pragma once

#include <memory>
#include <vector>

#include "grcat/group.hpp"

namespace grcat {

/// Automorphism data for a finite group: the full automorphism group under a
/// fixed lexicographic ordering of the maps, the inner automorphisms, and the
/// outer quotient.  Index 0 of `maps` is always the identity automorphism and
/// coset 0 of `out` is always the inner-automorphism coset.
struct AutData {
  FiniteGroup base;
  std::vector<std::vector<int>> maps;    // lex-sorted automorphism maps
  FiniteGroup aut;                       // composition table: op(i, j) = maps[i] after maps[j]
  std::vector<int> mu;                   // mu[c] = index of x -> c x c^-1
  std::vector<int> inner;                // sorted indices of inner automorphisms
  std::vector<int> coset_of;             // inner coset index of each automorphism
  std::vector<std::vector<int>> cosets;  // members of each coset, sorted ascending
  std::vector<int> out_reps;             // smallest member of each coset
  FiniteGroup out;                       // quotient table on cosets

  int order() const { return static_cast<int>(maps.size()); }
  int apply(int i, int x) const { return maps[i][x]; }
  int compose(int i, int j) const { return aut.op(i, j); }
  int invert(int i) const { return aut.inverse(i); }
  int index_of(const std::vector<int>& map) const;
};

AutData automorphisms(const FiniteGroup& g, long long cap = 2'000'000);

}  // namespace grcat
