#pragma once

#include <map>
#include <vector>

#include "grcat/pimodule.hpp"

namespace grcat {

/// Normalized cochain on a module: a map from degree-many group elements to
/// coefficient values, vanishing whenever an argument is the identity.  Only
/// nonzero values are stored, keyed by the mixed-radix encoding of the tuple.
struct Cochain {
  ModulePtr module;
  int degree = 0;
  std::map<long long, std::vector<long long>> entries;

  long long key(const std::vector<int>& tuple) const;
  std::vector<int> tuple_of(long long key) const;
  std::vector<long long> at(const std::vector<int>& tuple) const;
  void set(const std::vector<int>& tuple, std::vector<long long> value);
  bool is_zero() const { return entries.empty(); }

  Cochain& add(const Cochain& o);
  Cochain& sub(const Cochain& o);
  Cochain& negate();
  bool same_values(const Cochain& o) const { return degree == o.degree && entries == o.entries; }
};

Cochain zero_cochain(ModulePtr module, int degree);

}  // namespace grcat
