#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "grcat/caps.hpp"
#include "grcat/error.hpp"

namespace grcat {

/// Finite group presented by its full multiplication table.  Element 0 is the
/// identity.  Construct through validate_group so the axioms are checked.
struct FiniteGroup {
  std::vector<std::vector<int>> table;
  std::vector<int> inv;
  std::vector<std::string> names;

  int order() const { return static_cast<int>(table.size()); }
  int op(int a, int b) const { return table[a][b]; }
  int inverse(int a) const { return inv[a]; }
  int power(int a, long long e) const;
  int element_order(int a) const;
  bool is_abelian() const;
  bool is_cyclic() const;
  std::string label(int a) const;

  bool operator==(const FiniteGroup& o) const { return table == o.table; }
};

/// nullopt when the table is a valid group; otherwise the violated axiom with
/// its witness elements.
std::optional<Error> check_group_table(const std::vector<std::vector<int>>& table);
FiniteGroup validate_group(std::vector<std::vector<int>> table, std::vector<std::string> names = {});

std::vector<int> center(const FiniteGroup& g);

FiniteGroup cyclic_group(int n);
FiniteGroup direct_product(const FiniteGroup& a, const FiniteGroup& b);
FiniteGroup dihedral_group(int n);  // order 2n, n >= 1
FiniteGroup quaternion_group();     // order 8
FiniteGroup symmetric_group(int n); // n <= 5

struct GroupHom {
  FiniteGroup source, target;
  std::vector<int> map;

  int operator()(int a) const { return map[a]; }
  bool operator==(const GroupHom& o) const {
    return source == o.source && target == o.target && map == o.map;
  }
};

GroupHom make_hom(FiniteGroup source, FiniteGroup target, std::vector<int> map);
GroupHom identity_hom(const FiniteGroup& g);
GroupHom trivial_hom(const FiniteGroup& s, const FiniteGroup& t);
GroupHom compose_homs(const GroupHom& outer, const GroupHom& inner);
bool is_injective(const GroupHom& f);
bool is_surjective(const GroupHom& f);

/// Sorted element list of the subgroup generated by gens.
std::vector<int> generated_subgroup(const FiniteGroup& g, const std::vector<int>& gens);
/// Greedy minimal generating sequence (ascending element indices).
std::vector<int> generating_set(const FiniteGroup& g);
/// Every homomorphism a -> b as a map vector, sorted lexicographically.
std::vector<std::vector<int>> all_homs(const FiniteGroup& a, const FiniteGroup& b,
                                       long long cap = 2'000'000);

/// Coarse isomorphism-invariant summary used in reports.
struct GroupProfile {
  int order = 0;
  bool abelian = false;
  bool cyclic = false;
  std::vector<std::pair<int, int>> order_histogram;  // (element order, count)
  std::string description;
};

GroupProfile profile_group(const FiniteGroup& g);

}  // namespace grcat
