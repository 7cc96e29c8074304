#include "grcat/group.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

namespace grcat {

int FiniteGroup::power(int a, long long e) const {
  int n = order();
  if (n == 0) internal_error("power on empty group");
  long long m = e % n;  // element order divides group order
  long long steps = ((m % n) + n) % n;
  int r = 0;
  for (long long i = 0; i < steps; ++i) r = op(r, a);
  if (e < 0 && m != 0) {
    // computed a^(e mod n) with nonnegative exponent; already equals a^e
  }
  return r;
}

int FiniteGroup::element_order(int a) const {
  int r = a, k = 1;
  while (r != 0) {
    r = op(r, a);
    ++k;
  }
  return k;
}

bool FiniteGroup::is_abelian() const {
  int n = order();
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b)
      if (op(a, b) != op(b, a)) return false;
  return true;
}

bool FiniteGroup::is_cyclic() const {
  int n = order();
  for (int a = 0; a < n; ++a)
    if (element_order(a) == n) return true;
  return false;
}

std::string FiniteGroup::label(int a) const {
  if (a >= 0 && a < static_cast<int>(names.size()) && !names[a].empty()) return names[a];
  return std::to_string(a);
}

std::optional<Error> check_group_table(const std::vector<std::vector<int>>& table) {
  const int n = static_cast<int>(table.size());
  if (n == 0) return Error(Errc::NotClosed, "empty table");
  for (int a = 0; a < n; ++a) {
    if (static_cast<int>(table[a].size()) != n)
      return Error(Errc::NotClosed, "row " + std::to_string(a) + " has wrong length", {a});
    for (int b = 0; b < n; ++b)
      if (table[a][b] < 0 || table[a][b] >= n)
        return Error(Errc::NotClosed,
                     "entry (" + std::to_string(a) + "," + std::to_string(b) + ") out of range",
                     {a, b});
  }
  for (int a = 0; a < n; ++a) {
    if (table[0][a] != a || table[a][0] != a)
      return Error(Errc::NoIdentityAtZero, "element 0 is not a two-sided identity", {a});
  }
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c)
        if (table[table[a][b]][c] != table[a][table[b][c]])
          return Error(Errc::NotAssociative,
                       "(" + std::to_string(a) + "*" + std::to_string(b) + ")*" + std::to_string(c) +
                           " != " + std::to_string(a) + "*(" + std::to_string(b) + "*" +
                           std::to_string(c) + ")",
                       {a, b, c});
  for (int a = 0; a < n; ++a) {
    bool found = false;
    for (int b = 0; b < n && !found; ++b)
      if (table[a][b] == 0 && table[b][a] == 0) found = true;
    if (!found)
      return Error(Errc::NoInverse, "element " + std::to_string(a) + " has no inverse", {a});
  }
  return std::nullopt;
}

FiniteGroup validate_group(std::vector<std::vector<int>> table, std::vector<std::string> names) {
  if (auto err = check_group_table(table)) throw *err;
  FiniteGroup g;
  g.table = std::move(table);
  g.names = std::move(names);
  const int n = g.order();
  if (!g.names.empty() && static_cast<int>(g.names.size()) != n)
    throw Error(Errc::ParseError, "element name list length does not match table order");
  g.inv.assign(n, 0);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      if (g.table[a][b] == 0) {
        g.inv[a] = b;
        break;
      }
  return g;
}

std::vector<int> center(const FiniteGroup& g) {
  std::vector<int> z;
  const int n = g.order();
  for (int a = 0; a < n; ++a) {
    bool central = true;
    for (int b = 0; b < n && central; ++b)
      if (g.op(a, b) != g.op(b, a)) central = false;
    if (central) z.push_back(a);
  }
  return z;
}

FiniteGroup cyclic_group(int n) {
  std::vector<std::vector<int>> t(n, std::vector<int>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) t[i][j] = (i + j) % n;
  return validate_group(std::move(t));
}

FiniteGroup direct_product(const FiniteGroup& a, const FiniteGroup& b) {
  const int na = a.order(), nb = b.order(), n = na * nb;
  std::vector<std::vector<int>> t(n, std::vector<int>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      int ia = i / nb, ib = i % nb, ja = j / nb, jb = j % nb;
      t[i][j] = a.op(ia, ja) * nb + b.op(ib, jb);
    }
  return validate_group(std::move(t));
}

FiniteGroup dihedral_group(int n) {
  if (n < 1) internal_error("dihedral_group needs n >= 1");
  const int m = 2 * n;
  auto idx = [n](int i, int j) { return j * n + i; };
  std::vector<std::vector<int>> t(m, std::vector<int>(m));
  for (int i1 = 0; i1 < n; ++i1)
    for (int j1 = 0; j1 < 2; ++j1)
      for (int i2 = 0; i2 < n; ++i2)
        for (int j2 = 0; j2 < 2; ++j2) {
          int i = j1 == 0 ? (i1 + i2) % n : ((i1 - i2) % n + n) % n;
          int j = (j1 + j2) % 2;
          t[idx(i1, j1)][idx(i2, j2)] = idx(i, j);
        }
  return validate_group(std::move(t));
}

FiniteGroup quaternion_group() {
  // presentation <a, b | a^4, b^2 = a^2, b a b^-1 = a^-1>, element a^i b^j at j*4+i
  auto idx = [](int i, int j) { return j * 4 + i; };
  std::vector<std::vector<int>> t(8, std::vector<int>(8));
  for (int i1 = 0; i1 < 4; ++i1)
    for (int j1 = 0; j1 < 2; ++j1)
      for (int i2 = 0; i2 < 4; ++i2)
        for (int j2 = 0; j2 < 2; ++j2) {
          int i, j;
          if (j1 == 0) {
            i = (i1 + i2) % 4;
            j = j2;
          } else if (j2 == 0) {
            i = ((i1 - i2) % 4 + 4) % 4;
            j = 1;
          } else {
            i = ((i1 - i2 + 2) % 4 + 4) % 4;
            j = 0;
          }
          t[idx(i1, j1)][idx(i2, j2)] = idx(i, j);
        }
  return validate_group(std::move(t));
}

FiniteGroup symmetric_group(int n) {
  if (n < 1 || n > 5) internal_error("symmetric_group supports 1 <= n <= 5");
  std::vector<std::vector<int>> perms;
  std::vector<int> p(n);
  std::iota(p.begin(), p.end(), 0);
  do {
    perms.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));
  std::map<std::vector<int>, int> index;
  for (size_t i = 0; i < perms.size(); ++i) index[perms[i]] = static_cast<int>(i);
  const int m = static_cast<int>(perms.size());
  std::vector<std::vector<int>> t(m, std::vector<int>(m));
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) {
      std::vector<int> comp(n);
      for (int x = 0; x < n; ++x) comp[x] = perms[i][perms[j][x]];
      t[i][j] = index[comp];
    }
  return validate_group(std::move(t));
}

GroupHom make_hom(FiniteGroup source, FiniteGroup target, std::vector<int> map) {
  const int n = source.order(), m = target.order();
  if (static_cast<int>(map.size()) != n)
    throw Error(Errc::NotAHomomorphism, "map length does not match source order");
  for (int a = 0; a < n; ++a)
    if (map[a] < 0 || map[a] >= m)
      throw Error(Errc::NotAHomomorphism, "image out of range", {a, map[a]});
  if (map[0] != 0) throw Error(Errc::NotAHomomorphism, "identity not preserved", {map[0]});
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      if (map[source.op(a, b)] != target.op(map[a], map[b]))
        throw Error(Errc::NotAHomomorphism, "multiplicativity fails", {a, b});
  return GroupHom{std::move(source), std::move(target), std::move(map)};
}

GroupHom identity_hom(const FiniteGroup& g) {
  std::vector<int> m(g.order());
  std::iota(m.begin(), m.end(), 0);
  return GroupHom{g, g, std::move(m)};
}

GroupHom trivial_hom(const FiniteGroup& s, const FiniteGroup& t) {
  return GroupHom{s, t, std::vector<int>(s.order(), 0)};
}

GroupHom compose_homs(const GroupHom& outer, const GroupHom& inner) {
  if (!(inner.target == outer.source))
    throw Error(Errc::SourceTargetMismatch, "homomorphism composition mismatch");
  std::vector<int> m(inner.source.order());
  for (int a = 0; a < inner.source.order(); ++a) m[a] = outer.map[inner.map[a]];
  return GroupHom{inner.source, outer.target, std::move(m)};
}

bool is_injective(const GroupHom& f) {
  std::set<int> im(f.map.begin(), f.map.end());
  return static_cast<int>(im.size()) == f.source.order();
}

bool is_surjective(const GroupHom& f) {
  std::set<int> im(f.map.begin(), f.map.end());
  return static_cast<int>(im.size()) == f.target.order();
}

std::vector<int> generated_subgroup(const FiniteGroup& g, const std::vector<int>& gens) {
  std::vector<bool> in(g.order(), false);
  in[0] = true;
  std::vector<int> queue{0};
  for (size_t qi = 0; qi < queue.size(); ++qi) {
    for (int x : gens) {
      int y = g.op(queue[qi], x);
      if (!in[y]) {
        in[y] = true;
        queue.push_back(y);
      }
    }
  }
  std::vector<int> out;
  for (int a = 0; a < g.order(); ++a)
    if (in[a]) out.push_back(a);
  return out;
}

std::vector<int> generating_set(const FiniteGroup& g) {
  std::vector<int> gens;
  std::vector<int> sub = generated_subgroup(g, gens);
  while (static_cast<int>(sub.size()) < g.order()) {
    for (int a = 0; a < g.order(); ++a) {
      if (!std::binary_search(sub.begin(), sub.end(), a)) {
        gens.push_back(a);
        break;
      }
    }
    sub = generated_subgroup(g, gens);
  }
  return gens;
}

namespace {

/// Extend images of generators to the whole group; nullopt on conflict.
std::optional<std::vector<int>> close_hom(const FiniteGroup& a, const FiniteGroup& b,
                                          const std::vector<int>& gens,
                                          const std::vector<int>& images) {
  std::vector<int> map(a.order(), -1);
  map[0] = 0;
  std::vector<int> known{0};
  for (size_t i = 0; i < gens.size(); ++i) {
    if (map[gens[i]] == -1) {
      map[gens[i]] = images[i];
      known.push_back(gens[i]);
    } else if (map[gens[i]] != images[i]) {
      return std::nullopt;
    }
  }
  for (size_t qi = 0; qi < known.size(); ++qi) {
    int x = known[qi];
    for (size_t gi = 0; gi < gens.size(); ++gi) {
      int y = a.op(x, gens[gi]);
      int im = b.op(map[x], images[gi]);
      if (map[y] == -1) {
        map[y] = im;
        known.push_back(y);
      } else if (map[y] != im) {
        return std::nullopt;
      }
    }
  }
  for (int x = 0; x < a.order(); ++x)
    if (map[x] == -1) return std::nullopt;
  for (int x = 0; x < a.order(); ++x)
    for (int y = 0; y < a.order(); ++y)
      if (map[a.op(x, y)] != b.op(map[x], map[y])) return std::nullopt;
  return map;
}

}  // namespace

std::vector<std::vector<int>> all_homs(const FiniteGroup& a, const FiniteGroup& b, long long cap) {
  std::vector<int> gens = generating_set(a);
  if (gens.empty()) return {std::vector<int>(a.order(), 0)};
  double est = 1;
  for (size_t i = 0; i < gens.size(); ++i) est *= b.order();
  if (est > static_cast<double>(cap))
    throw Error(Errc::CapExceeded, "homomorphism search space too large");

  std::vector<std::vector<int>> result;
  std::vector<int> images(gens.size(), 0);
  std::vector<int> gen_orders(gens.size());
  for (size_t i = 0; i < gens.size(); ++i) gen_orders[i] = a.element_order(gens[i]);

  auto rec = [&](auto&& self, size_t i) -> void {
    if (i == gens.size()) {
      if (auto map = close_hom(a, b, gens, images)) result.push_back(*map);
      return;
    }
    for (int im = 0; im < b.order(); ++im) {
      if (gen_orders[i] % b.element_order(im)) continue;
      images[i] = im;
      self(self, i + 1);
    }
  };
  rec(rec, 0);
  std::sort(result.begin(), result.end());
  return result;
}

GroupProfile profile_group(const FiniteGroup& g) {
  GroupProfile p;
  p.order = g.order();
  p.abelian = g.is_abelian();
  p.cyclic = g.is_cyclic();
  std::map<int, int> hist;
  for (int a = 0; a < g.order(); ++a) hist[g.element_order(a)]++;
  p.order_histogram.assign(hist.begin(), hist.end());
  std::ostringstream os;
  if (p.cyclic) {
    os << "cyclic of order " << p.order;
  } else if (p.abelian) {
    bool elementary = p.order_histogram.size() <= 2;
    int prime = p.order_histogram.size() == 2 ? p.order_histogram[1].first : 0;
    if (elementary && prime > 1) {
      os << "elementary abelian of order " << p.order;
    } else {
      os << "abelian of order " << p.order;
    }
  } else {
    os << "nonabelian of order " << p.order;
  }
  os << ", element orders";
  for (auto& [o, c] : p.order_histogram) os << " " << o << "^" << c;
  p.description = os.str();
  return p;
}

}  // namespace grcat
