#include "grcat/aut.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace grcat {

int AutData::index_of(const std::vector<int>& map) const {
  auto it = std::lower_bound(maps.begin(), maps.end(), map);
  if (it == maps.end() || *it != map) internal_error("map is not a recorded automorphism");
  return static_cast<int>(it - maps.begin());
}

AutData automorphisms(const FiniteGroup& g, long long cap) {
  AutData d;
  d.base = g;
  const int n = g.order();
  for (auto& h : all_homs(g, g, cap)) {
    std::set<int> image(h.begin(), h.end());
    if (static_cast<int>(image.size()) == n) d.maps.push_back(std::move(h));
  }
  // all_homs returns lex-sorted maps, and among bijections fixing 0 the
  // identity is lex-smallest, so it lands at index 0.
  const int m = d.order();
  std::map<std::vector<int>, int> index;
  for (int i = 0; i < m; ++i) index[d.maps[i]] = i;

  std::vector<std::vector<int>> t(m, std::vector<int>(m));
  std::vector<int> comp(n);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) {
      for (int x = 0; x < n; ++x) comp[x] = d.maps[i][d.maps[j][x]];
      auto it = index.find(comp);
      if (it == index.end()) internal_error("automorphisms not closed under composition");
      t[i][j] = it->second;
    }
  d.aut = validate_group(std::move(t));

  d.mu.assign(n, 0);
  std::vector<int> conj(n);
  for (int c = 0; c < n; ++c) {
    for (int x = 0; x < n; ++x) conj[x] = g.op(g.op(c, x), g.inverse(c));
    auto it = index.find(conj);
    if (it == index.end()) internal_error("conjugation is not a recorded automorphism");
    d.mu[c] = it->second;
  }
  std::set<int> inner_set(d.mu.begin(), d.mu.end());
  d.inner.assign(inner_set.begin(), inner_set.end());

  d.coset_of.assign(m, -1);
  for (int i = 0; i < m; ++i) {
    if (d.coset_of[i] != -1) continue;
    int k = static_cast<int>(d.cosets.size());
    std::vector<int> members;
    for (int c : d.inner) {
      int j = d.aut.op(i, c);
      if (d.coset_of[j] == -1) {
        d.coset_of[j] = k;
        members.push_back(j);
      }
    }
    std::sort(members.begin(), members.end());
    d.cosets.push_back(std::move(members));
    d.out_reps.push_back(d.cosets.back().front());
  }

  const int q = static_cast<int>(d.cosets.size());
  std::vector<std::vector<int>> ot(q, std::vector<int>(q));
  for (int p = 0; p < q; ++p)
    for (int r = 0; r < q; ++r) ot[p][r] = d.coset_of[d.aut.op(d.out_reps[p], d.out_reps[r])];
  d.out = validate_group(std::move(ot));
  return d;
}

}  // namespace grcat
