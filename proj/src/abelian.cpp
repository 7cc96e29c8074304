#include "grcat/abelian.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>

namespace grcat {

long long FiniteAbelianGroup::order() const {
  long long n = 1;
  for (long long f : factors) n *= f;
  return n;
}

long long FiniteAbelianGroup::exponent() const {
  long long e = 1;
  for (long long f : factors) e = std::lcm(e, f);
  return e;
}

std::vector<long long> FiniteAbelianGroup::reduce(std::vector<long long> v) const {
  if (v.size() != factors.size()) internal_error("coordinate vector has wrong rank");
  for (size_t i = 0; i < v.size(); ++i) v[i] = ((v[i] % factors[i]) + factors[i]) % factors[i];
  return v;
}

std::vector<long long> FiniteAbelianGroup::add(const std::vector<long long>& a,
                                               const std::vector<long long>& b) const {
  if (a.size() != factors.size() || b.size() != factors.size())
    internal_error("coordinate vector has wrong rank");
  std::vector<long long> r(factors.size());
  for (size_t i = 0; i < r.size(); ++i) r[i] = (a[i] + b[i]) % factors[i];
  return reduce(std::move(r));
}

std::vector<long long> FiniteAbelianGroup::neg(const std::vector<long long>& a) const {
  std::vector<long long> r(a);
  for (auto& x : r) x = -x;
  return reduce(std::move(r));
}

std::vector<long long> FiniteAbelianGroup::sub(const std::vector<long long>& a,
                                               const std::vector<long long>& b) const {
  return add(a, neg(b));
}

std::vector<long long> FiniteAbelianGroup::smul(long long k, const std::vector<long long>& a) const {
  std::vector<long long> r(a);
  for (size_t i = 0; i < r.size(); ++i) r[i] = ((k % factors[i]) * (a[i] % factors[i]));
  return reduce(std::move(r));
}

long long FiniteAbelianGroup::index_of(const std::vector<long long>& v) const {
  std::vector<long long> r = reduce(v);
  long long idx = 0;
  for (size_t i = 0; i < r.size(); ++i) idx = idx * factors[i] + r[i];
  return idx;
}

std::vector<long long> FiniteAbelianGroup::element(long long index) const {
  std::vector<long long> v(factors.size(), 0);
  for (int i = rank() - 1; i >= 0; --i) {
    v[i] = index % factors[i];
    index /= factors[i];
  }
  return v;
}

std::string FiniteAbelianGroup::label(const std::vector<long long>& v) const {
  if (factors.empty()) return "0";
  if (factors.size() == 1) return std::to_string(v[0]);
  std::ostringstream os;
  os << "(";
  for (size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i];
  os << ")";
  return os.str();
}

FiniteAbelianGroup abelian_group(std::vector<long long> factors) {
  for (long long f : factors)
    if (f < 2)
      throw Error(Errc::ParseError,
                  "abelian group factors must be >= 2 (omit trivial factors entirely)");
  return FiniteAbelianGroup{std::move(factors)};
}

std::vector<long long> invariant_factors(const FiniteAbelianGroup& g) {
  if (g.rank() == 0) return {};
  SmithResult s = smith_normal_form(diag_mat(g.factors));
  std::vector<long long> out;
  for (int i = 0; i < g.rank(); ++i)
    if (s.d.at(i, i) >= 2) out.push_back(s.d.at(i, i));
  return out;
}

bool same_abstract_group(const FiniteAbelianGroup& a, const FiniteAbelianGroup& b) {
  return invariant_factors(a) == invariant_factors(b);
}

FiniteGroup cayley_of(const FiniteAbelianGroup& g) {
  long long n = g.order();
  if (n > 100000) throw Error(Errc::CapExceeded, "abelian group too large for a Cayley table");
  std::vector<std::vector<int>> t(n, std::vector<int>(n));
  std::vector<std::string> names(n);
  for (long long i = 0; i < n; ++i) names[i] = g.label(g.element(i));
  for (long long i = 0; i < n; ++i)
    for (long long j = 0; j < n; ++j)
      t[i][j] = static_cast<int>(g.index_of(g.add(g.element(i), g.element(j))));
  return validate_group(std::move(t), std::move(names));
}

int AbelianDecomposition::element_of(const std::vector<long long>& v) const {
  auto it = lookup.find(group.reduce(v));
  if (it == lookup.end()) internal_error("coordinates outside the decomposed group");
  return it->second;
}

AbelianDecomposition decompose_abelian(const FiniteGroup& g) {
  if (!g.is_abelian()) throw Error(Errc::Internal, "decompose_abelian: group is not abelian");
  const int n = g.order();
  // Relation lattice on one formal generator per element: e_a + e_b - e_{ab}.
  Mat rel(n, n * n);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      int col = a * n + b;
      rel.at(a, col) += 1;
      rel.at(b, col) += 1;
      rel.at(g.op(a, b), col) -= 1;
    }
  SmithResult s = smith_normal_form(rel);

  AbelianDecomposition d;
  std::vector<int> kept;
  for (int i = 0; i < n; ++i) {
    long long di = s.d.at(i, i);
    if (di == 0) internal_error("relation lattice of a finite group has full rank");
    if (di >= 2) {
      kept.push_back(i);
      d.group.factors.push_back(di);
    }
  }
  if (d.group.order() != n) internal_error("abelian decomposition order mismatch");

  d.coords.resize(n);
  for (int a = 0; a < n; ++a) {
    std::vector<long long> v(kept.size());
    for (size_t t = 0; t < kept.size(); ++t) v[t] = s.u.at(kept[t], a);
    d.coords[a] = d.group.reduce(std::move(v));
    if (!d.lookup.emplace(d.coords[a], a).second)
      internal_error("abelian decomposition is not injective");
  }
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      if (d.coords[g.op(a, b)] != d.group.add(d.coords[a], d.coords[b]))
        internal_error("abelian decomposition is not additive");

  for (size_t t = 0; t < kept.size(); ++t) {
    int elem = 0;
    for (int a = 0; a < n; ++a) {
      long long c = s.uinv.at(a, kept[t]);
      elem = g.op(elem, g.power(a, c));
    }
    std::vector<long long> unit(kept.size(), 0);
    unit[t] = 1;
    if (d.coords[elem] != unit) internal_error("abelian decomposition generator mismatch");
    d.generators.push_back(elem);
  }
  return d;
}

std::vector<long long> AbelianHom::apply(const std::vector<long long>& v) const {
  if (static_cast<int>(v.size()) != source.rank()) internal_error("hom applied to wrong rank");
  std::vector<long long> r(target.rank(), 0);
  for (int i = 0; i < target.rank(); ++i)
    for (int j = 0; j < source.rank(); ++j) r[i] += m.at(i, j) * v[j];
  return target.reduce(std::move(r));
}

AbelianHom make_abelian_hom(FiniteAbelianGroup source, FiniteAbelianGroup target, Mat m) {
  if (m.rows != target.rank() || m.cols != source.rank())
    throw Error(Errc::NotAHomomorphism, "matrix shape does not match the groups");
  for (int i = 0; i < m.rows; ++i)
    for (int j = 0; j < m.cols; ++j) {
      if ((source.factors[j] * m.at(i, j)) % target.factors[i] != 0)
        throw Error(Errc::NotAHomomorphism,
                    "matrix does not respect the source factor orders", {i, j});
      m.at(i, j) = ((m.at(i, j) % target.factors[i]) + target.factors[i]) % target.factors[i];
    }
  return AbelianHom{std::move(source), std::move(target), std::move(m)};
}

AbelianHom identity_abelian_hom(const FiniteAbelianGroup& g) {
  return AbelianHom{g, g, Mat::identity(g.rank())};
}

AbelianHom zero_abelian_hom(const FiniteAbelianGroup& source, const FiniteAbelianGroup& target) {
  return AbelianHom{source, target, Mat(target.rank(), source.rank())};
}

AbelianHom compose_abelian(const AbelianHom& outer, const AbelianHom& inner) {
  if (!(inner.target == outer.source))
    throw Error(Errc::SourceTargetMismatch, "abelian hom composition mismatch");
  Mat m = mat_mul(outer.m, inner.m);
  for (int i = 0; i < m.rows; ++i)
    for (int j = 0; j < m.cols; ++j)
      m.at(i, j) = ((m.at(i, j) % outer.target.factors[i]) + outer.target.factors[i]) %
                   outer.target.factors[i];
  return AbelianHom{inner.source, outer.target, std::move(m)};
}

bool is_abelian_iso(const AbelianHom& f) {
  if (f.source.order() != f.target.order()) return false;
  long long n = f.source.order();
  if (n > 100000) throw Error(Errc::CapExceeded, "abelian group too large to test bijectivity");
  std::set<std::vector<long long>> image;
  for (long long i = 0; i < n; ++i) image.insert(f.apply(f.source.element(i)));
  return static_cast<long long>(image.size()) == n;
}

AbelianHom invert_abelian_iso(const AbelianHom& f) {
  long long n = f.source.order();
  if (n > 100000) throw Error(Errc::CapExceeded, "abelian group too large to invert");
  std::map<std::vector<long long>, std::vector<long long>> pre;
  for (long long i = 0; i < n; ++i) {
    auto x = f.source.element(i);
    pre[f.apply(x)] = x;
  }
  if (static_cast<long long>(pre.size()) != n || f.target.order() != n)
    throw Error(Errc::NotAHomomorphism, "hom is not an isomorphism");
  Mat m(f.source.rank(), f.target.rank());
  for (int j = 0; j < f.target.rank(); ++j) {
    std::vector<long long> unit(f.target.rank(), 0);
    unit[j] = 1;
    auto it = pre.find(unit);
    if (it == pre.end()) throw Error(Errc::NotAHomomorphism, "hom is not an isomorphism");
    for (int i = 0; i < f.source.rank(); ++i) m.at(i, j) = it->second[i];
  }
  AbelianHom inv = make_abelian_hom(f.target, f.source, std::move(m));
  for (long long i = 0; i < n; ++i) {
    auto x = f.source.element(i);
    if (inv.apply(f.apply(x)) != f.source.reduce(x)) internal_error("iso inversion failed");
  }
  return inv;
}

std::vector<AbelianHom> all_abelian_homs(const FiniteAbelianGroup& source,
                                         const FiniteAbelianGroup& target, long long cap) {
  const int r = target.rank(), k = source.rank();
  // Entry (i, j) must be a multiple of target_i / gcd(source_j, target_i).
  std::vector<long long> step(static_cast<size_t>(r) * k), count(static_cast<size_t>(r) * k);
  double total = 1;
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < k; ++j) {
      long long g = std::gcd(source.factors[j], target.factors[i]);
      step[static_cast<size_t>(i) * k + j] = target.factors[i] / g;
      count[static_cast<size_t>(i) * k + j] = g;
      total *= static_cast<double>(g);
    }
  if (total > static_cast<double>(cap))
    throw Error(Errc::CapExceeded, "too many abelian homomorphisms to enumerate");

  std::vector<AbelianHom> out;
  std::vector<long long> digit(static_cast<size_t>(r) * k, 0);
  while (true) {
    Mat m(r, k);
    for (int i = 0; i < r; ++i)
      for (int j = 0; j < k; ++j)
        m.at(i, j) = digit[static_cast<size_t>(i) * k + j] * step[static_cast<size_t>(i) * k + j];
    out.push_back(make_abelian_hom(source, target, std::move(m)));
    int pos = r * k - 1;
    while (pos >= 0) {
      if (++digit[pos] < count[pos]) break;
      digit[pos] = 0;
      --pos;
    }
    if (pos < 0) break;
  }
  return out;
}

std::vector<AbelianHom> all_abelian_isos(const FiniteAbelianGroup& source,
                                         const FiniteAbelianGroup& target, long long cap) {
  std::vector<AbelianHom> out;
  if (source.order() != target.order()) return out;
  for (auto& f : all_abelian_homs(source, target, cap))
    if (is_abelian_iso(f)) out.push_back(f);
  return out;
}

AbelianHomAnalysis analyze_hom(const AbelianHom& f) {
  AbelianHomAnalysis a;
  Mat ker = congruence_kernel_basis(f.m, f.target.factors);
  LatticeQuotient kq = lattice_quotient(ker, diag_mat(f.source.factors));
  a.kernel_order = kq.order();
  a.image_order = f.source.order() / a.kernel_order;
  LatticeQuotient cq =
      lattice_quotient(Mat::identity(f.target.rank()), hconcat(f.m, diag_mat(f.target.factors)));
  a.cokernel_order = cq.order();
  a.cokernel_factors = cq.factors;
  if (a.image_order * a.cokernel_order != f.target.order())
    internal_error("hom analysis inconsistent");
  return a;
}

}  // namespace grcat
