#include <algorithm>
#include <set>

#include "grcat/braided.hpp"

namespace grcat {

namespace {

/// Calls fn per identity-free tuple of the length, lexicographic order.
template <class F>
void each_free_tuple(int n, int len, F&& fn) {
  if (len == 0) {
    std::vector<int> empty;
    fn(empty);
    return;
  }
  if (n <= 1) return;
  std::vector<int> t(len, 1);
  for (;;) {
    fn(t);
    int i = len - 1;
    for (;;) {
      if (++t[i] < n) break;
      t[i] = 1;
      if (--i < 0) return;
    }
  }
}

long long free_tuple_index(int n, const std::vector<int>& t) {
  long long k = 0;
  for (int x : t) k = k * (n - 1) + (x - 1);
  return k;
}

void require_abelian_trivial(const PiModule& m) {
  if (!m.pi.is_abelian())
    throw Error(Errc::NotAbelianCocycle, "braided data needs an abelian base group");
  if (!action_is_trivial(m))
    throw Error(Errc::NotAbelianCocycle, "braided data needs a trivially acting base group");
}

void require_pair_shapes(const AbelianCocyclePair& p) {
  if (!p.module || !p.h.module || !p.eta.module || p.h.degree != 3 || p.eta.degree != 2 ||
      !modules_equal(*p.h.module, *p.module) || !modules_equal(*p.eta.module, *p.module))
    throw Error(Errc::SourceTargetMismatch,
                "a braiding pair needs degree-3 and degree-2 cochains over one module");
  require_abelian_trivial(*p.module);
}

}  // namespace

std::optional<AbelianCocycleWitness> abelian_cocycle_check(const AbelianCocyclePair& p) {
  require_pair_shapes(p);
  if (auto w = cocycle_check(p.h)) return AbelianCocycleWitness{1, *w};
  const FiniteGroup& pi = p.module->pi;
  const FiniteAbelianGroup& a = p.module->coeff;
  std::optional<AbelianCocycleWitness> witness;
  each_free_tuple(pi.order(), 3, [&](const std::vector<int>& v) {
    if (witness) return;
    int x = v[0], y = v[1], z = v[2];
    auto lhs = a.add(p.h.at({x, y, z}), p.h.at({y, z, x}));
    lhs = a.sub(lhs, p.h.at({y, x, z}));
    lhs = a.add(lhs, p.eta.at({x, pi.op(y, z)}));
    lhs = a.sub(lhs, p.eta.at({x, y}));
    lhs = a.sub(lhs, p.eta.at({x, z}));
    if (lhs != a.zero()) {
      witness = AbelianCocycleWitness{2, v};
      return;
    }
    auto rhs = a.add(p.h.at({x, y, z}), p.h.at({z, x, y}));
    rhs = a.sub(rhs, p.h.at({x, z, y}));
    rhs = a.sub(rhs, p.eta.at({pi.op(x, y), z}));
    rhs = a.add(rhs, p.eta.at({y, z}));
    rhs = a.add(rhs, p.eta.at({x, z}));
    if (rhs != a.zero()) witness = AbelianCocycleWitness{3, v};
  });
  return witness;
}

AbelianCocyclePair make_abelian_pair(ModulePtr module, Cochain h, Cochain eta) {
  h.module = module;
  eta.module = module;
  AbelianCocyclePair p{std::move(module), std::move(h), std::move(eta)};
  if (auto w = abelian_cocycle_check(p)) {
    std::vector<long long> where{w->identity};
    where.insert(where.end(), w->tuple.begin(), w->tuple.end());
    throw Error(Errc::NotAbelianCocycle, "pair fails a braiding identity", where);
  }
  return p;
}

AbelianCocyclePair abelian_coboundary(const Cochain& g) {
  if (!g.module || g.degree != 2)
    throw Error(Errc::SourceTargetMismatch, "braided boundaries start from degree 2");
  require_abelian_trivial(*g.module);
  const FiniteGroup& pi = g.module->pi;
  const FiniteAbelianGroup& a = g.module->coeff;
  // The orientation g(y,x) - g(x,y) is the one under which boundaries satisfy
  // the three identities above; the opposite sign violates identity 2.
  Cochain eta = zero_cochain(g.module, 2);
  each_free_tuple(pi.order(), 2, [&](const std::vector<int>& v) {
    eta.set(v, a.sub(g.at({v[1], v[0]}), g.at(v)));
  });
  return AbelianCocyclePair{g.module, coboundary(g), std::move(eta)};
}

BraidedGrType make_braided(GrType type, Cochain eta) {
  make_abelian_pair(type.module, type.h, eta);
  eta.module = type.module;
  return BraidedGrType{std::move(type), std::move(eta)};
}

namespace {

SkelMor braid(const GrType& t, const Cochain& eta, int x, int y) {
  return SkelMor{t.pi().op(x, y), eta.at({x, y})};
}

}  // namespace

std::optional<std::vector<int>> hexagon_check_1(const GrType& t, const Cochain& eta) {
  const FiniteGroup& pi = t.pi();
  std::optional<std::vector<int>> witness;
  each_free_tuple(pi.order(), 3, [&](const std::vector<int>& v) {
    if (witness) return;
    int x = v[0], y = v[1], z = v[2];
    SkelMor lhs = skel_compose(
        t, skel_assoc(t, y, z, x),
        skel_compose(t, braid(t, eta, x, pi.op(y, z)), skel_assoc(t, x, y, z)));
    SkelMor rhs = skel_compose(
        t, skel_tensor(t, skel_id(t, y), braid(t, eta, x, z)),
        skel_compose(t, skel_assoc(t, y, x, z), skel_tensor(t, braid(t, eta, x, y), skel_id(t, z))));
    if (!(lhs.obj == rhs.obj && lhs.u == rhs.u)) witness = v;
  });
  return witness;
}

std::optional<std::vector<int>> hexagon_check_2(const GrType& t, const Cochain& eta) {
  const FiniteGroup& pi = t.pi();
  std::optional<std::vector<int>> witness;
  each_free_tuple(pi.order(), 3, [&](const std::vector<int>& v) {
    if (witness) return;
    int x = v[0], y = v[1], z = v[2];
    SkelMor lhs = skel_compose(
        t, skel_invert(t, skel_assoc(t, z, x, y)),
        skel_compose(t, braid(t, eta, pi.op(x, y), z), skel_invert(t, skel_assoc(t, x, y, z))));
    SkelMor rhs = skel_compose(
        t, skel_tensor(t, braid(t, eta, x, z), skel_id(t, y)),
        skel_compose(t, skel_invert(t, skel_assoc(t, x, z, y)),
                     skel_tensor(t, skel_id(t, x), braid(t, eta, y, z))));
    if (!(lhs.obj == rhs.obj && lhs.u == rhs.u)) witness = v;
  });
  return witness;
}

QuadraticMap trace_of(const Cochain& eta) {
  if (!eta.module || eta.degree != 2)
    throw Error(Errc::SourceTargetMismatch, "traces come from degree-2 cochains");
  QuadraticMap q{eta.module->pi, eta.module->coeff, {}};
  for (int x = 0; x < q.pi.order(); ++x) q.values.push_back(eta.at({x, x}));
  return q;
}

namespace {

bool polarization_biadditive(const QuadraticMap& q) {
  const int n = q.pi.order();
  const FiniteAbelianGroup& a = q.coeff;
  auto b = [&](int x, int y) {
    return a.sub(q.values[q.pi.op(x, y)], a.add(q.values[x], q.values[y]));
  };
  for (int x = 0; x < n; ++x)
    for (int x2 = 0; x2 < n; ++x2)
      for (int y = 0; y < n; ++y)
        if (b(q.pi.op(x, x2), y) != a.add(b(x, y), b(x2, y))) return false;
  return true;
}

}  // namespace

bool is_quadratic(const QuadraticMap& q) {
  if (!q.pi.is_abelian()) return false;
  if (q.values[0] != q.coeff.zero()) return false;
  for (int x = 0; x < q.pi.order(); ++x)
    if (q.values[q.pi.inverse(x)] != q.values[x]) return false;
  return polarization_biadditive(q);
}

bool is_quadratic_polarization_only(const QuadraticMap& q) {
  if (!q.pi.is_abelian()) return false;
  if (q.values[0] != q.coeff.zero()) return false;
  return polarization_biadditive(q);
}

namespace {

template <class Pred>
long long scan_maps(const FiniteGroup& pi, const FiniteAbelianGroup& coeff, long long cap,
                    Pred&& keep, std::vector<QuadraticMap>* out) {
  if (!pi.is_abelian())
    throw Error(Errc::NotAbelianCocycle, "quadratic maps need an abelian base group");
  const int n = pi.order();
  const long long an = coeff.order();
  long long total = 1;
  for (int i = 1; i < n; ++i) {
    total *= an;
    if (total > cap)
      throw Error(Errc::CapExceeded, "quadratic map enumeration exceeds the cap");
  }
  long long count = 0;
  std::vector<long long> idx(n, 0);  // idx[0] fixed at zero
  QuadraticMap q{pi, coeff, std::vector<std::vector<long long>>(n, coeff.zero())};
  for (;;) {
    for (int i = 1; i < n; ++i) q.values[i] = coeff.element(idx[i]);
    if (keep(q)) {
      ++count;
      if (out) out->push_back(q);
    }
    int i = n - 1;
    for (;;) {
      if (i == 0) return count;
      if (++idx[i] < an) break;
      idx[i] = 0;
      --i;
    }
  }
}

}  // namespace

std::vector<QuadraticMap> enumerate_quadratic_maps(const FiniteGroup& pi,
                                                   const FiniteAbelianGroup& coeff,
                                                   long long cap) {
  std::vector<QuadraticMap> out;
  scan_maps(pi, coeff, cap, [](const QuadraticMap& q) { return is_quadratic(q); }, &out);
  return out;
}

long long count_polarization_only_maps(const FiniteGroup& pi, const FiniteAbelianGroup& coeff,
                                       long long cap) {
  return scan_maps(
      pi, coeff, cap,
      [](const QuadraticMap& q) { return is_quadratic_polarization_only(q); }, nullptr);
}

AbelianCohomology abelian_h3(ModulePtr module) {
  require_abelian_trivial(*module);
  const PiModule& m = *module;
  const int n = m.pi.order();
  const int rank = m.coeff.rank();
  const long long dim4 = cochain_dim(m, 4);
  const long long dim3 = cochain_dim(m, 3);
  const long long dim2 = cochain_dim(m, 2);

  // Constraints on combined coordinates [h ; eta]: the cocycle condition on h
  // and the two mixed identities, one row block per identity-free triple.
  Mat c(static_cast<int>(dim4 + 2 * dim3), static_cast<int>(dim3 + dim2));
  Mat d3 = coboundary_matrix(m, 3);
  for (int i = 0; i < d3.rows; ++i)
    for (int j = 0; j < d3.cols; ++j) c.at(i, j) = d3.at(i, j);
  auto h_col = [&](const std::vector<int>& t) { return free_tuple_index(n, t) * rank; };
  auto eta_col = [&](int x, int y) {
    return dim3 + free_tuple_index(n, {x, y}) * rank;
  };
  auto add_entry = [&](long long row0, long long col0, int sign) {
    for (int i = 0; i < rank; ++i)
      c.at(static_cast<int>(row0 + i), static_cast<int>(col0 + i)) += sign;
  };
  each_free_tuple(n, 3, [&](const std::vector<int>& v) {
    int x = v[0], y = v[1], z = v[2];
    long long r2 = dim4 + free_tuple_index(n, v) * rank;
    long long r3 = dim4 + dim3 + free_tuple_index(n, v) * rank;
    add_entry(r2, h_col({x, y, z}), +1);
    add_entry(r2, h_col({y, x, z}), -1);
    add_entry(r2, h_col({y, z, x}), +1);
    if (m.pi.op(y, z) != 0) add_entry(r2, eta_col(x, m.pi.op(y, z)), +1);
    add_entry(r2, eta_col(x, y), -1);
    add_entry(r2, eta_col(x, z), -1);
    add_entry(r3, h_col({x, y, z}), +1);
    add_entry(r3, h_col({x, z, y}), -1);
    add_entry(r3, h_col({z, x, y}), +1);
    if (m.pi.op(x, y) != 0) add_entry(r3, eta_col(m.pi.op(x, y), z), -1);
    add_entry(r3, eta_col(y, z), +1);
    add_entry(r3, eta_col(x, z), +1);
  });
  std::vector<long long> cm = level_moduli(m, 4);
  std::vector<long long> m3 = level_moduli(m, 3);
  cm.insert(cm.end(), m3.begin(), m3.end());
  cm.insert(cm.end(), m3.begin(), m3.end());
  const long long L = m.coeff.exponent();
  Mat z = kernel_mod(scale_rows_to_modulus(c, cm, L), L);

  // Boundaries: the combined image of a degree-2 cochain plus the coefficient
  // periods of both blocks.
  Mat b0(static_cast<int>(dim3 + dim2), static_cast<int>(dim2));
  Mat d2 = coboundary_matrix(m, 2);
  for (int i = 0; i < d2.rows; ++i)
    for (int j = 0; j < d2.cols; ++j) b0.at(i, j) = d2.at(i, j);
  each_free_tuple(n, 2, [&](const std::vector<int>& v) {
    long long row0 = dim3 + free_tuple_index(n, v) * rank;
    for (int i = 0; i < rank; ++i) {
      b0.at(static_cast<int>(row0 + i),
            static_cast<int>(free_tuple_index(n, v) * rank + i)) -= 1;
      b0.at(static_cast<int>(row0 + i),
            static_cast<int>(free_tuple_index(n, {v[1], v[0]}) * rank + i)) += 1;
    }
  });
  std::vector<long long> pm = level_moduli(m, 3);
  std::vector<long long> m2 = level_moduli(m, 2);
  pm.insert(pm.end(), m2.begin(), m2.end());

  AbelianCohomology out;
  out.module = std::move(module);
  out.quotient = mod_quotient(z, hconcat(b0, diag_mat(pm)), L);
  out.h_dim = dim3;
  return out;
}

std::vector<long long> AbelianCohomology::class_of(const AbelianCocyclePair& p) const {
  if (!modules_equal(*p.module, *module))
    throw Error(Errc::SourceTargetMismatch, "pair does not live over this module");
  if (auto w = abelian_cocycle_check(p)) {
    std::vector<long long> where{w->identity};
    where.insert(where.end(), w->tuple.begin(), w->tuple.end());
    throw Error(Errc::NotAbelianCocycle, "class of an invalid pair requested", where);
  }
  std::vector<long long> v = column_of(lift_cochain(p.h), 0);
  std::vector<long long> e = column_of(lift_cochain(p.eta), 0);
  v.insert(v.end(), e.begin(), e.end());
  return quotient.project(v);
}

AbelianCocyclePair AbelianCohomology::representative(const std::vector<long long>& cls) const {
  std::vector<long long> v = quotient.representative(cls);
  std::vector<long long> hv(v.begin(), v.begin() + h_dim);
  std::vector<long long> ev(v.begin() + h_dim, v.end());
  return make_abelian_pair(module, unlift_cochain(module, 3, column_mat(hv)),
                           unlift_cochain(module, 2, column_mat(ev)));
}

std::vector<AbelianCocyclePair> AbelianCohomology::class_representatives(long long cap) const {
  std::vector<AbelianCocyclePair> out;
  for (const auto& cls : quotient.all_classes(cap)) out.push_back(representative(cls));
  return out;
}

std::optional<Cochain> abelian_bounding_cochain(const AbelianCocyclePair& p) {
  require_pair_shapes(p);
  const PiModule& m = *p.module;
  const int n = m.pi.order();
  const int rank = m.coeff.rank();
  const long long dim3 = cochain_dim(m, 3);
  const long long dim2 = cochain_dim(m, 2);
  Mat b0(static_cast<int>(dim3 + dim2), static_cast<int>(dim2));
  Mat d2 = coboundary_matrix(m, 2);
  for (int i = 0; i < d2.rows; ++i)
    for (int j = 0; j < d2.cols; ++j) b0.at(i, j) = d2.at(i, j);
  each_free_tuple(n, 2, [&](const std::vector<int>& v) {
    long long row0 = dim3 + free_tuple_index(n, v) * rank;
    for (int i = 0; i < rank; ++i) {
      b0.at(static_cast<int>(row0 + i),
            static_cast<int>(free_tuple_index(n, v) * rank + i)) -= 1;
      b0.at(static_cast<int>(row0 + i),
            static_cast<int>(free_tuple_index(n, {v[1], v[0]}) * rank + i)) += 1;
    }
  });
  std::vector<long long> pm = level_moduli(m, 3);
  std::vector<long long> m2 = level_moduli(m, 2);
  pm.insert(pm.end(), m2.begin(), m2.end());
  std::vector<long long> target = column_of(lift_cochain(p.h), 0);
  std::vector<long long> e = column_of(lift_cochain(p.eta), 0);
  target.insert(target.end(), e.begin(), e.end());
  const long long L = m.coeff.exponent();
  auto x = solve_mod(scale_rows_to_modulus(b0, pm, L), scale_to_modulus(target, pm, L), L);
  if (!x) return std::nullopt;
  Cochain g = unlift_cochain(p.module, 2, column_mat(*x));
  AbelianCocyclePair check = abelian_coboundary(g);
  if (!check.h.same_values(p.h) || !check.eta.same_values(p.eta))
    internal_error("braided bounding cochain failed verification");
  return g;
}

EmCheckReport em_check(const FiniteGroup& pi, const FiniteAbelianGroup& coeff,
                       const Caps& caps) {
  ModulePtr module = trivial_module(pi, coeff);
  AbelianCohomology ab = abelian_h3(module);
  EmCheckReport r;
  r.cohomology_order = ab.order();
  r.cohomology_factors = ab.factors();
  auto quad = enumerate_quadratic_maps(pi, coeff, caps.enumeration);
  r.quadratic_count = static_cast<long long>(quad.size());
  r.polarization_only_count = count_polarization_only_maps(pi, coeff, caps.enumeration);

  std::vector<QuadraticMap> traces;
  for (const auto& p : ab.class_representatives(caps.enumeration))
    traces.push_back(trace_of(p.eta));
  r.traces_quadratic =
      std::all_of(traces.begin(), traces.end(), [](const QuadraticMap& q) { return is_quadratic(q); });
  std::set<std::vector<std::vector<long long>>> seen;
  for (const auto& t : traces) seen.insert(t.values);
  r.traces_distinct = seen.size() == traces.size();
  r.traces_cover = std::all_of(quad.begin(), quad.end(), [&](const QuadraticMap& q) {
    return seen.count(q.values) != 0;
  });

  // The trace of a sum of classes must be the pointwise sum of the traces.
  r.traces_additive = true;
  const auto& fac = ab.factors();
  long long nclasses = ab.order();
  if (nclasses * nclasses <= caps.enumeration) {
    auto coords_at = [&](long long idx) {
      std::vector<long long> c(fac.size());
      for (std::size_t i = fac.size(); i-- > 0;) {
        c[i] = idx % fac[i];
        idx /= fac[i];
      }
      return c;
    };
    std::vector<QuadraticMap> by_class;
    for (long long i = 0; i < nclasses; ++i)
      by_class.push_back(trace_of(ab.representative(coords_at(i)).eta));
    for (long long i = 0; i < nclasses && r.traces_additive; ++i)
      for (long long j = 0; j < nclasses && r.traces_additive; ++j) {
        auto a = coords_at(i), b = coords_at(j);
        std::vector<long long> s(fac.size());
        for (std::size_t t = 0; t < fac.size(); ++t) s[t] = (a[t] + b[t]) % fac[t];
        const QuadraticMap& ts = trace_of(ab.representative(s).eta);
        for (int x = 0; x < pi.order(); ++x)
          if (ts.values[x] != coeff.add(by_class[i].values[x], by_class[j].values[x]))
            r.traces_additive = false;
      }
  }
  return r;
}

}  // namespace grcat
