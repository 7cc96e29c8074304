#include <algorithm>
#include <map>

#include "grcat/extensions.hpp"

namespace grcat {

namespace {

/// Positions of the center inside the kernel group, with a Cayley table of the
/// center subgroup in those positions.
struct CenterData {
  std::vector<int> elements;
  std::vector<int> pos;  // kernel element -> position, -1 outside
  FiniteGroup table;
};

CenterData center_data(const FiniteGroup& g) {
  CenterData c;
  c.elements = center(g);
  c.pos.assign(g.order(), -1);
  for (int i = 0; i < static_cast<int>(c.elements.size()); ++i) c.pos[c.elements[i]] = i;
  const int m = static_cast<int>(c.elements.size());
  std::vector<std::vector<int>> t(m, std::vector<int>(m));
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) {
      int p = c.pos[g.op(c.elements[i], c.elements[j])];
      if (p < 0) internal_error("center is not closed under the product");
      t[i][j] = p;
    }
  c.table = validate_group(std::move(t));
  return c;
}

}  // namespace

AbstractKernel make_kernel(FiniteGroup pi, FiniteGroup g, std::vector<int> psi,
                           const Caps& caps) {
  if (pi.order() > caps.group_order || g.order() > caps.group_order)
    throw Error(Errc::CapExceeded, "kernel groups exceed the group order cap");
  AbstractKernel k;
  k.aut = std::make_shared<const AutData>(automorphisms(g, caps.enumeration));
  k.psi = make_hom(pi, k.aut->out, std::move(psi));
  k.pi = std::move(pi);
  k.g = std::move(g);
  return k;
}

std::optional<FactorSetWitness> factor_set_check(const FiniteGroup& pi, const AutData& aut,
                                                 const FactorSet& fs) {
  const int n = pi.order();
  if (static_cast<int>(fs.lift.size()) != n || static_cast<int>(fs.f.size()) != n)
    throw Error(Errc::SourceTargetMismatch, "factor set size does not match the base group");
  for (const auto& row : fs.f)
    if (static_cast<int>(row.size()) != n)
      throw Error(Errc::SourceTargetMismatch, "factor set size does not match the base group");
  for (int x = 0; x < n; ++x) {
    if (fs.lift[x] < 0 || fs.lift[x] >= aut.order())
      throw Error(Errc::SourceTargetMismatch, "factor set names an unknown automorphism");
    for (int y = 0; y < n; ++y)
      if (fs.f[x][y] < 0 || fs.f[x][y] >= aut.base.order())
        throw Error(Errc::SourceTargetMismatch, "factor set names an unknown kernel element");
  }
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      if (aut.compose(fs.lift[x], fs.lift[y]) !=
          aut.compose(aut.mu[fs.f[x][y]], fs.lift[pi.op(x, y)]))
        return FactorSetWitness{1, {x, y}};
  const FiniteGroup& g = aut.base;
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      for (int z = 0; z < n; ++z)
        if (g.op(aut.apply(fs.lift[x], fs.f[y][z]), fs.f[x][pi.op(y, z)]) !=
            g.op(fs.f[x][y], fs.f[pi.op(x, y)][z]))
          return FactorSetWitness{2, {x, y, z}};
  if (fs.lift[0] != 0) return FactorSetWitness{3, {0}};
  for (int x = 0; x < n; ++x)
    if (fs.f[x][0] != 0 || fs.f[0][x] != 0) return FactorSetWitness{3, {x}};
  return std::nullopt;
}

namespace {

Extension build_with(std::shared_ptr<const AutData> aut, const FiniteGroup& pi,
                     const FiniteGroup& g, const FactorSet& fs, const Caps& caps) {
  if (pi.order() * g.order() > caps.extension_order)
    throw Error(Errc::CapExceeded, "extension exceeds the total order cap");
  if (auto w = factor_set_check(pi, *aut, fs)) {
    std::vector<long long> where{w->condition};
    where.insert(where.end(), w->tuple.begin(), w->tuple.end());
    throw Error(Errc::FactorSetInvalid, "factor set fails a Schreier condition", where);
  }
  const int np = pi.order(), ng = g.order(), nb = np * ng;
  std::vector<std::vector<int>> t(nb, std::vector<int>(nb));
  for (int x = 0; x < np; ++x)
    for (int a = 0; a < ng; ++a)
      for (int y = 0; y < np; ++y)
        for (int b = 0; b < ng; ++b)
          t[x * ng + a][y * ng + b] =
              pi.op(x, y) * ng + g.op(g.op(a, aut->apply(fs.lift[x], b)), fs.f[x][y]);
  Extension e;
  e.aut = std::move(aut);
  e.b = validate_group(std::move(t));
  std::vector<int> im(ng), pr(nb);
  for (int a = 0; a < ng; ++a) im[a] = a;
  for (int v = 0; v < nb; ++v) pr[v] = v / ng;
  e.i = make_hom(g, e.b, std::move(im));
  e.p = make_hom(e.b, pi, std::move(pr));
  if (!is_injective(e.i) || !is_surjective(e.p))
    internal_error("extension inclusion/projection lost exactness");
  std::vector<int> psi(np);
  for (int x = 0; x < np; ++x) {
    int ux = x * ng;
    std::vector<int> conj(ng);
    for (int a = 0; a < ng; ++a) {
      int v = e.b.op(e.b.op(ux, a), e.b.inverse(ux));
      if (v >= ng) internal_error("kernel image is not normal in the extension");
      conj[a] = v;
    }
    psi[x] = e.aut->coset_of[e.aut->index_of(conj)];
    if (psi[x] != e.aut->coset_of[fs.lift[x]])
      internal_error("induced outer action disagrees with the chosen lifts");
  }
  e.psi_induced = make_hom(pi, e.aut->out, std::move(psi));
  return e;
}

}  // namespace

Extension build_extension(const FiniteGroup& pi, const FiniteGroup& g, const FactorSet& fs,
                          const Caps& caps) {
  auto aut = std::make_shared<const AutData>(automorphisms(g, caps.enumeration));
  return build_with(std::move(aut), pi, g, fs, caps);
}

FactorSet factor_set_of(const Extension& e) {
  const FiniteGroup& pi = e.p.target;
  const FiniteGroup& g = e.i.source;
  const int np = pi.order(), ng = g.order();
  std::vector<int> iinv(e.b.order(), -1);
  for (int a = 0; a < ng; ++a) iinv[e.i.map[a]] = a;
  std::vector<int> u(np, -1);
  for (int v = 0; v < e.b.order(); ++v)
    if (u[e.p.map[v]] < 0) u[e.p.map[v]] = v;
  if (u[0] != 0) internal_error("identity is not the smallest preimage of the base identity");

  FactorSet fs;
  fs.lift.resize(np);
  fs.f.assign(np, std::vector<int>(np));
  for (int x = 0; x < np; ++x) {
    std::vector<int> conj(ng);
    for (int a = 0; a < ng; ++a) {
      int v = iinv[e.b.op(e.b.op(u[x], e.i.map[a]), e.b.inverse(u[x]))];
      if (v < 0) internal_error("kernel image is not normal in the extension");
      conj[a] = v;
    }
    fs.lift[x] = e.aut->index_of(conj);
  }
  for (int x = 0; x < np; ++x)
    for (int y = 0; y < np; ++y) {
      int v = iinv[e.b.op(e.b.op(u[x], u[y]), e.b.inverse(u[pi.op(x, y)]))];
      if (v < 0) internal_error("transversal defect left the kernel image");
      fs.f[x][y] = v;
    }
  if (factor_set_check(pi, *e.aut, fs))
    internal_error("extracted factor set fails the Schreier conditions");
  return fs;
}

std::optional<std::vector<int>> congruent(const Extension& a, const Extension& b,
                                          const Caps& caps) {
  if (!(a.p.target == b.p.target) || !(a.i.source == b.i.source))
    throw Error(Errc::SourceTargetMismatch, "congruence needs the same base and kernel groups");
  if (!(a.psi_induced == b.psi_induced))
    throw Error(Errc::IncompatibleKernels, "extensions induce different outer actions");
  const FiniteGroup& pi = a.p.target;
  const FiniteGroup& g = a.i.source;
  const AutData& aut = *a.aut;
  const int np = pi.order();
  FactorSet fa = factor_set_of(a), fb = factor_set_of(b);

  std::vector<std::vector<int>> cand(np);
  cand[0] = {0};
  long long total = 1;
  for (int x = 1; x < np; ++x) {
    for (int c = 0; c < g.order(); ++c)
      if (aut.compose(aut.mu[c], fb.lift[x]) == fa.lift[x]) cand[x].push_back(c);
    if (cand[x].empty()) return std::nullopt;
    total *= static_cast<long long>(cand[x].size());
    if (total > caps.enumeration)
      throw Error(Errc::CapExceeded, "congruence search exceeds the enumeration cap");
  }

  std::vector<int> pick(np, 0), t(np);
  for (;;) {
    for (int x = 0; x < np; ++x) t[x] = cand[x][pick[x]];
    bool ok = true;
    for (int x = 0; x < np && ok; ++x)
      for (int y = 0; y < np && ok; ++y)
        if (g.op(fa.f[x][y], t[pi.op(x, y)]) !=
            g.op(g.op(t[x], aut.apply(fb.lift[x], t[y])), fb.f[x][y]))
          ok = false;
    if (ok) return t;
    int x = np - 1;
    for (;;) {
      if (x == 0) return std::nullopt;
      if (++pick[x] < static_cast<int>(cand[x].size())) break;
      pick[x] = 0;
      --x;
    }
  }
}

KernelObstruction kernel_obstruction(const AbstractKernel& kernel, const Caps& caps) {
  const FiniteGroup& pi = kernel.pi;
  const FiniteGroup& g = kernel.g;
  const AutData& aut = *kernel.aut;
  const int np = pi.order();

  KernelObstruction o;
  o.kernel = kernel;
  o.lifts.resize(np);
  for (int x = 0; x < np; ++x) o.lifts[x] = aut.out_reps[kernel.psi.map[x]];

  o.f.assign(np, std::vector<int>(np));
  for (int x = 0; x < np; ++x)
    for (int y = 0; y < np; ++y) {
      int defect = aut.compose(aut.compose(o.lifts[x], o.lifts[y]),
                               aut.invert(o.lifts[pi.op(x, y)]));
      int found = -1;
      for (int c = 0; c < g.order(); ++c)
        if (aut.mu[c] == defect) {
          found = c;
          break;
        }
      if (found < 0) internal_error("lift defect is not an inner automorphism");
      o.f[x][y] = found;
    }

  CenterData cd = center_data(g);
  o.center_elements = cd.elements;
  o.center = decompose_abelian(cd.table);
  const int rank = o.center.group.rank();
  std::vector<AbelianHom> action;
  for (int x = 0; x < np; ++x) {
    Mat m(rank, rank);
    for (int t = 0; t < rank; ++t) {
      int image = aut.apply(o.lifts[x], cd.elements[o.center.generators[t]]);
      if (cd.pos[image] < 0) internal_error("center is not preserved by the lifts");
      auto coords = o.center.coords[cd.pos[image]];
      for (int i = 0; i < rank; ++i) m.at(i, t) = coords[i];
    }
    action.push_back(make_abelian_hom(o.center.group, o.center.group, std::move(m)));
  }
  o.module = make_module(pi, o.center.group, std::move(action));

  o.k = zero_cochain(o.module, 3);
  for (int x = 0; x < np; ++x)
    for (int y = 0; y < np; ++y)
      for (int z = 0; z < np; ++z) {
        int v = g.op(g.op(g.op(aut.apply(o.lifts[x], o.f[y][z]), o.f[x][pi.op(y, z)]),
                          g.inverse(o.f[pi.op(x, y)][z])),
                     g.inverse(o.f[x][y]));
        if (cd.pos[v] < 0) internal_error("obstruction value is not central");
        if (x == 0 || y == 0 || z == 0) {
          if (v != 0) internal_error("obstruction is not normalized");
          continue;
        }
        o.k.set({x, y, z}, o.center.coords[cd.pos[v]]);
      }
  if (cocycle_check(o.k)) internal_error("obstruction fails the cocycle condition");
  o.k_class = cohomology_group(o.module, 3).class_of(o.k);
  (void)caps;
  return o;
}

std::vector<long long> kernel_obstruction_class(const AbstractKernel& kernel, const Caps& caps) {
  return kernel_obstruction(kernel, caps).k_class;
}

ExtensionEnumeration enumerate_extensions(const AbstractKernel& kernel, const Caps& caps) {
  ExtensionEnumeration out;
  out.obstruction = kernel_obstruction(kernel, caps);
  out.h2 = cohomology_group(out.obstruction.module, 2);
  const FiniteGroup& pi = kernel.pi;
  const FiniteGroup& g = kernel.g;
  const int np = pi.order();

  auto c2 = bounding_cochain(out.obstruction.k);
  bool class_zero = std::all_of(out.obstruction.k_class.begin(), out.obstruction.k_class.end(),
                                [](long long v) { return v == 0; });
  if (c2.has_value() != class_zero)
    internal_error("obstruction class and bounding cochain disagree");
  if (!c2) return out;

  if (pi.order() * g.order() > caps.extension_order)
    throw Error(Errc::CapExceeded, "extension exceeds the total order cap");

  auto center_elem = [&](const std::vector<long long>& coords) {
    return out.obstruction.center_elements[out.obstruction.center.element_of(
        out.obstruction.center.group.reduce(coords))];
  };
  FactorSet base{out.obstruction.lifts, out.obstruction.f};
  for (int x = 0; x < np; ++x)
    for (int y = 0; y < np; ++y)
      base.f[x][y] = g.op(base.f[x][y], g.inverse(center_elem(c2->at({x, y}))));

  for (const Cochain& z : out.h2.class_representatives(caps.enumeration)) {
    FactorSet fs = base;
    for (int x = 0; x < np; ++x)
      for (int y = 0; y < np; ++y) fs.f[x][y] = g.op(fs.f[x][y], center_elem(z.at({x, y})));
    out.classes.push_back(build_with(kernel.aut, pi, g, fs, caps));
    out.factor_sets.push_back(std::move(fs));
  }
  for (size_t i = 0; i < out.classes.size(); ++i)
    for (size_t j = i + 1; j < out.classes.size(); ++j)
      if (congruent(out.classes[i], out.classes[j], caps))
        internal_error("representatives of distinct classes are congruent");
  return out;
}

}  // namespace grcat
