#include <algorithm>

#include "grcat/functors.hpp"

namespace grcat {

namespace {

void check_shapes(const GrType& source, const GrType& target, const GroupHom& phi,
                  const AbelianHom& f) {
  if (!(phi.source == source.pi()) || !(phi.target == target.pi()))
    throw Error(Errc::SourceTargetMismatch, "base map endpoints do not match the types");
  if (!(f.source == source.coeff()) || !(f.target == target.coeff()))
    throw Error(Errc::SourceTargetMismatch, "coefficient map endpoints do not match the types");
}

}  // namespace

ModulePtr restricted_coefficients(const GrType& source, const GrType& target,
                                  const GroupHom& phi) {
  if (!(phi.source == source.pi()) || !(phi.target == target.pi()))
    throw Error(Errc::SourceTargetMismatch, "base map endpoints do not match the types");
  return restrict_along(phi, target.module);
}

Cochain obstruction(const GrType& source, const GrType& target, const GroupHom& phi,
                    const AbelianHom& f) {
  check_shapes(source, target, phi, f);
  ModulePtr restricted = restricted_coefficients(source, target, phi);
  Cochain k = pullback(phi, target.h);
  k.module = restricted;
  k.sub(pushforward(f, restricted, source.h));
  return k;
}

std::optional<std::vector<int>> gr_functor_check(const GrFunctorData& F) {
  Cochain k = obstruction(F.source, F.target, F.phi, F.f);
  const int n = F.source.pi().order();
  for (int x = 1; x < n; ++x)
    for (int y = 1; y < n; ++y)
      for (int z = 1; z < n; ++z) {
        std::vector<int> t{x, y, z};
        if (coboundary_at(F.g, t) != k.at(t)) return t;
      }
  return std::nullopt;
}

GrFunctorData make_gr_functor(GrType source, GrType target, GroupHom phi, AbelianHom f,
                              Cochain g) {
  check_shapes(source, target, phi, f);
  ModulePtr restricted = restricted_coefficients(source, target, phi);
  if (!g.module || g.degree != 2 || !modules_equal(*g.module, *restricted))
    throw Error(Errc::SourceTargetMismatch,
                "comparison cochain must have degree 2 over the restricted coefficients");
  g.module = restricted;
  GrFunctorData F{std::move(source), std::move(target), std::move(phi), std::move(f),
                  std::move(g)};
  if (auto w = gr_functor_check(F))
    throw Error(Errc::NotACocycle, "comparison cochain fails the functor equation",
                std::vector<long long>(w->begin(), w->end()));
  return F;
}

std::optional<GrFunctorData> try_realize(const GrType& source, const GrType& target,
                                         const GroupHom& phi, const AbelianHom& f) {
  Cochain k = obstruction(source, target, phi, f);
  auto g = bounding_cochain(k);
  if (!g) return std::nullopt;
  return make_gr_functor(source, target, phi, f, std::move(*g));
}

GrFunctorData realize(const GrType& source, const GrType& target, const GroupHom& phi,
                      const AbelianHom& f, const Caps&) {
  if (auto F = try_realize(source, target, phi, f)) return std::move(*F);
  Cochain k = obstruction(source, target, phi, f);
  auto cls = cohomology_group(k.module, 3).class_of(k);
  throw Error(Errc::ObstructionNonzero,
              "no comparison cochain exists; obstruction class coordinates attached", cls);
}

GrFunctorData identity_functor(const GrType& t) {
  GroupHom phi = identity_hom(t.pi());
  Cochain g = zero_cochain(restrict_along(phi, t.module), 2);
  return make_gr_functor(t, t, std::move(phi), identity_abelian_hom(t.coeff()), std::move(g));
}

GrFunctorData compose_functors(const GrFunctorData& outer, const GrFunctorData& inner) {
  if (!types_equal(inner.target, outer.source))
    throw Error(Errc::SourceTargetMismatch,
                "inner functor target differs from outer functor source");
  GroupHom phi = compose_homs(outer.phi, inner.phi);
  AbelianHom f = compose_abelian(outer.f, inner.f);
  Cochain g = zero_cochain(restrict_along(phi, outer.target.module), 2);
  const int n = inner.source.pi().order();
  for (int x = 1; x < n; ++x)
    for (int y = 1; y < n; ++y) {
      auto v = outer.f.apply(inner.g.at({x, y}));
      v = outer.target.coeff().add(
          v, outer.g.at({inner.phi.map[x], inner.phi.map[y]}));
      g.set({x, y}, std::move(v));
    }
  return make_gr_functor(inner.source, outer.target, std::move(phi), f, std::move(g));
}

std::optional<Homotopy> find_homotopy(const GrFunctorData& a, const GrFunctorData& b) {
  if (!types_equal(a.source, b.source) || !types_equal(a.target, b.target))
    throw Error(Errc::SourceTargetMismatch, "homotopy needs functors between the same types");
  if (!(a.phi == b.phi) || !(a.f == b.f)) return std::nullopt;
  Cochain diff = b.g;
  diff.sub(a.g);
  auto u = bounding_cochain(diff);
  if (!u) return std::nullopt;
  return Homotopy{std::move(*u)};
}

bool are_homotopic(const GrFunctorData& a, const GrFunctorData& b) {
  return find_homotopy(a, b).has_value();
}

std::vector<Cochain> functor_automorphisms(const GrFunctorData& F, long long cap) {
  return all_cocycles(F.g.module, 1, cap);
}

FunctorClassification classify_functors(const GrType& source, const GrType& target,
                                        const GroupHom& phi, const AbelianHom& f,
                                        const Caps& caps) {
  FunctorClassification out;
  Cochain k = obstruction(source, target, phi, f);
  out.h2 = cohomology_group(k.module, 2);
  auto g0 = bounding_cochain(k);
  if (!g0) {
    out.realizable = false;
    out.obstruction_class = cohomology_group(k.module, 3).class_of(k);
    return out;
  }
  out.realizable = true;
  for (Cochain& z : out.h2.class_representatives(caps.enumeration)) {
    Cochain g = *g0;
    g.add(z);
    out.classes.push_back(make_gr_functor(source, target, phi, f, std::move(g)));
  }
  return out;
}

std::optional<std::vector<int>> braided_compatibility_check(const GrFunctorData& F,
                                                            const Cochain& eta_source,
                                                            const Cochain& eta_target) {
  if (eta_source.degree != 2 || !eta_source.module ||
      !modules_equal(*eta_source.module, *F.source.module))
    throw Error(Errc::SourceTargetMismatch, "source braiding must be degree 2 over the source");
  if (eta_target.degree != 2 || !eta_target.module ||
      !modules_equal(*eta_target.module, *F.target.module))
    throw Error(Errc::SourceTargetMismatch, "target braiding must be degree 2 over the target");
  const auto& coeff = F.target.coeff();
  const int n = F.source.pi().order();
  for (int x = 1; x < n; ++x)
    for (int y = 1; y < n; ++y) {
      auto lhs = coeff.sub(eta_target.at({F.phi.map[x], F.phi.map[y]}),
                           F.f.apply(eta_source.at({x, y})));
      auto rhs = coeff.sub(F.g.at({x, y}), F.g.at({y, x}));
      if (lhs != rhs) return std::vector<int>{x, y};
    }
  return std::nullopt;
}

}  // namespace grcat
