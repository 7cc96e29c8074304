#include <algorithm>
#include <set>
#include <vector>

#include "doctest.h"
#include "grcat/functors.hpp"
#include "helpers.hpp"

using namespace grcat;
using grcat::testing::error_code_of;

namespace {

ModulePtr inversion_module(const FiniteGroup& pi, const FiniteAbelianGroup& a) {
  std::vector<AbelianHom> action;
  for (int s = 0; s < pi.order(); ++s) {
    Mat m(a.rank(), a.rank());
    for (int i = 0; i < a.rank(); ++i) m.at(i, i) = s == 0 ? 1 : a.factors[i] - 1;
    action.push_back(make_abelian_hom(a, a, m));
  }
  return make_module(pi, a, action);
}

GrType simple_type(const FiniteGroup& pi, const FiniteAbelianGroup& a) {
  auto m = trivial_module(pi, a);
  return GrType{m, zero_cochain(m, 3)};
}

std::vector<std::vector<int>> free_tuples(const FiniteGroup& pi, int deg) {
  std::vector<std::vector<int>> out;
  std::vector<int> t(deg, 1);
  if (deg == 0) return {{}};
  if (pi.order() == 1) return out;
  while (true) {
    out.push_back(t);
    int i = deg - 1;
    while (i >= 0 && t[i] == pi.order() - 1) t[i--] = 1;
    if (i < 0) break;
    ++t[i];
  }
  return out;
}

/// Bar coboundary evaluated from the definition, independent of the library.
std::vector<long long> direct_d(const Cochain& g, const std::vector<int>& t) {
  const auto& m = *g.module;
  int d = g.degree;
  auto acc = m.coeff.zero();
  auto addsigned = [&](int sign, const std::vector<long long>& v) {
    acc = sign > 0 ? m.coeff.add(acc, v) : m.coeff.sub(acc, v);
  };
  addsigned(1, m.act(t[0], g.at(std::vector<int>(t.begin() + 1, t.end()))));
  int sign = -1;
  for (int i = 0; i < d; ++i) {
    std::vector<int> s;
    for (int j = 0; j < i; ++j) s.push_back(t[j]);
    s.push_back(m.pi.op(t[i], t[i + 1]));
    for (int j = i + 2; j <= d; ++j) s.push_back(t[j]);
    addsigned(sign, g.at(s));
    sign = -sign;
  }
  addsigned(sign, g.at(std::vector<int>(t.begin(), t.end() - 1)));
  return acc;
}

/// All normalized cochains of the given degree, by odometer over free tuples.
std::vector<Cochain> all_cochains(ModulePtr m, int deg) {
  auto tuples = free_tuples(m->pi, deg);
  long long values = m->coeff.order();
  std::vector<Cochain> out;
  std::vector<long long> idx(tuples.size(), 0);
  while (true) {
    Cochain c = zero_cochain(m, deg);
    for (std::size_t i = 0; i < tuples.size(); ++i)
      if (idx[i] != 0) c.set(tuples[i], m->coeff.element(idx[i]));
    out.push_back(c);
    std::size_t i = 0;
    while (i < idx.size() && idx[i] == values - 1) idx[i++] = 0;
    if (i == idx.size()) break;
    ++idx[i];
  }
  return out;
}

struct BruteClassification {
  std::vector<Cochain> valid;          // all comparison cochains solving the equation
  std::vector<std::vector<int>> orbits;  // indices into valid, one orbit per class
  int orbit_of(const Cochain& g) const {
    for (std::size_t o = 0; o < orbits.size(); ++o)
      for (int i : orbits[o])
        if (valid[i].same_values(g)) return (int)o;
    return -1;
  }
};

/// Exhaustive functor classification: a comparison cochain g is valid when its
/// coboundary equals the obstruction pointwise, and two are equivalent when
/// they differ by the coboundary of a degree-1 cochain.
BruteClassification brute_classify(const GrType& source, const GrType& target,
                                   const GroupHom& phi, const AbelianHom& f) {
  ModulePtr restr = restricted_coefficients(source, target, phi);
  Cochain k = obstruction(source, target, phi, f);
  auto triples = free_tuples(source.pi(), 3);
  BruteClassification out;
  for (Cochain& g : all_cochains(restr, 2)) {
    bool ok = true;
    for (const auto& t : triples)
      if (direct_d(g, t) != k.at(t)) {
        ok = false;
        break;
      }
    if (ok) out.valid.push_back(g);
  }
  std::vector<bool> seen(out.valid.size(), false);
  auto ones = all_cochains(restr, 1);
  for (std::size_t i = 0; i < out.valid.size(); ++i) {
    if (seen[i]) continue;
    std::vector<int> orbit;
    for (Cochain& u : ones) {
      Cochain shifted = out.valid[i];
      Cochain du = zero_cochain(restr, 2);
      for (const auto& t : free_tuples(source.pi(), 2)) du.set(t, direct_d(u, t));
      shifted.add(du);
      for (std::size_t j = 0; j < out.valid.size(); ++j)
        if (!seen[j] && out.valid[j].same_values(shifted)) {
          seen[j] = true;
          orbit.push_back((int)j);
        }
    }
    std::sort(orbit.begin(), orbit.end());
    out.orbits.push_back(orbit);
  }
  return out;
}

int count_one_cocycles(ModulePtr m) {
  int n = 0;
  auto pairs = free_tuples(m->pi, 2);
  for (Cochain& u : all_cochains(m, 1)) {
    bool ok = true;
    for (const auto& t : pairs)
      if (direct_d(u, t) != m->coeff.zero()) {
        ok = false;
        break;
      }
    if (ok) ++n;
  }
  return n;
}

}  // namespace

TEST_CASE("classification agrees with exhaustive search") {
  struct Case {
    GrType source, target;
    GroupHom phi;
    AbelianHom f;
  };
  GrType z2z4inv{inversion_module(cyclic_group(2), abelian_group({4})),
                 zero_cochain(inversion_module(cyclic_group(2), abelian_group({4})), 3)};
  GrType z3z3 = simple_type(cyclic_group(3), abelian_group({3}));
  GrType z4z2 = simple_type(cyclic_group(4), abelian_group({2}));
  GrType z2z2 = simple_type(cyclic_group(2), abelian_group({2}));
  Mat mod2(1, 1);
  mod2.at(0, 0) = 1;
  std::vector<Case> cases;
  cases.push_back({z2z4inv, z2z4inv, identity_hom(cyclic_group(2)),
                   identity_abelian_hom(abelian_group({4}))});
  cases.push_back({z3z3, z3z3, identity_hom(cyclic_group(3)),
                   identity_abelian_hom(abelian_group({3}))});
  cases.push_back({z4z2, z2z2, make_hom(cyclic_group(4), cyclic_group(2), {0, 1, 0, 1}),
                   make_abelian_hom(abelian_group({2}), abelian_group({2}), mod2)});
  cases.push_back({z2z2, z2z2, trivial_hom(cyclic_group(2), cyclic_group(2)),
                   make_abelian_hom(abelian_group({2}), abelian_group({2}), mod2)});

  for (const Case& c : cases) {
    CAPTURE(c.source.pi().order());
    BruteClassification brute = brute_classify(c.source, c.target, c.phi, c.f);
    FunctorClassification lib = classify_functors(c.source, c.target, c.phi, c.f);
    REQUIRE(lib.realizable);
    CHECK(lib.classes.size() == brute.orbits.size());
    // The library representatives are valid, and no two share a brute orbit.
    std::set<int> hit;
    for (const GrFunctorData& F : lib.classes) {
      CHECK(gr_functor_check(F) == std::nullopt);
      int o = brute.orbit_of(F.g);
      CHECK(o >= 0);
      CHECK(!hit.count(o));
      hit.insert(o);
    }
    // Validity matches the direct equation for every candidate cochain.
    ModulePtr restr = restricted_coefficients(c.source, c.target, c.phi);
    for (Cochain& g : all_cochains(restr, 2)) {
      GrFunctorData F{c.source, c.target, c.phi, c.f, g};
      bool valid = !gr_functor_check(F).has_value();
      bool brute_valid = false;
      for (const Cochain& v : brute.valid)
        if (v.same_values(g)) brute_valid = true;
      CHECK(valid == brute_valid);
    }
    // Self-homotopies are the degree-1 cocycles.
    CHECK((int)functor_automorphisms(lib.classes[0]).size() == count_one_cocycles(restr));
  }
}

TEST_CASE("identity functor on a cyclic type has three classes") {
  GrType t = simple_type(cyclic_group(3), abelian_group({3}));
  FunctorClassification c = classify_functors(t, t, identity_hom(cyclic_group(3)),
                                              identity_abelian_hom(abelian_group({3})));
  CHECK(c.realizable);
  CHECK(c.classes.size() == 3);
  CHECK(c.h2.order() == 3);
  for (std::size_t i = 0; i < c.classes.size(); ++i)
    for (std::size_t j = i + 1; j < c.classes.size(); ++j)
      CHECK(!are_homotopic(c.classes[i], c.classes[j]));
  CHECK(functor_automorphisms(c.classes[0]).size() == 3);
}

TEST_CASE("a nonzero obstruction blocks realization") {
  GrType source = simple_type(cyclic_group(2), abelian_group({2}));
  auto m4 = trivial_module(cyclic_group(2), abelian_group({4}));
  Cochain h = zero_cochain(m4, 3);
  h.set({1, 1, 1}, {2});
  GrType target = make_gr_type(m4, h);
  GroupHom phi = identity_hom(cyclic_group(2));
  Mat emb(1, 1);
  emb.at(0, 0) = 2;  // the embedding of the 2-element group into the 4-element one
  AbelianHom f = make_abelian_hom(abelian_group({2}), abelian_group({4}), emb);

  Cochain k = obstruction(source, target, phi, f);
  CHECK(k.at({1, 1, 1}) == std::vector<long long>{2});
  FunctorClassification c = classify_functors(source, target, phi, f);
  CHECK(!c.realizable);
  CHECK(c.obstruction_class == std::vector<long long>{1});
  CHECK(c.classes.empty());
  CHECK(!try_realize(source, target, phi, f).has_value());
  CHECK(error_code_of([&] { realize(source, target, phi, f); }) == Errc::ObstructionNonzero);

  // The same data with a trivial target associator is realizable.
  GrType flat{m4, zero_cochain(m4, 3)};
  CHECK(try_realize(source, flat, phi, f).has_value());
}

TEST_CASE("composition adds comparison data over identity maps") {
  GrType t = simple_type(cyclic_group(3), abelian_group({3}));
  FunctorClassification c = classify_functors(t, t, identity_hom(cyclic_group(3)),
                                              identity_abelian_hom(abelian_group({3})));
  REQUIRE(c.classes.size() == 3);
  const GrFunctorData& a = c.classes[1];
  const GrFunctorData& b = c.classes[2];
  GrFunctorData ab = compose_functors(a, b);
  CHECK(gr_functor_check(ab) == std::nullopt);
  Cochain sum = a.g;
  sum.add(b.g);
  CHECK(ab.g.same_values(sum));

  GrFunctorData idf = identity_functor(t);
  CHECK(gr_functor_check(idf) == std::nullopt);
  CHECK(compose_functors(idf, a).g.same_values(a.g));
  CHECK(compose_functors(a, idf).g.same_values(a.g));
}

TEST_CASE("homotopies bridge comparison cochains") {
  auto m = inversion_module(cyclic_group(2), abelian_group({4}));
  GrType t{m, zero_cochain(m, 3)};
  GroupHom phi = identity_hom(cyclic_group(2));
  AbelianHom f = identity_abelian_hom(abelian_group({4}));
  auto with_g = [&](long long v) {
    Cochain g = zero_cochain(m, 2);
    if (v) g.set({1, 1}, {v});
    return GrFunctorData{t, t, phi, f, g};
  };
  // The coboundary of any degree-1 cochain vanishes here, so distinct
  // comparison cochains are never homotopic.
  CHECK(are_homotopic(with_g(0), with_g(0)));
  auto self = find_homotopy(with_g(2), with_g(2));
  REQUIRE(self.has_value());
  CHECK(self->u.is_zero());
  CHECK(!are_homotopic(with_g(0), with_g(2)));
  CHECK(!find_homotopy(with_g(0), with_g(2)).has_value());

  // Functors over different base maps are never homotopic.
  GrType flat = simple_type(cyclic_group(2), abelian_group({4}));
  Mat z(1, 1);
  AbelianHom zero_f = make_abelian_hom(abelian_group({4}), abelian_group({4}), z);
  GrFunctorData other{flat, flat, trivial_hom(cyclic_group(2), cyclic_group(2)), zero_f,
                      zero_cochain(trivial_module(cyclic_group(2), abelian_group({4})), 2)};
  GrFunctorData ident = identity_functor(flat);
  CHECK(!are_homotopic(ident, other));
}

TEST_CASE("braiding compatibility for a twisted self-equivalence") {
  auto m = trivial_module(cyclic_group(2), abelian_group({4}));
  Cochain h = zero_cochain(m, 3);
  h.set({1, 1, 1}, {2});
  Cochain eta = zero_cochain(m, 2);
  eta.set({1, 1}, {1});
  GrType t = make_gr_type(m, h);
  GrFunctorData idf = identity_functor(t);
  CHECK(braided_compatibility_check(idf, eta, eta) == std::nullopt);

  Cochain eta_bad = zero_cochain(m, 2);
  eta_bad.set({1, 1}, {3});
  auto w = braided_compatibility_check(idf, eta, eta_bad);
  REQUIRE(w.has_value());
  CHECK(*w == std::vector<int>{1, 1});

  // Over a base of exponent two the comparison cochain cancels out of the
  // equation, so adjusting it cannot repair a mismatched braiding.
  Cochain g = zero_cochain(m, 2);
  g.set({1, 1}, {1});
  GrFunctorData shifted{t, t, idf.phi, idf.f, g};
  CHECK(braided_compatibility_check(shifted, eta, eta) == std::nullopt);
  CHECK(braided_compatibility_check(shifted, eta, eta_bad).has_value());
}
