#include <memory>
#include <random>

#include "doctest.h"
#include "grcat/skeletal.hpp"
#include "grcat/strictify.hpp"
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

Cochain random_cochain(ModulePtr m, int deg, std::mt19937& rng) {
  Cochain c = zero_cochain(m, deg);
  std::vector<int> t(deg, 1);
  if (m->pi.order() == 1) return c;
  while (true) {
    std::vector<long long> v(m->coeff.rank());
    for (std::size_t i = 0; i < v.size(); ++i)
      v[i] = std::uniform_int_distribution<long long>(0, m->coeff.factors[i] - 1)(rng);
    c.set(t, v);
    int i = deg - 1;
    while (i >= 0 && t[i] == m->pi.order() - 1) t[i--] = 1;
    if (i < 0) break;
    ++t[i];
  }
  return c;
}

StrictGrCat aut_cat_of(const FiniteGroup& g, const Caps& caps = {}) {
  return aut_g_category(std::make_shared<AutData>(automorphisms(g)), caps);
}

Mor random_mor(const StrictGrCat& c, std::mt19937& rng) {
  std::uniform_int_distribution<int> obj(0, c.object_count - 1);
  while (true) {
    int s = obj(rng), d = obj(rng);
    auto labels = c.hom(s, d);
    if (labels.empty()) continue;
    return Mor{s, d, labels[std::uniform_int_distribution<std::size_t>(0, labels.size() - 1)(rng)]};
  }
}

}  // namespace

TEST_CASE("pentagon holds exactly for 3-cocycles") {
  std::mt19937 rng(909);
  auto z2z4 = trivial_module(cyclic_group(2), abelian_group({4}));
  // Exhaustive over (Z2, Z4): the associator is determined by one value.
  for (long long v = 0; v < 4; ++v) {
    Cochain h = zero_cochain(z2z4, 3);
    h.set({1, 1, 1}, {v});
    GrType t{z2z4, h};
    CHECK(pentagon_check(t).has_value() == cocycle_check(h).has_value());
    if (auto w = pentagon_check(t)) CHECK(*w == *cocycle_check(h));
  }
  // Sampled over (Z3, Z3).
  auto z3z3 = trivial_module(cyclic_group(3), abelian_group({3}));
  int disagreements = 0;
  for (int trial = 0; trial < 300; ++trial) {
    Cochain h = random_cochain(z3z3, 3, rng);
    GrType t{z3z3, h};
    if (pentagon_check(t).has_value() != cocycle_check(h).has_value()) ++disagreements;
  }
  CHECK(disagreements == 0);
}

TEST_CASE("type construction validates its pieces") {
  auto z2z4 = trivial_module(cyclic_group(2), abelian_group({4}));
  Cochain bad = zero_cochain(z2z4, 3);
  bad.set({1, 1, 1}, {1});
  try {
    make_gr_type(z2z4, bad);
    CHECK(false);
  } catch (const Error& e) {
    CHECK(e.code == Errc::NotACocycle);
    CHECK(e.witness == std::vector<long long>{1, 1, 1, 1});
  }
  Cochain good = zero_cochain(z2z4, 3);
  good.set({1, 1, 1}, {2});
  GrType t = make_gr_type(z2z4, good);
  CHECK(types_equal(t, t));
  CHECK(error_code_of([&] { make_gr_type(z2z4, zero_cochain(z2z4, 2)); }) ==
        Errc::SourceTargetMismatch);
}

TEST_CASE("skeletal morphism calculus") {
  auto m = inversion_module(cyclic_group(2), abelian_group({4}));
  Cochain h = zero_cochain(m, 3);
  h.set({1, 1, 1}, {2});
  GrType t = make_gr_type(m, h);

  SkelMor a{1, {1}}, b{1, {2}};
  CHECK(skel_compose(t, a, b).u == std::vector<long long>{3});
  CHECK(skel_tensor(t, a, b).obj == 0);
  // Tensor twists the right label by the action of the left object.
  CHECK(skel_tensor(t, a, b).u == std::vector<long long>{1 + 4 - 2});
  CHECK(skel_assoc(t, 1, 1, 1).u == std::vector<long long>{2});
  CHECK(skel_invert(t, a).u == std::vector<long long>{3});
  CHECK(skel_compose(t, skel_invert(t, a), a).u == std::vector<long long>{0});
  CHECK(skel_id(t, 1).u == std::vector<long long>{0});
}

TEST_CASE("automorphism categorical group satisfies the strict laws") {
  std::mt19937 rng(17);
  for (const FiniteGroup& g : {symmetric_group(3), cyclic_group(4), quaternion_group()}) {
    StrictGrCat c = aut_cat_of(g);
    CHECK(c.object_count == automorphisms(g).order());
    // Strict unit and associativity on objects.
    for (int x = 0; x < c.object_count; ++x) {
      CHECK(c.tensor_obj(0, x) == x);
      CHECK(c.tensor_obj(x, 0) == x);
      for (int y = 0; y < c.object_count; ++y)
        for (int z = 0; z < c.object_count; ++z)
          CHECK(c.tensor_obj(c.tensor_obj(x, y), z) == c.tensor_obj(x, c.tensor_obj(y, z)));
    }
    // Interchange: (f2 o f1) tensor (g2 o g1) = (f2 tensor g2) o (f1 tensor g1).
    for (int trial = 0; trial < 60; ++trial) {
      Mor f1 = random_mor(c, rng), g1 = random_mor(c, rng);
      auto pick = [&](int s, int d) {
        auto labels = c.hom(s, d);
        REQUIRE(!labels.empty());
        return Mor{s, d, labels[std::uniform_int_distribution<std::size_t>(0, labels.size() - 1)(rng)]};
      };
      Mor f2 = pick(f1.dst, f1.dst), g2 = pick(g1.dst, g1.dst);
      Mor lhs = c.tensor(c.compose(f2, f1), c.compose(g2, g1));
      Mor rhs = c.compose(c.tensor(f2, g2), c.tensor(f1, g1));
      CHECK(lhs == rhs);
      // Identities are neutral.
      CHECK(c.compose(f1, c.id(f1.src)) == f1);
      CHECK(c.compose(c.id(f1.dst), f1) == f1);
      // Inverses compose to identities.
      Mor inv = invert_mor(c, f1);
      CHECK(c.compose(inv, f1) == c.id(f1.src));
      CHECK(c.compose(f1, inv) == c.id(f1.dst));
    }
  }
  Caps tiny;
  tiny.object_count = 4;
  CHECK(error_code_of([&] { aut_cat_of(quaternion_group(), tiny); }) == Errc::CapExceeded);
}

TEST_CASE("reduction of the automorphism model of Z4") {
  ReductionResult r = reduce_strict(aut_cat_of(cyclic_group(4)));
  CHECK(r.pi0.order() == 2);
  CHECK(r.pi1.group.factors == std::vector<long long>{4});
  CHECK(r.module->coeff.factors == std::vector<long long>{4});
  // The nontrivial component acts by inversion on the coefficients.
  CHECK(r.module->act(1, {1}) == std::vector<long long>{3});
  CHECK(r.h.is_zero());
  CHECK(r.end_unit_labels.size() == 4);
  CHECK(r.stick.size() == 2);
}

TEST_CASE("reduction of the automorphism model of Q8") {
  ReductionResult r = reduce_strict(aut_cat_of(quaternion_group()));
  CHECK(r.pi0.order() == 6);
  CHECK(!r.pi0.is_abelian());
  CHECK(r.module->coeff.factors == std::vector<long long>{2});
  CHECK(cocycle_check(r.h) == std::nullopt);
  // Component classes partition the 24 automorphisms into 6 classes of 4.
  for (int s : r.stick) CHECK(r.class_of[s] >= 0);
  std::vector<int> sizes(6, 0);
  for (int obj = 0; obj < 24; ++obj) ++sizes[r.class_of[obj]];
  for (int n : sizes) CHECK(n == 4);
  // The chosen isomorphisms really land on the sticks.
  for (int obj = 0; obj < 24; ++obj) {
    CHECK(r.iso[obj].src == obj);
    CHECK(r.iso[obj].dst == r.stick[r.class_of[obj]]);
  }
}

TEST_CASE("reduction of a large elementary abelian automorphism model") {
  FiniteGroup z2cubed =
      direct_product(direct_product(cyclic_group(2), cyclic_group(2)), cyclic_group(2));
  ReductionResult r = reduce_strict(aut_cat_of(z2cubed));
  CHECK(r.pi0.order() == 168);
  CHECK(r.pi1.group.factors == std::vector<long long>{2, 2, 2});
  CHECK(r.h.is_zero());
}

TEST_CASE("pullback restricts the component group") {
  StrictGrCat c = aut_cat_of(cyclic_group(4));
  ReductionResult r = reduce_strict(c);
  GroupHom psi = make_hom(cyclic_group(2), r.pi0, {0, 1});
  PullbackResult p = pullback_strict(c, r, psi);
  CHECK(p.objects.size() == 2);
  ReductionResult pr = reduce_strict(p.cat);
  CHECK(pr.pi0.table == cyclic_group(2).table);
  CHECK(pr.module->coeff.factors == std::vector<long long>{4});
  CHECK(pr.module->act(1, {1}) == std::vector<long long>{3});
  CHECK(pr.h.is_zero());

  // Restricting along the trivial map keeps only the inner component.
  GroupHom triv = trivial_hom(cyclic_group(2), r.pi0);
  ReductionResult tr = reduce_strict(pullback_strict(c, r, triv).cat);
  CHECK(tr.pi0.order() == 2);
  CHECK(tr.module->act(1, {1}) == std::vector<long long>{1});

  CHECK(error_code_of([&] {
          pullback_strict(c, r, make_hom(cyclic_group(3), cyclic_group(3), {0, 1, 2}));
        }) == Errc::PsiNotIntoPi0);
}

TEST_CASE("strictification succeeds on realizable types") {
  // (Z2 base, Z4 coefficients, inversion, trivial associator) realized by Z4.
  GrType t1 = make_gr_type(inversion_module(cyclic_group(2), abelian_group({4})),
                           zero_cochain(inversion_module(cyclic_group(2), abelian_group({4})), 3));
  StrictifyResult r1 = strictify(t1, cyclic_group(4), {0, 1});
  CHECK(r1.model.objects.size() == 2);
  CHECK(gr_functor_check(r1.equivalence) == std::nullopt);
  CHECK(r1.equivalence.phi.map == std::vector<int>{0, 1});
  CHECK(is_abelian_iso(r1.coeff_iso));
  CHECK(types_equal(r1.equivalence.source, t1));

  // (Z2 base, Z3 coefficients, inversion) realized by Z3.
  GrType t2 = make_gr_type(inversion_module(cyclic_group(2), abelian_group({3})),
                           zero_cochain(inversion_module(cyclic_group(2), abelian_group({3})), 3));
  StrictifyResult r2 = strictify(t2, cyclic_group(3), {0, 1});
  CHECK(gr_functor_check(r2.equivalence) == std::nullopt);

  // Trivial action realized by the kernel group itself when it is abelian.
  GrType t3 = make_gr_type(trivial_module(cyclic_group(2), abelian_group({2})),
                           zero_cochain(trivial_module(cyclic_group(2), abelian_group({2})), 3));
  StrictifyResult r3 = strictify(t3, cyclic_group(2), {0, 0});
  CHECK(gr_functor_check(r3.equivalence) == std::nullopt);
  CHECK(types_equal(r3.model_reduction.type(), r3.equivalence.target));
}

TEST_CASE("strictification refuses impossible realizations") {
  // Trivial action demanded, but psi forces inversion.
  auto triv = trivial_module(cyclic_group(2), abelian_group({4}));
  GrType t = make_gr_type(triv, zero_cochain(triv, 3));
  CHECK(error_code_of([&] { strictify(t, cyclic_group(4), {0, 1}); }) ==
        Errc::RealizationMismatch);
  // psi is not a valid map into the outer classes.
  CHECK(error_code_of([&] { strictify(t, cyclic_group(4), {0, 7}); }) == Errc::PsiNotIntoPi0);
  // Coefficients that cannot match the center.
  CHECK(error_code_of([&] { strictify(t, cyclic_group(3), {0, 0}); }) ==
        Errc::RealizationMismatch);
}
