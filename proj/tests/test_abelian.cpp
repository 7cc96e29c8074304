#include <random>
#include <set>

#include "doctest.h"
#include "grcat/abelian.hpp"
#include "helpers.hpp"

using namespace grcat;
using grcat::testing::error_code_of;

TEST_CASE("coordinate arithmetic and indexing") {
  FiniteAbelianGroup g = abelian_group({2, 4});
  CHECK(g.order() == 8);
  CHECK(g.rank() == 2);
  for (long long i = 0; i < g.order(); ++i) CHECK(g.index_of(g.element(i)) == i);

  std::mt19937 rng(41);
  std::uniform_int_distribution<long long> pick(0, g.order() - 1);
  for (int trial = 0; trial < 100; ++trial) {
    auto a = g.element(pick(rng)), b = g.element(pick(rng)), c = g.element(pick(rng));
    CHECK(g.add(a, g.zero()) == a);
    CHECK(g.add(a, g.neg(a)) == g.zero());
    CHECK(g.add(a, b) == g.add(b, a));
    CHECK(g.add(g.add(a, b), c) == g.add(a, g.add(b, c)));
    CHECK(g.sub(a, b) == g.add(a, g.neg(b)));
    CHECK(g.smul(3, a) == g.add(a, g.add(a, a)));
  }

  CHECK(g.reduce({-1, 7}) == std::vector<long long>{1, 3});
  CHECK(abelian_group({}).order() == 1);
  CHECK(abelian_group({}).exponent() == 1);
  CHECK(abelian_group({2, 4}).exponent() == 4);
  CHECK(abelian_group({2, 3}).exponent() == 6);
  CHECK(error_code_of([] { abelian_group({1}); }) == Errc::ParseError);
  CHECK(error_code_of([] { abelian_group({0}); }) == Errc::ParseError);
}

TEST_CASE("invariant factors and abstract comparison") {
  CHECK(invariant_factors(abelian_group({2, 2})) == std::vector<long long>{2, 2});
  CHECK(invariant_factors(abelian_group({2, 3})) == std::vector<long long>{6});
  CHECK(invariant_factors(abelian_group({4, 6})) == std::vector<long long>{2, 12});
  CHECK(invariant_factors(abelian_group({3, 2, 2})) == std::vector<long long>{2, 6});
  CHECK(same_abstract_group(abelian_group({2, 3}), abelian_group({6})));
  CHECK(!same_abstract_group(abelian_group({4}), abelian_group({2, 2})));
}

TEST_CASE("cayley tables round trip through decomposition") {
  FiniteGroup t = cayley_of(abelian_group({2, 3}));
  CHECK(t.order() == 6);
  CHECK(t.is_cyclic());

  CHECK(decompose_abelian(cyclic_group(6)).group.factors == std::vector<long long>{6});
  CHECK(decompose_abelian(direct_product(cyclic_group(2), cyclic_group(2))).group.factors ==
        std::vector<long long>{2, 2});
  CHECK(decompose_abelian(direct_product(cyclic_group(2), cyclic_group(4))).group.factors ==
        std::vector<long long>{2, 4});
  CHECK(decompose_abelian(direct_product(cyclic_group(2), cyclic_group(12))).group.factors ==
        std::vector<long long>{2, 12});
  CHECK(decompose_abelian(cyclic_group(1)).group.factors.empty());
  CHECK(error_code_of([] { decompose_abelian(symmetric_group(3)); }) == Errc::Internal);

  // Coordinates form an isomorphism onto the invariant-factor presentation.
  for (const FiniteGroup& g : {cyclic_group(8), direct_product(cyclic_group(4), cyclic_group(6))}) {
    AbelianDecomposition d = decompose_abelian(g);
    CHECK(d.group.order() == g.order());
    std::set<std::vector<long long>> seen;
    for (int a = 0; a < g.order(); ++a) seen.insert(d.coords[a]);
    CHECK(seen.size() == static_cast<std::size_t>(g.order()));
    for (int a = 0; a < g.order(); ++a) {
      CHECK(d.element_of(d.coords[a]) == a);
      for (int b = 0; b < g.order(); ++b)
        CHECK(d.coords[g.op(a, b)] == d.group.add(d.coords[a], d.coords[b]));
    }
    for (int t2 = 0; t2 < d.group.rank(); ++t2) {
      std::vector<long long> e(d.group.rank(), 0);
      e[t2] = 1;
      CHECK(d.coords[d.generators[t2]] == e);
    }
  }
}

TEST_CASE("abelian homomorphisms validate, enumerate, and compose") {
  FiniteAbelianGroup z2 = abelian_group({2}), z4 = abelian_group({4});
  FiniteAbelianGroup v4 = abelian_group({2, 2}), z2z4 = abelian_group({2, 4});

  Mat bad(1, 1);
  bad.at(0, 0) = 1;
  CHECK(error_code_of([&] { make_abelian_hom(z2, z4, bad); }) == Errc::NotAHomomorphism);
  Mat good(1, 1);
  good.at(0, 0) = 2;
  CHECK(make_abelian_hom(z2, z4, good).apply({1}) == std::vector<long long>{2});

  CHECK(all_abelian_homs(z2, z4).size() == 2);
  CHECK(all_abelian_homs(v4, z2).size() == 4);
  CHECK(all_abelian_homs(z4, z4).size() == 4);
  CHECK(all_abelian_isos(z4, z4).size() == 2);
  CHECK(all_abelian_isos(v4, v4).size() == 6);
  CHECK(all_abelian_isos(z2z4, z2z4).size() == 8);
  CHECK(all_abelian_isos(z4, v4).empty());
  CHECK(error_code_of([&] { all_abelian_homs(z2z4, z2z4, 3); }) == Errc::CapExceeded);

  for (const AbelianHom& f : all_abelian_isos(z2z4, z2z4)) {
    AbelianHom inv = invert_abelian_iso(f);
    CHECK(compose_abelian(f, inv) == identity_abelian_hom(z2z4));
    CHECK(compose_abelian(inv, f) == identity_abelian_hom(z2z4));
  }

  AbelianHom z = zero_abelian_hom(z4, v4);
  CHECK(z.apply({3}) == std::vector<long long>{0, 0});
  for (const AbelianHom& f : all_abelian_homs(z4, z4))
    CHECK(compose_abelian(identity_abelian_hom(z4), f) == f);
}

TEST_CASE("homomorphism analysis") {
  FiniteAbelianGroup z4 = abelian_group({4});
  Mat two(1, 1);
  two.at(0, 0) = 2;
  AbelianHomAnalysis a = analyze_hom(make_abelian_hom(z4, z4, two));
  CHECK(a.kernel_order == 2);
  CHECK(a.image_order == 2);
  CHECK(a.cokernel_order == 2);
  CHECK(a.cokernel_factors == std::vector<long long>{2});

  AbelianHomAnalysis zero = analyze_hom(zero_abelian_hom(z4, z4));
  CHECK(zero.kernel_order == 4);
  CHECK(zero.image_order == 1);
  CHECK(zero.cokernel_factors == std::vector<long long>{4});

  AbelianHomAnalysis id = analyze_hom(identity_abelian_hom(abelian_group({2, 4})));
  CHECK(id.kernel_order == 1);
  CHECK(id.image_order == 8);
  CHECK(id.cokernel_order == 1);
}
