#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>

#include "schreier/factors.hpp"
#include "schreier/objects.hpp"
#include "schreier/perm.hpp"
#include "test_support.hpp"

using namespace schreier;

TEST_CASE("one-dart objects") {
  LabelledDigraph g(FreeProductSignature({kInfiniteOrder, kInfiniteOrder}), 1);
  g.set_edge(0, 0, 0);
  g.set_edge(1, 0, 0);
  g.set_basepoint(0);

  Hypermap h = to_hypermap(g);
  CHECK(h.darts == 1);
  CHECK(hypermap_valid(h));
  auto eg = euler_genus(h);
  CHECK(eg.chi == 2);
  CHECK(eg.genus == 0u);  // the sphere
  CHECK(object_automorphisms(h).order() == 1);

  Constellation c = to_constellation(g);
  CHECK(c.g.size() == 3);
  for (const Perm& p : c.g) CHECK(perm_is_identity(p));
  CHECK(constellation_valid(c));
}

TEST_CASE("hypermaps from (p,q) realizations have exact cycle lengths") {
  Realization real =
      realize_base(FiniteGroup::preset("Z3"), FreeProductSignature({3, 2}));
  Hypermap h = to_hypermap(real.schreier);
  CHECK(hypermap_valid(h));
  CHECK(h.is_map);  // q = 2: L is a fixed-point-free involution
  for (Vertex len : cycle_type(h.R)) CHECK(len == 3);
  for (Vertex len : cycle_type(h.L)) CHECK(len == 2);
  CHECK(object_automorphisms(h).order() == 3);

  // degenerate input is rejected
  LabelledDigraph loop(FreeProductSignature({3, 2}), 1);
  loop.set_edge(0, 0, 0);
  loop.set_edge(1, 0, 0);
  CHECK_THROWS_AS(to_hypermap(loop), DomainError);
}

TEST_CASE("euler characteristic two ways on maps") {
  std::mt19937 rng(41);
  FreeProductSignature sig({kInfiniteOrder, 2});
  for (int trial = 0; trial < 25; ++trial) {
    Vertex n = 2 + 2 * (rng() % 8);
    auto g = test::random_schreier_graph(rng, sig, n, 1.0);  // torsion-free
    Hypermap h = to_hypermap(g);
    REQUIRE(h.is_map);
    auto eg = euler_genus(h);
    // V - E + F with V = c(R), E = n/2, F = c(R^-1 L)
    long velf = static_cast<long>(cycle_type(h.R).size()) - n / 2 +
                static_cast<long>(
                    cycle_type(perm_compose(perm_inverse(h.R), h.L)).size());
    CHECK(eg.chi == velf);
    CHECK(eg.chi % 2 == 0);
    REQUIRE(eg.genus.has_value());
  }
}

TEST_CASE("pavings from free (2,2,2) graphs") {
  Realization real = realize_base(FiniteGroup::preset("klein4"),
                                  FreeProductSignature({2, 2, 2}));
  Paving p = to_paving(real.schreier);
  CHECK(paving_valid(p));

  // LV = S and VR^-1 = T, the defining involutions
  Perm s = *real.schreier.label_perm(1);
  Perm t = *real.schreier.label_perm(2);
  CHECK(perm_compose(p.L, p.V) == s);
  CHECK(perm_compose(p.V, perm_inverse(p.R)) == t);
  CHECK(object_automorphisms(p).order() == 4);

  // a fixed point in any label breaks the paving conditions
  LabelledDigraph bad(FreeProductSignature({2, 2, 2}), 2);
  bad.set_edge(0, 0, 0);
  bad.set_edge(0, 1, 1);
  bad.set_edge(1, 0, 1);
  bad.set_edge(1, 1, 0);
  bad.set_edge(2, 0, 1);
  bad.set_edge(2, 1, 0);
  CHECK_THROWS_AS(to_paving(bad), DomainError);
}

TEST_CASE("constellations from all-infinite realizations") {
  Realization real = realize(FiniteGroup::preset("Z2"),
                             FreeProductSignature({kInfiniteOrder, kInfiniteOrder}));
  Constellation c = to_constellation(real.schreier);
  CHECK(c.g.size() == 3);
  CHECK(constellation_valid(c));
  CHECK(object_automorphisms(c).order() == 2);

  auto pass = passport(c);
  CHECK(pass.size() == 3);
  for (const auto& part : pass) {
    Vertex total = 0;
    for (Vertex x : part) total += x;
    CHECK(total == c.darts);  // each row partitions the degree
  }
}

TEST_CASE("round trips preserve permutation data") {
  Realization real =
      realize_base(FiniteGroup::preset("Z2"), FreeProductSignature({3, 2}));
  Hypermap h = to_hypermap(real.schreier);
  LabelledDigraph back = underlying_graph(h);
  for (Vertex v = 0; v < back.vertex_count(); ++v) {
    CHECK(back.succ(0, v) == real.schreier.succ(0, v));
    CHECK(back.succ(1, v) == real.schreier.succ(1, v));
  }

  Realization r222 = realize_base(FiniteGroup::preset("Z2"),
                                  FreeProductSignature({2, 2, 2}));
  Paving p = to_paving(r222.schreier);
  LabelledDigraph pback = underlying_graph(p);
  for (Label l = 0; l < 3; ++l)
    for (Vertex v = 0; v < pback.vertex_count(); ++v)
      CHECK(pback.succ(l, v) == r222.schreier.succ(l, v));
  // and the paving conditions hold exactly on the free input
  CHECK(paving_valid(p));
}

TEST_CASE("object automorphisms equal the graph automorphisms elementwise") {
  std::mt19937 rng(43);
  FreeProductSignature sig({3, 3});
  for (int trial = 0; trial < 10; ++trial) {
    auto g = test::random_schreier_graph(rng, sig, 9, 1.0);
    if (!validate(g).is_free) continue;
    Hypermap h = to_hypermap(g);
    auto a1 = automorphisms(g).elements;
    auto a2 = object_automorphisms(h).elements;
    std::sort(a1.begin(), a1.end());
    std::sort(a2.begin(), a2.end());
    CHECK(a1 == a2);
  }
}
