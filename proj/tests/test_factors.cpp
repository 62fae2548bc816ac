#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>

#include "schreier/census.hpp"
#include "schreier/factors.hpp"
#include "schreier/perm.hpp"
#include "test_support.hpp"

using namespace schreier;

namespace {

std::vector<Perm> sorted_aut(const LabelledDigraph& g) {
  auto a = automorphisms(g).elements;
  std::sort(a.begin(), a.end());
  return a;
}

}  // namespace

TEST_CASE("plan_reduction base cases and exclusions") {
  auto p1 = plan_reduction(FreeProductSignature({2, 3, 4}));
  CHECK(p1.base.to_string() == "12,2");

  auto p2 = plan_reduction(FreeProductSignature({2, 2, 2}));
  CHECK(p2.base.to_string() == "2,2,2");
  CHECK(p2.roots.size() == 3);
  for (const auto& r : p2.roots) CHECK(r->is_leaf());

  auto p3 = plan_reduction(FreeProductSignature({kInfiniteOrder, 2}));
  CHECK(p3.base.to_string() == "3,2");

  auto p4 = plan_reduction(FreeProductSignature({2, 2, 2, 2}));
  CHECK(p4.base.to_string() == "2,2,2");

  CHECK_THROWS_AS(plan_reduction(FreeProductSignature({2, 2})), DomainError);
  CHECK_THROWS_AS(plan_reduction(FreeProductSignature({5})), DomainError);
  CHECK_THROWS_AS(plan_reduction(FreeProductSignature({1, 5})), DomainError);
}

TEST_CASE("lift_lcm splits cycles by powers") {
  // one 6-cycle lifted along lcm(2,3) = 6
  LabelledDigraph g(FreeProductSignature({6}), 6);
  for (Vertex v = 0; v < 6; ++v) g.set_edge(0, v, (v + 1) % 6);
  g.set_basepoint(0);

  LabelledDigraph lifted = lift_lcm(g, 0, 2, 3);
  CHECK(lifted.label_count() == 2);
  CHECK(lifted.signature().order(0) == 2);
  CHECK(lifted.signature().order(1) == 3);
  CHECK(cycle_multiset(lifted, 0) == std::vector<Vertex>{2, 2, 2});
  CHECK(cycle_multiset(lifted, 1) == std::vector<Vertex>{3, 3});
  CHECK(validate(lifted).is_free);
  CHECK(lifted.vertex_count() == 6);

  // a = b = m: both labels equal the original permutation
  LabelledDigraph same = lift_lcm(g, 0, 6, 6);
  for (Vertex v = 0; v < 6; ++v) {
    CHECK(same.succ(0, v) == g.succ(0, v));
    CHECK(same.succ(1, v) == g.succ(0, v));
  }

  CHECK_THROWS_AS(lift_lcm(g, 0, 2, 2), DomainError);  // lcm mismatch
}

TEST_CASE("lift_lcm preserves automorphisms exactly") {
  Realization base = realize_base(FiniteGroup::preset("Z3"),
                                  FreeProductSignature({6, 2}));
  auto before = sorted_aut(base.schreier);
  LabelledDigraph lifted = lift_lcm(base.schreier, 0, 2, 3);
  CHECK(sorted_aut(lifted) == before);
  CHECK(validate(lifted).is_free);
}

TEST_CASE("lift_Z keeps the permutation data") {
  Realization base = realize_base(FiniteGroup::preset("Z2"),
                                  FreeProductSignature({3, 2}));
  LabelledDigraph lifted = lift_Z(base.schreier, 0);
  CHECK(lifted.vertex_count() == base.schreier.vertex_count());
  CHECK(!is_finite(lifted.signature().order(0)));
  for (Vertex v = 0; v < lifted.vertex_count(); ++v)
    CHECK(lifted.succ(0, v) == base.schreier.succ(0, v));
  CHECK(sorted_aut(lifted) == sorted_aut(base.schreier));
  CHECK(validate(lifted).is_free);
}

TEST_CASE("realize over lifted signatures certifies and keeps the index") {
  FiniteGroup s3 = FiniteGroup::preset("S3");

  Realization r1 = realize(s3, FreeProductSignature({2, 3, 4}));
  CHECK(r1.signature.to_string() == "2,3,4");
  CHECK(cycle_multiset(r1.schreier, 0) ==
        std::vector<Vertex>(r1.schreier.vertex_count() / 2, 2));
  CHECK(r1.aut.order() == 6);
  CHECK(r1.certificate.all_passed());

  Realization r2 = realize(FiniteGroup::preset("Z2"),
                           FreeProductSignature({kInfiniteOrder, kInfiniteOrder}));
  CHECK(r2.aut.order() == 2);
  CHECK(validate(r2.schreier).is_free);

  CHECK_THROWS_AS(realize(s3, FreeProductSignature({2, 2})), DomainError);
}

TEST_CASE("realize over (2,2,2,2) replays the all-2s merge") {
  Realization r = realize(FiniteGroup::preset("Z2"),
                          FreeProductSignature({2, 2, 2, 2}));
  CHECK(r.signature.size() == 4);
  CHECK(r.schreier.label_count() == 4);
  CHECK(r.aut.order() == 2);
  // the two split labels coincide with each other (a = b = m = 2)
  bool some_equal = false;
  for (Label i = 0; i < 4 && !some_equal; ++i)
    for (Label j = i + 1; j < 4 && !some_equal; ++j) {
      bool eq = true;
      for (Vertex v = 0; v < r.schreier.vertex_count() && eq; ++v)
        eq = r.schreier.succ(i, v) == r.schreier.succ(j, v);
      some_equal = eq;
    }
  CHECK(some_equal);
}

TEST_CASE("index is preserved through every lift") {
  FiniteGroup z3 = FiniteGroup::preset("Z3");
  Realization base = realize_base(z3, FreeProductSignature({12, 2}));
  Realization lifted = realize(z3, FreeProductSignature({2, 3, 4}));
  CHECK(base.schreier.vertex_count() == lifted.schreier.vertex_count());
}

TEST_CASE("non-isomorphic census graphs stay non-isomorphic under lifts") {

  FreeProductSignature sig({3, 2});
  CensusBase base = build_census_base(sig, 18);
  auto classes = canonical_orderings(base, legal_orderings(base));
  REQUIRE(classes.representatives.size() > 2);

  std::vector<LabelledDigraph> originals, z_lifted, lcm_lifted;
  for (const auto& o : classes.representatives) {
    LabelledDigraph h = extend(base, o);
    originals.push_back(h);
    z_lifted.push_back(lift_Z(h, 0));
    lcm_lifted.push_back(lift_lcm(h, 0, 3, 3));
  }
  for (std::size_t i = 0; i < originals.size(); ++i)
    for (std::size_t j = i + 1; j < originals.size(); ++j) {
      CHECK_FALSE(isomorphic(originals[i], originals[j]));
      CHECK_FALSE(isomorphic(z_lifted[i], z_lifted[j]));
      CHECK_FALSE(isomorphic(lcm_lifted[i], lcm_lifted[j]));
    }
}
