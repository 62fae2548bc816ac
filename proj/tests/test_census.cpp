#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <set>

#include "schreier/census.hpp"

using namespace schreier;

TEST_CASE("census base for (3,2) at N = 12") {
  CensusBase base = build_census_base(FreeProductSignature({3, 2}), 12);
  CHECK(base.N == 12);
  CHECK(cycle_multiset(base.graph, 0) == std::vector<Vertex>(4, 3));
  CHECK(is_connected(base.graph));
  CHECK(base.graph.succ(1, 0) == 1);  // the double edge
  CHECK(base.graph.succ(0, 0) == 1);
  CHECK(base.D % 2 == 0);
  CHECK(base.D <= base.F);

  CHECK_THROWS_AS(build_census_base(FreeProductSignature({3, 2}), 10),
                  DomainError);
}

TEST_CASE("free vertex bound F >= N/4 for large N") {
  for (Vertex N : {24u, 48u, 96u}) {
    CensusBase base = build_census_base(FreeProductSignature({3, 2}), N);
    CHECK(base.F * 4 >= N);
  }
  CensusBase b33 = build_census_base(FreeProductSignature({3, 3}), 4 * 9);
  CHECK(b33.F * 4 >= 36);
  CHECK(b33.D % 3 == 0);
}

TEST_CASE("legal orderings extend and count sanely") {
  CensusBase base = build_census_base(FreeProductSignature({3, 2}), 12);
  auto orderings = legal_orderings(base);
  CHECK(base.prefix_len == 0);
  CHECK(orderings.size() == 1);  // the empty prefix, extendably legal

  LabelledDigraph h = extend(base, orderings[0]);
  auto rep = validate(h);
  CHECK(rep.is_free);
  CHECK(rep.index == Vertex{12});
  CHECK(p_vertices(h) == std::vector<Vertex>{0});  // one double edge

  // the limit caps the stream
  CensusBase b18 = build_census_base(FreeProductSignature({3, 2}), 18);
  auto capped = legal_orderings(b18, 3);
  CHECK(capped.size() == 3);
}

TEST_CASE("deduplication matches pairwise isomorphism at small size") {
  CensusBase base = build_census_base(FreeProductSignature({3, 2}), 18);
  auto orderings = legal_orderings(base);
  CHECK(orderings.size() > 1);
  auto classes = canonical_orderings(base, orderings);
  CHECK(std::accumulate(classes.class_sizes.begin(), classes.class_sizes.end(),
                        std::size_t{0}) == orderings.size());

  // block-permuted/rotated orderings give the identical graph; distinct
  // classes give distinct (in fact non-isomorphic) graphs
  std::vector<LabelledDigraph> graphs;
  for (const auto& o : classes.representatives)
    graphs.push_back(extend(base, o));
  for (std::size_t i = 0; i < graphs.size(); ++i)
    for (std::size_t j = i + 1; j < graphs.size(); ++j)
      CHECK_FALSE(isomorphic(graphs[i], graphs[j]));

  // every ordering's graph equals its class representative's graph
  std::size_t checked = 0;
  for (const auto& o : orderings) {
    auto key_graph = extend(base, o);
    bool found = false;
    for (const auto& g : graphs)
      if (g == key_graph) {
        found = true;
        break;
      }
    if (found) ++checked;
  }
  CHECK(checked == orderings.size());
}

TEST_CASE("split census graphs are connected, rootless, pairwise distinct") {
  CensusBase base = build_census_base(FreeProductSignature({3, 2}), 18);
  auto classes = canonical_orderings(base, legal_orderings(base));
  std::vector<LabelledDigraph> splits;
  for (const auto& o : classes.representatives) {
    LabelledDigraph h = extend(base, o);
    LabelledDigraph hs = split_census(base, h);
    CHECK(is_connected(hs));
    CHECK(p_vertices(hs).empty());
    CHECK(hs.danglers().size() == 2);
    splits.push_back(std::move(hs));
  }
  for (std::size_t i = 0; i < splits.size(); ++i)
    for (std::size_t j = i + 1; j < splits.size(); ++j)
      CHECK_FALSE(isomorphic(splits[i], splits[j]));
}

TEST_CASE("the (2,2,2) census by analogy") {
  CensusBase base = build_census_base(FreeProductSignature({2, 2, 2}), 16);
  CHECK(base.F == 14);
  CHECK(is_connected(base.graph));
  auto orderings = legal_orderings(base, 200);
  CHECK(!orderings.empty());
  auto classes = canonical_orderings(base, orderings);
  for (const auto& o : classes.representatives) {
    LabelledDigraph h = extend(base, o);
    CHECK(validate(h).is_free);
    LabelledDigraph hs = split_census(base, h);
    CHECK(is_connected(hs));
    CHECK(p_vertices(hs).empty());
  }
}

TEST_CASE("lower bound formula") {
  Rational b = lower_bound(8, 2);
  CHECK(b.to_string() == "15/8");
  CHECK(b.at_least_one());

  // degenerate small case may be < 1, reported as-is
  Rational small = lower_bound(6, 2);
  CHECK_FALSE(small.at_least_one());
  CHECK(small.to_string() == "1/2");  // 4!/(3!*2^3)

  CHECK(lower_bound(6, 3).to_string() == "4/3");  // 4!/(1*2!*3^2)

  // monotone increasing in D beyond the threshold
  double prev = lower_bound(8, 2).to_double();
  for (unsigned D = 10; D <= 20; D += 2) {
    double cur = lower_bound(D, 2).to_double();
    CHECK(cur > prev);
    prev = cur;
  }

  CHECK_THROWS_AS(lower_bound(9, 2), DomainError);
  CHECK_THROWS_AS(lower_bound(4, 2), DomainError);
}

TEST_CASE("splice keeps one index and the group") {
  FiniteGroup z2 = FiniteGroup::preset("Z2");
  FreeProductSignature sig({3, 2});
  CensusBase base = build_census_base(sig, 12);
  auto classes = canonical_orderings(base, legal_orderings(base));
  REQUIRE(classes.representatives.size() == 1);
  Realization real =
      splice_and_realize(z2, sig, 12, classes.representatives[0]);
  CHECK(real.aut.order() == 2);
  CHECK(real.schreier.vertex_count() ==
        real.certificate.v_gamma + real.certificate.edge_links_used * 12);
  CHECK(real.certificate.all_passed());
}

TEST_CASE("the (2,2,2) splice certifies end to end") {
  FreeProductSignature sig({2, 2, 2});
  CensusBase base = build_census_base(sig, 16);
  auto orderings = legal_orderings(base, 1);
  REQUIRE(!orderings.empty());
  Realization real = splice_and_realize(FiniteGroup::preset("Z2"), sig, 16,
                                        orderings[0]);
  CHECK(real.certificate.all_passed());
  CHECK(real.aut.order() == 2);
  CHECK(real.schreier.vertex_count() ==
        real.certificate.v_gamma + real.certificate.edge_links_used * 16);
}

TEST_CASE("legal ordering count meets the per-ordering bound when q >= 3") {
  // the displayed per-ordering bound (D-2)!/(q-2)! counts prefixes of
  // length D-q, which is the module's prefix length exactly when q >= 3
  CensusBase base = build_census_base(FreeProductSignature({3, 3}), 18);
  REQUIRE(base.prefix_len == base.D - 3);
  auto orderings = legal_orderings(base);
  BigUint bound = BigUint::factorial(base.D - 2);  // (q-2)! = 1 for q = 3
  {
    BigUint q, r;
    BigUint::divmod(bound, BigUint::factorial(base.block - 2), q, r);
    bound = q;
  }
  CHECK(bound <= BigUint(orderings.size()));
}

TEST_CASE("class sizes stay within the orbit bound") {
  CensusBase base = build_census_base(FreeProductSignature({3, 2}), 18);
  auto classes = canonical_orderings(base, legal_orderings(base));
  // prefixes per class cannot exceed the acting group's order
  BigUint orbit = BigUint::factorial(base.D / base.block) *
                  BigUint::power(base.block, base.D / base.block);
  for (std::size_t s : classes.class_sizes) CHECK(BigUint(s) <= orbit);
}
