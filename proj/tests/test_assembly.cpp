#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>

#include "schreier/assembly.hpp"

using namespace schreier;

TEST_CASE("vertex graphs: size, boundary, no P-vertices, S.1") {
  FreeProductSignature pq({3, 2});
  VertexGraph v6 = build_vertex_graph(pq, 6);
  CHECK(v6.graph.danglers().size() == 12);
  CHECK(v6.chi.size() == 6);
  CHECK(p_vertices(v6.graph).empty());
  CHECK(check_S1(v6));

  VertexGraph v1 = build_vertex_graph(pq, 1);
  CHECK(v1.graph.danglers().size() == 2);
  CHECK(p_vertices(v1.graph).empty());
  CHECK(is_connected(v1.graph));

  // a single red p-cycle with two boundary vertices satisfies S.1: cycle
  // rotations move every vertex
  LabelledDigraph cyc(pq, 3);
  for (Vertex v = 0; v < 3; ++v) cyc.set_edge(0, v, (v + 1) % 3);
  VertexGraph fake{cyc, {{0, 1}}};
  CHECK(check_S1(fake));
}

TEST_CASE("edge graphs: chain shape, roots in order, rigid") {
  FreeProductSignature pq({3, 2});
  EdgeGraph e4 = build_edge_graph(pq, 4);
  CHECK(e4.graph.danglers().size() == 2);
  CHECK(e4.roots.size() == 4);
  CHECK(e4.graph.vertex_count() == 4 * 6 + 1);
  CHECK(automorphisms(e4.graph).order() == 1);
  CHECK(p_vertices(e4.graph).size() == 4);

  for (unsigned i : {1u, 2u, 3u}) {
    EdgeGraph e = build_edge_graph(FreeProductSignature({2, 2, 2}), i);
    CHECK(p_vertices(e.graph).size() == i);
    CHECK(automorphisms(e.graph).order() == 1);
  }
}

TEST_CASE("substitution counting for Z2 over (3,2)") {
  FiniteGroup z2 = FiniteGroup::preset("Z2");
  FreeProductSignature sig({3, 2});
  LabelledDigraph cay = cayley_graph(z2);
  VertexGraph v = build_vertex_graph(sig, 1);
  std::vector<EdgeGraph> es;
  es.push_back(build_edge_graph(sig, 1));
  const std::size_t v_size = v.graph.vertex_count();
  const std::size_t e_size = es[0].graph.vertex_count();

  Substitution sub = substitute(cay, std::move(v), std::move(es));
  // shared boundary vertices counted once
  CHECK(sub.graph.vertex_count() == 2 * v_size + 2 * (e_size - 2));
  CHECK(sub.graph.vertex_count() == 24);
  CHECK(sub.edge_links_used == 2);
  CHECK(validate(sub.graph).is_free);
  CHECK(check_S2(sub));

  // exactly the two inserted copies of E_1 embed
  CHECK(find_embeddings(sub.egraphs[0].graph, sub.graph).size() == 2);
}

TEST_CASE("S.2 fails on deliberately swapped edge-graph lengths") {
  FiniteGroup k4 = FiniteGroup::preset("klein4");
  FreeProductSignature sig({3, 2});
  LabelledDigraph cay = cayley_graph(k4);
  VertexGraph v = build_vertex_graph(sig, 2);
  std::vector<EdgeGraph> swapped;
  swapped.push_back(build_edge_graph(sig, 2));  // label 1 gets length 2
  swapped.push_back(build_edge_graph(sig, 1));  // label 2 gets length 1
  Substitution sub = substitute(cay, std::move(v), std::move(swapped));
  CHECK_FALSE(check_S2(sub));
}

TEST_CASE("realize_base certifies the running example") {
  Realization real =
      realize_base(FiniteGroup::preset("S3"), FreeProductSignature({3, 2}));
  CHECK(real.schreier.vertex_count() == 180);
  CHECK(real.aut.order() == 6);
  CHECK(real.certificate.all_passed());
  CHECK(groups_isomorphic(to_finite_group(real.aut), real.group));
  CHECK(real.certificate.edge_links_used == 6 * 3);

  // trivial group over (4,4)
  Realization triv =
      realize_base(FiniteGroup::preset("trivial"), FreeProductSignature({4, 4}));
  CHECK(triv.aut.order() == 1);
  CHECK(validate(triv.schreier).is_free);
}

TEST_CASE("realize_base over (2,2,2)") {
  Realization real = realize_base(FiniteGroup::preset("Q8"),
                                  FreeProductSignature({2, 2, 2}));
  CHECK(real.aut.order() == 8);
  CHECK(validate(real.schreier).is_free);
  CHECK(validate(real.schreier).index == real.schreier.vertex_count());
  CHECK(groups_isomorphic(to_finite_group(real.aut),
                          FiniteGroup::preset("Q8")));
}

TEST_CASE("realize_base rejects non-base signatures") {
  FiniteGroup z2 = FiniteGroup::preset("Z2");
  CHECK_THROWS_AS(realize_base(z2, FreeProductSignature({2, 2})), DomainError);
  CHECK_THROWS_AS(realize_base(z2, FreeProductSignature({2, 3})), DomainError);
  CHECK_THROWS_AS(
      realize_base(z2, FreeProductSignature({kInfiniteOrder, 2})), DomainError);
}

TEST_CASE("assembler rejects illegal identifications") {
  LinkGraph el = edge_link(3, 2);
  GraphAssembler asmr;
  asmr.add_part(el.graph);
  asmr.add_part(el.graph);
  // same colour set on both sides
  CHECK_THROWS_AS(asmr.identify(0, el.v_plus, 1, el.v_plus), DomainError);
  // not a dangler
  CHECK_THROWS_AS(asmr.identify(0, {2, 0b01}, 1, el.v_plus), DomainError);
  asmr.identify(0, el.v_minus, 1, el.v_plus);
  // dangler used twice
  CHECK_THROWS_AS(asmr.identify(0, el.v_minus, 1, el.v_plus), DomainError);
}

TEST_CASE("fast mode skips S.2 but still certifies the rest") {
  Realization real = realize_base(FiniteGroup::preset("Z3"),
                                  FreeProductSignature({3, 2}), true);
  CHECK(real.certificate.fast);
  for (const auto& c : real.certificate.checks) CHECK(c.name != "S2");
  CHECK(real.certificate.all_passed());
}
