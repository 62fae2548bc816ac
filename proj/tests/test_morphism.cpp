#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <random>

#include "schreier/group.hpp"
#include "schreier/links.hpp"
#include "schreier/morphism.hpp"
#include "test_support.hpp"

using namespace schreier;

TEST_CASE("unique_morphism identity and impossibility") {
  LabelledDigraph g = product_graph(3, 2);
  auto id = unique_morphism(g, 0, g, 0);
  REQUIRE(id.has_value());
  for (Vertex v = 0; v < 6; ++v) CHECK((*id)[v] == v);

  // the edge-link root satisfies v.r = v.c; no other vertex does, so no
  // morphism can send the root elsewhere
  LinkGraph el = edge_link(3, 2);
  REQUIRE(el.root == Vertex{3});
  for (Vertex u = 0; u < el.graph.vertex_count(); ++u) {
    if (u == *el.root) continue;
    auto m = unique_morphism(el.graph, *el.root, el.graph, u);
    CHECK_FALSE(m.has_value());
  }
}

TEST_CASE("single edge extends into any regular graph") {
  FreeProductSignature sig({3, 2});
  LabelledDigraph path(sig, 2);
  path.set_edge(0, 0, 1);
  std::mt19937 rng(3);
  auto g = test::random_schreier_graph(rng, sig, 9);
  for (Vertex u = 0; u < 9; ++u)
    CHECK(unique_morphism(path, 0, g, u).has_value());
}

TEST_CASE("find_embeddings counts") {
  LabelledDigraph g32 = product_graph(3, 2);

  // single vertex graph embeds at every vertex
  LabelledDigraph dot(FreeProductSignature({3, 2}), 1);
  CHECK(find_embeddings(dot, g32).size() == 6);

  // vertex counts rule out embeddings the other way
  LabelledDigraph g44 = product_graph(4, 4);
  CHECK(find_embeddings(g44, g32).empty());
}

TEST_CASE("automorphisms of a directed cycle and of Cayley graphs") {
  auto c3 = test::cycle_graph(3);
  CHECK(automorphisms(c3).order() == 3);

  // labelled Cayley graphs admit exactly the translations
  for (const char* name : {"Z5", "S3", "D4", "Q8", "klein4"}) {
    FiniteGroup g = FiniteGroup::preset(name);
    CHECK(automorphisms(cayley_graph(g)).order() == g.order());
  }
}

TEST_CASE("automorphism count divides the vertex count") {
  std::mt19937 rng(17);
  for (int trial = 0; trial < 40; ++trial) {
    FreeProductSignature sig = trial % 2 ? FreeProductSignature({3, 2})
                                         : FreeProductSignature({2, 2, 2});
    Vertex n = 4 + 2 * (rng() % 6);
    auto g = test::random_schreier_graph(rng, sig, n);
    auto aut = automorphisms(g);
    CHECK(n % aut.order() == 0);
  }
}

TEST_CASE("isomorphic is basepoint-free") {
  LabelledDigraph g = product_graph(3, 2);

  std::mt19937 rng(5);
  Perm relabel(6);
  std::iota(relabel.begin(), relabel.end(), Vertex{0});
  std::shuffle(relabel.begin(), relabel.end(), rng);
  LabelledDigraph h(g.signature(), 6);
  for (Label l = 0; l < 2; ++l)
    for (Vertex v = 0; v < 6; ++v)
      h.set_edge(l, relabel[v], relabel[g.succ(l, v)]);
  h.set_basepoint(relabel[4]);
  CHECK(isomorphic(g, h));
  CHECK(isomorphic(h, g));

  CHECK_FALSE(isomorphic(g, product_graph(4, 4)));
  CHECK(isomorphic(g, g));
}

TEST_CASE("isomorphic graphs have equal validity reports") {
  std::mt19937 rng(29);
  FreeProductSignature sig({3, 3});
  for (int trial = 0; trial < 12; ++trial) {
    auto a = test::random_schreier_graph(rng, sig, 9);
    auto b = test::random_schreier_graph(rng, sig, 9);
    if (isomorphic(a, b)) {
      auto ra = validate(a), rb = validate(b);
      CHECK(ra.is_free == rb.is_free);
      CHECK(ra.degenerate_cycles.size() == rb.degenerate_cycles.size());
    }
  }
}

TEST_CASE("a bijective vertex map onto a denser graph is not an isomorphism") {
  FreeProductSignature sig({2, 2});
  LabelledDigraph sparse(sig, 2);
  sparse.set_edge(0, 0, 1);
  sparse.set_edge(0, 1, 0);
  LabelledDigraph dense = sparse;
  dense.set_edge(1, 0, 1);
  dense.set_edge(1, 1, 0);
  CHECK_FALSE(isomorphic(sparse, dense));
  CHECK_FALSE(isomorphic(dense, sparse));
}

TEST_CASE("morphisms can only send the edge-link root to a P-vertex") {
  LinkGraph el = edge_link(3, 2);
  LabelledDigraph g32 = product_graph(3, 2);
  // P-vertices of the full product graph are v00 = 0 and v01 = 3
  for (Vertex u = 0; u < 6; ++u) {
    auto m = unique_morphism(el.graph, *el.root, g32, u);
    if (u == 0 || u == 3)
      CHECK(m.has_value());  // the unsplit projection and its twin
    else
      CHECK_FALSE(m.has_value());
  }
}
