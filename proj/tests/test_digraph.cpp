#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "schreier/assembly.hpp"
#include "schreier/links.hpp"
#include "schreier/morphism.hpp"
#include "test_support.hpp"

using namespace schreier;

namespace {

Word word_of(std::initializer_list<int> signed_labels) {
  Word w;
  for (int s : signed_labels)
    w.push_back({static_cast<Label>(std::abs(s) - 1), s > 0});
  return w;
}

}  // namespace

TEST_CASE("follow_word on the (3,2) product graph") {
  LabelledDigraph g = product_graph(3, 2);
  // v_{0,1} has index 3; its red successor is v_{1,1} = 4
  CHECK(follow_word(g, 3, word_of({+1})) == Vertex{4});
  CHECK(follow_word(g, 3, {}) == Vertex{3});
  CHECK(follow_word(g, 0, word_of({+1, -1})) == Vertex{0});

  // in the edge-link the cyan half of the split vertex lost its red edges
  LinkGraph el = edge_link(3, 2);
  CHECK(el.v_plus.vertex == 0);
  CHECK_FALSE(follow_word(el.graph, el.v_plus.vertex, word_of({+1})).has_value());
}

TEST_CASE("follow_word respects concatenation") {
  std::mt19937 rng(7);
  FreeProductSignature sig({3, 2});
  for (int trial = 0; trial < 30; ++trial) {
    auto g = test::random_schreier_graph(rng, sig, 12);
    Word w1, w2;
    for (int i = 0; i < 4; ++i) {
      w1.push_back({static_cast<Label>(rng() % 2), rng() % 2 == 0});
      w2.push_back({static_cast<Label>(rng() % 2), rng() % 2 == 0});
    }
    Word cat = w1;
    cat.insert(cat.end(), w2.begin(), w2.end());
    Vertex v = rng() % 12;
    auto mid = follow_word(g, v, w1);
    REQUIRE(mid.has_value());  // regular graph: every step exists
    CHECK(follow_word(g, v, cat) == follow_word(g, *mid, w2));
  }
}

TEST_CASE("validate on the product graph and degenerate inputs") {
  auto rep = validate(product_graph(3, 2));
  CHECK(rep.is_regular);
  CHECK(rep.is_connected);
  CHECK(rep.is_schreier);
  CHECK(rep.is_free);
  CHECK(rep.index == Vertex{6});

  // single vertex with an r-loop over (3,2): 1 divides 3 but 1 != 3
  LabelledDigraph loop(FreeProductSignature({3, 2}), 1);
  loop.set_edge(0, 0, 0);
  loop.set_edge(1, 0, 0);
  auto lrep = validate(loop);
  CHECK(lrep.is_regular);
  REQUIRE(lrep.degenerate_cycles.size() == 2);  // r-loop and c-loop
  CHECK(lrep.degenerate_cycles[0].label == 0);
  CHECK(lrep.degenerate_cycles[0].length == 1);
  CHECK_FALSE(lrep.is_free);
  CHECK(lrep.is_schreier);

  // cycle length not dividing the order: not even a Schreier graph
  LabelledDigraph bad(FreeProductSignature({3}), 2);
  bad.set_edge(0, 0, 1);
  bad.set_edge(0, 1, 0);
  CHECK_FALSE(validate(bad).is_schreier);
}

TEST_CASE("infinite labels are never degenerate") {
  std::mt19937 rng(11);
  FreeProductSignature sig({kInfiniteOrder, kInfiniteOrder});
  for (int trial = 0; trial < 20; ++trial) {
    auto g = test::random_schreier_graph(rng, sig, 10);
    auto rep = validate(g);
    CHECK(rep.is_schreier);
    CHECK(rep.is_free);
  }
}

TEST_CASE("split keeps the chosen colours and glue undoes it") {
  LabelledDigraph g = product_graph(3, 2);
  LabelledDigraph split = split_vertex(g, 0, 0b10);  // keep cyan at index 0
  CHECK(split.vertex_count() == 7);
  REQUIRE(split.danglers().size() == 2);
  DanglingVertex cyan_side = split.danglers()[0];
  DanglingVertex red_side = split.danglers()[1];
  CHECK(cyan_side.vertex == 0);
  CHECK(cyan_side.colours == 0b10);
  CHECK(red_side.vertex == 6);
  CHECK(red_side.colours == 0b01);
  CHECK(split.succ(0, 0) == kNoVertex);  // red edges moved away
  CHECK(split.succ(1, 0) != kNoVertex);  // cyan stayed
  CHECK_FALSE(validate(split).is_regular);

  LabelledDigraph back = glue(split, cyan_side, red_side);
  CHECK(back.vertex_count() == 6);
  CHECK(isomorphic(back, g));

  CHECK_THROWS_AS(split_vertex(g, 0, 0b11), DomainError);
  CHECK_THROWS_AS(split_vertex(g, 0, 0), DomainError);
}

TEST_CASE("glue rejects non-complementary pairs") {
  LabelledDigraph g = product_graph(3, 2);
  auto s1 = split_vertex(g, 0, 0b10);
  auto s2 = split_vertex(s1, 4, 0b10);
  const auto ds = s2.danglers();
  REQUIRE(ds.size() == 4);
  CHECK_THROWS_AS(glue(s2, ds[0], ds[2]), DomainError);  // cyan + cyan
  CHECK_THROWS_AS(glue(s2, ds[0], DanglingVertex{2, 0b01}), DomainError);
  CHECK(glue(s2, ds[0], ds[3]).vertex_count() == 7);  // cyan + red works
}

TEST_CASE("split then glue is the identity up to isomorphism") {
  std::mt19937 rng(23);
  FreeProductSignature sig({4, 2});
  for (int trial = 0; trial < 20; ++trial) {
    auto g = test::random_schreier_graph(rng, sig, 8);
    Vertex v = rng() % 8;
    LabelSet colours = (rng() % 2 == 0) ? 0b01 : 0b10;
    auto s = split_vertex(g, v, colours);
    auto ds = s.danglers();
    auto back = glue(s, ds[0], ds[1]);
    CHECK(isomorphic(back, g));
  }
}

TEST_CASE("glue keeps the smaller index and remaps the rest") {
  // splitting appends, gluing keeps the smaller index: a split at the last
  // vertex then a glue restores a dense, deterministic numbering
  LabelledDigraph g = product_graph(3, 2);
  auto s = split_vertex(g, 5, 0b01);
  CHECK(s.danglers()[0].vertex == 5);
  CHECK(s.danglers()[1].vertex == 6);
  auto back = glue(s, s.danglers()[0], s.danglers()[1]);
  CHECK(back.vertex_count() == 6);
  CHECK(back == g);  // exact equality, not just isomorphism
}

TEST_CASE("freeness means every finite label's cycles have full length") {
  std::mt19937 rng(71);
  FreeProductSignature sig({4, 3});
  int free_seen = 0, torsion_seen = 0;
  for (int trial = 0; trial < 60; ++trial) {
    auto g = test::random_schreier_graph(rng, sig, 12, 0.6);
    bool full = true;
    for (Label l = 0; l < 2; ++l)
      for (Vertex len : cycle_multiset(g, l))
        if (len != g.signature().order(l)) full = false;
    CHECK(validate(g).is_free == full);
    (full ? free_seen : torsion_seen)++;
  }
  CHECK(free_seen > 0);
  CHECK(torsion_seen > 0);
}

TEST_CASE("glue remaps the basepoint of the dropped index") {
  LabelledDigraph g = product_graph(3, 2);
  auto s = split_vertex(g, 2, 0b01);
  LabelledDigraph s2 = s;
  s2.set_basepoint(6);  // the appended half
  auto back = glue(s2, s2.danglers()[0], s2.danglers()[1]);
  CHECK(back.basepoint() == Vertex{2});  // merged into the kept index
}
