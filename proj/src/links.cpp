#include "schreier/links.hpp"

#include <algorithm>

namespace schreier {

namespace {

constexpr Label kRed = 0;
constexpr Label kCyan = 1;  // split colour for (p,q) links
constexpr Label kGreen = 1;
constexpr Label kBlue = 2;  // split colour for (2,2,2) links

// Frozen by exhaustive_search_222(); regression-tested against it.
constexpr std::array<Vertex, 8> k222Red = {2, 3, 0, 1, 5, 4, 7, 6};
constexpr std::array<Vertex, 8> k222Green = {1, 0, 4, 5, 2, 3, 7, 6};
constexpr std::array<Vertex, 8> k222Blue = {1, 0, 5, 6, 7, 2, 3, 4};

Word word_222() {
  // r g b g r g r
  return {{kRed, true},  {kGreen, true}, {kBlue, true}, {kGreen, true},
          {kRed, true},  {kGreen, true}, {kRed, true}};
}

std::vector<Vertex> p_vertices_pq(const LabelledDigraph& g) {
  std::vector<Vertex> out;
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    Vertex a = g.succ(0, v), b = g.succ(1, v);
    if (a != kNoVertex && a == b) out.push_back(v);
  }
  return out;
}

std::vector<Vertex> p_vertices_222(const LabelledDigraph& g) {
  const Word loop = word_222();
  std::vector<Vertex> out;
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    Vertex b = g.succ(kBlue, v), gr = g.succ(kGreen, v);
    if (b == kNoVertex || b != gr) continue;
    if (follow_word(g, v, loop) == std::optional<Vertex>(v)) out.push_back(v);
  }
  return out;
}

void check_link(const LinkGraph& link) {
  if (!is_connected(link.graph)) throw GuardError("link graph is disconnected");
  auto pv = p_vertices(link.graph);
  if (link.kind == LinkGraph::Kind::edge_link) {
    if (pv.size() != 1 || pv[0] != *link.root)
      throw GuardError("edge-link root is not unique");
  } else {
    if (!pv.empty()) throw GuardError("vertex-link has a P-vertex");
  }
  if (!validate(link.graph).degenerate_cycles.empty())
    throw GuardError("link graph has a degenerate cycle");
}

}  // namespace

LabelledDigraph product_graph(unsigned p, unsigned q) {
  if (p < 3) throw DomainError("product_graph needs p >= 3");
  if (q < 2) throw DomainError("product_graph needs q >= 2");
  FreeProductSignature sig({p, q});
  LabelledDigraph g(sig, p * q);
  auto at = [p](unsigned j, unsigned i) { return i * p + j; };

  for (unsigned i = 0; i < q; ++i)
    for (unsigned j = 0; j < p; ++j)
      g.set_edge(kRed, at(j, i), at((j + 1) % p, i));

  // special cyan cycles through columns 0 and 1
  std::vector<Vertex> cyc1{at(0, 0)};
  for (unsigned i = 0; i + 1 < q; ++i) cyc1.push_back(at(1, i));
  std::vector<Vertex> cyc2;
  for (unsigned i = 1; i < q; ++i) cyc2.push_back(at(0, i));
  cyc2.push_back(at(1, q - 1));
  for (const auto& cyc : {cyc1, cyc2})
    for (std::size_t t = 0; t < cyc.size(); ++t)
      g.set_edge(kCyan, cyc[t], cyc[(t + 1) % cyc.size()]);

  for (unsigned j = 2; j < p; ++j)
    for (unsigned i = 0; i < q; ++i)
      g.set_edge(kCyan, at(j, i), at(j, (i + 1) % q));

  g.set_basepoint(0);
  return g;
}

LinkGraph edge_link(unsigned p, unsigned q) {
  LabelledDigraph g = product_graph(p, q);
  LabelledDigraph el = split_vertex(g, 0, LabelSet{1} << kCyan);
  LinkGraph link{std::move(el),
                 LinkGraph::Kind::edge_link,
                 {0, LabelSet{1} << kCyan},          // v+ carries cyan
                 {p * q, LabelSet{1} << kRed},       // v- carries red
                 std::nullopt,
                 std::nullopt,
                 (q - 1) * p};
  check_link(link);
  return link;
}

LinkGraph vertex_link(unsigned p, unsigned q) {
  LinkGraph el = edge_link(p, q);
  LabelledDigraph vl = split_vertex(el.graph, (q - 1) * p, LabelSet{1} << kCyan);
  // +/- assignments swap between edge- and vertex-links: here u+ and v+
  // carry red, u- and v- carry cyan.
  LinkGraph link{std::move(vl),
                 LinkGraph::Kind::vertex_link,
                 {p * q, LabelSet{1} << kRed},            // v+
                 {0, LabelSet{1} << kCyan},               // v-
                 DanglingVertex{p * q + 1, LabelSet{1} << kRed},      // u+
                 DanglingVertex{(q - 1) * p, LabelSet{1} << kCyan},   // u-
                 std::nullopt};
  check_link(link);
  return link;
}

LabelledDigraph base_graph_222() {
  LabelledDigraph g(FreeProductSignature({2, 2, 2}), 8);
  for (Vertex v = 0; v < 8; ++v) {
    if (g.succ(kRed, v) == kNoVertex) g.set_edge(kRed, v, k222Red[v]);
    if (g.succ(kGreen, v) == kNoVertex) g.set_edge(kGreen, v, k222Green[v]);
    if (g.succ(kBlue, v) == kNoVertex) g.set_edge(kBlue, v, k222Blue[v]);
  }
  g.set_basepoint(0);
  return g;
}

LinkGraph edge_link_222() {
  LabelledDigraph g = base_graph_222();
  LabelledDigraph el = split_vertex(g, 7, LabelSet{1} << kBlue);
  LinkGraph link{std::move(el),
                 LinkGraph::Kind::edge_link,
                 {7, LabelSet{1} << kBlue},
                 {8, (LabelSet{1} << kRed) | (LabelSet{1} << kGreen)},
                 std::nullopt,
                 std::nullopt,
                 Vertex{1}};
  check_link(link);
  return link;
}

LinkGraph vertex_link_222() {
  LinkGraph el = edge_link_222();
  LabelledDigraph vl = split_vertex(el.graph, 0, LabelSet{1} << kBlue);
  const LabelSet rg = (LabelSet{1} << kRed) | (LabelSet{1} << kGreen);
  LinkGraph link{std::move(vl),
                 LinkGraph::Kind::vertex_link,
                 {8, rg},                            // v+
                 {7, LabelSet{1} << kBlue},          // v-
                 DanglingVertex{9, rg},              // u+
                 DanglingVertex{0, LabelSet{1} << kBlue},  // u-
                 std::nullopt};
  check_link(link);
  return link;
}

LinkGraph edge_link_for(const FreeProductSignature& sig) {
  if (sig.is_pq()) return edge_link(sig.order(0), sig.order(1));
  if (sig.is_222()) return edge_link_222();
  throw DomainError("no link construction for signature " + sig.to_string());
}

LinkGraph vertex_link_for(const FreeProductSignature& sig) {
  if (sig.is_pq()) return vertex_link(sig.order(0), sig.order(1));
  if (sig.is_222()) return vertex_link_222();
  throw DomainError("no link construction for signature " + sig.to_string());
}

std::vector<Vertex> p_vertices(const LabelledDigraph& g) {
  if (g.label_count() == 2) return p_vertices_pq(g);
  if (g.label_count() == 3 && g.signature().all_orders_are(2))
    return p_vertices_222(g);
  throw DomainError("p_vertices: unsupported signature " +
                    g.signature().to_string());
}

std::array<Perm, 3> exhaustive_search_222() {
  // fixed-point-free involutions on 8 points, lexicographic order
  std::vector<Perm> invs;
  {
    Perm cur(8, kNoVertex);
    auto rec = [&](auto&& self, unsigned placed) -> void {
      if (placed == 8) {
        invs.push_back(cur);
        return;
      }
      Vertex a = 0;
      while (cur[a] != kNoVertex) ++a;
      for (Vertex b = a + 1; b < 8; ++b) {
        if (cur[b] != kNoVertex) continue;
        cur[a] = b;
        cur[b] = a;
        self(self, placed + 2);
        cur[a] = cur[b] = kNoVertex;
      }
    };
    rec(rec, 0);
    std::sort(invs.begin(), invs.end());
  }

  const Word loop = word_222();
  for (const Perm& r : invs) {
    for (const Perm& gr : invs) {
      for (const Perm& b : invs) {
        // bg set of the split graph, cheap form: b and g edges agree away
        // from the split vertex 7 (whose green edge moves to the new index)
        // (the split vertex 7 and its new half 8 never satisfy b = g)
        bool ok = true;
        for (Vertex v = 0; v < 7 && ok; ++v) {
          bool in_set = b[v] == gr[v] && b[v] != 7;
          if (in_set != (v <= 1)) ok = false;
        }
        if (!ok) continue;

        LabelledDigraph g(FreeProductSignature({2, 2, 2}), 8);
        for (Vertex v = 0; v < 8; ++v) {
          if (g.succ(kRed, v) == kNoVertex) g.set_edge(kRed, v, r[v]);
          if (g.succ(kGreen, v) == kNoVertex) g.set_edge(kGreen, v, gr[v]);
          if (g.succ(kBlue, v) == kNoVertex) g.set_edge(kBlue, v, b[v]);
        }
        if (!is_connected(g)) continue;
        LabelledDigraph el = split_vertex(g, 7, LabelSet{1} << kBlue);
        if (follow_word(el, 1, loop) != std::optional<Vertex>(1)) continue;
        if (follow_word(el, 0, loop) == std::optional<Vertex>(0)) continue;
        LabelledDigraph vl = split_vertex(el, 0, LabelSet{1} << kBlue);
        if (!p_vertices_222(vl).empty()) continue;
        if (!is_connected(el) || !is_connected(vl)) continue;
        return {r, gr, b};
      }
    }
  }
  throw GuardError("exhaustive search found no (2,2,2) base graph");
}

}  // namespace schreier
