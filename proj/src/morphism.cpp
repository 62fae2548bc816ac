#include "schreier/morphism.hpp"

#include <algorithm>
#include <deque>

namespace schreier {

namespace {

Vertex anchor_of(const LabelledDigraph& g) {
  return g.basepoint().value_or(Vertex{0});
}

bool is_bijective(const VertexMap& m, Vertex target_n) {
  if (m.size() != target_n) return false;
  std::vector<bool> hit(target_n, false);
  for (Vertex x : m) {
    if (hit[x]) return false;
    hit[x] = true;
  }
  return true;
}

}  // namespace

std::optional<VertexMap> unique_morphism(const LabelledDigraph& a, Vertex va,
                                         const LabelledDigraph& b, Vertex vb) {
  if (va >= a.vertex_count() || vb >= b.vertex_count())
    throw DomainError("unique_morphism: vertex out of range");
  if (a.label_count() != b.label_count())
    throw DomainError("unique_morphism: alphabets differ");

  VertexMap map(a.vertex_count(), kNoVertex);
  map[va] = vb;
  std::deque<Vertex> queue{va};
  while (!queue.empty()) {
    Vertex u = queue.front();
    queue.pop_front();
    for (Label l = 0; l < a.label_count(); ++l) {
      for (bool fwd : {true, false}) {
        Vertex w = fwd ? a.succ(l, u) : a.pred(l, u);
        if (w == kNoVertex) continue;
        Vertex t = fwd ? b.succ(l, map[u]) : b.pred(l, map[u]);
        if (t == kNoVertex) return std::nullopt;  // edge of a has no image
        if (map[w] == kNoVertex) {
          map[w] = t;
          queue.push_back(w);
        } else if (map[w] != t) {
          return std::nullopt;
        }
      }
    }
  }
  for (Vertex x : map)
    if (x == kNoVertex) throw DomainError("unique_morphism: a is not connected");
  return map;
}

std::vector<VertexMap> find_embeddings(const LabelledDigraph& a,
                                       const LabelledDigraph& b) {
  if (a.vertex_count() == 0) throw DomainError("find_embeddings: empty pattern");
  std::vector<VertexMap> out;
  if (a.vertex_count() > b.vertex_count()) return out;
  const Vertex va = anchor_of(a);
  for (Vertex u = 0; u < b.vertex_count(); ++u) {
    auto m = unique_morphism(a, va, b, u);
    if (!m) continue;
    std::vector<bool> hit(b.vertex_count(), false);
    bool injective = true;
    for (Vertex x : *m) {
      if (hit[x]) {
        injective = false;
        break;
      }
      hit[x] = true;
    }
    if (injective) out.push_back(std::move(*m));
  }
  return out;
}

bool PermutationGroup::contains(const Perm& p) const {
  return std::find(elements.begin(), elements.end(), p) != elements.end();
}

PermutationGroup automorphisms(const LabelledDigraph& g) {
  PermutationGroup out;
  out.degree = g.vertex_count();
  if (g.vertex_count() == 0) return out;
  const Vertex va = anchor_of(g);
  for (Vertex u = 0; u < g.vertex_count(); ++u) {
    auto m = unique_morphism(g, va, g, u);
    if (m && is_bijective(*m, g.vertex_count())) out.elements.push_back(*m);
  }
  return out;
}

bool isomorphic(const LabelledDigraph& a, const LabelledDigraph& b) {
  if (a.label_count() != b.label_count()) return false;
  if (a.signature().orders() != b.signature().orders()) return false;
  if (a.vertex_count() != b.vertex_count()) return false;
  if (a.vertex_count() == 0) return true;
  if (a.edge_count() != b.edge_count()) return false;
  const Vertex va = anchor_of(a);
  for (Vertex u = 0; u < b.vertex_count(); ++u) {
    auto m = unique_morphism(a, va, b, u);
    if (m && is_bijective(*m, b.vertex_count())) return true;
  }
  return false;
}

}  // namespace schreier
