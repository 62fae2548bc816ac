#include "schreier/digraph.hpp"

#include <algorithm>
#include <deque>
#include <numeric>

namespace schreier {

LabelledDigraph::LabelledDigraph(FreeProductSignature sig, Vertex vertex_count)
    : sig_(std::move(sig)),
      n_(vertex_count),
      succ_(sig_.size(), std::vector<Vertex>(vertex_count, kNoVertex)),
      pred_(sig_.size(), std::vector<Vertex>(vertex_count, kNoVertex)) {}

void LabelledDigraph::set_edge(Label l, Vertex from, Vertex to) {
  if (l >= label_count() || from >= n_ || to >= n_)
    throw DomainError("set_edge: label or vertex out of range");
  if (succ_[l][from] != kNoVertex || pred_[l][to] != kNoVertex)
    throw GuardError("set_edge would break foldedness");
  succ_[l][from] = to;
  pred_[l][to] = from;
}

void LabelledDigraph::erase_edge_from(Label l, Vertex from) {
  Vertex to = succ_[l][from];
  if (to == kNoVertex) return;
  succ_[l][from] = kNoVertex;
  pred_[l][to] = kNoVertex;
}

std::optional<Perm> LabelledDigraph::label_perm(Label l) const {
  for (Vertex v = 0; v < n_; ++v)
    if (succ_[l][v] == kNoVertex) return std::nullopt;
  return succ_[l];
}

void LabelledDigraph::set_basepoint(std::optional<Vertex> v) {
  if (v && *v >= n_) throw DomainError("basepoint out of range");
  basepoint_ = v;
}

void LabelledDigraph::add_dangler(DanglingVertex d) {
  if (d.vertex >= n_) throw DomainError("dangler vertex out of range");
  danglers_.push_back(d);
}

bool LabelledDigraph::is_dangler(Vertex v) const {
  return std::any_of(danglers_.begin(), danglers_.end(),
                     [v](const DanglingVertex& d) { return d.vertex == v; });
}

std::size_t LabelledDigraph::edge_count() const {
  std::size_t cnt = 0;
  for (Label l = 0; l < label_count(); ++l)
    for (Vertex v = 0; v < n_; ++v)
      if (succ_[l][v] != kNoVertex) ++cnt;
  return cnt;
}

std::optional<Vertex> follow_word(const LabelledDigraph& g, Vertex v,
                                  const Word& word) {
  if (v >= g.vertex_count()) throw DomainError("follow_word: vertex out of range");
  for (const WordStep& s : word) {
    if (s.label >= g.label_count())
      throw DomainError("follow_word: label out of range");
    v = s.forward ? g.succ(s.label, v) : g.pred(s.label, v);
    if (v == kNoVertex) return std::nullopt;
  }
  return v;
}

std::vector<Vertex> components(const LabelledDigraph& g) {
  const Vertex n = g.vertex_count();
  std::vector<Vertex> comp(n, kNoVertex);
  Vertex next_id = 0;
  for (Vertex start = 0; start < n; ++start) {
    if (comp[start] != kNoVertex) continue;
    comp[start] = next_id;
    std::deque<Vertex> q{start};
    while (!q.empty()) {
      Vertex v = q.front();
      q.pop_front();
      for (Label l = 0; l < g.label_count(); ++l) {
        for (Vertex w : {g.succ(l, v), g.pred(l, v)}) {
          if (w != kNoVertex && comp[w] == kNoVertex) {
            comp[w] = next_id;
            q.push_back(w);
          }
        }
      }
    }
    ++next_id;
  }
  return comp;
}

bool is_connected(const LabelledDigraph& g) {
  if (g.vertex_count() == 0) return true;
  auto comp = components(g);
  return std::all_of(comp.begin(), comp.end(),
                     [](Vertex c) { return c == 0; });
}

ValidityReport validate(const LabelledDigraph& g) {
  ValidityReport rep;
  const Vertex n = g.vertex_count();

  rep.is_regular = true;
  for (Label l = 0; l < g.label_count() && rep.is_regular; ++l)
    for (Vertex v = 0; v < n; ++v)
      if (g.succ(l, v) == kNoVertex || g.pred(l, v) == kNoVertex) {
        rep.is_regular = false;
        break;
      }

  rep.is_connected = is_connected(g);

  // Complete cycles only; orbits interrupted by a missing edge are paths and
  // impose no divisibility constraint.
  bool all_divide = true;
  for (Label l = 0; l < g.label_count(); ++l) {
    Order p = g.signature().order(l);
    if (!is_finite(p)) continue;
    std::vector<bool> seen(n, false);
    for (Vertex v = 0; v < n; ++v) {
      if (seen[v] || g.succ(l, v) == kNoVertex) continue;
      Vertex len = 0, u = v;
      bool closed = false;
      while (u != kNoVertex && !seen[u]) {
        seen[u] = true;
        ++len;
        Vertex w = g.succ(l, u);
        if (w == v) {
          closed = true;
          break;
        }
        u = w;
      }
      if (!closed) continue;
      if (p % len != 0) all_divide = false;
      if (len < p && p % len == 0)
        rep.degenerate_cycles.push_back({l, len, v});
    }
  }

  rep.is_schreier = rep.is_regular && rep.is_connected && all_divide;
  rep.is_free = rep.is_schreier && rep.degenerate_cycles.empty();
  if (rep.is_schreier) rep.index = n;
  return rep;
}

LabelledDigraph split_vertex(const LabelledDigraph& g, Vertex v,
                             LabelSet colours) {
  const LabelSet full = full_label_set(g.label_count());
  if (v >= g.vertex_count()) throw DomainError("split_vertex: vertex out of range");
  if (colours == 0 || (colours & ~full) != 0 || colours == full)
    throw DomainError("split_vertex: colours must be a proper non-empty subset");
  if (g.is_dangler(v))
    throw DomainError("split_vertex: vertex is already dangling");

  const Vertex n = g.vertex_count();
  LabelledDigraph out(g.signature(), n + 1);
  for (Label l = 0; l < g.label_count(); ++l) {
    const bool keep = (colours >> l) & 1;
    for (Vertex u = 0; u < n; ++u) {
      Vertex w = g.succ(l, u);
      if (w == kNoVertex) continue;
      Vertex uu = (!keep && u == v) ? n : u;
      Vertex ww = (!keep && w == v) ? n : w;
      out.set_edge(l, uu, ww);
    }
  }
  out.set_basepoint(g.basepoint());
  for (const DanglingVertex& d : g.danglers()) out.add_dangler(d);
  out.add_dangler({v, colours});
  out.add_dangler({n, static_cast<LabelSet>(full & ~colours)});
  return out;
}

LabelledDigraph glue(const LabelledDigraph& g, const DanglingVertex& u,
                     const DanglingVertex& v) {
  const LabelSet full = full_label_set(g.label_count());
  auto find_rec = [&](const DanglingVertex& d) {
    for (const DanglingVertex& r : g.danglers())
      if (r == d) return true;
    return false;
  };
  if (!find_rec(u) || !find_rec(v))
    throw DomainError("glue: not a dangling vertex of this graph");
  if (u.vertex == v.vertex) throw DomainError("glue: cannot glue a vertex to itself");
  if ((u.colours & v.colours) != 0 || (u.colours | v.colours) != full)
    throw DomainError("glue: danglers are not complementary");

  const Vertex keep = std::min(u.vertex, v.vertex);
  const Vertex drop = std::max(u.vertex, v.vertex);
  auto remap = [&](Vertex x) {
    if (x == drop) return keep;
    return x > drop ? x - 1 : x;
  };

  LabelledDigraph out(g.signature(), g.vertex_count() - 1);
  for (Label l = 0; l < g.label_count(); ++l)
    for (Vertex a = 0; a < g.vertex_count(); ++a) {
      Vertex b = g.succ(l, a);
      if (b != kNoVertex) out.set_edge(l, remap(a), remap(b));
    }
  if (g.basepoint()) out.set_basepoint(remap(*g.basepoint()));
  for (const DanglingVertex& d : g.danglers()) {
    if (d == u || d == v) continue;
    out.add_dangler({remap(d.vertex), d.colours});
  }
  return out;
}

}  // namespace schreier
