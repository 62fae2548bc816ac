#include "schreier/assembly.hpp"

#include <algorithm>
#include <chrono>
#include <map>
#include <numeric>
#include <set>

#include "schreier/perm.hpp"

namespace schreier {

namespace {

struct UnionFind {
  std::vector<std::size_t> parent;
  explicit UnionFind(std::size_t n) : parent(n) {
    std::iota(parent.begin(), parent.end(), std::size_t{0});
  }
  std::size_t find(std::size_t x) {
    while (parent[x] != x) {
      parent[x] = parent[parent[x]];
      x = parent[x];
    }
    return x;
  }
  void unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a == b) return;
    if (a > b) std::swap(a, b);
    parent[b] = a;  // keep the smaller representative
  }
};

}  // namespace

std::size_t GraphAssembler::add_part(LabelledDigraph part) {
  if (!parts_.empty() &&
      parts_[0].signature().orders() != part.signature().orders())
    throw DomainError("assembler parts must share one signature");
  parts_.push_back(std::move(part));
  return parts_.size() - 1;
}

void GraphAssembler::identify(std::size_t pa, const DanglingVertex& a,
                              std::size_t pb, const DanglingVertex& b) {
  if (pa >= parts_.size() || pb >= parts_.size())
    throw DomainError("assembler: part index out of range");
  auto has = [](const LabelledDigraph& g, const DanglingVertex& d) {
    const auto& ds = g.danglers();
    return std::find(ds.begin(), ds.end(), d) != ds.end();
  };
  if (!has(parts_[pa], a) || !has(parts_[pb], b))
    throw DomainError("assembler: identification of a non-dangler");
  const LabelSet full = full_label_set(parts_[0].label_count());
  if ((a.colours & b.colours) != 0 || (a.colours | b.colours) != full)
    throw DomainError("assembler: danglers are not complementary");
  for (const Ident& id : idents_) {
    auto used = [&](std::size_t p, const DanglingVertex& d) {
      return (id.pa == p && id.a == d) || (id.pb == p && id.b == d);
    };
    if (used(pa, a) || used(pb, b))
      throw DomainError("assembler: dangler identified twice");
  }
  if (pa == pb && a.vertex == b.vertex)
    throw DomainError("assembler: cannot glue a vertex to itself");
  idents_.push_back({pa, a, pb, b});
}

GraphAssembler::Result GraphAssembler::build() const {
  if (parts_.empty()) throw DomainError("assembler: no parts");
  std::vector<std::size_t> offset(parts_.size());
  std::size_t total = 0;
  for (std::size_t p = 0; p < parts_.size(); ++p) {
    offset[p] = total;
    total += parts_[p].vertex_count();
  }

  UnionFind uf(total);
  for (const Ident& id : idents_)
    uf.unite(offset[id.pa] + id.a.vertex, offset[id.pb] + id.b.vertex);

  // compact classes in order of their smallest global index
  std::vector<Vertex> compact(total, kNoVertex);
  Vertex next = 0;
  for (std::size_t x = 0; x < total; ++x)
    if (uf.find(x) == x) compact[x] = next++;
  auto global_to_new = [&](std::size_t x) { return compact[uf.find(x)]; };

  Result res{LabelledDigraph(parts_[0].signature(), next), {}};
  for (std::size_t p = 0; p < parts_.size(); ++p) {
    const LabelledDigraph& part = parts_[p];
    for (Label l = 0; l < part.label_count(); ++l)
      for (Vertex v = 0; v < part.vertex_count(); ++v) {
        Vertex w = part.succ(l, v);
        if (w == kNoVertex) continue;
        res.graph.set_edge(l, global_to_new(offset[p] + v),
                           global_to_new(offset[p] + w));
      }
  }
  res.part_map.resize(parts_.size());
  for (std::size_t p = 0; p < parts_.size(); ++p) {
    res.part_map[p].resize(parts_[p].vertex_count());
    for (Vertex v = 0; v < parts_[p].vertex_count(); ++v)
      res.part_map[p][v] = global_to_new(offset[p] + v);
  }

  // surviving danglers
  std::set<std::pair<std::size_t, Vertex>> consumed;
  for (const Ident& id : idents_) {
    consumed.insert({id.pa, id.a.vertex});
    consumed.insert({id.pb, id.b.vertex});
  }
  for (std::size_t p = 0; p < parts_.size(); ++p)
    for (const DanglingVertex& d : parts_[p].danglers())
      if (!consumed.count({p, d.vertex}))
        res.graph.add_dangler({res.part_map[p][d.vertex], d.colours});
  return res;
}

VertexGraph build_vertex_graph(const LinkGraph& vlink,
                               std::size_t n_generators) {
  if (vlink.kind != LinkGraph::Kind::vertex_link)
    throw DomainError("build_vertex_graph needs a vertex-link");
  if (n_generators == 0) throw DomainError("build_vertex_graph: |S| >= 1");

  GraphAssembler asmr;
  for (std::size_t i = 0; i < n_generators; ++i) asmr.add_part(vlink.graph);
  for (std::size_t i = 0; i < n_generators; ++i)
    asmr.identify(i, vlink.v_plus, (i + 1) % n_generators, *vlink.u_minus);
  auto res = asmr.build();

  VertexGraph v{std::move(res.graph), {}};
  for (std::size_t i = 0; i < n_generators; ++i)
    v.chi.push_back({res.part_map[i][vlink.u_plus->vertex],
                     res.part_map[i][vlink.v_minus.vertex]});

  if (!is_connected(v.graph)) throw GuardError("vertex-graph is disconnected");
  if (!p_vertices(v.graph).empty())
    throw GuardError("vertex-graph contains a P-vertex");
  if (v.graph.danglers().size() != 2 * n_generators)
    throw GuardError("vertex-graph has the wrong dangler count");
  if (!check_S1(v)) throw GuardError("vertex-graph fails S.1");
  return v;
}

VertexGraph build_vertex_graph(const FreeProductSignature& sig,
                               std::size_t n_generators) {
  return build_vertex_graph(vertex_link_for(sig), n_generators);
}

EdgeGraph build_edge_graph(const LinkGraph& elink, unsigned length) {
  if (elink.kind != LinkGraph::Kind::edge_link)
    throw DomainError("build_edge_graph needs an edge-link");
  if (length == 0) throw DomainError("build_edge_graph: length >= 1");

  GraphAssembler asmr;
  for (unsigned j = 0; j < length; ++j) asmr.add_part(elink.graph);
  for (unsigned j = 0; j + 1 < length; ++j)
    asmr.identify(j, elink.v_minus, j + 1, elink.v_plus);
  auto res = asmr.build();

  EdgeGraph e{std::move(res.graph),
              res.part_map[0][elink.v_plus.vertex],
              res.part_map[length - 1][elink.v_minus.vertex],
              {},
              length};
  for (unsigned j = 0; j < length; ++j)
    e.roots.push_back(res.part_map[j][*elink.root]);

  auto pv = p_vertices(e.graph);
  auto sorted_roots = e.roots;
  std::sort(sorted_roots.begin(), sorted_roots.end());
  if (pv != sorted_roots)
    throw GuardError("edge-graph root count mismatch");
  if (automorphisms(e.graph).order() != 1)
    throw GuardError("edge-graph has a non-trivial automorphism");
  if (e.graph.danglers().size() != 2)
    throw GuardError("edge-graph has the wrong dangler count");
  return e;
}

EdgeGraph build_edge_graph(const FreeProductSignature& sig, unsigned length) {
  return build_edge_graph(edge_link_for(sig), length);
}

Substitution substitute(const LabelledDigraph& cayley, VertexGraph vgraph,
                        std::vector<EdgeGraph> egraphs) {
  const Label ks = cayley.label_count();
  if (egraphs.size() != ks)
    throw DomainError("substitute: one edge-graph per Cayley label required");
  if (vgraph.chi.size() != ks)
    throw DomainError("substitute: vertex-graph boundary does not match labels");
  for (Label l = 0; l < ks; ++l)
    for (Vertex v = 0; v < cayley.vertex_count(); ++v)
      if (cayley.succ(l, v) == kNoVertex)
        throw DomainError("substitute: Cayley graph must be regular");

  GraphAssembler asmr;
  std::vector<std::size_t> vpart(cayley.vertex_count());
  for (Vertex v = 0; v < cayley.vertex_count(); ++v)
    vpart[v] = asmr.add_part(vgraph.graph);

  struct Edge {
    Label label;
    Vertex origin, terminus;
    std::size_t part;
  };
  std::vector<Edge> edges;
  for (Label l = 0; l < ks; ++l)
    for (Vertex u = 0; u < cayley.vertex_count(); ++u)
      edges.push_back({l, u, cayley.succ(l, u), asmr.add_part(egraphs[l].graph)});

  for (const Edge& e : edges) {
    const EdgeGraph& eg = egraphs[e.label];
    const auto h_plus_rec = [&] {
      for (const DanglingVertex& d : eg.graph.danglers())
        if (d.vertex == eg.h_plus) return d;
      throw GuardError("edge-graph lost its h+ dangler");
    }();
    const auto h_minus_rec = [&] {
      for (const DanglingVertex& d : eg.graph.danglers())
        if (d.vertex == eg.h_minus) return d;
      throw GuardError("edge-graph lost its h- dangler");
    }();
    const auto chi = vgraph.chi[e.label];
    auto boundary_rec = [&](Vertex v) {
      for (const DanglingVertex& d : vgraph.graph.danglers())
        if (d.vertex == v) return d;
      throw GuardError("vertex-graph boundary vertex is not dangling");
    };
    asmr.identify(e.part, h_plus_rec, vpart[e.origin], boundary_rec(chi.plus));
    asmr.identify(e.part, h_minus_rec, vpart[e.terminus],
                  boundary_rec(chi.minus));
  }

  auto res = asmr.build();
  if (!res.graph.danglers().empty())
    throw GuardError("substitution left unconsumed danglers");

  Substitution sub{std::move(res.graph), cayley, std::move(vgraph),
                   std::move(egraphs),   {},     {}};
  for (Vertex v = 0; v < cayley.vertex_count(); ++v)
    sub.vertex_copy.push_back(res.part_map[vpart[v]]);
  for (const Edge& e : edges) {
    sub.edge_copies.push_back(
        {e.label, e.origin, e.terminus, res.part_map[e.part]});
    sub.edge_links_used += sub.egraphs[e.label].length;
  }

  // bookkeeping guards: vertex-graph copies are pairwise disjoint, and each
  // copy's boundary is exactly the h± vertices of its adjacent edge-graphs
  std::set<Vertex> seen;
  for (const auto& copy : sub.vertex_copy)
    for (Vertex x : copy)
      if (!seen.insert(x).second)
        throw GuardError("vertex-graph copies are not disjoint");
  for (Vertex v = 0; v < cayley.vertex_count(); ++v) {
    std::set<Vertex> boundary;
    for (Label l = 0; l < ks; ++l) {
      boundary.insert(sub.vertex_copy[v][sub.vgraph.chi[l].plus]);
      boundary.insert(sub.vertex_copy[v][sub.vgraph.chi[l].minus]);
    }
    std::set<Vertex> adjacent;
    for (const auto& ec : sub.edge_copies) {
      if (ec.origin == v) adjacent.insert(ec.map[sub.egraphs[ec.label].h_plus]);
      if (ec.terminus == v)
        adjacent.insert(ec.map[sub.egraphs[ec.label].h_minus]);
    }
    if (boundary != adjacent)
      throw GuardError("vertex-graph boundary does not match edge-graph ends");
  }
  return sub;
}

bool check_S1(const VertexGraph& v) {
  // Foldedness makes an automorphism rigid once one vertex is fixed, so only
  // the identity can fix the (non-empty) boundary pointwise. Checked
  // honestly by enumeration.
  auto auts = automorphisms(v.graph);
  for (const Perm& phi : auts.elements) {
    if (perm_is_identity(phi)) continue;
    bool fixes_boundary = true;
    for (const auto& b : v.chi)
      if (phi[b.plus] != b.plus || phi[b.minus] != b.minus) {
        fixes_boundary = false;
        break;
      }
    if (fixes_boundary) return false;
  }
  return true;
}

bool check_S2(const Substitution& sub) {
  const Label ks = sub.cayley.label_count();
  for (Label li = 0; li < ks; ++li) {
    // rebuild the sub-complex with edge-graphs of labels <= li
    GraphAssembler asmr;
    std::vector<std::size_t> vpart(sub.cayley.vertex_count());
    for (Vertex v = 0; v < sub.cayley.vertex_count(); ++v)
      vpart[v] = asmr.add_part(sub.vgraph.graph);
    std::vector<std::pair<std::size_t, const Substitution::EdgeCopy*>> included;
    for (const auto& ec : sub.edge_copies) {
      if (ec.label > li) continue;
      std::size_t p = asmr.add_part(sub.egraphs[ec.label].graph);
      included.push_back({p, &ec});
    }
    for (const auto& [p, ec] : included) {
      const EdgeGraph& eg = sub.egraphs[ec->label];
      auto rec_of = [&](const LabelledDigraph& g, Vertex v) {
        for (const DanglingVertex& d : g.danglers())
          if (d.vertex == v) return d;
        throw GuardError("check_S2: missing dangler");
      };
      const auto chi = sub.vgraph.chi[ec->label];
      asmr.identify(p, rec_of(eg.graph, eg.h_plus), vpart[ec->origin],
                    rec_of(sub.vgraph.graph, chi.plus));
      asmr.identify(p, rec_of(eg.graph, eg.h_minus), vpart[ec->terminus],
                    rec_of(sub.vgraph.graph, chi.minus));
    }
    auto res = asmr.build();

    // expected embeddings: the inserted copies of E_{li}
    std::vector<VertexMap> expected;
    for (const auto& [p, ec] : included)
      if (ec->label == li) expected.push_back(res.part_map[p]);

    auto found = find_embeddings(sub.egraphs[li].graph, res.graph);
    std::sort(expected.begin(), expected.end());
    std::sort(found.begin(), found.end());
    if (found != expected) return false;
  }
  return true;
}

bool Certificate::all_passed() const {
  return std::all_of(checks.begin(), checks.end(),
                     [](const CertificateCheck& c) { return c.pass; });
}

std::vector<Vertex> cycle_multiset(const LabelledDigraph& g, Label l) {
  std::vector<Vertex> out;
  std::vector<bool> seen(g.vertex_count(), false);
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
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
    if (closed) out.push_back(len);
  }
  std::sort(out.begin(), out.end());
  return out;
}

namespace {

template <class F>
bool run_check(Certificate& cert, const std::string& name, F&& body) {
  auto t0 = std::chrono::steady_clock::now();
  bool pass = body();
  auto t1 = std::chrono::steady_clock::now();
  cert.checks.push_back(
      {name, pass, std::chrono::duration<double, std::milli>(t1 - t0).count()});
  return pass;
}

}  // namespace

Realization realize_with_edge_link(const FiniteGroup& group,
                                   const FreeProductSignature& sig,
                                   const LinkGraph& elink, bool fast,
                                   std::vector<std::string> extra_notes) {
  if (!sig.is_pq() && !sig.is_222())
    throw DomainError("base realization needs (p,q) with p>=3, q>=2, or (2,2,2)");

  LabelledDigraph cayley = cayley_graph(group);
  const std::size_t ns = cayley.label_count();
  VertexGraph vg = build_vertex_graph(vertex_link_for(sig), ns);
  std::vector<EdgeGraph> egs;
  for (unsigned i = 1; i <= ns; ++i) egs.push_back(build_edge_graph(elink, i));

  Substitution sub = substitute(cayley, std::move(vg), std::move(egs));

  Certificate cert;
  cert.fast = fast;
  cert.edge_links_used = sub.edge_links_used;
  cert.v_gamma = sub.graph.vertex_count();
  cert.notes = std::move(extra_notes);

  const std::size_t expected_links = group.order() * ns * (ns + 1) / 2;
  cert.notes.push_back("edge_links_counted=" +
                       std::to_string(sub.edge_links_used) +
                       " printed_formula_value=" +
                       std::to_string(group.order() * ns * (ns - 1) / 2));
  if (sub.edge_links_used != expected_links)
    throw GuardError("edge-link accounting mismatch");

  ValidityReport rep = validate(sub.graph);
  auto fail = [&](const std::string& name) {
    throw GuardError("certification failed: " + name);
  };
  if (!run_check(cert, "regular", [&] { return rep.is_regular; }))
    fail("regular");
  if (!run_check(cert, "connected", [&] { return rep.is_connected; }))
    fail("connected");
  if (!run_check(cert, "free", [&] { return rep.is_free; })) fail("free");
  if (!run_check(cert, "S1", [&] { return check_S1(sub.vgraph); })) fail("S1");
  if (!fast && !run_check(cert, "S2", [&] { return check_S2(sub); }))
    fail("S2");

  if (!run_check(cert, "cycle_accounting", [&] {
        // splitting and gluing never change cycle lengths, so per label the
        // assembled graph's cycles are exactly the union of the parts'
        for (Label l = 0; l < sub.graph.label_count(); ++l) {
          std::vector<Vertex> parts_ms;
          auto append_times = [&](const LabelledDigraph& g, std::size_t k) {
            auto ms = cycle_multiset(g, l);
            for (std::size_t t = 0; t < k; ++t)
              parts_ms.insert(parts_ms.end(), ms.begin(), ms.end());
          };
          append_times(sub.vgraph.graph, sub.vertex_copy.size());
          for (const auto& ec : sub.edge_copies)
            append_times(sub.egraphs[ec.label].graph, 1);
          std::sort(parts_ms.begin(), parts_ms.end());
          if (parts_ms != cycle_multiset(sub.graph, l)) return false;
        }
        return true;
      }))
    fail("cycle_accounting");

  PermutationGroup aut;
  if (!run_check(cert, "aut_order", [&] {
        aut = automorphisms(sub.graph);
        return aut.order() == group.order();
      }))
    fail("aut_order");
  if (!run_check(cert, "aut_iso_group", [&] {
        return groups_isomorphic(to_finite_group(aut), group);
      }))
    fail("aut_iso_group");

  Realization real{sub.graph,
                   group,
                   sub.graph.signature(),
                   std::move(aut),
                   std::move(cert),
                   std::make_shared<const Substitution>(std::move(sub))};
  return real;
}

Realization realize_base(const FiniteGroup& group,
                         const FreeProductSignature& sig, bool fast) {
  return realize_with_edge_link(group, sig, edge_link_for(sig), fast);
}

}  // namespace schreier
