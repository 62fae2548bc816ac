#include "schreier/objects.hpp"

#include <algorithm>
#include <numeric>

#include "schreier/perm.hpp"

namespace schreier {

namespace {

bool jointly_transitive(const std::vector<const Perm*>& perms, Vertex n) {
  if (n == 0) return false;
  std::vector<bool> seen(n, false);
  std::vector<Vertex> stack{0};
  seen[0] = true;
  Vertex count = 1;
  // forward images suffice: the forward-reachable set of a point is stable
  // under every (finite-order) generator, hence a full orbit
  while (!stack.empty()) {
    Vertex v = stack.back();
    stack.pop_back();
    for (const Perm* p : perms) {
      Vertex w = (*p)[v];
      if (!seen[w]) {
        seen[w] = true;
        ++count;
        stack.push_back(w);
      }
    }
  }
  return count == n;
}

LabelledDigraph graph_from_perms(const std::vector<Perm>& perms,
                                 std::vector<Order> orders) {
  const Vertex n = perms.empty() ? 0 : static_cast<Vertex>(perms[0].size());
  LabelledDigraph g(FreeProductSignature(std::move(orders)), n);
  for (Label l = 0; l < perms.size(); ++l)
    for (Vertex v = 0; v < n; ++v) g.set_edge(l, v, perms[l][v]);
  g.set_basepoint(0);
  return g;
}

void require_free(const LabelledDigraph& g, const char* who) {
  auto rep = validate(g);
  if (!rep.is_schreier)
    throw DomainError(std::string(who) + ": input is not a Schreier graph");
  if (!rep.is_free)
    throw DomainError(std::string(who) +
                      ": input has a degenerate cycle (torsion)");
}

}  // namespace

Hypermap to_hypermap(const LabelledDigraph& graph) {
  if (graph.label_count() != 2)
    throw DomainError("to_hypermap: two labels required");
  require_free(graph, "to_hypermap");
  Hypermap h;
  h.darts = graph.vertex_count();
  h.R = *graph.label_perm(0);
  h.L = *graph.label_perm(1);
  h.is_map = perm_is_fpf_involution(h.L);
  return h;
}

Paving to_paving(const LabelledDigraph& graph) {
  if (!graph.signature().is_222())
    throw DomainError("to_paving: a (2,2,2) graph is required");
  require_free(graph, "to_paving");
  Paving p;
  p.darts = graph.vertex_count();
  Perm lp = *graph.label_perm(0);
  Perm s = *graph.label_perm(1);
  Perm t = *graph.label_perm(2);
  p.L = lp;
  p.V = perm_compose(lp, s);
  p.R = perm_compose(t, p.V);
  return p;
}

Constellation to_constellation(const LabelledDigraph& graph) {
  if (graph.label_count() < 2)
    throw DomainError("to_constellation: at least two labels required");
  if (!graph.signature().all_orders_are(kInfiniteOrder))
    throw DomainError("to_constellation: all factors must be infinite");
  auto rep = validate(graph);
  if (!rep.is_schreier)
    throw DomainError("to_constellation: input is not a Schreier graph");

  Constellation c;
  c.darts = graph.vertex_count();
  Perm prod = perm_identity(c.darts);
  for (Label l = 0; l < graph.label_count(); ++l) {
    c.g.push_back(*graph.label_perm(l));
    prod = perm_compose(prod, c.g.back());
  }
  c.g.push_back(perm_inverse(prod));
  return c;
}

bool hypermap_valid(const Hypermap& h) {
  if (h.darts == 0 || h.R.size() != h.darts || h.L.size() != h.darts)
    return false;
  if (!perm_is_valid(h.R) || !perm_is_valid(h.L)) return false;
  if (!jointly_transitive({&h.R, &h.L}, h.darts)) return false;
  if (h.is_map && !perm_is_fpf_involution(h.L)) return false;
  return true;
}

bool paving_valid(const Paving& p) {
  if (p.darts == 0) return false;
  for (const Perm* q : {&p.R, &p.L, &p.V})
    if (q->size() != p.darts || !perm_is_valid(*q)) return false;
  if (!jointly_transitive({&p.R, &p.L, &p.V}, p.darts)) return false;
  Perm lv = perm_compose(p.L, p.V);
  Perm vri = perm_compose(p.V, perm_inverse(p.R));
  return perm_is_fpf_involution(lv) && perm_is_fpf_involution(vri);
}

bool constellation_valid(const Constellation& c) {
  if (c.darts == 0 || c.g.size() < 3) return false;
  Perm prod = perm_identity(c.darts);
  std::vector<const Perm*> ptrs;
  for (const Perm& p : c.g) {
    if (p.size() != c.darts || !perm_is_valid(p)) return false;
    prod = perm_compose(prod, p);
    ptrs.push_back(&p);
  }
  return perm_is_identity(prod) && jointly_transitive(ptrs, c.darts);
}

EulerResult euler_genus(const Hypermap& h) {
  if (!hypermap_valid(h)) throw DomainError("euler_genus: invalid hypermap");
  const long n = static_cast<long>(h.darts);
  auto cycles = [](const Perm& p) {
    return static_cast<long>(cycle_type(p).size());
  };
  EulerResult res;
  res.chi = cycles(h.R) + cycles(h.L) +
            cycles(perm_compose(perm_inverse(h.R), h.L)) - n;
  if (res.chi % 2 == 0 && res.chi <= 2)
    res.genus = static_cast<unsigned>((2 - res.chi) / 2);
  return res;
}

namespace {

PermutationGroup perm_commutant(const std::vector<Perm>& defining) {
  std::vector<Order> orders(defining.size(), kInfiniteOrder);
  return automorphisms(graph_from_perms(defining, std::move(orders)));
}

}  // namespace

PermutationGroup object_automorphisms(const Hypermap& h) {
  return perm_commutant({h.R, h.L});
}

PermutationGroup object_automorphisms(const Paving& p) {
  return perm_commutant({p.R, p.L, p.V});
}

PermutationGroup object_automorphisms(const Constellation& c) {
  std::vector<Perm> defs(c.g.begin(), c.g.end() - 1);  // g_k is determined
  return perm_commutant(defs);
}

std::vector<std::vector<Vertex>> passport(const Constellation& c) {
  std::vector<std::vector<Vertex>> out;
  for (const Perm& p : c.g) {
    auto part = cycle_type(p);
    std::sort(part.rbegin(), part.rend());
    out.push_back(std::move(part));
  }
  return out;
}

LabelledDigraph underlying_graph(const Hypermap& h) {
  return graph_from_perms({h.R, h.L}, {kInfiniteOrder, kInfiniteOrder});
}

LabelledDigraph underlying_graph(const Paving& p) {
  // recover the involutions: L, S = L*V, T = R*(L*S)^-1 = R*V^-1
  Perm s = perm_compose(p.L, p.V);
  Perm t = perm_compose(p.R, perm_inverse(p.V));
  return graph_from_perms({p.L, s, t}, {2, 2, 2});
}

LabelledDigraph underlying_graph(const Constellation& c) {
  std::vector<Perm> defs(c.g.begin(), c.g.end() - 1);
  return graph_from_perms(defs,
                          std::vector<Order>(defs.size(), kInfiniteOrder));
}

}  // namespace schreier
