#include "schreier/census.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace schreier {

namespace {

constexpr Label kRed = 0;
constexpr Label kGreen = 1;

bool is_222(const CensusBase& base) {
  return base.graph.label_count() == 3;
}

// Does drawing the enumerated-label edge a -> b create a second double pair?
// (p,q): a cyan edge parallel to the red edge a -> b; (2,2,2): a blue edge
// parallel to the green edge {a,b}.
bool edge_illegal(const CensusBase& base, Vertex a, Vertex b) {
  if (is_222(base)) return base.graph.succ(kGreen, a) == b;
  return base.graph.succ(kRed, a) == b;
}

bool block_legal(const CensusBase& base, const std::vector<Vertex>& blk) {
  if (base.block == 2) {
    return !edge_illegal(base, blk[0], blk[1]) &&
           !edge_illegal(base, blk[1], blk[0]);
  }
  for (std::size_t t = 0; t < blk.size(); ++t)
    if (edge_illegal(base, blk[t], blk[(t + 1) % blk.size()])) return false;
  return true;
}

// Lexicographically least legal arrangement of the remaining free vertices
// into complete blocks, or nullopt.
std::optional<std::vector<Vertex>> canonical_completion(
    const CensusBase& base, const std::vector<Vertex>& remaining) {
  std::vector<Vertex> rem = remaining;
  std::sort(rem.begin(), rem.end());
  do {
    bool ok = true;
    for (std::size_t at = 0; at < rem.size() && ok; at += base.block) {
      std::vector<Vertex> blk(rem.begin() + at, rem.begin() + at + base.block);
      ok = block_legal(base, blk);
    }
    if (ok) return rem;
  } while (std::next_permutation(rem.begin(), rem.end()));
  return std::nullopt;
}

std::vector<Vertex> remaining_free(const CensusBase& base,
                                   const std::vector<Vertex>& used) {
  std::vector<Vertex> rem;
  for (Vertex v : base.free_vertices)
    if (std::find(used.begin(), used.end(), v) == used.end())
      rem.push_back(v);
  return rem;
}

void draw_block(LabelledDigraph& g, Label l, const std::vector<Vertex>& blk,
                unsigned block) {
  if (block == 2) {
    g.set_edge(l, blk[0], blk[1]);
    g.set_edge(l, blk[1], blk[0]);
    return;
  }
  for (std::size_t t = 0; t < blk.size(); ++t)
    g.set_edge(l, blk[t], blk[(t + 1) % blk.size()]);
}

// Vertices of the (p,q) base with the double property v.r = v.c, or the
// (2,2,2) pairs with v.b = v.g.
std::vector<Vertex> double_vertices(const LabelledDigraph& g, Label enum_label) {
  std::vector<Vertex> out;
  const Label other = enum_label == 1 ? kRed : kGreen;
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    Vertex a = g.succ(other, v), b = g.succ(enum_label, v);
    if (a != kNoVertex && a == b) out.push_back(v);
  }
  return out;
}

CensusBase build_census_base_pq(const FreeProductSignature& sig, Vertex N) {
  const Order p = sig.order(0), q = sig.order(1);
  if (N == 0 || N % (p * q) != 0)
    throw DomainError("census base needs N a positive multiple of p*q");

  CensusBase base{LabelledDigraph(sig, N), 0, 1, {}, N, 0, 0, q, 1, 0};
  LabelledDigraph& g = base.graph;
  for (Vertex k = 0; k < N / p; ++k)
    for (Vertex j = 0; j < p; ++j)
      g.set_edge(kRed, k * p + j, k * p + (j + 1) % p);

  auto has_cyan = [&](Vertex v) {
    return g.succ(1, v) != kNoVertex || g.pred(1, v) != kNoVertex;
  };

  // the double edge v0 -> v1, closed into a cyan q-cycle
  if (q == 2) {
    g.set_edge(1, 0, 1);
    g.set_edge(1, 1, 0);
  } else {
    g.set_edge(1, 0, 1);
    Vertex cur = 1;
    for (unsigned t = 1; t + 1 < q; ++t) {
      Vertex w = kNoVertex;
      for (Vertex c = 2; c < N; ++c) {
        if (has_cyan(c) || c == cur) continue;
        if (g.succ(kRed, cur) == c) continue;           // no second double
        if (t + 2 == q && g.succ(kRed, c) == 0) continue;  // closing edge
        w = c;
        break;
      }
      if (w == kNoVertex) throw DomainError("census base: closure is stuck");
      g.set_edge(1, cur, w);
      cur = w;
    }
    g.set_edge(1, cur, 0);
  }

  // connect the red cycles: thread a cyan q-cycle through one fresh vertex
  // of each of the first q components (extra fresh vertices fill the cycle
  // when fewer components remain), until connected
  while (true) {
    auto comp = components(g);
    Vertex ncomp = *std::max_element(comp.begin(), comp.end()) + 1;
    if (ncomp == 1) break;

    std::vector<Vertex> cycle;
    auto try_add = [&](Vertex v) {
      if (has_cyan(v)) return false;
      if (std::find(cycle.begin(), cycle.end(), v) != cycle.end()) return false;
      if (!cycle.empty() && g.succ(kRed, cycle.back()) == v) return false;
      if (cycle.size() + 1 == q && g.succ(kRed, v) == cycle.front())
        return false;
      cycle.push_back(v);
      return true;
    };
    const Vertex span = std::min<Vertex>(q, ncomp);
    for (Vertex c = 0; c < ncomp && cycle.size() < span; ++c)
      for (Vertex v = 0; v < N; ++v)
        if (comp[v] == c && try_add(v)) break;
    if (cycle.size() < span)
      throw DomainError("census base: a component has no fresh vertex");
    while (cycle.size() < q) {
      bool added = false;
      for (Vertex v = 0; v < N && !added; ++v) added = try_add(v);
      if (!added)
        throw DomainError("census base: not enough fresh vertices to connect");
    }
    draw_block(g, 1, cycle, q);
  }

  for (Vertex v = 0; v < N; ++v)
    if (!has_cyan(v)) base.free_vertices.push_back(v);
  base.F = static_cast<Vertex>(base.free_vertices.size());
  base.D = base.F - base.F % q;
  if (base.D != base.F)
    throw GuardError("census base: free count is not a multiple of q");
  base.prefix_len =
      q == 2 ? (base.D >= 4 ? base.D - 4 : 0) : (base.D > q ? base.D - q : 0);
  g.set_basepoint(0);

  if (double_vertices(g, 1) != std::vector<Vertex>{0})
    throw GuardError("census base: double edge is not unique");
  return base;
}

CensusBase build_census_base_222(const FreeProductSignature& sig, Vertex N) {
  if (N == 0 || N % 8 != 0)
    throw DomainError("census base (2,2,2) needs N a positive multiple of 8");

  CensusBase base{LabelledDigraph(sig, N), 1, 2, {}, N, 0, 0, 2, 2, 0};
  LabelledDigraph& g = base.graph;
  // red-green alternating N-cycle
  for (Vertex v = 0; v < N; v += 2) {
    g.set_edge(kRed, v, v + 1);
    g.set_edge(kRed, v + 1, v);
    g.set_edge(kGreen, (v + 1) % N, (v + 2) % N);
    g.set_edge(kGreen, (v + 2) % N, (v + 1) % N);
  }
  // one blue edge parallel to the green edge {1,2}
  g.set_edge(2, 1, 2);
  g.set_edge(2, 2, 1);

  for (Vertex v = 0; v < N; ++v)
    if (g.succ(2, v) == kNoVertex) base.free_vertices.push_back(v);
  base.F = static_cast<Vertex>(base.free_vertices.size());
  base.D = base.F;
  base.prefix_len = base.D >= 4 ? base.D - 4 : 0;
  g.set_basepoint(0);

  if (double_vertices(g, 2) != std::vector<Vertex>{1, 2})
    throw GuardError("census base (2,2,2): double pair is not unique");
  return base;
}

}  // namespace

CensusBase build_census_base(const FreeProductSignature& sig, Vertex N) {
  if (sig.is_pq()) return build_census_base_pq(sig, N);
  if (sig.is_222()) return build_census_base_222(sig, N);
  throw DomainError("census supports (p,q) with p >= 3 and (2,2,2) only");
}

void legal_orderings(const CensusBase& base,
                     const std::function<bool(const Ordering&)>& emit) {
  const unsigned q = base.block;
  if (base.D <= q) return;  // no room for an extendable prefix
  if (q == 2 && base.D < 4) return;

  std::vector<Vertex> seq;
  std::set<Vertex> used;
  bool stopped = false;

  auto dfs = [&](auto&& self) -> void {
    if (stopped) return;
    if (seq.size() == base.prefix_len) {
      if (!canonical_completion(base, remaining_free(base, seq)))
        throw GuardError("legal prefix has no legal completion");
      if (!emit(Ordering{seq})) stopped = true;
      return;
    }
    const unsigned bp = static_cast<unsigned>(seq.size()) % q;
    for (Vertex v : base.free_vertices) {
      if (used.count(v)) continue;
      if (bp > 0 && edge_illegal(base, seq.back(), v)) continue;
      if (bp + 1 == q) {
        Vertex start = seq[seq.size() + 1 - q];
        if (edge_illegal(base, v, start)) continue;
      }
      seq.push_back(v);
      used.insert(v);
      self(self);
      used.erase(v);
      seq.pop_back();
      if (stopped) return;
    }
  };
  dfs(dfs);
}

std::vector<Ordering> legal_orderings(const CensusBase& base,
                                      std::optional<std::size_t> limit) {
  std::vector<Ordering> out;
  legal_orderings(base, [&](const Ordering& o) {
    out.push_back(o);
    return !limit || out.size() < *limit;
  });
  return out;
}

LabelledDigraph extend(const CensusBase& base, const Ordering& sigma) {
  const unsigned q = base.block;
  if (sigma.prefix.size() != base.prefix_len)
    throw DomainError("extend: ordering has the wrong length");
  std::set<Vertex> used;
  for (Vertex v : sigma.prefix) {
    if (std::find(base.free_vertices.begin(), base.free_vertices.end(), v) ==
        base.free_vertices.end())
      throw DomainError("extend: ordering contains a non-free vertex");
    if (!used.insert(v).second)
      throw DomainError("extend: ordering repeats a vertex");
  }
  for (std::size_t at = 0; at < sigma.prefix.size(); at += q) {
    std::vector<Vertex> blk(sigma.prefix.begin() + at,
                            sigma.prefix.begin() + at + q);
    if (!block_legal(base, blk)) throw DomainError("extend: illegal ordering");
  }

  auto completion = canonical_completion(base, remaining_free(base, sigma.prefix));
  if (!completion) throw GuardError("extend: no legal completion exists");

  LabelledDigraph h = base.graph;
  for (std::size_t at = 0; at < sigma.prefix.size(); at += q)
    draw_block(h, base.enum_label,
               {sigma.prefix.begin() + at, sigma.prefix.begin() + at + q}, q);
  for (std::size_t at = 0; at < completion->size(); at += q)
    draw_block(h, base.enum_label,
               {completion->begin() + at, completion->begin() + at + q}, q);

  auto rep = validate(h);
  if (!rep.is_free || !rep.is_connected)
    throw GuardError("extend: completion is not a free Schreier graph");
  auto dbl = double_vertices(h, base.enum_label);
  std::vector<Vertex> expected = is_222(base)
                                     ? std::vector<Vertex>{base.double_u,
                                                           base.double_v}
                                     : std::vector<Vertex>{base.double_u};
  if (dbl != expected)
    throw GuardError("extend: double pair is not unique");
  return h;
}

namespace {

std::vector<Vertex> canonical_key(const CensusBase& base,
                                  const Ordering& sigma) {
  auto completion = canonical_completion(base, remaining_free(base, sigma.prefix));
  if (!completion) throw GuardError("ordering without completion");
  std::vector<Vertex> full = sigma.prefix;
  full.insert(full.end(), completion->begin(), completion->end());

  const unsigned q = base.block;
  std::vector<std::vector<Vertex>> blocks;
  for (std::size_t at = 0; at < full.size(); at += q) {
    std::vector<Vertex> blk(full.begin() + at, full.begin() + at + q);
    auto mn = std::min_element(blk.begin(), blk.end());
    std::rotate(blk.begin(), mn, blk.end());
    blocks.push_back(std::move(blk));
  }
  std::sort(blocks.begin(), blocks.end());
  std::vector<Vertex> key;
  for (const auto& blk : blocks) key.insert(key.end(), blk.begin(), blk.end());
  return key;
}

}  // namespace

CensusClasses canonical_orderings(const CensusBase& base,
                                  const std::vector<Ordering>& stream) {
  CensusClasses out;
  std::map<std::vector<Vertex>, std::size_t> index;
  for (const Ordering& o : stream) {
    auto key = canonical_key(base, o);
    auto [it, fresh] = index.emplace(std::move(key), out.representatives.size());
    if (fresh) {
      out.representatives.push_back(o);
      out.class_sizes.push_back(1);
    } else {
      ++out.class_sizes[it->second];
    }
  }
  return out;
}

LabelledDigraph split_census(const CensusBase& base,
                             const LabelledDigraph& h_sigma) {
  LabelledDigraph out =
      split_vertex(h_sigma, base.double_u, LabelSet{1} << base.enum_label);
  if (!is_connected(out)) throw GuardError("split census graph is disconnected");
  if (!p_vertices(out).empty())
    throw GuardError("split census graph retains a P-vertex");
  return out;
}

Realization splice_and_realize(const FiniteGroup& group,
                               const FreeProductSignature& sig, Vertex N,
                               const Ordering& sigma, bool fast) {
  CensusBase base = build_census_base(sig, N);
  LabelledDigraph h = extend(base, sigma);
  LabelledDigraph hs = split_census(base, h);

  LinkGraph elink = edge_link_for(sig);

  // glue H' to the edge-link: H's (X-A)-coloured dangler meets the link's
  // A-coloured one; the two survivors play the combined link's danglers
  const auto& hd = hs.danglers();
  if (hd.size() != 2) throw GuardError("split census graph dangler count");
  const DanglingVertex& h_a = hd[0].colours == elink.v_plus.colours ? hd[0] : hd[1];
  const DanglingVertex& h_b = hd[0].colours == elink.v_plus.colours ? hd[1] : hd[0];
  if (h_a.colours != elink.v_plus.colours)
    throw GuardError("split census danglers do not match the link colours");

  GraphAssembler asmr;
  std::size_t pl = asmr.add_part(elink.graph);
  std::size_t ph = asmr.add_part(hs);
  asmr.identify(ph, h_b, pl, elink.v_plus);
  auto res = asmr.build();

  LinkGraph combined{std::move(res.graph),
                     LinkGraph::Kind::edge_link,
                     {res.part_map[ph][h_a.vertex], h_a.colours},
                     {res.part_map[pl][elink.v_minus.vertex],
                      elink.v_minus.colours},
                     std::nullopt,
                     std::nullopt,
                     res.part_map[pl][*elink.root]};
  auto pv = p_vertices(combined.graph);
  if (pv.size() != 1 || pv[0] != *combined.root)
    throw GuardError("spliced link lost root uniqueness");

  std::vector<std::string> notes{"census: N=" + std::to_string(N) +
                                 " sigma=[" + [&] {
                                   std::string s;
                                   for (Vertex v : sigma.prefix)
                                     s += (s.empty() ? "" : " ") +
                                          std::to_string(v);
                                   return s;
                                 }() + "]"};
  Realization real = realize_with_edge_link(group, sig, combined, fast,
                                            std::move(notes));

  // index formula d = v_Gamma + e_Gamma * N, with e_Gamma the counted
  // edge-link number
  const std::size_t ns = real.substitution->cayley.label_count();
  const std::size_t vl_n = vertex_link_for(sig).graph.vertex_count();
  const std::size_t el_n = elink.graph.vertex_count();
  std::size_t per_vertex = ns * (vl_n - 1);
  std::size_t per_edges = 0;
  for (std::size_t i = 1; i <= ns; ++i)
    per_edges += i * el_n - (i - 1) - 2;
  const std::size_t v_gamma = group.order() * (per_vertex + per_edges);
  const std::size_t e_gamma = real.certificate.edge_links_used;
  if (real.schreier.vertex_count() != v_gamma + e_gamma * N)
    throw GuardError("census index formula violated");
  real.certificate.v_gamma = v_gamma;
  real.certificate.notes.push_back(
      "index = v_gamma + e_gamma*N = " + std::to_string(v_gamma) + " + " +
      std::to_string(e_gamma) + "*" + std::to_string(N));
  return real;
}

Rational lower_bound(unsigned D, unsigned q) {
  if (q < 2) throw DomainError("lower_bound: q >= 2 required");
  if (D % q != 0) throw DomainError("lower_bound: D must be a multiple of q");
  if (D <= q + 2) throw DomainError("lower_bound: D > q + 2 required");
  BigUint num = BigUint::factorial(D - 2);
  BigUint den = BigUint::factorial(q - 2) * BigUint::factorial(D / q) *
                BigUint::power(q, D / q);
  return Rational(std::move(num), std::move(den));
}

}  // namespace schreier
