#include "schreier/oracle.hpp"

#include <algorithm>
#include <atomic>
#include <deque>
#include <fstream>
#include <numeric>
#include <set>
#include <thread>

#include "schreier/perm.hpp"

namespace schreier {

namespace {

std::vector<Perm> label_perms(const LabelledDigraph& g) {
  std::vector<Perm> out;
  for (Label l = 0; l < g.label_count(); ++l) {
    auto p = g.label_perm(l);
    if (!p) throw DomainError("graph is not regular");
    out.push_back(std::move(*p));
  }
  return out;
}

bool commutes_with_all(const Perm& phi, const std::vector<Perm>& pis) {
  for (const Perm& pi : pis)
    for (Vertex v = 0; v < phi.size(); ++v)
      if (phi[pi[v]] != pi[phi[v]]) return false;
  return true;
}

}  // namespace

PermutationGroup centralizer_aut(const LabelledDigraph& g,
                                 CentralizerOptions opts) {
  if (!is_connected(g)) throw DomainError("centralizer_aut: graph disconnected");
  const Vertex n = g.vertex_count();
  const auto pis = label_perms(g);

  PermutationGroup out;
  out.degree = n;
  if (n == 0) return out;

  if (opts.factorial) {
    if (n > opts.factorial_cap)
      throw DomainError("centralizer_aut: factorial mode cap exceeded");
    Perm phi = perm_identity(n);
    std::sort(phi.begin(), phi.end());
    do {
      if (commutes_with_all(phi, pis)) out.elements.push_back(phi);
    } while (std::next_permutation(phi.begin(), phi.end()));
    return out;
  }

  std::vector<Perm> inv_pis;
  for (const Perm& pi : pis) inv_pis.push_back(perm_inverse(pi));

  // spanning order: each vertex after the first is a label image or
  // preimage of an earlier one, so assignments propagate
  std::vector<Vertex> order;
  {
    std::vector<bool> seen(n, false);
    std::deque<Vertex> q{0};
    seen[0] = true;
    while (!q.empty()) {
      Vertex v = q.front();
      q.pop_front();
      order.push_back(v);
      for (std::size_t i = 0; i < pis.size(); ++i) {
        for (Vertex w : {pis[i][v], inv_pis[i][v]}) {
          if (!seen[w]) {
            seen[w] = true;
            q.push_back(w);
          }
        }
      }
    }
  }

  Perm img(n, kNoVertex);
  std::vector<bool> used(n, false);
  auto consistent = [&](Vertex v) {
    for (std::size_t i = 0; i < pis.size(); ++i) {
      Vertex w = pis[i][v];
      if (img[w] != kNoVertex && img[w] != pis[i][img[v]]) return false;
      Vertex u = inv_pis[i][v];
      if (img[u] != kNoVertex && pis[i][img[u]] != img[v]) return false;
    }
    return true;
  };
  auto rec = [&](auto&& self, std::size_t depth) -> void {
    if (depth == order.size()) {
      if (commutes_with_all(img, pis)) out.elements.push_back(img);
      return;
    }
    Vertex v = order[depth];
    for (Vertex target = 0; target < n; ++target) {
      if (used[target]) continue;
      img[v] = target;
      used[target] = true;
      if (consistent(v)) self(self, depth + 1);
      used[target] = false;
      img[v] = kNoVertex;
    }
  };
  rec(rec, 0);
  std::sort(out.elements.begin(), out.elements.end());
  return out;
}

namespace {

std::vector<Vertex> bfs_form(const std::vector<Perm>& pis, Vertex n,
                             Vertex start) {
  std::vector<Vertex> newidx(n, kNoVertex);
  std::vector<Vertex> order;
  order.reserve(n);
  newidx[start] = 0;
  order.push_back(start);
  for (std::size_t at = 0; at < order.size(); ++at) {
    Vertex v = order[at];
    for (const Perm& pi : pis) {
      Vertex w = pi[v];
      if (newidx[w] == kNoVertex) {
        newidx[w] = static_cast<Vertex>(order.size());
        order.push_back(w);
      }
    }
  }
  if (order.size() != n) throw DomainError("canonical form: graph disconnected");
  std::vector<Vertex> flat;
  flat.reserve(pis.size() * n);
  for (const Perm& pi : pis)
    for (Vertex newv = 0; newv < n; ++newv)
      flat.push_back(newidx[pi[order[newv]]]);
  return flat;
}

}  // namespace

std::vector<Vertex> canonical_form_based(const LabelledDigraph& g) {
  const auto pis = label_perms(g);
  return bfs_form(pis, g.vertex_count(), g.basepoint().value_or(0));
}

std::vector<Vertex> canonical_form_unbased(const LabelledDigraph& g) {
  const auto pis = label_perms(g);
  std::vector<Vertex> best;
  for (Vertex s = 0; s < g.vertex_count(); ++s) {
    auto form = bfs_form(pis, g.vertex_count(), s);
    if (best.empty() || form < best) best = std::move(form);
  }
  return best;
}

namespace {

// permutations of {0..d-1} whose cycle lengths divide p (all lengths for an
// infinite factor), in lexicographic order
std::vector<Perm> cycle_constrained_perms(Vertex d, Order p) {
  std::vector<Vertex> lengths;
  for (Vertex L = 1; L <= d; ++L)
    if (!is_finite(p) || p % L == 0) lengths.push_back(L);

  std::vector<Perm> out;
  Perm cur(d, kNoVertex);
  std::vector<bool> taken(d, false);
  auto rec = [&](auto&& self, Vertex placed) -> void {
    if (placed == d) {
      out.push_back(cur);
      return;
    }
    Vertex a = 0;
    while (taken[a]) ++a;
    taken[a] = true;
    std::vector<Vertex> cyc{a};
    auto place_rest = [&](auto&& self2, Vertex len) -> void {
      if (cyc.size() == len) {
        for (std::size_t i = 0; i < cyc.size(); ++i)
          cur[cyc[i]] = cyc[(i + 1) % cyc.size()];
        self(self, placed + len);
        for (Vertex v : cyc) cur[v] = kNoVertex;
        return;
      }
      for (Vertex b = 0; b < d; ++b) {
        if (taken[b]) continue;
        taken[b] = true;
        cyc.push_back(b);
        self2(self2, len);
        cyc.pop_back();
        taken[b] = false;
      }
    };
    for (Vertex len : lengths)
      if (len <= d - placed) place_rest(place_rest, len);
    taken[a] = false;
  };
  rec(rec, 0);
  std::sort(out.begin(), out.end());
  return out;
}

struct UF {
  std::vector<Vertex> p;
  explicit UF(Vertex n) : p(n) { std::iota(p.begin(), p.end(), Vertex{0}); }
  Vertex find(Vertex x) {
    while (p[x] != x) {
      p[x] = p[p[x]];
      x = p[x];
    }
    return x;
  }
  bool unite(Vertex a, Vertex b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    p[std::max(a, b)] = std::min(a, b);
    return true;
  }
};

LabelledDigraph graph_of_tuple(const FreeProductSignature& sig,
                               const std::vector<Perm>& tuple, Vertex d) {
  LabelledDigraph g(sig, d);
  for (Label l = 0; l < tuple.size(); ++l)
    for (Vertex v = 0; v < d; ++v) g.set_edge(l, v, tuple[l][v]);
  g.set_basepoint(0);
  return g;
}

LabelledDigraph graph_of_form(const FreeProductSignature& sig,
                              const std::vector<Vertex>& form, Vertex d) {
  LabelledDigraph g(sig, d);
  for (Label l = 0; l < sig.size(); ++l)
    for (Vertex v = 0; v < d; ++v) g.set_edge(l, v, form[l * d + v]);
  g.set_basepoint(0);
  return g;
}

}  // namespace

namespace {

// cache file: one line per unbased canonical form (space-separated),
// preceded by a header line with the based-class count
std::string cache_file_name(const FreeProductSignature& sig, Vertex d) {
  std::string key = sig.to_string();
  std::replace(key.begin(), key.end(), ',', '-');
  return "oracle_" + key + "_d" + std::to_string(d) + ".forms";
}

bool load_forms_cache(const std::string& path, std::size_t columns,
                      std::set<std::vector<Vertex>>& unbased,
                      std::size_t& based_count) {
  std::ifstream in(path);
  if (!in) return false;
  std::string header;
  if (!(in >> header >> based_count) || header != "based") return false;
  std::vector<Vertex> form;
  Vertex x;
  std::size_t at = 0;
  while (in >> x) {
    form.push_back(x);
    if (++at == columns) {
      unbased.insert(form);
      form.clear();
      at = 0;
    }
  }
  return at == 0 && !unbased.empty();
}

void store_forms_cache(const std::string& path,
                       const std::set<std::vector<Vertex>>& unbased,
                       std::size_t based_count) {
  std::ofstream out(path);
  if (!out) return;  // cache is best effort
  out << "based " << based_count << "\n";
  for (const auto& form : unbased) {
    for (std::size_t i = 0; i < form.size(); ++i)
      out << (i ? " " : "") << form[i];
    out << "\n";
  }
}

}  // namespace

SubgroupEnumeration enumerate_subgroups(const FreeProductSignature& sig,
                                        Vertex d, Vertex cap, unsigned jobs,
                                        const std::string& cache_dir) {
  if (d == 0 || d > cap)
    throw DomainError("enumerate_subgroups: index outside the cap");

  const std::string cache_path =
      cache_dir.empty() ? "" : cache_dir + "/" + cache_file_name(sig, d);
  if (!cache_path.empty()) {
    std::set<std::vector<Vertex>> unbased;
    std::size_t based_count = 0;
    if (load_forms_cache(cache_path, sig.size() * d, unbased, based_count)) {
      SubgroupEnumeration out;
      out.based_class_count = based_count;
      for (const auto& form : unbased) {
        LabelledDigraph rep = graph_of_form(sig, form, d);
        auto repv = validate(rep);
        auto aut = centralizer_aut(rep);
        SubgroupClass cls{std::move(rep), d, repv.is_free, aut.order(),
                          to_finite_group(aut), ""};
        cls.aut_name = describe_group(cls.aut_group);
        out.classes.push_back(std::move(cls));
      }
      return out;
    }
  }

  std::vector<std::vector<Perm>> candidates;
  for (Label l = 0; l < sig.size(); ++l)
    candidates.push_back(cycle_constrained_perms(d, sig.order(l)));

  // maximal number of union-find merges one label can still contribute
  std::vector<Vertex> max_merge(sig.size());
  for (Label l = 0; l < sig.size(); ++l) {
    Order p = sig.order(l);
    Vertex longest = 1;
    for (Vertex L = 1; L <= d; ++L)
      if (!is_finite(p) || p % L == 0) longest = L;
    max_merge[l] = d - (d + longest - 1) / longest;
  }

  const unsigned njobs = std::max(1u, jobs);
  std::vector<std::set<std::vector<Vertex>>> unbased_parts(njobs);
  std::vector<std::set<std::vector<Vertex>>> based_parts(njobs);

  auto worker = [&](unsigned job) {
    std::vector<Perm> tuple(sig.size());
    auto rec = [&](auto&& self, Label l, const UF& uf, Vertex comps) -> void {
      if (l == sig.size()) {
        if (comps != 1) return;
        LabelledDigraph g = graph_of_tuple(sig, tuple, d);
        unbased_parts[job].insert(canonical_form_unbased(g));
        based_parts[job].insert(canonical_form_based(g));
        return;
      }
      Vertex still_possible = 0;
      for (Label m = l; m < sig.size(); ++m) still_possible += max_merge[m];
      if (comps - 1 > still_possible) return;  // cannot become transitive

      const auto& cands = candidates[l];
      std::size_t begin = 0, end = cands.size();
      if (l == 0) {  // partition the outer level across jobs
        begin = job * cands.size() / njobs;
        end = (job + 1) * cands.size() / njobs;
      }
      for (std::size_t i = begin; i < end; ++i) {
        tuple[l] = cands[i];
        UF next = uf;
        Vertex c = comps;
        for (Vertex v = 0; v < d; ++v)
          if (next.unite(v, cands[i][v])) --c;
        self(self, l + 1, next, c);
      }
    };
    rec(rec, 0, UF(d), d);
  };

  if (njobs == 1) {
    worker(0);
  } else {
    std::vector<std::thread> threads;
    for (unsigned j = 0; j < njobs; ++j) threads.emplace_back(worker, j);
    for (auto& t : threads) t.join();
  }

  std::set<std::vector<Vertex>> unbased, based;
  for (unsigned j = 0; j < njobs; ++j) {
    unbased.merge(unbased_parts[j]);
    based.merge(based_parts[j]);
  }

  if (!cache_path.empty()) store_forms_cache(cache_path, unbased, based.size());

  SubgroupEnumeration out;
  out.based_class_count = based.size();
  for (const auto& form : unbased) {
    LabelledDigraph rep = graph_of_form(sig, form, d);
    auto repv = validate(rep);
    auto aut = centralizer_aut(rep);
    SubgroupClass cls{std::move(rep), d, repv.is_free, aut.order(),
                      to_finite_group(aut), ""};
    cls.aut_name = describe_group(cls.aut_group);
    out.classes.push_back(std::move(cls));
  }
  return out;
}

std::map<std::string, std::size_t> quotient_histogram(
    const FreeProductSignature& sig, Vertex d, Vertex cap, unsigned jobs,
    const std::string& cache_dir) {
  auto enumd = enumerate_subgroups(sig, d, cap, jobs, cache_dir);
  std::map<std::string, std::size_t> hist;
  std::vector<std::pair<FiniteGroup, std::string>> reps;
  for (const auto& cls : enumd.classes) {
    if (!cls.is_free) continue;
    std::string name;
    for (const auto& [g, n] : reps)
      if (g.order() == cls.aut_group.order() &&
          groups_isomorphic(g, cls.aut_group)) {
        name = n;
        break;
      }
    if (name.empty()) {
      name = cls.aut_name;
      while (hist.count(name)) name += "'";
      reps.emplace_back(cls.aut_group, name);
    }
    ++hist[name];
  }
  return hist;
}

}  // namespace schreier
