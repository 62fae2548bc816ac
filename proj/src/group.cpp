#include "schreier/group.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <numeric>

#include "schreier/perm.hpp"

namespace schreier {

namespace {

// BFS closure of permutations under right composition ("apply a, then s").
std::vector<Perm> permutation_closure(const std::vector<Perm>& gens,
                                      Vertex degree, unsigned cap) {
  std::vector<Perm> elems{perm_identity(degree)};
  std::map<Perm, unsigned> index{{elems[0], 0}};
  std::deque<unsigned> queue{0};
  while (!queue.empty()) {
    unsigned e = queue.front();
    queue.pop_front();
    for (const Perm& s : gens) {
      Perm f = perm_compose(s, elems[e]);  // f(x) = s(e(x)): e then s
      if (index.emplace(f, static_cast<unsigned>(elems.size())).second) {
        elems.push_back(f);
        queue.push_back(static_cast<unsigned>(elems.size()) - 1);
        if (elems.size() > cap)
          throw DomainError("permutation closure exceeds cap of " +
                            std::to_string(cap));
      }
    }
  }
  return elems;
}

Perm cycle_perm(Vertex n) {
  Perm p(n);
  for (Vertex i = 0; i < n; ++i) p[i] = (i + 1) % n;
  return p;
}

}  // namespace

FiniteGroup FiniteGroup::from_table(std::vector<std::vector<unsigned>> table,
                                    std::vector<GroupGenerator> generators,
                                    unsigned assoc_cap) {
  const unsigned n = static_cast<unsigned>(table.size());
  if (n == 0) throw DomainError("group table is empty");
  for (const auto& row : table)
    if (row.size() != n) throw DomainError("group table is not square");
  for (const auto& row : table)
    for (unsigned x : row)
      if (x >= n) throw DomainError("group table entry out of range");

  // Latin square
  for (unsigned a = 0; a < n; ++a) {
    std::vector<bool> row(n, false), col(n, false);
    for (unsigned b = 0; b < n; ++b) {
      if (row[table[a][b]] || col[table[b][a]])
        throw DomainError("group table is not a Latin square");
      row[table[a][b]] = col[table[b][a]] = true;
    }
  }

  // identity
  unsigned id = n;
  for (unsigned e = 0; e < n; ++e) {
    bool ok = true;
    for (unsigned a = 0; a < n && ok; ++a)
      ok = table[e][a] == a && table[a][e] == a;
    if (ok) {
      id = e;
      break;
    }
  }
  if (id == n) throw DomainError("group table has no identity");

  if (n <= assoc_cap) {
    for (unsigned a = 0; a < n; ++a)
      for (unsigned b = 0; b < n; ++b)
        for (unsigned c = 0; c < n; ++c)
          if (table[table[a][b]][c] != table[a][table[b][c]])
            throw DomainError("group table is not associative");
  }

  if (generators.empty())
    throw DomainError("generator list must not be empty");
  for (const auto& g : generators)
    if (g.element >= n) throw DomainError("generator index out of range");

  // generators generate
  std::vector<bool> reached(n, false);
  reached[id] = true;
  std::deque<unsigned> queue{id};
  unsigned count = 1;
  while (!queue.empty()) {
    unsigned a = queue.front();
    queue.pop_front();
    for (const auto& g : generators) {
      unsigned b = table[a][g.element];
      if (!reached[b]) {
        reached[b] = true;
        ++count;
        queue.push_back(b);
      }
    }
  }
  if (count != n) throw DomainError("generators do not generate the group");

  FiniteGroup out;
  out.table_ = std::move(table);
  out.identity_ = id;
  out.generators_ = std::move(generators);
  return out;
}

FiniteGroup FiniteGroup::from_permutations(const std::vector<Perm>& gens,
                                           unsigned closure_cap) {
  if (gens.empty()) {
    return from_table({{0}}, {{0, "e"}});
  }
  const Vertex degree = static_cast<Vertex>(gens[0].size());
  for (const Perm& g : gens) {
    if (g.size() != degree)
      throw DomainError("generators act on different sets");
    if (!perm_is_valid(g)) throw DomainError("generator is not a bijection");
  }
  auto elems = permutation_closure(gens, degree, closure_cap);
  std::map<Perm, unsigned> index;
  for (unsigned i = 0; i < elems.size(); ++i) index[elems[i]] = i;

  const unsigned n = static_cast<unsigned>(elems.size());
  std::vector<std::vector<unsigned>> table(n, std::vector<unsigned>(n));
  for (unsigned a = 0; a < n; ++a)
    for (unsigned b = 0; b < n; ++b)
      table[a][b] = index.at(perm_compose(elems[b], elems[a]));  // a then b

  std::vector<GroupGenerator> gg;
  for (std::size_t i = 0; i < gens.size(); ++i)
    gg.push_back({index.at(gens[i]), "g" + std::to_string(i + 1)});
  return from_table(std::move(table), std::move(gg));
}

unsigned FiniteGroup::inverse(unsigned a) const {
  for (unsigned b = 0; b < order(); ++b)
    if (mul(a, b) == identity_) return b;
  throw GuardError("element without inverse");
}

unsigned FiniteGroup::element_order(unsigned a) const {
  unsigned ord = 1, x = a;
  while (x != identity_) {
    x = mul(x, a);
    ++ord;
  }
  return ord;
}

std::vector<unsigned> FiniteGroup::order_profile() const {
  std::vector<unsigned> out(order());
  for (unsigned a = 0; a < order(); ++a) out[a] = element_order(a);
  std::sort(out.begin(), out.end());
  return out;
}

namespace {

FiniteGroup quaternion8() {
  // elements: axis in {1,i,j,k} with sign; index = axis*2 + (sign < 0)
  auto mul = [](unsigned a, unsigned b) -> unsigned {
    unsigned ax = a / 2, bx = b / 2;
    int sign = ((a % 2) ? -1 : 1) * ((b % 2) ? -1 : 1);
    unsigned cx;
    if (ax == 0) {
      cx = bx;
    } else if (bx == 0) {
      cx = ax;
    } else if (ax == bx) {
      cx = 0;
      sign = -sign;
    } else {
      // i*j=k, j*k=i, k*i=j; reversed order flips the sign
      static const unsigned third[4][4] = {{0, 0, 0, 0},
                                           {0, 0, 3, 2},
                                           {0, 3, 0, 1},
                                           {0, 2, 1, 0}};
      cx = third[ax][bx];
      bool cyclic = (ax == 1 && bx == 2) || (ax == 2 && bx == 3) ||
                    (ax == 3 && bx == 1);
      if (!cyclic) sign = -sign;
    }
    return cx * 2 + (sign < 0 ? 1 : 0);
  };
  std::vector<std::vector<unsigned>> table(8, std::vector<unsigned>(8));
  for (unsigned a = 0; a < 8; ++a)
    for (unsigned b = 0; b < 8; ++b) table[a][b] = mul(a, b);
  return FiniteGroup::from_table(std::move(table), {{2, "i"}, {4, "j"}});
}

}  // namespace

FiniteGroup FiniteGroup::preset(const std::string& name) {
  if (name == "trivial") return from_permutations({});
  if (name == "klein4")
    return from_permutations({{1, 0, 3, 2}, {2, 3, 0, 1}});
  if (name == "Q8" || name == "quaternion8") return quaternion8();
  if (name.size() >= 2 &&
      (name[0] == 'Z' || name[0] == 'D' || name[0] == 'S' || name[0] == 'A')) {
    unsigned n = 0;
    try {
      n = static_cast<unsigned>(std::stoul(name.substr(1)));
    } catch (const std::logic_error&) {
      throw DomainError("unknown preset: " + name);
    }
    switch (name[0]) {
      case 'Z': {
        if (n < 1 || n > 4096) throw DomainError("Z<n> needs 1 <= n <= 4096");
        if (n == 1) return from_permutations({});
        return from_permutations({cycle_perm(n)});
      }
      case 'D': {
        if (n < 2 || n > 2048) throw DomainError("D<n> needs 2 <= n <= 2048");
        Perm rot = cycle_perm(n), refl(n);
        for (Vertex i = 0; i < n; ++i) refl[i] = (n - i) % n;
        return from_permutations({rot, refl});
      }
      case 'S': {
        if (n < 2 || n > 5) throw DomainError("S<n> needs 2 <= n <= 5");
        Perm t = perm_identity(n);
        std::swap(t[0], t[1]);
        if (n == 2) return from_permutations({t});
        return from_permutations({t, cycle_perm(n)});
      }
      case 'A': {
        if (n < 3 || n > 5) throw DomainError("A<n> needs 3 <= n <= 5");
        Perm three = perm_identity(n);
        three[0] = 1;
        three[1] = 2;
        three[2] = 0;
        if (n == 3) return from_permutations({three});
        if (n == 4) return from_permutations({three, {1, 0, 3, 2}});
        return from_permutations({three, cycle_perm(5)});
      }
    }
  }
  throw DomainError("unknown preset: " + name);
}

LabelledDigraph cayley_graph(const FiniteGroup& g) {
  const auto& gens = g.generators();
  if (gens.empty()) throw DomainError("cayley_graph needs generators");

  std::vector<Order> orders;
  std::vector<std::string> names;
  for (const auto& gen : gens) {
    orders.push_back(g.element_order(gen.element));
    std::string name = gen.name;
    while (std::find(names.begin(), names.end(), name) != names.end())
      name += "'";
    names.push_back(name);
  }

  LabelledDigraph out(FreeProductSignature(orders, names), g.order());
  for (Label l = 0; l < gens.size(); ++l)
    for (unsigned v = 0; v < g.order(); ++v)
      out.set_edge(l, v, g.mul(v, gens[l].element));
  out.set_basepoint(g.identity());
  return out;
}

namespace {

std::vector<unsigned> generating_set_from_table(
    const std::vector<std::vector<unsigned>>& table, unsigned identity) {
  const unsigned n = static_cast<unsigned>(table.size());
  std::vector<unsigned> gens;
  std::vector<bool> closed(n, false);
  closed[identity] = true;
  unsigned closed_count = 1;
  auto reclose = [&]() {
    bool grew = true;
    while (grew) {
      grew = false;
      for (unsigned a = 0; a < n; ++a) {
        if (!closed[a]) continue;
        for (unsigned b = 0; b < n; ++b) {
          if (!closed[b]) continue;
          unsigned c = table[a][b];
          if (!closed[c]) {
            closed[c] = true;
            ++closed_count;
            grew = true;
          }
        }
      }
    }
  };
  while (closed_count < n) {
    unsigned pick = 0;
    while (closed[pick]) ++pick;
    gens.push_back(pick);
    closed[pick] = true;
    ++closed_count;
    reclose();
  }
  return gens;
}

}  // namespace

std::vector<unsigned> small_generating_set(const FiniteGroup& g) {
  return generating_set_from_table(g.table(), g.identity());
}

bool groups_isomorphic(const FiniteGroup& a, const FiniteGroup& b,
                       unsigned cap) {
  if (a.order() > cap || b.order() > cap)
    throw DomainError("groups_isomorphic: order exceeds cap");
  if (a.order() != b.order()) return false;
  if (a.order_profile() != b.order_profile()) return false;
  const unsigned n = a.order();
  if (n == 1) return true;

  const auto gens = small_generating_set(a);

  // BFS expression of every element of a as parent * generator
  std::vector<std::pair<unsigned, unsigned>> expr(n, {n, n});  // (parent, gen idx)
  std::deque<unsigned> queue{a.identity()};
  std::vector<bool> seen(n, false);
  seen[a.identity()] = true;
  std::vector<unsigned> bfs_order{a.identity()};
  while (!queue.empty()) {
    unsigned x = queue.front();
    queue.pop_front();
    for (unsigned gi = 0; gi < gens.size(); ++gi) {
      unsigned y = a.mul(x, gens[gi]);
      if (!seen[y]) {
        seen[y] = true;
        expr[y] = {x, gi};
        bfs_order.push_back(y);
        queue.push_back(y);
      }
    }
  }

  // candidate images per generator, pruned by element order
  std::vector<std::vector<unsigned>> candidates(gens.size());
  for (unsigned gi = 0; gi < gens.size(); ++gi)
    for (unsigned y = 0; y < n; ++y)
      if (b.element_order(y) == a.element_order(gens[gi]))
        candidates[gi].push_back(y);

  std::vector<unsigned> img_gen(gens.size());
  std::vector<unsigned> img(n);

  auto check = [&]() {
    img[a.identity()] = b.identity();
    for (unsigned idx = 1; idx < bfs_order.size(); ++idx) {
      unsigned y = bfs_order[idx];
      img[y] = b.mul(img[expr[y].first], img_gen[expr[y].second]);
    }
    std::vector<bool> hit(n, false);
    for (unsigned y = 0; y < n; ++y) {
      if (hit[img[y]]) return false;
      hit[img[y]] = true;
    }
    for (unsigned x = 0; x < n; ++x)
      for (unsigned y = 0; y < n; ++y)
        if (img[a.mul(x, y)] != b.mul(img[x], img[y])) return false;
    return true;
  };

  std::vector<unsigned> pos(gens.size(), 0);
  std::size_t gi = 0;
  while (true) {
    if (gi == gens.size()) {
      if (check()) return true;
      --gi;
      ++pos[gi];
    }
    while (pos[gi] >= candidates[gi].size()) {
      pos[gi] = 0;
      if (gi == 0) return false;
      --gi;
      ++pos[gi];
    }
    img_gen[gi] = candidates[gi][pos[gi]];
    ++gi;
  }
}

FiniteGroup to_finite_group(const PermutationGroup& pg) {
  if (pg.elements.empty()) throw DomainError("empty permutation set");
  std::vector<Perm> elems = pg.elements;
  const Perm id = perm_identity(pg.degree);
  std::sort(elems.begin(), elems.end());
  auto it = std::find(elems.begin(), elems.end(), id);
  if (it == elems.end()) throw DomainError("permutation set lacks identity");
  std::rotate(elems.begin(), it, it + 1);  // identity first

  std::map<Perm, unsigned> index;
  for (unsigned i = 0; i < elems.size(); ++i) index[elems[i]] = i;
  const unsigned n = static_cast<unsigned>(elems.size());
  std::vector<std::vector<unsigned>> table(n, std::vector<unsigned>(n));
  for (unsigned x = 0; x < n; ++x)
    for (unsigned y = 0; y < n; ++y) {
      auto found = index.find(perm_compose(elems[y], elems[x]));  // x then y
      if (found == index.end())
        throw DomainError("permutation set is not closed under composition");
      table[x][y] = found->second;
    }

  auto sg = generating_set_from_table(table, 0);
  if (sg.empty()) sg.push_back(0);
  std::vector<GroupGenerator> gens;
  for (std::size_t i = 0; i < sg.size(); ++i)
    gens.push_back({sg[i], "g" + std::to_string(i + 1)});
  return FiniteGroup::from_table(std::move(table), std::move(gens));
}

std::string describe_group(const FiniteGroup& g) {
  const unsigned n = g.order();
  if (n == 1) return "trivial";
  auto profile = g.order_profile();
  const bool cyclic = profile.back() == n;
  if (cyclic) return "Z" + std::to_string(n);
  if (n == 4) return "klein4";
  if (n == 6) return "S3";
  if (n == 8) {
    unsigned involutions =
        static_cast<unsigned>(std::count(profile.begin(), profile.end(), 2u));
    if (involutions == 1) return "Q8";
    if (involutions == 5) return "D4";
    return "Z4xZ2";
  }
  bool abelian = true;
  for (unsigned a = 0; a < n && abelian; ++a)
    for (unsigned b = 0; b < n && abelian; ++b)
      if (g.mul(a, b) != g.mul(b, a)) abelian = false;
  return std::string(abelian ? "abelian" : "group") + std::to_string(n);
}

}  // namespace schreier
