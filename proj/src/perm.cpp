#include "schreier/perm.hpp"

#include <algorithm>
#include <numeric>

namespace schreier {

Perm perm_identity(Vertex n) {
  Perm p(n);
  std::iota(p.begin(), p.end(), Vertex{0});
  return p;
}

bool perm_is_valid(const Perm& p) {
  std::vector<bool> seen(p.size(), false);
  for (Vertex x : p) {
    if (x >= p.size() || seen[x]) return false;
    seen[x] = true;
  }
  return true;
}

Perm perm_compose(const Perm& a, const Perm& b) {
  Perm r(b.size());
  for (Vertex x = 0; x < b.size(); ++x) r[x] = a[b[x]];
  return r;
}

Perm perm_inverse(const Perm& p) {
  Perm r(p.size());
  for (Vertex x = 0; x < p.size(); ++x) r[p[x]] = x;
  return r;
}

Perm perm_power(const Perm& p, std::uint64_t e) {
  Perm acc = perm_identity(static_cast<Vertex>(p.size()));
  Perm base = p;
  while (e > 0) {
    if (e & 1) acc = perm_compose(base, acc);
    base = perm_compose(base, base);
    e >>= 1;
  }
  return acc;
}

bool perm_is_identity(const Perm& p) {
  for (Vertex x = 0; x < p.size(); ++x)
    if (p[x] != x) return false;
  return true;
}

bool perm_is_fpf_involution(const Perm& p) {
  for (Vertex x = 0; x < p.size(); ++x)
    if (p[x] == x || p[p[x]] != x) return false;
  return true;
}

std::vector<Vertex> cycle_type(const Perm& p) {
  std::vector<Vertex> lengths;
  std::vector<bool> seen(p.size(), false);
  for (Vertex v = 0; v < p.size(); ++v) {
    if (seen[v]) continue;
    Vertex len = 0, u = v;
    while (!seen[u]) {
      seen[u] = true;
      u = p[u];
      ++len;
    }
    lengths.push_back(len);
  }
  std::sort(lengths.begin(), lengths.end());
  return lengths;
}

std::uint64_t perm_order(const Perm& p) {
  std::uint64_t ord = 1;
  for (Vertex len : cycle_type(p)) ord = std::lcm<std::uint64_t>(ord, len);
  return ord;
}

}  // namespace schreier
