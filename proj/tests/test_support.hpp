#ifndef SCHREIER_TEST_SUPPORT_HPP
#define SCHREIER_TEST_SUPPORT_HPP

#include <algorithm>
#include <random>
#include <vector>

#include "schreier/digraph.hpp"

namespace schreier::test {

// Random valid Schreier graph: per label, a permutation whose cycle lengths
// divide the factor order (exact lengths with probability `exact`),
// resampled until connected.
inline LabelledDigraph random_schreier_graph(std::mt19937& rng,
                                             const FreeProductSignature& sig,
                                             Vertex n, double exact = 0.7) {
  for (int attempt = 0; attempt < 200; ++attempt) {
    LabelledDigraph g(sig, n);
    for (Label l = 0; l < sig.size(); ++l) {
      std::vector<Vertex> shuffled(n);
      std::iota(shuffled.begin(), shuffled.end(), Vertex{0});
      std::shuffle(shuffled.begin(), shuffled.end(), rng);

      const Order p = sig.order(l);
      std::size_t at = 0;
      while (at < n) {
        const std::size_t left = n - at;
        Vertex len;
        if (!is_finite(p)) {
          len = 1 + rng() % left;
        } else if (std::uniform_real_distribution<>(0, 1)(rng) < exact &&
                   p <= left) {
          len = p;
        } else {
          std::vector<Vertex> divisors;
          for (Vertex d = 1; d <= std::min<std::size_t>(p, left); ++d)
            if (p % d == 0) divisors.push_back(d);
          len = divisors[rng() % divisors.size()];
        }
        for (Vertex t = 0; t < len; ++t)
          g.set_edge(l, shuffled[at + t], shuffled[at + (t + 1) % len]);
        at += len;
      }
    }
    if (is_connected(g)) {
      g.set_basepoint(0);
      return g;
    }
  }
  throw std::runtime_error("random graph generation failed to connect");
}

inline LabelledDigraph cycle_graph(Vertex n) {
  LabelledDigraph g(FreeProductSignature({n}), n);
  for (Vertex v = 0; v < n; ++v) g.set_edge(0, v, (v + 1) % n);
  g.set_basepoint(0);
  return g;
}

}  // namespace schreier::test

#endif
