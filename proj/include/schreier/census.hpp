#ifndef SCHREIER_CENSUS_HPP
#define SCHREIER_CENSUS_HPP

#include <functional>
#include <optional>

#include "schreier/assembly.hpp"
#include "schreier/bigint.hpp"

namespace schreier {

// The graph H over N vertices whose free completions the census enumerates.
//
// For (p,q): red p-cycles, one cyan double edge v0 -> v1 closed into a cyan
// q-cycle, and greedy connecting cyan q-cycles; free vertices carry no cyan
// edge. For (2,2,2): a red-green alternating N-cycle with one blue edge
// parallel to a green edge; free vertices carry no blue edge.
struct CensusBase {
  LabelledDigraph graph;
  Vertex double_u = 0, double_v = 0;  // the distinguished parallel pair
  std::vector<Vertex> free_vertices;  // ascending
  Vertex N = 0;
  Vertex F = 0;           // number of free vertices
  Vertex D = 0;           // usable free count (multiple of the block size)
  unsigned block = 0;     // enumerated cycle length: q, or 2 for (2,2,2)
  Label enum_label = 0;   // label whose cycles the orderings draw
  unsigned prefix_len = 0;  // D - q, or D - 4 when the block size is 2
};

// N must be a positive multiple of p*q (of 8 for (2,2,2)).
CensusBase build_census_base(const FreeProductSignature& sig, Vertex N);

// A legal prefix: its consecutive blocks become new cycles of the
// enumerated label, and no step creates a second double edge.
struct Ordering {
  std::vector<Vertex> prefix;

  friend bool operator==(const Ordering& a, const Ordering& b) {
    return a.prefix == b.prefix;
  }
};

// Depth-first enumeration in ascending vertex order; every emitted prefix
// is verified to extend to a full legal ordering. Returns false from the
// callback to stop early.
void legal_orderings(const CensusBase& base,
                     const std::function<bool(const Ordering&)>& emit);

std::vector<Ordering> legal_orderings(
    const CensusBase& base,
    std::optional<std::size_t> limit = std::nullopt);

// H_sigma: the base graph with the prefix's cycles and the canonical legal
// completion of the remaining free vertices drawn in. Regular, connected,
// free, with exactly one double pair.
LabelledDigraph extend(const CensusBase& base, const Ordering& sigma);

// One representative per equivalence class (block permutations + rotations
// within blocks of the full ordering); first-seen representative kept.
struct CensusClasses {
  std::vector<Ordering> representatives;
  std::vector<std::size_t> class_sizes;  // enumerated prefixes per class
};
CensusClasses canonical_orderings(const CensusBase& base,
                                  const std::vector<Ordering>& stream);

// H'_sigma: splits the double-pair vertex, leaving two complementary
// danglers, no double pair, and a connected graph.
LabelledDigraph split_census(const CensusBase& base,
                             const LabelledDigraph& h_sigma);

// Full Theorem-6.1-style pipeline: every edge-link of the base realization
// is replaced by (edge-link + H'_sigma); certifies like realize_base and
// checks the index formula d = v_Gamma + e_Gamma * N exactly.
Realization splice_and_realize(const FiniteGroup& group,
                               const FreeProductSignature& sig, Vertex N,
                               const Ordering& sigma, bool fast = false);

// (1/(q-2)!) * (D-2)! / ((D/q)! * q^(D/q)), exactly.
// Requires q >= 2, D a multiple of q, D > q + 2.
Rational lower_bound(unsigned D, unsigned q);

}  // namespace schreier

#endif
