#ifndef SCHREIER_OBJECTS_HPP
#define SCHREIER_OBJECTS_HPP

#include <optional>

#include "schreier/digraph.hpp"
#include "schreier/morphism.hpp"

namespace schreier {

// Oriented hypermap: two permutations of the darts with transitive joint
// action. A map is the special case where L is a fixed-point-free
// involution.
struct Hypermap {
  Vertex darts = 0;
  Perm R, L;
  bool is_map = false;
};

// Three-dimensional combinatorial map: LV and VR^-1 are fixed-point-free
// involutions.
struct Paving {
  Vertex darts = 0;
  Perm R, L, V;
};

// k permutations with identity product and transitive joint action.
struct Constellation {
  Vertex darts = 0;
  std::vector<Perm> g;  // g.size() == k >= 3
};

// Darts are the Schreier-graph vertices; R and L are the two label
// permutations. Requires a free two-label Schreier graph.
Hypermap to_hypermap(const LabelledDigraph& graph);

// From a free (2,2,2) Schreier graph with involutions (L,S,T) in label
// order: V = L*S and R = T*L*S (function composition).
Paving to_paving(const LabelledDigraph& graph);

// From an all-infinite Schreier graph with k-1 labels; g_k is the inverse
// of the product of the label permutations.
Constellation to_constellation(const LabelledDigraph& graph);

bool hypermap_valid(const Hypermap& h);
bool paving_valid(const Paving& p);
bool constellation_valid(const Constellation& c);

struct EulerResult {
  long chi = 0;
  std::optional<unsigned> genus;  // set when chi is even and <= 2
};

// chi = c(R) + c(L) + c(R^-1 L) - n (hyper-faces + hyper-edges + vertices
// minus darts); genus = (2 - chi)/2.
EulerResult euler_genus(const Hypermap& h);

PermutationGroup object_automorphisms(const Hypermap& h);
PermutationGroup object_automorphisms(const Paving& p);
PermutationGroup object_automorphisms(const Constellation& c);

// Cycle-type partitions (sorted descending) of each defining permutation;
// the monodromy passport of the branched covering.
std::vector<std::vector<Vertex>> passport(const Constellation& c);

// The Schreier graph a converted object came from, up to declared orders:
// label permutations are the object's defining permutations.
LabelledDigraph underlying_graph(const Hypermap& h);
LabelledDigraph underlying_graph(const Paving& p);
LabelledDigraph underlying_graph(const Constellation& c);

}  // namespace schreier

#endif
