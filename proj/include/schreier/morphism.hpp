#ifndef SCHREIER_MORPHISM_HPP
#define SCHREIER_MORPHISM_HPP

#include <optional>
#include <vector>

#include "schreier/digraph.hpp"

namespace schreier {

// Total vertex map a -> b of a label-and-direction preserving morphism.
using VertexMap = std::vector<Vertex>;

// The unique morphism a -> b with va -> vb, if it exists (b is folded by
// the data model, so path-following decides everything). Requires a
// connected.
std::optional<VertexMap> unique_morphism(const LabelledDigraph& a, Vertex va,
                                         const LabelledDigraph& b, Vertex vb);

// All injective morphisms a -> b, found by anchoring a fixed vertex of a
// (the basepoint if present, vertex 0 otherwise) at every vertex of b.
// Complete by foldedness. Requires a connected and non-empty.
std::vector<VertexMap> find_embeddings(const LabelledDigraph& a,
                                       const LabelledDigraph& b);

struct PermutationGroup {
  Vertex degree = 0;
  std::vector<Perm> elements;  // materialized, closed under the group ops

  std::size_t order() const { return elements.size(); }
  bool contains(const Perm& p) const;
};

// All label-preserving automorphisms (basepoint ignored). For a regular
// connected graph this group has order [N(H):H] for the subgroup H of the
// basepoint. Requires g connected; g need not be regular.
PermutationGroup automorphisms(const LabelledDigraph& g);

// Unbased isomorphism: some basepoint choice in b admits a bijective
// morphism from a. Requires both connected.
bool isomorphic(const LabelledDigraph& a, const LabelledDigraph& b);

}  // namespace schreier

#endif
