#ifndef SCHREIER_LINKS_HPP
#define SCHREIER_LINKS_HPP

#include <array>
#include <optional>

#include "schreier/digraph.hpp"

namespace schreier {

// A product graph with one (edge-link) or two (vertex-link) vertices split.
// Links are the building blocks of vertex- and edge-graphs; gluing code
// depends only on the recorded dangler colour sets, never on the +/- names.
struct LinkGraph {
  enum class Kind { edge_link, vertex_link };

  LabelledDigraph graph;
  Kind kind;
  DanglingVertex v_plus, v_minus;
  std::optional<DanglingVertex> u_plus, u_minus;  // vertex-links only
  std::optional<Vertex> root;                     // edge-links only
};

// The graph G_{p,q}: q red p-cycles joined by cyan q-cycles, with the two
// "special" cyan cycles through columns 0 and 1. Vertex (j,i) has index
// i*p + j. Regular, connected, non-degenerate.
LabelledDigraph product_graph(unsigned p, unsigned q);

// Splits vertex (0,0) along {c}; the unique surviving vertex with
// v.r = v.c is the root (0,q-1).
LinkGraph edge_link(unsigned p, unsigned q);

// Additionally splits the root vertex (0,q-1); no P-vertex survives.
LinkGraph vertex_link(unsigned p, unsigned q);

// The 8-vertex (2,2,2) base graph, frozen from an exhaustive search over
// triples of fixed-point-free involutions (see exhaustive_search_222).
LabelledDigraph base_graph_222();

LinkGraph edge_link_222();    // split v7 along {b}; root = v1
LinkGraph vertex_link_222();  // additionally split v0 along {b}

// Signature-dispatched link constructors for (p,q) and (2,2,2).
LinkGraph edge_link_for(const FreeProductSignature& sig);
LinkGraph vertex_link_for(const FreeProductSignature& sig);

// All vertices satisfying the root predicate of the graph's signature:
//   two labels:           v.x0 = v.x1 (both edges present)
//   three order-2 labels: v.rgbgrgr = v and v.b = v.g
// Vertices with a required edge missing fail the predicate.
std::vector<Vertex> p_vertices(const LabelledDigraph& g);

// Re-runs the exhaustive search that fixed base_graph_222: smallest triple
// (r, g, b) of fixed-point-free involutions on 8 points, in lexicographic
// order of concatenated image arrays, subject to the link conditions.
std::array<Perm, 3> exhaustive_search_222();

}  // namespace schreier

#endif
