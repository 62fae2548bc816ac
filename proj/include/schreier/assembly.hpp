#ifndef SCHREIER_ASSEMBLY_HPP
#define SCHREIER_ASSEMBLY_HPP

#include <memory>
#include <string>
#include <vector>

#include "schreier/group.hpp"
#include "schreier/links.hpp"
#include "schreier/morphism.hpp"

namespace schreier {

// Disjoint union of graph parts with identifications of complementary
// danglers, compacted to dense vertex indices. Classes are numbered by
// their smallest member, so results are deterministic.
class GraphAssembler {
 public:
  std::size_t add_part(LabelledDigraph part);

  // Identifies dangler a of part pa with dangler b of part pb. The records
  // must exist, be complementary, and may be consumed at most once.
  void identify(std::size_t pa, const DanglingVertex& a, std::size_t pb,
                const DanglingVertex& b);

  struct Result {
    LabelledDigraph graph;
    std::vector<std::vector<Vertex>> part_map;  // [part][part vertex] -> vertex
  };
  Result build() const;

 private:
  struct Ident {
    std::size_t pa;
    DanglingVertex a;
    std::size_t pb;
    DanglingVertex b;
  };
  std::vector<LabelledDigraph> parts_;
  std::vector<Ident> idents_;
};

// |S| vertex-links glued into a cycle, with the boundary injection chi.
struct VertexGraph {
  struct Boundary {
    Vertex plus, minus;
  };
  LabelledDigraph graph;
  std::vector<Boundary> chi;  // per generator label
};

// Chain of `length` edge-links; h_plus/h_minus are the surviving danglers
// of the first and last link, roots are the P-vertices in chain order.
struct EdgeGraph {
  LabelledDigraph graph;
  Vertex h_plus, h_minus;
  std::vector<Vertex> roots;
  unsigned length = 0;
};

VertexGraph build_vertex_graph(const LinkGraph& vlink, std::size_t n_generators);
VertexGraph build_vertex_graph(const FreeProductSignature& sig,
                               std::size_t n_generators);
EdgeGraph build_edge_graph(const LinkGraph& elink, unsigned length);
EdgeGraph build_edge_graph(const FreeProductSignature& sig, unsigned length);

// Cayley graph with every vertex replaced by a copy of V and every edge
// (label s, origin u, terminus w) by a copy of E_s spliced between the
// boundary vertices chi(s,+) of V_u and chi(s,-) of V_w.
struct Substitution {
  LabelledDigraph graph;  // C*
  LabelledDigraph cayley;
  VertexGraph vgraph;
  std::vector<EdgeGraph> egraphs;  // per label

  std::vector<std::vector<Vertex>> vertex_copy;  // per Cayley vertex
  struct EdgeCopy {
    Label label;
    Vertex origin, terminus;
    std::vector<Vertex> map;
  };
  std::vector<EdgeCopy> edge_copies;

  std::size_t edge_links_used = 0;
};

Substitution substitute(const LabelledDigraph& cayley, VertexGraph vgraph,
                        std::vector<EdgeGraph> egraphs);

// S.1: the only automorphism of V fixing the boundary pointwise is the
// identity.
bool check_S1(const VertexGraph& v);

// S.2: for each label s_i, the sub-complex of vertex-graphs plus
// edge-graphs of labels <= s_i contains no copy of E_{s_i} beyond the
// inserted ones.
bool check_S2(const Substitution& sub);

struct CertificateCheck {
  std::string name;
  bool pass = false;
  double ms = 0.0;
};

struct Certificate {
  std::vector<CertificateCheck> checks;
  bool fast = false;  // S.2 skipped
  std::size_t edge_links_used = 0;
  std::size_t v_gamma = 0;  // vertex count before any census splice
  std::vector<std::string> notes;

  bool all_passed() const;
};

struct Realization {
  LabelledDigraph schreier;
  FiniteGroup group;
  FreeProductSignature signature;
  PermutationGroup aut;
  Certificate certificate;
  std::shared_ptr<const Substitution> substitution;
};

// Base-case realization over (p,q) or (2,2,2): Cayley graph, links,
// substitution, then full certification (validity, S.1, S.2, automorphism
// group isomorphic to the input group). Throws GuardError naming the first
// failing check.
Realization realize_base(const FiniteGroup& group,
                         const FreeProductSignature& sig, bool fast = false);

// Same pipeline with a custom edge-link (used by the census splice).
Realization realize_with_edge_link(const FiniteGroup& group,
                                   const FreeProductSignature& sig,
                                   const LinkGraph& elink, bool fast,
                                   std::vector<std::string> extra_notes = {});

// Multiset of complete cycle lengths of one label (sorted ascending).
std::vector<Vertex> cycle_multiset(const LabelledDigraph& g, Label l);

}  // namespace schreier

#endif
