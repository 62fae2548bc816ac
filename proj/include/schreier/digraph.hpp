#ifndef SCHREIER_DIGRAPH_HPP
#define SCHREIER_DIGRAPH_HPP

#include <optional>
#include <string>
#include <vector>

#include "schreier/signature.hpp"
#include "schreier/types.hpp"

namespace schreier {

// A vertex produced by splitting, retaining only the edges whose labels lie
// in `colours`. Complementary danglers (colour sets partitioning the
// alphabet) may be glued back together.
struct DanglingVertex {
  Vertex vertex;
  LabelSet colours;

  friend bool operator==(const DanglingVertex& a, const DanglingVertex& b) {
    return a.vertex == b.vertex && a.colours == b.colours;
  }
};

// Labelled digraph over a free-product alphabet: per label a partial
// injective successor map. Foldedness (at most one in- and one out-edge per
// label at every vertex) is enforced on every edge insertion, so it is an
// invariant of the type, not a property to check.
//
// Values are treated as immutable once built; all higher-level operations
// are pure functions returning new graphs.
class LabelledDigraph {
 public:
  LabelledDigraph(FreeProductSignature sig, Vertex vertex_count);

  const FreeProductSignature& signature() const { return sig_; }
  Vertex vertex_count() const { return n_; }
  Label label_count() const { return static_cast<Label>(sig_.size()); }

  // kNoVertex when the edge is absent.
  Vertex succ(Label l, Vertex v) const { return succ_[l][v]; }
  Vertex pred(Label l, Vertex v) const { return pred_[l][v]; }

  bool has_edge(Label l, Vertex from, Vertex to) const {
    return from < n_ && succ_[l][from] == to;
  }

  // Inserts `from --l--> to`; throws GuardError if it would break foldedness.
  void set_edge(Label l, Vertex from, Vertex to);
  void erase_edge_from(Label l, Vertex from);

  // The label permutation, if total on this label.
  std::optional<Perm> label_perm(Label l) const;

  std::optional<Vertex> basepoint() const { return basepoint_; }
  void set_basepoint(std::optional<Vertex> v);

  const std::vector<DanglingVertex>& danglers() const { return danglers_; }
  void add_dangler(DanglingVertex d);
  bool is_dangler(Vertex v) const;

  std::size_t edge_count() const;

  friend bool operator==(const LabelledDigraph& a, const LabelledDigraph& b) {
    return a.sig_.orders() == b.sig_.orders() && a.n_ == b.n_ &&
           a.succ_ == b.succ_ && a.basepoint_ == b.basepoint_ &&
           a.danglers_ == b.danglers_;
  }

 private:
  FreeProductSignature sig_;
  Vertex n_;
  std::vector<std::vector<Vertex>> succ_;
  std::vector<std::vector<Vertex>> pred_;
  std::optional<Vertex> basepoint_;
  std::vector<DanglingVertex> danglers_;
};

// One step of a word: a label, followed forwards (succ) or backwards (pred).
struct WordStep {
  Label label;
  bool forward = true;
};
using Word = std::vector<WordStep>;

// Terminus of the unique path labelled by `word` starting at v, or nullopt
// if some step is missing. Absence is a value, not an error.
std::optional<Vertex> follow_word(const LabelledDigraph& g, Vertex v,
                                  const Word& word);

struct DegenerateCycle {
  Label label;
  Vertex length;
  Vertex representative;
};

struct ValidityReport {
  bool is_regular = false;
  bool is_connected = false;
  std::vector<DegenerateCycle> degenerate_cycles;  // length properly divides p
  bool is_schreier = false;  // regular, connected, all cycle lengths divide p
  bool is_free = false;      // schreier and no degenerate cycle
  std::optional<Vertex> index;  // vertex count, when is_schreier
};

ValidityReport validate(const LabelledDigraph& g);

// Connectivity over the underlying undirected edge set of all labels.
bool is_connected(const LabelledDigraph& g);

// Component id per vertex, ids dense in discovery order from vertex 0.
std::vector<Vertex> components(const LabelledDigraph& g);

// Replaces v by the dangler pair v_Y / v_{X-Y}: v keeps the edges whose
// labels are in `colours`, the appended vertex keeps the rest.
LabelledDigraph split_vertex(const LabelledDigraph& g, Vertex v,
                             LabelSet colours);

// Identifies the complementary danglers u and v; the smaller index survives.
LabelledDigraph glue(const LabelledDigraph& g, const DanglingVertex& u,
                     const DanglingVertex& v);

}  // namespace schreier

#endif
