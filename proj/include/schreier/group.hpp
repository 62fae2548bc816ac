#ifndef SCHREIER_GROUP_HPP
#define SCHREIER_GROUP_HPP

#include <string>
#include <vector>

#include "schreier/digraph.hpp"
#include "schreier/morphism.hpp"

namespace schreier {

struct GroupGenerator {
  unsigned element;
  std::string name;
};

// Finite group as a multiplication table over element indices, with a
// distinguished generator list. Generators may repeat and may include the
// identity; each occupies its own alphabet label downstream.
class FiniteGroup {
 public:
  // Validates: Latin square, identity, associativity (exhaustive for orders
  // up to assoc_cap), and that the generators generate.
  static FiniteGroup from_table(std::vector<std::vector<unsigned>> table,
                                std::vector<GroupGenerator> generators,
                                unsigned assoc_cap = 256);

  // Closure of permutation generators under composition; element 0 is the
  // identity. An empty list yields the trivial group with generator "e".
  static FiniteGroup from_permutations(const std::vector<Perm>& gens,
                                       unsigned closure_cap = 10000);

  // trivial | Z<n> | D<n> | S<n> (n<=5) | A<n> (n<=5) | Q8 | klein4
  static FiniteGroup preset(const std::string& name);

  unsigned order() const { return static_cast<unsigned>(table_.size()); }
  unsigned identity() const { return identity_; }
  unsigned mul(unsigned a, unsigned b) const { return table_[a][b]; }
  unsigned inverse(unsigned a) const;
  unsigned element_order(unsigned a) const;
  const std::vector<GroupGenerator>& generators() const { return generators_; }
  const std::vector<std::vector<unsigned>>& table() const { return table_; }

  // Sorted multiset of element orders; equal for isomorphic groups.
  std::vector<unsigned> order_profile() const;

 private:
  FiniteGroup() = default;
  std::vector<std::vector<unsigned>> table_;
  unsigned identity_ = 0;
  std::vector<GroupGenerator> generators_;
};

// Cayley graph of G: vertices are elements, succ_s(g) = g*s, basepoint at
// the identity. The alphabet records each generator's order as its declared
// cycle length (possibly 1, for identity generators).
LabelledDigraph cayley_graph(const FiniteGroup& g);

// Brute-force isomorphism test for small groups: maps a small generating
// set of a onto order-matched tuples of b and checks the induced table map.
bool groups_isomorphic(const FiniteGroup& a, const FiniteGroup& b,
                       unsigned cap = 512);

// Materializes a permutation group (e.g. an automorphism group) as a
// FiniteGroup; element 0 is the identity.
FiniteGroup to_finite_group(const PermutationGroup& pg);

// Greedy small generating set (element indices), empty for the trivial group.
std::vector<unsigned> small_generating_set(const FiniteGroup& g);

// Short descriptive name for common small groups ("Z6", "S3", "Q8", ...),
// or "order<k>" when unrecognized.
std::string describe_group(const FiniteGroup& g);

}  // namespace schreier

#endif
