#ifndef SCHREIER_ORACLE_HPP
#define SCHREIER_ORACLE_HPP

#include <map>
#include <string>

#include "schreier/group.hpp"

namespace schreier {

struct CentralizerOptions {
  // Full factorial enumeration over all vertex permutations (n <= cap);
  // otherwise a backtracking search over images with commutation pruning.
  bool factorial = false;
  Vertex factorial_cap = 12;
};

// All vertex permutations commuting with every label permutation. Requires
// a regular connected graph. Independent of the morphism-based
// automorphisms(): candidates are assigned and verified directly against
// the commutation equations.
PermutationGroup centralizer_aut(const LabelledDigraph& g,
                                 CentralizerOptions opts = {});

// Canonical relabeling of a regular connected graph: breadth-first
// discovery order from a start vertex, labels scanned in signature order.
// The unbased form minimizes over all start vertices; the based form fixes
// the basepoint (vertex 0) as the start. Flattened label-major.
std::vector<Vertex> canonical_form_based(const LabelledDigraph& g);
std::vector<Vertex> canonical_form_unbased(const LabelledDigraph& g);

struct SubgroupClass {
  LabelledDigraph representative;  // canonical form, basepoint 0
  Vertex index = 0;
  bool is_free = false;
  std::size_t aut_order = 0;
  FiniteGroup aut_group;
  std::string aut_name;
};

struct SubgroupEnumeration {
  std::vector<SubgroupClass> classes;  // unbased classes = conjugacy classes
  std::size_t based_class_count = 0;   // based classes = subgroups
};

// Exhaustive enumeration of transitive label-permutation tuples with cycle
// lengths dividing the factor orders, up to simultaneous relabeling
// (unbased) and relabeling fixing vertex 0 (based). When cache_dir is
// non-empty, canonical forms are read from / written to a file keyed by
// (signature, d) there.
SubgroupEnumeration enumerate_subgroups(const FreeProductSignature& sig,
                                        Vertex d, Vertex cap = 10,
                                        unsigned jobs = 1,
                                        const std::string& cache_dir = "");

// Free unbased classes bucketed by the isomorphism type of their
// automorphism group (= N(H)/H).
std::map<std::string, std::size_t> quotient_histogram(
    const FreeProductSignature& sig, Vertex d, Vertex cap = 10,
    unsigned jobs = 1, const std::string& cache_dir = "");

}  // namespace schreier

#endif
