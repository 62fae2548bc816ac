#ifndef SCHREIER_FACTORS_HPP
#define SCHREIER_FACTORS_HPP

#include <memory>

#include "schreier/assembly.hpp"

namespace schreier {

// One factor of the reduced signature: either an input factor (leaf, with a
// finite stand-in when the input order was infinite) or the merge of two
// reduced factors into Z_lcm.
struct FactorNode {
  Order order = 0;         // order carried in the reduced world (finite)
  int input_pos = -1;      // leaves only
  bool from_infinite = false;
  std::unique_ptr<FactorNode> left, right;

  bool is_leaf() const { return left == nullptr; }
};

// How an arbitrary signature reduces to a base case: infinite factors get a
// finite stand-in, then factors merge pairwise into Z_lcm until (p,q) with
// p >= 3 remains, except that the all-2s triple is kept as base (2,2,2).
// Replaying the steps backward from the base reconstructs the input.
struct ReductionPlan {
  FreeProductSignature input;
  FreeProductSignature base;
  std::vector<std::unique_ptr<FactorNode>> roots;  // one per base label
  std::vector<std::string> steps;
};

ReductionPlan plan_reduction(const FreeProductSignature& sig);

// Replaces the Z_m label li (m = lcm(a,b), all cycles of length exactly m)
// by two labels pi^(m/a) of order a and pi^(m/b) of order b, at positions
// li and li+1. Vertex set, index, freeness and automorphisms are preserved.
LabelledDigraph lift_lcm(const LabelledDigraph& g, Label li, Order a, Order b);

// Declares label li infinite; permutation data unchanged.
LabelledDigraph lift_Z(const LabelledDigraph& g, Label li);

// Full driver: reduce, realize the base case, replay the plan backward with
// lifts, re-certifying index, freeness and the automorphism set after every
// step. Rejects (2,2).
Realization realize(const FiniteGroup& group, const FreeProductSignature& sig,
                    bool fast = false);

}  // namespace schreier

#endif
