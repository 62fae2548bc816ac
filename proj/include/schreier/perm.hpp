#ifndef SCHREIER_PERM_HPP
#define SCHREIER_PERM_HPP

#include <vector>

#include "schreier/types.hpp"

namespace schreier {

Perm perm_identity(Vertex n);
bool perm_is_valid(const Perm& p);

// Function composition: (a * b)(x) = a(b(x)).
Perm perm_compose(const Perm& a, const Perm& b);
Perm perm_inverse(const Perm& p);
Perm perm_power(const Perm& p, std::uint64_t e);

bool perm_is_identity(const Perm& p);

// True when p * p = id with no fixed points.
bool perm_is_fpf_involution(const Perm& p);

// Multiset of cycle lengths, sorted ascending.
std::vector<Vertex> cycle_type(const Perm& p);

// Order of p as a group element (lcm of cycle lengths).
std::uint64_t perm_order(const Perm& p);

}  // namespace schreier

#endif
