#ifndef SCHREIER_TYPES_HPP
#define SCHREIER_TYPES_HPP

#include <cstdint>
#include <limits>
#include <stdexcept>
#include <string>
#include <vector>

namespace schreier {

using Vertex = std::uint32_t;
using Label = std::uint32_t;

// Absent edge / unassigned slot.
inline constexpr Vertex kNoVertex = std::numeric_limits<Vertex>::max();

// Subset of alphabet labels, as a bitmask. Alphabets here are tiny (n <= 32).
using LabelSet = std::uint32_t;

inline LabelSet full_label_set(std::size_t label_count) {
  return label_count >= 32 ? ~LabelSet{0}
                           : (LabelSet{1} << label_count) - 1;
}

// A permutation of {0..n-1} in one-line image notation.
using Perm = std::vector<Vertex>;

// Invalid input: bad signatures, malformed files, out-of-domain requests.
// The CLI maps this to exit code 2.
struct DomainError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// A theorem-backed internal consistency guard tripped; this indicates a bug
// in the construction, not bad input. The CLI maps this to exit code 3.
struct GuardError : std::logic_error {
  using std::logic_error::logic_error;
};

}  // namespace schreier

#endif
