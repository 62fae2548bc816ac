#ifndef SCHREIER_SIGNATURE_HPP
#define SCHREIER_SIGNATURE_HPP

#include <string>
#include <vector>

#include "schreier/types.hpp"

namespace schreier {

// Cyclic-factor order. kInfiniteOrder stands for the infinite cyclic group.
using Order = std::uint32_t;
inline constexpr Order kInfiniteOrder = std::numeric_limits<Order>::max();

inline bool is_finite(Order p) { return p != kInfiniteOrder; }

// The tuple (p_1, ..., p_n) naming the free product Z_{p1} * ... * Z_{pn},
// together with one alphabet label per factor.
//
// Orders >= 2 (or infinite) describe free products proper; order 1 is
// tolerated in storage so that Cayley alphabets may declare identity
// generators. Operations that realize subgroups check their own stronger
// preconditions (in particular the (2,2) exclusion).
class FreeProductSignature {
 public:
  FreeProductSignature(std::vector<Order> orders,
                       std::vector<std::string> labels = {});

  // Parses a comma list such as "3,2" or "inf,2".
  static FreeProductSignature parse(const std::string& comma_list);

  std::size_t size() const { return orders_.size(); }
  Order order(Label i) const { return orders_.at(i); }
  const std::vector<Order>& orders() const { return orders_; }
  const std::string& label_name(Label i) const { return labels_.at(i); }
  const std::vector<std::string>& label_names() const { return labels_; }

  bool all_orders_are(Order p) const;
  bool is_pq() const;    // two labels, both finite, first >= 3, second >= 2
  bool is_222() const;   // three labels, all of order 2

  std::string to_string() const;  // "3,2" form, "inf" for infinite factors

  friend bool operator==(const FreeProductSignature& a,
                         const FreeProductSignature& b) {
    return a.orders_ == b.orders_;
  }

 private:
  std::vector<Order> orders_;
  std::vector<std::string> labels_;
};

}  // namespace schreier

#endif
