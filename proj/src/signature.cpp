#include "schreier/signature.hpp"

#include <algorithm>
#include <sstream>

namespace schreier {

namespace {

std::vector<std::string> default_labels(const std::vector<Order>& orders) {
  const std::size_t n = orders.size();
  if (n == 2) return {"r", "c"};
  if (n == 3 && orders[0] == 2 && orders[1] == 2 && orders[2] == 2)
    return {"r", "g", "b"};
  std::vector<std::string> out;
  out.reserve(n);
  for (std::size_t i = 0; i < n; ++i) out.push_back("s" + std::to_string(i + 1));
  return out;
}

}  // namespace

FreeProductSignature::FreeProductSignature(std::vector<Order> orders,
                                           std::vector<std::string> labels)
    : orders_(std::move(orders)), labels_(std::move(labels)) {
  if (orders_.empty()) throw DomainError("signature needs at least one factor");
  if (orders_.size() > 32) throw DomainError("at most 32 factors supported");
  for (Order p : orders_)
    if (is_finite(p) && p < 1)
      throw DomainError("factor orders must be >= 1 or infinite");
  if (labels_.empty()) labels_ = default_labels(orders_);
  if (labels_.size() != orders_.size())
    throw DomainError("label list must match the number of factors");
  for (std::size_t i = 0; i < labels_.size(); ++i)
    for (std::size_t j = i + 1; j < labels_.size(); ++j)
      if (labels_[i] == labels_[j])
        throw DomainError("duplicate label name: " + labels_[i]);
}

FreeProductSignature FreeProductSignature::parse(const std::string& comma_list) {
  std::vector<Order> orders;
  std::stringstream ss(comma_list);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    tok.erase(std::remove_if(tok.begin(), tok.end(), ::isspace), tok.end());
    if (tok == "inf" || tok == "INF" || tok == "oo") {
      orders.push_back(kInfiniteOrder);
    } else {
      try {
        unsigned long v = std::stoul(tok);
        if (v < 1 || v > 1u << 20) throw DomainError("order out of range: " + tok);
        orders.push_back(static_cast<Order>(v));
      } catch (const std::logic_error&) {
        throw DomainError("cannot parse factor order: '" + tok + "'");
      }
    }
  }
  if (orders.empty()) throw DomainError("empty product specification");
  return FreeProductSignature(std::move(orders));
}

bool FreeProductSignature::all_orders_are(Order p) const {
  return std::all_of(orders_.begin(), orders_.end(),
                     [p](Order q) { return q == p; });
}

bool FreeProductSignature::is_pq() const {
  return size() == 2 && is_finite(orders_[0]) && is_finite(orders_[1]) &&
         orders_[0] >= 3 && orders_[1] >= 2;
}

bool FreeProductSignature::is_222() const {
  return size() == 3 && all_orders_are(2);
}

std::string FreeProductSignature::to_string() const {
  std::string out;
  for (std::size_t i = 0; i < orders_.size(); ++i) {
    if (i) out += ",";
    out += is_finite(orders_[i]) ? std::to_string(orders_[i]) : "inf";
  }
  return out;
}

}  // namespace schreier
