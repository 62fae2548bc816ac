#include "schreier/bigint.hpp"

#include <algorithm>
#include <stdexcept>

namespace schreier {

BigUint::BigUint(std::uint64_t v) {
  while (v) {
    limbs_.push_back(static_cast<std::uint32_t>(v));
    v >>= 32;
  }
}

void BigUint::trim() {
  while (!limbs_.empty() && limbs_.back() == 0) limbs_.pop_back();
}

int compare(const BigUint& a, const BigUint& b) {
  if (a.limbs_.size() != b.limbs_.size())
    return a.limbs_.size() < b.limbs_.size() ? -1 : 1;
  for (std::size_t i = a.limbs_.size(); i-- > 0;)
    if (a.limbs_[i] != b.limbs_[i]) return a.limbs_[i] < b.limbs_[i] ? -1 : 1;
  return 0;
}

BigUint operator+(const BigUint& a, const BigUint& b) {
  BigUint r;
  std::uint64_t carry = 0;
  for (std::size_t i = 0; i < std::max(a.limbs_.size(), b.limbs_.size()) || carry;
       ++i) {
    std::uint64_t s = carry;
    if (i < a.limbs_.size()) s += a.limbs_[i];
    if (i < b.limbs_.size()) s += b.limbs_[i];
    r.limbs_.push_back(static_cast<std::uint32_t>(s));
    carry = s >> 32;
  }
  return r;
}

BigUint operator-(const BigUint& a, const BigUint& b) {
  if (compare(a, b) < 0) throw std::invalid_argument("BigUint underflow");
  BigUint r;
  std::int64_t borrow = 0;
  for (std::size_t i = 0; i < a.limbs_.size(); ++i) {
    std::int64_t d = static_cast<std::int64_t>(a.limbs_[i]) - borrow -
                     (i < b.limbs_.size() ? b.limbs_[i] : 0);
    borrow = d < 0 ? 1 : 0;
    if (d < 0) d += std::int64_t{1} << 32;
    r.limbs_.push_back(static_cast<std::uint32_t>(d));
  }
  r.trim();
  return r;
}

BigUint operator*(const BigUint& a, const BigUint& b) {
  if (a.is_zero() || b.is_zero()) return BigUint(0);
  BigUint r;
  r.limbs_.assign(a.limbs_.size() + b.limbs_.size(), 0);
  for (std::size_t i = 0; i < a.limbs_.size(); ++i) {
    std::uint64_t carry = 0;
    for (std::size_t j = 0; j < b.limbs_.size() || carry; ++j) {
      std::uint64_t cur = r.limbs_[i + j] + carry;
      if (j < b.limbs_.size())
        cur += static_cast<std::uint64_t>(a.limbs_[i]) * b.limbs_[j];
      r.limbs_[i + j] = static_cast<std::uint32_t>(cur);
      carry = cur >> 32;
    }
  }
  r.trim();
  return r;
}

void BigUint::divmod(const BigUint& num, const BigUint& den, BigUint& quot,
                     BigUint& rem) {
  if (den.is_zero()) throw std::invalid_argument("BigUint division by zero");
  quot = BigUint(0);
  rem = BigUint(0);
  if (num.is_zero()) return;
  const std::size_t bits = num.limbs_.size() * 32;
  quot.limbs_.assign(num.limbs_.size(), 0);
  for (std::size_t i = bits; i-- > 0;) {
    // rem = rem * 2 + bit i of num
    std::uint32_t carry = (num.limbs_[i / 32] >> (i % 32)) & 1u;
    for (std::size_t j = 0; j < rem.limbs_.size(); ++j) {
      std::uint32_t next = rem.limbs_[j] >> 31;
      rem.limbs_[j] = (rem.limbs_[j] << 1) | carry;
      carry = next;
    }
    if (carry) rem.limbs_.push_back(carry);
    if (compare(rem, den) >= 0) {
      rem = rem - den;
      quot.limbs_[i / 32] |= 1u << (i % 32);
    }
  }
  quot.trim();
  rem.trim();
}

BigUint BigUint::gcd(BigUint a, BigUint b) {
  while (!b.is_zero()) {
    BigUint q, r;
    divmod(a, b, q, r);
    a = b;
    b = r;
  }
  return a;
}

BigUint BigUint::factorial(unsigned n) {
  BigUint r(1);
  for (unsigned i = 2; i <= n; ++i) r = r * BigUint(i);
  return r;
}

BigUint BigUint::power(std::uint64_t base, unsigned exp) {
  BigUint r(1), b(base);
  while (exp) {
    if (exp & 1) r = r * b;
    b = b * b;
    exp >>= 1;
  }
  return r;
}

double BigUint::to_double() const {
  double v = 0;
  for (std::size_t i = limbs_.size(); i-- > 0;)
    v = v * 4294967296.0 + limbs_[i];
  return v;
}

std::string BigUint::to_string() const {
  if (is_zero()) return "0";
  BigUint n = *this;
  const BigUint ten(10);
  std::string out;
  while (!n.is_zero()) {
    BigUint q, r;
    divmod(n, ten, q, r);
    out.push_back(static_cast<char>('0' + (r.is_zero() ? 0 : r.limbs_[0])));
    n = q;
  }
  std::reverse(out.begin(), out.end());
  return out;
}

Rational::Rational(BigUint n, BigUint d) : num(std::move(n)), den(std::move(d)) {
  if (den.is_zero()) throw std::invalid_argument("Rational with zero denominator");
  BigUint g = BigUint::gcd(num, den);
  if (!g.is_zero() && !(g == BigUint(1))) {
    BigUint q, r;
    BigUint::divmod(num, g, q, r);
    num = q;
    BigUint::divmod(den, g, q, r);
    den = q;
  }
  if (num.is_zero()) den = BigUint(1);
}

bool Rational::operator>=(const Rational& o) const {
  return compare(num * o.den, o.num * den) >= 0;
}

std::string Rational::to_string() const {
  if (den == BigUint(1)) return num.to_string();
  return num.to_string() + "/" + den.to_string();
}

}  // namespace schreier
