#ifndef SCHREIER_BIGINT_HPP
#define SCHREIER_BIGINT_HPP

#include <cstdint>
#include <string>
#include <vector>

namespace schreier {

// Unsigned big integer, little-endian 32-bit limbs. Just enough arithmetic
// for exact evaluation of the census counting formulas.
class BigUint {
 public:
  BigUint() = default;
  BigUint(std::uint64_t v);  // NOLINT(google-explicit-constructor)

  bool is_zero() const { return limbs_.empty(); }

  friend BigUint operator+(const BigUint& a, const BigUint& b);
  friend BigUint operator-(const BigUint& a, const BigUint& b);  // a >= b
  friend BigUint operator*(const BigUint& a, const BigUint& b);
  friend int compare(const BigUint& a, const BigUint& b);

  friend bool operator==(const BigUint& a, const BigUint& b) {
    return a.limbs_ == b.limbs_;
  }
  friend bool operator<(const BigUint& a, const BigUint& b) {
    return compare(a, b) < 0;
  }
  friend bool operator<=(const BigUint& a, const BigUint& b) {
    return compare(a, b) <= 0;
  }

  // shift-subtract long division
  static void divmod(const BigUint& num, const BigUint& den, BigUint& quot,
                     BigUint& rem);

  static BigUint gcd(BigUint a, BigUint b);
  static BigUint factorial(unsigned n);
  static BigUint power(std::uint64_t base, unsigned exp);

  double to_double() const;
  std::string to_string() const;  // decimal

 private:
  void trim();
  std::vector<std::uint32_t> limbs_;
};

// Exact non-negative rational with reduced representation.
struct Rational {
  BigUint num;
  BigUint den;  // > 0

  Rational() : num(0), den(1) {}
  Rational(BigUint n, BigUint d);

  bool operator>=(const Rational& o) const;
  bool at_least_one() const { return den <= num; }
  double to_double() const { return num.to_double() / den.to_double(); }
  std::string to_string() const;  // "15/8", or plain integer when den == 1
};

}  // namespace schreier

#endif
