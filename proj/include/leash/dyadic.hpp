#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

namespace leash {

using BigInt = boost::multiprecision::cpp_int;

// Non-negative rational with a power-of-two denominator: value = numerator * 2^(-exponent).
// Canonical form: numerator odd, or exponent zero; zero is stored as (0, 0).
// All arithmetic is exact; operations that would leave the non-negative range throw.
class DyadicRational {
 public:
  DyadicRational() = default;

  static DyadicRational from_parts(BigInt numerator, unsigned exponent);
  static DyadicRational integer(std::uint64_t value);
  // 2^k for any integer k (negative k gives a fraction).
  static DyadicRational pow2(int k);

  const BigInt& numerator() const { return num_; }
  unsigned exponent() const { return exp_; }
  bool is_zero() const { return num_ == 0; }

  // Value * 2^k, exact in both directions.
  DyadicRational scaled_pow2(int k) const;
  std::uint64_t floor_u64() const;

  // "p/2^q", or just "p" when the value is an integer.
  std::string to_fraction_string() const;
  // Exact decimal expansion (dyadic rationals always terminate).
  std::string to_decimal_string() const;

  // Accepts "p", "p/2^q", or "p/q" with q a power of two.
  static std::optional<DyadicRational> try_parse(std::string_view text);
  static DyadicRational parse(std::string_view text);  // throws ParseError

  friend DyadicRational operator+(const DyadicRational& a, const DyadicRational& b);
  // Requires a >= b; throws InvalidParams otherwise.
  friend DyadicRational operator-(const DyadicRational& a, const DyadicRational& b);
  friend DyadicRational operator*(const DyadicRational& a, const DyadicRational& b);

  friend bool operator==(const DyadicRational& a, const DyadicRational& b) {
    return compare(a, b) == 0;
  }
  friend bool operator!=(const DyadicRational& a, const DyadicRational& b) {
    return compare(a, b) != 0;
  }
  friend bool operator<(const DyadicRational& a, const DyadicRational& b) {
    return compare(a, b) < 0;
  }
  friend bool operator<=(const DyadicRational& a, const DyadicRational& b) {
    return compare(a, b) <= 0;
  }
  friend bool operator>(const DyadicRational& a, const DyadicRational& b) {
    return compare(a, b) > 0;
  }
  friend bool operator>=(const DyadicRational& a, const DyadicRational& b) {
    return compare(a, b) >= 0;
  }

  static int compare(const DyadicRational& a, const DyadicRational& b);

 private:
  BigInt num_ = 0;
  unsigned exp_ = 0;
};

DyadicRational abs_diff(const DyadicRational& a, const DyadicRational& b);
const DyadicRational& max(const DyadicRational& a, const DyadicRational& b);

}  // namespace leash
