// Arbitrary-precision signed integers, sized for fraction-free elimination
// on the small dense systems this library produces. Only the operations the
// rank oracle needs: add, subtract, multiply, exact division, compare.
#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace nlops {

class BigInt {
 public:
  BigInt() = default;
  BigInt(long long v);  // NOLINT(google-explicit-constructor)

  bool is_zero() const { return sign_ == 0; }
  int sign() const { return sign_; }

  BigInt operator-() const;
  BigInt& negate();

  friend BigInt operator+(const BigInt& a, const BigInt& b);
  friend BigInt operator-(const BigInt& a, const BigInt& b);
  friend BigInt operator*(const BigInt& a, const BigInt& b);
  BigInt& operator+=(const BigInt& b) { return *this = *this + b; }
  BigInt& operator-=(const BigInt& b) { return *this = *this - b; }
  BigInt& operator*=(const BigInt& b) { return *this = *this * b; }

  // Quotient of an exact division; throws std::logic_error on a nonzero
  // remainder (which would mean a broken elimination invariant).
  BigInt exact_div(const BigInt& d) const;

  friend bool operator==(const BigInt& a, const BigInt& b);
  friend bool operator!=(const BigInt& a, const BigInt& b) { return !(a == b); }
  friend bool operator<(const BigInt& a, const BigInt& b);

  std::string to_string() const;

  // Exact conversion; throws std::overflow_error when out of range.
  long long to_ll() const;

 private:
  // little-endian base-2^64 magnitude, no leading zero limbs; empty iff zero
  int sign_ = 0;
  std::vector<std::uint64_t> mag_;

  static int cmp_mag(const std::vector<std::uint64_t>& a,
                     const std::vector<std::uint64_t>& b);
  static std::vector<std::uint64_t> add_mag(
      const std::vector<std::uint64_t>& a,
      const std::vector<std::uint64_t>& b);
  // requires |a| >= |b|
  static std::vector<std::uint64_t> sub_mag(
      const std::vector<std::uint64_t>& a,
      const std::vector<std::uint64_t>& b);
  static std::vector<std::uint64_t> mul_mag(
      const std::vector<std::uint64_t>& a,
      const std::vector<std::uint64_t>& b);
  // long division of magnitudes, v nonzero; returns quotient, rem gets the
  // remainder
  static std::vector<std::uint64_t> divmod_mag(
      const std::vector<std::uint64_t>& u, const std::vector<std::uint64_t>& v,
      std::vector<std::uint64_t>& rem);
  static void trim(std::vector<std::uint64_t>& v);
};

}  // namespace nlops
