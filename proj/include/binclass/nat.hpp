#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace binclass {

/// Signed arbitrary-precision integer used for counts, sums and Δ values.
using Integer = boost::multiprecision::cpp_int;

class ParseError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Signals that an exact method would exceed its configured work bound.
class BudgetExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Non-negative integer with bit-level access. Bit 0 is least significant.
class Nat {
 public:
  Nat() = default;
  Nat(std::uint64_t v) : value_(v) {}  // NOLINT(google-explicit-constructor)
  explicit Nat(Integer v);

  static Nat pow2(std::size_t s);

  /// Decimal, `0b` binary or `0x` hexadecimal text.
  static Nat parse(std::string_view text);

  bool is_zero() const { return value_.is_zero(); }
  bool bit(std::size_t i) const;
  std::size_t bit_length() const;
  std::size_t trailing_ones() const;
  std::size_t trailing_zeros() const;  // 0 for zero
  std::size_t popcount() const;

  Nat shr(std::size_t s) const;
  Nat shl(std::size_t s) const;
  /// Low `count` bits.
  Nat low_bits(std::size_t count) const;

  const Integer& value() const { return value_; }
  std::optional<std::uint64_t> to_u64() const;

  /// Radix 10 plain, radix 2 and 16 digits only (no prefix), most significant first.
  std::string to_string(int radix = 10) const;
  /// Same as to_string but with `0b` / `0x` prefixes for radix 2 / 16.
  std::string to_literal(int radix = 10) const;

  std::size_t hash() const;

  friend bool operator==(const Nat& a, const Nat& b) { return a.value_ == b.value_; }
  friend std::strong_ordering operator<=>(const Nat& a, const Nat& b) {
    int c = a.value_.compare(b.value_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

 private:
  Integer value_;
};

struct NatHash {
  std::size_t operator()(const Nat& n) const { return n.hash(); }
};

Integer pow2_integer(std::size_t s);

/// Smallest x with 2^x >= d (d >= 1).
std::size_t ceil_log2(std::uint64_t d);
/// Largest x with 2^x <= d (d >= 1).
std::size_t floor_log2(std::uint64_t d);
bool is_pow2(std::uint64_t v);
/// Number of trailing 1-bits.
std::size_t trailing_ones_u64(std::uint64_t v);
/// Zero bits strictly below the most significant set bit.
std::size_t zeros_below_top(std::uint64_t v);

std::string to_string(const Integer& v);

}  // namespace binclass

template <>
struct std::hash<binclass::Nat> {
  std::size_t operator()(const binclass::Nat& n) const { return n.hash(); }
};
