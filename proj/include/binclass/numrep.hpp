#pragma once

#include "binclass/nat.hpp"

#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace binclass {

// Run-length code [α_k, …, α_1]t of a number: reading the binary form from the
// least-significant end, t counts the trailing 1-bits, then α_j counts the
// 1-bits between the j-th and (j+1)-th zero bit (α_k: the ones above the top
// zero). The zero class has k = 0 and prints as "[0]".
class Bracket {
 public:
  Bracket() = default;
  /// Entries in written order α_k … α_1. Throws ParseError if α_k = 0 or an
  /// entry/tail is negative.
  explicit Bracket(std::vector<Integer> written, Integer tail = 0);

  /// Entries indexed low-first (index 0 holds α_1); same checks.
  static Bracket from_low_first(std::vector<Integer> low_first, Integer tail = 0);

  /// A bracket of dimension `dimension` whose only nonzero entries are the
  /// written-order `top` entries, placed at positions dimension, dimension-1, …
  static Bracket with_top(std::span<const Integer> top, std::size_t dimension);

  std::size_t dimension() const { return alphas_.size(); }
  bool is_zero_class() const { return alphas_.empty(); }
  /// α_j for 1 <= j <= dimension().
  const Integer& alpha(std::size_t j) const;
  const Integer& tail() const { return tail_; }
  /// α_1 … α_k.
  std::span<const Integer> low_first() const { return alphas_; }
  std::vector<Integer> written() const;

  Bracket without_tail() const;
  Bracket with_tail(Integer t) const;

  /// "[3,2,0]1"; the tail is omitted when zero.
  std::string to_string() const;

  friend bool operator==(const Bracket&, const Bracket&) = default;

 private:
  std::vector<Integer> alphas_;  // alphas_[j-1] == α_j
  Integer tail_ = 0;
};

struct ClassStats {
  Integer S;        // Σ j·α_j
  Integer S_prime;  // Σ α_j
  std::size_t dimension = 0;
};

using Input = std::variant<Nat, Bracket>;

/// Decimal, 0b-binary, 0x-hex, or bracket syntax "[a_k,...,a_1]t".
Input parse_input(std::string_view text);
Bracket parse_bracket(std::string_view text);

/// Strips all trailing 1-bits.
Nat reduce_class(const Nat& n);
Bracket bracket_of(const Nat& n);
/// Exact inverse of bracket_of (the tail is appended as trailing ones).
Nat nat_of(const Bracket& b);
/// Bit length of nat_of(b) without building it.
Integer nat_bit_length(const Bracket& b);

ClassStats class_stats(const Bracket& b);
inline ClassStats class_stats(const Nat& n) { return class_stats(bracket_of(n)); }

/// n − 2^s by flipping bits s … j, where j is the first set bit above s.
/// Throws std::domain_error if bit s is set or no higher bit is set.
Nat subtract_pow2(const Nat& n, std::size_t s);

/// Class bracket (tail dropped) of either input form.
Bracket class_bracket(const Input& in);
/// The tail t of the input.
Integer input_tail(const Input& in);
/// Exact integer value of the input (may be large for bracket inputs).
Nat input_value(const Input& in);

std::string binary_label(const Nat& n);

}  // namespace binclass
