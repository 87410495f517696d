#pragma once

#include "binclass/canonical.hpp"
#include "binclass/nat.hpp"
#include "binclass/numrep.hpp"

#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace binclass {

// (a, k) with a <= k <= 2a+1. A number is a Vakil number with this pair when
// its class is 2^{a+1}·k.
struct VakilPair {
  std::uint64_t a = 0;
  std::uint64_t k = 0;

  friend bool operator==(const VakilPair&, const VakilPair&) = default;
};

bool is_vakil_pair(std::uint64_t a, std::uint64_t k);
std::string to_string(const VakilPair& p);

/// The pair of the class of b (tail ignored), if it is a Vakil number.
std::optional<VakilPair> is_vakil(const Bracket& b);
std::optional<VakilPair> is_vakil(const Nat& n);

/// k + a(a+1)/2.
Integer f_vakil(const VakilPair& p);
/// Pair of 2^d = [1,0,…,0]; d >= 1.
VakilPair vakil_of_power(std::size_t d);
/// Class bracket of 2^{a+1}·k.
Bracket vakil_bracket(std::uint64_t a, std::uint64_t k);
/// f_vakil(p) − S(2^{a+1}k); throws std::invalid_argument if 2^{a+1}k does
/// not have dimension d.
Integer delta_of_vakil(const VakilPair& p, std::size_t d);

/// Suffix-sum dominance. Both brackets must have the same dimension
/// (std::invalid_argument otherwise); tails are ignored.
bool can_reach(const Bracket& src, const Bracket& dst);
/// Same criterion against raw written-order entries of src's length; leading
/// zeros are allowed here.
bool can_reach(const Bracket& src, std::span<const Integer> dst_written);
/// Σ j(α_j − α'_j); requires can_reach(src, dst).
Integer path_length_between(const Bracket& src, const Bracket& dst);

struct Reduction {
  Bracket vakil;
  VakilPair pair;
  Integer steps;  // canonical edges from the input class to `vakil`
};

/// Decrements α_1 to 0, then α_2, … and stops at the first Vakil class. An
/// input that is already Vakil comes back unchanged with 0 steps.
Reduction reduce_to_first_vakil(const Bracket& b, std::size_t max_checks = default_step_budget());

// One row of the per-dimension short table: the number 2^{a+1}k, its Vakil
// pair (possibly re-expressed as (a+1, k/2)), and its Δ.
struct DeltaRow {
  std::uint64_t a = 0;
  std::uint64_t k = 0;
  std::size_t dimension = 0;
  std::optional<std::uint64_t> t_k4;  // absent on the final row
  std::optional<VakilPair> pair;      // absent when 2^{a+1}k is not a Vakil number
  bool halved = false;                // pair == (a+1, k/2)
  bool skip = false;                  // no pair, or 4 ∤ pair.k
  std::optional<Integer> delta;       // absent on skip rows

  /// Written-order entries of the bracket from position `dimension` down to a+1;
  /// every lower entry is zero.
  std::vector<Integer> top_entries() const;
  Bracket bracket() const;
};

struct DeltaTable {
  std::size_t dimension = 0;
  std::vector<DeltaRow> rows;  // ascending k, step 4
};

inline constexpr std::size_t kMinTableDimension = 5;

/// Short table for dimension d >= 5.
DeltaTable enumerate_vakil(std::size_t d);
/// Process-wide cached enumerate_vakil(d); safe to call concurrently.
std::shared_ptr<const DeltaTable> delta_table(std::size_t d);

struct VakilMember {
  std::uint64_t a = 0;
  std::uint64_t k = 0;
  VakilPair pair;
  Nat value() const;  // 2^{a+1}k
};

/// Every d-Vakil number (d >= 5), walking k one at a time through the table's
/// k-range with a' = a − t_k + 1_k.
std::vector<VakilMember> vakil_numbers(std::size_t d);

struct ClosestVakil {
  DeltaRow row;
  Integer delta;
  std::size_t ties = 1;  // reachable rows sharing the maximal Δ
};

/// Reachable 4|k row of maximal Δ (first in ascending k on ties). Requires
/// dimension >= 5 and a non-Vakil class.
ClosestVakil closest_vakil(const Bracket& b);

/// Largest h >= 1 with (2^m−1)·2^{h−1} + h + 1 <= k; requires m >= 1, 2^m < k.
std::uint64_t h_index(std::uint64_t m, std::uint64_t k);
/// f([m,0,…,0]) of dimension i, for m >= 1 and 2^m < i.
Integer f_zero_tail(std::uint64_t m, std::uint64_t i);
/// Δ^{[n,0,…,0]} of dimension i; n is clamped once 2^n >= i.
Integer delta_stabilized(std::uint64_t n, std::uint64_t i);

/// Δ_k for k = 1..7 (small-dimension constants).
Integer small_dimension_delta(std::size_t k);
/// Δ for dimension k >= 4 classes whose top entry is >= ⌊log₂ k⌋ − 1.
Integer top_heavy_delta(std::size_t k);

// `reduction` marks inputs where the closest 4|k row undershoots and Δ comes
// from the reduction process instead.
enum class FormulaMethod { zero_class, vakil, small_dimension, top_heavy, closest_vakil, reduction };
std::string to_string(FormulaMethod m);

struct FormulaResult {
  Integer f;
  FormulaMethod method = FormulaMethod::zero_class;
  ClassStats stats;
  Integer delta;
  std::optional<VakilPair> pair;
  std::optional<ClosestVakil> closest;
  std::optional<Reduction> reduction;
};

class NoReachableRow : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

FormulaResult f_formula_detail(const Input& in);
inline Integer f_formula(const Input& in) { return f_formula_detail(in).f; }

}  // namespace binclass
