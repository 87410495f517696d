#pragma once

#include "binclass/nat.hpp"
#include "binclass/numrep.hpp"

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

namespace binclass {

inline constexpr std::size_t kDefaultStepBudget = 10'000'000;

/// BINCLASS_STEP_BUDGET if set and valid, else kDefaultStepBudget.
std::size_t default_step_budget();

// n = m·2^p + k with p > 0, p−1 <= m <= 2p−1, 0 <= k < 2^p.
struct ProperForm {
  Integer m;
  std::size_t p = 0;
  Nat k;
};

/// Throws std::domain_error for n = 0.
ProperForm proper_form(const Nat& n);

/// The β block of n (with the trailing ones removed first), most significant
/// digit first and zero-padded to its length. Throws std::domain_error when
/// n = 2^t − 1.
std::string beta_part(const Nat& n);

/// Bit position, in n's own coordinates, of the canonical edge out of n.
/// Throws std::domain_error when n = 2^t − 1.
std::size_t canonical_index(const Nat& n);

// Canonical walk. `vertices` is the class trace n̄ → … → 0 with `indices[i]`
// the canonical index of vertices[i]; `raw` is the same walk on the
// unreduced integers starting at n, ending at some 2^t − 1.
struct CanonicalPath {
  std::vector<Nat> vertices;
  std::vector<std::size_t> indices;
  std::vector<Nat> raw;
  std::vector<std::size_t> raw_indices;

  std::size_t length() const { return indices.size(); }
};

CanonicalPath canonical_path(const Nat& n, std::size_t max_steps = default_step_budget());
/// Length of the canonical path, which is f(n).
std::uint64_t f_canonical(const Nat& n, std::size_t max_steps = default_step_budget());

/// max f(q) over q <= n; g(0) = 0.
Integer g_of(const Nat& n);
Integer steenrod_length(const Nat& n);

/// #{n : g(n) = s}.
Integer freq_value(std::uint64_t s);
/// Minimum n with f(n) = l.
Nat min_n_with_f(std::uint64_t l);

}  // namespace binclass
