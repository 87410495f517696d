#pragma once

#include "binclass/nat.hpp"

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace binclass {

struct VerifyRow {
  std::uint64_t n = 0;
  std::uint64_t oracle = 0;
  std::uint64_t canonical = 0;
  std::optional<Integer> formula;  // absent when the formula raised
  std::string formula_error;

  bool agree() const {
    return formula && oracle == canonical && *formula == Integer(oracle);
  }
};

struct VerifyTimings {
  double oracle_seconds = 0;
  double canonical_seconds = 0;
  double formula_seconds = 0;
};

// Cross-check of the three f implementations over the inclusive range [lo, hi].
struct VerifyReport {
  std::uint64_t lo = 0;
  std::uint64_t hi = 0;
  std::vector<VerifyRow> rows;
  std::vector<std::uint64_t> mismatches;
  VerifyTimings timings;  // summed over workers

  bool ok() const { return mismatches.empty(); }
};

/// Worker w of `jobs` checks n ≡ w (mod jobs), with its own oracle. The
/// result does not depend on `jobs` apart from the timings.
VerifyReport run_verify(std::uint64_t max, std::size_t jobs = 1);

std::string report_json(const VerifyReport& r, bool with_timings = false);

}  // namespace binclass
