#include "binclass/canonical.hpp"

#include <algorithm>
#include <cstdlib>
#include <stdexcept>

namespace binclass {

std::size_t default_step_budget() {
  if (const char* env = std::getenv("BINCLASS_STEP_BUDGET")) {
    char* end = nullptr;
    unsigned long long v = std::strtoull(env, &end, 10);
    if (end != env && *end == '\0' && v > 0) return static_cast<std::size_t>(v);
  }
  return kDefaultStepBudget;
}

ProperForm proper_form(const Nat& n) {
  if (n.is_zero()) throw std::domain_error("proper_form: n must be >= 1");
  // Smallest p with ⌊n/2^p⌋ <= 2p−1, by bisection.
  std::size_t lo = 1;
  std::size_t hi = n.bit_length();
  while (lo < hi) {
    std::size_t mid = lo + (hi - lo) / 2;
    if (n.value() >> mid <= Integer(2 * mid - 1)) {
      hi = mid;
    } else {
      lo = mid + 1;
    }
  }
  ProperForm pf;
  pf.p = lo;
  pf.m = n.value() >> lo;
  pf.k = n.low_bits(lo);
  if (pf.m < Integer(lo - 1)) throw std::logic_error("proper_form: no valid representation");
  return pf;
}

namespace {

// Canonical index of a nonzero reduced class: the leftmost zero of the
// trailing zero block, clipped to the β block.
std::size_t class_index(const Nat& reduced) {
  std::size_t p = proper_form(reduced).p;
  return std::min(reduced.trailing_zeros(), p) - 1;
}

[[noreturn]] void steps_exceeded(std::size_t max_steps) {
  throw BudgetExceeded("canonical walk exceeded " + std::to_string(max_steps) +
                       " steps; use the formula method instead");
}

}  // namespace

std::string beta_part(const Nat& n) {
  Nat reduced = reduce_class(n);
  if (reduced.is_zero()) throw std::domain_error("beta_part: n has the form 2^t - 1");
  std::size_t p = proper_form(reduced).p;
  std::string out(p, '0');
  for (std::size_t i = 0; i < p; ++i) {
    if (reduced.bit(i)) out[p - 1 - i] = '1';
  }
  return out;
}

std::size_t canonical_index(const Nat& n) {
  std::size_t tail = n.trailing_ones();
  Nat reduced = n.shr(tail);
  if (reduced.is_zero()) throw std::domain_error("canonical_index: n has the form 2^t - 1");
  return class_index(reduced) + tail;
}

CanonicalPath canonical_path(const Nat& n, std::size_t max_steps) {
  CanonicalPath path;
  std::size_t tail = n.trailing_ones();
  Nat raw = n;
  Nat cls = n.shr(tail);
  path.raw.push_back(raw);
  path.vertices.push_back(cls);
  while (!cls.is_zero()) {
    if (path.indices.size() >= max_steps) steps_exceeded(max_steps);
    std::size_t s = class_index(cls);
    raw = subtract_pow2(raw, s + tail);
    cls = subtract_pow2(cls, s);
    std::size_t stripped = cls.trailing_ones();
    cls = cls.shr(stripped);
    path.indices.push_back(s);
    path.raw_indices.push_back(s + tail);
    tail += stripped;
    path.vertices.push_back(cls);
    path.raw.push_back(raw);
  }
  return path;
}

std::uint64_t f_canonical(const Nat& n, std::size_t max_steps) {
  Nat cls = reduce_class(n);
  std::uint64_t steps = 0;
  while (!cls.is_zero()) {
    if (steps >= max_steps) steps_exceeded(max_steps);
    cls = reduce_class(subtract_pow2(cls, class_index(cls)));
    ++steps;
  }
  return steps;
}

Integer g_of(const Nat& n) {
  if (n.is_zero()) return 0;
  ProperForm pf = proper_form(n);
  Integer p(pf.p);
  return p * (p - 1) / 2 + pf.m;
}

Integer steenrod_length(const Nat& n) { return g_of(n) + 1; }

namespace {

// The a with a(a+3)/2 <= s < (a+1)(a+4)/2.
Integer frequency_level(std::uint64_t s) {
  Integer target(s);
  Integer a = (boost::multiprecision::sqrt(Integer(9 + 8 * target)) - 3) / 2;
  if (a < 0) a = 0;
  while (a * (a + 3) / 2 > target) --a;
  while ((a + 1) * (a + 4) / 2 <= target) ++a;
  return a;
}

}  // namespace

Integer freq_value(std::uint64_t s) {
  Integer a = frequency_level(s);
  return pow2_integer(a.convert_to<std::size_t>() + 1);
}

Nat min_n_with_f(std::uint64_t l) {
  Integer a = frequency_level(l);
  Integer factor = Integer(l) - a * (a + 1) / 2;
  return Nat(Integer(pow2_integer(a.convert_to<std::size_t>() + 1) * factor));
}

}  // namespace binclass
