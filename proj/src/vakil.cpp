#include "binclass/vakil.hpp"

#include <bit>
#include <map>
#include <mutex>
#include <shared_mutex>
#include <stdexcept>

namespace binclass {

bool is_vakil_pair(std::uint64_t a, std::uint64_t k) { return k >= 1 && a <= k && k <= 2 * a + 1; }

std::string to_string(const VakilPair& p) {
  return "(" + std::to_string(p.a) + "," + std::to_string(p.k) + ")";
}

std::optional<VakilPair> is_vakil(const Nat& n) {
  Nat reduced = reduce_class(n);
  if (reduced.is_zero()) return std::nullopt;
  ProperForm pf = proper_form(reduced);
  if (!pf.k.is_zero()) return std::nullopt;
  return VakilPair{pf.p - 1, pf.m.convert_to<std::uint64_t>()};
}

std::optional<VakilPair> is_vakil(const Bracket& b) {
  if (b.is_zero_class()) return std::nullopt;
  // A Vakil class 2^{a+1}k has a+1 <= d and k <= 2a+1 < 2d, so its S' = popcount(k)
  // is at most bit_width(2d). Larger S' rules it out without expanding the bits.
  ClassStats st = class_stats(b);
  if (st.S_prime > Integer(std::bit_width(2 * static_cast<std::uint64_t>(st.dimension)))) {
    return std::nullopt;
  }
  return is_vakil(nat_of(b.without_tail()));
}

Integer f_vakil(const VakilPair& p) {
  Integer a(p.a);
  return Integer(p.k) + a * (a + 1) / 2;
}

VakilPair vakil_of_power(std::size_t d) {
  if (d == 0) throw std::domain_error("vakil_of_power: d must be >= 1");
  if (d == 1) return {0, 1};  // 2 = 2^1·1
  std::uint64_t x = ceil_log2(d);
  std::uint64_t half = std::uint64_t{1} << (x - 1);
  if (half + x >= d) return {d - x, half};
  return {d - x - 1, std::uint64_t{1} << x};
}

Bracket vakil_bracket(std::uint64_t a, std::uint64_t k) {
  return bracket_of(Nat(k).shl(static_cast<std::size_t>(a + 1)));
}

Integer delta_of_vakil(const VakilPair& p, std::size_t d) {
  Bracket b = vakil_bracket(p.a, p.k);
  if (b.dimension() != d) {
    throw std::invalid_argument("delta_of_vakil: 2^{a+1}k has dimension " +
                                std::to_string(b.dimension()) + ", not " + std::to_string(d));
  }
  return f_vakil(p) - class_stats(b).S;
}

bool can_reach(const Bracket& src, std::span<const Integer> dst_written) {
  if (dst_written.size() != src.dimension()) {
    throw std::invalid_argument("can_reach: entry counts differ");
  }
  Integer lhs = 0;
  Integer rhs = 0;
  for (std::size_t i = 0; i < dst_written.size(); ++i) {
    lhs += src.alpha(src.dimension() - i);
    rhs += dst_written[i];
    if (lhs < rhs) return false;
  }
  return true;
}

bool can_reach(const Bracket& src, const Bracket& dst) {
  if (src.dimension() != dst.dimension()) {
    throw std::invalid_argument(
        "can_reach: the suffix-sum criterion needs equal dimensions; use reachable_bfs");
  }
  auto w = dst.written();
  return can_reach(src, w);
}

Integer path_length_between(const Bracket& src, const Bracket& dst) {
  if (!can_reach(src, dst)) throw std::domain_error("path_length_between: dst is not reachable");
  return class_stats(src).S - class_stats(dst).S;
}

Reduction reduce_to_first_vakil(const Bracket& b, std::size_t max_checks) {
  Bracket cls = b.without_tail();
  if (auto p = is_vakil(cls)) return {cls, *p, 0};
  if (cls.is_zero_class()) throw std::domain_error("reduce_to_first_vakil: zero class");

  std::vector<Integer> entries(cls.low_first().begin(), cls.low_first().end());
  const std::size_t d = entries.size();
  const Integer bound(std::bit_width(2 * static_cast<std::uint64_t>(d)));
  Integer s_prime = class_stats(cls).S_prime;
  Integer steps = 0;
  std::size_t checks = 0;

  for (std::size_t j = 1; j <= d; ++j) {
    Integer& entry = entries[j - 1];
    while (entry > 0) {
      // Classes with S' above the bound cannot be Vakil; step over them in bulk.
      if (s_prime - 1 > bound) {
        Integer jump = s_prime - 1 - bound;
        if (jump > entry) jump = entry;
        entry -= jump;
        s_prime -= jump;
        steps += jump * j;
        continue;
      }
      if (++checks > max_checks) {
        throw BudgetExceeded("reduction process exceeded " + std::to_string(max_checks) + " steps");
      }
      entry -= 1;
      s_prime -= 1;
      steps += j;
      if (j == d && entry.is_zero()) break;
      Bracket candidate = Bracket::from_low_first(entries);
      if (auto p = is_vakil(candidate)) return {candidate, *p, steps};
    }
  }
  // 2^d = [1,0,…,0] is always Vakil, so the loop returns before α_d reaches 0.
  throw std::logic_error("reduce_to_first_vakil: no Vakil class reached");
}

std::vector<Integer> DeltaRow::top_entries() const {
  // 2^{a+1}k: k's bracket, with k's tail becoming the entry at position a+1.
  Bracket kb = bracket_of(Nat(k));
  std::vector<Integer> out = kb.written();
  out.push_back(kb.tail());
  return out;
}

Bracket DeltaRow::bracket() const {
  auto top = top_entries();
  return Bracket::with_top(top, dimension);
}

Nat VakilMember::value() const { return Nat(k).shl(static_cast<std::size_t>(a + 1)); }

namespace {

struct PairResolution {
  std::optional<VakilPair> pair;
  bool halved = false;
};

PairResolution resolve_pair(std::uint64_t a, std::uint64_t k) {
  if (is_vakil_pair(a, k)) return {VakilPair{a, k}, false};
  if (k % 2 == 0 && is_vakil_pair(a + 1, k / 2)) return {VakilPair{a + 1, k / 2}, true};
  return {};
}

// Δ computed as if (a, k) were the pair: k + a(a+1)/2 − S(2^{a+1}k).
Integer unresolved_delta(std::uint64_t a, std::uint64_t k) {
  return f_vakil(VakilPair{a, k}) - class_stats(vakil_bracket(a, k)).S;
}

struct KRange {
  std::uint64_t begin = 0;
  std::uint64_t end = 0;
  VakilPair first;
};

KRange table_range(std::size_t d) {
  if (d < kMinTableDimension) {
    throw std::domain_error("Vakil tables start at dimension 5; smaller dimensions use the "
                            "small-dimension constants");
  }
  std::uint64_t x = ceil_log2(d);
  std::uint64_t half = std::uint64_t{1} << (x - 1);
  KRange r;
  r.first = vakil_of_power(d);
  r.begin = r.first.k;
  // At half + x == d the classification also has members with k in [2^x, 2^{x+1}).
  r.end = (half + x <= d) ? (std::uint64_t{1} << (x + 1)) : (std::uint64_t{1} << x);
  return r;
}

}  // namespace

DeltaTable enumerate_vakil(std::size_t d) {
  KRange range = table_range(d);
  DeltaTable table;
  table.dimension = d;

  std::int64_t a = static_cast<std::int64_t>(range.first.a);
  std::uint64_t k = range.begin;
  Integer running = unresolved_delta(static_cast<std::uint64_t>(a), k);

  while (k < range.end) {
    DeltaRow row;
    row.a = static_cast<std::uint64_t>(a);
    row.k = k;
    row.dimension = d;
    PairResolution res = resolve_pair(row.a, k);
    row.pair = res.pair;
    row.halved = res.halved;
    row.skip = !res.pair || res.pair->k % 4 != 0;
    if (!row.skip) {
      Integer value = running;
      if (res.halved) value += Integer(row.a + 1) - Integer(k / 2);
      row.delta = value;
    }

    std::uint64_t t = trailing_ones_u64(k / 4);
    std::uint64_t next = k + 4;
    if (next < range.end) {
      row.t_k4 = t;
      if (is_pow2(next)) {
        a = a - static_cast<std::int64_t>(t);
        if (a < 0) throw std::logic_error("enumerate_vakil: negative a");
        running = unresolved_delta(static_cast<std::uint64_t>(a), next);
      } else {
        a = a - static_cast<std::int64_t>(t) + 1;
        running += Integer((t + 1) * (t + 2) / 2);
      }
    }
    table.rows.push_back(std::move(row));
    k = next;
  }
  return table;
}

std::shared_ptr<const DeltaTable> delta_table(std::size_t d) {
  static std::shared_mutex mutex;
  static std::map<std::size_t, std::shared_ptr<const DeltaTable>> cache;
  {
    std::shared_lock lock(mutex);
    if (auto it = cache.find(d); it != cache.end()) return it->second;
  }
  auto built = std::make_shared<const DeltaTable>(enumerate_vakil(d));
  std::unique_lock lock(mutex);
  return cache.try_emplace(d, std::move(built)).first->second;
}

std::vector<VakilMember> vakil_numbers(std::size_t d) {
  KRange range = table_range(d);
  std::vector<VakilMember> out;
  std::int64_t a = static_cast<std::int64_t>(range.first.a);
  for (std::uint64_t k = range.begin; k < range.end; ++k) {
    if (a < 0) throw std::logic_error("vakil_numbers: negative a");
    PairResolution res = resolve_pair(static_cast<std::uint64_t>(a), k);
    if (res.pair) out.push_back({static_cast<std::uint64_t>(a), k, *res.pair});
    std::int64_t carry = is_pow2(k + 1) ? 0 : 1;
    a = a - static_cast<std::int64_t>(trailing_ones_u64(k)) + carry;
  }
  return out;
}

ClosestVakil closest_vakil(const Bracket& b) {
  Bracket cls = b.without_tail();
  const std::size_t d = cls.dimension();
  if (d < kMinTableDimension) throw std::domain_error("closest_vakil: dimension must be >= 5");
  if (is_vakil(cls)) throw std::domain_error("closest_vakil: input is already a Vakil class");

  auto table = delta_table(d);

  // suffix[i] = Σ_{j>=i} α_j, indexed by position.
  std::vector<Integer> suffix(d + 2, Integer(0));
  for (std::size_t j = d; j >= 1; --j) suffix[j] = suffix[j + 1] + cls.alpha(j);

  std::optional<ClosestVakil> best;
  for (const auto& row : table->rows) {
    if (row.skip) continue;
    // Row entries below position a+1 are zero, so checking positions d … a+1 suffices.
    auto top = row.top_entries();
    Integer need = 0;
    bool reachable = true;
    for (std::size_t i = 0; i < top.size(); ++i) {
      need += top[i];
      if (suffix[d - i] < need) {
        reachable = false;
        break;
      }
    }
    if (!reachable) continue;
    if (!best || *row.delta > best->delta) {
      best = ClosestVakil{row, *row.delta, 1};
    } else if (*row.delta == best->delta) {
      ++best->ties;
    }
  }
  if (!best) throw NoReachableRow("closest_vakil: no reachable 4|k row in the table");
  return *best;
}

std::uint64_t h_index(std::uint64_t m, std::uint64_t k) {
  if (m < 1) throw std::domain_error("h_index: m must be >= 1");
  const Integer base = pow2_integer(static_cast<std::size_t>(m)) - 1;
  if (base + 1 >= Integer(k)) throw std::domain_error("h_index: requires 2^m < k");
  std::uint64_t h = 1;
  while (base * pow2_integer(static_cast<std::size_t>(h)) + Integer(h + 2) <= Integer(k)) ++h;
  return h;
}

Integer f_zero_tail(std::uint64_t m, std::uint64_t i) {
  if (i < 2) throw std::domain_error("f_zero_tail: i must be >= 2");
  std::uint64_t h = h_index(m, i);
  Integer rest(i - h);
  return (pow2_integer(static_cast<std::size_t>(m)) - 1) * pow2_integer(static_cast<std::size_t>(h)) +
         rest * (rest - 1) / 2;
}

Integer delta_stabilized(std::uint64_t n, std::uint64_t i) {
  if (i < 2) throw std::domain_error("delta_stabilized: i must be >= 2");
  if (n < 1) throw std::domain_error("delta_stabilized: n must be >= 1");
  if (i == 2) return small_dimension_delta(2);
  std::uint64_t m = n;
  if (n >= 64 || (std::uint64_t{1} << n) >= i) {
    m = floor_log2(i) - 1;
    if (m < 1) m = 1;  // i = 3: the first Vakil class on the way down is [1,0,0]
  }
  return f_zero_tail(m, i) - Integer(m) * Integer(i);
}

Integer small_dimension_delta(std::size_t k) {
  static constexpr int kDelta[] = {0, 0, 0, 1, 2, 4, 7};
  if (k < 1 || k > 7) throw std::domain_error("small_dimension_delta: k must be in 1..7");
  return kDelta[k - 1];
}

Integer top_heavy_delta(std::size_t k) {
  if (k < 4) throw std::domain_error("top_heavy_delta: k must be >= 4");
  std::uint64_t m = floor_log2(k) - 1;
  std::uint64_t h = h_index(m, k);
  Integer rest(k - h);
  return (pow2_integer(static_cast<std::size_t>(m)) - 1) * pow2_integer(static_cast<std::size_t>(h)) +
         rest * (rest - 1) / 2 - Integer(m) * Integer(k);
}

std::string to_string(FormulaMethod m) {
  switch (m) {
    case FormulaMethod::zero_class:
      return "zero-class";
    case FormulaMethod::vakil:
      return "vakil";
    case FormulaMethod::small_dimension:
      return "small-dimension";
    case FormulaMethod::top_heavy:
      return "top-heavy";
    case FormulaMethod::closest_vakil:
      return "closest-vakil";
    case FormulaMethod::reduction:
      return "reduction";
  }
  return "unknown";
}

FormulaResult f_formula_detail(const Input& in) {
  Bracket cls = class_bracket(in);
  FormulaResult r;
  r.stats = class_stats(cls);
  const std::size_t d = r.stats.dimension;

  if (cls.is_zero_class()) {
    r.method = FormulaMethod::zero_class;
  } else if (auto pair = is_vakil(cls)) {
    r.method = FormulaMethod::vakil;
    r.pair = pair;
    r.delta = f_vakil(*pair) - r.stats.S;
  } else if (d <= 7) {
    r.method = FormulaMethod::small_dimension;
    r.delta = small_dimension_delta(d);
  } else if (cls.alpha(d) >= Integer(floor_log2(d) - 1)) {
    r.method = FormulaMethod::top_heavy;
    r.delta = top_heavy_delta(d);
  } else {
    // The closest 4|k row can fall short of the reduction Δ.
    r.reduction = reduce_to_first_vakil(cls);
    r.delta = f_vakil(r.reduction->pair) - class_stats(r.reduction->vakil).S;
    r.method = FormulaMethod::reduction;
    try {
      r.closest = closest_vakil(cls);
      if (r.closest->delta == r.delta) r.method = FormulaMethod::closest_vakil;
    } catch (const NoReachableRow&) {
    }
  }
  r.f = r.stats.S + r.delta;
  return r;
}

}  // namespace binclass
