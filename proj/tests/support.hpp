#pragma once

#include "binclass/graph.hpp"
#include "binclass/numrep.hpp"
#include "binclass/vakil.hpp"

#include <cstdint>
#include <optional>
#include <random>
#include <set>
#include <vector>

namespace binclass::testing {

inline Bracket br(std::vector<int> written, int tail = 0) {
  return Bracket(std::vector<Integer>(written.begin(), written.end()), tail);
}

inline Bracket zero_padded(std::vector<int> top, std::size_t dimension) {
  std::vector<Integer> t(top.begin(), top.end());
  return Bracket::with_top(t, dimension);
}

// The two non-Vakil worked examples of dimensions 53 and 16.
inline Bracket dim53_example() { return zero_padded({1, 1, 2, 1, 3, 0, 0, 0, 2, 4}, 53); }
inline Bracket dim16_example() { return br({1, 3, 0, 1, 1, 2, 1, 3, 2, 4, 1, 0, 1, 7, 0, 0}); }

// Vakil by definition: n̄ = 2^{a+1}k with a <= k <= 2a+1 for some a.
inline std::optional<VakilPair> vakil_by_definition(std::uint64_t n) {
  if (n == 0) return std::nullopt;
  for (std::uint64_t a = 0; (n >> (a + 1)) << (a + 1) == n; ++a) {
    std::uint64_t k = n >> (a + 1);
    if (a <= k && k <= 2 * a + 1) return VakilPair{a, k};
  }
  return std::nullopt;
}

inline std::vector<std::uint64_t> classes_below(std::uint64_t limit) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t v = 0; v < limit; ++v) {
    if (reduce_class(Nat(v)) == Nat(v)) out.push_back(v);
  }
  return out;
}

/// Every d-Vakil number found by scanning the even numbers below 2^d · 2d.
inline std::set<Nat> brute_vakil_set(std::size_t d) {
  std::set<Nat> out;
  std::uint64_t limit = (std::uint64_t{1} << d) * 2 * d;
  for (std::uint64_t v = 2; v < limit; v += 2) {
    if (zeros_below_top(v) == d && vakil_by_definition(v)) out.insert(Nat(v));
  }
  return out;
}

inline std::set<Nat> enumerated_vakil_set(std::size_t d) {
  std::set<Nat> out;
  for (const auto& m : vakil_numbers(d)) out.insert(m.value());
  return out;
}

struct ReachStats {
  std::size_t pairs = 0;
  std::size_t criterion_failures = 0;
  std::size_t monotonicity_failures = 0;
};

/// can_reach against the class graph, and Δ order on reachable pairs, over
/// every equal-dimension pair of nonzero classes below `limit`.
inline ReachStats check_reachability(std::uint64_t limit) {
  const auto classes = classes_below(limit);
  LongestPathOracle oracle;
  ReachStats st;
  for (std::uint64_t src : classes) {
    if (src == 0) continue;
    Digraph g = build_graph(Nat(src), true);
    std::set<std::uint64_t> reach;
    for (const auto& v : g.vertices) reach.insert(*v.to_u64());
    Bracket sb = bracket_of(Nat(src));
    Integer delta_src = Integer(oracle.length(Nat(src))) - class_stats(sb).S;
    for (std::uint64_t dst : classes) {
      if (dst == 0 || dst > src) continue;
      Bracket db = bracket_of(Nat(dst));
      if (db.dimension() != sb.dimension()) continue;
      bool expected = reach.count(dst) > 0;
      if (can_reach(sb, db) != expected) ++st.criterion_failures;
      if (expected) {
        Integer delta_dst = Integer(oracle.length(Nat(dst))) - class_stats(db).S;
        if (delta_src < delta_dst) ++st.monotonicity_failures;
      }
      ++st.pairs;
    }
  }
  return st;
}

struct PathLawStats {
  std::size_t pairs = 0;
  std::size_t failures = 0;
};

/// Picks `count` random equal-dimension reachable pairs below 2^11 and checks
/// that every path between them has length path_length_between.
inline PathLawStats check_path_length_law(std::size_t count, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::uint64_t> pick(1, (1u << 11) - 1);
  PathLawStats st;
  while (st.pairs < count) {
    Nat src = reduce_class(Nat(pick(rng)));
    if (src.is_zero()) continue;
    Digraph g = build_graph(src, true);
    Bracket sb = bracket_of(src);
    std::vector<std::size_t> same_dim;
    for (std::size_t i = 0; i < g.vertices.size(); ++i) {
      if (!g.vertices[i].is_zero() && bracket_of(g.vertices[i]).dimension() == sb.dimension()) {
        same_dim.push_back(i);
      }
    }
    std::size_t target =
        same_dim[std::uniform_int_distribution<std::size_t>(0, same_dim.size() - 1)(rng)];

    // Path lengths from each vertex to the target; vertices are sorted
    // descending, so every edge points to a later index.
    std::vector<std::set<std::size_t>> lengths(g.vertices.size());
    lengths[target].insert(0);
    for (std::size_t i = target; i-- > 0;) {
      for (const auto& e : g.edges) {
        if (e.from != i) continue;
        for (std::size_t l : lengths[e.to]) lengths[i].insert(l + 1);
      }
    }
    const auto& from_root = lengths[g.index_of(src)];
    Integer predicted = path_length_between(sb, bracket_of(g.vertices[target]));
    if (from_root.size() != 1 || Integer(*from_root.begin()) != predicted) ++st.failures;
    ++st.pairs;
  }
  return st;
}

}  // namespace binclass::testing
