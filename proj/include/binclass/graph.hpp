#pragma once

#include "binclass/nat.hpp"
#include "binclass/numrep.hpp"

#include <cstddef>
#include <string>
#include <unordered_map>
#include <vector>

namespace binclass {

inline constexpr std::size_t kDefaultVertexCap = 5'000'000;

/// BINCLASS_VERTEX_CAP if set and valid, else kDefaultVertexCap.
std::size_t default_vertex_cap();

struct Edge {
  std::size_t from = 0;  // vertex indices
  std::size_t to = 0;
  std::size_t s = 0;  // subtracted power, in the coordinates of the source vertex
};

// Reachable subgraph from `root`. Every edge strictly decreases the value, so
// the graph is acyclic. Vertices are stored in descending value order.
struct Digraph {
  Nat root;
  bool reduced = false;
  std::vector<Nat> vertices;
  std::vector<Edge> edges;  // sorted by (from, to)

  std::size_t index_of(const Nat& v) const;  // throws std::out_of_range
  std::vector<std::size_t> successors(std::size_t vertex) const;
};

/// Positions s of the zero bits of n strictly below its top set bit.
std::vector<std::size_t> zero_positions(const Nat& n);
/// n − 2^s for each zero position; class-reduced when `reduced`.
std::vector<Nat> successors(const Nat& n, bool reduced);

/// T_n, or T_n̄ when `reduced` (root n̄, every vertex class-reduced).
Digraph build_graph(const Nat& n, bool reduced, std::size_t vertex_cap = default_vertex_cap());

struct LongestPathResult {
  std::size_t length = 0;
  std::vector<Nat> witness;  // root … endpoint; witness.size() == length + 1
};

// Memoized longest-path DP over T_n. The memo is keyed on the exact value and
// persists across queries on the same object; one instance per thread.
class LongestPathOracle {
 public:
  explicit LongestPathOracle(std::size_t vertex_cap = default_vertex_cap())
      : vertex_cap_(vertex_cap) {}

  std::size_t length(const Nat& n);
  /// Ties between equal-length successors go to the smallest successor value.
  LongestPathResult longest_path(const Nat& n);
  /// Every maximal-length path from n, at most `limit` of them. Successors are
  /// tried in ascending value order, so the first path is the witness.
  std::vector<std::vector<Nat>> all_longest_paths(const Nat& n, std::size_t limit = 1000);

  std::size_t memo_size() const { return memo_.size(); }

 private:
  struct Entry {
    std::size_t length = 0;
    std::size_t next_s = 0;  // valid when length > 0
  };
  const Entry& solve(const Nat& n);

  std::size_t vertex_cap_;
  std::unordered_map<Nat, Entry, NatHash> memo_;
};

inline LongestPathResult oracle_f(const Nat& n, std::size_t vertex_cap = default_vertex_cap()) {
  return LongestPathOracle(vertex_cap).longest_path(n);
}

/// Existence of a path from the class of src to the class of dst in the class graph.
bool reachable_bfs(const Bracket& src, const Bracket& dst,
                   std::size_t vertex_cap = default_vertex_cap());
bool reachable_bfs(const Nat& src, const Nat& dst, std::size_t vertex_cap = default_vertex_cap());

enum class Labeling { integer, binary, bracket };

/// Graphviz text: nodes in descending value, one edge per line.
std::string export_dot(const Digraph& g, Labeling labeling);

}  // namespace binclass
