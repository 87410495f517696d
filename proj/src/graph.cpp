#include "binclass/graph.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>
#include <sstream>
#include <unordered_set>

namespace binclass {

std::size_t default_vertex_cap() {
  if (const char* env = std::getenv("BINCLASS_VERTEX_CAP")) {
    char* end = nullptr;
    unsigned long long v = std::strtoull(env, &end, 10);
    if (end != env && *end == '\0' && v > 0) return static_cast<std::size_t>(v);
  }
  return kDefaultVertexCap;
}

namespace {

[[noreturn]] void cap_exceeded(std::size_t cap) {
  throw BudgetExceeded("vertex cap of " + std::to_string(cap) +
                       " exceeded; use the canonical or formula method instead");
}

}  // namespace

std::size_t Digraph::index_of(const Nat& v) const {
  auto it = std::lower_bound(vertices.begin(), vertices.end(), v,
                             [](const Nat& a, const Nat& b) { return a > b; });
  if (it == vertices.end() || *it != v) throw std::out_of_range("vertex not in graph");
  return static_cast<std::size_t>(it - vertices.begin());
}

std::vector<std::size_t> Digraph::successors(std::size_t vertex) const {
  std::vector<std::size_t> out;
  for (const auto& e : edges) {
    if (e.from == vertex) out.push_back(e.to);
  }
  return out;
}

std::vector<std::size_t> zero_positions(const Nat& n) {
  std::vector<std::size_t> out;
  std::size_t len = n.bit_length();
  for (std::size_t s = 0; s + 1 < len; ++s) {
    if (!n.bit(s)) out.push_back(s);
  }
  return out;
}

std::vector<Nat> successors(const Nat& n, bool reduced) {
  std::vector<Nat> out;
  for (std::size_t s : zero_positions(n)) {
    Nat next = subtract_pow2(n, s);
    out.push_back(reduced ? reduce_class(next) : std::move(next));
  }
  return out;
}

Digraph build_graph(const Nat& n, bool reduced, std::size_t vertex_cap) {
  Digraph g;
  g.reduced = reduced;
  g.root = reduced ? reduce_class(n) : n;

  std::unordered_set<Nat, NatHash> seen{g.root};
  std::vector<Nat> stack{g.root};
  while (!stack.empty()) {
    Nat v = std::move(stack.back());
    stack.pop_back();
    for (auto& w : successors(v, reduced)) {
      if (seen.insert(w).second) {
        if (seen.size() > vertex_cap) cap_exceeded(vertex_cap);
        stack.push_back(std::move(w));
      }
    }
  }

  g.vertices.assign(seen.begin(), seen.end());
  std::sort(g.vertices.begin(), g.vertices.end(), std::greater<>());

  // Distinct s can land in the same class; keep the smallest s per edge.
  std::map<std::pair<std::size_t, std::size_t>, std::size_t> edge_s;
  for (std::size_t i = 0; i < g.vertices.size(); ++i) {
    const Nat& v = g.vertices[i];
    for (std::size_t s : zero_positions(v)) {
      Nat w = subtract_pow2(v, s);
      if (reduced) w = reduce_class(w);
      edge_s.try_emplace({i, g.index_of(w)}, s);
    }
  }
  for (const auto& [key, s] : edge_s) g.edges.push_back({key.first, key.second, s});
  return g;
}

const LongestPathOracle::Entry& LongestPathOracle::solve(const Nat& n) {
  if (auto it = memo_.find(n); it != memo_.end()) return it->second;

  struct Frame {
    Nat v;
    std::vector<std::size_t> zeros;
    std::size_t next = 0;
    Entry best;
  };
  std::vector<Frame> stack;
  stack.push_back({n, zero_positions(n), 0, {}});
  while (!stack.empty()) {
    Frame& f = stack.back();
    if (f.next == f.zeros.size()) {
      memo_.emplace(std::move(f.v), f.best);
      stack.pop_back();
      continue;
    }
    std::size_t s = f.zeros[f.next];
    Nat child = subtract_pow2(f.v, s);
    auto it = memo_.find(child);
    if (it == memo_.end()) {
      if (memo_.size() + stack.size() >= vertex_cap_) cap_exceeded(vertex_cap_);
      auto zeros = zero_positions(child);
      stack.push_back({std::move(child), std::move(zeros), 0, {}});
      continue;
    }
    // s ascends, so ">=" hands ties to the larger s, i.e. the smaller successor.
    std::size_t candidate = it->second.length + 1;
    if (candidate >= f.best.length) {
      f.best.length = candidate;
      f.best.next_s = s;
    }
    ++f.next;
  }
  return memo_.at(n);
}

std::size_t LongestPathOracle::length(const Nat& n) { return solve(n).length; }

LongestPathResult LongestPathOracle::longest_path(const Nat& n) {
  LongestPathResult r;
  r.length = solve(n).length;
  Nat v = n;
  r.witness.push_back(v);
  while (true) {
    const Entry& e = memo_.at(v);
    if (e.length == 0) break;
    v = subtract_pow2(v, e.next_s);
    r.witness.push_back(v);
  }
  return r;
}

std::vector<std::vector<Nat>> LongestPathOracle::all_longest_paths(const Nat& n,
                                                                    std::size_t limit) {
  solve(n);
  std::vector<std::vector<Nat>> out;
  std::vector<Nat> path{n};

  auto extend = [&](auto&& self) -> void {
    if (out.size() >= limit) return;
    const Nat v = path.back();
    std::size_t len = memo_.at(v).length;
    if (len == 0) {
      out.push_back(path);
      return;
    }
    auto zeros = zero_positions(v);
    for (auto it = zeros.rbegin(); it != zeros.rend(); ++it) {
      Nat w = subtract_pow2(v, *it);
      if (solve(w).length + 1 != len) continue;
      path.push_back(std::move(w));
      self(self);
      path.pop_back();
    }
  };
  extend(extend);
  return out;
}

bool reachable_bfs(const Nat& src, const Nat& dst, std::size_t vertex_cap) {
  Nat from = reduce_class(src);
  Nat to = reduce_class(dst);
  if (to > from) return false;
  std::unordered_set<Nat, NatHash> seen{from};
  std::vector<Nat> stack{from};
  while (!stack.empty()) {
    Nat v = std::move(stack.back());
    stack.pop_back();
    if (v == to) return true;
    for (auto& w : successors(v, true)) {
      if (w < to) continue;
      if (seen.insert(w).second) {
        if (seen.size() > vertex_cap) cap_exceeded(vertex_cap);
        stack.push_back(std::move(w));
      }
    }
  }
  return false;
}

bool reachable_bfs(const Bracket& src, const Bracket& dst, std::size_t vertex_cap) {
  return reachable_bfs(nat_of(src.without_tail()), nat_of(dst.without_tail()), vertex_cap);
}

std::string export_dot(const Digraph& g, Labeling labeling) {
  auto label = [&](const Nat& v) {
    switch (labeling) {
      case Labeling::binary:
        return binary_label(v);
      case Labeling::bracket:
        return bracket_of(v).to_string();
      case Labeling::integer:
        break;
    }
    return v.to_string();
  };

  std::ostringstream out;
  out << "digraph \"T_" << g.root.to_string() << (g.reduced ? "_bar" : "") << "\" {\n";
  for (const auto& v : g.vertices) {
    out << "  \"" << v.to_string() << "\" [label=\"" << label(v) << "\"];\n";
  }
  for (const auto& e : g.edges) {
    out << "  \"" << g.vertices[e.from].to_string() << "\" -> \"" << g.vertices[e.to].to_string()
        << "\";\n";
  }
  out << "}\n";
  return out.str();
}

}  // namespace binclass
