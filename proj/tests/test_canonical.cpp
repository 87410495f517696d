#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "binclass/canonical.hpp"
#include "binclass/graph.hpp"
#include "binclass/vakil.hpp"

#include <array>
#include <map>

using namespace binclass;

namespace {

constexpr std::array<std::uint64_t, 20> kTable1G{0, 0, 1, 1, 2, 2, 2, 2, 3, 3,
                                                 3, 3, 4, 4, 4, 4, 5, 5, 5, 5};

// l(β) of a reduced class.
std::size_t beta_length(const Nat& n) { return proper_form(n).p; }

}  // namespace

TEST_CASE("proper_form") {
  auto check = [](std::uint64_t n, std::uint64_t m, std::size_t p, std::uint64_t k) {
    ProperForm pf = proper_form(Nat(n));
    CHECK(pf.m == m);
    CHECK(pf.p == p);
    CHECK(pf.k == Nat(k));
  };
  check(10, 2, 2, 2);
  check(16, 2, 3, 0);
  check(19, 2, 3, 3);
  CHECK_THROWS_AS(proper_form(Nat(0)), std::domain_error);
}

TEST_CASE("proper form is unique below 2^16") {
  for (std::uint64_t n = 1; n < (1u << 16); ++n) {
    std::size_t found = 0;
    std::size_t len = Nat(n).bit_length();
    for (std::uint64_t p = 1; p <= len; ++p) {
      std::uint64_t m = n >> p;
      if (p - 1 <= m && m <= 2 * p - 1) ++found;
    }
    REQUIRE(found == 1);
    ProperForm pf = proper_form(Nat(n));
    REQUIRE(pf.m * pow2_integer(pf.p) + pf.k.value() == Integer(n));
    REQUIRE(pf.k.value() < pow2_integer(pf.p));
  }
}

TEST_CASE("beta_part and canonical_index") {
  CHECK(beta_part(Nat(473)) == "01100");
  CHECK(beta_part(Nat(236)) == "01100");
  CHECK(beta_part(Nat(10)) == "10");
  CHECK(canonical_index(Nat(473)) == 2);
  CHECK(canonical_index(Nat(236)) == 1);
  CHECK(canonical_index(Nat(10)) == 0);
  CHECK_THROWS_AS(beta_part(Nat(7)), std::domain_error);
  CHECK_THROWS_AS(canonical_index(Nat(0)), std::domain_error);
}

TEST_CASE("canonical path of 473") {
  CanonicalPath p = canonical_path(Nat(473));
  CHECK(p.length() == 13);
  std::vector<Nat> raw;
  for (std::uint64_t v : {473, 469, 467, 459, 455, 423, 407, 399, 335, 303, 287, 223, 191, 127}) {
    raw.push_back(Nat(v));
  }
  CHECK(p.raw == raw);
  CHECK(p.raw_indices.front() == 2);
  CHECK(p.vertices.front() == Nat(236));
  CHECK(p.vertices.back() == Nat(0));
}

TEST_CASE("canonical path of 236 in bracket form") {
  CanonicalPath p = canonical_path(Nat(236));
  std::vector<std::string> trace;
  for (const auto& v : p.vertices) trace.push_back(bracket_of(v).to_string());
  std::vector<std::string> expected{"[3,2,0]", "[3,1,1]", "[3,1,0]", "[3,0,1]", "[3,0,0]",
                                    "[2,1,0]", "[2,0,1]", "[2,0,0]", "[1,1,0]", "[1,0,1]",
                                    "[1,0,0]", "[2]",     "[1]",     "[0]"};
  CHECK(trace == expected);
  for (std::size_t i = 0; i < p.length(); ++i) {
    CHECK(p.vertices[i + 1] == reduce_class(subtract_pow2(p.vertices[i], p.indices[i])));
  }
}

TEST_CASE("trivial canonical paths") {
  CanonicalPath p = canonical_path(Nat(7));
  CHECK(p.length() == 0);
  CHECK(p.raw == std::vector<Nat>{Nat(7)});
  CHECK(f_canonical(Nat(0)) == 0);
}

TEST_CASE("f_canonical examples") {
  CHECK(f_canonical(Nat(473)) == 13);
  CHECK(f_canonical(Nat(10)) == 3);
  CHECK(f_canonical(Nat(69632)) == 83);
  CHECK_THROWS_AS(f_canonical(Nat(69632), 10), BudgetExceeded);
}

TEST_CASE("canonical agrees with the oracle below 2^15") {
  LongestPathOracle oracle;
  for (std::uint64_t n = 0; n < (1u << 15); ++n) {
    REQUIRE(f_canonical(Nat(n)) == oracle.length(Nat(n)));
  }
}

TEST_CASE("g and Steenrod length") {
  for (std::uint64_t n = 0; n < kTable1G.size(); ++n) CHECK(g_of(Nat(n)) == kTable1G[n]);
  CHECK(g_of(Nat(10)) == 3);
  CHECK(g_of(Nat(15)) == 4);
  CHECK(g_of(Nat(19)) == 5);
  CHECK(steenrod_length(Nat(2)) == 2);
  CHECK(steenrod_length(Nat(19)) == 6);
  CHECK(steenrod_length(Nat(0)) == 1);
}

TEST_CASE("g is the running maximum of f below 2^14") {
  std::uint64_t running = 0;
  for (std::uint64_t n = 0; n < (1u << 14); ++n) {
    running = std::max(running, f_canonical(Nat(n)));
    REQUIRE(g_of(Nat(n)) == running);
  }
}

TEST_CASE("frequencies") {
  const std::array<int, 15> expected{2, 2, 4, 4, 4, 8, 8, 8, 8, 16, 16, 16, 16, 16, 32};
  for (std::uint64_t s = 0; s < expected.size(); ++s) CHECK(freq_value(s) == expected[s]);

  // #{n : g(n) < L} by brute force; g is non-decreasing, so scan until it reaches 20.
  std::map<std::uint64_t, std::uint64_t> count;
  for (std::uint64_t n = 0;; ++n) {
    auto g = g_of(Nat(n)).convert_to<std::uint64_t>();
    if (g >= 20) break;
    ++count[g];
  }
  Integer sum = 0;
  std::uint64_t brute = 0;
  for (std::uint64_t l = 0; l <= 20; ++l) {
    CAPTURE(l);
    CHECK(sum == Integer(brute));
    if (l < 20) {
      sum += freq_value(l);
      brute += count[l];
    }
  }
}

TEST_CASE("min_n_with_f") {
  CHECK(min_n_with_f(3) == Nat(8));
  CHECK(min_n_with_f(5) == Nat(16));
  CHECK(min_n_with_f(0) == Nat(0));
  std::map<std::uint64_t, std::uint64_t> first;
  for (std::uint64_t n = 0; n < (1u << 14); ++n) first.try_emplace(f_canonical(Nat(n)), n);
  for (std::uint64_t l = 0; l <= 25; ++l) {
    CAPTURE(l);
    CHECK(min_n_with_f(l) == Nat(first.at(l)));
  }
}

// For a non-Vakil class N_0 ending in b zeros, the canonical path starts
// N_{i+1} = N_i − 2^{b−1−i} for i < b−1 and then reaches N_0/2 − 2^{b−1}.
TEST_CASE("first steps of the canonical path from a non-Vakil class") {
  std::size_t checked = 0;
  for (std::uint64_t v = 2; v < (1u << 14); ++v) {
    Nat n0(v);
    if (reduce_class(n0) != n0 || is_vakil(n0)) continue;
    const std::size_t b = n0.trailing_zeros();
    const std::size_t l = beta_length(n0);
    REQUIRE(b < l);
    CanonicalPath p = canonical_path(n0);
    REQUIRE(p.length() >= b);
    for (std::size_t i = 0; i + 1 < b; ++i) {
      CAPTURE(v);
      CAPTURE(i);
      REQUIRE(p.vertices[i + 1] == Nat(p.vertices[i].value() - pow2_integer(b - 1 - i)));
      REQUIRE(beta_length(p.vertices[i + 1]) == l);
    }
    const Nat& nb = p.vertices[b];
    REQUIRE(nb == Nat(n0.value() / 2 - pow2_integer(b - 1)));
    if (!nb.is_zero()) {
      std::size_t lb = beta_length(nb);
      REQUIRE(lb <= l);
      REQUIRE(lb + 1 >= l);
    }
    ++checked;
  }
  CHECK(checked > 1000);
}
