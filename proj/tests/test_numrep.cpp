#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "binclass/graph.hpp"
#include "binclass/numrep.hpp"

using namespace binclass;

namespace {

Bracket br(std::vector<int> written, int tail = 0) {
  std::vector<Integer> w(written.begin(), written.end());
  return Bracket(w, tail);
}

}  // namespace

TEST_CASE("parse_input accepts decimal, binary, hex and brackets") {
  CHECK(std::get<Nat>(parse_input("473")) == Nat(473));
  CHECK(std::get<Nat>(parse_input("0b1010")) == Nat(10));
  CHECK(std::get<Nat>(parse_input("0x1d9")) == Nat(473));
  CHECK(std::get<Nat>(parse_input("000123")) == Nat(123));

  Bracket b = std::get<Bracket>(parse_input("[3,2,0]1"));
  CHECK(b == br({3, 2, 0}, 1));
  CHECK(input_value(Input{b}) == Nat(473));
  CHECK(std::get<Bracket>(parse_input("[0]")).is_zero_class());
  CHECK(std::get<Bracket>(parse_input("[ 1, 1 ]")) == br({1, 1}));
}

TEST_CASE("parse_input rejects malformed text") {
  for (const char* bad : {"", "abc", "0b", "0b102", "[", "[1,2", "[0,1]", "[1,-1]", "[1,,2]",
                          "[1]x", "-5", "[]"}) {
    CAPTURE(bad);
    CHECK_THROWS_AS(parse_input(bad), ParseError);
  }
}

TEST_CASE("bracket entries can exceed machine words") {
  Bracket b = parse_bracket("[123456789012345678901234567890,0]");
  CHECK(class_stats(b).S == Integer("246913578024691357802469135780"));
  CHECK(nat_bit_length(b) == Integer("123456789012345678901234567892"));
}

TEST_CASE("reduce_class") {
  CHECK(reduce_class(Nat(473)) == Nat(236));
  CHECK(reduce_class(Nat(7)) == Nat(0));
  CHECK(reduce_class(Nat(10)) == Nat(10));
}

TEST_CASE("bracket_of and nat_of") {
  CHECK(bracket_of(Nat(473)) == br({3, 2, 0}, 1));
  CHECK(bracket_of(Nat(10)) == br({1, 1}));
  CHECK(bracket_of(Nat(8)) == br({1, 0, 0}));
  CHECK(nat_of(br({3, 2, 0})) == Nat(236));
  CHECK(nat_of(Bracket()) == Nat(0));
  CHECK(nat_of(br({1, 1})) == Nat(10));
  CHECK(bracket_of(Nat(7)).is_zero_class());
  CHECK(bracket_of(Nat(7)).tail() == 3);
  CHECK(br({3, 2, 0}, 1).to_string() == "[3,2,0]1");
  CHECK(Bracket().to_string() == "[0]");
}

TEST_CASE("class_stats") {
  ClassStats s = class_stats(br({3, 2, 0}));
  CHECK(s.S == 13);
  CHECK(s.S_prime == 5);
  CHECK(s.dimension == 3);

  ClassStats z = class_stats(Bracket());
  CHECK(z.S == 0);
  CHECK(z.S_prime == 0);
  CHECK(z.dimension == 0);

  Bracket dim24 = br({6, 2, 1, 0, 0, 0, 0, 9, 0, 0, 0, 0, 5, 0, 0, 0, 2, 0, 0, 0, 0, 0, 0, 0});
  CHECK(class_stats(dim24).S == 441);
  CHECK(bracket_of(reduce_class(Nat::parse("8923773549686799"))) == dim24);
}

TEST_CASE("subtract_pow2") {
  CHECK(subtract_pow2(Nat(10), 0) == Nat(9));
  CHECK(subtract_pow2(Nat(10), 2) == Nat(6));
  CHECK(subtract_pow2(Nat(8), 2) == Nat(4));
  CHECK_THROWS_AS(subtract_pow2(Nat(10), 1), std::domain_error);
  CHECK_THROWS_AS(subtract_pow2(Nat(10), 4), std::domain_error);
}

TEST_CASE("round trip and zero-count law below 2^20") {
  for (std::uint64_t v = 0; v < (1u << 20); ++v) {
    Nat n(v);
    Bracket b = bracket_of(n);
    REQUIRE(nat_of(b) == n);
    Nat r = reduce_class(n);
    REQUIRE(reduce_class(r) == r);
    REQUIRE(bracket_of(r).dimension() == zeros_below_top(r.to_u64().value()));
    REQUIRE(nat_bit_length(b) == Integer(n.bit_length()));
  }
}

TEST_CASE("text forms round trip") {
  for (std::uint64_t v : {0ull, 1ull, 2ull, 473ull, 65535ull, 8923773549686799ull}) {
    Nat n(v);
    for (int radix : {2, 10, 16}) {
      CHECK(Nat::parse(n.to_literal(radix)) == n);
    }
  }
  Nat big = Nat::pow2(300);
  CHECK(Nat::parse(big.to_string()) == big);
}

TEST_CASE("subtract_pow2 matches arithmetic below 2^16") {
  for (std::uint64_t v = 1; v < (1u << 16); ++v) {
    Nat n(v);
    std::size_t len = n.bit_length();
    for (std::size_t s = 0; s + 1 < len; ++s) {
      if (n.bit(s)) continue;
      REQUIRE(subtract_pow2(n, s) == Nat(v - (std::uint64_t{1} << s)));
    }
  }
}

TEST_CASE("f is constant on binary classes below 2^12") {
  LongestPathOracle oracle;
  for (std::uint64_t v = 0; v < (1u << 12); ++v) {
    REQUIRE(oracle.length(Nat(v)) == oracle.length(reduce_class(Nat(v))));
  }
}
