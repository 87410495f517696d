#include "binclass/nat.hpp"

#include <algorithm>
#include <bit>
#include <cctype>
#include <vector>

namespace binclass {

namespace mp = boost::multiprecision;

Nat::Nat(Integer v) : value_(std::move(v)) {
  if (value_.sign() < 0) throw std::invalid_argument("Nat: negative value");
}

Nat Nat::pow2(std::size_t s) { return Nat(pow2_integer(s)); }

Integer pow2_integer(std::size_t s) {
  Integer v = 0;
  mp::bit_set(v, static_cast<unsigned>(s));
  return v;
}

namespace {

Integer from_binary_digits(std::string_view digits) {
  std::vector<std::uint64_t> limbs((digits.size() + 63) / 64, 0);
  for (std::size_t i = 0; i < digits.size(); ++i) {
    std::size_t pos = digits.size() - 1 - i;
    if (digits[i] == '1') limbs[pos / 64] |= std::uint64_t{1} << (pos % 64);
  }
  Integer v;
  mp::import_bits(v, limbs.begin(), limbs.end(), 64, false);
  return v;
}

void require_digits(std::string_view digits, bool (*ok)(char), std::string_view what) {
  if (digits.empty()) throw ParseError("empty " + std::string(what) + " literal");
  for (char c : digits) {
    if (!ok(c)) throw ParseError("invalid character '" + std::string(1, c) + "' in " +
                                 std::string(what) + " literal");
  }
}

}  // namespace

Nat Nat::parse(std::string_view text) {
  if (text.size() >= 2 && text[0] == '0' && (text[1] == 'b' || text[1] == 'B')) {
    auto digits = text.substr(2);
    require_digits(digits, [](char c) { return c == '0' || c == '1'; }, "binary");
    return Nat(from_binary_digits(digits));
  }
  if (text.size() >= 2 && text[0] == '0' && (text[1] == 'x' || text[1] == 'X')) {
    auto digits = text.substr(2);
    require_digits(digits, [](char c) { return std::isxdigit(static_cast<unsigned char>(c)) != 0; },
                   "hexadecimal");
    return Nat(Integer("0x" + std::string(digits)));
  }
  require_digits(text, [](char c) { return c >= '0' && c <= '9'; }, "decimal");
  // cpp_int treats a leading 0 as octal.
  auto first = text.find_first_not_of('0');
  if (first == std::string_view::npos) return Nat{};
  return Nat(Integer(std::string(text.substr(first))));
}

bool Nat::bit(std::size_t i) const { return mp::bit_test(value_, static_cast<unsigned>(i)); }

std::size_t Nat::bit_length() const {
  return value_.is_zero() ? 0 : static_cast<std::size_t>(mp::msb(value_)) + 1;
}

std::size_t Nat::trailing_ones() const {
  Integer next = value_ + 1;
  return static_cast<std::size_t>(mp::lsb(next));
}

std::size_t Nat::trailing_zeros() const {
  return value_.is_zero() ? 0 : static_cast<std::size_t>(mp::lsb(value_));
}

std::size_t Nat::popcount() const {
  const auto& be = value_.backend();
  std::size_t count = 0;
  for (std::size_t i = 0; i < be.size(); ++i) count += std::popcount(be.limbs()[i]);
  return count;
}

Nat Nat::shr(std::size_t s) const { return Nat(Integer(value_ >> s)); }
Nat Nat::shl(std::size_t s) const { return Nat(Integer(value_ << s)); }

Nat Nat::low_bits(std::size_t count) const {
  if (count >= bit_length()) return *this;
  Integer mask = pow2_integer(count) - 1;
  return Nat(Integer(value_ & mask));
}

std::optional<std::uint64_t> Nat::to_u64() const {
  if (bit_length() > 64) return std::nullopt;
  return value_.convert_to<std::uint64_t>();
}

std::string Nat::to_string(int radix) const {
  switch (radix) {
    case 10:
      return value_.str();
    case 16: {
      if (value_.is_zero()) return "0";
      std::string s = value_.str(0, std::ios_base::hex);
      std::transform(s.begin(), s.end(), s.begin(),
                     [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
      return s;
    }
    case 2: {
      std::size_t len = bit_length();
      if (len == 0) return "0";
      std::string s(len, '0');
      for (std::size_t i = 0; i < len; ++i) {
        if (bit(i)) s[len - 1 - i] = '1';
      }
      return s;
    }
    default:
      throw std::invalid_argument("unsupported radix " + std::to_string(radix));
  }
}

std::string Nat::to_literal(int radix) const {
  if (radix == 2) return "0b" + to_string(2);
  if (radix == 16) return "0x" + to_string(16);
  return to_string(radix);
}

std::size_t Nat::hash() const {
  const auto& be = value_.backend();
  std::size_t h = be.size();
  for (std::size_t i = 0; i < be.size(); ++i) {
    h ^= std::hash<std::uint64_t>{}(be.limbs()[i]) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  }
  return h;
}

std::size_t ceil_log2(std::uint64_t d) {
  if (d <= 1) return 0;
  return static_cast<std::size_t>(std::bit_width(d - 1));
}

std::size_t floor_log2(std::uint64_t d) {
  if (d == 0) throw std::invalid_argument("floor_log2(0)");
  return static_cast<std::size_t>(std::bit_width(d) - 1);
}

bool is_pow2(std::uint64_t v) { return std::has_single_bit(v); }

std::size_t trailing_ones_u64(std::uint64_t v) { return static_cast<std::size_t>(std::countr_one(v)); }

std::size_t zeros_below_top(std::uint64_t v) {
  if (v == 0) return 0;
  return static_cast<std::size_t>(std::bit_width(v)) - static_cast<std::size_t>(std::popcount(v));
}

std::string to_string(const Integer& v) { return v.str(); }

}  // namespace binclass
