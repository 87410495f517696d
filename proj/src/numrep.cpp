#include "binclass/numrep.hpp"

#include <cctype>
#include <limits>
#include <stdexcept>

namespace binclass {

namespace mp = boost::multiprecision;

namespace {

void check_entries(const std::vector<Integer>& low_first, const Integer& tail) {
  for (const auto& a : low_first) {
    if (a.sign() < 0) throw ParseError("bracket entries must be non-negative");
  }
  if (tail.sign() < 0) throw ParseError("bracket tail must be non-negative");
  if (!low_first.empty() && low_first.back().is_zero()) {
    throw ParseError("leading bracket entry must be >= 1 (write the zero class as [0])");
  }
}

std::size_t to_size(const Integer& v, const char* what) {
  if (v > Integer(std::numeric_limits<std::size_t>::max() / 2)) {
    throw std::length_error(std::string(what) + " too large to expand into bits");
  }
  return v.convert_to<std::size_t>();
}

void set_ones(std::vector<std::uint64_t>& limbs, std::size_t from, std::size_t count) {
  std::size_t pos = from;
  std::size_t end = from + count;
  while (pos < end && pos % 64 != 0) {
    limbs[pos / 64] |= std::uint64_t{1} << (pos % 64);
    ++pos;
  }
  while (pos + 64 <= end) {
    limbs[pos / 64] = ~std::uint64_t{0};
    pos += 64;
  }
  while (pos < end) {
    limbs[pos / 64] |= std::uint64_t{1} << (pos % 64);
    ++pos;
  }
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

Integer parse_count(std::string_view s) {
  s = trim(s);
  if (s.empty()) throw ParseError("empty bracket entry");
  if (s.front() == '-') throw ParseError("bracket entries must be non-negative");
  for (char c : s) {
    if (c < '0' || c > '9') {
      throw ParseError("invalid character '" + std::string(1, c) + "' in bracket entry");
    }
  }
  auto first = s.find_first_not_of('0');
  if (first == std::string_view::npos) return 0;
  return Integer(std::string(s.substr(first)));
}

}  // namespace

Bracket::Bracket(std::vector<Integer> written, Integer tail) : tail_(std::move(tail)) {
  alphas_.assign(std::make_move_iterator(written.rbegin()), std::make_move_iterator(written.rend()));
  check_entries(alphas_, tail_);
}

Bracket Bracket::from_low_first(std::vector<Integer> low_first, Integer tail) {
  check_entries(low_first, tail);
  Bracket b;
  b.alphas_ = std::move(low_first);
  b.tail_ = std::move(tail);
  return b;
}

Bracket Bracket::with_top(std::span<const Integer> top, std::size_t dimension) {
  if (top.size() > dimension) throw std::invalid_argument("with_top: more entries than dimension");
  std::vector<Integer> low(dimension, Integer(0));
  for (std::size_t i = 0; i < top.size(); ++i) low[dimension - 1 - i] = top[i];
  return from_low_first(std::move(low));
}

const Integer& Bracket::alpha(std::size_t j) const {
  if (j < 1 || j > alphas_.size()) throw std::out_of_range("bracket position out of range");
  return alphas_[j - 1];
}

std::vector<Integer> Bracket::written() const { return {alphas_.rbegin(), alphas_.rend()}; }

Bracket Bracket::without_tail() const { return with_tail(0); }

Bracket Bracket::with_tail(Integer t) const {
  Bracket b = *this;
  b.tail_ = std::move(t);
  return b;
}

std::string Bracket::to_string() const {
  std::string out = "[";
  if (alphas_.empty()) {
    out += "0";
  } else {
    for (std::size_t i = alphas_.size(); i-- > 0;) {
      out += alphas_[i].str();
      if (i != 0) out += ",";
    }
  }
  out += "]";
  if (!tail_.is_zero()) out += tail_.str();
  return out;
}

Bracket parse_bracket(std::string_view text) {
  text = trim(text);
  if (text.empty() || text.front() != '[') throw ParseError("bracket must start with '['");
  auto close = text.find(']');
  if (close == std::string_view::npos) throw ParseError("missing ']' in bracket");
  std::string_view body = text.substr(1, close - 1);
  std::string_view tail_text = trim(text.substr(close + 1));

  Integer tail = 0;
  if (!tail_text.empty()) tail = parse_count(tail_text);

  if (trim(body).empty()) throw ParseError("empty bracket");
  std::vector<Integer> written;
  std::size_t start = 0;
  while (true) {
    auto comma = body.find(',', start);
    written.push_back(parse_count(body.substr(start, comma == std::string_view::npos
                                                          ? std::string_view::npos
                                                          : comma - start)));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  if (written.size() == 1 && written.front().is_zero()) return Bracket().with_tail(tail);
  return Bracket(std::move(written), std::move(tail));
}

Input parse_input(std::string_view text) {
  text = trim(text);
  if (text.empty()) throw ParseError("empty input");
  if (text.front() == '[') return parse_bracket(text);
  if (text.front() == '-') throw ParseError("negative numbers are not allowed");
  return Nat::parse(text);
}

Nat reduce_class(const Nat& n) { return n.shr(n.trailing_ones()); }

Bracket bracket_of(const Nat& n) {
  std::size_t tail = n.trailing_ones();
  Nat m = n.shr(tail);
  std::vector<Integer> low_first;
  std::size_t len = m.bit_length();
  std::uint64_t run = 0;
  bool started = false;
  for (std::size_t i = 0; i < len; ++i) {
    if (m.bit(i)) {
      ++run;
    } else {
      if (started) low_first.emplace_back(run);
      started = true;
      run = 0;
    }
  }
  if (started) low_first.emplace_back(run);
  return Bracket::from_low_first(std::move(low_first), Integer(tail));
}

Integer nat_bit_length(const Bracket& b) {
  if (b.is_zero_class()) return b.tail();
  Integer total = b.tail() + Integer(b.dimension());
  for (const auto& a : b.low_first()) total += a;
  return total;
}

Nat nat_of(const Bracket& b) {
  std::size_t len = to_size(nat_bit_length(b), "bracket value");
  std::vector<std::uint64_t> limbs(len / 64 + 1, 0);
  std::size_t pos = to_size(b.tail(), "bracket tail");
  set_ones(limbs, 0, pos);
  for (const auto& a : b.low_first()) {
    ++pos;  // the zero bit
    std::size_t run = to_size(a, "bracket entry");
    set_ones(limbs, pos, run);
    pos += run;
  }
  Integer v;
  mp::import_bits(v, limbs.begin(), limbs.end(), 64, false);
  return Nat(std::move(v));
}

ClassStats class_stats(const Bracket& b) {
  ClassStats st;
  st.dimension = b.dimension();
  std::size_t j = 1;
  for (const auto& a : b.low_first()) {
    st.S += a * j;
    st.S_prime += a;
    ++j;
  }
  return st;
}

Nat subtract_pow2(const Nat& n, std::size_t s) {
  if (n.bit(s)) throw std::domain_error("subtract_pow2: bit " + std::to_string(s) + " is set");
  Integer above = n.value() >> (s + 1);
  if (above.is_zero()) throw std::domain_error("subtract_pow2: no set bit above position");
  std::size_t j = s + 1 + static_cast<std::size_t>(mp::lsb(above));
  Integer v = n.value();
  for (std::size_t i = s; i < j; ++i) mp::bit_set(v, static_cast<unsigned>(i));
  mp::bit_unset(v, static_cast<unsigned>(j));
  return Nat(std::move(v));
}

Bracket class_bracket(const Input& in) {
  if (const auto* b = std::get_if<Bracket>(&in)) return b->without_tail();
  return bracket_of(reduce_class(std::get<Nat>(in)));
}

Integer input_tail(const Input& in) {
  if (const auto* b = std::get_if<Bracket>(&in)) return b->tail();
  return Integer(std::get<Nat>(in).trailing_ones());
}

Nat input_value(const Input& in) {
  if (const auto* b = std::get_if<Bracket>(&in)) return nat_of(*b);
  return std::get<Nat>(in);
}

std::string binary_label(const Nat& n) { return n.to_string(2) + "₂"; }

}  // namespace binclass
