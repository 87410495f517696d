#include "binclass/table_io.hpp"

#include <nlohmann/json.hpp>

#include <algorithm>
#include <limits>
#include <sstream>

namespace binclass {

std::string format_integer(const Integer& v, int radix) {
  if (v < 0) return "-" + Nat(Integer(-v)).to_string(radix);
  return Nat(v).to_string(radix);
}

namespace {

std::string fmt(std::uint64_t v, int radix) { return Nat(v).to_string(radix); }

std::string pair_cell(const DeltaRow& row, int radix) {
  if (!row.pair) return "none, skip";
  std::string out = "(" + fmt(row.pair->a, radix) + "," + fmt(row.pair->k, radix) + ")";
  if (row.skip) out += ", skip";
  return out;
}

}  // namespace

std::string abbreviated_bracket(const Bracket& b) {
  if (b.is_zero_class()) return "[0]";
  auto w = b.written();
  std::size_t last = w.size();
  while (last > 0 && w[last - 1].is_zero()) --last;
  std::string out = "[";
  for (std::size_t i = 0; i < last; ++i) {
    if (i) out += ",";
    out += to_string(w[i]);
  }
  std::size_t zeros = w.size() - last;
  if (zeros == 1) {
    out += ",0";
  } else if (zeros == 2) {
    out += ",0,0";
  } else if (zeros > 2) {
    out += ",0,…,0";
  }
  return out + "]";
}

std::string table_csv(const DeltaTable& t, int radix) {
  std::ostringstream out;
  out << "a,k,t_k4,pair_a,pair_k,delta,bracket,skip\n";
  for (const auto& row : t.rows) {
    out << fmt(row.a, radix) << ',' << fmt(row.k, radix) << ',';
    if (row.t_k4) out << fmt(*row.t_k4, radix);
    out << ',';
    if (row.pair) out << fmt(row.pair->a, radix) << ',' << fmt(row.pair->k, radix);
    else out << ',';
    out << ',';
    if (row.delta) out << format_integer(*row.delta, radix);
    out << ",\"" << row.bracket().to_string() << "\"," << (row.skip ? 1 : 0) << '\n';
  }
  return out.str();
}

std::string table_json(const DeltaTable& t, int radix) {
  using nlohmann::ordered_json;
  auto num = [radix](const Integer& v) -> ordered_json {
    if (radix == 10 && v >= 0 && v <= Integer(std::numeric_limits<std::int64_t>::max())) {
      return v.convert_to<std::int64_t>();
    }
    return format_integer(v, radix);
  };
  ordered_json doc;
  doc["dimension"] = t.dimension;
  doc["rows"] = ordered_json::array();
  for (const auto& row : t.rows) {
    ordered_json r;
    r["a"] = num(Integer(row.a));
    r["k"] = num(Integer(row.k));
    r["t_k4"] = row.t_k4 ? num(Integer(*row.t_k4)) : ordered_json(nullptr);
    r["pair_a"] = row.pair ? num(Integer(row.pair->a)) : ordered_json(nullptr);
    r["pair_k"] = row.pair ? num(Integer(row.pair->k)) : ordered_json(nullptr);
    r["delta"] = row.delta ? num(*row.delta) : ordered_json(nullptr);
    r["bracket"] = row.bracket().to_string();
    r["skip"] = row.skip;
    doc["rows"].push_back(std::move(r));
  }
  return doc.dump(2) + "\n";
}

std::string table_pretty(const DeltaTable& t, int radix) {
  std::vector<std::vector<std::string>> cells;
  cells.push_back({"a", "k", "t_k/4", "Vakil pair", "Delta", "representation of 2^(a+1)k"});
  for (const auto& row : t.rows) {
    cells.push_back({fmt(row.a, radix), fmt(row.k, radix),
                     row.t_k4 ? fmt(*row.t_k4, radix) : "skip", pair_cell(row, radix),
                     row.delta ? format_integer(*row.delta, radix) : "",
                     abbreviated_bracket(row.bracket())});
  }
  // Column widths in code points, so "…" counts once.
  auto width = [](const std::string& s) {
    return static_cast<std::size_t>(
        std::count_if(s.begin(), s.end(), [](char c) { return (c & 0xC0) != 0x80; }));
  };
  std::vector<std::size_t> widths(cells.front().size(), 0);
  for (const auto& line : cells) {
    for (std::size_t i = 0; i < line.size(); ++i) widths[i] = std::max(widths[i], width(line[i]));
  }
  std::ostringstream out;
  out << "dimension " << t.dimension << "\n";
  for (const auto& line : cells) {
    std::string text;
    for (std::size_t i = 0; i < line.size(); ++i) {
      if (i) text += " | ";
      text += line[i];
      if (i + 1 < line.size()) text += std::string(widths[i] - width(line[i]), ' ');
    }
    while (!text.empty() && text.back() == ' ') text.pop_back();
    out << text << "\n";
  }
  return out.str();
}

}  // namespace binclass
