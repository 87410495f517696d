#include "cli.hpp"

#include "binclass/canonical.hpp"
#include "binclass/graph.hpp"
#include "binclass/table_io.hpp"
#include "binclass/vakil.hpp"
#include "binclass/verify.hpp"

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include <algorithm>
#include <fstream>
#include <map>
#include <ostream>

namespace binclass::cli {

namespace {

class Mismatch : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Bracket inputs can describe numbers far too long to write out.
constexpr std::size_t kMaxPrintedBits = 1 << 16;

struct Options {
  int radix = 10;

  std::string f_input;
  std::string f_method = "formula";
  bool f_witness = false;
  bool f_all_witnesses = false;

  std::string g_input;
  std::string steenrod_input;
  std::string class_input;

  std::string path_input;
  std::string path_format = "int";

  std::string graph_input;
  bool graph_reduced = false;
  std::string graph_labels = "integer";

  std::size_t table_dim = 0;
  std::string table_format = "pretty";

  std::string vakil_input;

  std::optional<std::uint64_t> freq_levels;
  std::optional<std::uint64_t> freq_s;

  std::uint64_t verify_max = 0;
  std::size_t verify_jobs = 1;
  std::string verify_out;
  bool verify_timing = false;
};

class Runner {
 public:
  Runner(const Options& opt, std::ostream& out, std::ostream& err)
      : opt_(opt), out_(out), err_(err) {}

  int f();
  int g(bool steenrod);
  int klass();
  int path();
  int graph();
  int table();
  int vakil();
  int freq();
  int verify();

 private:
  std::string num(const Integer& v) const { return format_integer(v, opt_.radix); }
  std::string num(const Nat& v) const { return v.to_string(opt_.radix); }
  std::string num(std::uint64_t v) const { return Nat(v).to_string(opt_.radix); }
  std::string pair(const VakilPair& p) const { return "(" + num(p.a) + "," + num(p.k) + ")"; }

  Nat value_of(const Input& in) const {
    if (auto* b = std::get_if<Bracket>(&in)) {
      if (nat_bit_length(*b) > Integer(std::uint64_t{1} << 32)) {
        throw BudgetExceeded("bracket value is too long to expand; use the formula method");
      }
    }
    return input_value(in);
  }

  std::string join(const std::vector<std::string>& parts) const {
    std::string s;
    for (std::size_t i = 0; i < parts.size(); ++i) {
      if (i) s += " -> ";
      s += parts[i];
    }
    return s;
  }

  std::string path_text(const std::vector<Nat>& vs) const {
    std::vector<std::string> parts;
    for (const auto& v : vs) parts.push_back(num(v));
    return join(parts);
  }

  const Options& opt_;
  std::ostream& out_;
  std::ostream& err_;
};

int Runner::f() {
  Input in = parse_input(opt_.f_input);
  const std::string& m = opt_.f_method;
  if (m == "formula") {
    out_ << num(f_formula(in)) << "\n";
  } else if (m == "canonical") {
    out_ << num(f_canonical(value_of(in))) << "\n";
  } else if (m == "oracle") {
    LongestPathOracle oracle;
    Nat n = value_of(in);
    LongestPathResult r = oracle.longest_path(n);
    out_ << num(r.length) << "\n";
    if (opt_.f_all_witnesses) {
      for (const auto& p : oracle.all_longest_paths(n)) out_ << path_text(p) << "\n";
    } else if (opt_.f_witness) {
      out_ << path_text(r.witness) << "\n";
    }
  } else {
    Nat n = value_of(in);
    std::uint64_t o = LongestPathOracle().length(n);
    std::uint64_t c = f_canonical(n);
    Integer fm = f_formula(in);
    out_ << "oracle=" << num(o) << " canonical=" << num(c) << " formula=" << num(fm) << "\n";
    if (Integer(o) != Integer(c) || Integer(o) != fm) throw Mismatch("methods disagree");
  }
  return kOk;
}

int Runner::g(bool steenrod) {
  Nat n = value_of(parse_input(steenrod ? opt_.steenrod_input : opt_.g_input));
  out_ << num(steenrod ? steenrod_length(n) : g_of(n)) << "\n";
  return kOk;
}

int Runner::klass() {
  Input in = parse_input(opt_.class_input);
  Bracket cls = class_bracket(in);
  ClassStats st = class_stats(cls);
  if (nat_bit_length(cls) <= Integer(kMaxPrintedBits)) {
    out_ << "class: " << num(nat_of(cls)) << "\n";
  } else {
    out_ << "class: " << to_string(nat_bit_length(cls)) << "-bit number\n";
  }
  out_ << "bracket: " << cls.to_string() << "\n";
  out_ << "tail: " << num(input_tail(in)) << "\n";
  out_ << "dimension: " << num(std::uint64_t{st.dimension}) << "\n";
  out_ << "S: " << num(st.S) << "\n";
  out_ << "S': " << num(st.S_prime) << "\n";
  if (auto p = is_vakil(cls)) {
    out_ << "vakil: yes " << pair(*p) << "\n";
  } else {
    out_ << "vakil: no\n";
  }
  return kOk;
}

int Runner::path() {
  Input in = parse_input(opt_.path_input);
  CanonicalPath p = canonical_path(value_of(in));
  const std::string& fmt = opt_.path_format;
  if (fmt == "json") {
    nlohmann::ordered_json doc;
    doc["input"] = p.raw.front().to_string();
    doc["length"] = p.length();
    doc["steps"] = nlohmann::ordered_json::array();
    for (std::size_t i = 0; i < p.length(); ++i) {
      doc["steps"].push_back({{"from", p.raw[i].to_string()},
                              {"to", p.raw[i + 1].to_string()},
                              {"s", p.raw_indices[i]},
                              {"form", bracket_of(p.raw[i]).to_string()}});
    }
    out_ << doc.dump(2) << "\n";
    return kOk;
  }
  if (p.length() == 0) return kOk;
  std::vector<std::string> parts;
  if (fmt == "bracket") {
    for (const auto& v : p.vertices) parts.push_back(bracket_of(v).to_string());
  } else if (fmt == "bin") {
    for (const auto& v : p.raw) parts.push_back(binary_label(v));
  } else {
    for (const auto& v : p.raw) parts.push_back(num(v));
  }
  out_ << join(parts) << "\n";
  return kOk;
}

int Runner::graph() {
  static const std::map<std::string, Labeling> labels{
      {"integer", Labeling::integer}, {"binary", Labeling::binary}, {"bracket", Labeling::bracket}};
  Digraph g = build_graph(value_of(parse_input(opt_.graph_input)), opt_.graph_reduced);
  out_ << export_dot(g, labels.at(opt_.graph_labels));
  return kOk;
}

int Runner::table() {
  if (opt_.table_dim < kMinTableDimension) {
    err_ << "error: tables start at dimension " << kMinTableDimension
         << "; smaller dimensions are covered by the small-dimension constants\n";
    return kUsage;
  }
  auto t = delta_table(opt_.table_dim);
  if (opt_.table_format == "csv") {
    out_ << table_csv(*t, opt_.radix);
  } else if (opt_.table_format == "json") {
    out_ << table_json(*t, opt_.radix);
  } else {
    out_ << table_pretty(*t, opt_.radix);
  }
  return kOk;
}

int Runner::vakil() {
  Input in = parse_input(opt_.vakil_input);
  Bracket cls = class_bracket(in);
  out_ << "bracket: " << cls.to_string() << "\n";
  if (cls.is_zero_class()) {
    out_ << "vakil: no (zero class)\n";
    return kOk;
  }
  if (auto p = is_vakil(cls)) {
    out_ << "vakil: yes " << pair(*p) << "\n";
    out_ << "f: " << num(f_vakil(*p)) << "\n";
    return kOk;
  }
  out_ << "vakil: no\n";
  Reduction r = reduce_to_first_vakil(cls);
  out_ << "first vakil by reduction: " << r.vakil.to_string() << " " << pair(r.pair) << " after "
       << num(r.steps) << " steps\n";
  FormulaResult fr = f_formula_detail(in);
  if (fr.closest) {
    const ClosestVakil& c = *fr.closest;
    out_ << "closest table row: " << abbreviated_bracket(c.row.bracket()) << " "
         << pair(*c.row.pair) << " delta " << num(c.delta);
    if (c.ties > 1) out_ << " (" << c.ties << " rows share this delta)";
    if (c.delta != fr.delta) out_ << " (below the exact delta " << num(fr.delta) << ")";
    out_ << "\n";
  }
  out_ << "method: " << to_string(fr.method) << "\n";
  out_ << "f: " << num(fr.f) << "\n";
  return kOk;
}

int Runner::freq() {
  if (opt_.freq_s) {
    out_ << num(freq_value(*opt_.freq_s)) << "\n";
    return kOk;
  }
  std::uint64_t levels = opt_.freq_levels.value_or(15);
  std::vector<std::string> s_row{"s"};
  std::vector<std::string> f_row{"F(s)"};
  for (std::uint64_t s = 0; s < levels; ++s) {
    s_row.push_back(num(s));
    f_row.push_back(num(freq_value(s)));
  }
  std::vector<std::size_t> widths;
  for (std::size_t i = 0; i < s_row.size(); ++i) {
    widths.push_back(std::max(s_row[i].size(), f_row[i].size()));
  }
  for (const auto* row : {&s_row, &f_row}) {
    std::string line;
    for (std::size_t i = 0; i < row->size(); ++i) {
      if (i) line += ' ';
      line += std::string(widths[i] - (*row)[i].size(), ' ') + (*row)[i];
    }
    out_ << line << "\n";
  }
  return kOk;
}

int Runner::verify() {
  VerifyReport r = run_verify(opt_.verify_max, opt_.verify_jobs);
  std::string json = report_json(r, opt_.verify_timing);
  if (opt_.verify_out.empty()) {
    out_ << json;
  } else {
    std::ofstream file(opt_.verify_out);
    if (!file) {
      err_ << "error: cannot write " << opt_.verify_out << "\n";
      return kUsage;
    }
    file << json;
    out_ << "checked " << r.rows.size() << " values in [0, " << r.hi << "], "
         << r.mismatches.size() << " mismatches\n";
  }
  if (!r.ok()) {
    err_ << "mismatch at n =";
    for (std::size_t i = 0; i < std::min<std::size_t>(r.mismatches.size(), 20); ++i) {
      err_ << " " << r.mismatches[i];
    }
    err_ << "\n";
    return kMismatch;
  }
  return kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options opt;
  CLI::App app{"Longest paths in the binary subtraction graph T_n"};
  app.name("binclass");
  app.require_subcommand(1);
  app.add_option("--radix", opt.radix, "Radix for numeric output")
      ->check(CLI::IsMember({2, 10, 16}));

  auto* f = app.add_subcommand("f", "Longest path length f(n)");
  f->add_option("input", opt.f_input, "Integer or bracket [a_k,...,a_1]t")->required();
  f->add_option("--method", opt.f_method)
      ->check(CLI::IsMember({"formula", "canonical", "oracle", "all"}));
  f->add_flag("--witness", opt.f_witness, "Print one longest path (oracle method)");
  f->add_flag("--all-witnesses", opt.f_all_witnesses, "Print every longest path (oracle method)");

  auto* g = app.add_subcommand("g", "g(n) = max f(q) over q <= n");
  g->add_option("input", opt.g_input)->required();
  auto* st = app.add_subcommand("steenrod", "Steenrod length g(n) + 1");
  st->add_option("input", opt.steenrod_input)->required();

  auto* cl = app.add_subcommand("class", "Binary class report");
  cl->add_option("input", opt.class_input)->required();

  auto* pa = app.add_subcommand("path", "Canonical path");
  pa->add_option("input", opt.path_input)->required();
  pa->add_option("--format", opt.path_format)
      ->check(CLI::IsMember({"int", "bin", "bracket", "json"}));

  auto* gr = app.add_subcommand("graph", "DOT rendering of T_n");
  gr->add_option("input", opt.graph_input)->required();
  gr->add_flag("--reduced", opt.graph_reduced, "Quotient by binary class");
  gr->add_option("--labels", opt.graph_labels)
      ->check(CLI::IsMember({"integer", "binary", "bracket"}));

  auto* ta = app.add_subcommand("table", "Short Delta table of one dimension");
  ta->add_option("--dim", opt.table_dim)->required();
  ta->add_option("--format", opt.table_format)->check(CLI::IsMember({"csv", "json", "pretty"}));

  auto* va = app.add_subcommand("vakil", "Vakil status, reduction and closest table row");
  va->add_option("input", opt.vakil_input)->required();

  auto* fr = app.add_subcommand("freq", "Frequencies #{n : g(n) = s}");
  fr->add_option("s", opt.freq_s, "Single level");
  fr->add_option("--levels", opt.freq_levels, "Print s = 0 .. levels-1");

  auto* ve = app.add_subcommand("verify", "Cross-check oracle, canonical walk and formula");
  ve->add_option("--max", opt.verify_max, "Check every n in [0, max]")->required();
  ve->add_option("--jobs", opt.verify_jobs)->check(CLI::PositiveNumber);
  ve->add_option("--out", opt.verify_out, "Write the JSON report here");
  ve->add_flag("--timing", opt.verify_timing, "Include timings in the report");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err) == 0 ? kOk : kUsage;
  }

  Runner r(opt, out, err);
  try {
    if (f->parsed()) return r.f();
    if (g->parsed()) return r.g(false);
    if (st->parsed()) return r.g(true);
    if (cl->parsed()) return r.klass();
    if (pa->parsed()) return r.path();
    if (gr->parsed()) return r.graph();
    if (ta->parsed()) return r.table();
    if (va->parsed()) return r.vakil();
    if (fr->parsed()) return r.freq();
    if (ve->parsed()) return r.verify();
  } catch (const BudgetExceeded& e) {
    err << "error: " << e.what() << "\n";
    return kBudget;
  } catch (const Mismatch& e) {
    err << "error: " << e.what() << "\n";
    return kMismatch;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  }
  return kUsage;
}

}  // namespace binclass::cli
