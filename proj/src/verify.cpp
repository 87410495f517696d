#include "binclass/verify.hpp"

#include "binclass/canonical.hpp"
#include "binclass/graph.hpp"
#include "binclass/vakil.hpp"

#include <nlohmann/json.hpp>

#include <algorithm>
#include <chrono>
#include <exception>
#include <thread>

namespace binclass {

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

void verify_stride(std::uint64_t first, std::uint64_t step, std::uint64_t count,
                   std::vector<VerifyRow>& rows, VerifyTimings& timings) {
  LongestPathOracle oracle;
  for (std::uint64_t n = first; n < count; n += step) {
    VerifyRow& row = rows[n];
    row.n = n;
    auto t0 = Clock::now();
    row.oracle = oracle.length(Nat(n));
    timings.oracle_seconds += seconds_since(t0);

    t0 = Clock::now();
    row.canonical = f_canonical(Nat(n));
    timings.canonical_seconds += seconds_since(t0);

    t0 = Clock::now();
    try {
      row.formula = f_formula(Input{Nat(n)});
    } catch (const std::exception& e) {
      row.formula_error = e.what();
    }
    timings.formula_seconds += seconds_since(t0);
  }
}

}  // namespace

VerifyReport run_verify(std::uint64_t max, std::size_t jobs) {
  if (max == std::numeric_limits<std::uint64_t>::max()) {
    throw std::invalid_argument("verify: range too large");
  }
  VerifyReport report;
  report.lo = 0;
  report.hi = max;
  const std::uint64_t count = max + 1;
  report.rows.resize(count);
  jobs = std::clamp<std::size_t>(jobs, 1, static_cast<std::size_t>(std::min<std::uint64_t>(count, 256)));

  std::vector<VerifyTimings> timings(jobs);
  std::vector<std::exception_ptr> errors(jobs);
  std::vector<std::thread> workers;
  for (std::size_t w = 0; w < jobs; ++w) {
    workers.emplace_back([&, w] {
      try {
        verify_stride(w, jobs, count, report.rows, timings[w]);
      } catch (...) {
        errors[w] = std::current_exception();
      }
    });
  }
  for (auto& t : workers) t.join();
  for (auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }

  for (const auto& t : timings) {
    report.timings.oracle_seconds += t.oracle_seconds;
    report.timings.canonical_seconds += t.canonical_seconds;
    report.timings.formula_seconds += t.formula_seconds;
  }
  for (const auto& row : report.rows) {
    if (!row.agree()) report.mismatches.push_back(row.n);
  }
  return report;
}

std::string report_json(const VerifyReport& r, bool with_timings) {
  using nlohmann::ordered_json;
  ordered_json doc;
  doc["range"] = {{"lo", r.lo}, {"hi", r.hi}};
  doc["count"] = r.rows.size();
  doc["mismatch_count"] = r.mismatches.size();
  doc["mismatches"] = r.mismatches;
  ordered_json rows = ordered_json::array();
  for (const auto& row : r.rows) {
    ordered_json formula = nullptr;
    if (row.formula) formula = row.formula->convert_to<std::uint64_t>();
    ordered_json entry = {{"n", row.n},
                          {"oracle", row.oracle},
                          {"canonical", row.canonical},
                          {"formula", formula}};
    if (!row.formula_error.empty()) entry["formula_error"] = row.formula_error;
    rows.push_back(std::move(entry));
  }
  doc["rows"] = std::move(rows);
  if (with_timings) {
    doc["timings"] = {{"oracle_seconds", r.timings.oracle_seconds},
                      {"canonical_seconds", r.timings.canonical_seconds},
                      {"formula_seconds", r.timings.formula_seconds}};
  }
  return doc.dump(2) + "\n";
}

}  // namespace binclass
