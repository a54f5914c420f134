#include "parachk/bench.hpp"

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <sstream>

#include "json.hpp"
#include "parachk/batch.hpp"
#include "parachk/error.hpp"

namespace parachk {

int BenchReport::sc_matches() const {
  return static_cast<int>(std::count_if(rows.begin(), rows.end(), [](const BenchRow& r) { return r.sc.ok; }));
}

int BenchReport::si_matches() const {
  return static_cast<int>(std::count_if(rows.begin(), rows.end(), [](const BenchRow& r) {
    return r.si.ok && r.si.kind != VerdictKind::Unknown;
  }));
}

bool BenchReport::passed() const {
  return std::all_of(rows.begin(), rows.end(), [](const BenchRow& r) { return r.sc.ok && r.si.ok; });
}

BenchReport run_bench(const BenchOptions& options) {
  const auto& corpus = benchmark_corpus();
  std::vector<const BenchEntry*> entries;
  for (const auto& e : corpus)
    if (options.only.empty() || std::find(options.only.begin(), options.only.end(), e.name) != options.only.end())
      entries.push_back(&e);
  for (const auto& name : options.only)
    if (std::none_of(corpus.begin(), corpus.end(), [&](const BenchEntry& e) { return e.name == name; }))
      throw Error("no benchmark entry named '" + name + "'");

  BenchReport report;
  report.repeat = std::max(1, options.repeat);
  report.timeout_ms = options.solver.timeout_ms;
  for (const auto* e : entries) {
    BenchRow row{e->name, e->expected, {}, {}};
    row.sc.ok = row.si.ok = true;
    report.rows.push_back(row);
  }

  std::vector<Problem> problems;
  for (const auto* e : entries) {
    problems.push_back(e->sc);
    problems.push_back(e->si);
  }
  const auto start = std::chrono::steady_clock::now();
  for (int rep = 0; rep < report.repeat; ++rep) {
    auto items = options.parallel ? check_batch(problems, options.solver) : check_batch_serial(problems, options.solver);
    for (std::size_t i = 0; i < entries.size(); ++i) {
      BenchRow& row = report.rows[i];
      const VerdictKind expected = row.expected ? VerdictKind::Realizable : VerdictKind::Unrealizable;
      for (int regime = 0; regime < 2; ++regime) {
        const BatchItem& item = items[2 * i + static_cast<std::size_t>(regime)];
        RegimeResult& r = regime == 0 ? row.sc : row.si;
        if (!item.result) {
          r.error = true;
          r.ok = false;
          r.verdict = "error: " + item.error;
          continue;
        }
        r.kind = kind_of(item.result->verdict);
        r.verdict = describe(item.result->verdict);
        r.ms += item.result->elapsed_ms / report.repeat;
        bool match = r.kind == expected || (regime == 1 && r.kind == VerdictKind::Unknown);
        r.ok = r.ok && match;
      }
    }
  }
  report.total_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return report;
}

namespace {

std::string fixed(double v, int digits) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*f", digits, v);
  return buf;
}

std::string pad(std::string s, std::size_t width) {
  if (s.size() < width) s.append(width - s.size(), ' ');
  return s;
}

}  // namespace

std::string format_table(const BenchReport& r) {
  std::ostringstream out;
  out << pad("function", 10) << pad("fold?", 7) << pad("SC verdict", 34) << pad("SC ms", 10)
      << pad("SI verdict", 34) << "SI ms\n";
  for (const auto& row : r.rows) {
    auto cell = [](const RegimeResult& x) { return x.verdict + (x.ok ? "" : " (!)"); };
    out << pad(row.name, 10) << pad(row.expected ? "yes" : "no", 7) << pad(cell(row.sc), 34)
        << pad(fixed(row.sc.ms, 1), 10) << pad(cell(row.si), 34) << fixed(row.si.ms, 1) << "\n";
  }
  out << "\nSC matches: " << r.sc_matches() << "/" << r.rows.size() << ", SI matches: " << r.si_matches() << "/"
      << r.rows.size() << ", repeat " << r.repeat << ", total " << fixed(r.total_ms / 1000.0, 2) << " s\n";
  return out.str();
}

std::string format_json(const BenchReport& r) {
  using nlohmann::ordered_json;
  ordered_json doc;
  doc["repeat"] = r.repeat;
  doc["timeout_ms"] = r.timeout_ms;
  doc["rows"] = ordered_json::array();
  for (const auto& row : r.rows) {
    auto regime = [](const RegimeResult& x) {
      return ordered_json{{"verdict", x.verdict}, {"ms", x.ms}, {"ok", x.ok}};
    };
    doc["rows"].push_back({{"name", row.name},
                           {"expected", row.expected ? "Realizable" : "Unrealizable"},
                           {"sc", regime(row.sc)},
                           {"si", regime(row.si)}});
  }
  doc["sc_matches"] = r.sc_matches();
  doc["si_matches"] = r.si_matches();
  doc["total_ms"] = r.total_ms;
  doc["passed"] = r.passed();
  return doc.dump(2) + "\n";
}

}  // namespace parachk
