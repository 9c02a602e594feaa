#include "coeffcat/harness/report.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <mutex>
#include <set>
#include <sstream>
#include <thread>

namespace coeffcat {

std::size_t Report::count(Verdict v) const {
  return static_cast<std::size_t>(
      std::count_if(checks.begin(), checks.end(), [v](const CheckRecord& c) { return c.result.verdict == v; }));
}

Json Report::toJson(bool withTiming) const {
  Json records = Json::array();
  for (const auto& c : checks) {
    Json r = coeffcat::toJson(c.result);
    r["suite"] = c.suite;
    records.push_back(std::move(r));
  }
  Json overrides = Json::object();
  for (const auto& [k, b] : suiteBounds) overrides[k] = b.toJson();
  Json out{{"instance", instance},
           {"seed", seed},
           {"bounds", bounds.toJson()},
           {"suiteBounds", overrides},
           {"suites", suites},
           {"checks", records},
           {"summary",
            {{"total", checks.size()},
             {"passed", count(Verdict::Pass)},
             {"failed", count(Verdict::Fail)},
             {"skipped", count(Verdict::Skipped)}}}};
  if (withTiming) {
    Json perCheck = Json::object();
    for (const auto& c : checks) perCheck[c.suite + "/" + c.result.id] = c.ms;
    out["timing"] = Json{{"totalMs", totalMs}, {"checksMs", perCheck}};
  }
  return out;
}

std::string Report::toText() const {
  std::ostringstream os;
  os << "instance " << instance << "  seed " << seed << "  maxRank " << bounds.maxRank << "  samples " << bounds.samples
     << "\n";
  for (const auto& c : checks) {
    const auto& r = c.result;
    os << (r.verdict == Verdict::Pass ? "PASS" : r.verdict == Verdict::Fail ? "FAIL" : "SKIP") << "  " << c.suite << "  "
       << r.id << "  (" << toString(r.coverage) << ", " << r.cases << " cases)";
    if (!r.note.empty()) os << "  " << r.note;
    os << "\n";
    if (r.failed() && r.witness) os << "      witness: " << r.witness->dump() << "\n";
  }
  os << checks.size() << " checks: " << count(Verdict::Pass) << " passed, " << count(Verdict::Fail) << " failed, "
     << count(Verdict::Skipped) << " skipped\n";
  return os.str();
}

Report runSuites(const InstanceDescription& desc, const RunOptions& opt) {
  const auto t0 = std::chrono::steady_clock::now();
  InstanceDescription d = desc;
  if (opt.seed) d.seed = *opt.seed;
  auto apply = [&](Bounds& b) {
    if (opt.maxRank) b.maxRank = *opt.maxRank;
    if (opt.samples) b.samples = *opt.samples;
    if (opt.exhaustiveLimit) b.exhaustiveLimit = *opt.exhaustiveLimit;
  };
  apply(d.bounds);
  for (auto& [k, b] : d.suiteBounds) apply(b);
  if (d.bounds.maxRank == 0 || d.bounds.samples == 0 || d.bounds.exhaustiveLimit == 0) throw InputError("bounds must be positive");

  std::vector<std::string> selected = opt.suites ? *opt.suites : d.document.contains("suites") ? d.suites : suiteNames();
  for (const auto& s : selected)
    if (!isSuite(s)) throw InputError("unknown suite '" + s + "'");
  for (const auto& [k, b] : d.suiteBounds)
    if (!isSuite(k)) throw InputError("suiteBounds names unknown suite '" + k + "'");
  std::sort(selected.begin(), selected.end());
  selected.erase(std::unique(selected.begin(), selected.end()), selected.end());

  Report report;
  report.instance = d.name;
  report.seed = d.seed;
  report.bounds = d.bounds;
  report.suiteBounds = d.suiteBounds;
  report.suites = selected;
  if (selected.empty()) return report;

  const ResolvedInstance inst = resolveInstance(d);

  std::vector<std::vector<TimedCheck>> results(selected.size());
  std::atomic<std::size_t> next{0};
  std::exception_ptr error;
  std::mutex errorMutex;
  auto worker = [&] {
    for (std::size_t i; (i = next++) < selected.size();) {
      try {
        results[i] = runSuite(selected[i], inst, d.boundsFor(selected[i]), d.seed);
      } catch (...) {
        std::lock_guard lock(errorMutex);
        if (!error) error = std::current_exception();
      }
    }
  };
  const unsigned jobs = std::max(1u, std::min<unsigned>(opt.jobs, static_cast<unsigned>(selected.size())));
  if (jobs == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (unsigned j = 0; j < jobs; ++j) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
  }
  if (error) std::rethrow_exception(error);

  for (std::size_t i = 0; i < selected.size(); ++i)
    for (auto& c : results[i]) report.checks.push_back({selected[i], std::move(c.result), c.ms});
  std::stable_sort(report.checks.begin(), report.checks.end(), [](const CheckRecord& a, const CheckRecord& b) {
    return std::tie(a.suite, a.result.id) < std::tie(b.suite, b.result.id);
  });
  report.totalMs = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
  return report;
}

}  // namespace coeffcat
