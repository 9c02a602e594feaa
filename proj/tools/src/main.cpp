#include <CLI11.hpp>

#include <fstream>
#include <iostream>

#include "coeffcat/harness/report.hpp"

using namespace coeffcat;

namespace {

int verify(const std::string& instance, const RunOptions& opt, const std::string& format, const std::string& out,
           bool timing) {
  const auto report = runSuites(loadInstance(instance), opt);
  const std::string text = format == "json" ? report.toJson(timing).dump(2) + "\n" : report.toText();
  if (out.empty() || out == "-") {
    std::cout << text;
  } else {
    std::ofstream f(out);
    if (!f) throw InputError("cannot write " + out);
    f << text;
    // keep a one-line summary on the terminal
    std::cerr << report.instance << ": " << report.count(Verdict::Pass) << " passed, " << report.count(Verdict::Fail)
              << " failed, " << report.count(Verdict::Skipped) << " skipped\n";
  }
  return report.exitCode();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Mechanical checks for G-categories, crossed products and controlled categories"};
  app.require_subcommand(1);

  auto* verifyCmd = app.add_subcommand("verify", "run verification suites on an instance");
  std::string instance, format = "text", out;
  std::vector<std::string> suites;
  std::uint64_t seed = 0, samples = 0, limit = 0;
  std::uint32_t maxRank = 0;
  unsigned jobs = 1;
  bool noTiming = false;
  verifyCmd->add_option("-i,--instance", instance, "built-in instance name or JSON file")->required();
  verifyCmd->add_option("-s,--suite", suites, "suite to run (repeatable); default: the instance's selection");
  auto* seedOpt = verifyCmd->add_option("--seed", seed, "seed for sampled checks");
  auto* rankOpt = verifyCmd->add_option("--max-rank", maxRank, "largest object rank enumerated")->check(CLI::PositiveNumber);
  auto* samplesOpt = verifyCmd->add_option("--samples", samples, "cases drawn per sampled check")->check(CLI::PositiveNumber);
  auto* limitOpt = verifyCmd->add_option("--exhaustive-limit", limit, "largest search box enumerated in full")
                       ->check(CLI::PositiveNumber);
  verifyCmd->add_option("--format", format, "report format")->check(CLI::IsMember({"text", "json"}));
  verifyCmd->add_option("-o,--out", out, "write the report here instead of stdout");
  verifyCmd->add_option("-j,--jobs", jobs, "suites run in parallel")->check(CLI::PositiveNumber);
  verifyCmd->add_flag("--no-timing", noTiming, "omit wall times from the JSON report");

  auto* listCmd = app.add_subcommand("list-instances", "list built-in instances");
  bool listJson = false;
  listCmd->add_flag("--json", listJson, "print as JSON");

  auto* suitesCmd = app.add_subcommand("list-suites", "list suite names");

  CLI11_PARSE(app, argc, argv);

  try {
    if (*verifyCmd) {
      RunOptions opt;
      if (!suites.empty()) opt.suites = suites;
      if (*seedOpt) opt.seed = seed;
      if (*rankOpt) opt.maxRank = maxRank;
      if (*samplesOpt) opt.samples = samples;
      if (*limitOpt) opt.exhaustiveLimit = limit;
      opt.jobs = jobs;
      return verify(instance, opt, format, out, !noTiming);
    }
    if (*listCmd) {
      const auto cat = builtinCatalog();
      if (listJson) {
        Json j = Json::array();
        for (const auto& e : cat) j.push_back({{"name", e.name}, {"description", e.description}});
        std::cout << j.dump(2) << "\n";
      } else {
        for (const auto& e : cat) std::cout << e.name << "  " << e.description << "\n";
      }
      return 0;
    }
    if (*suitesCmd) {
      for (const auto& s : suiteNames()) std::cout << s << "\n";
      return 0;
    }
  } catch (const InputError& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  }
  return 0;
}
