#include "coeffcat/check.hpp"

#include <algorithm>

#include "coeffcat/sampling.hpp"

namespace coeffcat {

std::string toString(Coverage c) { return c == Coverage::Exhaustive ? "exhaustive" : "sampled"; }

std::string toString(Verdict v) {
  switch (v) {
    case Verdict::Pass:
      return "pass";
    case Verdict::Fail:
      return "fail";
    case Verdict::Skipped:
      return "skipped";
  }
  return "unknown";
}

Json toJson(const CheckResult& r) {
  Json j;
  j["id"] = r.id;
  j["anchor"] = r.anchor;
  j["mode"] = toString(r.coverage);
  j["cases"] = r.cases;
  j["verdict"] = toString(r.verdict);
  if (r.witness) j["witness"] = *r.witness;
  if (!r.note.empty()) j["note"] = r.note;
  return j;
}

CheckBuilder::CheckBuilder(std::string id, std::string anchor) {
  result_.id = std::move(id);
  result_.anchor = std::move(anchor);
}

bool CheckBuilder::fail(Json witness, std::string note) {
  if (result_.verdict != Verdict::Fail) {
    result_.verdict = Verdict::Fail;
    result_.witness = std::move(witness);
    if (!note.empty()) result_.note = std::move(note);
  }
  return false;
}

void CheckBuilder::skip(std::string note) {
  result_.verdict = Verdict::Skipped;
  result_.note = std::move(note);
}

CheckResult CheckBuilder::finish() && { return std::move(result_); }

bool allPassed(const std::vector<CheckResult>& results) {
  return std::none_of(results.begin(), results.end(), [](const CheckResult& r) { return r.failed(); });
}

Budget Budget::derive(std::string_view salt) const {
  // FNV-1a over the salt, folded into the seed.
  std::uint64_t h = 1469598103934665603ULL;
  for (unsigned char c : salt) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  Budget b = *this;
  b.seed = seed ^ (h + 0x9e3779b97f4a7c15ULL + (seed << 6) + (seed >> 2));
  return b;
}

}  // namespace coeffcat
