#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "coeffcat/errors.hpp"

namespace coeffcat {

enum class Coverage { Exhaustive, Sampled };
enum class Verdict { Pass, Fail, Skipped };

std::string toString(Coverage c);
std::string toString(Verdict v);

/// Outcome of one mechanical check of an identity or axiom.
struct CheckResult {
  std::string id;
  std::string anchor;  // the statement being checked, in words
  Coverage coverage = Coverage::Exhaustive;
  std::uint64_t cases = 0;
  Verdict verdict = Verdict::Pass;
  std::optional<Json> witness;
  std::string note;

  bool passed() const { return verdict == Verdict::Pass; }
  bool failed() const { return verdict == Verdict::Fail; }
};

Json toJson(const CheckResult& r);

/// Accumulates cases for one check; the first failure is kept as witness.
class CheckBuilder {
 public:
  CheckBuilder(std::string id, std::string anchor);

  void sampled() { result_.coverage = Coverage::Sampled; }
  void merge(Coverage c) {
    if (c == Coverage::Sampled) sampled();
  }
  void count(std::uint64_t n = 1) { result_.cases += n; }

  /// Records a failure unless one is already recorded. Returns false so that
  /// callers can write `return check.fail(...)` inside early-exit loops.
  bool fail(Json witness, std::string note = {});
  void skip(std::string note);

  /// Attaches a note without changing the verdict.
  void annotate(std::string note) { result_.note = std::move(note); }

  bool failed() const { return result_.verdict == Verdict::Fail; }
  Coverage coverage() const { return result_.coverage; }
  CheckResult finish() &&;

 private:
  CheckResult result_;
};

bool allPassed(const std::vector<CheckResult>& results);

}  // namespace coeffcat
