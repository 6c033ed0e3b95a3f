#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "schroeter/engine.hpp"
#include "schroeter/serialize.hpp"
#include "schroeter/weierstrass.hpp"

namespace schroeter {

enum class Outcome { Pass, Fail, HypothesisFailed, Skipped };
std::string_view to_string(Outcome o);

struct CheckRecord {
  std::string suite;
  std::string name;
  Outcome outcome = Outcome::Pass;
  Json inputs;   // canonical coordinates of the points involved
  Json witness;  // computed values supporting the outcome
};

struct VerifyReport {
  std::vector<CheckRecord> records;

  std::size_t count(Outcome o) const;
  std::size_t count(std::string_view suite, Outcome o) const;
  // True iff no record failed. Hypothesis failures and skips do not count.
  bool ok() const { return count(Outcome::Fail) == 0; }
};

// invariants, chasles, lemma4, tangents, fact7, fact9, lemma8, order2.
const std::vector<std::string>& suite_names();

struct VerifyOptions {
  std::size_t chasles_pairs = 12;  // triples are drawn from this many pairs
  std::size_t fact9_checks = 64;
  std::size_t lemma8_checks = 64;
};

// Runs one suite (or "all") over a finished construction. The Weierstrass-only
// suites record a single Skipped entry when `w` is absent. Unknown suite names
// throw ParseError.
VerifyReport verify_state(const ConstructionState& state, const std::optional<WeierstrassCurve>& w,
                          std::string_view suite = "all", const VerifyOptions& options = {});

Json report_to_json(const VerifyReport& report);

}  // namespace schroeter
