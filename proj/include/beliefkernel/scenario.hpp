#pragma once

#include "beliefkernel/json_io.hpp"

namespace bk {

// Scenario file: signature, an initial state (explicit rank map or a belief
// formula), a change script and optional conditional queries evaluated on
// the initial state and after every step.
struct Scenario {
  Signature sig;
  EpistemicState initial;
  std::vector<ScriptStep> steps;
  std::vector<Conditional> queries;
  std::vector<std::string> query_texts;
};

Scenario scenario_from_json(const json& j);

// Evaluates the scenario and renders the deterministic report: per-step
// belief sets (canonical formula plus model list), query verdicts, and the
// final preorder. Propagates step errors (inconsistent revision input).
json run_scenario(const Scenario& scenario, const OperatorConfig& config);

}  // namespace bk
