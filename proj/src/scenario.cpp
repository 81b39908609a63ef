#include "beliefkernel/scenario.hpp"

namespace bk {

Scenario scenario_from_json(const json& j) {
  if (!j.is_object() || !j.contains("signature"))
    throw InvalidValueError("scenario needs a \"signature\"");
  Signature sig = signature_from_json(j["signature"]);

  if (!j.contains("initial")) throw InvalidValueError("scenario needs an \"initial\" state");
  const json& init = j["initial"];
  std::optional<EpistemicState> initial;
  if (init.is_object() && init.contains("beliefs")) {
    const Formula basis = Formula::parse(init["beliefs"].get<std::string>(), sig);
    if (!basis.satisfiable())
      throw InconsistentInputError("initial belief formula is inconsistent");
    initial = state_for_belief_set(BeliefSet::closure_of(basis));
  } else if (init.is_object() && init.contains("ranks")) {
    initial = EpistemicState(sig, preorder_from_json(init, sig));
  } else {
    throw InvalidValueError("initial state needs \"beliefs\" or \"ranks\"");
  }

  Scenario scenario{sig, *std::move(initial), {}, {}, {}};
  if (j.contains("steps")) {
    for (const auto& step : j["steps"]) {
      const std::string op = step.at("op").get<std::string>();
      ChangeVerb verb;
      if (op == "contract") verb = ChangeVerb::Contract;
      else if (op == "revise") verb = ChangeVerb::Revise;
      else throw InvalidValueError("step op must be \"contract\" or \"revise\"");
      scenario.steps.push_back({verb, Formula::parse(step.at("formula").get<std::string>(), sig)});
    }
  }
  if (j.contains("queries")) {
    for (const auto& q : j["queries"]) {
      const std::string text = q.get<std::string>();
      scenario.queries.push_back(parse_conditional(text, sig));
      scenario.query_texts.push_back(text);
    }
  }
  return scenario;
}

namespace {

json query_results(const Scenario& scenario, const OperatorConfig& config,
                   const EpistemicState& state) {
  json out = json::object();
  for (std::size_t i = 0; i < scenario.queries.size(); ++i) {
    const Conditional& c = scenario.queries[i];
    const ChangeOperator& op = c.flavor == ConditionalFlavor::Ramsey
                                   ? *config.revision
                                   : *config.contraction;
    out[scenario.query_texts[i]] = state_accepts(op, state, c);
  }
  return out;
}

}  // namespace

json run_scenario(const Scenario& scenario, const OperatorConfig& config) {
  const std::vector<EpistemicState> trace = apply_script(scenario.initial, scenario.steps, config);

  json report;
  report["signature"] = scenario.sig.atoms();
  report["operators"] = json{{"contraction", config.contraction->name},
                             {"revision", config.revision->name}};
  json initial{{"beliefs", belief_set_json(trace.front().belief_models(), scenario.sig)}};
  if (!scenario.queries.empty()) initial["queries"] = query_results(scenario, config, trace.front());
  report["initial"] = std::move(initial);

  json steps = json::array();
  for (std::size_t i = 0; i < scenario.steps.size(); ++i) {
    const EpistemicState& state = trace[i + 1];
    json step{{"index", i + 1},
              {"op", scenario.steps[i].verb == ChangeVerb::Contract ? "contract" : "revise"},
              {"formula", scenario.steps[i].formula.text()},
              {"beliefs", belief_set_json(state.belief_models(), scenario.sig)}};
    if (!scenario.queries.empty()) step["queries"] = query_results(scenario, config, state);
    steps.push_back(std::move(step));
  }
  report["steps"] = std::move(steps);
  report["final_state"] = preorder_to_json(trace.back().order(), scenario.sig);
  return report;
}

}  // namespace bk
