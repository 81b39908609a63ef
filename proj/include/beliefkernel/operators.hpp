#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "beliefkernel/orders.hpp"

namespace bk {

enum class OperatorFlavor { Contraction, Revision };

// A belief change strategy as a total function on states. `apply` maps the
// state's preorder and the input's model set to the posterior preorder.
// `flat_assignment` marks operators whose compatible faithful assignment is
// the flat two-level one rather than the state's own preorder (trivial
// contraction); relational postulates are evaluated against that assignment.
struct ChangeOperator {
  std::string name;
  OperatorFlavor flavor;
  TotalPreorder (*apply)(const TotalPreorder&, WorldMask input, WorldMask universe);
  bool flat_assignment = false;

  TotalPreorder assigned_order(const TotalPreorder& own) const {
    return flat_assignment ? TotalPreorder::two_level(own.bottom(), own.world_count()) : own;
  }
};

// Built-in strategies. Contraction: "natural", "moderate", "trivial".
// Revision: "natural", "lex". Throws UnknownNameError otherwise.
const ChangeOperator& contraction_strategy(std::string_view name);
const ChangeOperator& revision_strategy(std::string_view name);
const std::vector<const ChangeOperator*>& builtin_contractions();
const std::vector<const ChangeOperator*>& builtin_revisions();

// Compatible one-shot belief maps.
// Contraction: Mod(state) united with the most plausible counter-models.
WorldMask contracted_belief_mask(const TotalPreorder& r, WorldMask alpha, WorldMask universe);
// Revision: the most plausible models of alpha; requires alpha consistent.
WorldMask revised_belief_mask(const TotalPreorder& r, WorldMask alpha);

WorldMask contracted_belief_models(const EpistemicState& state, const Formula& alpha);
WorldMask revised_belief_models(const EpistemicState& state, const Formula& alpha);

// Posterior-preorder constructions (mask level).
TotalPreorder contract_natural_order(const TotalPreorder& r, WorldMask alpha, WorldMask universe);
TotalPreorder contract_moderate_order(const TotalPreorder& r, WorldMask alpha, WorldMask universe);
TotalPreorder contract_trivial_order(const TotalPreorder& r, WorldMask alpha, WorldMask universe);
TotalPreorder revise_natural_order(const TotalPreorder& r, WorldMask alpha, WorldMask universe);
TotalPreorder revise_lexicographic_order(const TotalPreorder& r, WorldMask alpha, WorldMask universe);

// State-level application; revision rejects inconsistent input. The label is
// carried over unchanged.
EpistemicState apply(const ChangeOperator& op, const EpistemicState& state, const Formula& input);

EpistemicState contract_natural(const EpistemicState& state, const Formula& alpha);
EpistemicState contract_moderate(const EpistemicState& state, const Formula& alpha);
EpistemicState contract_trivial(const EpistemicState& state, const Formula& alpha);
EpistemicState revise_natural(const EpistemicState& state, const Formula& alpha);
EpistemicState revise_lexicographic(const EpistemicState& state, const Formula& alpha);

// Iterated change driver.
enum class ChangeVerb { Contract, Revise };

struct ScriptStep {
  ChangeVerb verb;
  Formula formula;
};

struct OperatorConfig {
  const ChangeOperator* contraction = &contraction_strategy("natural");
  const ChangeOperator* revision = &revision_strategy("natural");
};

// Error raised by a script step, carrying the 1-based step index.
class ScriptStepError : public std::runtime_error {
 public:
  ScriptStepError(std::size_t step, const std::string& what)
      : std::runtime_error("step " + std::to_string(step) + ": " + what), step_(step) {}
  std::size_t step() const noexcept { return step_; }

 private:
  std::size_t step_;
};

// Sequential application; the trace starts with the initial state.
std::vector<EpistemicState> apply_script(const EpistemicState& initial,
                                         const std::vector<ScriptStep>& steps,
                                         const OperatorConfig& config);

}  // namespace bk
