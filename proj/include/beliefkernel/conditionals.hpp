#pragma once

#include <optional>
#include <string>
#include <string_view>

#include "beliefkernel/operators.hpp"

namespace bk {

enum class ConditionalFlavor { Ramsey, Contractional };

// (consequent | antecedent) for the Ramsey flavor, read "after revising by
// the antecedent, the consequent is believed"; (consequent -: antecedent) for
// contractionals, read "the consequent stays believed even in the absence of
// the antecedent".
struct Conditional {
  Formula consequent;
  Formula antecedent;
  ConditionalFlavor flavor;
};

// Text forms: "(beta | alpha)" and "(beta -: alpha)". The conditional
// connective is the last top-level "|" (or the "-:" token).
Conditional parse_conditional(std::string_view text, const Signature& sig);
std::string conditional_text(const Conditional& c);

// Acceptance by a state through an explicit operator: the beliefs after
// changing by the antecedent entail the consequent. Ramsey conditionals need
// a revision operator and a consistent antecedent; contractionals need a
// contraction operator.
bool state_accepts(const ChangeOperator& op, const EpistemicState& state, const Conditional& c);

// Exhaustive/sampled agreement check between acceptance through the operator
// and acceptance by the operator's assigned preorder, over all states and all
// (antecedent, consequent) semantic classes.
struct BridgeWitness {
  std::vector<std::uint8_t> state_ranks;
  WorldMask antecedent = 0;
  WorldMask consequent = 0;
};

struct BridgeReport {
  bool holds = true;
  std::uint64_t checks_performed = 0;
  std::optional<BridgeWitness> witness;
};

struct BridgeScope {
  bool sampled = false;  // exhaustive needs signature size <= 2
  std::uint64_t seed = 0;
  std::uint64_t samples = 10000;
};

BridgeReport acceptance_bridge_check(const ChangeOperator& op, const Signature& sig,
                                     const BridgeScope& scope = {});

}  // namespace bk
