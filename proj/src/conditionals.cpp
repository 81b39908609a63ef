#include "beliefkernel/conditionals.hpp"

#include <random>

namespace bk {

namespace {

// Locate the conditional connective at paren depth zero: "-:" anywhere, or
// the last top-level "|" (a lone "|" inside either side stays a disjunction
// as long as it is parenthesized or precedes the separator).
struct Split {
  std::size_t pos;
  std::size_t len;
  ConditionalFlavor flavor;
};

std::optional<Split> find_connective(std::string_view text) {
  int depth = 0;
  std::optional<Split> found;
  for (std::size_t i = 0; i < text.size(); ++i) {
    const char c = text[i];
    if (c == '(') ++depth;
    if (c == ')') --depth;
    if (depth != 0) continue;
    if (c == '-' && i + 1 < text.size() && text[i + 1] == ':')
      return Split{i, 2, ConditionalFlavor::Contractional};
    if (c == '|') found = Split{i, 1, ConditionalFlavor::Ramsey};
  }
  return found;
}

}  // namespace

Conditional parse_conditional(std::string_view text, const Signature& sig) {
  std::string_view body = text;
  // Trim whitespace, then the mandatory outer parentheses.
  while (!body.empty() && std::isspace(static_cast<unsigned char>(body.front()))) body.remove_prefix(1);
  while (!body.empty() && std::isspace(static_cast<unsigned char>(body.back()))) body.remove_suffix(1);
  if (body.size() < 2 || body.front() != '(' || body.back() != ')')
    throw ParseError("conditional must be parenthesized: (beta | alpha) or (beta -: alpha)", 0);
  body = body.substr(1, body.size() - 2);
  auto split = find_connective(body);
  if (!split) throw ParseError("conditional needs a top-level '|' or '-:'", 0);
  Formula consequent = Formula::parse(body.substr(0, split->pos), sig);
  Formula antecedent = Formula::parse(body.substr(split->pos + split->len), sig);
  return Conditional{std::move(consequent), std::move(antecedent), split->flavor};
}

std::string conditional_text(const Conditional& c) {
  const char* sep = c.flavor == ConditionalFlavor::Ramsey ? " | " : " -: ";
  return "(" + c.consequent.text() + sep + c.antecedent.text() + ")";
}

bool state_accepts(const ChangeOperator& op, const EpistemicState& state, const Conditional& c) {
  if (c.flavor == ConditionalFlavor::Ramsey && op.flavor != OperatorFlavor::Revision)
    throw FlavorMismatchError("a Ramsey conditional needs a revision operator");
  if (c.flavor == ConditionalFlavor::Contractional && op.flavor != OperatorFlavor::Contraction)
    throw FlavorMismatchError("a contractional needs a contraction operator");
  const EpistemicState changed = apply(op, state, c.antecedent);
  return subset_of(changed.belief_models(), c.consequent.models());
}

namespace {

bool preorder_accepts(const ChangeOperator& op, const TotalPreorder& assigned, WorldMask antecedent,
                      WorldMask consequent, WorldMask universe) {
  if (op.flavor == OperatorFlavor::Revision)
    return preorder_accepts_conditional(assigned, antecedent, consequent, universe);
  return preorder_accepts_contractional(assigned, antecedent, consequent, universe);
}

bool instance_agrees(const ChangeOperator& op, const TotalPreorder& own, WorldMask antecedent,
                     WorldMask consequent, WorldMask universe) {
  const TotalPreorder assigned = op.assigned_order(own);
  const TotalPreorder changed = op.apply(own, antecedent, universe);
  const bool by_state = subset_of(changed.bottom(), consequent);
  const bool by_order = preorder_accepts(op, assigned, antecedent, consequent, universe);
  return by_state == by_order;
}

}  // namespace

BridgeReport acceptance_bridge_check(const ChangeOperator& op, const Signature& sig,
                                     const BridgeScope& scope) {
  BridgeReport report;
  const WorldMask universe = sig.universe();
  const int nw = sig.world_count();
  if (!scope.sampled) {
    if (sig.atom_count() > 2)
      throw ScopeError("exhaustive bridge check needs signature size <= 2");
    for (const auto& state : enumerate_preorders(sig)) {
      for (WorldMask a = 0; a <= universe; ++a) {
        if (op.flavor == OperatorFlavor::Revision && a == 0) continue;
        for (WorldMask b = 0; b <= universe; ++b) {
          ++report.checks_performed;
          if (!instance_agrees(op, state, a, b, universe)) {
            if (!report.witness) report.witness = BridgeWitness{state.ranks(), a, b};
            report.holds = false;
          }
        }
      }
    }
    return report;
  }
  if (sig.atom_count() > 3) throw ScopeError("sampled bridge check needs signature size <= 3");
  std::mt19937_64 rng(scope.seed);
  std::vector<std::uint8_t> ranks(nw);
  for (std::uint64_t i = 0; i < scope.samples; ++i) {
    for (auto& r : ranks) r = static_cast<std::uint8_t>(rng() % nw);
    const TotalPreorder state{ranks};
    WorldMask a = rng() & universe;
    if (op.flavor == OperatorFlavor::Revision && a == 0) a = universe;
    const WorldMask b = rng() & universe;
    ++report.checks_performed;
    if (!instance_agrees(op, state, a, b, universe)) {
      if (!report.witness) report.witness = BridgeWitness{state.ranks(), a, b};
      report.holds = false;
    }
  }
  return report;
}

}  // namespace bk
