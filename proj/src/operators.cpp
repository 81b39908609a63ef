#include "beliefkernel/operators.hpp"

#include <algorithm>
#include <array>

namespace bk {

WorldMask contracted_belief_mask(const TotalPreorder& r, WorldMask alpha, WorldMask universe) {
  return r.bottom() | r.min_of(universe & ~alpha);
}

WorldMask revised_belief_mask(const TotalPreorder& r, WorldMask alpha) {
  return r.min_of(alpha);
}

WorldMask contracted_belief_models(const EpistemicState& state, const Formula& alpha) {
  return contracted_belief_mask(state.order(), alpha.models(), state.signature().universe());
}

WorldMask revised_belief_models(const EpistemicState& state, const Formula& alpha) {
  if (!alpha.satisfiable()) throw InconsistentInputError("revision by an inconsistent formula");
  return revised_belief_mask(state.order(), alpha.models());
}

namespace {

// Rebuild ranks: `bottom` at 0, the remaining worlds stacked above in their
// old relative order (ranks squashed, starting at `base`). Appends to `ranks`.
void stack_by_old_order(const TotalPreorder& r, WorldMask worlds, std::uint8_t base,
                        std::vector<std::uint8_t>& ranks) {
  std::array<std::uint8_t, 256> used{};
  for (int w = 0; w < r.world_count(); ++w)
    if (worlds & (WorldMask{1} << w)) used[r.rank(w)] = 1;
  std::array<std::uint8_t, 256> squash{};
  std::uint8_t next = base;
  for (int k = 0; k < 256; ++k)
    if (used[k]) squash[k] = next++;
  for (int w = 0; w < r.world_count(); ++w)
    if (worlds & (WorldMask{1} << w)) ranks[w] = squash[r.rank(w)];
}

std::uint8_t level_span(const TotalPreorder& r, WorldMask worlds) {
  std::array<std::uint8_t, 256> used{};
  for (int w = 0; w < r.world_count(); ++w)
    if (worlds & (WorldMask{1} << w)) used[r.rank(w)] = 1;
  std::uint8_t n = 0;
  for (int k = 0; k < 256; ++k) n += used[k];
  return n;
}

}  // namespace

TotalPreorder contract_natural_order(const TotalPreorder& r, WorldMask alpha, WorldMask universe) {
  const WorldMask bottom = contracted_belief_mask(r, alpha, universe);
  std::vector<std::uint8_t> ranks(r.world_count(), 0);
  stack_by_old_order(r, universe & ~bottom, 1, ranks);
  return TotalPreorder(std::move(ranks));
}

TotalPreorder contract_moderate_order(const TotalPreorder& r, WorldMask alpha, WorldMask universe) {
  const WorldMask bottom = contracted_belief_mask(r, alpha, universe);
  const WorldMask counter_block = (universe & ~alpha) & ~bottom;
  const WorldMask alpha_block = alpha & ~bottom;
  std::vector<std::uint8_t> ranks(r.world_count(), 0);
  stack_by_old_order(r, counter_block, 1, ranks);
  stack_by_old_order(r, alpha_block, static_cast<std::uint8_t>(1 + level_span(r, counter_block)),
                     ranks);
  return TotalPreorder(std::move(ranks));
}

TotalPreorder contract_trivial_order(const TotalPreorder& r, WorldMask alpha, WorldMask universe) {
  const WorldMask counter = universe & ~alpha;
  const WorldMask bottom = (r.bottom() & counter) ? r.bottom() : (r.bottom() | counter);
  return TotalPreorder::two_level(bottom, r.world_count());
}

TotalPreorder revise_natural_order(const TotalPreorder& r, WorldMask alpha, WorldMask universe) {
  const WorldMask bottom = revised_belief_mask(r, alpha);
  std::vector<std::uint8_t> ranks(r.world_count(), 0);
  stack_by_old_order(r, universe & ~bottom, 1, ranks);
  return TotalPreorder(std::move(ranks));
}

TotalPreorder revise_lexicographic_order(const TotalPreorder& r, WorldMask alpha,
                                         WorldMask universe) {
  std::vector<std::uint8_t> ranks(r.world_count(), 0);
  stack_by_old_order(r, alpha, 0, ranks);
  stack_by_old_order(r, universe & ~alpha, level_span(r, alpha), ranks);
  return TotalPreorder(std::move(ranks));
}

namespace {

const ChangeOperator kContractNatural{"natural", OperatorFlavor::Contraction,
                                      &contract_natural_order, false};
const ChangeOperator kContractModerate{"moderate", OperatorFlavor::Contraction,
                                       &contract_moderate_order, false};
const ChangeOperator kContractTrivial{"trivial", OperatorFlavor::Contraction,
                                      &contract_trivial_order, true};
const ChangeOperator kReviseNatural{"natural", OperatorFlavor::Revision, &revise_natural_order,
                                    false};
const ChangeOperator kReviseLex{"lex", OperatorFlavor::Revision, &revise_lexicographic_order,
                                false};

}  // namespace

const ChangeOperator& contraction_strategy(std::string_view name) {
  if (name == "natural") return kContractNatural;
  if (name == "moderate") return kContractModerate;
  if (name == "trivial") return kContractTrivial;
  throw UnknownNameError("unknown contraction strategy: '" + std::string(name) + "'");
}

const ChangeOperator& revision_strategy(std::string_view name) {
  if (name == "natural") return kReviseNatural;
  if (name == "lex") return kReviseLex;
  throw UnknownNameError("unknown revision strategy: '" + std::string(name) + "'");
}

const std::vector<const ChangeOperator*>& builtin_contractions() {
  static const std::vector<const ChangeOperator*> ops{&kContractNatural, &kContractModerate,
                                                      &kContractTrivial};
  return ops;
}

const std::vector<const ChangeOperator*>& builtin_revisions() {
  static const std::vector<const ChangeOperator*> ops{&kReviseNatural, &kReviseLex};
  return ops;
}

EpistemicState apply(const ChangeOperator& op, const EpistemicState& state, const Formula& input) {
  if (state.signature() != input.signature())
    throw InvalidValueError("formula signature does not match the state");
  if (op.flavor == OperatorFlavor::Revision && !input.satisfiable())
    throw InconsistentInputError("revision by an inconsistent formula");
  return EpistemicState(state.signature(),
                        op.apply(state.order(), input.models(), state.signature().universe()),
                        state.label());
}

EpistemicState contract_natural(const EpistemicState& state, const Formula& alpha) {
  return apply(kContractNatural, state, alpha);
}
EpistemicState contract_moderate(const EpistemicState& state, const Formula& alpha) {
  return apply(kContractModerate, state, alpha);
}
EpistemicState contract_trivial(const EpistemicState& state, const Formula& alpha) {
  return apply(kContractTrivial, state, alpha);
}
EpistemicState revise_natural(const EpistemicState& state, const Formula& alpha) {
  return apply(kReviseNatural, state, alpha);
}
EpistemicState revise_lexicographic(const EpistemicState& state, const Formula& alpha) {
  return apply(kReviseLex, state, alpha);
}

std::vector<EpistemicState> apply_script(const EpistemicState& initial,
                                         const std::vector<ScriptStep>& steps,
                                         const OperatorConfig& config) {
  std::vector<EpistemicState> trace{initial};
  for (std::size_t i = 0; i < steps.size(); ++i) {
    const auto& op =
        steps[i].verb == ChangeVerb::Contract ? *config.contraction : *config.revision;
    try {
      trace.push_back(apply(op, trace.back(), steps[i].formula));
    } catch (const std::exception& e) {
      throw ScriptStepError(i + 1, e.what());
    }
  }
  return trace;
}

}  // namespace bk
