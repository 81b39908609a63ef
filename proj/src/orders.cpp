#include "beliefkernel/orders.hpp"

#include <algorithm>
#include <array>

namespace bk {

TotalPreorder::TotalPreorder(std::vector<std::uint8_t> ranks) : ranks_(std::move(ranks)) {
  if (ranks_.empty()) throw InvalidValueError("preorder needs a nonempty world-space");
  if (ranks_.size() > 64) throw ScopeError("world-space exceeds 64 worlds");
  // Normalize: compact the used ranks to 0..k, preserving order.
  std::array<std::uint8_t, 256> seen{};
  for (auto r : ranks_) seen[r] = 1;
  std::array<std::uint8_t, 256> squash{};
  std::uint8_t next = 0;
  for (int r = 0; r < 256; ++r)
    if (seen[r]) squash[r] = next++;
  for (auto& r : ranks_) r = squash[r];
  levels_ = next;
}

TotalPreorder TotalPreorder::flat(int world_count) {
  return TotalPreorder(std::vector<std::uint8_t>(world_count, 0));
}

TotalPreorder TotalPreorder::two_level(WorldMask bottom, int world_count) {
  std::vector<std::uint8_t> ranks(world_count, 1);
  for (int w = 0; w < world_count; ++w)
    if (bottom & (WorldMask{1} << w)) ranks[w] = 0;
  return TotalPreorder(std::move(ranks));
}

WorldMask TotalPreorder::level(int r) const {
  WorldMask m = 0;
  for (int w = 0; w < world_count(); ++w)
    if (ranks_[w] == r) m |= WorldMask{1} << w;
  return m;
}

WorldMask TotalPreorder::min_of(WorldMask subset) const {
  if (subset == 0) return 0;
  std::uint8_t best = 255;
  for (int w = 0; w < world_count(); ++w)
    if (subset & (WorldMask{1} << w)) best = std::min(best, ranks_[w]);
  WorldMask m = 0;
  for (int w = 0; w < world_count(); ++w)
    if ((subset & (WorldMask{1} << w)) && ranks_[w] == best) m |= WorldMask{1} << w;
  return m;
}

std::uint64_t TotalPreorder::packed() const {
  std::uint64_t key = 0;
  for (int w = world_count() - 1; w >= 0; --w) key = (key << 8) | ranks_[w];
  return key;
}

namespace {

// Lowest rank present in a mask, or 255 for the empty mask.
std::uint8_t min_rank(const TotalPreorder& r, WorldMask mask) {
  std::uint8_t best = 255;
  for (int w = 0; w < r.world_count(); ++w)
    if (mask & (WorldMask{1} << w)) best = std::min(best, r.rank(w));
  return best;
}

}  // namespace

bool formula_weakly_precedes(const TotalPreorder& r, WorldMask phi, WorldMask psi) {
  if (psi == 0) return true;  // nothing to match
  return min_rank(r, phi) <= min_rank(r, psi);
}

bool formula_strictly_precedes(const TotalPreorder& r, WorldMask phi, WorldMask psi) {
  if (psi == 0) return true;
  return min_rank(r, phi) < min_rank(r, psi);
}

bool formula_weakly_precedes(const TotalPreorder& r, const Formula& phi, const Formula& psi) {
  return formula_weakly_precedes(r, phi.models(), psi.models());
}

bool formula_strictly_precedes(const TotalPreorder& r, const Formula& phi, const Formula& psi) {
  return formula_strictly_precedes(r, phi.models(), psi.models());
}

bool preorder_accepts_conditional(const TotalPreorder& r, WorldMask antecedent, WorldMask consequent,
                                  WorldMask universe) {
  const WorldMask counter = antecedent & ~consequent & universe;
  if (counter == 0) return true;
  const WorldMask support = antecedent & consequent;
  return min_rank(r, support) < min_rank(r, counter);
}

bool preorder_accepts_conditional(const TotalPreorder& r, const Formula& antecedent,
                                  const Formula& consequent) {
  return preorder_accepts_conditional(r, antecedent.models(), consequent.models(),
                                      antecedent.signature().universe());
}

bool preorder_accepts_contractional(const TotalPreorder& r, WorldMask removed, WorldMask retained,
                                    WorldMask universe) {
  if (!subset_of(r.bottom(), retained)) return false;
  const WorldMask not_removed = universe & ~removed;
  const WorldMask counter = not_removed & ~retained;
  if (counter == 0) return true;
  const WorldMask support = not_removed & retained;
  return min_rank(r, support) < min_rank(r, counter);
}

bool preorder_accepts_contractional(const TotalPreorder& r, const Formula& removed,
                                    const Formula& retained) {
  return preorder_accepts_contractional(r, removed.models(), retained.models(),
                                        removed.signature().universe());
}

EpistemicState::EpistemicState(Signature sig, TotalPreorder order, std::optional<std::string> label)
    : sig_(std::move(sig)), order_(std::move(order)), label_(std::move(label)) {
  if (order_.world_count() != sig_.world_count())
    throw InvalidValueError("preorder world-space does not match the signature");
}

EpistemicState state_for_belief_set(const BeliefSet& beliefs, std::optional<std::string> label) {
  if (!beliefs.consistent()) throw InconsistentInputError("belief set has no models");
  return EpistemicState(beliefs.signature(),
                        TotalPreorder::two_level(beliefs.models(), beliefs.signature().world_count()),
                        std::move(label));
}

namespace {

// Ordered set partitions: pick the level-0 block among the remaining worlds,
// then recurse. Submasks are visited descending, so the flat order comes
// first and the order is canonical.
void enumerate_rec(std::uint32_t remaining, std::uint8_t level, std::vector<std::uint8_t>& ranks,
                   const std::function<void(const std::vector<std::uint8_t>&)>& visit) {
  if (remaining == 0) {
    visit(ranks);
    return;
  }
  for (std::uint32_t block = remaining; block != 0; block = (block - 1) & remaining) {
    for (int w = 0; w < static_cast<int>(ranks.size()); ++w)
      if (block & (1u << w)) ranks[w] = level;
    enumerate_rec(remaining & ~block, level + 1, ranks, visit);
  }
}

}  // namespace

void for_each_total_preorder(int world_count,
                             const std::function<void(const std::vector<std::uint8_t>&)>& visit) {
  if (world_count < 1 || world_count > kMaxEnumerationWorlds)
    throw ScopeError("preorder enumeration supports 1.." +
                     std::to_string(kMaxEnumerationWorlds) + " worlds");
  std::vector<std::uint8_t> ranks(world_count, 0);
  enumerate_rec((1u << world_count) - 1, 0, ranks, visit);
}

std::vector<TotalPreorder> enumerate_preorders(const Signature& sig) {
  std::vector<TotalPreorder> out;
  for_each_total_preorder(sig.world_count(),
                          [&](const std::vector<std::uint8_t>& ranks) { out.emplace_back(ranks); });
  return out;
}

std::uint64_t count_total_preorders(int world_count) {
  std::uint64_t n = 0;
  for_each_total_preorder(world_count, [&](const std::vector<std::uint8_t>&) { ++n; });
  return n;
}

}  // namespace bk
