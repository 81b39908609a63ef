#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "beliefkernel/logic.hpp"

namespace bk {

// Total preorder over a world-space, stored as one rank per world. Ranks are
// kept normalized: the used levels are exactly 0..k with level 0 nonempty.
class TotalPreorder {
 public:
  explicit TotalPreorder(std::vector<std::uint8_t> ranks);
  static TotalPreorder flat(int world_count);
  // bottom at rank 0, everything else at rank 1 (flat when bottom is all).
  static TotalPreorder two_level(WorldMask bottom, int world_count);

  int world_count() const noexcept { return static_cast<int>(ranks_.size()); }
  int level_count() const noexcept { return levels_; }
  std::uint8_t rank(int world) const { return ranks_[world]; }
  std::uint8_t rank(World w) const { return ranks_[w.index]; }
  const std::vector<std::uint8_t>& ranks() const noexcept { return ranks_; }

  WorldMask level(int r) const;
  WorldMask bottom() const { return level(0); }
  // Minimal worlds of the subset; empty iff subset is empty.
  WorldMask min_of(WorldMask subset) const;

  bool leq(int w1, int w2) const { return ranks_[w1] <= ranks_[w2]; }
  bool lt(int w1, int w2) const { return ranks_[w1] < ranks_[w2]; }

  // Ranks packed 8 bits per world; usable as a hash key for world_count <= 8.
  std::uint64_t packed() const;

  bool operator==(const TotalPreorder& other) const { return ranks_ == other.ranks_; }

 private:
  std::vector<std::uint8_t> ranks_;
  int levels_ = 0;
};

// Lifted comparison of formulas under a preorder: phi precedes psi when every
// minimal psi-world is matched by a minimal phi-world at least as plausible
// (strictly more plausible for the strict variant).
bool formula_weakly_precedes(const TotalPreorder& r, WorldMask phi, WorldMask psi);
bool formula_strictly_precedes(const TotalPreorder& r, WorldMask phi, WorldMask psi);
bool formula_weakly_precedes(const TotalPreorder& r, const Formula& phi, const Formula& psi);
bool formula_strictly_precedes(const TotalPreorder& r, const Formula& phi, const Formula& psi);

inline WorldMask min_worlds(WorldMask subset, const TotalPreorder& r) { return r.min_of(subset); }

// (consequent | antecedent): every antecedent-and-not-consequent world is
// strictly beaten by some antecedent-and-consequent world.
bool preorder_accepts_conditional(const TotalPreorder& r, WorldMask antecedent, WorldMask consequent,
                                  WorldMask universe);
bool preorder_accepts_conditional(const TotalPreorder& r, const Formula& antecedent,
                                  const Formula& consequent);

// (retained - removed): the global minimum satisfies retained, and among the
// counter-models of removed every not-retained world is strictly beaten by a
// retained one.
bool preorder_accepts_contractional(const TotalPreorder& r, WorldMask removed, WorldMask retained,
                                    WorldMask universe);
bool preorder_accepts_contractional(const TotalPreorder& r, const Formula& removed,
                                    const Formula& retained);

// Epistemic state: a total preorder whose rank-0 level is the belief models.
// Faithfulness holds by construction and the belief set is always consistent.
class EpistemicState {
 public:
  EpistemicState(Signature sig, TotalPreorder order, std::optional<std::string> label = {});

  const Signature& signature() const noexcept { return sig_; }
  const TotalPreorder& order() const noexcept { return order_; }
  const std::optional<std::string>& label() const noexcept { return label_; }
  WorldMask belief_models() const { return order_.bottom(); }

  bool operator==(const EpistemicState& other) const {
    return sig_ == other.sig_ && order_ == other.order_;
  }

 private:
  Signature sig_;
  TotalPreorder order_;
  std::optional<std::string> label_;
};

inline BeliefSet beliefs(const EpistemicState& state) {
  return BeliefSet(state.belief_models(), state.signature());
}

// Canonical two-level state believing exactly the given consistent set.
EpistemicState state_for_belief_set(const BeliefSet& beliefs, std::optional<std::string> label = {});

// Visits every weak order on a world-space of the given size exactly once, in
// a fixed canonical order (the flat order first). The rank buffer passed to
// the callback is reused between calls.
void for_each_total_preorder(int world_count,
                             const std::function<void(const std::vector<std::uint8_t>&)>& visit);

// Materialized enumeration; world-space limited to 8 (signature size 3).
std::vector<TotalPreorder> enumerate_preorders(const Signature& sig);
std::uint64_t count_total_preorders(int world_count);

constexpr int kMaxEnumerationWorlds = 8;

}  // namespace bk
