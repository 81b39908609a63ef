#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "beliefkernel/errors.hpp"

namespace bk {

// A set of worlds, one bit per world index. World index i assigns atom k the
// value (i >> k) & 1, with atoms numbered in signature order.
using WorldMask = std::uint64_t;

inline bool subset_of(WorldMask x, WorldMask y) noexcept { return (x & ~y) == 0; }
inline int popcount(WorldMask x) noexcept { return __builtin_popcountll(x); }

// Finite propositional signature. Immutable, cheap to copy.
class Signature {
 public:
  // World masks are 64-bit, so at most 6 atoms (64 worlds).
  static constexpr int kMaxAtoms = 6;

  explicit Signature(std::vector<std::string> atoms);

  int atom_count() const noexcept { return static_cast<int>(impl_->atoms.size()); }
  int world_count() const noexcept { return 1 << atom_count(); }
  WorldMask universe() const noexcept {
    return world_count() == 64 ? ~WorldMask{0} : (WorldMask{1} << world_count()) - 1;
  }
  const std::vector<std::string>& atoms() const noexcept { return impl_->atoms; }
  const std::string& atom(int k) const { return impl_->atoms.at(k); }
  int index_of(std::string_view name) const noexcept;  // -1 when absent

  bool operator==(const Signature& other) const {
    return impl_ == other.impl_ || impl_->atoms == other.impl_->atoms;
  }
  bool operator!=(const Signature& other) const { return !(*this == other); }

 private:
  struct Impl {
    std::vector<std::string> atoms;
  };
  std::shared_ptr<const Impl> impl_;
};

// One truth assignment over a signature, identified by its index.
struct World {
  int index = 0;
  bool true_at(int atom) const noexcept { return (index >> atom) & 1; }
  bool operator==(const World&) const = default;
};

// Text form: atoms in signature order, "-" prefix when false, e.g. "a -b".
std::string world_name(World w, const Signature& sig);
World world_from_name(std::string_view text, const Signature& sig);
std::vector<World> worlds_in(WorldMask mask);

// Propositional sentence with canonical model-set semantics. The model set is
// computed once at construction; semantic equality is model-set equality.
class Formula {
 public:
  static Formula parse(std::string_view text, const Signature& sig);
  static Formula from_models(WorldMask models, const Signature& sig);
  static Formula top(const Signature& sig);
  static Formula bottom(const Signature& sig);

  const Signature& signature() const noexcept { return sig_; }
  WorldMask models() const noexcept { return models_; }
  std::vector<World> model_worlds() const { return worlds_in(models_); }
  bool satisfiable() const noexcept { return models_ != 0; }
  bool tautology() const noexcept { return models_ == sig_.universe(); }
  bool equivalent_to(const Formula& other) const noexcept { return models_ == other.models_; }

  std::string text() const;

  friend Formula conj(const Formula& lhs, const Formula& rhs);
  friend Formula disj(const Formula& lhs, const Formula& rhs);
  friend Formula neg(const Formula& operand);

  struct Node;  // opaque AST node, defined in logic.cpp
  using NodePtr = std::shared_ptr<const Node>;

 private:
  Formula(NodePtr ast, Signature sig);

  NodePtr ast_;
  Signature sig_;
  WorldMask models_ = 0;
};

// Deductively closed set of sentences, canonically its model set.
class BeliefSet {
 public:
  BeliefSet(WorldMask models, const Signature& sig) : models_(models), sig_(sig) {}
  static BeliefSet closure_of(const Formula& basis) {
    return BeliefSet(basis.models(), basis.signature());
  }

  WorldMask models() const noexcept { return models_; }
  const Signature& signature() const noexcept { return sig_; }
  bool consistent() const noexcept { return models_ != 0; }
  // Membership in the closure: phi in Bel iff models(Bel) |= phi.
  bool contains(const Formula& phi) const noexcept { return subset_of(models_, phi.models()); }

  bool operator==(const BeliefSet& other) const { return models_ == other.models_; }

 private:
  WorldMask models_;
  Signature sig_;
};

inline WorldMask models_of(const Formula& phi) noexcept { return phi.models(); }
Formula formula_from_models(WorldMask models, const Signature& sig);
inline bool entails(const BeliefSet& x, const Formula& phi) noexcept { return x.contains(phi); }

// X and Y agree on everything about alpha: Mod(X) and Mod(Y) contain the same
// models of alpha.
inline bool alpha_equivalent(WorldMask x, WorldMask y, WorldMask alpha) noexcept {
  return (x & alpha) == (y & alpha);
}
inline bool alpha_equivalent(const BeliefSet& x, const BeliefSet& y, const Formula& alpha) noexcept {
  return alpha_equivalent(x.models(), y.models(), alpha.models());
}

}  // namespace bk
