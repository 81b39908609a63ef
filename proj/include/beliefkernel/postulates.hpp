#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "beliefkernel/operators.hpp"

namespace bk {

enum class PostulateForm { Belief, Conditional, Relational };

// One entry of the postulate catalog. `arity` counts the quantified formulas
// (alpha, then beta, then gamma); relational postulates additionally quantify
// world pairs inside the checker.
struct PostulateInfo {
  std::string name;  // canonical id, e.g. "IC2-COND"
  OperatorFlavor flavor;
  int arity;
  PostulateForm form;
};

const std::vector<PostulateInfo>& postulate_catalog();
// Case-insensitive lookup; '_' and '-' are interchangeable. Null when absent.
const PostulateInfo* find_postulate(std::string_view name);

enum class QuantMode { Exhaustive, Sampled };

struct Quantification {
  QuantMode mode = QuantMode::Exhaustive;
  std::uint64_t seed = 0;
  std::uint64_t samples = 10000;
};

enum class VerdictStatus { Holds, Fails };

// A single re-checkable instance: the state (by its rank map), the quantified
// formula classes (by model set) and, for relational postulates, the world
// pair that breaks the condition.
struct PostulateWitness {
  std::vector<std::uint8_t> state_ranks;
  WorldMask alpha = 0;
  WorldMask beta = 0;
  WorldMask gamma = 0;
  int world1 = -1;
  int world2 = -1;
};

struct PostulateVerdict {
  std::string postulate;
  std::string op_name;
  int signature_size = 0;
  Quantification quant;
  VerdictStatus status = VerdictStatus::Holds;
  std::uint64_t checks_performed = 0;  // includes vacuous instances
  std::uint64_t vacuous = 0;
  std::optional<PostulateWitness> witness;  // present iff status == Fails

  bool holds() const noexcept { return status == VerdictStatus::Holds; }
};

// Quantifies states over the preorder enumeration (or a seeded sample) and
// formulas over semantic classes, evaluating the postulate body literally.
// Exhaustive mode needs signature size <= 2, sampled mode size <= 3.
PostulateVerdict check_postulate(const ChangeOperator& op, const PostulateInfo& p,
                                 const Signature& sig, const Quantification& quant = {});
PostulateVerdict check_postulate(const ChangeOperator& op, std::string_view postulate,
                                 const Signature& sig, const Quantification& quant = {});

// Re-evaluates the single witness instance; true when the violation is
// reproduced.
bool replay_witness(const ChangeOperator& op, const PostulateInfo& p, const Signature& sig,
                    const PostulateWitness& witness);

// First witness in canonical enumeration order, or absent. The search tries
// the proof-shaped instances first: singleton-belief states and formulas
// whose negation has at most two models.
std::optional<PostulateWitness> find_counterexample(const ChangeOperator& op,
                                                    const PostulateInfo& p, const Signature& sig);

// Non-existence results quantified over *all* contraction-compatible
// operators, not just the built-in strategies: for every preorder a faithful
// assignment could give a singleton-belief state, some instance violates the
// postulate whichever posterior preorder the operator picks. Supported for
// the postulates the characterization theorems rule out entirely.
bool impossibility_supported(const PostulateInfo& p);

struct ImpossibilityWitness {
  std::vector<std::uint8_t> assigned_ranks;  // the assignment's value at the state
  WorldMask alpha = 0;
  WorldMask beta = 0;
  WorldMask gamma = 0;
};

struct ImpossibilityReport {
  std::string postulate;
  bool verified = false;
  std::uint64_t assignments_checked = 0;
  std::optional<ImpossibilityWitness> example;
};

ImpossibilityReport verify_impossibility(const PostulateInfo& p, const Signature& sig);

// Characterization theorems: each theorem names clusters of postulate groups
// whose verdict vectors must agree. A cluster may carry a guard postulate
// (the equivalence is claimed only when the guard holds).
enum class TheoremId { Thm1, Prop9, Prop13, Prop17_18, Prop25, Prop31, Prop34, Prop35 };

TheoremId theorem_from_name(std::string_view name);
std::string theorem_name(TheoremId id);
const std::vector<TheoremId>& all_theorems();

struct TheoremGroup {
  std::string name;
  std::vector<std::string> postulates;
  bool holds = true;
  std::string failed_postulate;  // set when !holds
  std::optional<PostulateWitness> witness;
};

struct TheoremCluster {
  std::string name;
  std::string guard;  // empty = unconditional
  bool applicable = true;
  bool agree = true;
  std::vector<TheoremGroup> groups;
};

struct TheoremReport {
  std::string theorem;
  std::string op_name;
  int signature_size = 0;
  bool precondition_ok = true;   // op passed (C1)-(C7)
  std::string precondition_detail;
  std::vector<TheoremCluster> clusters;
  bool pass = false;  // precondition_ok && every applicable cluster agrees
};

TheoremReport verify_characterization(const ChangeOperator& op, TheoremId theorem,
                                      const Signature& sig, const Quantification& quant = {});

// Verdict per (operator, postulate) cell.
struct MatrixRow {
  std::string op_name;
  std::vector<VerdictStatus> cells;
};

struct EquivalenceMatrix {
  std::vector<std::string> postulates;
  std::vector<MatrixRow> rows;
};

EquivalenceMatrix equivalence_matrix(const std::vector<const ChangeOperator*>& ops,
                                     const std::vector<std::string>& postulates,
                                     const Signature& sig, const Quantification& quant = {});

// Worker-count override used by exhaustive sweeps (BELIEF_KERNEL_WORKERS).
int sweep_worker_count();

}  // namespace bk
