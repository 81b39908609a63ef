#include <doctest.h>

#include "test_support.hpp"

using namespace bk;
using bktest::mask_of;
using bktest::ranks_of;
using bktest::running_example;
using bktest::sig_ab;

namespace {

const Signature kAB = sig_ab();
const WorldMask kU = kAB.universe();

Formula f(const std::string& text) { return Formula::parse(text, kAB); }

}  // namespace

TEST_CASE("contracted belief models (compatibility equation)") {
  const EpistemicState psi = running_example();
  CHECK(contracted_belief_models(psi, f("a")) == mask_of(kAB, "b"));
  CHECK(contracted_belief_models(psi, f("top")) == psi.belief_models());
  // vacuity: a counter-model already sits at rank 0
  const EpistemicState flat(kAB, TotalPreorder::flat(4));
  CHECK(contracted_belief_models(flat, f("a")) == kU);
}

TEST_CASE("revised belief models (compatibility equation)") {
  const EpistemicState psi = running_example();
  CHECK(revised_belief_models(psi, f("!a")) == mask_of(kAB, "!a & b"));
  CHECK(revised_belief_models(psi, f("a | b")) == psi.belief_models());  // vacuous revision
  CHECK_THROWS_AS(revised_belief_models(psi, f("bot")), InconsistentInputError);
}

TEST_CASE("natural contraction") {
  const EpistemicState psi = running_example();
  const EpistemicState out = contract_natural(psi, f("a"));
  CHECK(out.order() == ranks_of(kAB, {{"a b", 0}, {"-a b", 0}, {"a -b", 1}, {"-a -b", 2}}));
  CHECK(contract_natural(psi, f("top")) == psi);
  // !a already believed-compatible: nothing changes at all
  const EpistemicState weak = bktest::state_of(
      kAB, {{"a b", 0}, {"-a b", 0}, {"a -b", 1}, {"-a -b", 2}});
  CHECK(contract_natural(weak, f("a")) == weak);

  // the posterior keeps the old order outside the new belief set, both ways
  const WorldMask outside = kU & ~out.belief_models();
  for (int w1 = 0; w1 < 4; ++w1)
    for (int w2 = 0; w2 < 4; ++w2) {
      if (!(outside & (WorldMask{1} << w1)) || !(outside & (WorldMask{1} << w2))) continue;
      CHECK(psi.order().leq(w1, w2) == out.order().leq(w1, w2));
    }
}

TEST_CASE("moderate contraction") {
  const EpistemicState psi = running_example();
  const EpistemicState out = contract_moderate(psi, f("a"));
  CHECK(out.order() == ranks_of(kAB, {{"a b", 0}, {"-a b", 0}, {"-a -b", 1}, {"a -b", 2}}));
  CHECK(contract_moderate(psi, f("top")) == psi);
  CHECK(contract_moderate(psi, f("bot")) == contract_natural(psi, f("bot")));

  // counter-models strictly precede the remaining alpha-worlds
  const WorldMask a = mask_of(kAB, "a");
  const WorldMask post_beliefs = out.belief_models();
  for (int w1 = 0; w1 < 4; ++w1)
    for (int w2 = 0; w2 < 4; ++w2) {
      const bool w1_counter = !((a >> w1) & 1);
      const bool w2_alpha = (a >> w2) & 1;
      if (w1_counter && w2_alpha && !(post_beliefs & (WorldMask{1} << w2)))
        CHECK(out.order().lt(w1, w2));
    }
}

TEST_CASE("trivial contraction") {
  const EpistemicState psi = running_example();
  const EpistemicState out = contract_trivial(psi, f("a"));
  CHECK(out.order() == TotalPreorder::two_level(mask_of(kAB, "!(a & !b)"), 4));
  // model-union oracle: Bel(psi - a) = Cn(Bel(psi)) intersect Cn(!a)
  CHECK(out.belief_models() == (psi.belief_models() | mask_of(kAB, "!a")));
  // alpha not believed: beliefs unchanged, order flattened to two levels
  const EpistemicState weak = bktest::state_of(
      kAB, {{"a b", 0}, {"-a b", 0}, {"a -b", 1}, {"-a -b", 2}});
  const EpistemicState kept = contract_trivial(weak, f("a"));
  CHECK(kept.belief_models() == weak.belief_models());
  CHECK(kept.order().level_count() == 2);
  CHECK(contract_trivial(psi, f("top")).belief_models() == psi.belief_models());
}

TEST_CASE("natural revision") {
  const EpistemicState psi = running_example();
  CHECK(revise_natural(psi, f("!a")).order() ==
        ranks_of(kAB, {{"-a b", 0}, {"a b", 1}, {"a -b", 2}, {"-a -b", 3}}));
  CHECK(revise_natural(psi, f("top")) == psi);
  CHECK(revise_natural(psi, f("a | b")) == psi);  // minimum already inside
  CHECK_THROWS_AS(revise_natural(psi, f("bot")), InconsistentInputError);
}

TEST_CASE("lexicographic revision") {
  const EpistemicState psi = running_example();
  CHECK(revise_lexicographic(psi, f("!a")).order() ==
        ranks_of(kAB, {{"-a b", 0}, {"-a -b", 1}, {"a b", 2}, {"a -b", 3}}));
  CHECK(revise_lexicographic(psi, f("top")) == psi);
  const EpistemicState flat(kAB, TotalPreorder::flat(4));
  CHECK(revise_lexicographic(flat, f("b")).order() == TotalPreorder::two_level(mask_of(kAB, "b"), 4));
  CHECK_THROWS_AS(revise_lexicographic(psi, f("bot")), InconsistentInputError);
}

TEST_CASE("every strategy realizes its compatible belief map") {
  // Exhaustive at two atoms: the posterior rank-0 level equals the belief map
  // computed from the operator's assigned preorder.
  const auto states = enumerate_preorders(kAB);
  for (const ChangeOperator* op : builtin_contractions()) {
    for (const auto& r : states)
      for (WorldMask a = 0; a <= kU; ++a) {
        const TotalPreorder assigned = op->assigned_order(r);
        CHECK(op->apply(r, a, kU).bottom() == contracted_belief_mask(assigned, a, kU));
      }
  }
  for (const ChangeOperator* op : builtin_revisions()) {
    for (const auto& r : states)
      for (WorldMask a = 1; a <= kU; ++a)
        CHECK(op->apply(r, a, kU).bottom() == revised_belief_mask(op->assigned_order(r), a));
  }
}

TEST_CASE("iterated contraction never introduces new beliefs") {
  // Bel(psi - a - b) |= g implies Bel(psi) |= g, for every strategy.
  const auto states = enumerate_preorders(kAB);
  for (const ChangeOperator* op : builtin_contractions())
    for (const auto& r : states)
      for (WorldMask a = 0; a <= kU; ++a)
        for (WorldMask b = 0; b <= kU; ++b) {
          const TotalPreorder once = op->apply(r, a, kU);
          const WorldMask twice = op->apply(once, b, kU).bottom();
          for (WorldMask g = 0; g <= kU; ++g)
            if (subset_of(twice, g)) CHECK(subset_of(r.bottom(), g));
        }
}

TEST_CASE("vacuous contraction") {
  // contracting something not believed keeps the belief set; the natural
  // strategy keeps the entire preorder
  const auto states = enumerate_preorders(kAB);
  for (const auto& r : states)
    for (WorldMask a = 0; a <= kU; ++a) {
      if (subset_of(r.bottom(), a)) continue;  // believed
      for (const ChangeOperator* op : builtin_contractions())
        CHECK(op->apply(r, a, kU).bottom() == r.bottom());
      CHECK(contraction_strategy("natural").apply(r, a, kU) == r);
    }
}

TEST_CASE("apply_script") {
  const OperatorConfig config{&contraction_strategy("natural"), &revision_strategy("natural")};
  const EpistemicState psi = running_example();

  const auto empty = apply_script(psi, {}, config);
  REQUIRE(empty.size() == 1);
  CHECK(empty.front() == psi);

  const std::vector<ScriptStep> steps{{ChangeVerb::Contract, f("a")},
                                      {ChangeVerb::Contract, f("b")}};
  const auto trace = apply_script(psi, steps, config);
  REQUIRE(trace.size() == 3);
  CHECK(trace[0].belief_models() == mask_of(kAB, "a & b"));
  CHECK(trace[1].belief_models() == mask_of(kAB, "b"));
  CHECK(trace[2].belief_models() == mask_of(kAB, "b | a"));

  try {
    apply_script(psi, {{ChangeVerb::Contract, f("a")}, {ChangeVerb::Revise, f("bot")}}, config);
    FAIL("expected a step error");
  } catch (const ScriptStepError& e) {
    CHECK(e.step() == 2);
  }
}

TEST_CASE("strategy registry") {
  CHECK(contraction_strategy("moderate").name == "moderate");
  CHECK(revision_strategy("lex").name == "lex");
  CHECK_THROWS_AS(contraction_strategy("lex"), UnknownNameError);
  CHECK_THROWS_AS(revision_strategy("severe"), UnknownNameError);
}
