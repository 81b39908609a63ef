#include <doctest.h>

#include <set>

#include "beliefkernel/json_io.hpp"
#include "test_support.hpp"

using namespace bk;
using bktest::mask_of;
using bktest::sig_ab;

namespace {

const Signature kAB = sig_ab();
const TotalPreorder kExample =
    bktest::ranks_of(kAB, {{"a b", 0}, {"a -b", 1}, {"-a b", 1}, {"-a -b", 2}});

}  // namespace

TEST_CASE("normalization and constructors") {
  // gaps are squashed, order preserved
  const TotalPreorder gappy({5, 0, 5, 9});
  CHECK(gappy.ranks() == std::vector<std::uint8_t>{1, 0, 1, 2});
  CHECK(gappy.level_count() == 3);
  CHECK(TotalPreorder::flat(4).level_count() == 1);
  CHECK(TotalPreorder::two_level(0b0011, 4).ranks() == std::vector<std::uint8_t>{0, 0, 1, 1});
  CHECK(TotalPreorder::two_level(0xF, 4).level_count() == 1);
  CHECK_THROWS_AS(TotalPreorder(std::vector<std::uint8_t>{}), InvalidValueError);
}

TEST_CASE("min_worlds") {
  CHECK(min_worlds(kAB.universe(), kExample) == mask_of(kAB, "a & b"));
  CHECK(min_worlds(0, kExample) == 0);
  CHECK(min_worlds(mask_of(kAB, "!a"), kExample) == mask_of(kAB, "!a & b"));
}

TEST_CASE("lifted formula comparison") {
  CHECK(formula_strictly_precedes(kExample, Formula::parse("b", kAB), Formula::parse("!b", kAB)));
  const Formula phi = Formula::parse("a", kAB);
  CHECK_FALSE(formula_strictly_precedes(kExample, phi, phi));
  CHECK(formula_weakly_precedes(kExample, phi, phi));
  // min-rank 0 versus min-rank 1
  CHECK(formula_strictly_precedes(kExample, Formula::parse("a & b", kAB),
                                  Formula::parse("a & !b", kAB)));
}

TEST_CASE("conditional acceptance by a preorder") {
  const Formula top = Formula::top(kAB), bot = Formula::bottom(kAB);
  CHECK(preorder_accepts_conditional(kExample, top, top));
  CHECK(preorder_accepts_conditional(kExample, Formula::parse("a", kAB), Formula::parse("b", kAB)));
  CHECK(preorder_accepts_conditional(kExample, bot, Formula::parse("a & !a", kAB)));
}

TEST_CASE("contractional acceptance by a preorder") {
  const Formula a = Formula::parse("a", kAB), b = Formula::parse("b", kAB);
  CHECK(preorder_accepts_contractional(kExample, a, b));
  CHECK(preorder_accepts_contractional(kExample, a, Formula::top(kAB)));
  // flat order: no strictly smaller world exists
  const TotalPreorder flat = TotalPreorder::flat(4);
  CHECK_FALSE(preorder_accepts_contractional(flat, a, b));
}

TEST_CASE("acceptance coherence with minimal worlds") {
  // conditional: accepted iff min(Mod(antecedent)) |= consequent (antecedent
  // satisfiable); contractional: accepted iff the global minimum and the
  // minimal counter-models all satisfy the retained formula.
  for (const auto& r : enumerate_preorders(kAB)) {
    for (WorldMask a = 0; a <= kAB.universe(); ++a)
      for (WorldMask b = 0; b <= kAB.universe(); ++b) {
        if (a != 0)
          CHECK(preorder_accepts_conditional(r, a, b, kAB.universe()) ==
                subset_of(r.min_of(a), b));
        CHECK(preorder_accepts_contractional(r, a, b, kAB.universe()) ==
              subset_of(r.bottom() | r.min_of(kAB.universe() & ~a), b));
      }
  }
}

TEST_CASE("sufficient condition via the lifted order") {
  // If retained < !retained and !removed & retained < !removed & !retained,
  // the contractional is accepted.
  const WorldMask U = kAB.universe();
  for (const auto& r : enumerate_preorders(kAB))
    for (WorldMask a = 0; a <= U; ++a)
      for (WorldMask b = 0; b <= U; ++b) {
        const bool believed = formula_strictly_precedes(r, b, U & ~b);
        const bool retained = formula_strictly_precedes(r, (U & ~a) & b, (U & ~a) & ~b);
        if (believed && retained) CHECK(preorder_accepts_contractional(r, a, b, U));
      }
}

TEST_CASE("epistemic states") {
  const EpistemicState psi(kAB, kExample, "running");
  CHECK(psi.belief_models() == mask_of(kAB, "a & b"));
  CHECK(beliefs(psi).contains(Formula::parse("a", kAB)));
  CHECK(psi.label() == "running");
  CHECK_THROWS_AS(EpistemicState(kAB, TotalPreorder::flat(2)), InvalidValueError);

  const EpistemicState two = state_for_belief_set(BeliefSet(mask_of(kAB, "a & b"), kAB));
  CHECK(two.order().ranks() == std::vector<std::uint8_t>{1, 1, 1, 0});
  CHECK(state_for_belief_set(BeliefSet(kAB.universe(), kAB)).order().level_count() == 1);
  // singleton-belief state used by the impossibility constructions
  const EpistemicState w2 = state_for_belief_set(BeliefSet(0b0100, kAB));
  CHECK(w2.order().bottom() == 0b0100);
  CHECK_THROWS_AS(state_for_belief_set(BeliefSet(0, kAB)), InconsistentInputError);
}

TEST_CASE("beliefs from rank-0 level") {
  CHECK(beliefs(EpistemicState(kAB, TotalPreorder::flat(4))).models() == kAB.universe());
  const auto cn_b = bktest::state_of(kAB, {{"a b", 0}, {"-a b", 0}, {"a -b", 1}, {"-a -b", 2}});
  CHECK(beliefs(cn_b).models() == mask_of(kAB, "b"));
}

TEST_CASE("preorder enumeration counts match the recursive oracle") {
  for (int worlds = 1; worlds <= 4; ++worlds)
    CHECK(count_total_preorders(worlds) == bktest::fubini(worlds));
  CHECK(bktest::fubini(1) == 1);
  CHECK(bktest::fubini(2) == 3);
  CHECK(bktest::fubini(3) == 13);
  CHECK(bktest::fubini(4) == 75);
  CHECK(bktest::fubini(8) == 545835);
}

TEST_CASE("preorder enumeration is duplicate-free and normalized") {
  const auto all = enumerate_preorders(kAB);
  CHECK(all.size() == 75);
  CHECK(all.front() == TotalPreorder::flat(4));
  std::set<std::uint64_t> seen;
  for (const auto& r : all) {
    CHECK(seen.insert(r.packed()).second);
    CHECK(r.bottom() != 0);
    CHECK(TotalPreorder(r.ranks()) == r);  // already normalized
  }
  CHECK_THROWS_AS(enumerate_preorders(Signature({"a", "b", "c", "d"})), ScopeError);
}

TEST_CASE("preorder JSON round trip and validation") {
  const json j = preorder_to_json(kExample, kAB);
  CHECK(preorder_from_json(j, kAB) == kExample);

  json missing = j;
  missing["ranks"].erase("a b");
  CHECK_THROWS_AS(preorder_from_json(missing, kAB), InvalidValueError);

  json extra = j;
  extra["ranks"]["a c"] = 0;
  CHECK_THROWS_AS(preorder_from_json(extra, kAB), ParseError);

  json negative = j;
  negative["ranks"]["a b"] = -1;
  CHECK_THROWS_AS(preorder_from_json(negative, kAB), InvalidValueError);

  json wrong_sig = j;
  wrong_sig["signature"] = json::array({"x", "y"});
  CHECK_THROWS_AS(preorder_from_json(wrong_sig, kAB), InvalidValueError);

  // normalization on load
  json gappy{{"ranks", {{"a b", 0}, {"a -b", 4}, {"-a b", 4}, {"-a -b", 9}}}};
  CHECK(preorder_from_json(gappy, kAB) == kExample);
}
