#include "beliefkernel/postulates.hpp"

#include <algorithm>
#include <cstdlib>
#include <random>
#include <thread>
#include <unordered_map>

namespace bk {

namespace {

// ---------------------------------------------------------------------------
// Memoized operator evaluation over interned states
// ---------------------------------------------------------------------------

// States are interned by their packed rank map, so repeated applications hit
// the memo and posterior states are shared. Only used for world-spaces of at
// most 8 worlds (mask fits one byte in the memo key).
struct Arena {
  const ChangeOperator& op;
  int nw;
  WorldMask U;
  std::vector<TotalPreorder> states;
  std::vector<WorldMask> bottoms;
  std::vector<std::uint32_t> assigned;  // index of the assignment's preorder
  std::unordered_map<std::uint64_t, std::uint32_t> index;
  std::unordered_map<std::uint64_t, std::uint32_t> app;

  Arena(const ChangeOperator& o, int world_count)
      : op(o), nw(world_count), U((WorldMask{1} << world_count) - 1) {
    // packed rank maps and memo keys assume at most 8 worlds
    if (world_count < 1 || world_count > kMaxEnumerationWorlds)
      throw ScopeError("postulate checks support at most 8 worlds");
  }

  std::uint32_t intern(const TotalPreorder& r) {
    const std::uint64_t key = r.packed();
    if (auto it = index.find(key); it != index.end()) return it->second;
    const auto i = static_cast<std::uint32_t>(states.size());
    states.push_back(r);
    bottoms.push_back(r.bottom());
    assigned.push_back(i);
    index.emplace(key, i);
    if (op.flat_assignment) assigned[i] = intern(TotalPreorder::two_level(bottoms[i], nw));
    return i;
  }

  std::uint32_t apply(std::uint32_t s, WorldMask a) {
    const std::uint64_t key = (static_cast<std::uint64_t>(s) << 8) | a;
    if (auto it = app.find(key); it != app.end()) return it->second;
    const std::uint32_t next = intern(op.apply(states[s], a, U));
    app.emplace(key, next);
    return next;
  }

  WorldMask bel(std::uint32_t s) const { return bottoms[s]; }
  const TotalPreorder& order(std::uint32_t s) const { return states[s]; }
  std::uint32_t assigned_of(std::uint32_t s) const { return assigned[s]; }
};

enum class Outcome : std::uint8_t { Pass, Fail, Vacuous };

struct WorldPair {
  int w1 = -1;
  int w2 = -1;
};

using CheckFn = Outcome (*)(Arena&, std::uint32_t, WorldMask, WorldMask, WorldMask, WorldPair&);

inline Outcome verdict(bool ok) { return ok ? Outcome::Pass : Outcome::Fail; }

WorldMask K(Arena& E, std::uint32_t s, WorldMask x) { return E.bel(E.apply(s, x)); }
WorldMask K2(Arena& E, std::uint32_t s, WorldMask x, WorldMask y) {
  return E.bel(E.apply(E.apply(s, x), y));
}

// Sweeps world pairs (w1 in d1, w2 in d2) against a per-pair condition on the
// prior and posterior assigned preorders; records the first breaking pair.
using PairTest = bool (*)(const TotalPreorder& r0, const TotalPreorder& r1, int w1, int w2);

Outcome pair_sweep(Arena& E, std::uint32_t s0, std::uint32_t s1, WorldMask d1, WorldMask d2,
                   PairTest ok, WorldPair& wp) {
  const std::uint32_t a0 = E.assigned_of(s0);
  const std::uint32_t a1 = E.assigned_of(s1);
  const TotalPreorder& r0 = E.order(a0);
  const TotalPreorder& r1 = E.order(a1);
  for (int w1 = 0; w1 < E.nw; ++w1) {
    if (!(d1 & (WorldMask{1} << w1))) continue;
    for (int w2 = 0; w2 < E.nw; ++w2) {
      if (!(d2 & (WorldMask{1} << w2))) continue;
      if (!ok(r0, r1, w1, w2)) {
        wp = {w1, w2};
        return Outcome::Fail;
      }
    }
  }
  return Outcome::Pass;
}

bool leq_iff_leq(const TotalPreorder& r0, const TotalPreorder& r1, int w1, int w2) {
  return r0.leq(w1, w2) == r1.leq(w1, w2);
}
bool leq_imp_leq(const TotalPreorder& r0, const TotalPreorder& r1, int w1, int w2) {
  return !r0.leq(w1, w2) || r1.leq(w1, w2);
}
bool lt_imp_lt(const TotalPreorder& r0, const TotalPreorder& r1, int w1, int w2) {
  return !r0.lt(w1, w2) || r1.lt(w1, w2);
}
bool leq_imp_lt(const TotalPreorder& r0, const TotalPreorder& r1, int w1, int w2) {
  return !r0.leq(w1, w2) || r1.lt(w1, w2);
}
bool post_lt_imp_prior_lt(const TotalPreorder& r0, const TotalPreorder& r1, int w1, int w2) {
  return !r1.lt(w1, w2) || r0.lt(w1, w2);
}
bool post_always_lt(const TotalPreorder&, const TotalPreorder& r1, int w1, int w2) {
  return r1.lt(w1, w2);
}

// ---------------------------------------------------------------------------
// The catalog
// ---------------------------------------------------------------------------
// Conventions inside the checkers: s is the prior state, a/b/g the quantified
// formula classes as model sets, U the universe. Belief-set inclusion
// Bel(X) <= Bel(Y) is the reversed model inclusion Mod(Y) <= Mod(X).

struct Entry {
  const char* name;
  OperatorFlavor flavor;
  int arity;
  PostulateForm form;
  CheckFn fn;
};

constexpr OperatorFlavor C = OperatorFlavor::Contraction;
constexpr OperatorFlavor R = OperatorFlavor::Revision;
constexpr PostulateForm FB = PostulateForm::Belief;
constexpr PostulateForm FC = PostulateForm::Conditional;
constexpr PostulateForm FR = PostulateForm::Relational;

const Entry kCatalog[] = {
    // --- AGM contraction, (C1)-(C7) ---
    {"C1", C, 1, FB,
     +[](Arena& E, std::uint32_t s, WorldMask a, WorldMask, WorldMask, WorldPair&) {
       return verdict(subset_of(E.bel(s), K(E, s, a)));
     }},
    {"C2", C, 1, FB,
     +[](Arena& E, std::uint32_t s, WorldMask a, WorldMask, WorldMask, WorldPair&) {
       if (subset_of(E.bel(s), a)) return Outcome::Vacuous;  // alpha believed
       return verdict(subset_of(K(E, s, a), E.bel(s)));
     }},
    {"C3", C, 1, FB,
     +[](Arena& E, std::uint32_t s, WorldMask a, WorldMask, WorldMask, WorldPair&) {
       if (a == E.U) return Outcome::Vacuous;
       return verdict(!subset_of(K(E, s, a), a));
     }},
    {"C4", C, 1, FB,
     +[](Arena& E, std::uint32_t s, WorldMask a, WorldMask, WorldMask, WorldPair&) {
       return verdict(subset_of(K(E, s, a) & a, E.bel(s)));
     }},
    {"C5", C, 2, FB,
     +[](Arena& E, std::uint32_t s, WorldMask a, WorldMask b, WorldMask, WorldPair&) {
       if (a != b) return Outcome::Vacuous;
       return verdict(K(E, s, a) == K(E, s, b));
     }},
    {"C6", C, 2, FB,
     +[](Arena& E, std::uint32_t s, WorldMask a, WorldMask b, WorldMask, WorldPair&) {
       return verdict(subset_of(K(E, s, a & b), K(E, s, a) | K(E, s, b)));
     }},
    {"C7", C, 2, FB,
     +[](Arena& E, std::uint32_t s, WorldMask a, WorldMask b, WorldMask, WorldPair&) {
       if (subset_of(K(E, s, a & b), b)) return Outcome::Vacuous;  // beta kept
       return verdict(subset_of(K(E, s, b), K(E, s, a & b)));
     }},

    // --- AGM revision, (R1)-(R6); revision is only applied to consistent input ---
    {"R1", R, 1, FB,
     +[](Arena& E, std::uint32_t s, WorldMask a, WorldMask, WorldMask, WorldPair&) {
       if (a == 0) return Outcome::Vacuous;
       return verdict(subset_of(K(E, s, a), a));
     }},
    {"R2", R, 1, FB,
     +[](Arena& E, std::uint32_t s, WorldMask a, WorldMask, WorldMask, WorldPair&) {
       if (a == 0 || (E.bel(s) & a) == 0) return Outcome::Vacuous;
       return verdict(K(E, s, a) == (E.bel(s) & a));
     }},
    {"R3", R, 1, FB,
     +[](Arena& E, std::uint32_t s, WorldMask a, WorldMask, WorldMask, WorldPair&) {
       if (a == 0) return Outcome::Vacuous;
       return verdict(K(E, s, a) != 0);
     }},
    {"R4", R, 2, FB,
     +[](Arena& E, std::uint32_t s, WorldMask a, WorldMask b, WorldMask, WorldPair&) {
       if (a == 0 || a != b) return Outcome::Vacuous;
       return verdict(K(E, s, a) == K(E, s, b));
     }},
    {"R5", R, 2, FB,
     +[](Arena& E, std::uint32_t s, WorldMask a, WorldMask b, WorldMask, WorldPair&) {
       if (a == 0 || b == 0 || (a & b) == 0) return Outcome::Vacuous;
       return verdict(subset_of(K(E, s, a) & b, K(E, s, a & b)));
     }},
    {"R6", R, 2, FB,
     +[](Arena& E, std::uint32_t s, WorldMask a, WorldMask b, WorldMask, WorldPair&) {
       if (a == 0 || b == 0 || (a & b) == 0) return Outcome::Vacuous;
       if ((K(E, s, a) & b) == 0) return Outcome::Vacuous;
       return verdict(subset_of(K(E, s, a & b), K(E, s, a) & b));
     }},

    // --- Iterated revision: minimal change of conditional beliefs ---
    {"IR-MIN", R, 2, FB,
     +[](Arena& E, std::uint32_t s, WorldMask a, WorldMask b, WorldMask, WorldPair&) {
       if (a == 0 || b == 0 || !subset_of(K(E, s, a), E.U & ~b)) return Outcome::Vacuous;
       return verdict(K2(E, s, a, b) == K(E, s, b));
     }},
    {"IR-MIN-COND", R, 3, FC,
     +[](Arena& E, std::uint32_t s, WorldMask a, WorldMask b, WorldMask g, WorldPair&) {
       if (a == 0 || b == 0 || !subset_of(K(E, s, a), E.U & ~b)) return Outcome::Vacuous;
       return verdict(subset_of(K2(E, s, a, b), g) == subset_of(K(E, s, b), g));
     }},
    {"IR-MIN-REL", R, 1, FR,
     +[](Arena& E, std::uint32_t s, WorldMask a, WorldMask, WorldMask, WorldPair& wp) {
       if (a == 0) return Outcome::Vacuous;
       const std::uint32_t s1 = E.apply(s, a);
       const WorldMask outside = E.U & ~E.bel(s1);
       return pair_sweep(E, s, s1, outside, outside, leq_iff_leq, wp);
     }},

    // --- Iterated revision: the four classic iteration postulates ---
    {"IR1", R, 2, FB,
     +[](Arena& E, std::uint32_t s, WorldMask a, WorldMask b, WorldMask, WorldPair&) {
       if (a == 0 || b == 0 || !subset_of(b, a)) return Outcome::Vacuous;
       return verdict(K2(E, s, a, b) == K(E, s, b));
     }},
    {"IR2", R, 2, FB,
     +[](Arena& E, std::uint32_t s, WorldMask a, WorldMask b, WorldMask, WorldPair&) {
       if (a == 0 || b == 0 || (b & a) != 0) return Outcome::Vacuous;
       return verdict(K2(E, s, a, b) == K(E, s, b));
     }},
    {"IR3", R, 2, FB,
     +[](Arena& E, std::uint32_t s, WorldMask a, WorldMask b, WorldMask, WorldPair&) {
       if (a == 0 || b == 0 || !subset_of(K(E, s, b), a)) return Outcome::Vacuous;
       return verdict(subset_of(K2(E, s, a, b), a));
     }},
    {"IR4", R, 2, FB,
     +[](Arena& E, std::uint32_t s, WorldMask a, WorldMask b, WorldMask, WorldPair&) {
       if (a == 0 || b == 0 || (K(E, s, b) & a) == 0) return Outcome::Vacuous;
       return verdict((K2(E, s, a, b) & a) != 0);
     }},
    {"IR1-COND", R, 3, FC,
     +[](Arena& E, std::uint32_t s, WorldMask a, WorldMask b, WorldMask g, WorldPair&) {
       if (a == 0 || b == 0 || !subset_of(b, a)) return Outcome::Vacuous;
       return verdict(subset_of(K(E, s, b), g) == subset_of(K2(E, s, a, b), g));
     }},
    {"IR2-COND", R, 3, FC,
     +[](Arena& E, std::uint32_t s, WorldMask a, WorldMask b, WorldMask g, WorldPair&) {
       if (a == 0 || b == 0 || (b & a) != 0) return Outcome::Vacuous;
       return verdict(subset_of(K(E, s, b), g) == subset_of(K2(E, s, a, b), g));
     }},
    {"IR3-COND", R, 2, FC,
     +[](Arena& E, std::uint32_t s, WorldMask a, WorldMask b, WorldMask, WorldPair&) {
       if (a == 0 || b == 0 || !subset_of(K(E, s, b), a)) return Outcome::Vacuous;
       return verdict(subset_of(K2(E, s, a, b), a));
     }},
    {"IR4-COND", R, 2, FC,
     +[](Arena& E, std::uint32_t s, WorldMask a, WorldMask b, WorldMask, WorldPair&) {
       if (a == 0 || b == 0 || subset_of(K(E, s, b), E.U & ~a)) return Outcome::Vacuous;
       return verdict(!subset_of(K2(E, s, a, b), E.U & ~a));
     }},
    {"IR1-REL", R, 1, FR,
     +[](Arena& E, std::uint32_t s, WorldMask a, WorldMask, WorldMask, WorldPair& wp) {
       if (a == 0) return Outcome::Vacuous;
       return pair_sweep(E, s, E.apply(s, a), a, a, leq_iff_leq, wp);
     }},
    {"IR2-REL", R, 1, FR,
     +[](Arena& E, std::uint32_t s, WorldMask a, WorldMask, WorldMask, WorldPair& wp) {
       if (a == 0) return Outcome::Vacuous;
       const WorldMask na = E.U & ~a;
       return pair_sweep(E, s, E.apply(s, a), na, na, leq_iff_leq, wp);
     }},
    {"IR3-REL", R, 1, FR,
     +[](Arena& E, std::uint32_t s, WorldMask a, WorldMask, WorldMask, WorldPair& wp) {
       if (a == 0) return Outcome::Vacuous;
       return pair_sweep(E, s, E.apply(s, a), a, E.U & ~a, lt_imp_lt, wp);
     }},
    {"IR4-REL", R, 1, FR,
     +[](Arena& E, std::uint32_t s, WorldMask a, WorldMask, WorldMask, WorldPair& wp) {
       if (a == 0) return Outcome::Vacuous;
       return pair_sweep(E, s, E.apply(s, a), a, E.U & ~a, leq_imp_leq, wp);
     }},

    // --- Iterated revision: independence ---
    {"IND-R", R, 2, FB,
     +[](Arena& E, std::uint32_t s, WorldMask a, WorldMask b, WorldMask, WorldPair&) {
       if (a == 0 || b == 0 || (K(E, s, b) & a) == 0) return Outcome::Vacuous;
       return verdict(subset_of(K2(E, s, a, b), a));
     }},
    {"IND-R-COND", R, 2, FC,
     +[](Arena& E, std::uint32_t s, WorldMask a, WorldMask b, WorldMask, WorldPair&) {
       if (a == 0 || b == 0 || (K(E, s, b) & a) == 0) return Outcome::Vacuous;
       return verdict(subset_of(K2(E, s, a, b), a));
     }},
    {"IND-R-REL", R, 1, FR,
     +[](Arena& E, std::uint32_t s, WorldMask a, WorldMask, WorldMask, WorldPair& wp) {
       if (a == 0) return Outcome::Vacuous;
       return pair_sweep(E, s, E.apply(s, a), a, E.U & ~a, leq_imp_lt, wp);
     }},

    // --- Iterated revision: lexicographic ---
    {"IR-LEX", R, 2, FB,
     +[](Arena& E, std::uint32_t s, WorldMask a, WorldMask b, WorldMask, WorldPair&) {
       if (a == 0 || b == 0 || (b & a) == 0) return Outcome::Vacuous;
       return verdict(subset_of(K2(E, s, a, b), a));
     }},
    {"IR-LEX-REL", R, 1, FR,
     +[](Arena& E, std::uint32_t s, WorldMask a, WorldMask, WorldMask, WorldPair& wp) {
       if (a == 0) return Outcome::Vacuous;
       return pair_sweep(E, s, E.apply(s, a), a, E.U & ~a, post_always_lt, wp);
     }},

    // --- The revision iteration postulates read as contraction postulates ---
    {"IR1-CONTR", C, 2, FB,
     +[](Arena& E, std::uint32_t s, WorldMask a, WorldMask b, WorldMask, WorldPair&) {
       if (!subset_of(b, a)) return Outcome::Vacuous;
       return verdict(K2(E, s, a, b) == K(E, s, b));
     }},
    {"IR2-CONTR", C, 2, FB,
     +[](Arena& E, std::uint32_t s, WorldMask a, WorldMask b, WorldMask, WorldPair&) {
       if ((b & a) != 0) return Outcome::Vacuous;
       return verdict(K2(E, s, a, b) == K(E, s, b));
     }},
    {"IR3-CONTR", C, 2, FB,
     +[](Arena& E, std::uint32_t s, WorldMask a, WorldMask b, WorldMask, WorldPair&) {
       if (!subset_of(K(E, s, b), a)) return Outcome::Vacuous;
       return verdict(subset_of(K2(E, s, a, b), a));
     }},
    {"IR4-CONTR", C, 2, FB,
     +[](Arena& E, std::uint32_t s, WorldMask a, WorldMask b, WorldMask, WorldPair&) {
       if ((K(E, s, b) & a) == 0) return Outcome::Vacuous;
       return verdict((K2(E, s, a, b) & a) != 0);
     }},
    {"IR4-REL-CONTR", C, 1, FR,
     +[](Arena& E, std::uint32_t s, WorldMask a, WorldMask, WorldMask, WorldPair& wp) {
       if (!subset_of(E.bel(s), E.U & ~a)) return Outcome::Vacuous;
       return pair_sweep(E, s, E.apply(s, a), a, E.U & ~a, leq_imp_leq, wp);
     }},

    // --- Syntactic analogues (sa) and their halves ---
    {"IC1-COND-SA", C, 3, FC,
     +[](Arena& E, std::uint32_t s, WorldMask a, WorldMask b, WorldMask g, WorldPair&) {
       if (!subset_of(E.U & ~a, b)) return Outcome::Vacuous;
       return verdict(subset_of(K2(E, s, a, b), g) == subset_of(K(E, s, b), g));
     }},
    {"IC2-COND-SA", C, 3, FC,
     +[](Arena& E, std::uint32_t s, WorldMask a, WorldMask b, WorldMask g, WorldPair&) {
       if (!subset_of(a, b)) return Outcome::Vacuous;
       return verdict(subset_of(K2(E, s, a, b), g) == subset_of(K(E, s, b), g));
     }},
    {"IC3-COND-SA", C, 2, FC,
     +[](Arena& E, std::uint32_t s, WorldMask a, WorldMask b, WorldMask, WorldPair&) {
       if (!subset_of(K(E, s, b), E.U & ~a)) return Outcome::Vacuous;
       return verdict(subset_of(K2(E, s, a, b), E.U & ~a));
     }},
    {"IC4-COND-SA", C, 2, FC,
     +[](Arena& E, std::uint32_t s, WorldMask a, WorldMask b, WorldMask, WorldPair&) {
       if (!subset_of(K2(E, s, a, b), E.U & ~a)) return Outcome::Vacuous;
       return verdict(subset_of(K(E, s, b), E.U & ~a));
     }},
    {"IC1-SA", C, 2, FB,
     +[](Arena& E, std::uint32_t s, WorldMask a, WorldMask b, WorldMask, WorldPair&) {
       if (!subset_of(E.U & ~a, b)) return Outcome::Vacuous;
       return verdict(K2(E, s, a, b) == K(E, s, b));
     }},
    {"IC2-SA", C, 2, FB,
     +[](Arena& E, std::uint32_t s, WorldMask a, WorldMask b, WorldMask, WorldPair&) {
       if (!subset_of(a, b)) return Outcome::Vacuous;
       return verdict(K2(E, s, a, b) == K(E, s, b));
     }},
    {"IC1-COND-SA-LEFT", C, 3, FC,
     +[](Arena& E, std::uint32_t s, WorldMask a, WorldMask b, WorldMask g, WorldPair&) {
       if (!subset_of(E.U & ~a, b)) return Outcome::Vacuous;
       return verdict(!subset_of(K(E, s, b), g) || subset_of(K2(E, s, a, b), g));
     }},
    {"IC1-COND-SA-RIGHT", C, 3, FC,
     +[](Arena& E, std::uint32_t s, WorldMask a, WorldMask b, WorldMask g, WorldPair&) {
       if (!subset_of(E.U & ~a, b)) return Outcome::Vacuous;
       return verdict(!subset_of(K2(E, s, a, b), g) || subset_of(K(E, s, b), g));
     }},
    {"IC2-COND-SA-LEFT", C, 3, FC,
     +[](Arena& E, std::uint32_t s, WorldMask a, WorldMask b, WorldMask g, WorldPair&) {
       if (!subset_of(a, b)) return Outcome::Vacuous;
       return verdict(!subset_of(K(E, s, b), g) || subset_of(K2(E, s, a, b), g));
     }},
    {"IC2-COND-SA-RIGHT", C, 3, FC,
     +[](Arena& E, std::uint32_t s, WorldMask a, WorldMask b, WorldMask g, WorldPair&) {
       if (!subset_of(a, b)) return Outcome::Vacuous;
       return verdict(!subset_of(K2(E, s, a, b), g) || subset_of(K(E, s, b), g));
     }},
    {"IC1-REL-RIGHT", C, 1, FR,
     +[](Arena& E, std::uint32_t s, WorldMask a, WorldMask, WorldMask, WorldPair& wp) {
       return pair_sweep(E, s, E.apply(s, a), a, a, leq_imp_leq, wp);
     }},
    {"IC2-REL-RIGHT", C, 1, FR,
     +[](Arena& E, std::uint32_t s, WorldMask a, WorldMask, WorldMask, WorldPair& wp) {
       const WorldMask na = E.U & ~a;
       return pair_sweep(E, s, E.apply(s, a), na, na, leq_imp_leq, wp);
     }},
    {"IC3-REL-WEAK", C, 1, FR,
     +[](Arena& E, std::uint32_t s, WorldMask a, WorldMask, WorldMask, WorldPair& wp) {
       if (!subset_of(E.bel(s), E.U & ~a)) return Outcome::Vacuous;
       return pair_sweep(E, s, E.apply(s, a), E.U & ~a, a, lt_imp_lt, wp);
     }},
    {"IC4-REL-WEAK", C, 1, FR,
     +[](Arena& E, std::uint32_t s, WorldMask a, WorldMask, WorldMask, WorldPair& wp) {
       if (!subset_of(E.bel(s), E.U & ~a)) return Outcome::Vacuous;
       return pair_sweep(E, s, E.apply(s, a), E.U & ~a, a, post_lt_imp_prior_lt, wp);
     }},

    // --- alpha-equivalence forms (IC1)-(IC4) and variants ---
    {"IC1", C, 2, FB,
     +[](Arena& E, std::uint32_t s, WorldMask a, WorldMask b, WorldMask, WorldPair&) {
       if (!subset_of(E.U & ~a, b)) return Outcome::Vacuous;
       return verdict(alpha_equivalent(K2(E, s, a, b), K(E, s, b), a));
     }},
    {"IC2", C, 2, FB,
     +[](Arena& E, std::uint32_t s, WorldMask a, WorldMask b, WorldMask, WorldPair&) {
       if (!subset_of(a, b)) return Outcome::Vacuous;
       return verdict(alpha_equivalent(K2(E, s, a, b), K(E, s, b), E.U & ~b));
     }},
    {"IC2-PRIME", C, 2, FB,
     +[](Arena& E, std::uint32_t s, WorldMask a, WorldMask b, WorldMask, WorldPair&) {
       if (!subset_of(a, b)) return Outcome::Vacuous;
       return verdict(alpha_equivalent(K2(E, s, a, b), K(E, s, b), E.U & ~a));
     }},
    {"IC1-COND", C, 3, FC,
     +[](Arena& E, std::uint32_t s, WorldMask a, WorldMask b, WorldMask g, WorldPair&) {
       if (!subset_of(E.U & ~a, b)) return Outcome::Vacuous;
       const WorldMask imp = (E.U & ~a) | g;  // alpha -> gamma
       return verdict(subset_of(K2(E, s, a, b), imp) == subset_of(K(E, s, b), imp));
     }},
    {"IC2-COND", C, 3, FC,
     +[](Arena& E, std::uint32_t s, WorldMask a, WorldMask b, WorldMask g, WorldPair&) {
       if (!subset_of(a, b)) return Outcome::Vacuous;
       const WorldMask imp = b | g;  // !beta -> gamma
       return verdict(subset_of(K2(E, s, a, b), imp) == subset_of(K(E, s, b), imp));
     }},
    {"IC3", C, 3, FB,
     +[](Arena& E, std::uint32_t s, WorldMask a, WorldMask b, WorldMask g, WorldPair&) {
       if (!subset_of(g, b)) return Outcome::Vacuous;
       const WorldMask imp = (E.U & ~a) | g;
       return verdict(!subset_of(K(E, s, b), imp) || subset_of(K2(E, s, a, b), imp));
     }},
    {"IC4", C, 3, FB,
     +[](Arena& E, std::uint32_t s, WorldMask a, WorldMask b, WorldMask g, WorldPair&) {
       if (!subset_of(g, b)) return Outcome::Vacuous;
       const WorldMask imp = a | g;  // !alpha -> gamma
       return verdict(!subset_of(K2(E, s, a, b), imp) || subset_of(K(E, s, b), imp));
     }},
    {"IC3-COND", C, 3, FC,
     +[](Arena& E, std::uint32_t s, WorldMask a, WorldMask b, WorldMask g, WorldPair&) {
       if (!subset_of(g, b)) return Outcome::Vacuous;
       const WorldMask imp = (E.U & ~a) | g;
       return verdict(!subset_of(K(E, s, b), imp) || subset_of(K2(E, s, a, b), imp));
     }},
    {"IC4-COND", C, 3, FC,
     +[](Arena& E, std::uint32_t s, WorldMask a, WorldMask b, WorldMask g, WorldPair&) {
       if (!subset_of(g, b)) return Outcome::Vacuous;
       const WorldMask imp = a | g;
       return verdict(!subset_of(K2(E, s, a, b), imp) || subset_of(K(E, s, b), imp));
     }},
    {"IC3-ALT", C, 3, FB,
     +[](Arena& E, std::uint32_t s, WorldMask a, WorldMask b, WorldMask g, WorldPair&) {
       if (!subset_of(E.U & ~a, g)) return Outcome::Vacuous;
       return verdict(!subset_of(K(E, s, b), g) || subset_of(K2(E, s, a, b), g));
     }},
    {"IC4-ALT", C, 3, FB,
     +[](Arena& E, std::uint32_t s, WorldMask a, WorldMask b, WorldMask g, WorldPair&) {
       if (!subset_of(a, g)) return Outcome::Vacuous;
       return verdict(!subset_of(K2(E, s, a, b), g) || subset_of(K(E, s, b), g));
     }},
    {"IC3-ALT-COND", C, 3, FC,
     +[](Arena& E, std::uint32_t s, WorldMask a, WorldMask b, WorldMask g, WorldPair&) {
       if (!subset_of(E.U & ~a, g)) return Outcome::Vacuous;
       return verdict(!subset_of(K(E, s, b), g) || subset_of(K2(E, s, a, b), g));
     }},
    {"IC4-ALT-COND", C, 3, FC,
     +[](Arena& E, std::uint32_t s, WorldMask a, WorldMask b, WorldMask g, WorldPair&) {
       if (!subset_of(a, g)) return Outcome::Vacuous;
       return verdict(!subset_of(K2(E, s, a, b), g) || subset_of(K(E, s, b), g));
     }},
    {"IC1-REL", C, 1, FR,
     +[](Arena& E, std::uint32_t s, WorldMask a, WorldMask, WorldMask, WorldPair& wp) {
       return pair_sweep(E, s, E.apply(s, a), a, a, leq_iff_leq, wp);
     }},
    {"IC2-REL", C, 1, FR,
     +[](Arena& E, std::uint32_t s, WorldMask a, WorldMask, WorldMask, WorldPair& wp) {
       const WorldMask na = E.U & ~a;
       return pair_sweep(E, s, E.apply(s, a), na, na, leq_iff_leq, wp);
     }},
    {"IC3-REL", C, 1, FR,
     +[](Arena& E, std::uint32_t s, WorldMask a, WorldMask, WorldMask, WorldPair& wp) {
       return pair_sweep(E, s, E.apply(s, a), E.U & ~a, a, lt_imp_lt, wp);
     }},
    {"IC4-REL", C, 1, FR,
     +[](Arena& E, std::uint32_t s, WorldMask a, WorldMask, WorldMask, WorldPair& wp) {
       return pair_sweep(E, s, E.apply(s, a), E.U & ~a, a, leq_imp_leq, wp);
     }},

    // --- The disjunction-based iteration postulates ---
    // Bel(X) <= Bel(Y) is Mod(Y) <= Mod(X). The fourth postulate runs the
    // implication from the plain state to the contracted one; the printed
    // orientation rules out every AGM contraction (see the witness in the
    // KPP tests), and only this one keeps the joint equivalence with the
    // relational postulates intact.
    {"KPP1", C, 3, FB,
     +[](Arena& E, std::uint32_t s, WorldMask a, WorldMask b, WorldMask g, WorldPair&) {
       if (!subset_of(E.U & ~a, g)) return Outcome::Vacuous;
       const std::uint32_t sg = E.apply(s, g);
       const bool plain = subset_of(K(E, s, a | b), K(E, s, a));
       const bool after = subset_of(K(E, sg, a | b), K(E, sg, a));
       return verdict(plain == after);
     }},
    {"KPP2", C, 3, FB,
     +[](Arena& E, std::uint32_t s, WorldMask a, WorldMask b, WorldMask g, WorldPair&) {
       if (!subset_of(g, a)) return Outcome::Vacuous;
       const std::uint32_t sg = E.apply(s, g);
       const bool plain = subset_of(K(E, s, a | b), K(E, s, a));
       const bool after = subset_of(K(E, sg, a | b), K(E, sg, a));
       return verdict(plain == after);
     }},
    {"KPP3", C, 3, FB,
     +[](Arena& E, std::uint32_t s, WorldMask a, WorldMask b, WorldMask g, WorldPair&) {
       if (!subset_of(E.U & ~b, g)) return Outcome::Vacuous;
       const std::uint32_t sg = E.apply(s, g);
       const bool plain = subset_of(K(E, s, a | b), K(E, s, a));
       const bool after = subset_of(K(E, sg, a | b), K(E, sg, a));
       return verdict(!after || plain);
     }},
    {"KPP4", C, 3, FB,
     +[](Arena& E, std::uint32_t s, WorldMask a, WorldMask b, WorldMask g, WorldPair&) {
       if (!subset_of(g, b)) return Outcome::Vacuous;
       const std::uint32_t sg = E.apply(s, g);
       const bool plain = subset_of(K(E, s, a | b), K(E, s, a));
       const bool after = subset_of(K(E, sg, a | b), K(E, sg, a));
       return verdict(!plain || after);
     }},

    // --- Independence for contraction ---
    {"IND-C", C, 3, FB,
     +[](Arena& E, std::uint32_t s, WorldMask a, WorldMask b, WorldMask g, WorldPair&) {
       if (!subset_of(E.U & ~a, g)) return Outcome::Vacuous;
       if (subset_of(K(E, s, b), a | b)) return Outcome::Vacuous;  // !alpha -> beta kept
       return verdict(!subset_of(K(E, s, a), g) || subset_of(K2(E, s, a, b), g));
     }},
    {"IND-C-COND", C, 3, FC,
     +[](Arena& E, std::uint32_t s, WorldMask a, WorldMask b, WorldMask g, WorldPair&) {
       if (!subset_of(E.U & ~a, g)) return Outcome::Vacuous;
       if (subset_of(K(E, s, b), a | b)) return Outcome::Vacuous;
       return verdict(!subset_of(K(E, s, a), g) || subset_of(K2(E, s, a, b), g));
     }},
    {"IND-C-REL", C, 1, FR,
     +[](Arena& E, std::uint32_t s, WorldMask a, WorldMask, WorldMask, WorldPair& wp) {
       return pair_sweep(E, s, E.apply(s, a), E.U & ~a, a & ~E.bel(s), leq_imp_lt, wp);
     }},

    // --- Natural contraction ---
    {"NC", C, 2, FB,
     +[](Arena& E, std::uint32_t s, WorldMask a, WorldMask b, WorldMask, WorldPair&) {
       if (!subset_of(K(E, s, a), b)) return Outcome::Vacuous;
       return verdict(alpha_equivalent(K2(E, s, a, b), K(E, s, b), E.U & ~b));
     }},
    {"NC-COND", C, 3, FC,
     +[](Arena& E, std::uint32_t s, WorldMask a, WorldMask b, WorldMask g, WorldPair&) {
       if (!subset_of(K(E, s, a), b)) return Outcome::Vacuous;
       const WorldMask imp = b | g;  // !beta -> gamma
       return verdict(subset_of(K2(E, s, a, b), imp) == subset_of(K(E, s, b), imp));
     }},
    {"NC-REL", C, 1, FR,
     +[](Arena& E, std::uint32_t s, WorldMask a, WorldMask, WorldMask, WorldPair& wp) {
       const std::uint32_t s1 = E.apply(s, a);
       const WorldMask outside = E.U & ~E.bel(s1);
       return pair_sweep(E, s, s1, outside, outside, leq_iff_leq, wp);
     }},
    {"INSERTION", C, 2, FB,
     +[](Arena& E, std::uint32_t s, WorldMask a, WorldMask b, WorldMask, WorldPair&) {
       if (!subset_of(K(E, s, a), b)) return Outcome::Vacuous;  // beta believed after
       return verdict(K2(E, s, a, b) == (K(E, s, a) | K(E, s, b)));
     }},

    // --- Moderate contraction ---
    {"MC", C, 3, FB,
     +[](Arena& E, std::uint32_t s, WorldMask a, WorldMask b, WorldMask g, WorldPair&) {
       if (!subset_of(E.U & ~a, g) || (a | b) == E.U) return Outcome::Vacuous;
       return verdict(!subset_of(K(E, s, a), g) || subset_of(K2(E, s, a, b), g));
     }},
    {"MC-COND", C, 3, FC,
     +[](Arena& E, std::uint32_t s, WorldMask a, WorldMask b, WorldMask g, WorldPair&) {
       if (!subset_of(E.U & ~a, g) || (a | b) == E.U) return Outcome::Vacuous;
       return verdict(!subset_of(K(E, s, a), g) || subset_of(K2(E, s, a, b), g));
     }},
    {"MC-REL", C, 1, FR,
     +[](Arena& E, std::uint32_t s, WorldMask a, WorldMask, WorldMask, WorldPair& wp) {
       const std::uint32_t s1 = E.apply(s, a);
       return pair_sweep(E, s, s1, E.U & ~a, a & ~E.bel(s1), post_always_lt, wp);
     }},
};

const Entry* find_entry(std::string_view name) {
  std::string key(name);
  for (auto& c : key) {
    c = static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
    if (c == '_') c = '-';
  }
  for (const auto& e : kCatalog)
    if (key == e.name) return &e;
  return nullptr;
}

}  // namespace

const std::vector<PostulateInfo>& postulate_catalog() {
  static const std::vector<PostulateInfo> catalog = [] {
    std::vector<PostulateInfo> out;
    for (const auto& e : kCatalog) out.push_back({e.name, e.flavor, e.arity, e.form});
    return out;
  }();
  return catalog;
}

const PostulateInfo* find_postulate(std::string_view name) {
  const Entry* e = find_entry(name);
  if (!e) return nullptr;
  for (const auto& p : postulate_catalog())
    if (p.name == e->name) return &p;
  return nullptr;
}

int sweep_worker_count() {
  if (const char* env = std::getenv("BELIEF_KERNEL_WORKERS")) {
    const long n = std::strtol(env, nullptr, 10);
    if (n >= 1 && n <= 256) return static_cast<int>(n);
  }
  const unsigned hw = std::thread::hardware_concurrency();
  return hw ? static_cast<int>(hw) : 1;
}

namespace {

struct SweepFail {
  std::uint32_t state;
  WorldMask a, b, g;
  WorldPair wp;
};

struct SweepResult {
  std::uint64_t checks = 0;
  std::uint64_t vacuous = 0;
  std::optional<SweepFail> fail;  // canonically first
};

// Full scan over all formula tuples for the states [lo, hi); never
// early-exits, so counts and the first witness are independent of the
// partitioning.
SweepResult sweep_states(const ChangeOperator& op, const Entry& e,
                         const std::vector<TotalPreorder>& states, std::uint32_t lo,
                         std::uint32_t hi, WorldMask universe) {
  SweepResult res;
  Arena arena(op, states.empty() ? 1 : states.front().world_count());
  for (const auto& st : states) arena.intern(st);
  for (std::uint32_t si = lo; si < hi; ++si) {
    const WorldMask a_hi = universe;
    for (WorldMask a = 0; a <= a_hi; ++a) {
      const WorldMask b_hi = e.arity >= 2 ? universe : 0;
      for (WorldMask b = 0; b <= b_hi; ++b) {
        const WorldMask g_hi = e.arity >= 3 ? universe : 0;
        for (WorldMask g = 0; g <= g_hi; ++g) {
          ++res.checks;
          WorldPair wp;
          const Outcome out = e.fn(arena, si, a, b, g, wp);
          if (out == Outcome::Vacuous) {
            ++res.vacuous;
          } else if (out == Outcome::Fail && !res.fail) {
            res.fail = SweepFail{si, a, b, g, wp};
          }
        }
      }
    }
  }
  return res;
}

PostulateVerdict run_exhaustive(const ChangeOperator& op, const Entry& e, const Signature& sig) {
  const auto states = enumerate_preorders(sig);
  const auto n = static_cast<std::uint32_t>(states.size());
  const int workers = std::max(1, std::min<int>(sweep_worker_count(), static_cast<int>(n)));

  std::vector<SweepResult> parts(workers);
  if (workers == 1) {
    parts[0] = sweep_states(op, e, states, 0, n, sig.universe());
  } else {
    std::vector<std::thread> pool;
    for (int w = 0; w < workers; ++w) {
      const std::uint32_t lo = n * static_cast<std::uint32_t>(w) / workers;
      const std::uint32_t hi = n * static_cast<std::uint32_t>(w + 1) / workers;
      pool.emplace_back([&, w, lo, hi] {
        parts[w] = sweep_states(op, e, states, lo, hi, sig.universe());
      });
    }
    for (auto& t : pool) t.join();
  }

  PostulateVerdict v;
  v.postulate = e.name;
  v.op_name = op.name;
  v.signature_size = sig.atom_count();
  std::optional<SweepFail> first;
  for (const auto& part : parts) {
    v.checks_performed += part.checks;
    v.vacuous += part.vacuous;
    if (part.fail && (!first || part.fail->state < first->state)) first = part.fail;
  }
  if (first) {
    v.status = VerdictStatus::Fails;
    v.witness = PostulateWitness{states[first->state].ranks(), first->a, first->b,
                                 first->g,    first->wp.w1,     first->wp.w2};
  }
  return v;
}

PostulateVerdict run_sampled(const ChangeOperator& op, const Entry& e, const Signature& sig,
                             const Quantification& quant) {
  PostulateVerdict v;
  v.postulate = e.name;
  v.op_name = op.name;
  v.signature_size = sig.atom_count();
  v.quant = quant;

  const WorldMask universe = sig.universe();
  const int nw = sig.world_count();
  Arena arena(op, nw);
  std::mt19937_64 rng(quant.seed);
  std::vector<std::uint8_t> ranks(nw);
  for (std::uint64_t i = 0; i < quant.samples; ++i) {
    for (auto& r : ranks) r = static_cast<std::uint8_t>(rng() % nw);
    const TotalPreorder state{ranks};
    const std::uint32_t si = arena.intern(state);
    const WorldMask a = rng() & universe;
    const WorldMask b = e.arity >= 2 ? (rng() & universe) : 0;
    const WorldMask g = e.arity >= 3 ? (rng() & universe) : 0;
    ++v.checks_performed;
    WorldPair wp;
    const Outcome out = e.fn(arena, si, a, b, g, wp);
    if (out == Outcome::Vacuous) {
      ++v.vacuous;
    } else if (out == Outcome::Fail && v.status == VerdictStatus::Holds) {
      v.status = VerdictStatus::Fails;
      v.witness = PostulateWitness{state.ranks(), a, b, g, wp.w1, wp.w2};
    }
  }
  return v;
}

const Entry& entry_for(const PostulateInfo& p) {
  const Entry* e = find_entry(p.name);
  if (!e) throw UnknownNameError("postulate not in catalog: '" + p.name + "'");
  return *e;
}

void require_scope(const Signature& sig, const Quantification& quant) {
  if (quant.mode == QuantMode::Exhaustive && sig.atom_count() > 2)
    throw ScopeError("exhaustive postulate checks need signature size <= 2");
  if (quant.mode == QuantMode::Sampled && sig.atom_count() > 3)
    throw ScopeError("sampled postulate checks need signature size <= 3");
}

}  // namespace

PostulateVerdict check_postulate(const ChangeOperator& op, const PostulateInfo& p,
                                 const Signature& sig, const Quantification& quant) {
  if (op.flavor != p.flavor)
    throw FlavorMismatchError("postulate " + p.name + " does not apply to operator '" + op.name +
                              "'");
  require_scope(sig, quant);
  const Entry& e = entry_for(p);
  if (quant.mode == QuantMode::Exhaustive) {
    PostulateVerdict v = run_exhaustive(op, e, sig);
    v.quant = quant;
    return v;
  }
  return run_sampled(op, e, sig, quant);
}

PostulateVerdict check_postulate(const ChangeOperator& op, std::string_view postulate,
                                 const Signature& sig, const Quantification& quant) {
  const PostulateInfo* p = find_postulate(postulate);
  if (!p) throw UnknownNameError("unknown postulate: '" + std::string(postulate) + "'");
  return check_postulate(op, *p, sig, quant);
}

bool replay_witness(const ChangeOperator& op, const PostulateInfo& p, const Signature& sig,
                    const PostulateWitness& witness) {
  const Entry& e = entry_for(p);
  Arena arena(op, sig.world_count());
  const std::uint32_t s = arena.intern(TotalPreorder{witness.state_ranks});
  WorldPair wp;
  return e.fn(arena, s, witness.alpha, witness.beta, witness.gamma, wp) == Outcome::Fail;
}

std::optional<PostulateWitness> find_counterexample(const ChangeOperator& op,
                                                    const PostulateInfo& p, const Signature& sig) {
  if (op.flavor != p.flavor)
    throw FlavorMismatchError("postulate " + p.name + " does not apply to operator '" + op.name +
                              "'");
  if (sig.atom_count() > 2) throw ScopeError("counterexample search needs signature size <= 2");
  const Entry& e = entry_for(p);
  const WorldMask universe = sig.universe();
  const auto states = enumerate_preorders(sig);

  // Proof-shaped pass: singleton-belief states, and second formulas whose
  // negation has at most two models.
  Arena arena(op, sig.world_count());
  for (const auto& st : states) arena.intern(st);
  for (std::uint32_t si = 0; si < states.size(); ++si) {
    if (popcount(states[si].bottom()) != 1) continue;
    for (WorldMask a = 0; a <= universe; ++a) {
      const WorldMask b_hi = e.arity >= 2 ? universe : 0;
      for (WorldMask b = 0; b <= b_hi; ++b) {
        if (e.arity >= 2 && popcount(universe & ~b) > 2) continue;
        const WorldMask g_hi = e.arity >= 3 ? universe : 0;
        for (WorldMask g = 0; g <= g_hi; ++g) {
          WorldPair wp;
          if (e.fn(arena, si, a, b, g, wp) == Outcome::Fail)
            return PostulateWitness{states[si].ranks(), a, b, g, wp.w1, wp.w2};
        }
      }
    }
  }

  PostulateVerdict full = check_postulate(op, p, sig, {});
  return full.witness;
}

// ---------------------------------------------------------------------------
// Impossibility over all contraction-compatible operators
// ---------------------------------------------------------------------------

namespace {

// Belief sets after one or two steps, under the compatibility equation, for
// an assignment value r at the state and a posterior min-set m2 for the
// second step.
struct TwoStep {
  WorldMask after_b;   // Bel(state - beta)
  WorldMask after_a;   // Bel(state - alpha)
};

// All values min(Mod(!b), posterior) may take for *some* faithful posterior:
// forced to the posterior-belief overlap when nonempty, otherwise any
// nonempty subset of Mod(!b).
template <typename Fn>
bool for_all_admissible_second_steps(WorldMask after_a, WorldMask not_b, Fn fails) {
  if (not_b == 0) return fails(after_a);
  if (after_a & not_b) return fails(after_a | (after_a & not_b));
  for (WorldMask m2 = not_b; m2 != 0; m2 = (m2 - 1) & not_b)
    if (!fails(after_a | m2)) return false;
  return true;
}

// Violation predicates: given the one-step belief sets, true when the
// postulate instance is violated for the given two-step outcome.
bool impossibility_instance_fails(const Entry& e, WorldMask universe, const TotalPreorder& r,
                                  WorldMask a, WorldMask b, WorldMask g) {
  const WorldMask after_b = contracted_belief_mask(r, b, universe);
  const WorldMask after_a = contracted_belief_mask(r, a, universe);
  const WorldMask not_b = universe & ~b;
  const std::string_view name = e.name;
  if (name == "IR1-CONTR") {
    if (!subset_of(b, a)) return false;
    return for_all_admissible_second_steps(after_a, not_b,
                                           [&](WorldMask k2) { return k2 != after_b; });
  }
  if (name == "IR2-CONTR") {
    if ((b & a) != 0) return false;
    return for_all_admissible_second_steps(after_a, not_b,
                                           [&](WorldMask k2) { return k2 != after_b; });
  }
  if (name == "IR3-CONTR") {
    if (!subset_of(after_b, a)) return false;
    return for_all_admissible_second_steps(after_a, not_b,
                                           [&](WorldMask k2) { return !subset_of(k2, a); });
  }
  if (name == "IC1-COND-SA-LEFT") {
    if (!subset_of(universe & ~a, b) || !subset_of(after_b, g)) return false;
    return for_all_admissible_second_steps(after_a, not_b,
                                           [&](WorldMask k2) { return !subset_of(k2, g); });
  }
  if (name == "IC2-COND-SA-LEFT") {
    if (!subset_of(a, b) || !subset_of(after_b, g)) return false;
    return for_all_admissible_second_steps(after_a, not_b,
                                           [&](WorldMask k2) { return !subset_of(k2, g); });
  }
  if (name == "IC2-PRIME") {
    if (!subset_of(a, b)) return false;
    const WorldMask na = universe & ~a;
    return for_all_admissible_second_steps(
        after_a, not_b, [&](WorldMask k2) { return (k2 & na) != (after_b & na); });
  }
  return false;
}

}  // namespace

bool impossibility_supported(const PostulateInfo& p) {
  return p.name == "IR1-CONTR" || p.name == "IR2-CONTR" || p.name == "IR3-CONTR" ||
         p.name == "IC1-COND-SA-LEFT" || p.name == "IC2-COND-SA-LEFT" || p.name == "IC2-PRIME";
}

ImpossibilityReport verify_impossibility(const PostulateInfo& p, const Signature& sig) {
  if (!impossibility_supported(p))
    throw UnknownNameError("no impossibility argument on file for " + p.name);
  if (sig.atom_count() > 2) throw ScopeError("impossibility verification needs signature size <= 2");
  const Entry& e = entry_for(p);
  const WorldMask universe = sig.universe();

  ImpossibilityReport report;
  report.postulate = p.name;
  report.verified = true;

  // beta shapes in proof-priority order: negation with 0, 1, 2 models first.
  std::vector<WorldMask> betas;
  for (int want = 0; want <= sig.world_count(); ++want)
    for (WorldMask b = 0; b <= universe; ++b)
      if (popcount(universe & ~b) == want) betas.push_back(b);

  for (const auto& r : enumerate_preorders(sig)) {
    if (popcount(r.bottom()) != 1) continue;  // assignment value at a singleton-belief state
    ++report.assignments_checked;
    bool found = false;
    for (WorldMask b : betas) {
      for (WorldMask a = 0; a <= universe && !found; ++a) {
        const WorldMask g_hi = e.arity >= 3 ? universe : 0;
        for (WorldMask g = 0; g <= g_hi; ++g) {
          if (impossibility_instance_fails(e, universe, r, a, b, g)) {
            if (!report.example) report.example = ImpossibilityWitness{r.ranks(), a, b, g};
            found = true;
            break;
          }
        }
      }
      if (found) break;
    }
    if (!found) {
      report.verified = false;
      break;
    }
  }
  return report;
}

// ---------------------------------------------------------------------------
// Characterization theorems
// ---------------------------------------------------------------------------

TheoremId theorem_from_name(std::string_view name) {
  std::string key(name);
  for (auto& c : key) {
    c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
    if (c == '-') c = '_';
  }
  if (key == "thm1") return TheoremId::Thm1;
  if (key == "prop9") return TheoremId::Prop9;
  if (key == "prop13") return TheoremId::Prop13;
  if (key == "prop17_18") return TheoremId::Prop17_18;
  if (key == "prop25") return TheoremId::Prop25;
  if (key == "prop31") return TheoremId::Prop31;
  if (key == "prop34") return TheoremId::Prop34;
  if (key == "prop35") return TheoremId::Prop35;
  throw UnknownNameError("unknown theorem: '" + std::string(name) + "'");
}

std::string theorem_name(TheoremId id) {
  switch (id) {
    case TheoremId::Thm1: return "thm1";
    case TheoremId::Prop9: return "prop9";
    case TheoremId::Prop13: return "prop13";
    case TheoremId::Prop17_18: return "prop17_18";
    case TheoremId::Prop25: return "prop25";
    case TheoremId::Prop31: return "prop31";
    case TheoremId::Prop34: return "prop34";
    case TheoremId::Prop35: return "prop35";
  }
  return "?";
}

const std::vector<TheoremId>& all_theorems() {
  static const std::vector<TheoremId> ids{TheoremId::Thm1,  TheoremId::Prop9,
                                          TheoremId::Prop13, TheoremId::Prop17_18,
                                          TheoremId::Prop25, TheoremId::Prop31,
                                          TheoremId::Prop34, TheoremId::Prop35};
  return ids;
}

namespace {

struct GroupDef {
  const char* name;
  std::vector<const char*> postulates;
};

struct ClusterDef {
  const char* name;
  const char* guard;  // may be ""
  std::vector<GroupDef> groups;
};

std::vector<ClusterDef> theorem_clusters(TheoremId id) {
  switch (id) {
    case TheoremId::Thm1:
      return {{"extended characterization", "",
               {{"relational", {"IC1-REL", "IC2-REL", "IC3-REL", "IC4-REL"}},
                {"belief", {"IC1", "IC2", "IC3", "IC4"}},
                {"contractional", {"IC1-COND", "IC2-COND", "IC3-COND", "IC4-COND"}},
                {"belief-alt", {"IC1", "IC2", "IC3-ALT", "IC4-ALT"}},
                {"contractional-alt", {"IC1-COND", "IC2-COND", "IC3-ALT-COND", "IC4-ALT-COND"}},
                {"kpp", {"KPP1", "KPP2", "KPP3", "KPP4"}}}}};
    case TheoremId::Prop9:
      return {{"dp4 as contraction", "",
               {{"belief", {"IR4-CONTR"}}, {"relational", {"IR4-REL-CONTR"}}}}};
    case TheoremId::Prop13:
      return {{"kpp vs relational", "",
               {{"kpp", {"KPP1", "KPP2", "KPP3", "KPP4"}},
                {"relational", {"IC1-REL", "IC2-REL", "IC3-REL", "IC4-REL"}}}}};
    case TheoremId::Prop17_18:
      return {{"ic1 forms", "",
               {{"belief", {"IC1"}}, {"contractional", {"IC1-COND"}}, {"relational", {"IC1-REL"}}}},
              {"ic2 forms", "",
               {{"belief", {"IC2"}}, {"contractional", {"IC2-COND"}}, {"relational", {"IC2-REL"}}}}};
    case TheoremId::Prop25:
      return {{"ic3 alternative (given IC1)", "IC1",
               {{"alt", {"IC3-ALT"}}, {"plain", {"IC3"}}}},
              {"ic4 alternative (given IC2)", "IC2",
               {{"alt", {"IC4-ALT"}}, {"plain", {"IC4"}}}}};
    case TheoremId::Prop31:
      return {{"independence forms", "",
               {{"belief", {"IND-C"}}, {"relational", {"IND-C-REL"}}}}};
    case TheoremId::Prop34:
      return {{"natural contraction forms", "",
               {{"relational", {"NC-REL"}},
                {"belief", {"NC"}},
                {"contractional", {"NC-COND"}},
                {"insertion", {"INSERTION"}}}}};
    case TheoremId::Prop35:
      return {{"moderate contraction forms", "",
               {{"relational", {"IC1-REL", "IC2-REL", "MC-REL"}},
                {"belief", {"IC1", "IC2", "MC"}},
                {"contractional", {"IC1-COND", "IC2-COND", "MC-COND"}}}}};
  }
  return {};
}

}  // namespace

TheoremReport verify_characterization(const ChangeOperator& op, TheoremId theorem,
                                      const Signature& sig, const Quantification& quant) {
  if (op.flavor != OperatorFlavor::Contraction)
    throw FlavorMismatchError("characterization theorems apply to contraction operators");
  TheoremReport report;
  report.theorem = theorem_name(theorem);
  report.op_name = op.name;
  report.signature_size = sig.atom_count();

  // The theorems presuppose an AGM contraction operator.
  for (const char* c : {"C1", "C2", "C3", "C4", "C5", "C6", "C7"}) {
    const auto v = check_postulate(op, c, sig, quant);
    if (!v.holds()) {
      report.precondition_ok = false;
      report.precondition_detail = std::string("operator is not an AGM contraction: ") + c + " fails";
      report.pass = false;
      return report;
    }
  }

  std::unordered_map<std::string, PostulateVerdict> verdicts;
  const auto lookup = [&](const std::string& name) -> const PostulateVerdict& {
    auto it = verdicts.find(name);
    if (it == verdicts.end()) it = verdicts.emplace(name, check_postulate(op, name, sig, quant)).first;
    return it->second;
  };

  report.pass = true;
  for (const auto& cdef : theorem_clusters(theorem)) {
    TheoremCluster cluster;
    cluster.name = cdef.name;
    cluster.guard = cdef.guard;
    cluster.applicable = cdef.guard[0] == '\0' || lookup(cdef.guard).holds();
    for (const auto& gdef : cdef.groups) {
      TheoremGroup group;
      group.name = gdef.name;
      group.holds = true;
      for (const char* name : gdef.postulates) {
        group.postulates.emplace_back(name);
        const auto& v = lookup(name);
        if (!v.holds() && group.holds) {
          group.holds = false;
          group.failed_postulate = name;
          group.witness = v.witness;
        }
      }
      cluster.groups.push_back(std::move(group));
    }
    if (cluster.applicable) {
      for (const auto& g : cluster.groups)
        if (g.holds != cluster.groups.front().holds) cluster.agree = false;
    }
    if (cluster.applicable && !cluster.agree) report.pass = false;
    report.clusters.push_back(std::move(cluster));
  }
  return report;
}

EquivalenceMatrix equivalence_matrix(const std::vector<const ChangeOperator*>& ops,
                                     const std::vector<std::string>& postulates,
                                     const Signature& sig, const Quantification& quant) {
  EquivalenceMatrix m;
  m.postulates = postulates;
  for (const ChangeOperator* op : ops) {
    MatrixRow row;
    row.op_name = op->name;
    for (const auto& name : postulates) row.cells.push_back(check_postulate(*op, name, sig, quant).status);
    m.rows.push_back(std::move(row));
  }
  return m;
}

}  // namespace bk
