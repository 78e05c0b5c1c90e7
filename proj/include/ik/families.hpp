#ifndef IK_FAMILIES_HPP
#define IK_FAMILIES_HPP

#include <string>
#include <vector>

#include "ik/presentation.hpp"
#include "ik/stephen.hpp"

namespace ik {

/// T_I = < a, b, c | a b^i a = a b^i a c  for i in I >.
/// Adjoining c as a "marker" that the words a b^i a absorb.
struct TIFamily {
  std::vector<uint32_t> indices;
};

/// S_t = < a, b, c | c a = a,  c b^-t c^-1 b^t = c b^-t b^t c^-1 >.
/// Below s = a c a^-1 the idempotents e_n = (a b^{tn} a)(a b^{tn} a)^-1
/// form an infinite anti-chain of maximal elements.
struct StFamily {
  uint32_t t;
};

Presentation build_presentation(const TIFamily& fam);
Presentation build_presentation(const StFamily& fam);

/// (a b^{tn} a)(a b^{tn} a)^-1 over the alphabet a, b, c.
Word en_word(uint32_t t, uint32_t n);

/// The closure automaton of en_word(t, n), built directly from its known
/// shape: a spine p_0 -a-> p_1 -b^t-> ... -b^t-> p_{n+1} -a-> p_{n+2} with
/// c-loops at p_0 .. p_{n+1} and basepoint p_0; tn + 3 vertices in all.
FoldedAutomaton expected_closure_en(uint32_t t, uint32_t n);

struct ReplicationCheck {
  std::string name;
  bool pass;
  std::string detail;  // empty when there is nothing to add
};

struct ReplicationReport {
  std::vector<ReplicationCheck> checks;
  bool all_pass = false;
};

/// Structural battery for S_t, n = 1..max_n: defining relations hold,
/// closures of e_n are exact with tn+3 vertices and the expected shape,
/// c-loops sit at exactly n+2 vertices, e_n lies below a c a^-1, the e_n
/// are pairwise incomparable, b-weights vanish on all cycles, closures of
/// {b,c}-words stay free of c-loops and a-edges, and a-edge counts never
/// exceed the Munn tree's.
ReplicationReport replicate(const StFamily& fam, uint32_t max_n,
                            const Budget& budget = {});

/// Battery for T_I with w_i = (a b^i a)^-1 (a b^i a): the relations make
/// w_i idempotent below c, both defining forms agree, and distinct indices
/// give incomparable w_i with no cross-index paths in the Munn trees.
ReplicationReport replicate(const TIFamily& fam, const Budget& budget = {});

std::string format_report(const ReplicationReport& r);
std::string report_to_json(const ReplicationReport& r);

}  // namespace ik

#endif  // IK_FAMILIES_HPP
