#ifndef IK_ANALYSIS_HPP
#define IK_ANALYSIS_HPP

#include <cstdint>
#include <functional>
#include <optional>
#include <utility>
#include <vector>

#include "ik/automata.hpp"
#include "ik/presentation.hpp"
#include "ik/stephen.hpp"
#include "ik/words.hpp"

namespace ik {

/// A closed walk at `vertex` whose letter weight is nonzero.
struct WeightViolation {
  uint32_t vertex;
  Word loop;
};

struct WeightReport {
  uint32_t letter_base;
  uint64_t loops_checked;
  std::vector<WeightViolation> violations;
};

/// Verifies that closed walks have weight zero in the given generator.
/// A spanning tree assigns each vertex the weight of its tree path from the
/// initial vertex; every non-tree edge closes one fundamental cycle, and
/// fundamental cycles generate all cycles over the integers, so checking
/// every chord settles every closed walk. sample = 0 checks all chords;
/// otherwise only the first `sample` in (from, letter, to) order.
WeightReport check_loop_weights(const FoldedAutomaton& a, uint32_t base,
                                uint64_t sample = 0);

/// First pair (p, q) with a path p -> q labeled w, scanning start vertices
/// ascending. nullopt when no start vertex reads w.
std::optional<std::pair<uint32_t, uint32_t>> find_labeled_path(
    const FoldedAutomaton& a, const Word& w);

/// Evidence report for "e is maximal among the idempotents below s".
struct MuSearchReport {
  Word target;  // s
  /// One minimal witness per distinct idempotent found below s within the
  /// horizon, sorted by (witness length, letter codes).
  std::vector<Word> candidates_confirmed;
  /// Pairs (e, f) with e strictly below the idempotent witnessed by f and
  /// f below s. Empty means no falsifier exists within the horizon.
  std::vector<std::pair<Word, Word>> strict_between_found;
  /// Rho-distinct idempotent words (rooted folded trees) visited.
  uint64_t words_enumerated;
  uint32_t max_len;
};

/// Exhausts the idempotents below s witnessed by idempotent word forms of
/// length <= max_len, hunting for an idempotent f with e < f <= s. Requires
/// e idempotent and e <= s. Throws std::runtime_error if the budget
/// truncates any closure on the way, since counts would be untrustworthy.
MuSearchReport mu_falsifier_search(const Presentation& p, const Word& s,
                                   const Word& e, uint32_t max_len,
                                   const Budget& budget = {});

/// For each length bound L: the number of maximal elements among the
/// distinct idempotents below s witnessed by idempotent word forms of
/// length <= L. Growth of these anti-chain sizes is evidence that the set
/// of maximal idempotents below s keeps growing. Throws std::runtime_error
/// on any truncated closure.
std::vector<uint64_t> mu_candidate_growth(const Presentation& p,
                                          const Word& s,
                                          const std::vector<uint32_t>& lens,
                                          const Budget& budget = {});

/// Every idempotent word form is conjugacy-reducible to a Dyck word, and
/// Dyck words up to free-monoid identification correspond to rooted folded
/// trees. Calls `visit` once per tree with the closure automaton of that
/// tree's word, the image of the tree root, and the tree's edge count.
/// Exposed for tests; the mu searches are built on it.
struct EnumeratedState {
  const FoldedAutomaton& automaton;
  uint32_t root;
  uint32_t edges;
  const Word& witness;
};
void for_each_idempotent_tree(
    const Presentation& p, uint32_t max_edges, const Budget& budget,
    const std::function<void(const EnumeratedState&)>& visit);

}  // namespace ik

#endif  // IK_ANALYSIS_HPP
