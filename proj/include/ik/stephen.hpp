#ifndef IK_STEPHEN_HPP
#define IK_STEPHEN_HPP

#include <optional>
#include <span>
#include <vector>

#include "ik/automata.hpp"
#include "ik/fold.hpp"
#include "ik/presentation.hpp"
#include "ik/words.hpp"

namespace ik {

/// Caps on the iterative closure. Closures that exhaust a cap report
/// Truncated and the decision procedures degrade to Unknown where exactness
/// is required.
struct Budget {
  uint32_t max_rounds = 64;
  uint32_t max_vertices = 100000;
};

enum class ClosureStatus { Exact, Truncated };

/// Three-valued answers: Yes and No are proofs, Unknown means the budget ran
/// out before the question was settled.
enum class Verdict { Yes, No, Unknown };

const char* to_string(Verdict v);
const char* to_string(ClosureStatus s);

/// A place where a relation is half-satisfied: the present side reads from
/// `from` to `to` but the missing side does not read from `from` to `to`.
struct ExpansionSite {
  uint32_t relation;  // index into Presentation::relations()
  bool reversed;      // false: lhs present, rhs missing; true: the converse
  uint32_t from;
  uint32_t to;

  friend bool operator==(const ExpansionSite&, const ExpansionSite&) =
      default;
};

/// All sites, ordered by (relation, direction, start vertex). The empty
/// result characterizes a closed automaton.
std::vector<ExpansionSite> expansions_applicable(const Presentation& p,
                                                 const FoldedAutomaton& a);

/// Glues the missing side of every listed site, then folds to completion.
/// One call implements one full expansion round; the returned vertex map
/// tracks where the old vertices went. Folding confluence makes the result
/// independent of the site order.
FoldResult apply_expansions(const Presentation& p, const FoldedAutomaton& a,
                            std::span<const ExpansionSite> sites);

/// One round: all applicable expansions, then complete folding. Fixed point
/// exactly when the automaton is closed.
FoldedAutomaton stephen_step(const Presentation& p, const FoldedAutomaton& a);

struct ClosureResult {
  FoldedAutomaton automaton;
  ClosureStatus status;
  /// Index of the final approximant: 1 is the Munn tree itself.
  uint32_t rounds_used;
};

/// Iterates rounds from the Munn tree of w until closed or out of budget.
/// An Exact result is the Schutzenberger automaton of w; a Truncated result
/// still accepts only words that the full automaton accepts.
ClosureResult closure(const Presentation& p, const Word& w,
                      const Budget& budget = {});

struct TrackedClosure {
  FoldedAutomaton automaton;
  ClosureStatus status;
  uint32_t rounds_used;
  /// Composite vertex map from the start automaton into the result.
  std::vector<uint32_t> vertex_map;
};

/// Runs the closure loop from an arbitrary folded automaton instead of a
/// Munn tree, tracking vertices. The enumeration engine and structural
/// analyses build on this.
TrackedClosure close_automaton(const Presentation& p, FoldedAutomaton start,
                               const Budget& budget = {});

/// u = v in the presented monoid. Yes needs only mutual acceptance by the
/// approximants; No needs at least one Exact closure.
Verdict eq(const Presentation& p, const Word& u, const Word& v,
           const Budget& budget = {});

/// u <= v in the natural partial order, i.e. v is accepted by the closure
/// of u. Yes is sound on approximants; No needs an Exact closure.
Verdict leq(const Presentation& p, const Word& u, const Word& v,
            const Budget& budget = {});

/// w^2 = w, decided by whether both roots of the closure coincide.
Verdict is_idempotent(const Presentation& p, const Word& w,
                      const Budget& budget = {});

/// Size of the R-class of w: the vertex count of an Exact closure. nullopt
/// when the budget truncates the closure.
std::optional<uint64_t> r_class_size(const Presentation& p, const Word& w,
                                     const Budget& budget = {});

}  // namespace ik

#endif  // IK_STEPHEN_HPP
