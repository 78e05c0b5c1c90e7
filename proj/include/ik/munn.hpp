#ifndef IK_MUNN_HPP
#define IK_MUNN_HPP

#include "ik/automata.hpp"
#include "ik/fold.hpp"
#include "ik/words.hpp"

namespace ik {

/// The free inverse monoid on a finite alphabet. Decision procedures on it
/// work on Munn trees and need no relations.
struct FreeContext {
  Alphabet alphabet;
};

/// The Munn tree of w: the complete folding of the linear automaton of w.
/// Always a tree; vertices are the distinct prefixes of w up to folding.
FoldedAutomaton munn_tree(const FreeContext& ctx, const Word& w);

/// u = v in the free inverse monoid iff their Munn trees are isomorphic as
/// birooted automata, iff each Munn tree accepts the other word.
bool fim_equal(const FreeContext& ctx, const Word& u, const Word& v);

/// u <= v in the natural partial order iff the Munn tree of u accepts v.
bool fim_leq(const FreeContext& ctx, const Word& u, const Word& v);

/// w is idempotent iff it freely reduces to the empty word, iff its Munn
/// tree has initial = terminal.
bool fim_is_idempotent(const FreeContext& ctx, const Word& w);

}  // namespace ik

#endif  // IK_MUNN_HPP
