#include "ik/munn.hpp"

#include <cassert>

namespace ik {

FoldedAutomaton munn_tree(const FreeContext& ctx, const Word& w) {
  return fold_complete(linear_automaton(ctx.alphabet, w));
}

bool fim_equal(const FreeContext& ctx, const Word& u, const Word& v) {
  FoldedAutomaton mu = munn_tree(ctx, u);
  FoldedAutomaton mv = munn_tree(ctx, v);
  bool by_iso = isomorphic(mu, mv);
#ifndef NDEBUG
  // The mutual-acceptance characterization must agree with isomorphism.
  bool by_membership = accepts(mu, v) && accepts(mv, u);
  assert(by_iso == by_membership);
#endif
  return by_iso;
}

bool fim_leq(const FreeContext& ctx, const Word& u, const Word& v) {
  return accepts(munn_tree(ctx, u), v);
}

bool fim_is_idempotent(const FreeContext& ctx, const Word& w) {
  for (Letter x : w) {
    if (!ctx.alphabet.contains(x)) {
      throw input_error("word letter outside the alphabet");
    }
  }
  bool by_reduction = is_dyck(w);
#ifndef NDEBUG
  FoldedAutomaton m = munn_tree(ctx, w);
  assert(by_reduction == (m.initial() == m.terminal()));
#endif
  return by_reduction;
}

}  // namespace ik
