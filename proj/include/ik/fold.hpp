#ifndef IK_FOLD_HPP
#define IK_FOLD_HPP

#include <span>
#include <utility>
#include <vector>

#include "ik/automata.hpp"

namespace ik {

struct FoldResult {
  FoldedAutomaton automaton;
  /// Maps each vertex of the input graph to its class in the folded
  /// automaton.
  std::vector<uint32_t> vertex_map;
};

/// Complete folding: repeatedly identifies the targets of equally-labelled
/// edges leaving one vertex until the graph is deterministic (equivalently,
/// by involution, until it is injective as well). The result is independent
/// of the processing order; classes are numbered by their smallest original
/// vertex, so equal inputs give identical outputs.
///
/// `identify` seeds extra vertex identifications before folding, on top of
/// any identifications recorded in the graph itself.
FoldResult fold_with_map(
    const EdgeGraph& g,
    std::span<const std::pair<uint32_t, uint32_t>> identify = {});

FoldedAutomaton fold_complete(const EdgeGraph& g);

}  // namespace ik

#endif  // IK_FOLD_HPP
