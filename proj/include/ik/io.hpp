#ifndef IK_IO_HPP
#define IK_IO_HPP

#include <string>

#include "ik/automata.hpp"

namespace ik {

/// JSON shape:
///   {"alphabet": ["a","b"], "vertices": 3, "initial": 0, "terminal": 2,
///    "edges": [[0,"a",1], [1,"b",2]]}
/// Only positive letters appear; edges are sorted by (from, letter, to).
std::string to_json(const FoldedAutomaton& a);

/// Inverse of to_json. Rejects malformed documents and automata that are
/// not folded (nondeterministic) or not trim.
FoldedAutomaton automaton_from_json(const std::string& text);

/// Graphviz rendering: initial vertex marked by an inbound arrow from a
/// point node, terminal drawn as a double circle, edges sorted as in the
/// JSON form. Output is byte-stable for equal automata.
std::string to_dot(const FoldedAutomaton& a);

}  // namespace ik

#endif  // IK_IO_HPP
