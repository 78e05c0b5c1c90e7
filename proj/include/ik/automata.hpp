#ifndef IK_AUTOMATA_HPP
#define IK_AUTOMATA_HPP

#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "ik/words.hpp"

namespace ik {

inline constexpr uint32_t kNoVertex = UINT32_MAX;

/// One stored edge p --x--> q with x a generator. The reverse traversal
/// q --x^-1--> p is implied, never stored.
struct Edge {
  uint32_t from;
  uint32_t letter;  // generator index
  uint32_t to;

  friend bool operator==(const Edge&, const Edge&) = default;
  friend auto operator<=>(const Edge&, const Edge&) = default;
};

/// A birooted edge multigraph over a doubled alphabet: the pre-folding stage
/// of every construction here. May be nondeterministic and may hold parallel
/// edges; folding turns it into a FoldedAutomaton.
class EdgeGraph {
 public:
  EdgeGraph(Alphabet alphabet, uint32_t vertex_count, uint32_t initial,
            uint32_t terminal);

  const Alphabet& alphabet() const { return alphabet_; }
  uint32_t vertex_count() const { return vertex_count_; }
  uint32_t initial() const { return initial_; }
  uint32_t terminal() const { return terminal_; }
  const std::vector<Edge>& edges() const { return edges_; }

  uint32_t add_vertex();
  /// Stores p --letter--> q. Positive generator index only.
  void add_edge(uint32_t from, uint32_t letter, uint32_t to);
  /// Glues a fresh path reading w from `from` to `to`, adding w.size()-1
  /// interior vertices. An empty w is recorded as a pending identification
  /// of `from` and `to`, consumed by the folding kernel.
  void add_path(uint32_t from, const Word& w, uint32_t to);

  const std::vector<std::pair<uint32_t, uint32_t>>& identifications() const {
    return identifications_;
  }
  void identify(uint32_t a, uint32_t b);

  void set_roots(uint32_t initial, uint32_t terminal);

 private:
  Alphabet alphabet_;
  uint32_t vertex_count_;
  uint32_t initial_;
  uint32_t terminal_;
  std::vector<Edge> edges_;
  std::vector<std::pair<uint32_t, uint32_t>> identifications_;
};

/// The linear automaton of w: vertices 0..|w|, edge i --w_i--> i+1, initial 0,
/// terminal |w|. Inverse letters of w are stored as reversed positive edges.
EdgeGraph linear_automaton(const Alphabet& alphabet, const Word& w);

/// A deterministic, involutive, trim birooted automaton: transitions are
/// functional in both letter directions and every vertex is connected to the
/// initial one. Construction validates all three properties.
///
/// Transitions live in a flat row-major table indexed by
/// vertex * letter_codes + letter code, with kNoVertex for "undefined".
class FoldedAutomaton {
 public:
  FoldedAutomaton(Alphabet alphabet, uint32_t vertex_count, uint32_t initial,
                  uint32_t terminal, std::vector<uint32_t> transitions);

  /// Skips validation. For internal construction sites that guarantee the
  /// invariants by construction (the folding kernel, canonicalization).
  static FoldedAutomaton trusted(Alphabet alphabet, uint32_t vertex_count,
                                 uint32_t initial, uint32_t terminal,
                                 std::vector<uint32_t> transitions);

  const Alphabet& alphabet() const { return alphabet_; }
  uint32_t vertex_count() const { return vertex_count_; }
  uint32_t initial() const { return initial_; }
  uint32_t terminal() const { return terminal_; }

  uint32_t target(uint32_t v, Letter x) const {
    return transitions_[v * stride_ + x.code()];
  }
  uint32_t target_code(uint32_t v, uint32_t code) const {
    return transitions_[v * stride_ + code];
  }
  uint32_t stride() const { return stride_; }
  const std::vector<uint32_t>& transitions() const { return transitions_; }

  /// Stored (positive) edges, sorted by (from, letter, to).
  std::vector<Edge> positive_edges() const;
  /// Number of stored edges labelled by the given generator.
  uint64_t edge_count(uint32_t base) const;
  /// Total number of stored edges.
  uint64_t edge_count() const;

  /// Vertices v with v --x--> v for the given generator.
  std::vector<uint32_t> loop_vertices(uint32_t base) const;

  /// Throws std::logic_error if determinism, involutivity or trimness fails.
  void check_valid() const;

  friend bool operator==(const FoldedAutomaton&, const FoldedAutomaton&) =
      default;

 private:
  FoldedAutomaton() = default;

  Alphabet alphabet_;
  uint32_t vertex_count_ = 1;
  uint32_t initial_ = 0;
  uint32_t terminal_ = 0;
  uint32_t stride_ = 0;
  std::vector<uint32_t> transitions_;
};

/// Follows w from the given vertex; nullopt as soon as a transition is
/// missing.
std::optional<uint32_t> read_word(const FoldedAutomaton& a, uint32_t from,
                                  const Word& w);

/// True iff w labels a path from the initial to the terminal vertex.
bool accepts(const FoldedAutomaton& a, const Word& w);

/// Root-respecting isomorphism of birooted automata. Deterministic trim
/// automata admit at most one candidate map, found by a parallel traversal
/// from the initial vertices.
bool isomorphic(const FoldedAutomaton& a, const FoldedAutomaton& b);

/// Renumbers vertices in breadth-first order from the initial vertex,
/// scanning positive letters ascending then negative letters ascending.
/// Two automata are isomorphic iff their canonical forms compare equal.
FoldedAutomaton canonical_form(const FoldedAutomaton& a);

/// Hash compatible with operator==; hash canonical forms to get an
/// isomorphism-invariant key.
struct AutomatonHash {
  size_t operator()(const FoldedAutomaton& a) const;
};

}  // namespace ik

#endif  // IK_AUTOMATA_HPP
