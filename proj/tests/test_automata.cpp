#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <random>
#include <stdexcept>
#include <vector>

#include "helpers.hpp"
#include "ik/automata.hpp"
#include "ik/fold.hpp"
#include "ik/munn.hpp"

using namespace ik;
using test::random_word_upto;

namespace {

/// The same automaton with vertices renumbered by a permutation.
FoldedAutomaton permuted(const FoldedAutomaton& a,
                         const std::vector<uint32_t>& perm) {
  const uint32_t stride = a.stride();
  std::vector<uint32_t> trans(a.transitions().size(), kNoVertex);
  for (uint32_t v = 0; v < a.vertex_count(); ++v) {
    for (uint32_t c = 0; c < stride; ++c) {
      uint32_t t = a.target_code(v, c);
      if (t != kNoVertex) trans[perm[v] * stride + c] = perm[t];
    }
  }
  return FoldedAutomaton(a.alphabet(), a.vertex_count(), perm[a.initial()],
                         perm[a.terminal()], std::move(trans));
}

}  // namespace

TEST_CASE("linear automaton of a word") {
  Alphabet ab("ab");
  EdgeGraph g = linear_automaton(ab, parse_word("ab", ab));
  CHECK(g.vertex_count() == 3);
  CHECK(g.initial() == 0);
  CHECK(g.terminal() == 2);
  REQUIRE(g.edges().size() == 2);
  CHECK(g.edges()[0] == Edge{0, 0, 1});
  CHECK(g.edges()[1] == Edge{1, 1, 2});

  // An inverse letter is stored as the reversed positive edge.
  EdgeGraph h = linear_automaton(ab, parse_word("aB", ab));
  REQUIRE(h.edges().size() == 2);
  CHECK(h.edges()[0] == Edge{0, 0, 1});
  CHECK(h.edges()[1] == Edge{2, 1, 1});

  EdgeGraph e = linear_automaton(ab, Word{});
  CHECK(e.vertex_count() == 1);
  CHECK(e.initial() == e.terminal());
}

TEST_CASE("folded automaton validation") {
  Alphabet a("a");
  // 0 -a-> 1 with both directions recorded.
  std::vector<uint32_t> ok = {1, kNoVertex, kNoVertex, 0};
  CHECK_NOTHROW(FoldedAutomaton(a, 2, 0, 1, ok));

  // Involution missing: the back transition is absent.
  std::vector<uint32_t> no_inv = {1, kNoVertex, kNoVertex, kNoVertex};
  CHECK_THROWS_AS(FoldedAutomaton(a, 2, 0, 1, no_inv), std::logic_error);

  // Two vertices map to the same target (injectivity fails).
  std::vector<uint32_t> not_inj = {1, kNoVertex, kNoVertex, 0, 1, kNoVertex};
  CHECK_THROWS_AS(FoldedAutomaton(a, 3, 0, 1, not_inj), std::logic_error);

  // Vertex 2 is unreachable from vertex 0.
  std::vector<uint32_t> not_trim = {1,         kNoVertex, kNoVertex,
                                    0,         kNoVertex, kNoVertex};
  CHECK_THROWS_AS(FoldedAutomaton(a, 3, 0, 1, not_trim), std::logic_error);

  // Target out of range.
  std::vector<uint32_t> oob = {7, kNoVertex, kNoVertex, 0};
  CHECK_THROWS_AS(FoldedAutomaton(a, 2, 0, 1, oob), std::logic_error);

  // Roots out of range.
  CHECK_THROWS_AS(FoldedAutomaton(a, 2, 5, 1, ok), std::logic_error);
}

TEST_CASE("reading words") {
  Alphabet ab("ab");
  FreeContext ctx{ab};
  FoldedAutomaton t = munn_tree(ctx, parse_word("ab", ab));

  CHECK(read_word(t, 0, parse_word("ab", ab)) == 2);
  CHECK(read_word(t, 0, parse_word("abBA", ab)) == 0);
  CHECK(!read_word(t, 0, parse_word("b", ab)).has_value());
  CHECK(read_word(t, 0, Word{}) == 0);

  CHECK(accepts(t, parse_word("ab", ab)));
  CHECK(accepts(t, parse_word("aAab", ab)));
  CHECK(!accepts(t, parse_word("a", ab)));

  // Letters outside the automaton's alphabet are a usage error.
  Alphabet abc("abc");
  CHECK_THROWS_AS(read_word(t, 0, parse_word("c", abc)), input_error);
}

TEST_CASE("edge views") {
  Alphabet ab("ab");
  FreeContext ctx{ab};
  FoldedAutomaton t = munn_tree(ctx, parse_word("abA", ab));
  // Tree: 0 -a-> 1 -b-> 2 <-a- 3, basepoints 0 -> 3.
  REQUIRE(t.vertex_count() == 4);
  std::vector<Edge> edges = t.positive_edges();
  CHECK(std::is_sorted(edges.begin(), edges.end()));
  CHECK(edges.size() == 3);
  CHECK(t.edge_count() == 3);
  CHECK(t.edge_count(0) == 2);
  CHECK(t.edge_count(1) == 1);
  CHECK(t.loop_vertices(0).empty());
}

TEST_CASE("isomorphism is a root-respecting renumbering") {
  Alphabet ab("ab");
  FreeContext ctx{ab};
  FoldedAutomaton t = munn_tree(ctx, parse_word("abA", ab));

  std::vector<uint32_t> perm = {2, 0, 1, 3};
  FoldedAutomaton p = permuted(t, perm);
  CHECK(isomorphic(t, p));
  CHECK(isomorphic(p, t));

  // Same underlying graph, different terminal root.
  FoldedAutomaton other(t.alphabet(), t.vertex_count(), t.initial(), 0,
                        t.transitions());
  CHECK(!isomorphic(t, other));

  CHECK(!isomorphic(t, munn_tree(ctx, parse_word("ab", ab))));
  CHECK(!isomorphic(t, munn_tree(ctx, parse_word("ba", ab))));
}

TEST_CASE("canonical form characterizes isomorphism") {
  Alphabet ab("ab");
  FreeContext ctx{ab};
  std::mt19937 rng(461);

  for (int i = 0; i < 120; ++i) {
    Word w = random_word_upto(rng, ab, 10);
    FoldedAutomaton t = munn_tree(ctx, w);

    std::vector<uint32_t> perm(t.vertex_count());
    std::iota(perm.begin(), perm.end(), 0u);
    std::shuffle(perm.begin(), perm.end(), rng);
    FoldedAutomaton p = permuted(t, perm);

    FoldedAutomaton ct = canonical_form(t);
    CHECK(ct == canonical_form(p));
    CHECK(isomorphic(ct, t));
    CHECK(AutomatonHash{}(ct) == AutomatonHash{}(canonical_form(p)));

    Word v = random_word_upto(rng, ab, 10);
    FoldedAutomaton s = munn_tree(ctx, v);
    CHECK(isomorphic(t, s) == (ct == canonical_form(s)));
  }
}
