#include "ik/stephen.hpp"

#include <cassert>
#include <numeric>

namespace ik {

const char* to_string(Verdict v) {
  switch (v) {
    case Verdict::Yes:
      return "Yes";
    case Verdict::No:
      return "No";
    default:
      return "Unknown";
  }
}

const char* to_string(ClosureStatus s) {
  return s == ClosureStatus::Exact ? "Exact" : "Truncated";
}

std::vector<ExpansionSite> expansions_applicable(const Presentation& p,
                                                 const FoldedAutomaton& a) {
  std::vector<ExpansionSite> sites;
  const uint32_t n = a.vertex_count();
  for (uint32_t rel_i = 0; rel_i < p.relations().size(); ++rel_i) {
    const Relation& rel = p.relations()[rel_i];
    for (int rev = 0; rev < 2; ++rev) {
      const Word& present = rev ? rel.rhs : rel.lhs;
      const Word& missing = rev ? rel.lhs : rel.rhs;
      for (uint32_t v = 0; v < n; ++v) {
        auto q = read_word(a, v, present);
        if (!q) continue;
        auto other = read_word(a, v, missing);
        if (!other || *other != *q) {
          sites.push_back(ExpansionSite{rel_i, rev == 1, v, *q});
        }
      }
    }
  }
  return sites;
}

FoldResult apply_expansions(const Presentation& p, const FoldedAutomaton& a,
                            std::span<const ExpansionSite> sites) {
  EdgeGraph g(a.alphabet(), a.vertex_count(), a.initial(), a.terminal());
  for (const Edge& e : a.positive_edges()) {
    g.add_edge(e.from, e.letter, e.to);
  }
  for (const ExpansionSite& site : sites) {
    const Relation& rel = p.relations().at(site.relation);
    const Word& missing = site.reversed ? rel.lhs : rel.rhs;
    g.add_path(site.from, missing, site.to);
  }
  return fold_with_map(g);
}

FoldedAutomaton stephen_step(const Presentation& p,
                             const FoldedAutomaton& a) {
  auto sites = expansions_applicable(p, a);
  if (sites.empty()) return a;
  return apply_expansions(p, a, sites).automaton;
}

TrackedClosure close_automaton(const Presentation& p, FoldedAutomaton start,
                               const Budget& budget) {
  std::vector<uint32_t> map(start.vertex_count());
  std::iota(map.begin(), map.end(), 0);
  FoldedAutomaton a = std::move(start);
  uint32_t steps = 0;

  if (a.vertex_count() > budget.max_vertices) {
    return TrackedClosure{std::move(a), ClosureStatus::Truncated, 1,
                          std::move(map)};
  }
  for (;;) {
    auto sites = expansions_applicable(p, a);
    if (sites.empty()) {
      return TrackedClosure{std::move(a), ClosureStatus::Exact, steps + 1,
                            std::move(map)};
    }
    if (steps >= budget.max_rounds) {
      return TrackedClosure{std::move(a), ClosureStatus::Truncated,
                            steps + 1, std::move(map)};
    }
    FoldResult r = apply_expansions(p, a, sites);
    for (uint32_t& v : map) v = r.vertex_map[v];
    a = std::move(r.automaton);
    ++steps;
    if (a.vertex_count() > budget.max_vertices) {
      return TrackedClosure{std::move(a), ClosureStatus::Truncated,
                            steps + 1, std::move(map)};
    }
  }
}

ClosureResult closure(const Presentation& p, const Word& w,
                      const Budget& budget) {
  FoldedAutomaton munn = fold_complete(linear_automaton(p.alphabet(), w));
  TrackedClosure tc = close_automaton(p, std::move(munn), budget);
  return ClosureResult{std::move(tc.automaton), tc.status, tc.rounds_used};
}

Verdict eq(const Presentation& p, const Word& u, const Word& v,
           const Budget& budget) {
  ClosureResult cu = closure(p, u, budget);
  ClosureResult cv = closure(p, v, budget);
  bool u_accepts_v = accepts(cu.automaton, v);
  bool v_accepts_u = accepts(cv.automaton, u);
  // Approximants accept only words the full automaton accepts, so mutual
  // acceptance proves equality even when truncated.
  if (u_accepts_v && v_accepts_u) return Verdict::Yes;
  if (!u_accepts_v && cu.status == ClosureStatus::Exact) return Verdict::No;
  if (!v_accepts_u && cv.status == ClosureStatus::Exact) return Verdict::No;
  return Verdict::Unknown;
}

Verdict leq(const Presentation& p, const Word& u, const Word& v,
            const Budget& budget) {
  // u <= v iff v lies in the language of the closure of u.
  ClosureResult cu = closure(p, u, budget);
  if (accepts(cu.automaton, v)) return Verdict::Yes;
  return cu.status == ClosureStatus::Exact ? Verdict::No : Verdict::Unknown;
}

Verdict is_idempotent(const Presentation& p, const Word& w,
                      const Budget& budget) {
  ClosureResult c = closure(p, w, budget);
  // Roots merge monotonically along rounds, so a merged basepoint persists
  // into the full automaton: Yes is sound even when truncated.
  if (c.automaton.initial() == c.automaton.terminal()) return Verdict::Yes;
  return c.status == ClosureStatus::Exact ? Verdict::No : Verdict::Unknown;
}

std::optional<uint64_t> r_class_size(const Presentation& p, const Word& w,
                                     const Budget& budget) {
  ClosureResult c = closure(p, w, budget);
  if (c.status != ClosureStatus::Exact) return std::nullopt;
  // Vertices of the Schutzenberger automaton are exactly the R-class.
  return c.automaton.vertex_count();
}

}  // namespace ik
