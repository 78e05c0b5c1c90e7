#include "ik/families.hpp"

#include <algorithm>
#include <sstream>

#include "json.hpp"

#include "ik/analysis.hpp"
#include "ik/fold.hpp"
#include "ik/munn.hpp"

namespace ik {

namespace {

Word word_of(const Alphabet& al, const std::string& text) {
  return parse_word(text, al);
}

struct Battery {
  ReplicationReport report;

  void add(std::string name, bool pass, std::string detail = "") {
    report.checks.push_back(
        ReplicationCheck{std::move(name), pass, std::move(detail)});
  }

  ReplicationReport finish() {
    report.all_pass =
        std::all_of(report.checks.begin(), report.checks.end(),
                    [](const ReplicationCheck& c) { return c.pass; });
    return std::move(report);
  }
};

std::string exactness(const ClosureResult& c) {
  std::ostringstream out;
  out << to_string(c.status) << " after " << c.rounds_used << " rounds, "
      << c.automaton.vertex_count() << " vertices";
  return out.str();
}

}  // namespace

Presentation build_presentation(const TIFamily& fam) {
  Alphabet al("abc");
  std::vector<Relation> rels;
  for (uint32_t i : fam.indices) {
    std::string u = "a" + std::string(i, 'b') + "a";
    rels.push_back(Relation{word_of(al, u), word_of(al, u + "c")});
  }
  return Presentation(std::move(al), std::move(rels));
}

Presentation build_presentation(const StFamily& fam) {
  if (fam.t == 0) {
    throw input_error("the S_t family needs t >= 1");
  }
  Alphabet al("abc");
  std::string bin(fam.t, 'B');
  std::string bpos(fam.t, 'b');
  std::vector<Relation> rels;
  rels.push_back(Relation{word_of(al, "ca"), word_of(al, "a")});
  rels.push_back(Relation{word_of(al, "c" + bin + "C" + bpos),
                          word_of(al, "c" + bin + bpos + "C")});
  return Presentation(std::move(al), std::move(rels));
}

Word en_word(uint32_t t, uint32_t n) {
  Alphabet al("abc");
  Word u = word_of(al, "a" + std::string(t * n, 'b') + "a");
  return concat(u, inverse(u));
}

FoldedAutomaton expected_closure_en(uint32_t t, uint32_t n) {
  if (t == 0) {
    throw input_error("the S_t family needs t >= 1");
  }
  Alphabet al("abc");
  const uint32_t spine_end = t * n + 2;
  EdgeGraph g(al, t * n + 3, 0, 0);
  g.add_edge(0, 0, 1);  // a
  for (uint32_t v = 1; v < t * n + 1; ++v) {
    g.add_edge(v, 1, v + 1);  // b
  }
  g.add_edge(t * n + 1, 0, spine_end);  // a
  g.add_edge(0, 2, 0);                  // c-loop at p_0
  for (uint32_t k = 0; k <= n; ++k) {
    g.add_edge(1 + k * t, 2, 1 + k * t);  // c-loops at p_1 .. p_{n+1}
  }
  return fold_complete(g);
}

ReplicationReport replicate(const StFamily& fam, uint32_t max_n,
                            const Budget& budget) {
  Presentation p = build_presentation(fam);
  const Alphabet& al = p.alphabet();
  Battery bat;
  const Word target = word_of(al, "acA");

  for (size_t r = 0; r < p.relations().size(); ++r) {
    Verdict v = eq(p, p.relations()[r].lhs, p.relations()[r].rhs, budget);
    bat.add("relation" + std::to_string(r + 1) + ".holds",
            v == Verdict::Yes, to_string(v));
  }

  {
    Verdict v = is_idempotent(p, target, budget);
    bat.add("target.not_idempotent", v == Verdict::No, to_string(v));
  }

  std::vector<Word> ewords;
  for (uint32_t n = 1; n <= max_n; ++n) {
    const std::string base = "e" + std::to_string(n);
    Word e = en_word(fam.t, n);
    ewords.push_back(e);
    ClosureResult c = closure(p, e, budget);
    bat.add(base + ".closure_exact", c.status == ClosureStatus::Exact,
            exactness(c));
    const uint32_t want = fam.t * n + 3;
    bat.add(base + ".vertices", c.automaton.vertex_count() == want,
            std::to_string(c.automaton.vertex_count()) + " vs " +
                std::to_string(want));
    bat.add(base + ".expected_shape",
            isomorphic(c.automaton, expected_closure_en(fam.t, n)));
    auto c_loops = c.automaton.loop_vertices(2);
    bat.add(base + ".c_loop_count", c_loops.size() == n + 2,
            std::to_string(c_loops.size()) + " vs " +
                std::to_string(n + 2));
    Verdict below = leq(p, e, target, budget);
    bat.add(base + ".below_aca", below == Verdict::Yes, to_string(below));
    bat.add(base + ".idempotent",
            is_idempotent(p, e, budget) == Verdict::Yes);
    WeightReport wr = check_loop_weights(c.automaton, 1);
    bat.add(base + ".b_weight_zero", wr.violations.empty(),
            std::to_string(wr.loops_checked) + " cycles checked");
  }

  for (size_t i = 0; i < ewords.size(); ++i) {
    for (size_t j = i + 1; j < ewords.size(); ++j) {
      Verdict ij = leq(p, ewords[i], ewords[j], budget);
      Verdict ji = leq(p, ewords[j], ewords[i], budget);
      bat.add("e" + std::to_string(i + 1) + "_e" + std::to_string(j + 1) +
                  ".incomparable",
              ij == Verdict::No && ji == Verdict::No,
              std::string(to_string(ij)) + "/" + to_string(ji));
    }
  }

  // Closures of words over b and c only: no c-loop may ever appear, and no
  // a-edge either. Both facts need exact closures to be conclusive.
  {
    const std::string bin(fam.t, 'B');
    const std::string bpos(fam.t, 'b');
    std::vector<std::string> bc_words = {
        "b",           "B",           "c",        "C",        "bc",
        "cb",          "bC",          "Cb",       "cB",       "Bc",
        "bbc",         "cBB",         "ccb",      "BBC",      "bcb",
        "cbc",         "BcB",         "CbC",      "bbcc",     "ccBB",
        "c" + bin + "C" + bpos,       "c" + bin + bpos + "C",
        "c" + bin,     bpos + "c" + bin};
    bool all_ok = true;
    std::string first_bad;
    for (const std::string& text : bc_words) {
      ClosureResult c = closure(p, word_of(al, text), budget);
      bool ok = c.status == ClosureStatus::Exact &&
                c.automaton.loop_vertices(2).empty() &&
                c.automaton.edge_count(0) == 0;
      if (!ok && all_ok) {
        all_ok = false;
        first_bad = text;
      }
    }
    bat.add("bc_words.c_loop_free", all_ok,
            all_ok ? std::to_string(bc_words.size()) + " words"
                   : "failed at " + first_bad);
  }

  // a-edge counts of closures never exceed the Munn tree's.
  {
    std::vector<std::string> words = {
        "a",    "aa",     "acA",   "abA",    "aBc",  "caca",
        "abb",  "ABab",   "acbA",  "abcABC", "aabb", "cabAC",
        "acaC", "aBcABc", "bab",   "ccaa"};
    bool all_ok = true;
    std::string first_bad;
    for (const std::string& text : words) {
      Word w = word_of(al, text);
      ClosureResult c = closure(p, w, budget);
      uint64_t munn_a = munn_tree(FreeContext{al}, w).edge_count(0);
      bool ok = c.status == ClosureStatus::Exact &&
                c.automaton.edge_count(0) <= munn_a;
      if (!ok && all_ok) {
        all_ok = false;
        first_bad = text;
      }
    }
    bat.add("a_edges.bounded_by_munn", all_ok,
            all_ok ? std::to_string(words.size()) + " words"
                   : "failed at " + first_bad);
  }

  return bat.finish();
}

ReplicationReport replicate(const TIFamily& fam, const Budget& budget) {
  Presentation p = build_presentation(fam);
  const Alphabet& al = p.alphabet();
  Battery bat;
  const Word c_word = word_of(al, "c");

  std::vector<Word> ws;
  for (uint32_t i : fam.indices) {
    const std::string tag = std::to_string(i);
    Word u = word_of(al, "a" + std::string(i, 'b') + "a");
    Word w = concat(inverse(u), u);
    ws.push_back(w);

    bat.add("u" + tag + ".absorbs_c",
            eq(p, u, concat(u, c_word), budget) == Verdict::Yes);
    bat.add("w" + tag + ".idempotent",
            is_idempotent(p, w, budget) == Verdict::Yes);
    Verdict below = leq(p, w, c_word, budget);
    bat.add("w" + tag + ".below_c", below == Verdict::Yes, to_string(below));
    bat.add("w" + tag + ".form_with_c",
            eq(p, w, concat(w, c_word), budget) == Verdict::Yes);
    ClosureResult c = closure(p, w, budget);
    bat.add("w" + tag + ".closure_exact",
            c.status == ClosureStatus::Exact, exactness(c));
    bat.add("w" + tag + ".vertices",
            c.automaton.vertex_count() == i + 3,
            std::to_string(c.automaton.vertex_count()) + " vs " +
                std::to_string(i + 3));
  }

  for (size_t x = 0; x < fam.indices.size(); ++x) {
    for (size_t y = 0; y < fam.indices.size(); ++y) {
      if (x == y) continue;
      uint32_t i = fam.indices[x];
      uint32_t j = fam.indices[y];
      if (x < y) {
        Verdict xy = leq(p, ws[x], ws[y], budget);
        Verdict yx = leq(p, ws[y], ws[x], budget);
        bat.add("w" + std::to_string(i) + "_w" + std::to_string(j) +
                    ".incomparable",
                xy == Verdict::No && yx == Verdict::No,
                std::string(to_string(xy)) + "/" + to_string(yx));
      }
      // a b^i a never labels a path in the Munn tree of a b^j a.
      Word ui = word_of(al, "a" + std::string(i, 'b') + "a");
      Word uj = word_of(al, "a" + std::string(j, 'b') + "a");
      bool none =
          !find_labeled_path(munn_tree(FreeContext{al}, uj), ui).has_value();
      bat.add("mt_u" + std::to_string(j) + ".no_u" + std::to_string(i) +
                  "_path",
              none);
    }
  }

  return bat.finish();
}

std::string format_report(const ReplicationReport& r) {
  std::ostringstream out;
  size_t passed = 0;
  for (const ReplicationCheck& c : r.checks) {
    out << (c.pass ? "PASS  " : "FAIL  ") << c.name;
    if (!c.detail.empty()) out << "  (" << c.detail << ")";
    out << '\n';
    if (c.pass) ++passed;
  }
  out << (r.all_pass ? "all " : "") << passed << "/" << r.checks.size()
      << " checks passed\n";
  return out.str();
}

std::string report_to_json(const ReplicationReport& r) {
  nlohmann::json doc;
  doc["all_pass"] = r.all_pass;
  doc["checks"] = nlohmann::json::array();
  for (const ReplicationCheck& c : r.checks) {
    doc["checks"].push_back(
        {{"name", c.name}, {"pass", c.pass}, {"detail", c.detail}});
  }
  return doc.dump(2);
}

}  // namespace ik
