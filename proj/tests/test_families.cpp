#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <string>

#include <json.hpp>

#include "ik/families.hpp"
#include "ik/stephen.hpp"

using namespace ik;

namespace {

bool has_check(const ReplicationReport& r, const std::string& name) {
  return std::any_of(r.checks.begin(), r.checks.end(),
                     [&](const ReplicationCheck& c) { return c.name == name; });
}

}  // namespace

TEST_CASE("family presentations") {
  Presentation st2 = build_presentation(StFamily{2});
  CHECK(st2.alphabet().size() == 3);
  REQUIRE(st2.relations().size() == 2);
  CHECK(st2.relations()[0].lhs == parse_word("ca", st2.alphabet()));
  CHECK(st2.relations()[0].rhs == parse_word("a", st2.alphabet()));
  CHECK(st2.relations()[1].lhs == parse_word("cBBCbb", st2.alphabet()));
  CHECK(st2.relations()[1].rhs == parse_word("cBBbbC", st2.alphabet()));

  CHECK_THROWS_AS(build_presentation(StFamily{0}), input_error);

  Presentation ti = build_presentation(TIFamily{{1, 3}});
  REQUIRE(ti.relations().size() == 2);
  CHECK(ti.relations()[0].lhs == parse_word("aba", ti.alphabet()));
  CHECK(ti.relations()[0].rhs == parse_word("abac", ti.alphabet()));
  CHECK(ti.relations()[1].lhs == parse_word("abbba", ti.alphabet()));
  CHECK(ti.relations()[1].rhs == parse_word("abbbac", ti.alphabet()));
}

TEST_CASE("e_n words and their closures") {
  Presentation st2 = build_presentation(StFamily{2});
  CHECK(en_word(2, 1) == parse_word("abbaABBA", st2.alphabet()));
  CHECK(en_word(3, 1) == parse_word("abbbaABBBA", st2.alphabet()));
  CHECK(en_word(2, 2).size() == 12);

  for (uint32_t t = 2; t <= 3; ++t) {
    for (uint32_t n = 1; n <= 2; ++n) {
      FoldedAutomaton expected = expected_closure_en(t, n);
      CHECK(expected.vertex_count() == t * n + 3);
      CHECK(expected.loop_vertices(2).size() == n + 2);
      Presentation p = build_presentation(StFamily{t});
      ClosureResult c = closure(p, en_word(t, n));
      REQUIRE(c.status == ClosureStatus::Exact);
      CHECK(isomorphic(c.automaton, expected));
    }
  }
}

TEST_CASE("replication battery for S_2 passes") {
  ReplicationReport r = replicate(StFamily{2}, 2);
  CHECK(r.all_pass);
  CHECK(std::all_of(r.checks.begin(), r.checks.end(),
                    [](const ReplicationCheck& c) { return c.pass; }));

  CHECK(has_check(r, "relation1.holds"));
  CHECK(has_check(r, "relation2.holds"));
  CHECK(has_check(r, "target.not_idempotent"));
  CHECK(has_check(r, "e1.closure_exact"));
  CHECK(has_check(r, "e2.vertices"));
  CHECK(has_check(r, "e1.below_aca"));
  CHECK(has_check(r, "e1_e2.incomparable"));
  CHECK(has_check(r, "bc_words.c_loop_free"));
  CHECK(has_check(r, "a_edges.bounded_by_munn"));
}

TEST_CASE("replication battery for S_3 passes") {
  ReplicationReport r = replicate(StFamily{3}, 2);
  CHECK(r.all_pass);
}

TEST_CASE("replication battery for T_I passes") {
  ReplicationReport r = replicate(TIFamily{{1, 2, 3}});
  CHECK(r.all_pass);
  CHECK(has_check(r, "w1.idempotent"));
  CHECK(has_check(r, "w2.below_c"));
  CHECK(has_check(r, "w1_w2.incomparable"));
}

TEST_CASE("report formatting") {
  ReplicationReport r = replicate(StFamily{2}, 1);
  std::string text = format_report(r);
  CHECK(text.find("PASS") != std::string::npos);
  CHECK(text.find("FAIL") == std::string::npos);
  CHECK(text.find("checks passed") != std::string::npos);

  nlohmann::json doc = nlohmann::json::parse(report_to_json(r));
  CHECK(doc.at("all_pass").get<bool>());
  CHECK(doc.at("checks").is_array());
  CHECK(doc.at("checks").size() == r.checks.size());
  for (const auto& entry : doc.at("checks")) {
    CHECK(entry.at("pass").get<bool>());
  }
}

TEST_CASE("a truncating budget shows up as failed checks, not passes") {
  ReplicationReport r = replicate(StFamily{2}, 2, Budget{1, 100000});
  CHECK(!r.all_pass);
}
