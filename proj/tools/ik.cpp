// Command line front end for the inverse-monoid toolkit.
//
// Exit codes: 0 = yes / success, 1 = no / failed assertion, 2 = unknown /
// truncated, 64 = usage or input error.

#include <cstdio>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "ik/analysis.hpp"
#include "ik/families.hpp"
#include "ik/io.hpp"
#include "ik/munn.hpp"
#include "ik/presentation.hpp"
#include "ik/stephen.hpp"

namespace {

constexpr int kYes = 0;
constexpr int kNo = 1;
constexpr int kUnknown = 2;
constexpr int kUsage = 64;

int verdict_code(ik::Verdict v) {
  switch (v) {
    case ik::Verdict::Yes:
      return kYes;
    case ik::Verdict::No:
      return kNo;
    default:
      return kUnknown;
  }
}

struct Options {
  std::string presentation_path;
  ik::Budget budget;
  bool json = false;
  bool dot = false;
};

void add_budget_flags(CLI::App* cmd, Options& opt) {
  cmd->add_option("--max-rounds", opt.budget.max_rounds,
                  "closure round cap (default 64)");
  cmd->add_option("--max-vertices", opt.budget.max_vertices,
                  "closure vertex cap (default 100000)");
}

void add_presentation_flag(CLI::App* cmd, Options& opt) {
  cmd->add_option("-p,--presentation", opt.presentation_path,
                  "presentation file")
      ->required();
}

void print_automaton(const ik::FoldedAutomaton& a, const Options& opt) {
  if (opt.json) {
    std::cout << ik::to_json(a) << "\n";
  } else if (opt.dot) {
    std::cout << ik::to_dot(a);
  } else {
    std::cout << "vertices: " << a.vertex_count()
              << "\nedges: " << a.edge_count()
              << "\ninitial: " << a.initial()
              << "\nterminal: " << a.terminal() << "\n";
  }
}

std::vector<uint32_t> parse_uint_list(const std::string& text) {
  std::vector<uint32_t> out;
  std::string cur;
  auto flush = [&] {
    if (cur.empty()) return;
    out.push_back(static_cast<uint32_t>(std::stoul(cur)));
    cur.clear();
  };
  for (char ch : text) {
    if (ch == ',') {
      flush();
    } else if (ch >= '0' && ch <= '9') {
      cur += ch;
    } else {
      throw ik::input_error("expected a comma-separated list of numbers");
    }
  }
  flush();
  if (out.empty()) {
    throw ik::input_error("expected a comma-separated list of numbers");
  }
  return out;
}

int run(int argc, char** argv) {
  CLI::App app{"computations in finitely presented inverse monoids"};
  app.require_subcommand(1);

  Options opt;
  std::string word_u, word_v, letters = "abc";
  std::string target_text, candidate_text, growth_lens;
  uint32_t max_len = 8;
  uint32_t weight_letterless = 0;
  std::string weight_letter = "b";
  uint64_t weight_sample = 0;
  uint32_t st_t = 0;
  std::string ti_list;
  uint32_t family_max_n = 3;
  (void)weight_letterless;

  // munn
  CLI::App* munn = app.add_subcommand(
      "munn", "Munn tree of a word in the free inverse monoid");
  munn->add_option("word", word_u, "word, uppercase = inverse")->required();
  munn->add_option("--letters", letters, "alphabet (default abc)");
  munn->add_flag("--json", opt.json, "emit automaton JSON");
  munn->add_flag("--dot", opt.dot, "emit Graphviz");

  // eq / leq / idem
  CLI::App* eq_cmd = app.add_subcommand("eq", "decide u = v");
  add_presentation_flag(eq_cmd, opt);
  eq_cmd->add_option("u", word_u)->required();
  eq_cmd->add_option("v", word_v)->required();
  add_budget_flags(eq_cmd, opt);

  CLI::App* leq_cmd =
      app.add_subcommand("leq", "decide u <= v in the natural order");
  add_presentation_flag(leq_cmd, opt);
  leq_cmd->add_option("u", word_u)->required();
  leq_cmd->add_option("v", word_v)->required();
  add_budget_flags(leq_cmd, opt);

  CLI::App* idem_cmd = app.add_subcommand("idem", "decide w^2 = w");
  add_presentation_flag(idem_cmd, opt);
  idem_cmd->add_option("w", word_u)->required();
  add_budget_flags(idem_cmd, opt);

  // closure
  CLI::App* closure_cmd = app.add_subcommand(
      "closure", "iterated expansion/folding closure of a word");
  add_presentation_flag(closure_cmd, opt);
  closure_cmd->add_option("w", word_u)->required();
  closure_cmd->add_flag("--json", opt.json, "emit automaton JSON");
  closure_cmd->add_flag("--dot", opt.dot, "emit Graphviz");
  add_budget_flags(closure_cmd, opt);

  // rclass
  CLI::App* rclass_cmd =
      app.add_subcommand("rclass", "size of the R-class of w");
  add_presentation_flag(rclass_cmd, opt);
  rclass_cmd->add_option("w", word_u)->required();
  add_budget_flags(rclass_cmd, opt);

  // mu-search
  CLI::App* mu_cmd = app.add_subcommand(
      "mu-search", "evidence that an idempotent is maximal below a target");
  add_presentation_flag(mu_cmd, opt);
  mu_cmd->add_option("-s,--target", target_text, "target word s")->required();
  mu_cmd->add_option("-e,--candidate", candidate_text,
                     "candidate idempotent e");
  mu_cmd->add_option("--max-len", max_len,
                     "witness length horizon (default 8)");
  mu_cmd->add_option("--growth", growth_lens,
                     "comma-separated horizons: count maximal idempotents "
                     "below the target per horizon");
  mu_cmd->add_flag("--json", opt.json, "emit report JSON");
  add_budget_flags(mu_cmd, opt);

  // weights
  CLI::App* weights_cmd = app.add_subcommand(
      "weights", "letter-weight check on the cycles of a closure");
  add_presentation_flag(weights_cmd, opt);
  weights_cmd->add_option("w", word_u)->required();
  weights_cmd->add_option("--letter", weight_letter,
                          "generator to weigh (default b)");
  weights_cmd->add_option("--sample", weight_sample,
                          "check only this many cycles (default all)");
  add_budget_flags(weights_cmd, opt);

  // family-replicate
  CLI::App* family_cmd = app.add_subcommand(
      "family-replicate", "structural battery for a presentation family");
  family_cmd->add_option("--st", st_t, "S_t family with this t");
  family_cmd->add_option("--ti", ti_list,
                         "T_I family with these indices, e.g. 1,2,3");
  family_cmd->add_option("--max-n", family_max_n,
                         "largest n for S_t checks (default 3)");
  family_cmd->add_flag("--json", opt.json, "emit report JSON");
  add_budget_flags(family_cmd, opt);

  CLI11_PARSE(app, argc, argv);

  auto load = [&] { return ik::load_presentation_file(opt.presentation_path); };

  if (munn->parsed()) {
    ik::FreeContext ctx{ik::Alphabet(letters)};
    ik::FoldedAutomaton m =
        ik::munn_tree(ctx, ik::parse_word(word_u, ctx.alphabet));
    print_automaton(m, opt);
    return kYes;
  }
  if (eq_cmd->parsed()) {
    ik::Presentation p = load();
    ik::Verdict v = ik::eq(p, ik::parse_word(word_u, p.alphabet()),
                           ik::parse_word(word_v, p.alphabet()), opt.budget);
    std::cout << ik::to_string(v) << "\n";
    return verdict_code(v);
  }
  if (leq_cmd->parsed()) {
    ik::Presentation p = load();
    ik::Verdict v = ik::leq(p, ik::parse_word(word_u, p.alphabet()),
                            ik::parse_word(word_v, p.alphabet()), opt.budget);
    std::cout << ik::to_string(v) << "\n";
    return verdict_code(v);
  }
  if (idem_cmd->parsed()) {
    ik::Presentation p = load();
    ik::Verdict v = ik::is_idempotent(
        p, ik::parse_word(word_u, p.alphabet()), opt.budget);
    std::cout << ik::to_string(v) << "\n";
    return verdict_code(v);
  }
  if (closure_cmd->parsed()) {
    ik::Presentation p = load();
    ik::ClosureResult c =
        ik::closure(p, ik::parse_word(word_u, p.alphabet()), opt.budget);
    if (!opt.json && !opt.dot) {
      std::cout << "status: " << ik::to_string(c.status)
                << "\nrounds: " << c.rounds_used << "\n";
    }
    print_automaton(c.automaton, opt);
    return c.status == ik::ClosureStatus::Exact ? kYes : kUnknown;
  }
  if (rclass_cmd->parsed()) {
    ik::Presentation p = load();
    auto size =
        ik::r_class_size(p, ik::parse_word(word_u, p.alphabet()), opt.budget);
    if (size) {
      std::cout << *size << "\n";
      return kYes;
    }
    std::cout << "Unknown (closure truncated)\n";
    return kUnknown;
  }
  if (mu_cmd->parsed()) {
    ik::Presentation p = load();
    ik::Word s = ik::parse_word(target_text, p.alphabet());
    if (!growth_lens.empty()) {
      auto lens = parse_uint_list(growth_lens);
      auto counts = ik::mu_candidate_growth(p, s, lens, opt.budget);
      if (opt.json) {
        std::cout << "{\"lens\": [";
        for (size_t i = 0; i < lens.size(); ++i) {
          std::cout << (i ? "," : "") << lens[i];
        }
        std::cout << "], \"maximal\": [";
        for (size_t i = 0; i < counts.size(); ++i) {
          std::cout << (i ? "," : "") << counts[i];
        }
        std::cout << "]}\n";
      } else {
        for (size_t i = 0; i < lens.size(); ++i) {
          std::cout << "len " << lens[i] << ": " << counts[i]
                    << " maximal idempotents below the target\n";
        }
      }
      return kYes;
    }
    if (candidate_text.empty()) {
      std::cerr << "mu-search needs --candidate or --growth\n";
      return kUsage;
    }
    ik::Word e = ik::parse_word(candidate_text, p.alphabet());
    ik::MuSearchReport rep =
        ik::mu_falsifier_search(p, s, e, max_len, opt.budget);
    if (opt.json) {
      std::cout << "{\"words_enumerated\": " << rep.words_enumerated
                << ", \"candidates\": " << rep.candidates_confirmed.size()
                << ", \"falsifiers\": " << rep.strict_between_found.size()
                << "}\n";
    } else {
      std::cout << "enumerated " << rep.words_enumerated
                << " idempotent word forms up to length " << rep.max_len
                << "\n"
                << rep.candidates_confirmed.size()
                << " distinct idempotents below the target\n";
      if (rep.strict_between_found.empty()) {
        std::cout << "no falsifier: the candidate is maximal within the "
                     "horizon\n";
      } else {
        std::cout << rep.strict_between_found.size()
                  << " falsifier(s), first: "
                  << ik::format_word(rep.strict_between_found[0].second,
                                     p.alphabet())
                  << "\n";
      }
    }
    return rep.strict_between_found.empty() ? kYes : kNo;
  }
  if (weights_cmd->parsed()) {
    ik::Presentation p = load();
    if (weight_letter.size() != 1) {
      throw ik::input_error("--letter takes a single generator");
    }
    auto base = p.alphabet().index(weight_letter[0]);
    if (!base) throw ik::input_error("--letter outside the alphabet");
    ik::ClosureResult c =
        ik::closure(p, ik::parse_word(word_u, p.alphabet()), opt.budget);
    ik::WeightReport rep =
        ik::check_loop_weights(c.automaton, *base, weight_sample);
    std::cout << "status: " << ik::to_string(c.status) << "\ncycles checked: "
              << rep.loops_checked << "\nviolations: "
              << rep.violations.size() << "\n";
    for (const ik::WeightViolation& v : rep.violations) {
      std::cout << "  at vertex " << v.vertex << ": "
                << ik::format_word(v.loop, p.alphabet()) << "\n";
    }
    if (c.status != ik::ClosureStatus::Exact) return kUnknown;
    return rep.violations.empty() ? kYes : kNo;
  }
  if (family_cmd->parsed()) {
    if ((st_t == 0) == ti_list.empty()) {
      std::cerr << "family-replicate needs exactly one of --st or --ti\n";
      return kUsage;
    }
    ik::ReplicationReport rep;
    if (st_t != 0) {
      rep = ik::replicate(ik::StFamily{st_t}, family_max_n, opt.budget);
    } else {
      rep = ik::replicate(ik::TIFamily{parse_uint_list(ti_list)}, opt.budget);
    }
    std::cout << (opt.json ? ik::report_to_json(rep) + "\n"
                           : ik::format_report(rep));
    return rep.all_pass ? kYes : kNo;
  }
  return kUsage;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const ik::input_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kNo;
  }
}
