#include "ik/presentation.hpp"

#include <fstream>
#include <sstream>

namespace ik {

namespace {

std::string strip_comment(const std::string& line) {
  size_t pos = line.find('#');
  return pos == std::string::npos ? line : line.substr(0, pos);
}

std::vector<std::string> tokens(const std::string& text) {
  std::vector<std::string> out;
  std::istringstream in(text);
  std::string tok;
  while (in >> tok) out.push_back(tok);
  return out;
}

Word parse_side(const std::vector<std::string>& toks, size_t begin,
                size_t end, const Alphabet& alphabet, size_t line_no) {
  Word w;
  for (size_t i = begin; i < end; ++i) {
    const std::string& tok = toks[i];
    if (tok == "1") continue;  // explicit identity
    Word piece = [&] {
      try {
        return parse_word(tok, alphabet);
      } catch (const input_error& e) {
        throw input_error("line " + std::to_string(line_no) + ": " +
                          e.what());
      }
    }();
    w.insert(w.end(), piece.begin(), piece.end());
  }
  return w;
}

}  // namespace

Presentation::Presentation(Alphabet alphabet, std::vector<Relation> relations)
    : alphabet_(std::move(alphabet)), relations_(std::move(relations)) {
  for (const Relation& rel : relations_) {
    for (const Word* side : {&rel.lhs, &rel.rhs}) {
      for (Letter x : *side) {
        if (!alphabet_.contains(x)) {
          throw input_error("relation letter outside the alphabet");
        }
      }
    }
  }
}

Presentation parse_presentation(std::istream& in) {
  std::string line;
  size_t line_no = 0;
  bool have_letters = false;
  Alphabet alphabet;
  std::vector<Relation> relations;

  while (std::getline(in, line)) {
    ++line_no;
    std::string body = strip_comment(line);
    auto toks = tokens(body);
    if (toks.empty()) continue;

    if (toks[0] == "letters:") {
      if (have_letters) {
        throw input_error("line " + std::to_string(line_no) +
                          ": repeated letters: directive");
      }
      std::string names;
      for (size_t i = 1; i < toks.size(); ++i) {
        if (toks[i].size() != 1) {
          throw input_error("line " + std::to_string(line_no) +
                            ": letters must be single characters");
        }
        names += toks[i];
      }
      alphabet = Alphabet(names);
      have_letters = true;
    } else if (toks[0] == "rel:") {
      if (!have_letters) {
        throw input_error("line " + std::to_string(line_no) +
                          ": rel: before letters:");
      }
      size_t eq = 0;
      size_t eq_count = 0;
      for (size_t i = 1; i < toks.size(); ++i) {
        if (toks[i] == "=") {
          eq = i;
          ++eq_count;
        }
      }
      if (eq_count != 1) {
        throw input_error("line " + std::to_string(line_no) +
                          ": a relation needs exactly one =");
      }
      relations.push_back(
          Relation{parse_side(toks, 1, eq, alphabet, line_no),
                   parse_side(toks, eq + 1, toks.size(), alphabet, line_no)});
    } else {
      throw input_error("line " + std::to_string(line_no) +
                        ": unknown directive '" + toks[0] + "'");
    }
  }

  if (!have_letters) {
    throw input_error("presentation has no letters: directive");
  }
  return Presentation(std::move(alphabet), std::move(relations));
}

Presentation parse_presentation(const std::string& text) {
  std::istringstream in(text);
  return parse_presentation(in);
}

Presentation load_presentation_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    throw input_error("cannot open presentation file: " + path);
  }
  return parse_presentation(in);
}

std::string format_presentation(const Presentation& p) {
  std::ostringstream out;
  out << "letters:";
  for (uint32_t i = 0; i < p.alphabet().size(); ++i) {
    out << ' ' << p.alphabet().name(i);
  }
  out << '\n';
  for (const Relation& rel : p.relations()) {
    out << "rel:";
    auto side = [&](const Word& w) {
      if (w.empty()) {
        out << " 1";
        return;
      }
      for (Letter x : w) out << ' ' << p.alphabet().display(x);
    };
    side(rel.lhs);
    out << " =";
    side(rel.rhs);
    out << '\n';
  }
  return out.str();
}

}  // namespace ik
