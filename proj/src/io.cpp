#include "ik/io.hpp"

#include <sstream>

#include "json.hpp"

#include "ik/fold.hpp"

namespace ik {

using nlohmann::json;

std::string to_json(const FoldedAutomaton& a) {
  json doc;
  doc["alphabet"] = json::array();
  for (uint32_t i = 0; i < a.alphabet().size(); ++i) {
    doc["alphabet"].push_back(std::string(1, a.alphabet().name(i)));
  }
  doc["vertices"] = a.vertex_count();
  doc["initial"] = a.initial();
  doc["terminal"] = a.terminal();
  doc["edges"] = json::array();
  for (const Edge& e : a.positive_edges()) {
    doc["edges"].push_back(
        {e.from, std::string(1, a.alphabet().name(e.letter)), e.to});
  }
  return doc.dump(2);
}

FoldedAutomaton automaton_from_json(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw input_error(std::string("bad automaton JSON: ") + e.what());
  }
  try {
    std::string names;
    for (const auto& entry : doc.at("alphabet")) {
      std::string s = entry.get<std::string>();
      if (s.size() != 1) {
        throw input_error("alphabet entries must be single characters");
      }
      names += s;
    }
    Alphabet alphabet(names);
    uint32_t vertices = doc.at("vertices").get<uint32_t>();
    uint32_t initial = doc.at("initial").get<uint32_t>();
    uint32_t terminal = doc.at("terminal").get<uint32_t>();
    if (vertices == 0) throw input_error("automaton needs a vertex");
    if (initial >= vertices || terminal >= vertices) {
      throw input_error("root vertex out of range");
    }

    const uint32_t stride = alphabet.letter_codes();
    std::vector<uint32_t> trans(static_cast<size_t>(vertices) * stride,
                                kNoVertex);
    auto set = [&](uint32_t v, uint32_t code, uint32_t q) {
      uint32_t& slot = trans[static_cast<size_t>(v) * stride + code];
      if (slot != kNoVertex && slot != q) {
        throw input_error("automaton JSON is not folded");
      }
      slot = q;
    };
    for (const auto& entry : doc.at("edges")) {
      if (!entry.is_array() || entry.size() != 3) {
        throw input_error("each edge must be [from, letter, to]");
      }
      uint32_t from = entry[0].get<uint32_t>();
      uint32_t to = entry[2].get<uint32_t>();
      std::string letter = entry[1].get<std::string>();
      if (letter.size() != 1) {
        throw input_error("edge letters must be single characters");
      }
      auto base = alphabet.index(letter[0]);
      if (!base) throw input_error("edge letter outside the alphabet");
      if (from >= vertices || to >= vertices) {
        throw input_error("edge endpoint out of range");
      }
      set(from, 2 * *base, to);
      set(to, 2 * *base + 1, from);
    }
    try {
      return FoldedAutomaton(std::move(alphabet), vertices, initial,
                             terminal, std::move(trans));
    } catch (const std::logic_error& e) {
      throw input_error(std::string("bad automaton JSON: ") + e.what());
    }
  } catch (const json::exception& e) {
    throw input_error(std::string("bad automaton JSON: ") + e.what());
  }
}

std::string to_dot(const FoldedAutomaton& a) {
  std::ostringstream out;
  out << "digraph inverse_automaton {\n";
  out << "  rankdir=LR;\n";
  out << "  __start [shape=point, label=\"\"];\n";
  for (uint32_t v = 0; v < a.vertex_count(); ++v) {
    out << "  v" << v << " [shape="
        << (v == a.terminal() ? "doublecircle" : "circle") << ", label=\""
        << v << "\"];\n";
  }
  out << "  __start -> v" << a.initial() << ";\n";
  for (const Edge& e : a.positive_edges()) {
    out << "  v" << e.from << " -> v" << e.to << " [label=\""
        << a.alphabet().name(e.letter) << "\"];\n";
  }
  out << "}\n";
  return out.str();
}

}  // namespace ik
