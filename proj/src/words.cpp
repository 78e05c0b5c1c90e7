#include "ik/words.hpp"

#include <cctype>

namespace ik {

Alphabet::Alphabet(std::string names) : names_(std::move(names)) {
  for (size_t i = 0; i < names_.size(); ++i) {
    unsigned char c = static_cast<unsigned char>(names_[i]);
    if (!std::islower(c)) {
      throw input_error("alphabet letters must be lowercase characters");
    }
    for (size_t j = 0; j < i; ++j) {
      if (names_[j] == names_[i]) {
        throw input_error(std::string("duplicate alphabet letter '") +
                          names_[i] + "'");
      }
    }
  }
}

std::optional<uint32_t> Alphabet::index(char name) const {
  for (size_t i = 0; i < names_.size(); ++i) {
    if (names_[i] == name) return static_cast<uint32_t>(i);
  }
  return std::nullopt;
}

std::string Alphabet::display(Letter x) const {
  char c = name(x.base());
  if (!x.is_positive()) c = static_cast<char>(std::toupper(c));
  return std::string(1, c);
}

Word parse_word(const std::string& text, const Alphabet& alphabet) {
  Word w;
  w.reserve(text.size());
  for (char ch : text) {
    unsigned char c = static_cast<unsigned char>(ch);
    if (std::isspace(c)) continue;
    char lower = static_cast<char>(std::tolower(c));
    auto base = alphabet.index(lower);
    if (!base) {
      throw input_error(std::string("letter '") + ch +
                        "' is not in the alphabet");
    }
    w.push_back(std::isupper(c) ? Letter::inverse_of(*base)
                                : Letter::generator(*base));
  }
  return w;
}

std::string format_word(const Word& w, const Alphabet& alphabet) {
  if (w.empty()) return "1";
  std::string out;
  out.reserve(w.size());
  for (Letter x : w) out += alphabet.display(x);
  return out;
}

Word inverse(const Word& w) {
  Word out;
  out.reserve(w.size());
  for (auto it = w.rbegin(); it != w.rend(); ++it) {
    out.push_back(it->inverse());
  }
  return out;
}

Word freely_reduced(const Word& w) {
  Word stack;
  stack.reserve(w.size());
  for (Letter x : w) {
    if (!stack.empty() && stack.back() == x.inverse()) {
      stack.pop_back();
    } else {
      stack.push_back(x);
    }
  }
  return stack;
}

bool is_dyck(const Word& w) { return freely_reduced(w).empty(); }

Word concat(const Word& u, const Word& v) {
  Word out;
  out.reserve(u.size() + v.size());
  out.insert(out.end(), u.begin(), u.end());
  out.insert(out.end(), v.begin(), v.end());
  return out;
}

int64_t letter_weight(const Word& w, uint32_t base) {
  int64_t total = 0;
  for (Letter x : w) {
    if (x.base() == base) total += x.is_positive() ? 1 : -1;
  }
  return total;
}

}  // namespace ik
