#ifndef IK_WORDS_HPP
#define IK_WORDS_HPP

#include <compare>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace ik {

/// Raised when user-supplied input (words, presentation files, flags) is
/// malformed. Internal invariant violations use assertions instead.
class input_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A letter of the doubled alphabet: a generator index plus a sign.
/// Encoded as 2*base for a generator and 2*base+1 for its formal inverse,
/// so inversion is a single bit flip and letters index transition tables
/// directly.
class Letter {
 public:
  constexpr Letter() = default;

  static constexpr Letter generator(uint32_t base) {
    return Letter(base << 1);
  }
  static constexpr Letter inverse_of(uint32_t base) {
    return Letter(base << 1 | 1);
  }
  static constexpr Letter from_code(uint32_t code) { return Letter(code); }

  constexpr uint32_t base() const { return code_ >> 1; }
  constexpr bool is_positive() const { return (code_ & 1) == 0; }
  constexpr Letter inverse() const { return Letter(code_ ^ 1); }
  constexpr uint32_t code() const { return code_; }

  friend constexpr bool operator==(Letter, Letter) = default;
  friend constexpr auto operator<=>(Letter, Letter) = default;

 private:
  explicit constexpr Letter(uint32_t code) : code_(code) {}
  uint32_t code_ = 0;
};

/// A word over the doubled alphabet. The empty word is the identity.
using Word = std::vector<Letter>;

/// Ordered generator names. Names are single lowercase characters so that
/// 'x' parses as a generator and 'X' as its formal inverse.
class Alphabet {
 public:
  Alphabet() = default;
  explicit Alphabet(std::string names);

  size_t size() const { return names_.size(); }
  /// Number of letter codes (both signs): 2 * size().
  uint32_t letter_codes() const {
    return static_cast<uint32_t>(2 * names_.size());
  }
  char name(uint32_t base) const { return names_.at(base); }
  std::optional<uint32_t> index(char name) const;
  bool contains(Letter x) const { return x.base() < names_.size(); }

  std::string display(Letter x) const;

  friend bool operator==(const Alphabet&, const Alphabet&) = default;

 private:
  std::string names_;
};

/// Parses "abA" as a, b, a^-1. Throws input_error on characters outside the
/// alphabet. The empty string is the empty word.
Word parse_word(const std::string& text, const Alphabet& alphabet);
std::string format_word(const Word& w, const Alphabet& alphabet);

/// (uv)^-1 = v^-1 u^-1; an involution on words.
Word inverse(const Word& w);

/// Erases factors x x^-1 until none remain. The result is independent of the
/// erasure order.
Word freely_reduced(const Word& w);

/// True iff w freely reduces to the empty word, i.e. w represents an
/// idempotent of the free inverse monoid.
bool is_dyck(const Word& w);

Word concat(const Word& u, const Word& v);

/// (occurrences of the generator) - (occurrences of its inverse).
int64_t letter_weight(const Word& w, uint32_t base);

}  // namespace ik

#endif  // IK_WORDS_HPP
