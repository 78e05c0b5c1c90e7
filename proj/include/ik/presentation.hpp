#ifndef IK_PRESENTATION_HPP
#define IK_PRESENTATION_HPP

#include <iosfwd>
#include <string>
#include <vector>

#include "ik/words.hpp"

namespace ik {

/// One defining relation lhs = rhs; either side may be empty (the identity).
struct Relation {
  Word lhs;
  Word rhs;
};

/// An inverse monoid presentation: generators plus relations. Immutable
/// after construction; all relation letters are checked against the
/// alphabet.
class Presentation {
 public:
  Presentation(Alphabet alphabet, std::vector<Relation> relations);

  const Alphabet& alphabet() const { return alphabet_; }
  const std::vector<Relation>& relations() const { return relations_; }

 private:
  Alphabet alphabet_;
  std::vector<Relation> relations_;
};

/// Text format, one directive per line:
///
///   # comment (also allowed after a directive)
///   letters: a b c
///   rel: c a = a
///   rel: c B B C b b = c B B b b C
///
/// Uppercase letters are inverses. An empty relation side is written as
/// nothing or as the token 1.
Presentation parse_presentation(std::istream& in);
Presentation parse_presentation(const std::string& text);
Presentation load_presentation_file(const std::string& path);

std::string format_presentation(const Presentation& p);

}  // namespace ik

#endif  // IK_PRESENTATION_HPP
