#ifndef IK_TESTS_HELPERS_HPP
#define IK_TESTS_HELPERS_HPP

#include <random>
#include <string>

#include "ik/words.hpp"

namespace ik::test {

/// Uniform random word of exactly the given length over the doubled
/// alphabet. Deterministic for a given engine state.
inline Word random_word(std::mt19937& rng, const Alphabet& alphabet,
                        size_t length) {
  std::uniform_int_distribution<uint32_t> pick(0,
                                               alphabet.letter_codes() - 1);
  Word w;
  w.reserve(length);
  for (size_t i = 0; i < length; ++i) {
    w.push_back(Letter::from_code(pick(rng)));
  }
  return w;
}

/// Random word with length drawn from [0, max_length].
inline Word random_word_upto(std::mt19937& rng, const Alphabet& alphabet,
                             size_t max_length) {
  std::uniform_int_distribution<size_t> len(0, max_length);
  return random_word(rng, alphabet, len(rng));
}

}  // namespace ik::test

#endif  // IK_TESTS_HELPERS_HPP
