#pragma once

// Shared fixtures: the small zoo of rules the tests keep coming back to.

#include <span>

#include "cesaro/local_rule.hpp"
#include "cesaro/measure.hpp"

namespace testing_helpers {

using namespace cesaro;

inline Alphabet binary() { return Alphabet({"0", "1"}); }
inline Alphabet ternary() { return Alphabet({"0", "1", "2"}); }

// The running three-symbol example: 2s are walls, everything else is
// xor-with-right-neighbor frozen against the next wall.
//   f(a,2,c) = 2;  f(a,b,2) = b;  f(a,b,c) = b+c mod 2 otherwise.
inline LocalRule wall_xor_rule() {
  return make_rule(full_shift(ternary()), 1, [](std::span<const int> w) {
    if (w[1] == 2) return 2;
    if (w[2] == 2) return w[1];
    return (w[1] + w[2]) % 2;
  });
}

inline LocalRule xor_right_rule() {
  return make_rule(full_shift(binary()), 1,
                   [](std::span<const int> w) { return (w[1] + w[2]) % 2; });
}

inline LocalRule left_shift_rule() {
  return make_rule(full_shift(binary()), 1,
                   [](std::span<const int> w) { return w[2]; });
}

inline LocalRule negation_rule() {
  return make_rule(full_shift(binary()), 0,
                   [](std::span<const int> w) { return 1 - w[0]; });
}

inline LocalRule identity_rule(const Alphabet& a) {
  return make_rule(full_shift(a), 0, [](std::span<const int> w) { return w[0]; });
}

inline LocalRule constant_zero_rule() {
  return make_rule(full_shift(binary()), 1, [](std::span<const int>) { return 0; });
}

// Elementary rule by Wolfram number over {0,1}, radius 1.
inline LocalRule elementary_rule(int number) {
  return make_rule(full_shift(binary()), 1, [number](std::span<const int> w) {
    int idx = w[0] * 4 + w[1] * 2 + w[2];
    return (number >> idx) & 1;
  });
}

inline MarkovMeasure bernoulli(const Alphabet& a, const std::vector<std::string>& probs) {
  std::vector<Rational> p;
  for (const auto& s : probs) p.push_back(parse_rational(s));
  return MarkovMeasure::bernoulli(a, p);
}

}  // namespace testing_helpers
