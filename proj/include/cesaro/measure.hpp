#pragma once

#include "cesaro/alphabet.hpp"
#include "cesaro/rational.hpp"

namespace cesaro {

// A shift-invariant Bernoulli or stationary Markov measure on the full shift
// over its alphabet, held entirely in exact rationals.  Subshift supports are
// a documented extension point, not implemented: every consumer below works
// on full-shift cylinders.
class MarkovMeasure {
 public:
  enum class Kind { Bernoulli, Markov };

  static MarkovMeasure bernoulli(const Alphabet& alphabet,
                                 std::vector<Rational> probs);
  // Stationary vector solved exactly from the transition matrix; the chain
  // must be irreducible so the solution is unique.
  static MarkovMeasure markov(const Alphabet& alphabet,
                              std::vector<std::vector<Rational>> transition);

  Kind kind() const { return kind_; }
  const Alphabet& alphabet() const { return alphabet_; }
  const std::vector<Rational>& stationary() const { return stationary_; }
  const std::vector<std::vector<Rational>>& transition() const { return transition_; }

  // P(x_0 = a) and P(x_{i+1} = b | x_i = a); Bernoulli is the product chain.
  const Rational& symbol_prob(int a) const { return stationary_[a]; }
  const Rational& step_prob(int a, int b) const { return transition_[a][b]; }

  bool full_support() const;

 private:
  MarkovMeasure() = default;
  Kind kind_ = Kind::Bernoulli;
  Alphabet alphabet_;
  std::vector<Rational> stationary_;
  std::vector<std::vector<Rational>> transition_;
};

// Exact measure of the cylinder [u] (position-free by shift invariance);
// the empty word has measure 1.
Rational cylinder_prob(const MarkovMeasure& mu, const Word& u);

}  // namespace cesaro
