#pragma once

#include "cesaro/local_rule.hpp"
#include "cesaro/measure.hpp"

namespace cesaro {

// Acyclic automaton over fixed-length words: level j holds the states after
// reading j symbols, rows are dense per-symbol successor ids, -1 is dead.
// After minimization the initial state is node 0 of level 0 and the single
// accepting state is node 0 of the last level.
struct LayeredDfa {
  int n_sym = 0;
  bool empty_language = false;
  std::vector<std::vector<std::vector<int>>> next;  // [level][node][symbol]

  int length() const { return static_cast<int>(next.size()); }
  std::size_t total_states() const;
  // Number of nodes on each level, length()+1 entries.
  std::vector<std::size_t> level_sizes() const;
};

// The single word u.
LayeredDfa word_dfa(const Word& u, int n_sym);

// One-step preimage of d's language: w is accepted iff sliding the rule
// across w produces a word accepted by d.  Input words are 2*radius longer.
// Full-shift rules only.
LayeredDfa lift_preimage(const LayeredDfa& d, const LocalRule& rule,
                         const Caps& caps = default_caps());

// Exact mass of the union of cylinders over the accepted words.
Rational dfa_measure(const LayeredDfa& d, const MarkovMeasure& mu);

// Language enumeration, for oracles and small reports.
std::vector<Word> dfa_words(const LayeredDfa& d);

}  // namespace cesaro
