#pragma once

#include "cesaro/blocking.hpp"
#include "cesaro/measure.hpp"

namespace cesaro {

// Exact mass the n-step image measure gives the cylinder [u] at the origin:
// the total measure of all length |u|+2rn words that evolve onto u.
Rational pushforward_cylinder(const LocalRule& rule, const MarkovMeasure& mu,
                              const Word& u, int n,
                              const Caps& caps = default_caps());

// The image measure at one step, tabulated over every word of one depth.
struct PushforwardSnapshot {
  int n = 0;
  int depth = 0;
  std::vector<std::pair<Word, Rational>> table;  // lex order, sums to 1
};

PushforwardSnapshot pushforward_snapshot(const LocalRule& rule,
                                         const MarkovMeasure& mu, int n, int depth,
                                         const Caps& caps = default_caps());

// values[n-1] averages the first n image masses, exactly; raw[i] is the
// i-step image mass itself, i = 0..N-1.
struct CesaroSeries {
  Word u;
  std::vector<Rational> values;
  std::vector<Rational> raw;
};

CesaroSeries cesaro_mean(const LocalRule& rule, const MarkovMeasure& mu,
                         const Word& u, int N, const Caps& caps = default_caps());

// The exact limit of the Cesàro averages once every column of the rule is
// eventually periodic with global preperiod pprime and period p: the plain
// average of the image masses at steps pprime .. pprime+p-1.
Rational equicontinuous_cesaro_limit(const LocalRule& rule, const MarkovMeasure& mu,
                                     unsigned long long p, unsigned long long pprime,
                                     const Word& u, const Caps& caps = default_caps());

// Same, taking the global data from a classification; NotE1 when the verdict
// does not carry one.
Rational equicontinuous_cesaro_limit(const LocalRule& rule, const MarkovMeasure& mu,
                                     const EquicontinuityVerdict& verdict,
                                     const Word& u, const Caps& caps = default_caps());

}  // namespace cesaro
