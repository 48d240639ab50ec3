#pragma once

#include "cesaro/pushforward.hpp"

namespace cesaro {

// Words of length 2(k+m)+1, centered at 0, carrying an occurrence of some
// marker word entirely inside coordinates [-m-k, -k] and one entirely inside
// [k, m+k].  The markers shield the central (2k+1)-window from everything
// outside the word.
struct RkmSpec {
  std::vector<Word> bs;  // marker words
  int k = 0;
  int m = 0;
  std::vector<Word> qualifying;  // lex order
  Rational mass;                 // total measure of the qualifying cylinders
};

RkmSpec build_rkm(const MarkovMeasure& mu, const std::vector<Word>& bs, int k,
                  int m, const Caps& caps = default_caps());
RkmSpec build_rkm(const MarkovMeasure& mu, const Word& b, int k, int m,
                  const Caps& caps = default_caps());

// Exact (preperiod, period) of the central (2k+1)-window sequence along the
// orbit of the periodic point on W, counted from step 0.
std::pair<int, int> local_period(const LocalRule& rule, const Word& w, int k);

// Folds local periods over a spec: lcm of periods, max of preperiods.
std::pair<unsigned long long, unsigned long long> pkm(const LocalRule& rule,
                                                      const RkmSpec& spec);

// One evaluation of the limit formula at fixed m: the average over one full
// period (offset by the global preperiod) of the mass of qualifying words
// whose determined central window equals u.
struct FormulaEvaluation {
  int k = 0;
  int m = 0;
  std::vector<Word> qualifying;
  std::vector<std::pair<int, int>> local_periods;  // aligned with qualifying
  unsigned long long p = 1;
  unsigned long long pprime = 0;
  Rational wm;
  Rational mass;
};

FormulaEvaluation evaluate_formula(const LocalRule& rule, const MarkovMeasure& mu,
                                   const std::vector<Word>& bs, const Word& u,
                                   int k, int m, const Caps& caps = default_caps());

Rational theorem_formula(const LocalRule& rule, const MarkovMeasure& mu,
                         const std::vector<Word>& bs, const Word& u, int k, int m,
                         const Caps& caps = default_caps());
Rational theorem_formula(const LocalRule& rule, const MarkovMeasure& mu,
                         const Word& b, const Word& u, int k, int m,
                         const Caps& caps = default_caps());

enum class SeriesVerdict { Oscillating, CauchyLike };

// Finite-horizon heuristic: oscillating when every consecutive gap over the
// last `window` steps exceeds tol, exact comparisons throughout.
SeriesVerdict convergence_diagnostic(const std::vector<Rational>& series,
                                     int window, const Rational& tol);

// Estimate of the limiting cylinder mass from both ends: the formula values
// along an m schedule against the direct Cesàro series, with the certified
// truncation slack 1 - mass(R(k,m)).
struct MuCReport {
  Word u;
  int k = 0;
  std::vector<Word> bs;
  std::vector<int> schedule;
  std::vector<Rational> wm;
  std::vector<Rational> slack;
  unsigned long long p = 1;        // from the last schedule entry
  unsigned long long pprime = 0;
  CesaroSeries cesaro;
  Rational gap;        // |wm.back() - cesaro.values.back()|
  Rational slack_last;
};

MuCReport mu_c_estimate(const LocalRule& rule, const MarkovMeasure& mu,
                        const Word& u, const std::vector<Word>& bs,
                        const std::vector<int>& schedule, int N,
                        const Caps& caps = default_caps());
// Marker set taken from a fully-certified classification; NotE1 otherwise.
MuCReport mu_c_estimate(const LocalRule& rule, const MarkovMeasure& mu,
                        const Word& u, const EquicontinuityVerdict& verdict,
                        const std::vector<int>& schedule, int N,
                        const Caps& caps = default_caps());

// Searches for a certified blocking word with positive mass, the hypothesis
// the whole limit theory needs.
struct EquiMeasureEvidence {
  bool found = false;
  std::optional<BlockingCertificate> cert;  // the positive-mass certificate
  Rational mass;
  int max_len_tested = 0;
};

EquiMeasureEvidence is_equicontinuous_measure(
    const LocalRule& rule, const MarkovMeasure& mu, int max_len,
    const CertifySearchOptions& opts = {}, const Caps& caps = default_caps());

// Finite support evidence: every positive-mass word up to the depth should
// collect a positive formula witness, and membership of the limit support in
// the window evolutions should not depend on which marker set is used.
struct SupportReport {
  Word b;
  Rational b_mass;
  std::optional<BlockingCertificate> cert;
  struct Row {
    Word y;
    Rational mass;
    bool in_support = false;  // mass > 0
    bool witnessed = false;
    Rational witness;
    int m_used = 0;
  };
  std::vector<Row> rows;
  struct MarkerExchange {
    Word b2;
    int k = 0;
    int m = 0;
    int horizon = 0;
    std::vector<Word> windows;
    std::vector<std::vector<char>> member1;  // [window][step]
    std::vector<std::vector<char>> member2;
    bool agree = false;
  };
  std::optional<MarkerExchange> exchange;
};

SupportReport support_tests(const LocalRule& rule, const MarkovMeasure& mu,
                            const Word& b, int depth,
                            const Caps& caps = default_caps());

}  // namespace cesaro
