#include "cesaro/pushforward.hpp"

#include "cesaro/errors.hpp"
#include "cesaro/preimage_dfa.hpp"

namespace cesaro {

namespace {

void check_pair(const LocalRule& rule, const MarkovMeasure& mu) {
  if (!rule.domain().is_full())
    fail(ErrorKind::Unsupported,
         "measure pushforward is implemented for full-shift domains");
  if (!(mu.alphabet() == rule.alphabet()))
    fail(ErrorKind::BadParam, "measure and rule alphabets differ");
}

}  // namespace

Rational pushforward_cylinder(const LocalRule& rule, const MarkovMeasure& mu,
                              const Word& u, int n, const Caps& caps) {
  check_pair(rule, mu);
  if (n < 0) fail(ErrorKind::BadParam, "negative step count");
  LayeredDfa d = word_dfa(u, static_cast<int>(rule.alphabet().size()));
  for (int i = 0; i < n; ++i) d = lift_preimage(d, rule, caps);
  return dfa_measure(d, mu);
}

PushforwardSnapshot pushforward_snapshot(const LocalRule& rule,
                                         const MarkovMeasure& mu, int n, int depth,
                                         const Caps& caps) {
  check_pair(rule, mu);
  if (depth < 1) fail(ErrorKind::BadParam, "depth must be positive");
  PushforwardSnapshot snap;
  snap.n = n;
  snap.depth = depth;
  for (const Word& u : all_words(static_cast<int>(rule.alphabet().size()), depth))
    snap.table.emplace_back(u, pushforward_cylinder(rule, mu, u, n, caps));
  return snap;
}

CesaroSeries cesaro_mean(const LocalRule& rule, const MarkovMeasure& mu,
                         const Word& u, int N, const Caps& caps) {
  check_pair(rule, mu);
  if (N < 1) fail(ErrorKind::BadParam, "Cesàro order must be positive");
  CesaroSeries series;
  series.u = u;
  series.raw.reserve(static_cast<std::size_t>(N));
  series.values.reserve(static_cast<std::size_t>(N));
  LayeredDfa d = word_dfa(u, static_cast<int>(rule.alphabet().size()));
  Rational sum(0);
  for (int n = 1; n <= N; ++n) {
    series.raw.push_back(dfa_measure(d, mu));
    sum += series.raw.back();
    series.values.push_back(sum / n);
    if (n < N) d = lift_preimage(d, rule, caps);
  }
  return series;
}

Rational equicontinuous_cesaro_limit(const LocalRule& rule, const MarkovMeasure& mu,
                                     unsigned long long p, unsigned long long pprime,
                                     const Word& u, const Caps& caps) {
  check_pair(rule, mu);
  if (p < 1) fail(ErrorKind::BadParam, "period must be positive");
  LayeredDfa d = word_dfa(u, static_cast<int>(rule.alphabet().size()));
  for (unsigned long long i = 0; i < pprime; ++i) d = lift_preimage(d, rule, caps);
  Rational sum(0);
  for (unsigned long long i = 0; i < p; ++i) {
    sum += dfa_measure(d, mu);
    if (i + 1 < p) d = lift_preimage(d, rule, caps);
  }
  return sum / Rational(static_cast<unsigned long>(p));
}

Rational equicontinuous_cesaro_limit(const LocalRule& rule, const MarkovMeasure& mu,
                                     const EquicontinuityVerdict& verdict,
                                     const Word& u, const Caps& caps) {
  if (verdict.cls != EquicontinuityVerdict::Class::E1)
    fail(ErrorKind::NotE1,
         "the rule was not fully certified at any tested odd length");
  return equicontinuous_cesaro_limit(rule, mu, verdict.period, verdict.preperiod, u,
                                     caps);
}

}  // namespace cesaro
