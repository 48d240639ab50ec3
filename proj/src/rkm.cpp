#include "cesaro/rkm.hpp"

#include <algorithm>
#include <map>

#include "cesaro/errors.hpp"
#include "cesaro/rational.hpp"

namespace cesaro {

namespace {

void check_markers(const MarkovMeasure& mu, const std::vector<Word>& bs) {
  if (bs.empty()) fail(ErrorKind::BadParam, "marker word set is empty");
  const int n_sym = static_cast<int>(mu.alphabet().size());
  for (const Word& b : bs) {
    if (b.empty()) fail(ErrorKind::BadParam, "marker word is empty");
    for (int a : b)
      if (a < 0 || a >= n_sym)
        fail(ErrorKind::BadParam, "marker word leaves the alphabet");
  }
}

bool occurs_in_range(const Word& w, const Word& b, int first, int last) {
  for (int s = first; s <= last; ++s)
    if (std::equal(b.begin(), b.end(), w.begin() + s)) return true;
  return false;
}

// Central-window sequence of the periodic orbit on w, from step 0 up to and
// including the first configuration repeat.
struct WindowTrace {
  std::vector<Word> s;  // steps 0 .. t2-1
  int t1 = 0, t2 = 0;   // configs repeat as step t2 == step t1

  const Word& at(int n) const {
    int i = n < t2 ? n : t1 + (n - t1) % (t2 - t1);
    return s[static_cast<std::size_t>(i)];
  }
};

WindowTrace trace_windows(const LocalRule& rule, const Word& w, int k) {
  if (w.size() % 2 == 0) fail(ErrorKind::BadParam, "window word length must be odd");
  const int c = (static_cast<int>(w.size()) - 1) / 2;
  if (c < k) fail(ErrorKind::BadParam, "word too short for the window half-width");
  constexpr int kBudget = 4096;
  WindowTrace tr;
  std::map<Word, int> seen;
  PeriodicConfig x{w, 0};
  for (int n = 0; n <= kBudget; ++n) {
    auto [it, fresh] = seen.emplace(x.generator, n);
    if (!fresh) {
      tr.t1 = it->second;
      tr.t2 = n;
      return tr;
    }
    tr.s.emplace_back(x.generator.begin() + (c - k), x.generator.begin() + (c + k + 1));
    x = apply_periodic(rule, x);
  }
  fail(ErrorKind::HorizonExceeded, "periodic orbit did not close within 4096 steps");
}

std::pair<int, int> minimize_trace(const WindowTrace& tr) {
  const int big = tr.t2 - tr.t1;
  int period = big;
  for (int p = 1; p <= big; ++p) {
    if (big % p != 0) continue;
    bool ok = true;
    for (int n = tr.t1; n < tr.t2 && ok; ++n) ok = tr.at(n + p) == tr.at(n);
    if (ok) {
      period = p;
      break;
    }
  }
  int t = tr.t1;
  while (t > 0 && tr.at(t - 1) == tr.at(t - 1 + period)) --t;
  return {t, period};
}

// Window words at steps pprime .. pprime+p-1 for every qualifying word,
// shared by the formula evaluation and the support tests.
std::vector<std::vector<Word>> settled_windows(const LocalRule& rule,
                                               const RkmSpec& spec,
                                               unsigned long long p,
                                               unsigned long long pprime) {
  std::vector<std::vector<Word>> out;
  out.reserve(spec.qualifying.size());
  for (const Word& w : spec.qualifying) {
    WindowTrace tr = trace_windows(rule, w, spec.k);
    std::vector<Word> row;
    row.reserve(static_cast<std::size_t>(p));
    for (unsigned long long i = 0; i < p; ++i)
      row.push_back(tr.at(static_cast<int>(pprime + i)));
    out.push_back(std::move(row));
  }
  return out;
}

}  // namespace

RkmSpec build_rkm(const MarkovMeasure& mu, const std::vector<Word>& bs, int k,
                  int m, const Caps& caps) {
  check_markers(mu, bs);
  if (k < 0 || m < 0) fail(ErrorKind::BadParam, "negative window parameters");
  std::size_t longest = 0;
  for (const Word& b : bs) longest = std::max(longest, b.size());
  if (m < static_cast<int>(longest) - 1)
    fail(ErrorKind::FlankTooShort,
         "flank width " + std::to_string(m) + " cannot hold a marker of length " +
             std::to_string(longest));
  const int len = 2 * (k + m) + 1;
  if (static_cast<std::size_t>(len) > caps.rkm_word_len)
    fail(ErrorKind::CapExceeded, "rkm_word_len: need " + std::to_string(len) +
                                     ", cap " + std::to_string(caps.rkm_word_len));
  const int n_sym = static_cast<int>(mu.alphabet().size());
  checked_power(n_sym, len, 100'000'000, "rkm_word_len");

  RkmSpec spec;
  spec.bs = bs;
  spec.k = k;
  spec.m = m;
  spec.mass = 0;
  for (const Word& w : all_words(n_sym, len)) {
    bool left = false, right = false;
    for (const Word& b : bs) {
      const int blen = static_cast<int>(b.size());
      left = left || occurs_in_range(w, b, 0, m - blen + 1);
      right = right || occurs_in_range(w, b, 2 * k + m, len - blen);
    }
    if (!left || !right) continue;
    spec.mass += cylinder_prob(mu, w);
    spec.qualifying.push_back(w);
  }
  return spec;
}

RkmSpec build_rkm(const MarkovMeasure& mu, const Word& b, int k, int m,
                  const Caps& caps) {
  return build_rkm(mu, std::vector<Word>{b}, k, m, caps);
}

std::pair<int, int> local_period(const LocalRule& rule, const Word& w, int k) {
  return minimize_trace(trace_windows(rule, w, k));
}

std::pair<unsigned long long, unsigned long long> pkm(const LocalRule& rule,
                                                      const RkmSpec& spec) {
  if (spec.qualifying.empty())
    fail(ErrorKind::EmptySpec, "no qualifying words at k=" + std::to_string(spec.k) +
                                   " m=" + std::to_string(spec.m));
  unsigned long long p = 1, pprime = 0;
  for (const Word& w : spec.qualifying) {
    auto [pre, per] = local_period(rule, w, spec.k);
    p = lcm_u64(p, static_cast<unsigned long long>(per));
    pprime = std::max(pprime, static_cast<unsigned long long>(pre));
  }
  return {p, pprime};
}

FormulaEvaluation evaluate_formula(const LocalRule& rule, const MarkovMeasure& mu,
                                   const std::vector<Word>& bs, const Word& u,
                                   int k, int m, const Caps& caps) {
  if (!rule.domain().is_full())
    fail(ErrorKind::Unsupported,
         "the limit formula is implemented for full-shift domains");
  if (!(mu.alphabet() == rule.alphabet()))
    fail(ErrorKind::BadParam, "measure and rule alphabets differ");
  if (static_cast<int>(u.size()) != 2 * k + 1)
    fail(ErrorKind::BadParam, "window word length must be 2k+1");

  FormulaEvaluation ev;
  ev.k = k;
  ev.m = m;
  RkmSpec spec = build_rkm(mu, bs, k, m, caps);
  ev.mass = spec.mass;
  ev.wm = 0;
  if (spec.qualifying.empty()) return ev;

  auto [p, pprime] = pkm(rule, spec);
  ev.p = p;
  ev.pprime = pprime;
  for (const Word& w : spec.qualifying)
    ev.local_periods.push_back(local_period(rule, w, k));
  auto windows = settled_windows(rule, spec, p, pprime);
  Rational sum(0);
  for (std::size_t wi = 0; wi < spec.qualifying.size(); ++wi) {
    int hits = 0;
    for (const Word& s : windows[wi])
      if (s == u) ++hits;
    if (hits > 0) sum += hits * cylinder_prob(mu, spec.qualifying[wi]);
  }
  ev.wm = sum / Rational(static_cast<unsigned long>(p));
  ev.qualifying = std::move(spec.qualifying);
  return ev;
}

Rational theorem_formula(const LocalRule& rule, const MarkovMeasure& mu,
                         const std::vector<Word>& bs, const Word& u, int k, int m,
                         const Caps& caps) {
  return evaluate_formula(rule, mu, bs, u, k, m, caps).wm;
}

Rational theorem_formula(const LocalRule& rule, const MarkovMeasure& mu,
                         const Word& b, const Word& u, int k, int m,
                         const Caps& caps) {
  return theorem_formula(rule, mu, std::vector<Word>{b}, u, k, m, caps);
}

SeriesVerdict convergence_diagnostic(const std::vector<Rational>& series,
                                     int window, const Rational& tol) {
  if (window < 1) fail(ErrorKind::BadParam, "window must be positive");
  if (static_cast<int>(series.size()) < 2 * window)
    fail(ErrorKind::BadParam, "series shorter than twice the window");
  const std::size_t len = series.size();
  for (std::size_t i = len - static_cast<std::size_t>(window) - 1; i + 1 < len; ++i) {
    Rational gap = abs(series[i + 1] - series[i]);
    if (gap <= tol) return SeriesVerdict::CauchyLike;
  }
  return SeriesVerdict::Oscillating;
}

MuCReport mu_c_estimate(const LocalRule& rule, const MarkovMeasure& mu,
                        const Word& u, const std::vector<Word>& bs,
                        const std::vector<int>& schedule, int N, const Caps& caps) {
  check_markers(mu, bs);
  if (schedule.empty()) fail(ErrorKind::BadParam, "empty m schedule");
  for (std::size_t i = 1; i < schedule.size(); ++i)
    if (schedule[i] <= schedule[i - 1])
      fail(ErrorKind::BadParam, "m schedule must increase");
  bool positive = false;
  for (const Word& b : bs) positive = positive || cylinder_prob(mu, b) > 0;
  if (!positive)
    fail(ErrorKind::HypothesisNotMet, "every marker word has measure zero");

  MuCReport report;
  report.u = u;
  report.k = (static_cast<int>(u.size()) - 1) / 2;
  report.bs = bs;
  report.schedule = schedule;
  for (int m : schedule) {
    FormulaEvaluation ev = evaluate_formula(rule, mu, bs, u, report.k, m, caps);
    report.wm.push_back(ev.wm);
    report.slack.push_back(Rational(1) - ev.mass);
    report.p = ev.p;
    report.pprime = ev.pprime;
  }
  report.cesaro = cesaro_mean(rule, mu, u, N, caps);
  report.gap = abs(report.wm.back() - report.cesaro.values.back());
  report.slack_last = report.slack.back();
  return report;
}

MuCReport mu_c_estimate(const LocalRule& rule, const MarkovMeasure& mu,
                        const Word& u, const EquicontinuityVerdict& verdict,
                        const std::vector<int>& schedule, int N, const Caps& caps) {
  if (verdict.cls != EquicontinuityVerdict::Class::E1)
    fail(ErrorKind::NotE1,
         "the rule was not fully certified at any tested odd length");
  std::vector<Word> bs;
  for (const auto& cert : verdict.evidence) bs.push_back(cert.b);
  return mu_c_estimate(rule, mu, u, bs, schedule, N, caps);
}

EquiMeasureEvidence is_equicontinuous_measure(const LocalRule& rule,
                                              const MarkovMeasure& mu, int max_len,
                                              const CertifySearchOptions& opts,
                                              const Caps& caps) {
  if (max_len < 1) fail(ErrorKind::BadParam, "max_len must be positive");
  if (!(mu.alphabet() == rule.alphabet()))
    fail(ErrorKind::BadParam, "measure and rule alphabets differ");
  EquiMeasureEvidence ev;
  ev.mass = 0;
  ev.max_len_tested = max_len;
  for (int len = 1; len <= max_len; ++len) {
    for (const Word& b : language_words(rule.domain(), len)) {
      Rational mass = cylinder_prob(mu, b);
      if (mass == 0) continue;
      if (auto cert = find_certificate(rule, b, opts, caps)) {
        ev.found = true;
        ev.cert = std::move(cert);
        ev.mass = mass;
        return ev;
      }
    }
  }
  return ev;
}

SupportReport support_tests(const LocalRule& rule, const MarkovMeasure& mu,
                            const Word& b, int depth, const Caps& caps) {
  if (depth < 1) fail(ErrorKind::BadParam, "depth must be positive");
  SupportReport report;
  report.b = b;
  report.cert = find_certificate(rule, b, {}, caps);
  if (!report.cert)
    fail(ErrorKind::HypothesisNotMet, "marker word earned no certificate");
  report.b_mass = cylinder_prob(mu, b);
  if (report.b_mass == 0)
    fail(ErrorKind::HypothesisNotMet, "certified marker word has measure zero");

  const int n_sym = static_cast<int>(mu.alphabet().size());
  const int blen = static_cast<int>(b.size());
  const int m_min = std::max(blen - 1, 1);
  for (int len = 1; len <= depth; ++len) {
    const int k = len / 2;  // len odd: window is y; even: extend by one symbol
    std::vector<Word> targets_suffix =
        len % 2 == 1 ? std::vector<Word>{Word{}} : all_words(n_sym, 1);
    const int m_max = (caps.rkm_word_len - 1) / 2 - k;
    for (const Word& y : all_words(n_sym, len)) {
      SupportReport::Row row;
      row.y = y;
      row.mass = cylinder_prob(mu, y);
      row.witness = 0;
      row.in_support = row.mass > 0;
      if (row.in_support) {
        for (int m = m_min; m <= m_max && !row.witnessed; ++m) {
          RkmSpec spec = build_rkm(mu, b, k, m, caps);
          if (spec.qualifying.empty()) continue;
          auto [p, pprime] = pkm(rule, spec);
          auto windows = settled_windows(rule, spec, p, pprime);
          Rational sum(0);
          for (std::size_t wi = 0; wi < spec.qualifying.size(); ++wi) {
            int hits = 0;
            for (const Word& s : windows[wi])
              for (const Word& suffix : targets_suffix) {
                Word target = y;
                target.insert(target.end(), suffix.begin(), suffix.end());
                if (s == target) ++hits;
              }
            if (hits > 0) sum += hits * cylinder_prob(mu, spec.qualifying[wi]);
          }
          if (sum > 0) {
            row.witnessed = true;
            row.witness = sum / Rational(static_cast<unsigned long>(p));
            row.m_used = m;
          }
        }
      }
      report.rows.push_back(std::move(row));
    }
  }

  // Marker independence: replay the image-membership test with a second
  // certified word and compare step by step.
  std::optional<Word> second;
  for (int len = 1; len <= std::max(blen, 2) && !second; ++len) {
    for (const Word& cand : language_words(rule.domain(), len)) {
      if (cand == b) continue;
      if (find_certificate(rule, cand, {}, caps)) {
        second = cand;
        break;
      }
    }
  }
  if (second) {
    SupportReport::MarkerExchange ex;
    ex.b2 = *second;
    ex.k = 0;
    ex.m = std::max({blen - 1, static_cast<int>(second->size()) - 1, 1}) + 1;
    ex.horizon = ex.m / std::max(rule.radius(), 1);
    ex.windows = all_words(n_sym, 1);
    auto membership = [&](const Word& marker) {
      RkmSpec spec = build_rkm(mu, marker, 0, ex.m, caps);
      std::vector<std::vector<char>> member(
          ex.windows.size(),
          std::vector<char>(static_cast<std::size_t>(ex.horizon) + 1, 0));
      for (const Word& w : spec.qualifying) {
        WindowTrace tr = trace_windows(rule, w, 0);
        for (int i = 0; i <= ex.horizon; ++i) {
          const Word& s = tr.at(i);
          for (std::size_t yi = 0; yi < ex.windows.size(); ++yi)
            if (s == ex.windows[yi]) member[yi][static_cast<std::size_t>(i)] = 1;
        }
      }
      return member;
    };
    ex.member1 = membership(b);
    ex.member2 = membership(*second);
    ex.agree = ex.member1 == ex.member2;
    report.exchange = std::move(ex);
  }
  return report;
}

}  // namespace cesaro
