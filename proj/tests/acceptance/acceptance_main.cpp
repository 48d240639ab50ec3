// Acceptance gate: one line per criterion, exact checks at desk scale.
// Exit code 0 only when every criterion passes inside its time budget.

#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "cesaro/blocking.hpp"
#include "cesaro/errors.hpp"
#include "cesaro/periodic.hpp"
#include "cesaro/pushforward.hpp"
#include "cesaro/rkm.hpp"
#include "cesaro/surjectivity.hpp"

using namespace cesaro;

namespace {

Alphabet binary() { return Alphabet({"0", "1"}); }
Alphabet ternary() { return Alphabet({"0", "1", "2"}); }

LocalRule wall_rule() {
  return make_rule(full_shift(ternary()), 1, [](std::span<const int> w) {
    if (w[1] == 2) return 2;
    if (w[2] == 2) return w[1];
    return (w[1] + w[2]) % 2;
  });
}

LocalRule negation() {
  return make_rule(full_shift(binary()), 0,
                   [](std::span<const int> w) { return 1 - w[0]; });
}

MarkovMeasure third_bernoulli() {
  return MarkovMeasure::bernoulli(binary(), {Rational(1) / 3, Rational(2) / 3});
}

MarkovMeasure skewed_bernoulli() {
  return MarkovMeasure::bernoulli(
      ternary(), {Rational(1) / 2, Rational(1) / 4, Rational(1) / 4});
}

bool c1_wall_certificate(std::string& why) {
  auto rule = wall_rule();
  const Word b = {2};
  auto cert = find_certificate(rule, b);
  if (!cert) { why = "no certificate for the wall"; return false; }
  for (const Word& v : cert->column)
    if (v != Word{2}) { why = "column not constant"; return false; }
  if (cert->preperiod != 0 || cert->period != 1) {
    why = "column not a fixed point";
    return false;
  }
  if (falsify_blocking(rule, b, cert->d, cert->w, 8)) {
    why = "falsifier contradicted the certificate";
    return false;
  }
  return true;
}

bool c2_wall_surjective(std::string& why) {
  auto rule = wall_rule();
  auto verdict = is_surjective(rule);
  if (!verdict.surjective || !verdict.exact || verdict.balance_target != 9) {
    why = "balance test did not pass at target 9";
    return false;
  }
  for (int len = 1; len <= 4; ++len) {
    for (const Word& u : all_words(3, len)) {
      long long count = 0;
      for (const Word& w : all_words(3, len + 2))
        if (apply_window(rule, w) == u) ++count;
      if (count != 9) {
        why = "word with " + std::to_string(count) + " preimages";
        return false;
      }
    }
  }
  return true;
}

bool c3_oscillation(std::string& why) {
  auto rule = wall_rule();
  auto mu = skewed_bernoulli();
  const Rational tol(1, 1000);
  for (const char* text : {"2012", "2112"}) {
    const Word u = ternary().word_from_string(text);
    auto head = cesaro_mean(rule, mu, u, 11);
    if (convergence_diagnostic(head.raw, 4, tol) != SeriesVerdict::Oscillating) {
      why = std::string(text) + " image series not oscillating";
      return false;
    }
    auto long_run = cesaro_mean(rule, mu, u, 64);
    if (convergence_diagnostic(long_run.values, 4, tol) !=
        SeriesVerdict::CauchyLike) {
      why = std::string(text) + " averages not cauchy-like";
      return false;
    }
  }
  return true;
}

bool c4_formula_crosscheck(std::string& why) {
  auto rule = wall_rule();
  auto mu = skewed_bernoulli();
  const Word b = {2};
  const int N = 200;
  const Rational slack_bound =
      Rational(1) - build_rkm(mu, b, 0, 4).mass + Rational(5) / N;
  for (const char* text : {"0", "1", "2"}) {
    const Word u = ternary().word_from_string(text);
    Rational prev(-1);
    Rational last;
    for (int m = 1; m <= 4; ++m) {
      const Rational wm = theorem_formula(rule, mu, b, u, 0, m);
      if (wm < prev) {
        why = std::string(text) + " formula decreased at m=" + std::to_string(m);
        return false;
      }
      prev = wm;
      last = wm;
    }
    auto series = cesaro_mean(rule, mu, u, N);
    const Rational gap = abs(last - series.values.back());
    if (gap > slack_bound) {
      why = std::string(text) + " gap exceeds the slack bound";
      return false;
    }
  }
  return true;
}

bool c5_negation_exact(std::string& why) {
  auto rule = negation();
  auto mu = third_bernoulli();
  const Word u = {0};
  auto series = cesaro_mean(rule, mu, u, 64);
  for (std::size_t i = 1; i < series.values.size(); i += 2) {
    if (series.values[i] != Rational(1) / 2) {
      why = "even-count average differs from 1/2";
      return false;
    }
  }
  if (equicontinuous_cesaro_limit(rule, mu, 2, 0, u) != Rational(1) / 2) {
    why = "closed-form limit differs from 1/2";
    return false;
  }
  auto verdict = classify_equicontinuity(rule, 1);
  if (equicontinuous_cesaro_limit(rule, mu, verdict, u) != Rational(1) / 2) {
    why = "verdict-based limit differs from 1/2";
    return false;
  }
  return true;
}

bool contains_cyclically(const Word& g, const Word& v) {
  if (v.empty()) return true;
  if (v.size() > g.size()) return false;
  Word doubled = g;
  doubled.insert(doubled.end(), g.begin(), g.end());
  return std::search(doubled.begin(), doubled.end(), v.begin(), v.end()) !=
         doubled.end();
}

bool c6_dense_periodics(std::string& why) {
  auto rule = wall_rule();
  auto cert = find_certificate(rule, Word{2});
  if (!cert) { why = "wall certificate missing"; return false; }
  std::vector<Word> targets{{}};
  for (int len = 1; len <= 2; ++len)
    for (const Word& v : all_words(3, len)) targets.push_back(v);
  for (const Word& v : targets) {
    PeriodicPointResult res;
    try {
      res = construct_f_periodic_point(rule, v, *cert, 256);
    } catch (const Error& e) {
      why = "construction failed: " + std::string(e.what());
      return false;
    }
    if (res.period < 1 || res.period > 256) {
      why = "period outside 1..256";
      return false;
    }
    if (!contains_cyclically(res.generator, v)) {
      why = "generator misses its target word";
      return false;
    }
    PeriodicConfig x = res.point;
    for (int i = 0; i < res.period; ++i) x = apply_periodic(rule, x);
    if (!(x == res.point)) {
      why = "F^period does not fix the point";
      return false;
    }
  }
  return true;
}

bool c7_negation_period_two(std::string& why) {
  auto rule = negation();
  for (int len = 1; len <= 6; ++len) {
    for (const Word& g : all_words(2, len)) {
      PeriodicConfig x{g, 0};
      PeriodicConfig y = apply_periodic(rule, apply_periodic(rule, x));
      if (!(y == x)) {
        why = "F^2 moved a generator of length " + std::to_string(len);
        return false;
      }
      auto orbit = orbit_periodic(rule, x, 8);
      if (orbit.preperiod != 0) {
        why = "nonzero preperiod";
        return false;
      }
    }
  }
  return true;
}

bool c8_pushforward_oracle(std::string& why) {
  std::mt19937_64 rng(424242);
  for (int trial = 0; trial < 200; ++trial) {
    const int n_sym = 2 + static_cast<int>(rng() % 2);
    const Alphabet alphabet = n_sym == 2 ? binary() : ternary();
    std::vector<int> table(static_cast<std::size_t>(n_sym) * n_sym * n_sym);
    for (auto& t : table) t = static_cast<int>(rng() % n_sym);
    LocalRule rule(full_shift(alphabet), 1, table);

    std::vector<Rational> probs;
    Rational total(0);
    for (int a = 0; a < n_sym; ++a) {
      probs.emplace_back(1 + static_cast<unsigned long>(rng() % 5));
      total += probs.back();
    }
    for (auto& p : probs) p /= total;
    auto mu = MarkovMeasure::bernoulli(alphabet, probs);

    const int ulen = 1 + static_cast<int>(rng() % 3);
    Word u;
    for (int i = 0; i < ulen; ++i) u.push_back(static_cast<int>(rng() % n_sym));
    const int n = static_cast<int>(rng() % 4);

    Rational brute(0);
    for (const Word& w : all_words(n_sym, ulen + 2 * n)) {
      Word img = w;
      for (int s = 0; s < n; ++s) img = apply_window(rule, img);
      if (img == u) brute += cylinder_prob(mu, w);
    }
    if (pushforward_cylinder(rule, mu, u, n) != brute) {
      why = "mismatch on trial " + std::to_string(trial);
      return false;
    }
  }
  return true;
}

bool c9_soundness(std::string& why) {
  std::mt19937_64 rng(171717);
  const Alphabet alphabet = binary();
  int certified = 0;
  for (int number = 0; number < 256; ++number) {
    std::vector<int> table(8);
    for (int code = 0; code < 8; ++code) table[code] = (number >> code) & 1;
    LocalRule rule(full_shift(alphabet), 1, table);
    for (int len = 1; len <= 4; ++len) {
      for (const Word& b : all_words(2, len)) {
        auto cert = find_certificate(rule, b);
        if (!cert) continue;
        ++certified;
        if (falsify_blocking(rule, b, cert->d, cert->w, 6)) {
          why = "rule " + std::to_string(number) + " certified and falsified";
          return false;
        }
        const int steps = cert->preperiod + 2 * cert->period;
        for (int probe = 0; probe < 50; ++probe) {
          Word left(static_cast<std::size_t>(steps)), right(left.size());
          for (auto& s : left) s = static_cast<int>(rng() % 2);
          for (auto& s : right) s = static_cast<int>(rng() % 2);
          auto column = simulate_column(rule, b, cert->d, cert->w, left, right,
                                        steps);
          for (int n = 1; n <= steps; ++n) {
            if (column[static_cast<std::size_t>(n) - 1] != cert->column_at(n)) {
              why = "rule " + std::to_string(number) + " column replay differs";
              return false;
            }
          }
        }
      }
    }
  }
  if (certified < 100) {
    why = "suspiciously few certificates: " + std::to_string(certified);
    return false;
  }
  return true;
}

bool c10_support_witnesses(std::string& why) {
  auto rule = wall_rule();
  auto report = support_tests(rule, skewed_bernoulli(), Word{2}, 2);
  if (report.rows.size() != 12) {
    why = "expected 12 rows, got " + std::to_string(report.rows.size());
    return false;
  }
  for (const auto& row : report.rows) {
    if (!row.in_support || !row.witnessed || !(row.witness > 0)) {
      why = "word without a positive witness";
      return false;
    }
  }
  return true;
}

struct Criterion {
  int number;
  const char* label;
  double budget_s;  // 0 = no budget
  std::function<bool(std::string&)> run;
};

}  // namespace

int main() {
  const std::vector<Criterion> criteria = {
      {1, "wall marker certifies; falsifier quiet at horizon 8", 1.0,
       c1_wall_certificate},
      {2, "wall rule balance-surjective, 9 preimages per word", 5.0,
       c2_wall_surjective},
      {3, "image series oscillate, averages settle", 0, c3_oscillation},
      {4, "window formula monotone and near the long-run average", 120.0,
       c4_formula_crosscheck},
      {5, "negation averages equal 1/2 exactly", 0, c5_negation_exact},
      {6, "periodic points reach every short word", 0, c6_dense_periodics},
      {7, "negation generators return after two steps", 0,
       c7_negation_period_two},
      {8, "image masses match brute-force enumeration", 0, c8_pushforward_oracle},
      {9, "certifier and falsifier agree on the binary corpus", 0, c9_soundness},
      {10, "every positive short word has a positive witness", 0,
       c10_support_witnesses},
  };

  int failures = 0;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    std::string why;
    bool ok = false;
    try {
      ok = c.run(why);
    } catch (const std::exception& e) {
      why = e.what();
    }
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
            .count();
    if (ok && c.budget_s > 0 && secs > c.budget_s) {
      ok = false;
      why = "over time budget of " + std::to_string(c.budget_s) + "s";
    }
    if (!ok) ++failures;
    std::printf("%s %2d  %s  (%.2fs)%s%s\n", ok ? "PASS" : "FAIL", c.number,
                c.label, secs, why.empty() ? "" : "  -- ", why.c_str());
  }
  if (failures) std::printf("%d criterion(s) failed\n", failures);
  else std::printf("all criteria passed\n");
  return failures ? 1 : 0;
}
