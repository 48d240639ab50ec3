#include "cesaro/preimage_dfa.hpp"

#include <algorithm>
#include <map>

#include "cesaro/errors.hpp"

namespace cesaro {

namespace {

// Backward pass: merge states with identical forward behavior, drop states
// that cannot reach acceptance, renumber so the survivors of every level are
// dense.  Returns a dead automaton flagged empty when nothing accepts.
void minimize(LayeredDfa& d, std::size_t last_level_nodes) {
  const int T = d.length();
  // class_of[j] maps old node ids at level j to new ids, -1 dead.
  std::vector<std::vector<int>> class_of(static_cast<std::size_t>(T) + 1);
  auto& last = class_of[static_cast<std::size_t>(T)];
  last.assign(last_level_nodes, -1);
  if (!last.empty()) last[0] = 0;  // callers put the accepting state first
  for (int j = T - 1; j >= 0; --j) {
    auto& rows = d.next[static_cast<std::size_t>(j)];
    const auto& down = class_of[static_cast<std::size_t>(j) + 1];
    std::map<std::vector<int>, int> sig;
    auto& cls = class_of[static_cast<std::size_t>(j)];
    cls.assign(rows.size(), -1);
    std::vector<std::vector<int>> fresh;
    for (std::size_t s = 0; s < rows.size(); ++s) {
      std::vector<int> row = rows[s];
      bool live = false;
      for (auto& t : row) {
        if (t >= 0) t = down[static_cast<std::size_t>(t)];
        live = live || t >= 0;
      }
      if (!live) continue;
      auto [it, fresh_sig] = sig.emplace(row, static_cast<int>(fresh.size()));
      if (fresh_sig) fresh.push_back(row);
      cls[s] = it->second;
    }
    rows = std::move(fresh);
  }
  if (d.next.empty() || d.next[0].empty()) {
    d.empty_language = true;
    d.next.assign(static_cast<std::size_t>(T), {});
  }
}

}  // namespace

std::size_t LayeredDfa::total_states() const {
  std::size_t n = 0;
  for (const auto& level : next) n += level.size();
  return n;
}

std::vector<std::size_t> LayeredDfa::level_sizes() const {
  std::vector<std::size_t> sizes;
  sizes.reserve(next.size() + 1);
  for (const auto& level : next) sizes.push_back(level.size());
  sizes.push_back(empty_language ? 0 : 1);
  return sizes;
}

LayeredDfa word_dfa(const Word& u, int n_sym) {
  LayeredDfa d;
  d.n_sym = n_sym;
  d.next.reserve(u.size());
  for (int a : u) {
    std::vector<int> row(static_cast<std::size_t>(n_sym), -1);
    row[static_cast<std::size_t>(a)] = 0;
    d.next.push_back({row});
  }
  return d;
}

LayeredDfa lift_preimage(const LayeredDfa& d, const LocalRule& rule,
                         const Caps& caps) {
  if (!rule.domain().is_full())
    fail(ErrorKind::Unsupported,
         "measure pushforward is implemented for full-shift domains");
  if (d.n_sym != static_cast<int>(rule.alphabet().size()))
    fail(ErrorKind::BadParam, "alphabet size mismatch");
  const int n_sym = d.n_sym;
  const int r = rule.radius();
  const int L = d.length();
  const int T = L + 2 * r;

  LayeredDfa out;
  out.n_sym = n_sym;
  out.next.assign(static_cast<std::size_t>(T), {});
  if (d.empty_language) {
    out.empty_language = true;
    return out;
  }
  if (T == 0) return out;  // preimage of the empty-word language

  // Forward subset-free construction: a state is (window buffer, node of d),
  // with the buffer holding the last min(level, 2r) symbols read.
  struct State {
    std::uint64_t buffer;
    int inner;
  };
  std::vector<State> cur{{0, 0}};
  std::size_t created = 1;
  std::uint64_t window_mod = 1;  // n_sym^(2r), collapses once the buffer fills
  for (int i = 0; i < 2 * r; ++i) window_mod *= static_cast<std::uint64_t>(n_sym);

  std::size_t accept_nodes = 0;
  for (int j = 0; j < T; ++j) {
    auto& rows = out.next[static_cast<std::size_t>(j)];
    rows.assign(cur.size(), std::vector<int>(static_cast<std::size_t>(n_sym), -1));
    std::map<std::pair<std::uint64_t, int>, int> intern;
    std::vector<State> nxt;
    for (std::size_t s = 0; s < cur.size(); ++s) {
      for (int a = 0; a < n_sym; ++a) {
        std::uint64_t window = cur[s].buffer * static_cast<std::uint64_t>(n_sym) +
                               static_cast<std::uint64_t>(a);
        int inner = cur[s].inner;
        std::uint64_t buffer = window;
        if (j >= 2 * r) {
          int produced = rule.entry(window);
          inner = d.next[static_cast<std::size_t>(j - 2 * r)]
                        [static_cast<std::size_t>(inner)]
                        [static_cast<std::size_t>(produced)];
          if (inner < 0) continue;
          buffer = window % window_mod;
        }
        auto [it, fresh] = intern.try_emplace({buffer, inner},
                                              static_cast<int>(nxt.size()));
        if (fresh) {
          nxt.push_back({buffer, inner});
          if (++created > caps.pushforward_states)
            fail(ErrorKind::CapExceeded,
                 "pushforward_states: automaton grew past " +
                     std::to_string(caps.pushforward_states));
        }
        rows[s][static_cast<std::size_t>(a)] = it->second;
      }
    }
    cur = std::move(nxt);
    if (j + 1 == T) {
      // Reorder the final level so accepting states come first.
      std::vector<int> rank(cur.size(), -1);
      int pos = 0;
      for (std::size_t s = 0; s < cur.size(); ++s)
        if (cur[s].inner == 0) rank[s] = pos++;
      accept_nodes = static_cast<std::size_t>(pos);
      for (std::size_t s = 0; s < cur.size(); ++s)
        if (rank[s] < 0) rank[s] = pos++;
      for (auto& row : rows)
        for (auto& t : row)
          if (t >= 0) t = rank[static_cast<std::size_t>(t)];
    }
  }
  if (accept_nodes == 0) {
    out.empty_language = true;
    out.next.assign(static_cast<std::size_t>(T), {});
    return out;
  }
  // Merge all accepting states: keep node 0, redirect the rest.
  for (auto& row : out.next.back())
    for (auto& t : row)
      if (t >= 0) t = t < static_cast<int>(accept_nodes) ? 0 : -1;
  minimize(out, 1);
  return out;
}

Rational dfa_measure(const LayeredDfa& d, const MarkovMeasure& mu) {
  if (d.empty_language) return Rational(0);
  const int T = d.length();
  if (T == 0) return Rational(1);
  const int n_sym = d.n_sym;
  auto sizes = d.level_sizes();

  if (mu.kind() == MarkovMeasure::Kind::Bernoulli) {
    std::vector<Rational> dp(sizes[0], Rational(0));
    dp[0] = 1;
    for (int j = 0; j < T; ++j) {
      std::vector<Rational> nxt(sizes[static_cast<std::size_t>(j) + 1], Rational(0));
      const auto& rows = d.next[static_cast<std::size_t>(j)];
      for (std::size_t s = 0; s < rows.size(); ++s) {
        if (dp[s] == 0) continue;
        for (int a = 0; a < n_sym; ++a) {
          int t = rows[s][static_cast<std::size_t>(a)];
          if (t >= 0) nxt[static_cast<std::size_t>(t)] += dp[s] * mu.symbol_prob(a);
        }
      }
      dp = std::move(nxt);
    }
    return dp[0];
  }

  // Markov: weight of the next edge depends on the previous symbol, so the
  // dp state is (node, last symbol).
  auto idx = [&](std::size_t node, int a) {
    return node * static_cast<std::size_t>(n_sym) + static_cast<std::size_t>(a);
  };
  std::vector<Rational> dp(sizes[1] * static_cast<std::size_t>(n_sym), Rational(0));
  for (int a = 0; a < n_sym; ++a) {
    int t = d.next[0][0][static_cast<std::size_t>(a)];
    if (t >= 0) dp[idx(static_cast<std::size_t>(t), a)] += mu.symbol_prob(a);
  }
  for (int j = 1; j < T; ++j) {
    std::vector<Rational> nxt(sizes[static_cast<std::size_t>(j) + 1] *
                                  static_cast<std::size_t>(n_sym),
                              Rational(0));
    const auto& rows = d.next[static_cast<std::size_t>(j)];
    for (std::size_t s = 0; s < rows.size(); ++s) {
      for (int b = 0; b < n_sym; ++b) {
        const Rational& w = dp[idx(s, b)];
        if (w == 0) continue;
        for (int a = 0; a < n_sym; ++a) {
          int t = rows[s][static_cast<std::size_t>(a)];
          if (t >= 0)
            nxt[idx(static_cast<std::size_t>(t), a)] += w * mu.step_prob(b, a);
        }
      }
    }
    dp = std::move(nxt);
  }
  Rational total(0);
  for (int a = 0; a < n_sym; ++a) total += dp[idx(0, a)];
  return total;
}

std::vector<Word> dfa_words(const LayeredDfa& d) {
  std::vector<Word> out;
  if (d.empty_language) return out;
  Word cur;
  auto walk = [&](auto&& self, int level, int node) -> void {
    if (level == d.length()) {
      out.push_back(cur);
      return;
    }
    const auto& row = d.next[static_cast<std::size_t>(level)][static_cast<std::size_t>(node)];
    for (int a = 0; a < d.n_sym; ++a) {
      if (row[static_cast<std::size_t>(a)] < 0) continue;
      cur.push_back(a);
      self(self, level + 1, row[static_cast<std::size_t>(a)]);
      cur.pop_back();
    }
  };
  walk(walk, 0, 0);
  return out;
}

}  // namespace cesaro
