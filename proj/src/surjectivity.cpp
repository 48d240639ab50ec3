#include "cesaro/surjectivity.hpp"

#include <algorithm>
#include <cmath>
#include <map>

#include "cesaro/errors.hpp"
#include "cesaro/parry.hpp"

namespace cesaro {

namespace {

// Exact balance test on the full shift, BFS over preimage-count vectors.
//
// For a word u let v_u[s] count the length-(|u|+2r) preimages of u ending in
// the 2r-suffix s.  Extending u by one output symbol is a linear step on v,
// so distinct vectors can be merged; every reachable vector with sum not
// equal to |A|^{2r} exhibits non-surjectivity, and if none is reachable the
// rule is balanced at every length, hence onto.
SurjectivityResult balance_test(const LocalRule& rule, const Caps& caps) {
  const int base = rule.alphabet().size();
  const int r = rule.radius();
  const std::size_t dim = checked_power(base, 2 * r, caps.balance_states, "balance_states");
  const long long target = (long long)dim;

  // transitions[a] lists (src suffix, dst suffix) pairs producing output a.
  std::vector<std::vector<std::pair<std::size_t, std::size_t>>> transitions(base);
  for (std::size_t s = 0; s < dim; ++s)
    for (int b = 0; b < base; ++b) {
      std::size_t nb = s * (std::size_t)base + (std::size_t)b;
      transitions[rule.entry(nb)].push_back({s, nb % dim});
    }

  struct Node {
    int parent;
    int symbol;
  };
  std::map<std::vector<long long>, int> index;
  std::vector<std::vector<long long>> vectors;
  std::vector<Node> nodes;

  std::vector<long long> root(dim, 1);  // every 2r-word is its own suffix
  index.emplace(root, 0);
  vectors.push_back(root);
  nodes.push_back({-1, -1});

  auto word_of = [&](int node, int extra) {
    Word w;
    for (int cur = node; cur > 0; cur = nodes[cur].parent)
      w.push_back(nodes[cur].symbol);
    std::reverse(w.begin(), w.end());
    if (extra >= 0) w.push_back(extra);
    return w;
  };

  SurjectivityResult res;
  res.exact = true;
  res.balance_target = dim;

  std::vector<int> frontier = {0};
  while (!frontier.empty()) {
    std::vector<int> next_frontier;
    // Deficient candidates discovered at this depth: (word, count).
    std::optional<std::pair<Word, long long>> deficient;
    bool unbalanced_here = false;
    for (int node : frontier) {
      const auto v = vectors[node];  // copy: the pool may reallocate below
      for (int a = 0; a < base; ++a) {
        std::vector<long long> child(dim, 0);
        for (auto [src, dst] : transitions[a]) child[dst] += v[src];
        long long sum = 0;
        for (long long c : child) sum += c;
        if (sum != target) {
          unbalanced_here = true;
          if (sum < target) {
            Word w = word_of(node, a);
            if (!deficient || w < deficient->first) deficient = {{w, sum}};
          }
          continue;
        }
        if (unbalanced_here) continue;  // finishing the level for the witness scan
        auto [it, fresh] = index.emplace(child, (int)vectors.size());
        if (fresh) {
          vectors.push_back(std::move(child));
          nodes.push_back({node, a});
          if (vectors.size() > caps.balance_states)
            fail(ErrorKind::CapExceeded,
                 "balance_states: more than " + std::to_string(caps.balance_states) +
                     " distinct preimage-count vectors");
          next_frontier.push_back(it->second);
        }
      }
    }
    if (unbalanced_here) {
      // At the first unbalanced depth a deficient word always exists: the
      // counts at each length average to the target.
      if (!deficient) fail(ErrorKind::Internal, "unbalanced level without deficit");
      res.surjective = false;
      res.witness = deficient->first;
      res.witness_count = deficient->second;
      return res;
    }
    frontier = std::move(next_frontier);
  }
  res.surjective = true;
  return res;
}

// Numerical verdict on SFT domains: the Parry (max-entropy) measure of an
// onto map is invariant under preimage summation.  Checked on all language
// words up to length 6.
SurjectivityResult parry_invariance(const LocalRule& rule, const Caps& caps) {
  const auto& sp = rule.domain();
  ParryData parry = parry_measure(sp);
  const int r = rule.radius();
  SurjectivityResult res;
  res.exact = false;
  double worst = 0.0;
  for (int len = 1; len <= 6; ++len) {
    checked_power(sp.alphabet.size(), len + 2 * r, caps.table_entries, "table_entries");
    auto candidates = language_words(sp, len + 2 * r);
    std::map<Word, double> preimage_mass;
    for (const auto& w : candidates) preimage_mass[apply_window(rule, w)] += parry_cylinder_prob(parry, w);
    for (const auto& u : language_words(sp, len)) {
      double have = 0.0;
      if (auto it = preimage_mass.find(u); it != preimage_mass.end()) have = it->second;
      worst = std::max(worst, std::abs(have - parry_cylinder_prob(parry, u)));
    }
  }
  res.max_discrepancy = worst;
  res.surjective = worst <= 1e-8;
  return res;
}

}  // namespace

SurjectivityResult is_surjective(const LocalRule& rule, const Caps& caps) {
  if (rule.domain().is_full()) return balance_test(rule, caps);
  return parry_invariance(rule, caps);
}

}  // namespace cesaro
