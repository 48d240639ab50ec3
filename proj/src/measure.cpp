#include "cesaro/measure.hpp"

#include <algorithm>

#include "cesaro/errors.hpp"

namespace cesaro {

namespace {

void check_distribution(const std::vector<Rational>& p, const char* what) {
  Rational sum = 0;
  for (const auto& q : p) {
    if (q < 0 || q > 1) fail(ErrorKind::BadParam, std::string(what) + " outside [0,1]");
    sum += q;
  }
  if (sum != 1) fail(ErrorKind::BadParam, std::string(what) + " does not sum to 1");
}

// Exact stationary distribution of an irreducible stochastic matrix: solve
// pi (P - I) = 0 with sum(pi) = 1 by Gaussian elimination over the
// rationals (the normalization replaces one redundant equation).
std::vector<Rational> exact_stationary(const std::vector<std::vector<Rational>>& p) {
  const int n = (int)p.size();
  std::vector<std::vector<Rational>> a(n, std::vector<Rational>(n + 1, 0));
  for (int col = 0; col < n; ++col)
    for (int row = 0; row < n; ++row) {
      a[col][row] = p[row][col];
      if (row == col) a[col][row] -= 1;
    }
  for (int row = 0; row < n; ++row) a[n - 1][row] = 1;  // sum constraint
  a[n - 1][n] = 1;

  for (int col = 0; col < n; ++col) {
    int pivot = -1;
    for (int row = col; row < n; ++row)
      if (a[row][col] != 0) { pivot = row; break; }
    if (pivot < 0)
      fail(ErrorKind::BadParam, "transition matrix is not irreducible");
    std::swap(a[col], a[pivot]);
    Rational inv = a[col][col];
    for (int j = col; j <= n; ++j) a[col][j] /= inv;
    for (int row = 0; row < n; ++row) {
      if (row == col || a[row][col] == 0) continue;
      Rational factor = a[row][col];
      for (int j = col; j <= n; ++j) a[row][j] -= factor * a[col][j];
    }
  }
  std::vector<Rational> pi(n);
  for (int i = 0; i < n; ++i) pi[i] = a[i][n];
  return pi;
}

bool strongly_connected_support(const std::vector<std::vector<Rational>>& p) {
  const int n = (int)p.size();
  auto reach_all = [&](bool reversed) {
    std::vector<char> seen(n, 0);
    std::vector<int> stack = {0};
    seen[0] = 1;
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      for (int w = 0; w < n; ++w) {
        const Rational& q = reversed ? p[w][v] : p[v][w];
        if (q > 0 && !seen[w]) { seen[w] = 1; stack.push_back(w); }
      }
    }
    return std::count(seen.begin(), seen.end(), (char)1) == n;
  };
  return reach_all(false) && reach_all(true);
}

}  // namespace

MarkovMeasure MarkovMeasure::bernoulli(const Alphabet& alphabet,
                                       std::vector<Rational> probs) {
  if ((int)probs.size() != alphabet.size())
    fail(ErrorKind::BadParam, "one probability per symbol required");
  check_distribution(probs, "symbol probability");
  MarkovMeasure mu;
  mu.kind_ = Kind::Bernoulli;
  mu.alphabet_ = alphabet;
  mu.transition_.assign(alphabet.size(), probs);
  mu.stationary_ = std::move(probs);
  return mu;
}

MarkovMeasure MarkovMeasure::markov(const Alphabet& alphabet,
                                    std::vector<std::vector<Rational>> transition) {
  const int n = alphabet.size();
  if ((int)transition.size() != n)
    fail(ErrorKind::BadParam, "transition matrix must have one row per symbol");
  for (const auto& row : transition) {
    if ((int)row.size() != n)
      fail(ErrorKind::BadParam, "transition matrix must be square");
    check_distribution(row, "transition row");
  }
  if (!strongly_connected_support(transition))
    fail(ErrorKind::BadParam, "transition matrix is not irreducible");
  MarkovMeasure mu;
  mu.kind_ = Kind::Markov;
  mu.alphabet_ = alphabet;
  mu.stationary_ = exact_stationary(transition);
  mu.transition_ = std::move(transition);
  // pi P = pi must hold exactly; anything else is an elimination bug.
  for (int b = 0; b < n; ++b) {
    Rational acc = 0;
    for (int a = 0; a < n; ++a) acc += mu.stationary_[a] * mu.transition_[a][b];
    if (acc != mu.stationary_[b])
      fail(ErrorKind::Internal, "stationary vector is not invariant");
  }
  return mu;
}

bool MarkovMeasure::full_support() const {
  for (const auto& q : stationary_)
    if (q == 0) return false;
  if (kind_ == Kind::Markov)
    for (const auto& row : transition_)
      for (const auto& q : row)
        if (q == 0) return false;
  return true;
}

Rational cylinder_prob(const MarkovMeasure& mu, const Word& u) {
  if (u.empty()) return 1;
  for (int s : u)
    if (s < 0 || s >= mu.alphabet().size())
      fail(ErrorKind::Inadmissible, "symbol outside the measure's alphabet");
  Rational mass = mu.symbol_prob(u[0]);
  for (std::size_t i = 1; i < u.size() && mass != 0; ++i)
    mass *= mu.step_prob(u[i - 1], u[i]);
  return mass;
}

}  // namespace cesaro
