#include "cesaro/parry.hpp"

#include <cmath>

#include "cesaro/errors.hpp"

namespace cesaro {

namespace {

constexpr double kTolerance = 1e-13;
constexpr int kMaxIterations = 100000;

// Power iteration on M + I.  The shift keeps the Perron pair while making the
// iteration converge even for periodic (non-primitive) adjacency matrices.
std::pair<double, Eigen::VectorXd> perron_pair(const Eigen::MatrixXd& m, int* iters) {
  const int n = (int)m.rows();
  Eigen::MatrixXd shifted = m + Eigen::MatrixXd::Identity(n, n);
  Eigen::VectorXd v = Eigen::VectorXd::Constant(n, 1.0 / n);
  int it = 0;
  for (; it < kMaxIterations; ++it) {
    Eigen::VectorXd next = shifted * v;
    next /= next.sum();
    double delta = (next - v).cwiseAbs().maxCoeff();
    v = next;
    if (delta < kTolerance) break;
  }
  if (iters) *iters = std::max(*iters, it + 1);
  double lambda = v.dot(m * v) / v.dot(v);
  return {lambda, v};
}

}  // namespace

ParryData parry_measure(const ShiftSpace& space) {
  if (!is_transitive(space))
    fail(ErrorKind::NonTransitive, "Parry measure needs a strongly connected presentation");
  const int n = space.vertex_count;
  Eigen::MatrixXd m = Eigen::MatrixXd::Zero(n, n);
  for (const auto& e : space.edges) m(e.src, e.dst) += 1.0;

  ParryData parry;
  parry.space = space;
  parry.iterations = 0;
  auto [lambda, right] = perron_pair(m, &parry.iterations);
  auto [lambda_l, left] = perron_pair(m.transpose(), &parry.iterations);
  (void)lambda_l;
  parry.eigenvalue = lambda;
  parry.right = right;
  parry.left = left;
  double lr = left.dot(right);
  parry.stationary = (left.array() * right.array() / lr).matrix();

  parry.label_matrix.assign(space.alphabet.size(), Eigen::MatrixXd::Zero(n, n));
  for (const auto& e : space.edges) parry.label_matrix[e.label](e.src, e.dst) += 1.0;
  return parry;
}

double parry_cylinder_prob(const ParryData& parry, const Word& u) {
  // lambda([u]) = l^T A_{u_1} ... A_{u_n} r / ((l.r) lambda^n); on the full
  // shift this collapses to |A|^-|u|.
  Eigen::RowVectorXd v = parry.left.transpose();
  for (int s : u) {
    if (s < 0 || s >= (int)parry.label_matrix.size())
      fail(ErrorKind::Inadmissible, "symbol outside the presentation alphabet");
    v = v * parry.label_matrix[s];
  }
  double mass = v.dot(parry.right);
  double denom = parry.left.dot(parry.right) * std::pow(parry.eigenvalue, (double)u.size());
  return mass / denom;
}

}  // namespace cesaro
