#pragma once

#include <Eigen/Dense>

#include "cesaro/shift_space.hpp"

namespace cesaro {

// Perron eigendata of a presentation's adjacency matrix, plus everything
// needed to weigh cylinders.  Floating point by design: this is the one
// numerical corner of the library, and its tolerances are part of the
// contract (power iteration to 1e-13, consistency checks at 1e-10).
struct ParryData {
  ShiftSpace space;
  double eigenvalue = 0.0;
  Eigen::VectorXd right;              // Perron right eigenvector, 1-normalized
  Eigen::VectorXd left;               // Perron left eigenvector
  Eigen::VectorXd stationary;         // vertex distribution l_v r_v / (l.r)
  std::vector<Eigen::MatrixXd> label_matrix;  // edge counts per symbol
  int iterations = 0;                 // power-iteration steps used
};

// Requires a transitive presentation (NonTransitive otherwise).  On the full
// shift this is the uniform Bernoulli measure.
ParryData parry_measure(const ShiftSpace& space);

// Measure of the cylinder [u] under the Parry measure.
double parry_cylinder_prob(const ParryData& parry, const Word& u);

}  // namespace cesaro
