#pragma once

#include <vector>

#include <Eigen/Dense>

namespace spectra {

struct Assignment {
  /// row_to_col[i] is the column matched with row i.
  std::vector<int> row_to_col;
  double cost = 0.0;
};

/// Minimum-cost perfect matching of a square cost matrix (Hungarian method
/// with potentials, O(n³)).
Assignment solve_assignment(const Eigen::MatrixXd& cost);

}  // namespace spectra
