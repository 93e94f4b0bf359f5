#pragma once

#include <vector>

namespace ontosim {

struct AssignmentResult {
  /// Column matched to each row; -1 for rows left out when rows > cols.
  std::vector<int> column_of_row;
  /// Sum of the matched scores, maximal over all one-to-one pairings of size
  /// min(rows, cols).
  double total = 0.0;
};

// Maximum-weight one-to-one assignment on a rectangular score matrix
// (row-major, rows x cols), O(max(rows, cols)^3) shortest augmenting paths.
// The rectangle is padded square with zero scores internally, so exactly
// min(rows, cols) real pairs come back, zero-score pairs included.
AssignmentResult max_weight_assignment(const std::vector<double>& scores, int rows, int cols);

}  // namespace ontosim
