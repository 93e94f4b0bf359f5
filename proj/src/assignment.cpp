#include "ontosim/assignment.hpp"

#include <limits>

namespace ontosim {

// Jonker-Volgenant style shortest-augmenting-path scheme on the negated
// scores (minimization), 1-based potentials.
AssignmentResult max_weight_assignment(const std::vector<double>& scores, int rows, int cols) {
  const int k = rows > cols ? rows : cols;
  const double inf = std::numeric_limits<double>::infinity();

  auto cost = [&](int i, int j) -> double {
    return (i < rows && j < cols) ? -scores[static_cast<size_t>(i) * cols + j] : 0.0;
  };

  std::vector<double> u(k + 1, 0.0), v(k + 1, 0.0);
  std::vector<int> assigned_row(k + 1, 0);  // row occupying column j (1-based)
  std::vector<int> way(k + 1, 0);

  for (int i = 1; i <= k; ++i) {
    assigned_row[0] = i;
    int j0 = 0;
    std::vector<double> minv(k + 1, inf);
    std::vector<char> used(k + 1, 0);
    do {
      used[j0] = 1;
      int i0 = assigned_row[j0], j1 = 0;
      double delta = inf;
      for (int j = 1; j <= k; ++j) {
        if (used[j]) continue;
        double cur = cost(i0 - 1, j - 1) - u[i0] - v[j];
        if (cur < minv[j]) {
          minv[j] = cur;
          way[j] = j0;
        }
        if (minv[j] < delta) {
          delta = minv[j];
          j1 = j;
        }
      }
      for (int j = 0; j <= k; ++j) {
        if (used[j]) {
          u[assigned_row[j]] += delta;
          v[j] -= delta;
        } else {
          minv[j] -= delta;
        }
      }
      j0 = j1;
    } while (assigned_row[j0] != 0);
    do {
      int j1 = way[j0];
      assigned_row[j0] = assigned_row[j1];
      j0 = j1;
    } while (j0 != 0);
  }

  AssignmentResult result;
  result.column_of_row.assign(rows, -1);
  for (int j = 1; j <= k; ++j) {
    int i = assigned_row[j] - 1;
    if (i < rows && j - 1 < cols) {
      result.column_of_row[i] = j - 1;
      result.total += scores[static_cast<size_t>(i) * cols + (j - 1)];
    }
  }
  return result;
}

}  // namespace ontosim
