#ifndef ARTIN_LINALG_HPP
#define ARTIN_LINALG_HPP

#include <vector>

#include "artin/rational.hpp"

namespace artin {

// Dense integer matrix, rows x cols; a[r][c].
using IntMatrix = std::vector<std::vector<long long>>;

inline int row_count(const IntMatrix& m) { return static_cast<int>(m.size()); }
inline int col_count(const IntMatrix& m) { return m.empty() ? 0 : static_cast<int>(m[0].size()); }

// Exact rank over Q (sparse rational elimination inside).
int rank_over_q(const IntMatrix& m);

// Same, for a matrix given as sparse columns of (row, value).
int rank_over_q_sparse(int rows, const std::vector<std::vector<std::pair<int, long long>>>& cols);

IntMatrix matmul(const IntMatrix& a, const IntMatrix& b);

}  // namespace artin

#endif
