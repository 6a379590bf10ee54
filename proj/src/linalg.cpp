#include "artin/linalg.hpp"

#include <map>

namespace artin {

namespace {

using Col = std::map<int, Rational>;  // row -> nonzero value

// col -= f * other
void axpy(Col& col, const Rational& f, const Col& other) {
  for (const auto& [r, v] : other) {
    auto it = col.find(r);
    if (it == col.end()) {
      col.emplace(r, -f * v);
    } else {
      it->second -= f * v;
      if (it->second == 0) col.erase(it);
    }
  }
}

int eliminate(std::vector<Col> cols) {
  // left-looking elimination: pivots[r] = index of the column whose pivot row is r
  std::map<int, int> pivots;
  int rank = 0;
  for (size_t j = 0; j < cols.size(); ++j) {
    Col& col = cols[j];
    for (;;) {
      if (col.empty()) break;
      int r = col.begin()->first;  // reduce against the earliest pivot rows first
      auto p = pivots.find(r);
      if (p == pivots.end()) break;
      Col& pc = cols[static_cast<size_t>(p->second)];
      Rational f = col.begin()->second / pc.begin()->second;
      axpy(col, f, pc);
    }
    if (!col.empty()) {
      pivots[col.begin()->first] = static_cast<int>(j);
      ++rank;
    }
  }
  return rank;
}

}  // namespace

int rank_over_q(const IntMatrix& m) {
  std::vector<Col> cols(static_cast<size_t>(col_count(m)));
  for (int r = 0; r < row_count(m); ++r)
    for (int c = 0; c < col_count(m); ++c)
      if (m[static_cast<size_t>(r)][static_cast<size_t>(c)] != 0)
        cols[static_cast<size_t>(c)][r] = Rational(static_cast<long>(m[static_cast<size_t>(r)][static_cast<size_t>(c)]));
  return eliminate(std::move(cols));
}

int rank_over_q_sparse(int, const std::vector<std::vector<std::pair<int, long long>>>& sparse) {
  std::vector<Col> cols(sparse.size());
  for (size_t c = 0; c < sparse.size(); ++c)
    for (const auto& [r, v] : sparse[c])
      if (v != 0) cols[c][r] = Rational(static_cast<long>(v));
  return eliminate(std::move(cols));
}

IntMatrix matmul(const IntMatrix& a, const IntMatrix& b) {
  IntMatrix out(static_cast<size_t>(row_count(a)),
                std::vector<long long>(static_cast<size_t>(col_count(b)), 0));
  for (int i = 0; i < row_count(a); ++i)
    for (int k = 0; k < col_count(a); ++k) {
      long long av = a[static_cast<size_t>(i)][static_cast<size_t>(k)];
      if (av == 0) continue;
      for (int j = 0; j < col_count(b); ++j)
        out[static_cast<size_t>(i)][static_cast<size_t>(j)] +=
            av * b[static_cast<size_t>(k)][static_cast<size_t>(j)];
    }
  return out;
}

}  // namespace artin
