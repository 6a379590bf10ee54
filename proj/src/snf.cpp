#include "artin/snf.hpp"

#include <algorithm>

namespace artin {

namespace {

// ---- integer SNF ----------------------------------------------------------

struct IntOps {
  std::vector<std::vector<Integer>>& a;
  std::vector<std::vector<Integer>>* u;  // row transforms, or null
  std::vector<std::vector<Integer>>* v;  // column transforms, or null
  int rows, cols;

  void swap_rows(int i, int j) {
    if (i == j) return;
    std::swap(a[static_cast<size_t>(i)], a[static_cast<size_t>(j)]);
    if (u) std::swap((*u)[static_cast<size_t>(i)], (*u)[static_cast<size_t>(j)]);
  }
  void swap_cols(int i, int j) {
    if (i == j) return;
    for (int r = 0; r < rows; ++r) std::swap(a[static_cast<size_t>(r)][static_cast<size_t>(i)],
                                             a[static_cast<size_t>(r)][static_cast<size_t>(j)]);
    if (v)
      for (auto& row : *v) std::swap(row[static_cast<size_t>(i)], row[static_cast<size_t>(j)]);
  }
  // row_i -= f * row_j
  void row_axpy(int i, const Integer& f, int j) {
    for (int c = 0; c < cols; ++c)
      a[static_cast<size_t>(i)][static_cast<size_t>(c)] -= f * a[static_cast<size_t>(j)][static_cast<size_t>(c)];
    if (u)
      for (size_t c = 0; c < (*u)[static_cast<size_t>(i)].size(); ++c)
        (*u)[static_cast<size_t>(i)][c] -= f * (*u)[static_cast<size_t>(j)][c];
  }
  void col_axpy(int i, const Integer& f, int j) {
    for (int r = 0; r < rows; ++r)
      a[static_cast<size_t>(r)][static_cast<size_t>(i)] -= f * a[static_cast<size_t>(r)][static_cast<size_t>(j)];
    if (v)
      for (auto& row : *v) row[static_cast<size_t>(i)] -= f * row[static_cast<size_t>(j)];
  }
  void negate_row(int i) {
    for (int c = 0; c < cols; ++c) a[static_cast<size_t>(i)][static_cast<size_t>(c)] *= -1;
    if (u)
      for (auto& x : (*u)[static_cast<size_t>(i)]) x *= -1;
  }
};

// ---- polynomial SNF -------------------------------------------------------

struct PolyOps {
  std::vector<std::vector<LaurentPoly>>& a;
  std::vector<std::vector<LaurentPoly>>* u;
  std::vector<std::vector<LaurentPoly>>* v;
  int rows, cols;

  void swap_rows(int i, int j) {
    if (i == j) return;
    std::swap(a[static_cast<size_t>(i)], a[static_cast<size_t>(j)]);
    if (u) std::swap((*u)[static_cast<size_t>(i)], (*u)[static_cast<size_t>(j)]);
  }
  void swap_cols(int i, int j) {
    if (i == j) return;
    for (int r = 0; r < rows; ++r) std::swap(a[static_cast<size_t>(r)][static_cast<size_t>(i)],
                                             a[static_cast<size_t>(r)][static_cast<size_t>(j)]);
    if (v)
      for (auto& row : *v) std::swap(row[static_cast<size_t>(i)], row[static_cast<size_t>(j)]);
  }
  void row_axpy(int i, const LaurentPoly& f, int j) {
    for (int c = 0; c < cols; ++c)
      a[static_cast<size_t>(i)][static_cast<size_t>(c)] -= f * a[static_cast<size_t>(j)][static_cast<size_t>(c)];
    if (u)
      for (size_t c = 0; c < (*u)[static_cast<size_t>(i)].size(); ++c)
        (*u)[static_cast<size_t>(i)][c] -= f * (*u)[static_cast<size_t>(j)][c];
  }
  void col_axpy(int i, const LaurentPoly& f, int j) {
    for (int r = 0; r < rows; ++r)
      a[static_cast<size_t>(r)][static_cast<size_t>(i)] -= f * a[static_cast<size_t>(r)][static_cast<size_t>(j)];
    if (v)
      for (auto& row : *v) row[static_cast<size_t>(i)] -= f * row[static_cast<size_t>(j)];
  }
  // scale a row by a unit of R (rational times q-power)
  void scale_row(int i, const LaurentPoly& unit) {
    for (int c = 0; c < cols; ++c)
      a[static_cast<size_t>(i)][static_cast<size_t>(c)] *= unit;
    if (u)
      for (auto& x : (*u)[static_cast<size_t>(i)]) x *= unit;
  }

  // Coefficient blow-up control: rescale the row to primitive integer
  // coefficients (a unit operation, exactness unaffected).
  void extract_content(int i, int from_col) {
    Integer num_gcd = 0, den_lcm = 1;
    for (int c = from_col; c < cols; ++c) {
      const LaurentPoly& p = a[static_cast<size_t>(i)][static_cast<size_t>(c)];
      if (p.is_zero()) continue;
      for (long e = p.lo(); e <= p.hi(); ++e) {
        Rational x = p.coeff(e);
        if (x == 0) continue;
        mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), x.get_num_mpz_t());
        mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), x.get_den_mpz_t());
      }
    }
    if (num_gcd == 0 || (num_gcd == 1 && den_lcm == 1)) return;
    Rational scale(den_lcm, num_gcd);
    scale.canonicalize();
    scale_row(i, LaurentPoly(scale));
  }

  // monic pivots keep the division quotients denominator-free
  void make_pivot_monic(int t) {
    const LaurentPoly& piv = a[static_cast<size_t>(t)][static_cast<size_t>(t)];
    if (piv.is_zero() || (piv.leading_coeff() == 1 && piv.lo() == 0)) return;
    scale_row(t, LaurentPoly::monomial(Rational(1) / piv.leading_coeff(), -piv.lo()));
  }
};

template <typename T>
std::vector<std::vector<T>> identity(int n, const T& one) {
  std::vector<std::vector<T>> id(static_cast<size_t>(n), std::vector<T>(static_cast<size_t>(n)));
  for (int i = 0; i < n; ++i) id[static_cast<size_t>(i)][static_cast<size_t>(i)] = one;
  return id;
}

}  // namespace

SnfIntResult snf_int(std::vector<std::vector<Integer>> m, bool with_transforms) {
  SnfIntResult res;
  const int rows = static_cast<int>(m.size());
  const int cols = rows == 0 ? 0 : static_cast<int>(m[0].size());
  if (with_transforms) {
    res.u = identity(rows, Integer(1));
    res.v = identity(cols, Integer(1));
  }
  IntOps ops{m, with_transforms ? &res.u : nullptr, with_transforms ? &res.v : nullptr, rows, cols};

  int t = 0;
  while (t < rows && t < cols) {
    // pivot: minimal |nonzero| in the submatrix, ties row-major
    int pi = -1, pj = -1;
    for (int i = t; i < rows; ++i)
      for (int j = t; j < cols; ++j) {
        const Integer& x = m[static_cast<size_t>(i)][static_cast<size_t>(j)];
        if (x == 0) continue;
        if (pi < 0 || cmp(abs(x), abs(m[static_cast<size_t>(pi)][static_cast<size_t>(pj)])) < 0) {
          pi = i;
          pj = j;
        }
      }
    if (pi < 0) break;
    ops.swap_rows(t, pi);
    ops.swap_cols(t, pj);
    for (;;) {
      bool again = false;
      for (int i = t + 1; i < rows; ++i) {
        const Integer& x = m[static_cast<size_t>(i)][static_cast<size_t>(t)];
        if (x == 0) continue;
        Integer f, r;
        mpz_fdiv_qr(f.get_mpz_t(), r.get_mpz_t(), x.get_mpz_t(),
                    m[static_cast<size_t>(t)][static_cast<size_t>(t)].get_mpz_t());
        ops.row_axpy(i, f, t);
        if (r != 0) {
          ops.swap_rows(t, i);
          again = true;
        }
      }
      for (int j = t + 1; j < cols; ++j) {
        const Integer& x = m[static_cast<size_t>(t)][static_cast<size_t>(j)];
        if (x == 0) continue;
        Integer f, r;
        mpz_fdiv_qr(f.get_mpz_t(), r.get_mpz_t(), x.get_mpz_t(),
                    m[static_cast<size_t>(t)][static_cast<size_t>(t)].get_mpz_t());
        ops.col_axpy(j, f, t);
        if (r != 0) {
          ops.swap_cols(t, j);
          again = true;
        }
      }
      if (again) continue;
      // divisibility sweep: pivot must divide the rest of the submatrix
      bool fixed = true;
      for (int i = t + 1; i < rows && fixed; ++i)
        for (int j = t + 1; j < cols && fixed; ++j)
          if (m[static_cast<size_t>(i)][static_cast<size_t>(j)] %
                  m[static_cast<size_t>(t)][static_cast<size_t>(t)] !=
              0) {
            ops.row_axpy(t, Integer(-1), i);  // add row i to the pivot row
            fixed = false;
          }
      if (fixed) break;
    }
    if (m[static_cast<size_t>(t)][static_cast<size_t>(t)] < 0) ops.negate_row(t);
    ++t;
  }
  for (int i = 0; i < t; ++i) res.diagonal.push_back(m[static_cast<size_t>(i)][static_cast<size_t>(i)]);
  res.rank = t;
  return res;
}

SnfPolyResult snf_poly(std::vector<std::vector<LaurentPoly>> m, bool with_transforms) {
  SnfPolyResult res;
  const int rows = static_cast<int>(m.size());
  const int cols = rows == 0 ? 0 : static_cast<int>(m[0].size());
  if (with_transforms) {
    res.u = identity(rows, LaurentPoly(1));
    res.v = identity(cols, LaurentPoly(1));
  }
  PolyOps ops{m, with_transforms ? &res.u : nullptr, with_transforms ? &res.v : nullptr, rows, cols};

  // clear rows to Q[q] (unit row operations)
  for (int i = 0; i < rows; ++i) {
    long lo = 0;
    bool any = false;
    for (int j = 0; j < cols; ++j)
      if (!m[static_cast<size_t>(i)][static_cast<size_t>(j)].is_zero()) {
        long l = m[static_cast<size_t>(i)][static_cast<size_t>(j)].lo();
        lo = any ? std::min(lo, l) : l;
        any = true;
      }
    if (any && lo != 0) ops.scale_row(i, LaurentPoly::q_power(-lo));
  }

  int t = 0;
  while (t < rows && t < cols) {
    int pi = -1, pj = -1;
    for (int i = t; i < rows; ++i)
      for (int j = t; j < cols; ++j) {
        const LaurentPoly& x = m[static_cast<size_t>(i)][static_cast<size_t>(j)];
        if (x.is_zero()) continue;
        if (pi < 0 || x.span() < m[static_cast<size_t>(pi)][static_cast<size_t>(pj)].span()) {
          pi = i;
          pj = j;
        }
      }
    if (pi < 0) break;
    ops.swap_rows(t, pi);
    ops.swap_cols(t, pj);
    for (;;) {
      bool again = false;
      ops.make_pivot_monic(t);
      for (int i = t + 1; i < rows; ++i) ops.extract_content(i, t);
      for (int i = t + 1; i < rows; ++i) {
        const LaurentPoly& x = m[static_cast<size_t>(i)][static_cast<size_t>(t)];
        if (x.is_zero()) continue;
        LaurentPoly f, r;
        LaurentPoly::poly_divmod(x, m[static_cast<size_t>(t)][static_cast<size_t>(t)], f, r);
        ops.row_axpy(i, f, t);
        if (!r.is_zero()) {
          ops.swap_rows(t, i);
          again = true;
        }
      }
      for (int j = t + 1; j < cols; ++j) {
        const LaurentPoly& x = m[static_cast<size_t>(t)][static_cast<size_t>(j)];
        if (x.is_zero()) continue;
        LaurentPoly f, r;
        LaurentPoly::poly_divmod(x, m[static_cast<size_t>(t)][static_cast<size_t>(t)], f, r);
        ops.col_axpy(j, f, t);
        if (!r.is_zero()) {
          ops.swap_cols(t, j);
          again = true;
        }
      }
      if (again) continue;
      bool fixed = true;
      for (int i = t + 1; i < rows && fixed; ++i)
        for (int j = t + 1; j < cols && fixed; ++j)
          if (!m[static_cast<size_t>(t)][static_cast<size_t>(t)].divides(
                  m[static_cast<size_t>(i)][static_cast<size_t>(j)])) {
            ops.row_axpy(t, LaurentPoly(-1), i);
            fixed = false;
          }
      if (fixed) break;
    }
    // normalize the pivot to a monic polynomial with nonzero constant term
    LaurentPoly& piv = m[static_cast<size_t>(t)][static_cast<size_t>(t)];
    LaurentPoly unit = LaurentPoly::monomial(Rational(1) / piv.leading_coeff(), -piv.lo());
    ops.scale_row(t, unit);
    ++t;
  }
  for (int i = 0; i < t; ++i) res.diagonal.push_back(m[static_cast<size_t>(i)][static_cast<size_t>(i)]);
  res.rank = t;
  return res;
}

HomologyTable homology_direct(const PolyChainComplex& c) {
  HomologyTable table;
  const int top = c.top_degree();
  table.free_rank.assign(static_cast<size_t>(top) + 1, 0);
  table.torsion.resize(static_cast<size_t>(top) + 1);

  std::vector<SnfPolyResult> snf(static_cast<size_t>(top) + 2);
  for (int k = 1; k <= top; ++k) snf[static_cast<size_t>(k)] = snf_poly(c.boundary[static_cast<size_t>(k)]);

  for (int k = 0; k <= top; ++k) {
    int rk = k >= 1 ? snf[static_cast<size_t>(k)].rank : 0;
    int rk1 = k + 1 <= top ? snf[static_cast<size_t>(k) + 1].rank : 0;
    table.free_rank[static_cast<size_t>(k)] = c.dim(k) - rk - rk1;
    if (k + 1 <= top)
      for (const auto& e : snf[static_cast<size_t>(k) + 1].diagonal) {
        if (e.is_unit()) continue;
        // primary decomposition of R/(e): one cyclic summand per phi_d power
        CyclotomicProfile profile = factor_cyclotomic(e);
        for (const auto& [d, exp] : profile.exponents) table.add_torsion(k, d, exp, 1);
      }
  }
  table.normalize();
  return table;
}

}  // namespace artin
