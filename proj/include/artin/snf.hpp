#ifndef ARTIN_SNF_HPP
#define ARTIN_SNF_HPP

#include "artin/cyclotomic.hpp"
#include "artin/morse.hpp"

namespace artin {

// Smith normal form diagonals with the divisibility chain d_1 | d_2 | ...
// rank = number of nonzero diagonal entries. When transforms are requested,
// diag(d_1..d_r) = U * M * V with U, V unimodular.
struct SnfIntResult {
  std::vector<Integer> diagonal;  // nonzero entries only, nonnegative
  int rank = 0;
  std::vector<std::vector<Integer>> u, v;  // empty unless requested
};

struct SnfPolyResult {
  std::vector<LaurentPoly> diagonal;  // monic, constant term != 0 ("1" for units)
  int rank = 0;
  std::vector<std::vector<LaurentPoly>> u, v;
};

SnfIntResult snf_int(std::vector<std::vector<Integer>> m, bool with_transforms = false);

// SNF over R = Q[q^{+-1}]: rows are cleared to Q[q] by q-power units, then
// Euclidean reduction with the minimal-degree pivot (ties by position).
SnfPolyResult snf_poly(std::vector<std::vector<LaurentPoly>> m, bool with_transforms = false);

// Direct homology of the R-coefficient complex, bypassing Morse theory:
// H_k = R^{dim_k - rk d_k - rk d_{k+1}} (+) sum_i R/(e_i(d_{k+1})), with each
// torsion divisor split into primary parts through factor_cyclotomic.
// Throws NonCyclotomicFactor if a divisor leaves the cyclotomic weight class.
HomologyTable homology_direct(const PolyChainComplex& c);

}  // namespace artin

#endif
