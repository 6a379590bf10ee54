#ifndef ARTIN_CATALOG_HPP
#define ARTIN_CATALOG_HPP

#include <tuple>

#include "artin/morse.hpp"

namespace artin {

struct BadParams : std::runtime_error {
  using std::runtime_error::runtime_error;
};

enum class Family { A, B, tA, tC };

std::string family_name(Family f);
CoxeterGraph family_graph(Family f, int n);

// The K_{n,f} matching: recursive steps (a)-(e), vertices 1..n of A_n mapped
// to bits 0..n-1. Domain: sigma containing {1..f}. For f >= d the leading
// floor(f/d)*d vertices are frozen in.
Matching matching_A(int n, int f, int d);

// B_n: for d odd, sigma <-> sigma xor {1}; for d even, the K_q recursion.
Matching matching_B(int n, int d);

// Affine families on vertices 0..n: partition by the lowest missing vertex h
// and pull the A_n (resp. B_n) matching back through the relabeling.
Matching matching_tA(int n, int d);
Matching matching_tC(int n, int d);

// The independence-complex matching on K', the positive-weight part of the
// full complex of A_n: toggle the d-th vertex of the first component with at
// least d-1 vertices. Domain: K' only.
Matching matching_A_independence(int n, int d);

Matching family_matching(Family f, int n, int d);

struct CatalogCell {
  Simplex cell;
  int degree = 0;
  int exponent = 0;
  bool operator==(const CatalogCell&) const = default;
};

// Closed-form critical cells from the tables, sorted by (degree, bitmask).
std::vector<CatalogCell> critical_A(int n, int f, int d);
std::vector<CatalogCell> critical_B(int n, int d);
std::vector<CatalogCell> critical_tA(int n, int d);
std::vector<CatalogCell> critical_tC(int n, int d);
std::vector<CatalogCell> critical_family(Family f, int n, int d);

// Positive-weight critical cells of matching_A_independence:
// tau ++ A_{d-1} on the last d-1 vertices, tau in Ind_{d-2}(A_{n-d}).
std::vector<CatalogCell> critical_A_independence(int n, int d);

// Closed-form nonzero incidence numbers [from : to]^M. For B_n and tC_n the
// signs are pinned; for tA_n only |incidence| = 1 is, so the value field
// carries 1 and callers compare absolute values.
struct CatalogIncidence {
  Simplex from;
  Simplex to;
  long long value = 0;
};
std::vector<CatalogIncidence> incidence_B(int n, int d);
std::vector<CatalogIncidence> incidence_tA(int n, int d);  // values are |.| = 1
std::vector<CatalogIncidence> incidence_tC(int n, int d);

}  // namespace artin

#endif
