#ifndef ARTIN_COMPLEXES_HPP
#define ARTIN_COMPLEXES_HPP

#include <vector>

#include "artin/coxeter.hpp"
#include "artin/linalg.hpp"

namespace artin {

// Incidence number [sigma : tau]: (-1)^{#{w in sigma : w < v}} when
// tau = sigma \ {v}, else 0.
int incidence(Simplex sigma, Simplex tau);

// The 1-shifted simplicial chain complex C^0_*: degree k is spanned by the
// simplices of cardinality k (the empty simplex sits in degree 0). Basis
// order within a degree is ascending bitmask.
struct IntChainComplex {
  std::vector<std::vector<Simplex>> basis;  // basis[k]
  std::vector<IntMatrix> boundary;          // boundary[k]: C_k -> C_{k-1}; boundary[0] empty

  int top_degree() const { return static_cast<int>(basis.size()) - 1; }
  int dim(int k) const {
    return (k < 0 || k > top_degree()) ? 0 : static_cast<int>(basis[static_cast<size_t>(k)].size());
  }
};

struct PolyChainComplex {
  std::vector<std::vector<Simplex>> basis;
  std::vector<std::vector<std::vector<LaurentPoly>>> boundary;  // as above, entries in R

  int top_degree() const { return static_cast<int>(basis.size()) - 1; }
  int dim(int k) const {
    return (k < 0 || k > top_degree()) ? 0 : static_cast<int>(basis[static_cast<size_t>(k)].size());
  }
};

// phi_d-primary weighted complex: only the simplices of positive exponent
// survive (R/(1) = 0), with the integer incidence boundary between them.
struct PhiWeightedComplex {
  int d = 2;
  std::vector<std::vector<std::pair<Simplex, int>>> cells;  // (sigma, v >= 1) per degree
  std::vector<IntMatrix> boundary;

  int top_degree() const { return static_cast<int>(cells.size()) - 1; }
};

// Build from an arbitrary set of simplices, closed under faces except that
// missing faces simply drop out of the boundary (used for L_phi quotients and
// independence complexes as well as full spherical complexes).
IntChainComplex build_int_complex(const std::vector<Simplex>& simplices);

IntChainComplex build_C0(const CoxeterGraph& g);
PolyChainComplex build_C(const CoxeterGraph& g);
PhiWeightedComplex build_Lphi(const CoxeterGraph& g, int d);

// K_{phi,s} = {sigma : v_phi(sigma) <= s}; closed under faces by weight
// monotonicity.
std::vector<Simplex> filtration_subcomplex(const CoxeterGraph& g, int d, int s);

// E^1_{p,q} of the weight filtration: homology ranks over Q of the quotient
// complexes F^p/F^{p-1} (free over R/(phi^p) on the v = p simplices). Entries
// with rank 0 are omitted.
struct E1Entry {
  int p = 0;
  int q = 0;
  int rank = 0;
  bool operator==(const E1Entry&) const = default;
};
std::vector<E1Entry> e1_page(const CoxeterGraph& g, int d);

// Betti numbers over Q, degree by degree.
std::vector<int> homology_ranks(const IntChainComplex& c);

}  // namespace artin

#endif
