#ifndef ARTIN_INDEPENDENCE_HPP
#define ARTIN_INDEPENDENCE_HPP

#include <map>

#include "artin/coxeter.hpp"

namespace artin {

struct SimpleGraph {
  int n = 0;
  std::vector<std::uint64_t> adj;  // neighbor mask per vertex

  static SimpleGraph path(int n);  // the graph underlying A_n (may be empty)
  static SimpleGraph from_coxeter(const CoxeterGraph& g);
  void add_edge(int i, int j);
  bool adjacent(int i, int j) const { return (adj[static_cast<size_t>(i)] >> j) & 1; }
};

// Ind_r(G): nonempty vertex subsets whose induced components have <= r
// vertices; dimension of a simplex is |sigma| - 1. Ind_0 is empty.
struct IndComplex {
  int n_vertices = 0;
  int r = 0;
  std::vector<Simplex> simplices;  // nonempty, ascending bitmask
};

IndComplex ind_complex(const SimpleGraph& g, int r);

bool ind_contains(const SimpleGraph& g, int r, Simplex s);

// Reduced Betti numbers over Q, keyed by reduced degree (so the empty complex
// has exactly {-1: 1}). Zero entries are omitted.
std::map<int, int> reduced_betti(const IndComplex& c);

// Localized braid correspondence: the phi_d-torsion multiplicities of
// H_*(Br_{n+1}; R) against the shifted reduced Betti numbers of
// Ind_{d-2}(A_{n-d}), all degrees at once.
bool check_braid_correspondence(int n, int d);

}  // namespace artin

#endif
