#include "artin/independence.hpp"

#include <algorithm>

#include "artin/catalog.hpp"
#include "artin/complexes.hpp"
#include "artin/morse.hpp"

namespace artin {

SimpleGraph SimpleGraph::path(int n) {
  SimpleGraph g;
  g.n = n;
  g.adj.assign(static_cast<size_t>(n), 0);
  for (int i = 0; i + 1 < n; ++i) g.add_edge(i, i + 1);
  return g;
}

SimpleGraph SimpleGraph::from_coxeter(const CoxeterGraph& cg) {
  SimpleGraph g;
  g.n = cg.size();
  g.adj.assign(static_cast<size_t>(g.n), 0);
  for (int i = 0; i < g.n; ++i)
    for (int j = i + 1; j < g.n; ++j)
      if (cg.adjacent(i, j)) g.add_edge(i, j);
  return g;
}

void SimpleGraph::add_edge(int i, int j) {
  adj[static_cast<size_t>(i)] |= std::uint64_t(1) << j;
  adj[static_cast<size_t>(j)] |= std::uint64_t(1) << i;
}

bool ind_contains(const SimpleGraph& g, int r, Simplex s) {
  if (s.empty() || r <= 0) return false;
  std::uint64_t left = s.bits;
  while (left) {
    int v = std::countr_zero(left);
    std::uint64_t comp = std::uint64_t(1) << v;
    left &= ~comp;
    for (;;) {  // grow the component within s
      std::uint64_t grow = 0;
      std::uint64_t cur = comp;
      while (cur) {
        int w = std::countr_zero(cur);
        cur &= cur - 1;
        grow |= g.adj[static_cast<size_t>(w)] & s.bits;
      }
      grow &= ~comp;
      if (!grow) break;
      comp |= grow;
      left &= ~grow;
    }
    if (std::popcount(comp) > r) return false;
  }
  return true;
}

IndComplex ind_complex(const SimpleGraph& g, int r) {
  if (r < 0) throw BadInput("ind_complex: r must be >= 0");
  IndComplex c;
  c.n_vertices = g.n;
  c.r = r;
  if (g.n == 0 || r == 0) return c;
  std::uint64_t full = (std::uint64_t(1) << g.n) - 1;
  for (std::uint64_t b = 1; b <= full; ++b)
    if (ind_contains(g, r, Simplex(b))) c.simplices.push_back(Simplex(b));
  return c;
}

std::map<int, int> reduced_betti(const IndComplex& c) {
  // augmented chain complex = the 1-shifted complex on simplices + the empty
  // simplex; reduced degree p sits in chain degree p+1
  std::vector<Simplex> with_empty = c.simplices;
  with_empty.push_back(Simplex());
  auto ranks = homology_ranks(build_int_complex(with_empty));
  std::map<int, int> out;
  for (size_t k = 0; k < ranks.size(); ++k)
    if (ranks[k] > 0) out[static_cast<int>(k) - 1] = ranks[k];
  return out;
}

bool check_braid_correspondence(int n, int d) {
  if (n < 1 || d < 2) throw BadInput("check_braid_correspondence: bad (n, d)");
  std::map<int, int> left;  // m -> multiplicity of phi_d in H_m(Br_{n+1}; R)
  auto graph = CoxeterGraph::type_A(n);
  auto table = homology_artin(graph, [n](int dd) { return matching_A(n, 0, dd); });
  for (int m = 0; m < static_cast<int>(table.torsion.size()); ++m)
    if (int mult = table.torsion_mult(m, d); mult > 0) left[m] = mult;

  std::map<int, int> right;  // m -> reduced Betti of Ind_{d-2}(A_{n-d}) at m-d+1
  // n = d-1 leaves the empty complex (its (-1)-class matches the k=1 torsion);
  // below that there is no complex at all and the correspondence is 0 = 0
  if (n - d >= -1) {
    auto betti = reduced_betti(ind_complex(SimpleGraph::path(std::max(0, n - d)), d - 2));
    for (const auto& [deg, rank] : betti) right[deg + d - 1] = rank;
  }
  return left == right;
}

}  // namespace artin
