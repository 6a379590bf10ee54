#include "artin/complexes.hpp"

#include <algorithm>
#include <map>

namespace artin {

int incidence(Simplex sigma, Simplex tau) {
  std::uint64_t diff = sigma.bits ^ tau.bits;
  if (!tau.subset_of(sigma) || std::popcount(diff) != 1) return 0;
  int v = std::countr_zero(diff);
  int below = std::popcount(sigma.bits & ((std::uint64_t(1) << v) - 1));
  return (below % 2 == 0) ? 1 : -1;
}

namespace {

std::vector<std::vector<Simplex>> group_by_degree(std::vector<Simplex> simplices) {
  std::sort(simplices.begin(), simplices.end());
  int top = 0;
  for (Simplex s : simplices) top = std::max(top, s.degree());
  std::vector<std::vector<Simplex>> basis(static_cast<size_t>(top) + 1);
  for (Simplex s : simplices) basis[static_cast<size_t>(s.degree())].push_back(s);
  return basis;
}

std::map<Simplex, int> index_of(const std::vector<Simplex>& basis) {
  std::map<Simplex, int> idx;
  for (size_t i = 0; i < basis.size(); ++i) idx[basis[i]] = static_cast<int>(i);
  return idx;
}

}  // namespace

IntChainComplex build_int_complex(const std::vector<Simplex>& simplices) {
  IntChainComplex c;
  c.basis = group_by_degree(simplices);
  c.boundary.resize(c.basis.size());
  for (size_t k = 1; k < c.basis.size(); ++k) {
    auto idx = index_of(c.basis[k - 1]);
    IntMatrix m(c.basis[k - 1].size(), std::vector<long long>(c.basis[k].size(), 0));
    for (size_t j = 0; j < c.basis[k].size(); ++j) {
      Simplex s = c.basis[k][j];
      std::uint64_t rest = s.bits;
      while (rest) {
        int v = std::countr_zero(rest);
        rest &= rest - 1;
        auto it = idx.find(s.without(v));
        if (it != idx.end())
          m[static_cast<size_t>(it->second)][j] = incidence(s, s.without(v));
      }
    }
    c.boundary[k] = std::move(m);
  }
  return c;
}

IntChainComplex build_C0(const CoxeterGraph& g) { return build_int_complex(spherical_complex(g)); }

PolyChainComplex build_C(const CoxeterGraph& g) {
  PolyChainComplex c;
  c.basis = group_by_degree(spherical_complex(g));
  c.boundary.resize(c.basis.size());
  std::vector<std::map<Simplex, LaurentPoly>> weights(c.basis.size());
  for (size_t k = 0; k < c.basis.size(); ++k)
    for (Simplex s : c.basis[k]) weights[k][s] = poincare_polynomial(g, s);
  for (size_t k = 1; k < c.basis.size(); ++k) {
    auto idx = index_of(c.basis[k - 1]);
    std::vector<std::vector<LaurentPoly>> m(
        c.basis[k - 1].size(), std::vector<LaurentPoly>(c.basis[k].size()));
    for (size_t j = 0; j < c.basis[k].size(); ++j) {
      Simplex s = c.basis[k][j];
      const LaurentPoly& ws = weights[k][s];
      std::uint64_t rest = s.bits;
      while (rest) {
        int v = std::countr_zero(rest);
        rest &= rest - 1;
        Simplex t = s.without(v);
        auto it = idx.find(t);
        if (it == idx.end()) continue;
        LaurentPoly ratio = LaurentPoly::exact_div(ws, weights[k - 1][t]);
        m[static_cast<size_t>(it->second)][j] = ratio.scaled(Rational(incidence(s, t)));
      }
    }
    c.boundary[k] = std::move(m);
  }
  return c;
}

PhiWeightedComplex build_Lphi(const CoxeterGraph& g, int d) {
  PhiWeightedComplex c;
  c.d = d;
  std::vector<Simplex> positive;
  std::map<Simplex, int> expo;
  for (Simplex s : spherical_complex(g)) {
    int v = weight_exponent(g, s, d);
    if (v >= 1) {
      positive.push_back(s);
      expo[s] = v;
    }
  }
  auto by_degree = group_by_degree(positive);
  c.cells.resize(by_degree.size());
  for (size_t k = 0; k < by_degree.size(); ++k)
    for (Simplex s : by_degree[k]) c.cells[k].emplace_back(s, expo[s]);
  c.boundary.resize(c.cells.size());
  for (size_t k = 1; k < c.cells.size(); ++k) {
    std::map<Simplex, int> idx;
    for (size_t i = 0; i < c.cells[k - 1].size(); ++i) idx[c.cells[k - 1][i].first] = static_cast<int>(i);
    IntMatrix m(c.cells[k - 1].size(), std::vector<long long>(c.cells[k].size(), 0));
    for (size_t j = 0; j < c.cells[k].size(); ++j) {
      Simplex s = c.cells[k][j].first;
      std::uint64_t rest = s.bits;
      while (rest) {
        int v = std::countr_zero(rest);
        rest &= rest - 1;
        auto it = idx.find(s.without(v));
        if (it != idx.end())
          m[static_cast<size_t>(it->second)][j] = incidence(s, s.without(v));
      }
    }
    c.boundary[k] = std::move(m);
  }
  return c;
}

std::vector<Simplex> filtration_subcomplex(const CoxeterGraph& g, int d, int s) {
  if (s < 0) throw BadInput("filtration level must be >= 0");
  std::vector<Simplex> out;
  for (Simplex sg : spherical_complex(g))
    if (weight_exponent(g, sg, d) <= s) out.push_back(sg);
  return out;
}

std::vector<E1Entry> e1_page(const CoxeterGraph& g, int d) {
  // group the v = p simplices per p and take homology ranks of the integer
  // quotient complexes (every nonzero rational is a unit in R/(phi^p))
  std::map<int, std::vector<Simplex>> levels;
  for (Simplex s : spherical_complex(g)) {
    int v = weight_exponent(g, s, d);
    if (v >= 1) levels[v].push_back(s);
  }
  std::vector<E1Entry> out;
  for (const auto& [p, cells] : levels) {
    auto ranks = homology_ranks(build_int_complex(cells));
    for (size_t m = 0; m < ranks.size(); ++m)
      if (ranks[m] > 0) out.push_back({p, static_cast<int>(m) - p, ranks[m]});
  }
  std::sort(out.begin(), out.end(), [](const E1Entry& a, const E1Entry& b) {
    return a.p != b.p ? a.p < b.p : a.q < b.q;
  });
  return out;
}

std::vector<int> homology_ranks(const IntChainComplex& c) {
  std::vector<int> ranks(c.basis.size(), 0);
  std::vector<int> b(c.basis.size() + 1, 0);  // b[k] = rank of boundary[k]
  for (size_t k = 1; k < c.basis.size(); ++k) b[k] = rank_over_q(c.boundary[k]);
  for (size_t k = 0; k < c.basis.size(); ++k)
    ranks[k] = c.dim(static_cast<int>(k)) - b[k] - b[k + 1];
  return ranks;
}

}  // namespace artin
