#include "artin/morse.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace artin {

namespace {

std::vector<Simplex> domain_poset(const CoxeterGraph& g, const Matching& m) {
  std::vector<Simplex> out;
  for (Simplex s : spherical_complex(g))
    if (m.in_domain(s)) out.push_back(s);
  return out;
}

void check_pairing(const std::vector<Simplex>& poset, const Matching& m) {
  std::map<Simplex, char> in_poset;
  for (Simplex s : poset) in_poset[s] = 1;
  for (Simplex s : poset) {
    auto p = m.partner(s);
    if (!p) continue;
    if (std::popcount(s.bits ^ p->bits) != 1)
      throw NotAMatching("matched pair does not differ by one vertex: " +
                         std::to_string(s.bits) + " <-> " + std::to_string(p->bits));
    if (!in_poset.count(*p)) throw NotAMatching("partner outside the poset");
    auto back = m.partner(*p);
    if (!back || *back != s) throw NotAMatching("partner map is not an involution");
  }
}

// facets of s inside the poset
template <typename Fn>
void for_facets(const std::map<Simplex, int>& index, Simplex s, Fn&& fn) {
  std::uint64_t rest = s.bits;
  while (rest) {
    int v = std::countr_zero(rest);
    rest &= rest - 1;
    auto it = index.find(s.without(v));
    if (it != index.end()) fn(it->first, it->second);
  }
}

}  // namespace

bool verify_acyclic(const std::vector<Simplex>& poset, const Matching& m) {
  check_pairing(poset, m);
  // Modified Hasse diagram: down-edges sigma -> tau on cover relations,
  // reversed for matched pairs. DFS cycle detection.
  std::map<Simplex, int> index;
  for (size_t i = 0; i < poset.size(); ++i) index[poset[i]] = static_cast<int>(i);
  const int n = static_cast<int>(poset.size());
  std::vector<std::vector<int>> adj(static_cast<size_t>(n));
  for (int i = 0; i < n; ++i) {
    Simplex s = poset[static_cast<size_t>(i)];
    auto p = m.partner(s);
    for_facets(index, s, [&](Simplex t, int j) {
      if (p && *p == t) return;  // matched downward: edge reversed below
      adj[static_cast<size_t>(i)].push_back(j);
    });
    if (p && p->degree() == s.degree() + 1) adj[static_cast<size_t>(i)].push_back(index[*p]);
  }
  std::vector<int> state(static_cast<size_t>(n), 0);  // 0 new, 1 active, 2 done
  std::vector<std::pair<int, size_t>> stack;
  for (int start = 0; start < n; ++start) {
    if (state[static_cast<size_t>(start)]) continue;
    stack.push_back({start, 0});
    state[static_cast<size_t>(start)] = 1;
    while (!stack.empty()) {
      auto& [u, next] = stack.back();
      if (next < adj[static_cast<size_t>(u)].size()) {
        int w = adj[static_cast<size_t>(u)][next++];
        if (state[static_cast<size_t>(w)] == 1) return false;
        if (state[static_cast<size_t>(w)] == 0) {
          state[static_cast<size_t>(w)] = 1;
          stack.push_back({w, 0});
        }
      } else {
        state[static_cast<size_t>(u)] = 2;
        stack.pop_back();
      }
    }
  }
  return true;
}

bool verify_acyclic(const CoxeterGraph& g, const Matching& m) {
  return verify_acyclic(domain_poset(g, m), m);
}

bool verify_weighted(const CoxeterGraph& g, const Matching& m, int d) {
  for (Simplex s : domain_poset(g, m)) {
    auto p = m.partner(s);
    if (p && weight_exponent(g, s, d) != weight_exponent(g, *p, d)) return false;
  }
  return true;
}

std::vector<AltPath> alternating_paths(const std::vector<Simplex>& poset, const Matching& m,
                                       Simplex from, Simplex to) {
  std::map<Simplex, int> index;
  for (size_t i = 0; i < poset.size(); ++i) index[poset[i]] = static_cast<int>(i);
  const size_t max_len = 2 * poset.size() + 4;
  std::vector<AltPath> out;
  AltPath cur;
  cur.cells.push_back(from);

  // walk(tau, sign): path so far ends ... |> tau with accumulated sign
  std::function<void(Simplex, long long)> walk = [&](Simplex tau, long long sign) {
    if (cur.cells.size() > max_len)
      throw NonTerminating("alternating path exceeds 2|K|; matching not acyclic?");
    cur.cells.push_back(tau);
    if (tau == to) {
      out.push_back({cur.cells, sign});
    } else {
      auto up = m.partner(tau);
      if (up && up->degree() == tau.degree() + 1) {
        Simplex s = *up;
        cur.cells.push_back(s);
        for_facets(index, s, [&](Simplex t, int) {
          if (t == tau) return;
          walk(t, -sign * incidence(s, tau) * incidence(s, t));
        });
        cur.cells.pop_back();
      }
    }
    cur.cells.pop_back();
  };

  for_facets(index, from, [&](Simplex t, int) { walk(t, incidence(from, t)); });
  return out;
}

namespace {

// Signed path-count vectors: for each simplex tau, the sum over alternating
// path tails starting "... |> tau" of the signed contribution to each
// reachable critical cell one degree below `from`'s facets. Memoized per
// morse_complex build; an in-progress re-entry means a directed cycle.
class PathCounter {
 public:
  PathCounter(const std::map<Simplex, int>& index, const Matching& m)
      : index_(index), m_(m) {}

  const std::map<Simplex, long long>& counts(Simplex tau) {
    auto it = memo_.find(tau);
    if (it != memo_.end()) {
      if (it->second.state == kActive)
        throw NonTerminating("directed cycle while counting alternating paths");
      return it->second.vec;
    }
    Entry& e = memo_[tau];  // std::map references stay valid across recursion
    e.state = kActive;
    std::map<Simplex, long long> acc;
    if (m_.is_critical(tau)) {
      acc[tau] = 1;
    } else {
      auto up = m_.partner(tau);
      if (up && up->degree() == tau.degree() + 1) {
        Simplex s = *up;
        long long base = -static_cast<long long>(incidence(s, tau));
        for_facets(index_, s, [&](Simplex t, int) {
          if (t == tau) return;
          long long f = base * incidence(s, t);
          for (const auto& [crit, cnt] : counts(t)) acc[crit] += f * cnt;
        });
      }
      // matched downward: no alternating continuation
    }
    e.vec = std::move(acc);
    e.state = kDone;
    return e.vec;
  }

 private:
  enum State { kActive, kDone };
  struct Entry {
    State state = kActive;
    std::map<Simplex, long long> vec;
  };
  const std::map<Simplex, int>& index_;
  const Matching& m_;
  std::map<Simplex, Entry> memo_;
};

}  // namespace

long long morse_incidence(const std::vector<Simplex>& poset, const Matching& m, Simplex from,
                          Simplex to) {
  std::map<Simplex, int> index;
  for (size_t i = 0; i < poset.size(); ++i) index[poset[i]] = static_cast<int>(i);
  PathCounter pc(index, m);
  long long total = 0;
  for_facets(index, from, [&](Simplex t, int) {
    const auto& counts = pc.counts(t);
    auto it = counts.find(to);
    if (it != counts.end()) total += incidence(from, t) * it->second;
  });
  return total;
}

std::optional<std::pair<int, int>> MorseComplex::find(Simplex s) const {
  for (size_t k = 0; k < cells.size(); ++k)
    for (size_t i = 0; i < cells[k].size(); ++i)
      if (cells[k][i].cell == s) return std::make_pair(static_cast<int>(k), static_cast<int>(i));
  return std::nullopt;
}

MorseComplex morse_complex(const CoxeterGraph& g, const Matching& m, int d) {
  auto poset = domain_poset(g, m);
  if (!verify_acyclic(poset, m)) throw NotAMatching("matching is not acyclic");
  if (d > 0 && !verify_weighted(g, m, d)) throw NotAMatching("matching is not weighted");

  MorseComplex mc;
  mc.d = d;
  int top = 0;
  std::vector<Simplex> criticals;
  for (Simplex s : poset)
    if (m.is_critical(s)) {
      criticals.push_back(s);
      top = std::max(top, s.degree());
    }
  mc.cells.resize(criticals.empty() ? 0 : static_cast<size_t>(top) + 1);
  for (Simplex s : criticals)
    mc.cells[static_cast<size_t>(s.degree())].push_back(
        {s, d > 0 ? weight_exponent(g, s, d) : 0});
  for (auto& level : mc.cells)
    std::sort(level.begin(), level.end(),
              [](const CriticalCell& a, const CriticalCell& b) { return a.cell < b.cell; });

  std::map<Simplex, int> index;
  for (size_t i = 0; i < poset.size(); ++i) index[poset[i]] = static_cast<int>(i);
  PathCounter pc(index, m);

  mc.boundary.resize(mc.cells.size());
  for (size_t k = 1; k < mc.cells.size(); ++k) {
    IntMatrix mat(mc.cells[k - 1].size(), std::vector<long long>(mc.cells[k].size(), 0));
    std::map<Simplex, int> lower;
    for (size_t i = 0; i < mc.cells[k - 1].size(); ++i) lower[mc.cells[k - 1][i].cell] = static_cast<int>(i);
    for (size_t j = 0; j < mc.cells[k].size(); ++j) {
      Simplex s = mc.cells[k][j].cell;
      for_facets(index, s, [&](Simplex t, int) {
        long long f = incidence(s, t);
        for (const auto& [crit, cnt] : pc.counts(t)) {
          auto it = lower.find(crit);
          if (it != lower.end()) mat[static_cast<size_t>(it->second)][j] += f * cnt;
        }
      });
    }
    mc.boundary[k] = std::move(mat);
  }
  return mc;
}

bool verify_precise(const MorseComplex& mc) {
  for (size_t k = 1; k < mc.cells.size(); ++k)
    for (size_t j = 0; j < mc.cells[k].size(); ++j)
      for (size_t i = 0; i < mc.cells[k - 1].size(); ++i)
        if (mc.boundary[k][i][j] != 0 &&
            mc.cells[k][j].exponent != mc.cells[k - 1][i].exponent + 1)
          return false;
  return true;
}

ComponentDecomposition decompose_components(const MorseComplex& mc) {
  // union-find over (degree, index), joined along nonzero incidences
  std::vector<std::pair<int, int>> nodes;
  std::map<std::pair<int, int>, int> id;
  for (int k = 0; k <= mc.top_degree(); ++k)
    for (int i = 0; i < mc.dim(k); ++i) {
      id[{k, i}] = static_cast<int>(nodes.size());
      nodes.push_back({k, i});
    }
  std::vector<int> parent(nodes.size());
  for (size_t i = 0; i < parent.size(); ++i) parent[i] = static_cast<int>(i);
  std::function<int(int)> find = [&](int x) {
    while (parent[static_cast<size_t>(x)] != x) {
      parent[static_cast<size_t>(x)] = parent[static_cast<size_t>(parent[static_cast<size_t>(x)])];
      x = parent[static_cast<size_t>(x)];
    }
    return x;
  };
  for (size_t k = 1; k < mc.cells.size(); ++k)
    for (size_t j = 0; j < mc.cells[k].size(); ++j)
      for (size_t i = 0; i < mc.cells[k - 1].size(); ++i)
        if (mc.boundary[k][i][j] != 0) {
          int a = find(id[{static_cast<int>(k), static_cast<int>(j)}]);
          int b = find(id[{static_cast<int>(k) - 1, static_cast<int>(i)}]);
          if (a != b) parent[static_cast<size_t>(a)] = b;
        }
  std::map<int, int> roots;
  ComponentDecomposition out;
  for (size_t i = 0; i < nodes.size(); ++i) {
    int r = find(static_cast<int>(i));
    auto it = roots.find(r);
    if (it == roots.end()) {
      roots[r] = static_cast<int>(out.components.size());
      out.components.emplace_back();
      auto [k, idx] = nodes[i];
      out.offsets.push_back(mc.cells[static_cast<size_t>(k)][static_cast<size_t>(idx)].exponent - k);
    }
    out.components[static_cast<size_t>(roots[r])].push_back(nodes[i]);
  }
  return out;
}

bool collapse_check(const CoxeterGraph& g, const Matching& m, int d) {
  MorseComplex mc = morse_complex(g, m, d);
  auto comps = decompose_components(mc);
  for (size_t c = 0; c < comps.components.size(); ++c)
    for (auto [k, i] : comps.components[c]) {
      int p = mc.cells[static_cast<size_t>(k)][static_cast<size_t>(i)].exponent;
      if (k != p - comps.offsets[c]) return false;
    }
  return true;
}

PhiHomology homology_L_phi(const MorseComplex& mc) {
  if (!verify_precise(mc)) throw NotPrecise("matching is not precise");
  PhiHomology h;
  h.by_degree.resize(mc.cells.size());
  auto comps = decompose_components(mc);
  std::vector<int> delta_rank(mc.cells.size() + 1, 0);
  for (size_t k = 1; k < mc.cells.size(); ++k)
    delta_rank[k] = rank_over_q(mc.boundary[k]);

  std::map<std::pair<int, int>, int> summands;  // (degree, exponent) -> mult
  for (size_t c = 0; c < comps.components.size(); ++c) {
    // restrict the unweighted Morse complex to the component
    std::map<int, std::vector<int>> cols;  // degree -> indices within mc
    for (auto [k, i] : comps.components[c]) cols[k].push_back(i);
    std::map<int, int> comp_rank;
    for (const auto& [k, idx] : cols) {
      if (k == 0 || !cols.count(k - 1)) continue;
      const auto& rows = cols.at(k - 1);
      IntMatrix sub(rows.size(), std::vector<long long>(idx.size(), 0));
      for (size_t j = 0; j < idx.size(); ++j)
        for (size_t i2 = 0; i2 < rows.size(); ++i2)
          sub[i2][j] = mc.boundary[static_cast<size_t>(k)][static_cast<size_t>(rows[i2])]
                                  [static_cast<size_t>(idx[j])];
      comp_rank[k] = rank_over_q(sub);
    }
    for (const auto& [k, idx] : cols) {
      int hm = static_cast<int>(idx.size()) - (comp_rank.count(k) ? comp_rank[k] : 0) -
               (comp_rank.count(k + 1) ? comp_rank[k + 1] : 0);
      int exp = k + comps.offsets[c];
      if (hm > 0 && exp > 0) summands[{k, exp}] += hm;
    }
  }
  for (size_t k = 0; k < mc.cells.size(); ++k)
    if (delta_rank[k] > 0) summands[{static_cast<int>(k), 1}] += delta_rank[k];
  for (const auto& [key, mult] : summands)
    h.by_degree[static_cast<size_t>(key.first)].push_back({key.second, mult});
  for (auto& level : h.by_degree)
    std::sort(level.begin(), level.end(),
              [](const PhiSummand& a, const PhiSummand& b) { return a.exp < b.exp; });
  return h;
}

void HomologyTable::add_torsion(int degree, int d, int exp, int mult) {
  if (degree >= static_cast<int>(torsion.size())) {
    torsion.resize(static_cast<size_t>(degree) + 1);
    free_rank.resize(static_cast<size_t>(degree) + 1, 0);
  }
  torsion[static_cast<size_t>(degree)].push_back({d, exp, mult});
}

void HomologyTable::normalize() {
  size_t n = std::max(free_rank.size(), torsion.size());
  free_rank.resize(n, 0);
  torsion.resize(n);
  for (auto& level : torsion) {
    std::map<std::pair<int, int>, int> acc;
    for (const auto& t : level) acc[{t.d, t.exp}] += t.mult;
    level.clear();
    for (const auto& [key, mult] : acc)
      if (mult > 0) level.push_back({key.first, key.second, mult});
  }
  while (!torsion.empty() && torsion.back().empty() && free_rank.back() == 0) {
    torsion.pop_back();
    free_rank.pop_back();
  }
}

int HomologyTable::torsion_mult(int degree, int d) const {
  if (degree < 0 || degree >= static_cast<int>(torsion.size())) return 0;
  int m = 0;
  for (const auto& t : torsion[static_cast<size_t>(degree)])
    if (t.d == d) m += t.mult;
  return m;
}

std::string HomologyTable::str() const {
  std::ostringstream os;
  for (size_t m = 0; m < torsion.size(); ++m) {
    os << "H_" << m << " = ";
    bool first = true;
    if (free_rank[m] > 0) {
      os << "R";
      if (free_rank[m] > 1) os << "^" << free_rank[m];
      first = false;
    }
    for (const auto& t : torsion[m]) {
      if (!first) os << " + ";
      os << "(R/(phi_" << t.d;
      if (t.exp > 1) os << "^" << t.exp;
      os << "))";
      if (t.mult > 1) os << "^" << t.mult;
      first = false;
    }
    if (first) os << "0";
    os << "\n";
  }
  return os.str();
}

HomologyTable homology_artin(const CoxeterGraph& g,
                             const std::function<Matching(int)>& matching_provider) {
  HomologyTable table;
  auto c0_ranks = homology_ranks(build_C0(g));
  table.free_rank.assign(static_cast<size_t>(g.size()) + 1, 0);
  table.torsion.resize(static_cast<size_t>(g.size()) + 1);
  for (size_t m = 0; m < c0_ranks.size(); ++m) table.free_rank[m] = c0_ranks[m];

  int dmax = max_weighted_d(g);
  for (int d = 2; d <= dmax; ++d) {
    MorseComplex mc = morse_complex(g, matching_provider(d), d);
    if (!verify_precise(mc)) throw NotPrecise("catalog matching not precise for d=" + std::to_string(d));
    for (int m = 0; m + 1 <= mc.top_degree(); ++m) {
      int rank = rank_over_q(mc.boundary[static_cast<size_t>(m) + 1]);
      if (rank > 0) table.add_torsion(m, d, 1, rank);
    }
  }
  table.normalize();
  return table;
}

}  // namespace artin
