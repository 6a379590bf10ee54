#include "artin/coxeter.hpp"

#include <algorithm>
#include <numeric>

#include "artin/cyclotomic.hpp"
#include "json.hpp"

namespace artin {

CoxeterGraph::CoxeterGraph(int n_vertices) : n_(n_vertices) {
  if (n_ < 1 || n_ > 62) throw BadInput("vertex count out of range");
  m_.assign(static_cast<size_t>(n_) * n_, 2);
  for (int i = 0; i < n_; ++i) m_[static_cast<size_t>(i) * n_ + i] = 1;
}

int CoxeterGraph::bond(int i, int j) const {
  return m_[static_cast<size_t>(i) * n_ + static_cast<size_t>(j)];
}

void CoxeterGraph::set_bond(int i, int j, int m) {
  if (i == j || i < 0 || j < 0 || i >= n_ || j >= n_) throw BadInput("bad edge");
  if (m != kInfiniteBond && m < 2) throw BadInput("bond label must be >= 2 or inf");
  m_[static_cast<size_t>(i) * n_ + j] = m;
  m_[static_cast<size_t>(j) * n_ + i] = m;
}

CoxeterGraph CoxeterGraph::type_A(int n) {
  CoxeterGraph g(n);
  for (int i = 0; i + 1 < n; ++i) g.set_bond(i, i + 1, 3);
  return g;
}

CoxeterGraph CoxeterGraph::type_B(int n) {
  CoxeterGraph g = type_A(n);
  if (n >= 2) g.set_bond(0, 1, 4);
  return g;
}

CoxeterGraph CoxeterGraph::affine_A(int n) {
  if (n < 2) throw BadInput("affine_A needs n >= 2");
  CoxeterGraph g(n + 1);
  for (int i = 0; i <= n; ++i) g.set_bond(i, (i + 1) % (n + 1), 3);
  return g;
}

CoxeterGraph CoxeterGraph::affine_C(int n) {
  if (n < 2) throw BadInput("affine_C needs n >= 2");
  CoxeterGraph g(n + 1);
  for (int i = 0; i < n; ++i) g.set_bond(i, i + 1, 3);
  g.set_bond(0, 1, 4);
  g.set_bond(n - 1, n, 4);
  return g;
}

CoxeterGraph CoxeterGraph::from_json(const std::string& text) {
  nlohmann::json j = nlohmann::json::parse(text);
  CoxeterGraph g(j.at("vertices").get<int>());
  for (const auto& e : j.value("edges", nlohmann::json::array())) {
    int i = e.at(0).get<int>();
    int k = e.at(1).get<int>();
    int m;
    if (e.at(2).is_string()) {
      if (e.at(2).get<std::string>() != "inf") throw BadInput("bad bond label");
      m = kInfiniteBond;
    } else {
      m = e.at(2).get<int>();
      if (m < 3) throw BadInput("explicit edges need m >= 3");
    }
    g.set_bond(i, k, m);
  }
  return g;
}

std::string CoxeterGraph::to_json() const {
  nlohmann::json j;
  j["vertices"] = n_;
  auto edges = nlohmann::json::array();
  for (int i = 0; i < n_; ++i)
    for (int k = i + 1; k < n_; ++k)
      if (adjacent(i, k)) {
        int m = bond(i, k);
        if (m == kInfiniteBond)
          edges.push_back({i, k, "inf"});
        else
          edges.push_back({i, k, m});
      }
  j["edges"] = edges;
  return j.dump();
}

std::string type_name(const TypeComponent& c) {
  switch (c.type) {
    case FiniteType::A: return "A" + std::to_string(c.rank);
    case FiniteType::B: return "B" + std::to_string(c.rank);
    case FiniteType::D: return "D" + std::to_string(c.rank);
    case FiniteType::E6: return "E6";
    case FiniteType::E7: return "E7";
    case FiniteType::E8: return "E8";
    case FiniteType::F4: return "F4";
    case FiniteType::H3: return "H3";
    case FiniteType::H4: return "H4";
    case FiniteType::I2: return "I2(" + std::to_string(c.bond) + ")";
  }
  return "?";
}

namespace {

// Recognize one connected induced subgraph. verts ascending.
std::optional<TypeComponent> recognize(const CoxeterGraph& g, const std::vector<int>& verts) {
  const int k = static_cast<int>(verts.size());
  TypeComponent out;
  out.vertices = verts;
  out.rank = k;
  if (k == 1) {
    out.type = FiniteType::A;
    return out;
  }
  int edges = 0, max_bond = 3;
  std::vector<int> deg(verts.size(), 0);
  for (int a = 0; a < k; ++a)
    for (int b = a + 1; b < k; ++b) {
      int m = g.bond(verts[static_cast<size_t>(a)], verts[static_cast<size_t>(b)]);
      if (m == kInfiniteBond) return std::nullopt;
      if (m >= 3) {
        ++edges;
        ++deg[static_cast<size_t>(a)];
        ++deg[static_cast<size_t>(b)];
        max_bond = std::max(max_bond, m);
      }
    }
  if (edges != k - 1) return std::nullopt;  // a cycle; finite diagrams are trees
  int branch = -1;
  for (int a = 0; a < k; ++a) {
    if (deg[static_cast<size_t>(a)] >= 4) return std::nullopt;
    if (deg[static_cast<size_t>(a)] == 3) {
      if (branch >= 0) return std::nullopt;
      branch = a;
    }
  }

  if (branch >= 0) {
    if (max_bond > 3) return std::nullopt;  // D/E diagrams are simply laced
    // arm lengths from the branch vertex
    std::vector<int> arms;
    std::vector<char> seen(verts.size(), 0);
    seen[static_cast<size_t>(branch)] = 1;
    for (int a = 0; a < k; ++a) {
      if (a == branch || !g.adjacent(verts[static_cast<size_t>(a)], verts[static_cast<size_t>(branch)]))
        continue;
      int len = 0, cur = a, prev = branch;
      for (;;) {
        ++len;
        seen[static_cast<size_t>(cur)] = 1;
        int next = -1;
        for (int b = 0; b < k; ++b)
          if (b != prev && b != cur && !seen[static_cast<size_t>(b)] &&
              g.adjacent(verts[static_cast<size_t>(b)], verts[static_cast<size_t>(cur)]))
            next = b;
        if (next < 0) break;
        prev = cur;
        cur = next;
      }
      arms.push_back(len);
    }
    std::sort(arms.begin(), arms.end());
    if (arms.size() != 3) return std::nullopt;
    if (arms[0] == 1 && arms[1] == 1) {
      out.type = FiniteType::D;  // arms (1,1,k-3)
      return out;
    }
    if (arms[0] == 1 && arms[1] == 2 && arms[2] >= 2 && arms[2] <= 4) {
      out.type = arms[2] == 2 ? FiniteType::E6 : arms[2] == 3 ? FiniteType::E7 : FiniteType::E8;
      return out;
    }
    return std::nullopt;
  }

  // path: walk it from one endpoint and collect labels
  int start = -1;
  for (int a = 0; a < k; ++a)
    if (deg[static_cast<size_t>(a)] == 1) start = a;
  std::vector<int> labels;
  {
    std::vector<char> seen(verts.size(), 0);
    int cur = start;
    seen[static_cast<size_t>(cur)] = 1;
    for (int step = 0; step + 1 < k; ++step) {
      int next = -1;
      for (int b = 0; b < k; ++b)
        if (!seen[static_cast<size_t>(b)] &&
            g.adjacent(verts[static_cast<size_t>(b)], verts[static_cast<size_t>(cur)]))
          next = b;
      labels.push_back(g.bond(verts[static_cast<size_t>(cur)], verts[static_cast<size_t>(next)]));
      seen[static_cast<size_t>(next)] = 1;
      cur = next;
    }
  }
  auto big = static_cast<int>(std::count_if(labels.begin(), labels.end(), [](int m) { return m > 3; }));
  if (big == 0) {
    out.type = FiniteType::A;
    return out;
  }
  if (big > 1) return std::nullopt;
  if (k == 2) {
    out.bond = max_bond;
    out.type = max_bond == 4 ? FiniteType::B : FiniteType::I2;  // I2(3)=A2 handled above
    return out;
  }
  bool at_end = labels.front() > 3 || labels.back() > 3;
  if (max_bond == 4) {
    if (at_end) {
      out.type = FiniteType::B;
      return out;
    }
    if (k == 4 && labels[1] == 4) {
      out.type = FiniteType::F4;
      return out;
    }
    return std::nullopt;
  }
  if (max_bond == 5 && at_end && (k == 3 || k == 4)) {
    out.type = k == 3 ? FiniteType::H3 : FiniteType::H4;
    return out;
  }
  return std::nullopt;
}

std::vector<std::vector<int>> induced_components(const CoxeterGraph& g, Simplex s) {
  std::vector<std::vector<int>> comps;
  std::uint64_t left = s.bits;
  while (left) {
    int v = std::countr_zero(left);
    // BFS within s
    std::vector<int> comp{v};
    std::uint64_t in_comp = std::uint64_t(1) << v;
    left &= ~in_comp;
    for (size_t head = 0; head < comp.size(); ++head) {
      std::uint64_t rest = left;
      while (rest) {
        int w = std::countr_zero(rest);
        rest &= rest - 1;
        if (g.adjacent(comp[head], w)) {
          comp.push_back(w);
          left &= ~(std::uint64_t(1) << w);
        }
      }
    }
    std::sort(comp.begin(), comp.end());
    comps.push_back(std::move(comp));
  }
  std::sort(comps.begin(), comps.end(),
            [](const auto& a, const auto& b) { return a.front() < b.front(); });
  return comps;
}

}  // namespace

std::optional<FiniteTypeLabel> classify(const CoxeterGraph& g, Simplex s) {
  FiniteTypeLabel label;
  for (const auto& comp : induced_components(g, s)) {
    auto c = recognize(g, comp);
    if (!c) return std::nullopt;
    label.components.push_back(std::move(*c));
  }
  return label;
}

bool is_spherical(const CoxeterGraph& g, Simplex s) { return classify(g, s).has_value(); }

std::vector<Simplex> spherical_complex(const CoxeterGraph& g) {
  std::vector<Simplex> out;
  const std::uint64_t full = (g.size() >= 64) ? ~std::uint64_t(0)
                                              : ((std::uint64_t(1) << g.size()) - 1);
  for (std::uint64_t b = 0;; ++b) {
    if (is_spherical(g, Simplex(b))) out.push_back(Simplex(b));
    if (b == full) break;
  }
  return out;
}

std::vector<int> component_degrees(const TypeComponent& c) {
  std::vector<int> d;
  switch (c.type) {
    case FiniteType::A:
      for (int i = 2; i <= c.rank + 1; ++i) d.push_back(i);
      break;
    case FiniteType::B:
      for (int i = 1; i <= c.rank; ++i) d.push_back(2 * i);
      break;
    case FiniteType::D:
      for (int i = 1; i < c.rank; ++i) d.push_back(2 * i);
      d.push_back(c.rank);
      std::sort(d.begin(), d.end());
      break;
    case FiniteType::E6: d = {2, 5, 6, 8, 9, 12}; break;
    case FiniteType::E7: d = {2, 6, 8, 10, 12, 14, 18}; break;
    case FiniteType::E8: d = {2, 8, 12, 14, 18, 20, 24, 30}; break;
    case FiniteType::F4: d = {2, 6, 8, 12}; break;
    case FiniteType::H3: d = {2, 6, 10}; break;
    case FiniteType::H4: d = {2, 12, 20, 30}; break;
    case FiniteType::I2: d = {2, c.bond}; break;
  }
  return d;
}

LaurentPoly poincare_polynomial(const CoxeterGraph& g, Simplex s) {
  auto label = classify(g, s);
  if (!label) throw NotSpherical("sigma generates an infinite parabolic subgroup");
  LaurentPoly p(1);
  for (const auto& c : label->components)
    for (int deg : component_degrees(c)) p *= q_integer(deg);
  return p;
}

int weight_exponent(const CoxeterGraph& g, Simplex s, int d) {
  if (d < 2) throw BadInput("weight_exponent: d must be >= 2");
  auto label = classify(g, s);
  if (!label) throw NotSpherical("sigma generates an infinite parabolic subgroup");
  int v = 0;
  for (const auto& c : label->components) {
    switch (c.type) {
      case FiniteType::A:
        v += (c.rank + 1) / d;
        break;
      case FiniteType::B:
        v += (d % 2 == 0) ? c.rank / (d / 2) : c.rank / d;
        break;
      default:
        for (int deg : component_degrees(c))
          if (deg % d == 0) ++v;
        break;
    }
  }
  return v;
}

int max_weighted_d(const CoxeterGraph& g) {
  // Weights divide along faces, so the maximal simplices of K see every
  // cyclotomic that appears anywhere.
  auto complex = spherical_complex(g);
  int best = 1;
  for (Simplex s : complex) {
    bool maximal = true;
    for (int v = 0; v < g.size() && maximal; ++v)
      if (!s.contains(v) && is_spherical(g, s.with(v))) maximal = false;
    if (!maximal) continue;
    auto label = classify(g, s);
    for (const auto& c : label->components)
      for (int deg : component_degrees(c))
        best = std::max(best, deg);
  }
  return best;
}

LaurentPoly brute_force_poincare(FiniteType t, int k, long order_cap) {
  if (t != FiniteType::A && t != FiniteType::B)
    throw BadInput("brute_force_poincare handles A and B only");
  LaurentPoly sum;
  if (t == FiniteType::A) {
    long order = 1;
    for (int i = 2; i <= k + 1; ++i) order *= i;
    if (order > order_cap) throw TooLarge("group order exceeds cap");
    std::vector<int> perm(static_cast<size_t>(k) + 1);
    std::iota(perm.begin(), perm.end(), 0);
    do {
      int inv = 0;
      for (size_t i = 0; i < perm.size(); ++i)
        for (size_t j = i + 1; j < perm.size(); ++j)
          if (perm[i] > perm[j]) ++inv;
      sum += LaurentPoly::q_power(inv);
    } while (std::next_permutation(perm.begin(), perm.end()));
    return sum;
  }
  long order = 1;
  for (int i = 1; i <= k; ++i) order *= 2L * i;
  if (order > order_cap) throw TooLarge("group order exceeds cap");
  // signed permutations in window notation; l(w) = inv(w) + sum_{w(i)<0} |w(i)|
  std::vector<int> perm(static_cast<size_t>(k));
  std::iota(perm.begin(), perm.end(), 1);
  do {
    for (std::uint32_t signs = 0; signs < (1u << k); ++signs) {
      std::vector<int> w(perm.begin(), perm.end());
      int neg = 0;
      for (int i = 0; i < k; ++i)
        if ((signs >> i) & 1) {
          neg += w[static_cast<size_t>(i)];
          w[static_cast<size_t>(i)] = -w[static_cast<size_t>(i)];
        }
      int inv = 0;
      for (int i = 0; i < k; ++i)
        for (int j = i + 1; j < k; ++j)
          if (w[static_cast<size_t>(i)] > w[static_cast<size_t>(j)]) ++inv;
      sum += LaurentPoly::q_power(inv + neg);
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  return sum;
}

}  // namespace artin
