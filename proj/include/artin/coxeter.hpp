#ifndef ARTIN_COXETER_HPP
#define ARTIN_COXETER_HPP

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "artin/laurent.hpp"
#include "artin/simplex.hpp"

namespace artin {

struct NotSpherical : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct TooLarge : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct BadInput : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// m(i,j) = infinity
inline constexpr int kInfiniteBond = -1;

// A Coxeter graph on vertices 0..n-1: symmetric matrix of bond labels with
// m(i,i) = 1 and m(i,j) in {2,3,...} or infinity (absent edge = 2).
//
// Vertex numbering follows the standard diagram labels: for A_n/B_n the
// labeled vertex i is our i-1 (so bitstrings read off in label order), for
// the affine families tA_n/tC_n the labeled vertex i is our i.
class CoxeterGraph {
 public:
  explicit CoxeterGraph(int n_vertices);

  int size() const { return n_; }
  int bond(int i, int j) const;
  void set_bond(int i, int j, int m);
  // an edge of the graph (m >= 3 or infinite)
  bool adjacent(int i, int j) const {
    int m = bond(i, j);
    return m == kInfiniteBond || m >= 3;
  }

  static CoxeterGraph type_A(int n);    // path, n >= 1
  static CoxeterGraph type_B(int n);    // 4-bond on the first edge, n >= 1
  static CoxeterGraph affine_A(int n);  // (n+1)-cycle, n >= 2
  static CoxeterGraph affine_C(int n);  // 4-bonds on both end edges, n >= 2

  // {"vertices": n, "edges": [[i, j, m], ...]} with m an integer >= 3 or "inf"
  static CoxeterGraph from_json(const std::string& text);
  std::string to_json() const;

 private:
  int n_;
  std::vector<int> m_;
};

enum class FiniteType { A, B, D, E6, E7, E8, F4, H3, H4, I2 };

struct TypeComponent {
  FiniteType type;
  int rank;                   // k in A_k, B_k, D_k; 2 for I2
  int bond = 0;               // m for I2(m)
  std::vector<int> vertices;  // ascending
  bool operator==(const TypeComponent&) const = default;
};

struct FiniteTypeLabel {
  std::vector<TypeComponent> components;  // ordered by lowest vertex
};

std::string type_name(const TypeComponent& c);

// Decomposes the induced subgraph into connected components and matches each
// against the finite-type diagrams. nullopt = some component is not finite.
std::optional<FiniteTypeLabel> classify(const CoxeterGraph& g, Simplex s);

bool is_spherical(const CoxeterGraph& g, Simplex s);

// Every sigma (including the empty simplex) whose parabolic subgroup is
// finite, in bitmask order.
std::vector<Simplex> spherical_complex(const CoxeterGraph& g);

// Standard degrees d_1..d_k of the component's reflection group.
std::vector<int> component_degrees(const TypeComponent& c);

// Poincare polynomial W_sigma(q) = prod over components of prod_i [d_i]_q.
LaurentPoly poincare_polynomial(const CoxeterGraph& g, Simplex s);

// v_phi_d(sigma): exponent of the d-th cyclotomic in W_sigma(q), via the
// closed forms (A_k: floor((k+1)/d); B_k: floor(k/d) for d odd and
// floor(k/(d/2)) for d even; otherwise #{i : d | d_i}).
int weight_exponent(const CoxeterGraph& g, Simplex s, int d);

// Largest d >= 2 with weight_exponent(sigma, d) > 0 for some spherical sigma;
// 1 when all weights are trivial.
int max_weighted_d(const CoxeterGraph& g);

// Independent oracle: sums q^length over the group elements themselves
// (A_k as permutations with inversion count, B_k as signed permutations).
LaurentPoly brute_force_poincare(FiniteType t, int k, long order_cap = 2000000);

}  // namespace artin

#endif
