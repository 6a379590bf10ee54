#ifndef ARTIN_MORSE_HPP
#define ARTIN_MORSE_HPP

#include <functional>
#include <optional>

#include "artin/complexes.hpp"

namespace artin {

struct NotAMatching : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct NonTerminating : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct NotPrecise : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// A matching on (a subposet of) a simplicial complex, materialized lazily as
// a partner function: nullopt = critical. Matched partners differ by exactly
// one vertex. The optional domain predicate restricts the poset (K_{n,f},
// or the positive-weight part of K).
class Matching {
 public:
  using PartnerFn = std::function<std::optional<Simplex>(Simplex)>;
  using DomainFn = std::function<bool(Simplex)>;

  explicit Matching(PartnerFn partner, DomainFn domain = nullptr)
      : partner_(std::move(partner)), domain_(std::move(domain)) {}

  std::optional<Simplex> partner(Simplex s) const { return partner_(s); }
  bool in_domain(Simplex s) const { return !domain_ || domain_(s); }
  bool is_critical(Simplex s) const { return in_domain(s) && !partner_(s).has_value(); }

 private:
  PartnerFn partner_;
  DomainFn domain_;
};

// Checks the pairing invariants (involution, cover relation, domain closure)
// and then that the reversed-edge digraph has no directed cycle. Throws
// NotAMatching on an invariant violation.
bool verify_acyclic(const std::vector<Simplex>& poset, const Matching& m);
bool verify_acyclic(const CoxeterGraph& g, const Matching& m);

// Every matched pair has equal v_phi_d.
bool verify_weighted(const CoxeterGraph& g, const Matching& m, int d);

// One alternating path sigma |> tau_1 <| sigma_1 |> ... |> tau; cells lists
// the simplices in order, sign its contribution to the incidence number.
struct AltPath {
  std::vector<Simplex> cells;
  long long sign = 0;
  int length() const { return (static_cast<int>(cells.size()) - 2) / 2; }  // matched hops
};

// Exhaustive enumeration (acyclicity makes this finite; a path-length bound
// of 2|poset| guards non-acyclic inputs with NonTerminating).
std::vector<AltPath> alternating_paths(const std::vector<Simplex>& poset, const Matching& m,
                                       Simplex from, Simplex to);

// [from : to]^M, the signed sum over alternating paths.
long long morse_incidence(const std::vector<Simplex>& poset, const Matching& m, Simplex from,
                          Simplex to);

struct CriticalCell {
  Simplex cell;
  int exponent = 0;  // v_phi_d; 0 when d == 0
  bool operator==(const CriticalCell&) const = default;
};

struct MorseComplex {
  int d = 0;  // 0 = unweighted
  std::vector<std::vector<CriticalCell>> cells;  // per degree, ascending bitmask
  std::vector<IntMatrix> boundary;               // boundary[k]: degree k -> k-1

  int top_degree() const { return static_cast<int>(cells.size()) - 1; }
  int dim(int k) const {
    return (k < 0 || k > top_degree()) ? 0 : static_cast<int>(cells[static_cast<size_t>(k)].size());
  }
  std::optional<std::pair<int, int>> find(Simplex s) const;  // (degree, index)
};

// Critical cells with their exponents plus all pairwise incidence numbers in
// consecutive degrees. Verifies acyclicity and (for d > 0) weightedness.
MorseComplex morse_complex(const CoxeterGraph& g, const Matching& m, int d);

// Every nonzero incidence edge raises the exponent by exactly 1.
bool verify_precise(const MorseComplex& mc);

// Connected components of the incidence graph G^M, ignoring orientation.
// Returns per-component lists of (degree, index) and the offsets
// k_i = v_phi(sigma) - |sigma| taken from each component's first cell.
struct ComponentDecomposition {
  std::vector<std::vector<std::pair<int, int>>> components;
  std::vector<int> offsets;
};
ComponentDecomposition decompose_components(const MorseComplex& mc);

// E^2-collapse criterion: within each component the Morse-filtered quotients
// are concentrated in degrees m = p - k_i.
bool collapse_check(const CoxeterGraph& g, const Matching& m, int d);

struct PhiSummand {
  int exp = 1;   // e in R/(phi^e)
  int mult = 1;
  bool operator==(const PhiSummand&) const = default;
};

// H_m((L_*)_phi) as multisets of R/(phi^e) summands per degree.
struct PhiHomology {
  std::vector<std::vector<PhiSummand>> by_degree;
  bool operator==(const PhiHomology&) const = default;
};

// Homology of the phi-primary weighted complex from a precise matching:
// H_m = (+)_i H_m(V^i) (x) R/(phi^{m+k_i})  (+)  (R/(phi))^{rk delta_m},
// with zero modules (exponent <= 0) dropped. Throws NotPrecise.
PhiHomology homology_L_phi(const MorseComplex& mc);

struct TorsionSummand {
  int d = 2;
  int exp = 1;
  int mult = 1;
  auto operator<=>(const TorsionSummand&) const = default;
};

struct HomologyTable {
  std::vector<int> free_rank;                        // per degree
  std::vector<std::vector<TorsionSummand>> torsion;  // per degree, sorted by (d, exp)

  void add_torsion(int degree, int d, int exp, int mult);
  void normalize();
  int torsion_mult(int degree, int d) const;  // total multiplicity of phi_d summands
  bool operator==(const HomologyTable&) const = default;
  std::string str() const;
};

// H_m(X_W; R) = (+)_phi (R/(phi))^{rk delta^phi_{m+1}}  (+)  H_m(C^0),
// assembled from one precise matching per cyclotomic phi_d.
HomologyTable homology_artin(const CoxeterGraph& g,
                             const std::function<Matching(int)>& matching_provider);

}  // namespace artin

#endif
