#pragma once

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "circuitcat/amodel1d.hpp"
#include "circuitcat/balgebra.hpp"
#include "circuitcat/category.hpp"
#include "circuitcat/circuit.hpp"

namespace circuitcat {

struct ShiftPair {
  Int sigma_w = 0;
  Int sigma_d = 0;
  friend bool operator==(const ShiftPair&, const ShiftPair&) = default;
};

/// m = m1 - m0 with m0 = max(0,-m), m1 = max(0,m).
std::pair<Int, Int> m_split(Int m);

/// Weight and degree shifts attached to spectral index m. Throws NeedTwoPositives.
ShiftPair sigma_shifts(const Circuit& c, Int m);

/// x over v_0..v_{d+1} viewed as (m, monomial over w_0..w_d): v0*v1 becomes
/// w0 and the surplus power of v0 (resp. v1) becomes the spectral index.
struct ChiImage {
  Int m = 0;
  Monomial inner;
};

ChiImage chi(const Circuit& c, const Monomial& x);

/// Inverse of chi. Throws ExteriorOverflow on an odd exponent above 1.
Monomial chi_inv(const Circuit& c, Int m, const Monomial& inner);

struct Summand {
  Int m = 0;
  ShiftPair shift;
  int target = 0;  // object of the b-level Hom: k - sigma_w(m)
  std::vector<BasisEntry> basis;  // b-level basis, degrees before the shift
};

/// Hom(L_j, L_k) split over the intersection indices m. Throws OutOfRange,
/// VolumeBound or NeedTwoPositives.
std::vector<Summand> hom_decomposition(const Circuit& c, int n, int j, int k);

/// A morphism (m, y) of the recursive model: spectral index m and a basis
/// element y of the b-level Hom(L_j, L_{k - sigma_w(m)}).
struct AMorphism {
  Int m = 0;
  std::size_t inner = 0;
  friend auto operator<=>(const AMorphism&, const AMorphism&) = default;
};

/// The A-model category A_{a,nu,n}, built by recursion on d: the one
/// dimensional model at d = 1, a Hom decomposition over the b-level category
/// for d >= 2, and the B-model as a stand-in wherever a level has fewer than
/// two positive entries (a "dual leaf").
class ACategory {
 public:
  enum class Level { OneDim, Recursive, DualLeaf };

  /// Throws VolumeBound when n > Vol(a), OutOfRange when n < 1.
  static ACategory build(const Circuit& c, int n);

  const Circuit& circuit() const noexcept { return circuit_; }
  int objects() const noexcept { return n_; }
  Level level() const noexcept { return level_; }
  const ACategory* inner() const noexcept { return inner_.get(); }

  std::size_t dim(int j, int k) const;
  Int degree(int j, int k, std::size_t x) const;
  std::string label(int j, int k, std::size_t x) const;

  /// Precomputed by `compose_by_rewriting`.
  SignedIndex compose(int i, int j, int k, std::size_t later, std::size_t earlier) const;

  /// The rewriting engine: same-sign spectral indices compose through
  /// the b-level category; opposite signs are factored into unit steps and
  /// each step pair v1 o v0 is rewritten to the merged generator w0.
  SignedIndex compose_by_rewriting(int i, int j, int k, std::size_t later, std::size_t earlier) const;

  /// Recursive-level morphism (m, y). Throws if level() != Recursive.
  const AMorphism& morphism(int j, int k, std::size_t x) const;
  /// One-dimensional basis element. Throws if level() != OneDim.
  const Hom1dElement& element_1d(int j, int k, std::size_t x) const;

  /// Xi: the basis monomial x of Hom(R(j), R(k)) to its intersection point.
  std::size_t xi(int j, int k, const Monomial& x) const;
  Monomial xi_inverse(int j, int k, std::size_t x) const;

  /// Index in Hom(L_0, L_{a_r}) of the intersection point carrying the
  /// generator v_r (0 <= r <= p). Located from the A-side structure alone.
  std::size_t generator(std::size_t r) const;

  /// kappa^r_{a_r}: 1 on the generator of Hom(L_0, L_{a_r}), 0 elsewhere.
  int kappa(std::size_t r, std::size_t x) const;

  /// Circuits of every dual leaf reached by the recursion.
  std::vector<std::string> dual_leaves() const;

 private:
  struct Element {
    int sign = 1;
    Int diff = 0;
    AMorphism value;
  };

  ACategory() = default;
  void check(int j, int k) const;
  std::size_t dim_diff(Int d) const;
  Int degree_diff(Int d, std::size_t x) const;
  SignedIndex compose_diff(Int d_earlier, Int d_later, std::size_t later, std::size_t earlier) const;
  SignedIndex rewrite_diff(Int d_earlier, Int d_later, std::size_t later, std::size_t earlier) const;
  std::optional<Element> rewrite(const Element& later, const Element& earlier) const;
  std::optional<Element> same_sign(const Element& later, const Element& earlier) const;
  Element step(Int m) const;
  std::size_t index_of(Int d, const AMorphism& am) const;

  Circuit circuit_ = Circuit::from_internal({1, 1, -2}, {0, 0, 0});
  int n_ = 0;
  Level level_ = Level::OneDim;
  std::shared_ptr<const ACategory> inner_;
  std::shared_ptr<const BCategory> leaf_;
  std::vector<std::vector<Hom1dElement>> one_dim_;
  std::vector<std::vector<AMorphism>> morphisms_;
  std::vector<std::map<AMorphism, std::size_t>> lookup_;
  std::vector<std::vector<std::vector<SignedIndex>>> products_;
};

/// kappa^r evaluated on basis element x of Hom(L_0, L_{a_r}).
int kappa(const ACategory& cat, std::size_t r, std::size_t x);

/// Transport evaluator: pulls both morphisms back through Xi, multiplies in
/// R_{a,nu}, and pushes the product forward again.
SignedIndex compose_by_transport(const ACategory& cat, int i, int j, int k, std::size_t later,
                                 std::size_t earlier);

struct Witness {
  std::string kind;  // "dimension", "bijection", "degree", "composition"
  int i = -1, j = -1, k = -1;
  std::string detail;
};

struct IsoReport {
  std::string circuit;
  int n = 0;
  std::size_t pairs_checked = 0;
  std::size_t compositions_checked = 0;
  bool dims_match = true;
  bool degrees_match = true;
  bool compositions_match = true;
  std::vector<std::string> dual_leaves;
  std::optional<Witness> witness;

  bool ok() const { return dims_match && degrees_match && compositions_match; }
};

/// Builds both categories and checks that Xi is a degree-preserving bijection
/// on every Hom basis and intertwines composition, signs included.
IsoReport verify_iso(const Circuit& c, int n);

}  // namespace circuitcat
