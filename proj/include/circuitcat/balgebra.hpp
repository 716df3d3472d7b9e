#pragma once

#include <map>
#include <string>
#include <vector>

#include "circuitcat/category.hpp"
#include "circuitcat/circuit.hpp"

namespace circuitcat {

/// Exponent vector r_0..r_{d+1} over the generators v_i of R_{a,nu}. Odd
/// generators (a_i < 0) have exponent at most 1.
struct Monomial {
  std::vector<Int> exponents;

  static Monomial identity(std::size_t generators) { return {std::vector<Int>(generators, 0)}; }
  static Monomial generator(std::size_t generators, std::size_t i, Int power = 1) {
    Monomial m = identity(generators);
    m.exponents[i] = power;
    return m;
  }

  bool is_identity() const;
  /// "v0^2*v3", or "1" for the identity. `letter` names the generators.
  std::string to_string(char letter = 'v') const;

  friend auto operator<=>(const Monomial&, const Monomial&) = default;
};

struct Bigrading {
  Int degree = 0;
  Int weight = 0;
  friend bool operator==(const Bigrading&, const Bigrading&) = default;
};

/// sign == 0 encodes the zero product.
struct SignedMonomial {
  int sign = 0;
  Monomial monomial;

  bool is_zero() const noexcept { return sign == 0; }
};

bool respects_exterior_caps(const Circuit& c, const Monomial& x);
Bigrading grading(const Circuit& c, const Monomial& x);

/// All monomials of weight exactly w, in descending lexicographic exponent
/// order (v0^2 before v0*v3 before v1).
std::vector<Monomial> monomials_of_weight(const Circuit& c, Int w);

/// Product x*y in the graded-symmetric algebra. The sign counts the odd-odd
/// inversions met when merging x's odd block before y's into canonical order.
SignedMonomial multiply(const Circuit& c, const Monomial& x, const Monomial& y);

struct BasisEntry {
  Monomial monomial;
  Bigrading grading;
};

/// Basis of Hom(R(j), R(k)) in C_{a,nu,n}. Throws OutOfRange.
std::vector<BasisEntry> hom_basis(const Circuit& c, int n, int j, int k);

/// The directed category C_{a,nu,n}: objects R(0)..R(n-1), Hom(j,k) spanned by
/// monomials of weight k-j, composition by multiplication.
class BCategory {
 public:
  /// Throws OutOfRange for n < 1 and Overflow for n beyond 2^31.
  static BCategory build(const Circuit& c, int n);

  const Circuit& circuit() const noexcept { return circuit_; }
  int objects() const noexcept { return n_; }

  std::size_t dim(int j, int k) const;
  const std::vector<BasisEntry>& basis(int j, int k) const;
  Int degree(int j, int k, std::size_t x) const { return basis(j, k)[x].grading.degree; }
  std::string label(int j, int k, std::size_t x) const { return basis(j, k)[x].monomial.to_string(); }

  /// Index of x in Hom(j,k); throws WrongHom if x is not a basis element there.
  std::size_t index_of(int j, int k, const Monomial& x) const;

  /// later in Hom(j,k), earlier in Hom(i,j); result in Hom(i,k).
  SignedIndex compose(int i, int j, int k, std::size_t later, std::size_t earlier) const;

 private:
  void check(int j, int k) const;

  Circuit circuit_;
  int n_ = 0;
  // Bases and products depend only on the difference k - j.
  std::vector<std::vector<BasisEntry>> by_diff_;
  std::vector<std::map<Monomial, std::size_t>> lookup_;
  // products_[d1][d2][later * dim(d1) + earlier]
  std::vector<std::vector<std::vector<SignedIndex>>> products_;

  explicit BCategory(const Circuit& c) : circuit_(c) {}
};

struct Arrow {
  int source = 0;
  int target = 0;
  std::size_t generator = 0;
  std::string label;

  friend bool operator==(const Arrow&, const Arrow&) = default;
};

/// Single-generator morphisms (i -> i + |a_r|, v_r), grouped by generator.
std::vector<Arrow> quiver(const Circuit& c, int n);

}  // namespace circuitcat
