#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <vector>

#include "circuitcat/circuit.hpp"

namespace circuitcat {

enum class GramMode { Euler, Poincare };

/// Degree -> coefficient.
using Poly = std::map<Int, Int>;

/// Euler pairings chi(E_i, E_j) of an exceptional collection. In Poincare
/// mode `poly` also holds the graded dimensions; `entries` is always the
/// evaluation at t = -1. Mutations act on `entries` and return Euler mode.
struct GramMatrix {
  GramMode mode = GramMode::Euler;
  std::vector<std::vector<Int>> entries;
  std::vector<std::vector<Poly>> poly;

  static GramMatrix from_rows(std::vector<std::vector<Int>> rows);
  std::size_t size() const noexcept { return entries.size(); }
  Int operator()(std::size_t i, std::size_t j) const { return entries[i][j]; }
  bool is_unitriangular() const;
  friend bool operator==(const GramMatrix& x, const GramMatrix& y) { return x.entries == y.entries; }
};

/// Throws OutOfRange when n < 1.
GramMatrix gram_of_collection(const Circuit& c, int n, GramMode mode = GramMode::Euler);

/// (E_i, E_{i+1}) -> (chi(E_i,E_{i+1}) E_i - E_{i+1}, E_i), 1-based i.
/// Throws BadPosition unless 1 <= i <= n-1, Overflow on entry overflow.
GramMatrix mutate_left(const GramMatrix& g, std::size_t i);

/// (E_i, E_{i+1}) -> (E_{i+1}, chi(E_i,E_{i+1}) E_{i+1} - E_i). Inverse of mutate_left.
GramMatrix mutate_right(const GramMatrix& g, std::size_t i);

/// sigma_1 (sigma_2 sigma_1) ... (sigma_{n-1} ... sigma_1), each factor read left to right.
GramMatrix half_twist(const GramMatrix& g);

/// A diagonal sign vector s with s_i s_j x_ij = y_ij for all i, j, if any.
std::optional<std::vector<int>> diagonal_signs(const GramMatrix& x, const GramMatrix& y);

/// half_twist(gram(c, n)) against gram(negate(c), n) up to diagonal +-1 conjugation.
bool check_koszul_duality(const Circuit& c, int n);

}  // namespace circuitcat
