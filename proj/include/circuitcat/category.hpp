#pragma once

#include <concepts>
#include <cstddef>
#include <optional>
#include <string>

#include "circuitcat/circuit.hpp"

namespace circuitcat {

/// Result of composing two basis morphisms: zero, or +/- one basis element.
struct SignedIndex {
  int sign = 0;
  std::size_t index = 0;

  bool is_zero() const noexcept { return sign == 0; }
  friend bool operator==(const SignedIndex&, const SignedIndex&) = default;
};

/// The shape shared by the B-side and A-side builds: objects 0..n-1, graded
/// Hom bases, and a composition table Hom(j,k) x Hom(i,j) -> Hom(i,k).
template <typename C>
concept DirectedCategory = requires(const C& cat, int i, int j, int k, std::size_t x) {
  { cat.objects() } -> std::convertible_to<int>;
  { cat.dim(j, k) } -> std::convertible_to<std::size_t>;
  { cat.degree(j, k, x) } -> std::convertible_to<Int>;
  { cat.label(j, k, x) } -> std::convertible_to<std::string>;
  { cat.compose(i, j, k, x, x) } -> std::same_as<SignedIndex>;
};

struct AssociativityFailure {
  int i, j, k, l;
  std::size_t x, y, z;
};

/// Exhaustive (z.y).x == z.(y.x) over every composable triple, signs included.
template <DirectedCategory C>
std::optional<AssociativityFailure> check_associativity(const C& cat) {
  const int n = cat.objects();
  for (int i = 0; i < n; ++i)
    for (int j = i; j < n; ++j)
      for (int k = j; k < n; ++k)
        for (int l = k; l < n; ++l)
          for (std::size_t x = 0; x < cat.dim(i, j); ++x)
            for (std::size_t y = 0; y < cat.dim(j, k); ++y)
              for (std::size_t z = 0; z < cat.dim(k, l); ++z) {
                SignedIndex yx = cat.compose(i, j, k, y, x);
                SignedIndex zy = cat.compose(j, k, l, z, y);
                SignedIndex left;   // (z.y).x
                SignedIndex right;  // z.(y.x)
                if (!zy.is_zero()) {
                  left = cat.compose(i, j, l, zy.index, x);
                  left.sign *= zy.sign;
                }
                if (!yx.is_zero()) {
                  right = cat.compose(i, k, l, z, yx.index);
                  right.sign *= yx.sign;
                }
                if (left.is_zero() && right.is_zero()) continue;
                if (!(left == right)) return AssociativityFailure{i, j, k, l, x, y, z};
              }
  return std::nullopt;
}

}  // namespace circuitcat
