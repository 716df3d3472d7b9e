#pragma once

#include <boost/rational.hpp>
#include <vector>

#include "circuitcat/circuit.hpp"

namespace circuitcat {

using Rational = boost::rational<Int>;

/// Lift of the thimble path mu_k in normalized sheared coordinates:
/// t -> (t, k t) for t in [-1/a0, 1/a1].
struct LiftedSegment {
  Int k = 0;
  Rational lower;
  Rational upper;

  static LiftedSegment make(Int a0, Int a1, Int k);
  Rational height(const Rational& t) const { return Rational(k) * t; }
  bool contains(const Rational& t) const { return lower <= t && t <= upper; }
};

struct IntersectionPoint {
  Int j = 0;
  Int k = 0;
  Int m = 0;
};

/// All m with -(k-j)/a0 <= m <= (k-j)/a1, ascending. Throws BadOrder if j > k.
std::vector<Int> intersection_indices(Int a0, Int a1, Int j, Int k);

/// floor((k-j)/a0) + floor((k-j)/a1) + 1.
Int intersection_count(Int a0, Int a1, Int j, Int k);

/// Independent check of intersection_indices: intersects the lifted segment of
/// mu_k with every integer translate of the lift of mu_j in exact rationals.
std::vector<Int> geometric_oracle(Int a0, Int a1, Int j, Int k);

enum class Region { Interior, ThroughPuncture };

struct TriangleProduct {
  Int m = 0;
  Region region = Region::Interior;
};

/// The unique directed triangle with corners z^{n1} in mu_{k0} ^ mu_{k1} and
/// z^{n2} in mu_{k1} ^ mu_{k2}. Throws OutOfBounds when the preconditions fail.
TriangleProduct triangle_product(Int a0, Int a1, Int k0, Int k1, Int k2, Int n1, Int n2);

/// A basis morphism of the one-dimensional model: the identity, or the
/// intersection point p_r^s on branch r.
struct Hom1dElement {
  bool identity = false;
  int branch = 0;
  Int power = 0;
  Int degree = 0;

  friend bool operator==(const Hom1dElement&, const Hom1dElement&) = default;
};

/// Basis of Hom(L_j, L_k) for a d = 1 circuit (a0, a1, a2) with a0, a1 > 0.
/// Throws OutOfRange, VolumeBound (n > Vol) or NeedTwoPositives.
std::vector<Hom1dElement> hom_basis_1d(const Circuit& c, int n, int j, int k);

/// p_r^s o p_r^t = p_r^{s+t}. Mixed branches throw BranchMismatch.
Hom1dElement compose_1d(const Hom1dElement& later, const Hom1dElement& earlier);

/// 1 iff x is the generator p_r^1 of Hom(L_0, L_{a_r}); WrongHom when x does
/// not live in that Hom space.
int kappa_1d(const Circuit& c, int branch, const Hom1dElement& x);

}  // namespace circuitcat
