#include "circuitcat/amodel1d.hpp"

#include "circuitcat/error.hpp"

namespace circuitcat {
namespace {

Int floor_div(Int x, Int y) {
  Int q = x / y;
  if ((x % y != 0) && ((x < 0) != (y < 0))) --q;
  return q;
}

void require_order(Int j, Int k) {
  if (j > k) throw Error(ErrorCode::BadOrder, "need j <= k");
}

void require_one_dim(const Circuit& c) {
  if (c.size() != 3) throw Error(ErrorCode::NeedBaseCase, "one-dimensional model needs d = 1");
  if (c.positives() != 2) throw Error(ErrorCode::NeedTwoPositives, "one-dimensional model needs two positives");
}

}  // namespace

LiftedSegment LiftedSegment::make(Int a0, Int a1, Int k) {
  return {k, Rational(-1, a0), Rational(1, a1)};
}

std::vector<Int> intersection_indices(Int a0, Int a1, Int j, Int k) {
  require_order(j, k);
  std::vector<Int> out;
  for (Int m = -floor_div(k - j, a0); m <= floor_div(k - j, a1); ++m) out.push_back(m);
  return out;
}

Int intersection_count(Int a0, Int a1, Int j, Int k) {
  require_order(j, k);
  return floor_div(k - j, a0) + floor_div(k - j, a1) + 1;
}

std::vector<Int> geometric_oracle(Int a0, Int a1, Int j, Int k) {
  require_order(j, k);
  if (j == k) return {0};
  const LiftedSegment upper = LiftedSegment::make(a0, a1, k);
  const LiftedSegment lower = LiftedSegment::make(a0, a1, j);
  std::vector<Int> out;
  // Heights along both segments stay within |k| and |j|, so any crossing has
  // |m| <= |k| + |j|.
  const Int reach = (k < 0 ? -k : k) + (j < 0 ? -j : j) + 1;
  for (Int m = -reach; m <= reach; ++m) {
    // k t = j t + m
    Rational t(m, k - j);
    if (upper.contains(t) && lower.contains(t) && upper.height(t) == lower.height(t) + m) out.push_back(m);
  }
  return out;
}

TriangleProduct triangle_product(Int a0, Int a1, Int k0, Int k1, Int k2, Int n1, Int n2) {
  if (!(k0 < k1 && k1 < k2)) throw Error(ErrorCode::OutOfBounds, "need k0 < k1 < k2");
  auto in_bounds = [&](Int m, Int from, Int to) {
    return -(to - from) <= m * a0 && m * a1 <= (to - from);
  };
  if (!in_bounds(n1, k0, k1) || !in_bounds(n2, k1, k2)) {
    throw Error(ErrorCode::OutOfBounds, "spectral index outside its intersection range");
  }
  return {n1 + n2, n1 * n2 >= 0 ? Region::Interior : Region::ThroughPuncture};
}

std::vector<Hom1dElement> hom_basis_1d(const Circuit& c, int n, int j, int k) {
  require_one_dim(c);
  if (n > volume(c)) throw Error(ErrorCode::VolumeBound, "n exceeds Vol(a)");
  if (n < 1 || j < 0 || k < 0 || j >= n || k >= n) throw Error(ErrorCode::OutOfRange, "object index outside 0..n-1");
  if (j > k) return {};
  if (j == k) return {Hom1dElement{true, 0, 0, 0}};
  std::vector<Hom1dElement> out;
  const Int diff = k - j;
  for (int r = 0; r < 2; ++r) {
    const Int ar = c.a()[r];
    if (diff % ar == 0) out.push_back({false, r, diff / ar, 2 * c.nu()[r] * (diff / ar)});
  }
  return out;
}

Hom1dElement compose_1d(const Hom1dElement& later, const Hom1dElement& earlier) {
  if (later.identity) return earlier;
  if (earlier.identity) return later;
  if (later.branch != earlier.branch) {
    throw Error(ErrorCode::BranchMismatch, "p_0 and p_1 never compose inside n <= Vol(a)");
  }
  return {false, later.branch, later.power + earlier.power, later.degree + earlier.degree};
}

int kappa_1d(const Circuit& c, int branch, const Hom1dElement& x) {
  require_one_dim(c);
  if (branch < 0 || branch > 1) throw Error(ErrorCode::OutOfRange, "branch must be 0 or 1");
  const Int target = c.a()[branch];
  const Int diff = x.identity ? 0 : c.a()[x.branch] * x.power;
  if (diff != target) throw Error(ErrorCode::WrongHom, "element is not in Hom(L_0, L_{a_r})");
  return (!x.identity && x.branch == branch && x.power == 1) ? 1 : 0;
}

}  // namespace circuitcat
