#include "circuitcat/balgebra.hpp"

#include <limits>
#include <sstream>

#include "circuitcat/error.hpp"

namespace circuitcat {
namespace {

void enumerate(const Circuit& c, std::size_t i, Int remaining, Monomial& current,
               std::vector<Monomial>& out) {
  if (i == c.size()) {
    if (remaining == 0) out.push_back(current);
    return;
  }
  const Int w = c.weight_of(i);
  Int cap = remaining / w;
  if (c.is_odd(i) && cap > 1) cap = 1;
  for (Int e = cap; e >= 0; --e) {
    current.exponents[i] = e;
    enumerate(c, i + 1, remaining - e * w, current, out);
  }
  current.exponents[i] = 0;
}

}  // namespace

bool Monomial::is_identity() const {
  for (Int e : exponents)
    if (e != 0) return false;
  return true;
}

std::string Monomial::to_string(char letter) const {
  std::ostringstream out;
  bool first = true;
  for (std::size_t i = 0; i < exponents.size(); ++i) {
    if (exponents[i] == 0) continue;
    if (!first) out << '*';
    first = false;
    out << letter << i;
    if (exponents[i] > 1) out << '^' << exponents[i];
  }
  return first ? "1" : out.str();
}

bool respects_exterior_caps(const Circuit& c, const Monomial& x) {
  if (x.exponents.size() != c.size()) return false;
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (x.exponents[i] < 0) return false;
    if (c.is_odd(i) && x.exponents[i] > 1) return false;
  }
  return true;
}

Bigrading grading(const Circuit& c, const Monomial& x) {
  Bigrading g;
  for (std::size_t i = 0; i < c.size(); ++i) {
    const Int r = x.exponents[i];
    g.degree += (2 * c.nu()[i] + (c.is_odd(i) ? 1 : 0)) * r;
    g.weight += c.weight_of(i) * r;
  }
  return g;
}

std::vector<Monomial> monomials_of_weight(const Circuit& c, Int w) {
  std::vector<Monomial> out;
  if (w < 0) return out;
  Monomial current = Monomial::identity(c.size());
  enumerate(c, 0, w, current, out);
  return out;
}

SignedMonomial multiply(const Circuit& c, const Monomial& x, const Monomial& y) {
  SignedMonomial out;
  out.monomial = Monomial::identity(c.size());
  // Odd generators of y already passed over by those of x.
  Int odd_in_y_below = 0;
  Int inversions = 0;
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (c.is_odd(i)) {
      if (x.exponents[i] > 0 && y.exponents[i] > 0) return {0, Monomial::identity(c.size())};
      if (x.exponents[i] > 0) inversions += odd_in_y_below;
      if (y.exponents[i] > 0) ++odd_in_y_below;
    }
    out.monomial.exponents[i] = x.exponents[i] + y.exponents[i];
  }
  out.sign = inversions % 2 == 0 ? 1 : -1;
  return out;
}

std::vector<BasisEntry> hom_basis(const Circuit& c, int n, int j, int k) {
  if (n < 1 || j < 0 || k < 0 || j >= n || k >= n) {
    throw Error(ErrorCode::OutOfRange, "object index outside 0..n-1");
  }
  std::vector<BasisEntry> out;
  if (j > k) return out;
  for (auto& m : monomials_of_weight(c, k - j)) {
    Bigrading g = grading(c, m);
    out.push_back({std::move(m), g});
  }
  return out;
}

BCategory BCategory::build(const Circuit& c, int n) {
  if (n < 1) throw Error(ErrorCode::OutOfRange, "need at least one object");
  if (static_cast<Int>(n) > kMaxEntry) throw Error(ErrorCode::Overflow, "too many objects");

  BCategory cat(c);
  cat.n_ = n;
  cat.by_diff_.resize(static_cast<std::size_t>(n));
  cat.lookup_.resize(static_cast<std::size_t>(n));
  for (int d = 0; d < n; ++d) {
    cat.by_diff_[d] = hom_basis(c, n, 0, d);
    for (std::size_t x = 0; x < cat.by_diff_[d].size(); ++x) cat.lookup_[d][cat.by_diff_[d][x].monomial] = x;
  }

  cat.products_.resize(static_cast<std::size_t>(n));
  for (int d1 = 0; d1 < n; ++d1) {
    cat.products_[d1].resize(static_cast<std::size_t>(n - d1));
    for (int d2 = 0; d1 + d2 < n; ++d2) {
      const auto& earlier = cat.by_diff_[d1];
      const auto& later = cat.by_diff_[d2];
      auto& table = cat.products_[d1][d2];
      table.resize(earlier.size() * later.size());
      for (std::size_t y = 0; y < later.size(); ++y) {
        for (std::size_t x = 0; x < earlier.size(); ++x) {
          SignedMonomial p = multiply(c, later[y].monomial, earlier[x].monomial);
          SignedIndex& slot = table[y * earlier.size() + x];
          if (p.is_zero()) continue;
          slot.sign = p.sign;
          slot.index = cat.lookup_[d1 + d2].at(p.monomial);
        }
      }
    }
  }
  return cat;
}

void BCategory::check(int j, int k) const {
  if (j < 0 || k < 0 || j >= n_ || k >= n_) throw Error(ErrorCode::OutOfRange, "object index outside 0..n-1");
}

std::size_t BCategory::dim(int j, int k) const {
  check(j, k);
  return j > k ? 0 : by_diff_[k - j].size();
}

const std::vector<BasisEntry>& BCategory::basis(int j, int k) const {
  static const std::vector<BasisEntry> kEmpty;
  check(j, k);
  return j > k ? kEmpty : by_diff_[k - j];
}

std::size_t BCategory::index_of(int j, int k, const Monomial& x) const {
  check(j, k);
  if (j <= k) {
    auto it = lookup_[k - j].find(x);
    if (it != lookup_[k - j].end()) return it->second;
  }
  throw Error(ErrorCode::WrongHom, x.to_string() + " is not a basis element of Hom(" +
                                       std::to_string(j) + "," + std::to_string(k) + ")");
}

SignedIndex BCategory::compose(int i, int j, int k, std::size_t later, std::size_t earlier) const {
  check(i, j);
  check(j, k);
  if (i > j || j > k) throw Error(ErrorCode::BadOrder, "compose needs i <= j <= k");
  const auto& table = products_[j - i][k - j];
  const std::size_t rows = by_diff_[j - i].size();
  if (earlier >= rows || later >= by_diff_[k - j].size()) throw Error(ErrorCode::OutOfRange, "basis index out of range");
  return table[later * rows + earlier];
}

std::vector<Arrow> quiver(const Circuit& c, int n) {
  std::vector<Arrow> out;
  for (std::size_t r = 0; r < c.size(); ++r) {
    const Int w = c.weight_of(r);
    for (Int i = 0; i + w <= n - 1; ++i) {
      out.push_back({static_cast<int>(i), static_cast<int>(i + w), r, "v" + std::to_string(r)});
    }
  }
  return out;
}

}  // namespace circuitcat
