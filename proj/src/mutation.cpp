#include "circuitcat/mutation.hpp"

#include <cstdlib>

#include "circuitcat/balgebra.hpp"
#include "circuitcat/error.hpp"

namespace circuitcat {
namespace {

Int checked_mul(Int x, Int y) {
  Int r = 0;
  if (__builtin_mul_overflow(x, y, &r)) throw Error(ErrorCode::Overflow, "Gram entry overflow");
  return r;
}

Int checked_add(Int x, Int y) {
  Int r = 0;
  if (__builtin_add_overflow(x, y, &r)) throw Error(ErrorCode::Overflow, "Gram entry overflow");
  return r;
}

// Rows of `b` express the new classes in the old basis; the new form is B G B^T.
GramMatrix change_basis(const GramMatrix& g, const std::vector<std::vector<Int>>& b) {
  const std::size_t n = g.size();
  std::vector<std::vector<Int>> bg(n, std::vector<Int>(n, 0));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < n; ++k)
      if (b[i][k] != 0)
        for (std::size_t j = 0; j < n; ++j) bg[i][j] = checked_add(bg[i][j], checked_mul(b[i][k], g(k, j)));
  std::vector<std::vector<Int>> out(n, std::vector<Int>(n, 0));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k)
        if (b[j][k] != 0) out[i][j] = checked_add(out[i][j], checked_mul(bg[i][k], b[j][k]));
  return GramMatrix::from_rows(std::move(out));
}

std::vector<std::vector<Int>> identity_rows(std::size_t n) {
  std::vector<std::vector<Int>> b(n, std::vector<Int>(n, 0));
  for (std::size_t i = 0; i < n; ++i) b[i][i] = 1;
  return b;
}

void check_position(const GramMatrix& g, std::size_t i) {
  if (i < 1 || i + 1 > g.size()) throw Error(ErrorCode::BadPosition, "mutation position must lie in 1..n-1");
}

}  // namespace

GramMatrix GramMatrix::from_rows(std::vector<std::vector<Int>> rows) {
  for (const auto& r : rows)
    if (r.size() != rows.size()) throw Error(ErrorCode::LengthMismatch, "Gram matrix must be square");
  GramMatrix g;
  g.entries = std::move(rows);
  return g;
}

bool GramMatrix::is_unitriangular() const {
  for (std::size_t i = 0; i < size(); ++i)
    for (std::size_t j = 0; j <= i; ++j)
      if (entries[i][j] != (i == j ? 1 : 0)) return false;
  return true;
}

GramMatrix gram_of_collection(const Circuit& c, int n, GramMode mode) {
  if (n < 1) throw Error(ErrorCode::OutOfRange, "need at least one object");
  const BCategory cat = BCategory::build(c, n);
  GramMatrix g;
  g.mode = mode;
  g.entries.assign(n, std::vector<Int>(n, 0));
  if (mode == GramMode::Poincare) g.poly.assign(n, std::vector<Poly>(n));
  for (int j = 0; j < n; ++j) {
    for (int k = j; k < n; ++k) {
      for (const auto& entry : cat.basis(j, k)) {
        const Int deg = entry.grading.degree;
        g.entries[j][k] += (deg % 2 == 0) ? 1 : -1;
        if (mode == GramMode::Poincare) ++g.poly[j][k][deg];
      }
    }
  }
  return g;
}

GramMatrix mutate_left(const GramMatrix& g, std::size_t i) {
  check_position(g, i);
  const std::size_t p = i - 1;
  auto b = identity_rows(g.size());
  b[p][p] = g(p, p + 1);
  b[p][p + 1] = -1;
  b[p + 1][p] = 1;
  b[p + 1][p + 1] = 0;
  return change_basis(g, b);
}

GramMatrix mutate_right(const GramMatrix& g, std::size_t i) {
  check_position(g, i);
  const std::size_t p = i - 1;
  auto b = identity_rows(g.size());
  b[p][p] = 0;
  b[p][p + 1] = 1;
  b[p + 1][p] = -1;
  b[p + 1][p + 1] = g(p, p + 1);
  return change_basis(g, b);
}

GramMatrix half_twist(const GramMatrix& g) {
  GramMatrix out = GramMatrix::from_rows(g.entries);
  for (std::size_t top = 1; top < g.size(); ++top)
    for (std::size_t i = top; i >= 1; --i) out = mutate_left(out, i);
  return out;
}

std::optional<std::vector<int>> diagonal_signs(const GramMatrix& x, const GramMatrix& y) {
  const std::size_t n = x.size();
  if (y.size() != n) return std::nullopt;
  std::vector<int> s(n, 0);
  for (std::size_t root = 0; root < n; ++root) {
    if (s[root] != 0) continue;
    s[root] = 1;
    std::vector<std::size_t> stack{root};
    while (!stack.empty()) {
      const std::size_t i = stack.back();
      stack.pop_back();
      for (std::size_t j = 0; j < n; ++j) {
        const Int v = x(i, j) != 0 ? x(i, j) : x(j, i);
        const Int w = x(i, j) != 0 ? y(i, j) : y(j, i);
        if (v == 0 || i == j) continue;
        if (std::llabs(v) != std::llabs(w)) return std::nullopt;
        const int want = s[i] * ((v == w) ? 1 : -1);
        if (s[j] == 0) {
          s[j] = want;
          stack.push_back(j);
        } else if (s[j] != want) {
          return std::nullopt;
        }
      }
    }
  }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (s[i] * s[j] * x(i, j) != y(i, j)) return std::nullopt;
  return s;
}

bool check_koszul_duality(const Circuit& c, int n) {
  const GramMatrix twisted = half_twist(gram_of_collection(c, n));
  const GramMatrix dual = gram_of_collection(negate(c), n);
  return diagonal_signs(twisted, dual).has_value();
}

}  // namespace circuitcat
