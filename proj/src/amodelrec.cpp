#include "circuitcat/amodelrec.hpp"

#include <algorithm>
#include <sstream>

#include "circuitcat/error.hpp"

namespace circuitcat {
namespace {

void require_two_positives(const Circuit& c) {
  if (c.positives() < 2) throw Error(ErrorCode::NeedTwoPositives, "needs two positive entries");
}

int sgn(Int x) { return (x > 0) - (x < 0); }

// Monomials of weight w over generators with the given weights; odd ones are
// capped at exponent 1. Same descending lexicographic order as
// monomials_of_weight, but usable for a rank-two b that is not a Circuit.
void enumerate_raw(const std::vector<Int>& a, std::size_t i, Int remaining, std::vector<Int>& cur,
                   std::vector<std::vector<Int>>& out) {
  if (i == a.size()) {
    if (remaining == 0) out.push_back(cur);
    return;
  }
  const Int w = a[i] < 0 ? -a[i] : a[i];
  Int cap = remaining / w;
  if (a[i] < 0 && cap > 1) cap = 1;
  for (Int e = cap; e >= 0; --e) {
    cur[i] = e;
    enumerate_raw(a, i + 1, remaining - e * w, cur, out);
  }
  cur[i] = 0;
}

}  // namespace

std::pair<Int, Int> m_split(Int m) { return {std::max<Int>(0, -m), std::max<Int>(0, m)}; }

ShiftPair sigma_shifts(const Circuit& c, Int m) {
  require_two_positives(c);
  auto [m0, m1] = m_split(m);
  return {c.a()[0] * m0 + c.a()[1] * m1, 2 * (c.nu()[0] * m0 + c.nu()[1] * m1)};
}

ChiImage chi(const Circuit& c, const Monomial& x) {
  require_two_positives(c);
  const auto& r = x.exponents;
  const Int e = std::min(r[0], r[1]);
  ChiImage out;
  out.m = (r[1] - e) - (r[0] - e);
  out.inner.exponents.assign(c.size() - 1, 0);
  out.inner.exponents[0] = e;
  for (std::size_t i = 1; i + 1 < c.size(); ++i) out.inner.exponents[i] = r[i + 1];
  return out;
}

Monomial chi_inv(const Circuit& c, Int m, const Monomial& inner) {
  require_two_positives(c);
  if (inner.exponents.size() + 1 != c.size()) throw Error(ErrorCode::OutOfRange, "inner monomial has the wrong rank");
  auto [m0, m1] = m_split(m);
  const Int e = inner.exponents[0];
  Monomial x = Monomial::identity(c.size());
  x.exponents[0] = e + m0;
  x.exponents[1] = e + m1;
  for (std::size_t i = 1; i < inner.exponents.size(); ++i) {
    if (c.is_odd(i + 1) && inner.exponents[i] > 1) {
      throw Error(ErrorCode::ExteriorOverflow, "odd generator with exponent above 1");
    }
    x.exponents[i + 1] = inner.exponents[i];
  }
  return x;
}

std::vector<Summand> hom_decomposition(const Circuit& c, int n, int j, int k) {
  require_two_positives(c);
  if (n > volume(c)) throw Error(ErrorCode::VolumeBound, "n exceeds Vol(a)");
  if (n < 1 || j < 0 || k < 0 || j >= n || k >= n || j > k) {
    throw Error(ErrorCode::OutOfRange, "need 0 <= j <= k <= n-1");
  }
  std::vector<Int> b{c.a()[0] + c.a()[1]};
  std::vector<Int> nu_b{c.nu()[0] + c.nu()[1]};
  b.insert(b.end(), c.a().begin() + 2, c.a().end());
  nu_b.insert(nu_b.end(), c.nu().begin() + 2, c.nu().end());

  std::vector<Summand> out;
  for (Int m : intersection_indices(c.a()[0], c.a()[1], j, k)) {
    Summand s;
    s.m = m;
    s.shift = sigma_shifts(c, m);
    s.target = static_cast<int>(k - s.shift.sigma_w);
    std::vector<std::vector<Int>> raw;
    std::vector<Int> cur(b.size(), 0);
    enumerate_raw(b, 0, s.target - j, cur, raw);
    for (auto& e : raw) {
      Bigrading g;
      for (std::size_t i = 0; i < b.size(); ++i) {
        g.degree += (2 * nu_b[i] + (b[i] < 0 ? 1 : 0)) * e[i];
        g.weight += (b[i] < 0 ? -b[i] : b[i]) * e[i];
      }
      s.basis.push_back({Monomial{std::move(e)}, g});
    }
    out.push_back(std::move(s));
  }
  return out;
}

// ---------------------------------------------------------------------------

ACategory ACategory::build(const Circuit& c, int n) {
  if (n < 1) throw Error(ErrorCode::OutOfRange, "need at least one object");
  if (n > volume(c)) throw Error(ErrorCode::VolumeBound, "n exceeds Vol(a)");

  ACategory cat;
  cat.circuit_ = c;
  cat.n_ = n;

  if (c.positives() < 2) {
    cat.level_ = Level::DualLeaf;
    cat.leaf_ = std::make_shared<const BCategory>(BCategory::build(c, n));
    return cat;
  }

  if (c.size() == 3) {
    cat.level_ = Level::OneDim;
    cat.one_dim_.resize(static_cast<std::size_t>(n));
    for (int d = 0; d < n; ++d) cat.one_dim_[d] = hom_basis_1d(c, n, 0, d);
    return cat;
  }

  cat.level_ = Level::Recursive;
  cat.inner_ = std::make_shared<const ACategory>(build(decompose(c).b, n));
  cat.morphisms_.resize(static_cast<std::size_t>(n));
  cat.lookup_.resize(static_cast<std::size_t>(n));
  for (int d = 0; d < n; ++d) {
    for (Int m : intersection_indices(c.a()[0], c.a()[1], 0, d)) {
      const Int target = d - sigma_shifts(c, m).sigma_w;
      for (std::size_t y = 0; y < cat.inner_->dim_diff(target); ++y) {
        cat.lookup_[d][AMorphism{m, y}] = cat.morphisms_[d].size();
        cat.morphisms_[d].push_back({m, y});
      }
    }
  }

  cat.products_.resize(static_cast<std::size_t>(n));
  for (int d1 = 0; d1 < n; ++d1) {
    cat.products_[d1].resize(static_cast<std::size_t>(n - d1));
    for (int d2 = 0; d1 + d2 < n; ++d2) {
      const std::size_t rows = cat.morphisms_[d1].size();
      auto& table = cat.products_[d1][d2];
      table.resize(rows * cat.morphisms_[d2].size());
      for (std::size_t y = 0; y < cat.morphisms_[d2].size(); ++y)
        for (std::size_t x = 0; x < rows; ++x) table[y * rows + x] = cat.rewrite_diff(d1, d2, y, x);
    }
  }
  return cat;
}

void ACategory::check(int j, int k) const {
  if (j < 0 || k < 0 || j >= n_ || k >= n_) throw Error(ErrorCode::OutOfRange, "object index outside 0..n-1");
}

std::size_t ACategory::dim_diff(Int d) const {
  if (d < 0) return 0;
  switch (level_) {
    case Level::OneDim: return one_dim_[d].size();
    case Level::DualLeaf: return leaf_->dim(0, static_cast<int>(d));
    case Level::Recursive: return morphisms_[d].size();
  }
  return 0;
}

Int ACategory::degree_diff(Int d, std::size_t x) const {
  switch (level_) {
    case Level::OneDim: return one_dim_[d].at(x).degree;
    case Level::DualLeaf: return leaf_->degree(0, static_cast<int>(d), x);
    case Level::Recursive: {
      const AMorphism& am = morphisms_[d].at(x);
      const ShiftPair s = sigma_shifts(circuit_, am.m);
      return inner_->degree_diff(d - s.sigma_w, am.inner) + s.sigma_d;
    }
  }
  return 0;
}

std::size_t ACategory::dim(int j, int k) const {
  check(j, k);
  return j > k ? 0 : dim_diff(k - j);
}

Int ACategory::degree(int j, int k, std::size_t x) const {
  check(j, k);
  if (j > k) throw Error(ErrorCode::OutOfRange, "empty Hom space");
  return degree_diff(k - j, x);
}

std::string ACategory::label(int j, int k, std::size_t x) const {
  check(j, k);
  if (j > k) throw Error(ErrorCode::OutOfRange, "empty Hom space");
  const Int d = k - j;
  switch (level_) {
    case Level::OneDim: {
      const Hom1dElement& e = one_dim_[d].at(x);
      if (e.identity) return "1";
      return "p" + std::to_string(e.branch) + (e.power > 1 ? "^" + std::to_string(e.power) : "");
    }
    case Level::DualLeaf: return leaf_->label(0, static_cast<int>(d), x);
    case Level::Recursive: {
      const AMorphism& am = morphisms_[d].at(x);
      const Int target = d - sigma_shifts(circuit_, am.m).sigma_w;
      return "z^" + std::to_string(am.m) + "[" + inner_->label(0, static_cast<int>(target), am.inner) + "]";
    }
  }
  return {};
}

const AMorphism& ACategory::morphism(int j, int k, std::size_t x) const {
  check(j, k);
  if (level_ != Level::Recursive || j > k) throw Error(ErrorCode::WrongHom, "not a recursive-level Hom space");
  return morphisms_[k - j].at(x);
}

const Hom1dElement& ACategory::element_1d(int j, int k, std::size_t x) const {
  check(j, k);
  if (level_ != Level::OneDim || j > k) throw Error(ErrorCode::WrongHom, "not a one-dimensional Hom space");
  return one_dim_[k - j].at(x);
}

std::size_t ACategory::index_of(Int d, const AMorphism& am) const {
  auto it = lookup_[d].find(am);
  if (it == lookup_[d].end()) {
    throw Error(ErrorCode::OutOfBounds, "spectral index " + std::to_string(am.m) + " outside Hom decomposition");
  }
  return it->second;
}

SignedIndex ACategory::compose(int i, int j, int k, std::size_t later, std::size_t earlier) const {
  check(i, j);
  check(j, k);
  if (i > j || j > k) throw Error(ErrorCode::BadOrder, "compose needs i <= j <= k");
  if (earlier >= dim_diff(j - i) || later >= dim_diff(k - j)) throw Error(ErrorCode::OutOfRange, "basis index out of range");
  return compose_diff(j - i, k - j, later, earlier);
}

SignedIndex ACategory::compose_by_rewriting(int i, int j, int k, std::size_t later, std::size_t earlier) const {
  check(i, j);
  check(j, k);
  if (i > j || j > k) throw Error(ErrorCode::BadOrder, "compose needs i <= j <= k");
  if (earlier >= dim_diff(j - i) || later >= dim_diff(k - j)) throw Error(ErrorCode::OutOfRange, "basis index out of range");
  if (level_ != Level::Recursive) return compose_diff(j - i, k - j, later, earlier);
  return rewrite_diff(j - i, k - j, later, earlier);
}

SignedIndex ACategory::compose_diff(Int d1, Int d2, std::size_t later, std::size_t earlier) const {
  switch (level_) {
    case Level::OneDim: {
      const Hom1dElement p = compose_1d(one_dim_[d2].at(later), one_dim_[d1].at(earlier));
      const auto& target = one_dim_[d1 + d2];
      for (std::size_t x = 0; x < target.size(); ++x) {
        if (target[x].identity == p.identity && (p.identity || (target[x].branch == p.branch && target[x].power == p.power))) {
          return {1, x};
        }
      }
      throw Error(ErrorCode::OutOfBounds, "product outside the one-dimensional basis");
    }
    case Level::DualLeaf:
      return leaf_->compose(0, static_cast<int>(d1), static_cast<int>(d1 + d2), later, earlier);
    case Level::Recursive:
      return products_[d1][d2][later * morphisms_[d1].size() + earlier];
  }
  return {};
}

SignedIndex ACategory::rewrite_diff(Int d1, Int d2, std::size_t later, std::size_t earlier) const {
  const Element e{1, d1, morphisms_[d1].at(earlier)};
  const Element l{1, d2, morphisms_[d2].at(later)};
  auto r = rewrite(l, e);
  if (!r) return {};
  return {r->sign, index_of(r->diff, r->value)};
}

ACategory::Element ACategory::step(Int m) const {
  return {1, sigma_shifts(circuit_, m).sigma_w, {m, 0}};
}

// Same signs: (m1, y1) o (m0, y0) = (m0 + m1, y1 o y0), the b-level product taken
// at the shifted position.
std::optional<ACategory::Element> ACategory::same_sign(const Element& later, const Element& earlier) const {
  const Int e0 = earlier.diff - sigma_shifts(circuit_, earlier.value.m).sigma_w;
  const Int e1 = later.diff - sigma_shifts(circuit_, later.value.m).sigma_w;
  const SignedIndex r = inner_->compose_diff(e0, e1, later.value.inner, earlier.value.inner);
  if (r.is_zero()) return std::nullopt;
  return Element{later.sign * earlier.sign * r.sign, earlier.diff + later.diff,
                 {earlier.value.m + later.value.m, r.index}};
}

// Opposite signs: factor (m1, y1) = (0, y1) o (m1, 1) and (m0, y0) = (m0, 1) o (0, y0),
// then peel unit steps off the middle using (+-1, 1) o (-+1, 1) = (0, w0).
std::optional<ACategory::Element> ACategory::rewrite(const Element& later, const Element& earlier) const {
  const Int m0 = earlier.value.m;
  const Int m1 = later.value.m;
  if (m0 * m1 >= 0) return same_sign(later, earlier);

  const Element bare_earlier{earlier.sign, earlier.diff - sigma_shifts(circuit_, m0).sigma_w, {0, earlier.value.inner}};
  const Element bare_later{later.sign, later.diff - sigma_shifts(circuit_, m1).sigma_w, {0, later.value.inner}};

  const Element merged{1, circuit_.a()[0] + circuit_.a()[1], {0, inner_->generator(0)}};
  auto middle = same_sign(step(m1 - sgn(m1)), merged);
  if (middle && m0 - sgn(m0) != 0) middle = rewrite(*middle, step(m0 - sgn(m0)));
  if (!middle) return std::nullopt;

  auto right = same_sign(*middle, bare_earlier);
  if (!right) return std::nullopt;
  return same_sign(bare_later, *right);
}

std::size_t ACategory::generator(std::size_t r) const {
  if (r >= circuit_.positives()) throw Error(ErrorCode::OutOfRange, "generator index must be a positive entry");
  const Int d = circuit_.a()[r];
  if (d >= n_) throw Error(ErrorCode::WrongHom, "Hom(L_0, L_{a_r}) needs n > a_r");
  switch (level_) {
    case Level::OneDim: {
      const auto& basis = one_dim_[d];
      for (std::size_t x = 0; x < basis.size(); ++x)
        if (!basis[x].identity && basis[x].branch == static_cast<int>(r) && basis[x].power == 1) return x;
      break;
    }
    case Level::DualLeaf:
      return leaf_->index_of(0, static_cast<int>(d), Monomial::generator(circuit_.size(), r));
    case Level::Recursive:
      if (r == 0) return index_of(d, {-1, 0});
      if (r == 1) return index_of(d, {1, 0});
      return index_of(d, {0, inner_->generator(r - 1)});
  }
  throw Error(ErrorCode::WrongHom, "generator not found");
}

int ACategory::kappa(std::size_t r, std::size_t x) const {
  const std::size_t g = generator(r);
  if (x >= dim_diff(circuit_.a()[r])) throw Error(ErrorCode::WrongHom, "element is not in Hom(L_0, L_{a_r})");
  return x == g ? 1 : 0;
}

int kappa(const ACategory& cat, std::size_t r, std::size_t x) { return cat.kappa(r, x); }

std::vector<std::string> ACategory::dual_leaves() const {
  if (level_ == Level::DualLeaf) return {circuit_.to_string()};
  if (level_ == Level::Recursive) return inner_->dual_leaves();
  return {};
}

std::size_t ACategory::xi(int j, int k, const Monomial& x) const {
  check(j, k);
  if (j > k) throw Error(ErrorCode::WrongHom, "empty Hom space");
  const Int d = k - j;
  switch (level_) {
    case Level::DualLeaf: return leaf_->index_of(0, static_cast<int>(d), x);
    case Level::OneDim: {
      int branch = -1;
      for (std::size_t i = 0; i < x.exponents.size(); ++i) {
        if (x.exponents[i] == 0) continue;
        if (i > 1 || branch >= 0) throw Error(ErrorCode::WrongHom, x.to_string() + " lies outside the unfolded range");
        branch = static_cast<int>(i);
      }
      const auto& basis = one_dim_[d];
      for (std::size_t e = 0; e < basis.size(); ++e) {
        if (branch < 0 ? basis[e].identity
                       : (!basis[e].identity && basis[e].branch == branch && basis[e].power == x.exponents[branch])) {
          return e;
        }
      }
      throw Error(ErrorCode::WrongHom, x.to_string() + " has no image in Hom(L_j, L_k)");
    }
    case Level::Recursive: {
      const ChiImage image = chi(circuit_, x);
      const Int target = d - sigma_shifts(circuit_, image.m).sigma_w;
      if (target < 0) throw Error(ErrorCode::WrongHom, "monomial weight does not match Hom(L_j, L_k)");
      return index_of(d, {image.m, inner_->xi(0, static_cast<int>(target), image.inner)});
    }
  }
  return 0;
}

Monomial ACategory::xi_inverse(int j, int k, std::size_t x) const {
  check(j, k);
  if (j > k) throw Error(ErrorCode::WrongHom, "empty Hom space");
  const Int d = k - j;
  switch (level_) {
    case Level::DualLeaf: return leaf_->basis(0, static_cast<int>(d)).at(x).monomial;
    case Level::OneDim: {
      const Hom1dElement& e = one_dim_[d].at(x);
      if (e.identity) return Monomial::identity(circuit_.size());
      return Monomial::generator(circuit_.size(), static_cast<std::size_t>(e.branch), e.power);
    }
    case Level::Recursive: {
      const AMorphism& am = morphisms_[d].at(x);
      const Int target = d - sigma_shifts(circuit_, am.m).sigma_w;
      return chi_inv(circuit_, am.m, inner_->xi_inverse(0, static_cast<int>(target), am.inner));
    }
  }
  return {};
}

SignedIndex compose_by_transport(const ACategory& cat, int i, int j, int k, std::size_t later, std::size_t earlier) {
  const Monomial y = cat.xi_inverse(j, k, later);
  const Monomial x = cat.xi_inverse(i, j, earlier);
  const SignedMonomial p = multiply(cat.circuit(), y, x);
  if (p.is_zero()) return {};
  return {p.sign, cat.xi(i, k, p.monomial)};
}

IsoReport verify_iso(const Circuit& c, int n) {
  IsoReport report;
  report.circuit = c.to_string();
  report.n = n;
  const BCategory b = BCategory::build(c, n);
  const ACategory a = ACategory::build(c, n);
  report.dual_leaves = a.dual_leaves();

  auto fail = [&](bool& flag, std::string kind, int i, int j, int k, std::string detail) {
    flag = false;
    if (!report.witness) report.witness = Witness{std::move(kind), i, j, k, std::move(detail)};
  };

  // images[(j,k)] = Xi on the monomial basis of Hom(R(j), R(k)).
  std::vector<std::vector<std::vector<std::size_t>>> images(n, std::vector<std::vector<std::size_t>>(n));
  for (int j = 0; j < n; ++j) {
    for (int k = j; k < n; ++k) {
      ++report.pairs_checked;
      const auto& basis = b.basis(j, k);
      if (basis.size() != a.dim(j, k)) {
        fail(report.dims_match, "dimension", -1, j, k,
             "B dim " + std::to_string(basis.size()) + " vs A dim " + std::to_string(a.dim(j, k)));
        continue;
      }
      std::vector<bool> hit(basis.size(), false);
      for (const auto& entry : basis) {
        std::size_t y = 0;
        try {
          y = a.xi(j, k, entry.monomial);
        } catch (const Error& e) {
          fail(report.dims_match, "bijection", -1, j, k, entry.monomial.to_string() + ": " + e.what());
          break;
        }
        if (hit[y]) {
          fail(report.dims_match, "bijection", -1, j, k, entry.monomial.to_string() + " collides");
          break;
        }
        hit[y] = true;
        images[j][k].push_back(y);
        if (a.degree(j, k, y) != entry.grading.degree) {
          fail(report.degrees_match, "degree", -1, j, k,
               entry.monomial.to_string() + " has degree " + std::to_string(entry.grading.degree) + " but " +
                   a.label(j, k, y) + " has " + std::to_string(a.degree(j, k, y)));
        }
      }
    }
  }
  if (!report.dims_match) return report;

  for (int i = 0; i < n; ++i)
    for (int j = i; j < n; ++j)
      for (int k = j; k < n; ++k)
        for (std::size_t y = 0; y < b.dim(j, k); ++y)
          for (std::size_t x = 0; x < b.dim(i, j); ++x) {
            ++report.compositions_checked;
            const SignedIndex expected = [&]() -> SignedIndex {
              const SignedIndex p = b.compose(i, j, k, y, x);
              if (p.is_zero()) return {};
              return {p.sign, images[i][k][p.index]};
            }();
            const SignedIndex actual = a.compose(i, j, k, images[j][k][y], images[i][j][x]);
            const bool same = (expected.is_zero() && actual.is_zero()) || expected == actual;
            if (!same) {
              fail(report.compositions_match, "composition", i, j, k,
                   b.label(j, k, y) + " o " + b.label(i, j, x) + ": expected sign " +
                       std::to_string(expected.sign) + ", got sign " + std::to_string(actual.sign));
            }
          }
  return report;
}

}  // namespace circuitcat
