// One line per acceptance criterion; exit status is the number of failures.

#include <chrono>
#include <functional>
#include <iomanip>
#include <iostream>
#include <map>
#include <random>
#include <set>
#include <sstream>

#include "circuitcat/amodelrec.hpp"
#include "circuitcat/mutation.hpp"
#include "oracles.hpp"

using namespace circuitcat;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;
};

struct Instance {
  Circuit c;
  int n;
};

/// d <= 3, |a_i| <= 5, every balanced nu with |nu_i| <= 1, every n < Vol(a).
const std::vector<Instance>& sweep() {
  static const std::vector<Instance> all = [] {
    std::vector<Instance> out;
    for (const Circuit& base : enumerate_circuits(3, 5))
      for (const auto& nu : balanced_nus(base.size(), 1)) {
        const Circuit c = Circuit::from_internal(base.a(), nu);
        for (int n = 1; n < volume(c); ++n) out.push_back({c, n});
      }
    return out;
  }();
  return all;
}

std::string describe(const Circuit& c, int n) { return c.to_string() + " n=" + std::to_string(n); }

Outcome figures() {
  struct Pictured {
    std::vector<Int> a;
    std::size_t nodes;
    std::map<std::string, std::multiset<std::pair<int, int>>> arrows;
  };
  const std::vector<Pictured> figs{
      {{1, 1, -2}, 2, {{"v0", {{0, 1}}}, {"v1", {{0, 1}}}}},
      {{2, 3, -5}, 5, {{"v0", {{0, 2}, {1, 3}, {2, 4}}}, {"v1", {{0, 3}, {1, 4}}}}},
      {{1, 2, 3, -1, -5},
       5,
       {{"v0", {{0, 1}, {1, 2}, {2, 3}, {3, 4}}},
        {"v3", {{0, 1}, {1, 2}, {2, 3}, {3, 4}}},
        {"v1", {{0, 2}, {2, 4}, {1, 3}}},
        {"v2", {{0, 3}, {1, 4}}}}}};
  std::ostringstream s;
  for (const Pictured& f : figs) {
    const Circuit c = Circuit::validate(f.a);
    const BCategory cat = BCategory::build(c, static_cast<int>(f.nodes));
    std::map<std::string, std::multiset<std::pair<int, int>>> got;
    for (const Arrow& a : quiver(c, static_cast<int>(f.nodes))) got[a.label].insert({a.source, a.target});
    std::size_t edges = 0;
    for (const auto& [label, set] : got) edges += set.size();
    s << cat.objects() << "/" << edges << " ";
    if (got != f.arrows || static_cast<std::size_t>(cat.objects()) != f.nodes) {
      return {false, c.to_string() + " quiver differs from the figure"};
    }
  }
  return {true, "nodes/arrows " + s.str()};
}

Outcome intersections() {
  std::size_t cases = 0;
  for (Int a0 = 1; a0 <= 12; ++a0)
    for (Int a1 = 1; a1 <= 12; ++a1)
      for (Int delta = 0; delta <= 60; ++delta) {
        ++cases;
        const Int count = intersection_count(a0, a1, 0, delta);
        const auto idx = intersection_indices(a0, a1, 0, delta);
        const auto geo = geometric_oracle(a0, a1, 0, delta);
        if (count != static_cast<Int>(idx.size()) || count != static_cast<Int>(geo.size()) ||
            idx != oracle::intersections(a0, a1, delta)) {
          return {false, "a0=" + std::to_string(a0) + " a1=" + std::to_string(a1) + " k-j=" + std::to_string(delta)};
        }
      }
  return {true, std::to_string(cases) + " (a0,a1,k-j) cases"};
}

Outcome chi_dimensions() {
  std::size_t circuits = 0, monomials = 0;
  for (const Circuit& c : enumerate_circuits(4, 6)) {
    if (c.positives() < 2) continue;
    ++circuits;
    std::vector<Int> b{c.a()[0] + c.a()[1]};
    b.insert(b.end(), c.a().begin() + 2, c.a().end());
    for (Int s = 0; s <= 20; ++s) {
      const auto all = oracle::monomials(c.a(), s);
      std::size_t summed = 0;
      for (Int m : oracle::intersections(c.a()[0], c.a()[1], s))
        summed += oracle::monomials(b, s - sigma_shifts(c, m).sigma_w).size();
      if (all.size() != summed) return {false, c.to_string() + " weight " + std::to_string(s)};
      for (const auto& e : all) {
        ++monomials;
        const Monomial x{e};
        const ChiImage img = chi(c, x);
        if (!(chi_inv(c, img.m, img.inner) == x)) return {false, c.to_string() + " " + x.to_string()};
      }
    }
  }
  if (circuits < 200) return {false, "only " + std::to_string(circuits) + " circuits"};
  return {true, std::to_string(circuits) + " circuits, " + std::to_string(monomials) + " monomials"};
}

Outcome amodel_theorem() {
  std::size_t compositions = 0, leaves = 0;
  for (const Instance& in : sweep()) {
    const IsoReport r = verify_iso(in.c, in.n);
    compositions += r.compositions_checked;
    if (!r.ok()) return {false, describe(in.c, in.n) + ": " + r.witness->kind + " " + r.witness->detail};
    if (!r.dual_leaves.empty()) ++leaves;
    const ACategory a = ACategory::build(in.c, in.n);
    for (int i = 0; i < in.n; ++i)
      for (int j = i; j < in.n; ++j)
        for (int k = j; k < in.n; ++k)
          for (std::size_t y = 0; y < a.dim(j, k); ++y)
            for (std::size_t x = 0; x < a.dim(i, j); ++x)
              if (!(a.compose_by_rewriting(i, j, k, y, x) == compose_by_transport(a, i, j, k, y, x))) {
                return {false, describe(in.c, in.n) + ": rewriting and transport differ"};
              }
  }
  return {true, std::to_string(sweep().size()) + " instances (" + std::to_string(sweep().size() - leaves) +
                    " without dual leaves, " + std::to_string(leaves) + " with), " +
                    std::to_string(compositions) + " compositions"};
}

Outcome associativity() {
  for (const Instance& in : sweep()) {
    if (check_associativity(BCategory::build(in.c, in.n))) return {false, "B side " + describe(in.c, in.n)};
    if (check_associativity(ACategory::build(in.c, in.n))) return {false, "A side " + describe(in.c, in.n)};
  }
  return {true, std::to_string(sweep().size()) + " instances, both sides"};
}

Outcome index_formula() {
  std::size_t checked = 0;
  for (const Instance& in : sweep()) {
    if (in.c.size() != 3 || in.c.positives() != 2) continue;
    for (int k = 0; k < in.n; ++k)
      for (const Hom1dElement& e : hom_basis_1d(in.c, in.n, 0, k)) {
        if (e.identity) continue;
        ++checked;
        const Monomial v = Monomial::generator(3, static_cast<std::size_t>(e.branch), e.power);
        if (e.degree != 2 * in.c.nu()[e.branch] * e.power ||
            e.degree != oracle::degree(in.c.a(), in.c.nu(), v.exponents)) {
          return {false, describe(in.c, in.n) + " " + v.to_string()};
        }
      }
  }
  return {true, std::to_string(checked) + " intersection points"};
}

Outcome kappa_table() {
  std::size_t checked = 0;
  for (const Instance& in : sweep()) {
    const ACategory a = ACategory::build(in.c, in.n);
    for (std::size_t r = 0; r < in.c.positives(); ++r) {
      const Int ar = in.c.a()[r];
      if (in.n <= ar) continue;
      const std::size_t gen = a.xi(0, static_cast<int>(ar), Monomial::generator(in.c.size(), r));
      for (std::size_t x = 0; x < a.dim(0, static_cast<int>(ar)); ++x) {
        ++checked;
        if (kappa(a, r, x) != (x == gen ? 1 : 0)) return {false, describe(in.c, in.n) + " r=" + std::to_string(r)};
      }
    }
  }
  return {true, std::to_string(checked) + " basis elements"};
}

Outcome koszul() {
  std::size_t circuits = 0;
  std::map<std::pair<std::vector<Int>, std::vector<Int>>, bool> seen;
  for (const Instance& in : sweep()) {
    const int n = static_cast<int>(std::min<Int>(6, volume(in.c)));
    if (seen.emplace(std::make_pair(in.c.a(), in.c.nu()), true).second) {
      for (int m = 1; m <= n; ++m) {
        ++circuits;
        if (!check_koszul_duality(in.c, m)) return {false, describe(in.c, m)};
      }
    }
  }
  std::mt19937_64 rng(20240601);
  std::uniform_int_distribution<Int> entry(-5, 5);
  std::uniform_int_distribution<std::size_t> size(3, 6);
  std::size_t relations = 0;
  for (int trial = 0; trial < 1000; ++trial) {
    const std::size_t n = size(rng);
    std::vector<std::vector<Int>> rows(n, std::vector<Int>(n, 0));
    for (std::size_t i = 0; i < n; ++i) {
      rows[i][i] = 1;
      for (std::size_t j = i + 1; j < n; ++j) rows[i][j] = entry(rng);
    }
    const GramMatrix g = GramMatrix::from_rows(rows);
    for (std::size_t i = 1; i + 1 < n; ++i) {
      ++relations;
      if (!(mutate_left(mutate_left(mutate_left(g, i), i + 1), i) ==
            mutate_left(mutate_left(mutate_left(g, i + 1), i), i + 1))) {
        return {false, "braid relation fails at trial " + std::to_string(trial)};
      }
    }
    for (std::size_t i = 1; i < n; ++i)
      for (std::size_t j = i + 2; j < n; ++j) {
        ++relations;
        if (!(mutate_left(mutate_left(g, i), j) == mutate_left(mutate_left(g, j), i))) {
          return {false, "distant commutation fails at trial " + std::to_string(trial)};
        }
      }
  }
  return {true, std::to_string(circuits) + " (circuit, n) duality checks, " + std::to_string(relations) +
                    " braid relations on 1000 matrices"};
}

Outcome spectral_additivity() {
  std::size_t checked = 0;
  for (const Instance& in : sweep()) {
    const ACategory a = ACategory::build(in.c, in.n);
    if (a.level() != ACategory::Level::Recursive) continue;
    const Int a0 = in.c.a()[0], a1 = in.c.a()[1];
    for (int i = 0; i < in.n; ++i)
      for (int j = i; j < in.n; ++j)
        for (int k = j; k < in.n; ++k)
          for (std::size_t y = 0; y < a.dim(j, k); ++y)
            for (std::size_t x = 0; x < a.dim(i, j); ++x) {
              const SignedIndex r = a.compose(i, j, k, y, x);
              if (r.is_zero()) continue;
              ++checked;
              const Int m = a.morphism(i, k, r.index).m;
              const bool additive = m == a.morphism(i, j, x).m + a.morphism(j, k, y).m;
              const bool bounded = -(k - i) <= m * a0 && m * a1 <= k - i;
              if (!additive || !bounded) return {false, describe(in.c, in.n)};
            }
  }
  for (Int a0 = 1; a0 <= 12; ++a0)
    for (Int a1 = 1; a1 <= 12; ++a1)
      for (Int k1 = 1; k1 <= 12; ++k1)
        for (Int k2 = k1 + 1; k2 <= 24; ++k2)
          for (Int n1 : intersection_indices(a0, a1, 0, k1))
            for (Int n2 : intersection_indices(a0, a1, k1, k2)) {
              ++checked;
              const Int m = triangle_product(a0, a1, 0, k1, k2, n1, n2).m;
              if (m != n1 + n2 || -k2 > m * a0 || m * a1 > k2) return {false, "triangle bound"};
            }
  return {true, std::to_string(checked) + " composable pairs"};
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
      {"figure-exact quivers", figures},
      {"intersection formula oracle", intersections},
      {"chi bijectivity and dimension identity", chi_dimensions},
      {"A-model equivalence", amodel_theorem},
      {"associativity", associativity},
      {"one-dimensional index formula", index_formula},
      {"kappa table", kappa_table},
      {"Koszul duality and braid relations", koszul},
      {"spectral additivity and bound closure", spectral_additivity},
  };
  int failures = 0;
  const auto start = std::chrono::steady_clock::now();
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    failures += o.pass ? 0 : 1;
    std::cout << (o.pass ? "PASS" : "FAIL") << "  " << (i + 1) << ". " << criteria[i].first << " -- " << o.detail
              << " (" << std::fixed << std::setprecision(2) << secs << "s)\n";
  }
  const double total = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  std::cout << (criteria.size() - failures) << "/" << criteria.size() << " criteria passed in " << std::fixed
            << std::setprecision(2) << total << "s\n";
  return failures;
}
