#include "circuitcat/emit.hpp"

#include <sstream>

namespace circuitcat {
namespace {

template <class Cat, class Basis>
Json category_json(const Cat& cat, Basis basis_entry) {
  const int n = cat.objects();
  Json out;
  out["objects"] = n;
  Json homs = Json::array();
  Json comps = Json::array();
  for (int j = 0; j < n; ++j) {
    for (int k = j; k < n; ++k) {
      Json basis = Json::array();
      for (std::size_t x = 0; x < cat.dim(j, k); ++x) basis.push_back(basis_entry(j, k, x));
      homs.push_back({{"src", j}, {"dst", k}, {"basis", std::move(basis)}});
    }
  }
  for (int i = 0; i < n; ++i)
    for (int j = i; j < n; ++j)
      for (int k = j; k < n; ++k)
        for (std::size_t y = 0; y < cat.dim(j, k); ++y)
          for (std::size_t x = 0; x < cat.dim(i, j); ++x) {
            const SignedIndex r = cat.compose(i, j, k, y, x);
            comps.push_back({{"i", i},
                             {"j", j},
                             {"k", k},
                             {"left", y},
                             {"right", x},
                             {"sign", r.sign},
                             {"result", r.is_zero() ? Json() : Json(r.index)}});
          }
  out["homs"] = std::move(homs);
  out["compositions"] = std::move(comps);
  return out;
}

}  // namespace

std::string emit_dot(const std::vector<Arrow>& arrows, int n) {
  std::ostringstream out;
  out << "digraph circuitcat {\n";
  for (int i = 0; i < n; ++i) out << "  R" << i << ";\n";
  for (const Arrow& a : arrows) {
    out << "  R" << a.source << " -> R" << a.target << " [label=\"" << a.label << "\"];\n";
  }
  out << "}\n";
  return out.str();
}

std::string emit_dot(const Circuit& c, int n) { return emit_dot(quiver(c, n), n); }

Json to_json(const Circuit& c) {
  return {{"a", c.a()}, {"nu", c.nu()}, {"perm", c.perm()}};
}

Json info_json(const Circuit& c) {
  const Signature s = signature(c);
  const CobordismKind k = classify(c);
  Json out = to_json(c);
  out["signature"] = {s.p, s.q};
  out["volume"] = volume(c);
  out["kind"] = to_string(k.kind);
  out["mu"] = k.mu;
  out["x_plus"] = k.x_plus;
  out["x_minus"] = k.x_minus;
  return out;
}

Json to_json(const BCategory& cat) {
  return category_json(cat, [&](int j, int k, std::size_t x) {
    const BasisEntry& e = cat.basis(j, k)[x];
    return Json{{"exp", e.monomial.exponents}, {"deg", e.grading.degree}, {"wt", e.grading.weight}};
  });
}

Json to_json(const ACategory& cat) {
  return category_json(cat, [&](int j, int k, std::size_t x) {
    Json e{{"label", cat.label(j, k, x)}, {"deg", cat.degree(j, k, x)}};
    if (cat.level() == ACategory::Level::Recursive) {
      const AMorphism& am = cat.morphism(j, k, x);
      e["m"] = am.m;
      e["inner"] = am.inner;
    }
    return e;
  });
}

Json to_json(const IsoReport& r) {
  Json out{{"circuit", r.circuit},
           {"n", r.n},
           {"pairs_checked", r.pairs_checked},
           {"compositions_checked", r.compositions_checked},
           {"dims_match", r.dims_match},
           {"degrees_match", r.degrees_match},
           {"compositions_match", r.compositions_match},
           {"dual_leaves", r.dual_leaves}};
  if (r.witness) {
    out["witness"] = {{"kind", r.witness->kind},
                      {"i", r.witness->i},
                      {"j", r.witness->j},
                      {"k", r.witness->k},
                      {"detail", r.witness->detail}};
  } else {
    out["witness"] = nullptr;
  }
  return out;
}

Json to_json(const GramMatrix& g) {
  if (g.mode == GramMode::Euler) return Json(g.entries);
  Json poly = Json::array();
  for (const auto& row : g.poly) {
    Json r = Json::array();
    for (const Poly& p : row) {
      Json terms = Json::object();
      for (const auto& [deg, coeff] : p) terms[std::to_string(deg)] = coeff;
      r.push_back(std::move(terms));
    }
    poly.push_back(std::move(r));
  }
  return {{"euler", g.entries}, {"poincare", std::move(poly)}};
}

}  // namespace circuitcat
