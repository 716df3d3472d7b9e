#include "circuitcat/circuit.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "circuitcat/error.hpp"

namespace circuitcat {
namespace {

Int magnitude(Int x) { return x < 0 ? -x : x; }

std::vector<Int> parse_list(std::string_view text) {
  std::vector<Int> out;
  std::string item;
  std::istringstream in{std::string(text)};
  while (std::getline(in, item, ',')) {
    try {
      std::size_t used = 0;
      out.push_back(std::stoll(item, &used));
      if (used != item.size()) throw Error(ErrorCode::ParseError, "bad integer '" + item + "'");
    } catch (const std::logic_error&) {
      throw Error(ErrorCode::ParseError, "bad integer '" + item + "'");
    }
  }
  return out;
}

std::string join(const std::vector<Int>& xs, std::size_t from, std::size_t to) {
  std::ostringstream out;
  for (std::size_t i = from; i < to; ++i) {
    if (i > from) out << ',';
    out << xs[i];
  }
  return out.str();
}

/// "P^k" when every weight is 1, "P(w_0,...,w_k)" otherwise.
std::string projective(const std::vector<Int>& weights) {
  if (std::all_of(weights.begin(), weights.end(), [](Int w) { return w == 1; })) {
    return "P^" + std::to_string(weights.size() - 1);
  }
  return "P(" + join(weights, 0, weights.size()) + ")";
}

}  // namespace

Circuit Circuit::validate(std::span<const Int> a, std::span<const Int> nu) {
  if (a.size() != nu.size()) {
    throw Error(ErrorCode::LengthMismatch, "a and nu must have equal length");
  }
  if (a.size() < 3) throw Error(ErrorCode::TooShort, "need at least 3 entries (d >= 1)");
  for (Int x : a) {
    if (x == 0) throw Error(ErrorCode::ZeroEntry, "every entry of a must be nonzero");
    if (magnitude(x) > kMaxEntry) throw Error(ErrorCode::Overflow, "entry exceeds 2^31");
  }
  for (Int x : nu) {
    if (magnitude(x) > kMaxEntry) throw Error(ErrorCode::Overflow, "nu entry exceeds 2^31");
  }
  if (std::accumulate(a.begin(), a.end(), Int{0}) != 0) {
    throw Error(ErrorCode::UnbalancedA, "entries of a must sum to 0");
  }
  if (std::accumulate(nu.begin(), nu.end(), Int{0}) != 0) {
    throw Error(ErrorCode::UnbalancedNu, "entries of nu must sum to 0");
  }

  std::vector<std::size_t> order(a.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(), [&](std::size_t x, std::size_t y) {
    bool px = a[x] > 0;
    bool py = a[y] > 0;
    if (px != py) return px;
    return magnitude(a[x]) < magnitude(a[y]);
  });

  Circuit c;
  c.perm_ = order;
  for (std::size_t i : order) {
    c.a_.push_back(a[i]);
    c.nu_.push_back(nu[i]);
  }
  c.positives_ = static_cast<std::size_t>(std::count_if(c.a_.begin(), c.a_.end(), [](Int x) { return x > 0; }));
  return c;
}

Circuit Circuit::validate(std::span<const Int> a) {
  std::vector<Int> zeros(a.size(), 0);
  return validate(a, zeros);
}

Circuit Circuit::parse(std::string_view text) {
  std::vector<Int> a;
  std::vector<Int> nu;
  bool have_a = false;
  bool have_nu = false;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find(';', start);
    if (end == std::string_view::npos) end = text.size();
    std::string_view part = text.substr(start, end - start);
    if (part.starts_with("a=")) {
      a = parse_list(part.substr(2));
      have_a = true;
    } else if (part.starts_with("nu=")) {
      nu = parse_list(part.substr(3));
      have_nu = true;
    } else if (!part.empty()) {
      throw Error(ErrorCode::ParseError, "unexpected field '" + std::string(part) + "'");
    }
    start = end + 1;
  }
  if (!have_a) throw Error(ErrorCode::ParseError, "missing 'a=' field");
  if (!have_nu) nu.assign(a.size(), 0);
  return validate(a, nu);
}

Circuit Circuit::from_internal(std::vector<Int> a, std::vector<Int> nu) {
  if (a.size() != nu.size()) throw Error(ErrorCode::LengthMismatch, "a and nu must have equal length");
  if (a.size() < 3) throw Error(ErrorCode::TooShort, "need at least 3 entries (d >= 1)");
  Circuit c;
  c.a_ = std::move(a);
  c.nu_ = std::move(nu);
  c.perm_.resize(c.a_.size());
  std::iota(c.perm_.begin(), c.perm_.end(), std::size_t{0});
  c.positives_ = static_cast<std::size_t>(std::count_if(c.a_.begin(), c.a_.end(), [](Int x) { return x > 0; }));
  for (std::size_t i = 0; i < c.a_.size(); ++i) {
    if (c.a_[i] == 0) throw Error(ErrorCode::ZeroEntry, "every entry of a must be nonzero");
    if ((c.a_[i] > 0) != (i < c.positives_)) {
      throw Error(ErrorCode::BadOrder, "positive entries must come first");
    }
  }
  if (std::accumulate(c.a_.begin(), c.a_.end(), Int{0}) != 0) throw Error(ErrorCode::UnbalancedA, "entries of a must sum to 0");
  if (std::accumulate(c.nu_.begin(), c.nu_.end(), Int{0}) != 0) throw Error(ErrorCode::UnbalancedNu, "entries of nu must sum to 0");
  return c;
}

std::string Circuit::to_string() const {
  return "a=" + join(a_, 0, a_.size()) + ";nu=" + join(nu_, 0, nu_.size());
}

std::string_view to_string(Kind kind) noexcept {
  switch (kind) {
    case Kind::WeightedProjective: return "weighted-projective";
    case Kind::BlowUp: return "blow-up";
    case Kind::Flip: return "flip";
  }
  return "unknown";
}

Circuit validate_circuit(std::span<const Int> a, std::span<const Int> nu) {
  return Circuit::validate(a, nu);
}

Signature signature(const Circuit& c) {
  auto pos = static_cast<Int>(c.positives());
  auto neg = static_cast<Int>(c.size()) - pos;
  return {pos - 1, neg - 1};
}

Int volume(const Circuit& c) {
  Int v = 0;
  for (std::size_t i = 0; i < c.positives(); ++i) v += c.a()[i];
  return v;
}

Circuit negate(const Circuit& c) {
  std::vector<Int> a(c.a());
  std::vector<Int> nu(c.nu());
  for (auto& x : a) x = -x;
  for (auto& x : nu) x = -x;
  return Circuit::validate(a, nu);
}

CobordismKind classify(const Circuit& c) {
  const auto& a = c.a();
  const std::size_t pos = c.positives();
  const std::size_t last = a.size() - 1;
  auto sig = signature(c);

  CobordismKind out;
  out.mu = -a[last];

  std::vector<Int> positive(a.begin(), a.begin() + static_cast<std::ptrdiff_t>(pos));
  std::vector<Int> others;  // negatives other than the distinguished one
  for (std::size_t i = pos; i < last; ++i) others.push_back(a[i]);
  const std::string base = projective(positive);

  if (sig.q == 0) {
    out.kind = Kind::WeightedProjective;
    out.x_plus = base;
    out.x_minus = "∅";
    return out;
  }

  std::string plus;
  for (std::size_t i = 0; i < others.size(); ++i) {
    if (i > 0) plus += "+";
    plus += "O_{" + base + "}(" + std::to_string(others[i]) + ")";
  }
  out.x_plus = plus;

  if (sig.q == 1) {
    out.kind = Kind::BlowUp;
    Int order = -others.front();
    out.x_minus = "C^" + std::to_string(pos) + (order == 1 ? "" : "/Z_" + std::to_string(order));
    return out;
  }

  out.kind = Kind::Flip;
  std::vector<Int> mags;
  for (Int x : others) mags.push_back(-x);
  const std::string minus_base = projective(mags);
  std::string minus;
  for (std::size_t i = 0; i < positive.size(); ++i) {
    if (i > 0) minus += "+";
    minus += "O_{" + minus_base + "}(" + std::to_string(positive[i]) + ")";
  }
  out.x_minus = minus;
  return out;
}

Decomposition decompose(const Circuit& c) {
  if (c.positives() < 2) throw Error(ErrorCode::NeedTwoPositives, "decompose needs two positive entries");
  if (c.size() < 4) throw Error(ErrorCode::TooShort, "decompose needs d >= 2");
  const auto& a = c.a();
  const auto& nu = c.nu();

  std::vector<Int> ab{a[0] + a[1]};
  std::vector<Int> nb{nu[0] + nu[1]};
  ab.insert(ab.end(), a.begin() + 2, a.end());
  nb.insert(nb.end(), nu.begin() + 2, nu.end());

  return {Circuit::from_internal(std::move(ab), std::move(nb)),
          Circuit::from_internal({a[0], a[1], -a[0] - a[1]}, {nu[0], nu[1], -nu[0] - nu[1]})};
}

namespace {

void grow_multisets(std::size_t len, Int lo, Int max_entry, std::vector<Int>& cur, std::vector<Circuit>& out) {
  if (cur.size() == len) {
    Int sum = 0;
    for (Int x : cur) sum += x;
    if (sum == 0) out.push_back(Circuit::validate(cur));
    return;
  }
  for (Int v = lo; v <= max_entry; ++v) {
    if (v == 0) continue;
    cur.push_back(v);
    grow_multisets(len, v, max_entry, cur, out);
    cur.pop_back();
  }
}

void grow_nus(std::size_t len, Int bound, std::vector<Int>& cur, std::vector<std::vector<Int>>& out) {
  if (cur.size() == len) {
    Int sum = 0;
    for (Int x : cur) sum += x;
    if (sum == 0) out.push_back(cur);
    return;
  }
  for (Int v = -bound; v <= bound; ++v) {
    cur.push_back(v);
    grow_nus(len, bound, cur, out);
    cur.pop_back();
  }
}

}  // namespace

std::vector<Circuit> enumerate_circuits(std::size_t max_d, Int max_entry) {
  std::vector<Circuit> out;
  for (std::size_t len = 3; len <= max_d + 2; ++len) {
    std::vector<Circuit> block;
    std::vector<Int> cur;
    grow_multisets(len, -max_entry, max_entry, cur, block);
    std::sort(block.begin(), block.end(), [](const Circuit& x, const Circuit& y) { return x.a() < y.a(); });
    out.insert(out.end(), block.begin(), block.end());
  }
  return out;
}

std::vector<std::vector<Int>> balanced_nus(std::size_t size, Int bound) {
  std::vector<std::vector<Int>> out;
  std::vector<Int> cur;
  grow_nus(size, bound, cur, out);
  return out;
}

}  // namespace circuitcat
