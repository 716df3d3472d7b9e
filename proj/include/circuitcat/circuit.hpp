#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace circuitcat {

using Int = std::int64_t;

/// Largest admissible |a_i|; keeps every weight and degree inside 64 bits.
inline constexpr Int kMaxEntry = Int{1} << 31;

/// A balanced lattice datum (a, nu) stored in internal order: positive entries
/// of `a` first, then negative ones, each block by ascending magnitude.
///
/// `perm()[i]` is the position in the caller's input that landed at internal
/// position i.
class Circuit {
 public:
  /// Validates and normalizes. Throws Error with UnbalancedA, UnbalancedNu,
  /// ZeroEntry, TooShort, Overflow or LengthMismatch.
  static Circuit validate(std::span<const Int> a, std::span<const Int> nu);
  static Circuit validate(std::span<const Int> a);

  /// Parses "a=1,2,3,-1,-5;nu=0,0,0,0,0" (the nu part is optional).
  static Circuit parse(std::string_view text);

  /// Builds a circuit whose order is already "positives first" without
  /// re-sorting. Used where generator positions must be preserved.
  static Circuit from_internal(std::vector<Int> a, std::vector<Int> nu);

  const std::vector<Int>& a() const noexcept { return a_; }
  const std::vector<Int>& nu() const noexcept { return nu_; }
  const std::vector<std::size_t>& perm() const noexcept { return perm_; }

  /// Number of generators, d + 2.
  std::size_t size() const noexcept { return a_.size(); }
  std::size_t dim() const noexcept { return a_.size() - 2; }
  std::size_t positives() const noexcept { return positives_; }
  bool is_odd(std::size_t i) const noexcept { return a_[i] < 0; }
  Int weight_of(std::size_t i) const noexcept { return a_[i] < 0 ? -a_[i] : a_[i]; }

  std::string to_string() const;

  friend bool operator==(const Circuit& x, const Circuit& y) {
    return x.a_ == y.a_ && x.nu_ == y.nu_;
  }

 private:
  Circuit() = default;

  std::vector<Int> a_;
  std::vector<Int> nu_;
  std::vector<std::size_t> perm_;
  std::size_t positives_ = 0;
};

struct Signature {
  Int p = 0;
  Int q = 0;
  friend bool operator==(const Signature&, const Signature&) = default;
};

enum class Kind { WeightedProjective, BlowUp, Flip };

std::string_view to_string(Kind kind) noexcept;

struct CobordismKind {
  Kind kind = Kind::WeightedProjective;
  Int mu = 0;
  std::string x_plus;
  std::string x_minus;
};

Circuit validate_circuit(std::span<const Int> a, std::span<const Int> nu);
Signature signature(const Circuit& c);
Int volume(const Circuit& c);
Circuit negate(const Circuit& c);
CobordismKind classify(const Circuit& c);

struct Decomposition {
  Circuit b;
  Circuit c;
};

/// Merges the first two positive generators: b = (a0+a1, a2, ..., a_{d+1}) and
/// c = (a0, a1, -a0-a1), with nu split accordingly. b keeps the merged
/// generator at position 0 so that w_i in b corresponds to v_{i+1} in a.
Decomposition decompose(const Circuit& c);

/// One circuit per multiset: every balanced a with 1 <= d <= max_d and
/// 1 <= |a_i| <= max_entry, nu = 0, in increasing (size, a) order.
std::vector<Circuit> enumerate_circuits(std::size_t max_d, Int max_entry);

/// Every balanced nu of the given length with |nu_i| <= bound, lexicographic.
std::vector<std::vector<Int>> balanced_nus(std::size_t size, Int bound);

}  // namespace circuitcat
