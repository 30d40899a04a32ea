#pragma once

#include <complex>
#include <cstdint>
#include <vector>

#include "tqm/arith.hpp"

namespace tqm {

/// Cyclic decomposition of (Z/fZ)*: one generator per cyclic factor, with
/// discrete logs of every coprime residue precomputed against them.
///
/// Decomposition rule: each odd prime power p^k contributes one factor of
/// order phi(p^k); the factor 2 contributes nothing; 4 contributes one factor
/// of order 2; 2^k (k >= 3) contributes factors of orders 2 and 2^(k-2).
struct UnitGroup {
  std::uint64_t modulus = 1;
  std::vector<std::uint64_t> generators;  // residues mod f
  std::vector<std::uint64_t> orders;      // same length; product == phi(f)
  std::uint64_t phi = 1;
  std::uint64_t exponent = 1;  // lcm of orders

  std::vector<std::uint8_t> coprime;   // size f, 1 iff gcd(a, f) == 1
  std::vector<std::uint32_t> dlog;     // flattened f x rank() table

  std::size_t rank() const { return generators.size(); }
  bool is_coprime(std::uint64_t a) const { return coprime[a % modulus] != 0; }
  const std::uint32_t* dlog_row(std::uint64_t a) const {
    return dlog.data() + (a % modulus) * rank();
  }
};

UnitGroup unit_group(std::uint64_t f);

/// One Dirichlet character mod f, as an exponent vector against the unit
/// group generators. All-zero exponents <=> the trivial character.
struct Character {
  std::uint64_t modulus = 1;
  std::vector<std::uint32_t> exponents;
  std::uint32_t index = 0;  // position in lexicographic enumeration
  bool odd = false;         // chi(-1) == -1, determined exactly
};

enum class Parity { even, odd };

/// All phi(f) characters mod f plus the evaluation machinery. Character
/// values are read off a single precomputed table of exp(2 pi i k / L),
/// L = lcm of the generator orders, indexed exactly; the table is the only
/// place a transcendental is ever called, so values are bit-stable across
/// the whole run. Immutable after construction, safe to share across threads.
class DirichletGroup {
 public:
  explicit DirichletGroup(std::uint64_t f);

  std::uint64_t modulus() const { return units_.modulus; }
  std::uint64_t phi() const { return units_.phi; }
  const UnitGroup& units() const { return units_; }

  /// Lexicographic by exponent vector; index 0 is always trivial.
  const std::vector<Character>& characters() const { return characters_; }
  std::size_t size() const { return characters_.size(); }

  std::complex<double> eval(const Character& chi, std::uint64_t a) const;

  /// chi(a) for every residue a in [0, f), zeros on the non-coprime slots.
  std::vector<std::complex<double>> values_on_residues(const Character& chi) const;

  Parity parity(const Character& chi) const {
    return chi.odd ? Parity::odd : Parity::even;
  }

  std::size_t conjugate_index(const Character& chi) const;

  std::size_t odd_count() const { return odd_count_; }

 private:
  // Index t in [0, exponent) with chi(a) = roots_[t]; npos if gcd(a, f) > 1.
  static constexpr std::uint64_t kNotCoprime = ~std::uint64_t{0};
  std::uint64_t root_index(const Character& chi, std::uint64_t a) const;

  UnitGroup units_;
  std::vector<std::uint64_t> weights_;  // exponent / orders[i]
  std::vector<std::complex<double>> roots_;
  std::vector<Character> characters_;
  std::size_t odd_count_ = 0;
};

/// Convenience wrapper for the enumeration alone.
std::vector<Character> all_characters(std::uint64_t f);

}  // namespace tqm
