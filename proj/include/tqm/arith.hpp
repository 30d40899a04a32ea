#pragma once

#include <cstdint>
#include <vector>

namespace tqm {

struct PrimePower {
  std::uint64_t prime;
  unsigned exponent;
  bool operator==(const PrimePower&) const = default;
};

/// Prime-power decomposition, sorted ascending by prime. Empty for n = 1.
using Factorization = std::vector<PrimePower>;

/// Trial division up to sqrt(n). Throws std::invalid_argument for n = 0.
Factorization factorize(std::uint64_t n);

/// Moebius function: 0 if n has a squared factor, else (-1)^(#prime factors).
int mobius(std::uint64_t n);

std::uint64_t euler_phi(std::uint64_t n);
std::uint64_t euler_phi(const Factorization& f);

/// sum over p | f of log(p)/(p-1).
///
/// This is the prime sum that equals -(f/phi(f)) * sum_{d|f} mu(d) log(d)/d,
/// and it appears inside every main-term expression of the moment formulas.
double mobius_log_sum(std::uint64_t f);
double mobius_log_sum(const Factorization& f);

/// Smallest generator of (Z/qZ)* for q an odd prime power. Throws for
/// anything else. Order is confirmed exactly via the prime factors of phi(q).
std::uint64_t primitive_root(std::uint64_t q);

/// All divisors of the factored integer, sorted ascending.
std::vector<std::uint64_t> divisors(const Factorization& f);

struct DivisorMu {
  std::uint64_t d;      // divisor of f
  int mu_complement;    // mu(f/d), nonzero
};

/// Divisors d of f with mu(f/d) != 0, sorted ascending by d. These are the
/// only terms that survive in the divisor sums of the explicit formulas.
std::vector<DivisorMu> divisors_with_complement_mu(const Factorization& f);

std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exp, std::uint64_t mod);

std::uint64_t gcd_u64(std::uint64_t a, std::uint64_t b);

}  // namespace tqm
