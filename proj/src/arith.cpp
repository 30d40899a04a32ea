#include "tqm/arith.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace tqm {

Factorization factorize(std::uint64_t n) {
  if (n == 0) throw std::invalid_argument("factorize: n must be >= 1");
  Factorization out;
  for (std::uint64_t p = 2; p * p <= n; p += (p == 2) ? 1 : 2) {
    if (n % p != 0) continue;
    unsigned e = 0;
    while (n % p == 0) {
      n /= p;
      ++e;
    }
    out.push_back({p, e});
  }
  if (n > 1) out.push_back({n, 1});
  return out;
}

int mobius(std::uint64_t n) {
  const Factorization f = factorize(n);
  for (const auto& pp : f)
    if (pp.exponent > 1) return 0;
  return (f.size() % 2 == 0) ? 1 : -1;
}

std::uint64_t euler_phi(const Factorization& f) {
  std::uint64_t phi = 1;
  for (const auto& pp : f) {
    std::uint64_t q = pp.prime;
    for (unsigned i = 1; i < pp.exponent; ++i) q *= pp.prime;
    phi *= q - q / pp.prime;
  }
  return phi;
}

std::uint64_t euler_phi(std::uint64_t n) { return euler_phi(factorize(n)); }

double mobius_log_sum(const Factorization& f) {
  double s = 0.0;
  for (const auto& pp : f)
    s += std::log(static_cast<double>(pp.prime)) / static_cast<double>(pp.prime - 1);
  return s;
}

double mobius_log_sum(std::uint64_t f) { return mobius_log_sum(factorize(f)); }

std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exp, std::uint64_t mod) {
  if (mod == 1) return 0;
  unsigned __int128 acc = 1;
  unsigned __int128 b = base % mod;
  while (exp > 0) {
    if (exp & 1) acc = acc * b % mod;
    b = b * b % mod;
    exp >>= 1;
  }
  return static_cast<std::uint64_t>(acc);
}

std::uint64_t gcd_u64(std::uint64_t a, std::uint64_t b) { return std::gcd(a, b); }

std::uint64_t primitive_root(std::uint64_t q) {
  const Factorization fq = factorize(q);
  if (fq.size() != 1 || fq[0].prime == 2)
    throw std::invalid_argument("primitive_root: q must be an odd prime power");
  const std::uint64_t phi = euler_phi(fq);
  const Factorization fphi = factorize(phi);
  for (std::uint64_t g = 2; g < q; ++g) {
    if (g % fq[0].prime == 0) continue;
    bool generates = true;
    for (const auto& pp : fphi) {
      if (pow_mod(g, phi / pp.prime, q) == 1) {
        generates = false;
        break;
      }
    }
    if (generates) return g;
  }
  throw std::logic_error("primitive_root: search exhausted");  // unreachable for valid q
}

std::vector<std::uint64_t> divisors(const Factorization& f) {
  std::vector<std::uint64_t> out{1};
  for (const auto& pp : f) {
    const std::size_t base = out.size();
    std::uint64_t q = 1;
    for (unsigned e = 1; e <= pp.exponent; ++e) {
      q *= pp.prime;
      for (std::size_t i = 0; i < base; ++i) out.push_back(out[i] * q);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<DivisorMu> divisors_with_complement_mu(const Factorization& f) {
  // mu(f/d) != 0 forces d to contain p^(e-1) for every p^e || f; the free
  // choice per prime is exponent e-1 or e, contributing a sign when e-1.
  std::vector<DivisorMu> out{{1, 1}};
  for (const auto& pp : f) {
    std::uint64_t q = 1;
    for (unsigned i = 1; i < pp.exponent; ++i) q *= pp.prime;
    const std::size_t base = out.size();
    for (std::size_t i = 0; i < base; ++i) {
      DivisorMu lo{out[i].d * q, -out[i].mu_complement};
      DivisorMu hi{out[i].d * q * pp.prime, out[i].mu_complement};
      out[i] = lo;
      out.push_back(hi);
    }
  }
  std::sort(out.begin(), out.end(),
            [](const DivisorMu& a, const DivisorMu& b) { return a.d < b.d; });
  return out;
}

}  // namespace tqm
