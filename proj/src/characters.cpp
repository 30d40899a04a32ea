#include "tqm/characters.hpp"

#include <cmath>
#include <numbers>
#include <numeric>
#include <stdexcept>
#include <utility>

namespace tqm {
namespace {

std::uint64_t inverse_mod(std::uint64_t a, std::uint64_t m) {
  // extended Euclid; gcd(a, m) == 1 assumed
  std::int64_t t = 0, new_t = 1;
  std::int64_t r = static_cast<std::int64_t>(m), new_r = static_cast<std::int64_t>(a % m);
  while (new_r != 0) {
    const std::int64_t q = r / new_r;
    t = std::exchange(new_t, t - q * new_t);
    r = std::exchange(new_r, r - q * new_r);
  }
  if (t < 0) t += static_cast<std::int64_t>(m);
  return static_cast<std::uint64_t>(t);
}

// x == residue (mod q), x == 1 (mod f/q), 0 <= x < f.
std::uint64_t crt_lift(std::uint64_t residue, std::uint64_t q, std::uint64_t f) {
  const std::uint64_t m = f / q;
  if (m == 1) return residue % f;
  const std::uint64_t minv = inverse_mod(m % q, q);
  const std::uint64_t delta = (residue + q - 1) % q;  // residue - 1 mod q
  return (1 + m * (delta * minv % q)) % f;
}

struct LocalFactor {
  std::uint64_t q;                         // prime power
  std::vector<std::uint64_t> gens;         // generators mod q
  std::vector<std::uint64_t> orders;
  std::vector<std::uint32_t> dlog;         // flattened q x gens.size()
};

LocalFactor local_factor(std::uint64_t p, unsigned e) {
  LocalFactor lf;
  lf.q = 1;
  for (unsigned i = 0; i < e; ++i) lf.q *= p;

  if (p != 2) {
    const std::uint64_t g = primitive_root(lf.q);
    const std::uint64_t ord = lf.q - lf.q / p;  // phi(p^e)
    lf.gens = {g};
    lf.orders = {ord};
    lf.dlog.assign(lf.q, 0);
    std::uint64_t pw = 1;
    for (std::uint64_t t = 0; t < ord; ++t) {
      lf.dlog[pw] = static_cast<std::uint32_t>(t);
      pw = pw * g % lf.q;
    }
    return lf;
  }
  if (e == 1) return lf;  // (Z/2)* trivial
  if (e == 2) {
    lf.gens = {3};
    lf.orders = {2};
    lf.dlog.assign(lf.q, 0);
    lf.dlog[3] = 1;
    return lf;
  }
  // 2^e, e >= 3: <-1> x <5>
  const std::uint64_t half = lf.q >> 2;  // 2^(e-2)
  lf.gens = {lf.q - 1, 5};
  lf.orders = {2, half};
  lf.dlog.assign(lf.q * 2, 0);
  std::uint64_t pw = 1;
  for (std::uint64_t t = 0; t < half; ++t) {
    lf.dlog[pw * 2 + 0] = 0;
    lf.dlog[pw * 2 + 1] = static_cast<std::uint32_t>(t);
    const std::uint64_t neg = lf.q - pw;
    lf.dlog[neg * 2 + 0] = 1;
    lf.dlog[neg * 2 + 1] = static_cast<std::uint32_t>(t);
    pw = pw * 5 % lf.q;
  }
  return lf;
}

}  // namespace

UnitGroup unit_group(std::uint64_t f) {
  if (f == 0) throw std::invalid_argument("unit_group: f must be >= 1");
  UnitGroup g;
  g.modulus = f;

  std::vector<LocalFactor> locals;
  for (const auto& pp : factorize(f)) locals.push_back(local_factor(pp.prime, pp.exponent));

  for (const auto& lf : locals) {
    for (std::size_t i = 0; i < lf.gens.size(); ++i) {
      g.generators.push_back(crt_lift(lf.gens[i], lf.q, f));
      g.orders.push_back(lf.orders[i]);
    }
  }
  g.phi = 1;
  g.exponent = 1;
  for (std::uint64_t m : g.orders) {
    g.phi *= m;
    g.exponent = std::lcm(g.exponent, m);
  }

  const std::size_t k = g.rank();
  g.coprime.assign(f, 0);
  g.dlog.assign(f * k, 0);
  for (std::uint64_t a = 0; a < f; ++a) {
    if (std::gcd(a, f) != 1) continue;
    g.coprime[a] = 1;
    std::size_t col = 0;
    for (const auto& lf : locals) {
      const std::uint64_t r = a % lf.q;
      for (std::size_t i = 0; i < lf.gens.size(); ++i)
        g.dlog[a * k + col++] = lf.dlog[r * lf.gens.size() + i];
    }
  }
  return g;
}

DirichletGroup::DirichletGroup(std::uint64_t f) : units_(unit_group(f)) {
  const std::uint64_t L = units_.exponent;
  weights_.reserve(units_.rank());
  for (std::uint64_t m : units_.orders) weights_.push_back(L / m);

  // conjugation-symmetric root table: chi-bar values mirror chi bit-for-bit
  roots_.resize(L);
  roots_[0] = {1.0, 0.0};
  for (std::uint64_t t = 1; 2 * t <= L; ++t) {
    const double angle = 2.0 * std::numbers::pi * static_cast<double>(t) / static_cast<double>(L);
    roots_[t] = {std::cos(angle), std::sin(angle)};
    if (t != L - t) roots_[L - t] = std::conj(roots_[t]);
  }
  if (L % 2 == 0) roots_[L / 2] = {-1.0, 0.0};

  // odometer over exponent vectors, leftmost digit most significant
  characters_.resize(units_.phi);
  std::vector<std::uint32_t> e(units_.rank(), 0);
  const std::uint64_t minus_one = f > 1 ? f - 1 : 0;
  for (std::uint32_t idx = 0; idx < units_.phi; ++idx) {
    Character chi;
    chi.modulus = f;
    chi.exponents = e;
    chi.index = idx;
    chi.odd = (root_index(chi, minus_one) * 2 == L);
    odd_count_ += chi.odd ? 1 : 0;
    characters_[idx] = std::move(chi);
    for (std::size_t i = units_.rank(); i-- > 0;) {
      if (++e[i] < units_.orders[i]) break;
      e[i] = 0;
    }
  }
}

std::uint64_t DirichletGroup::root_index(const Character& chi, std::uint64_t a) const {
  const std::uint64_t r = a % units_.modulus;
  if (!units_.coprime[r]) return kNotCoprime;
  const std::uint32_t* d = units_.dlog_row(r);
  std::uint64_t t = 0;
  for (std::size_t i = 0; i < weights_.size(); ++i)
    t += (static_cast<std::uint64_t>(chi.exponents[i]) * d[i] % units_.orders[i]) * weights_[i];
  return t % units_.exponent;
}

std::complex<double> DirichletGroup::eval(const Character& chi, std::uint64_t a) const {
  const std::uint64_t t = root_index(chi, a);
  return t == kNotCoprime ? std::complex<double>{0.0, 0.0} : roots_[t];
}

std::vector<std::complex<double>> DirichletGroup::values_on_residues(const Character& chi) const {
  const std::uint64_t f = units_.modulus;
  std::vector<std::complex<double>> vals(f, {0.0, 0.0});
  for (std::uint64_t a = 0; a < f; ++a) {
    if (units_.coprime[a]) vals[a] = eval(chi, a);
  }
  return vals;
}

std::size_t DirichletGroup::conjugate_index(const Character& chi) const {
  std::size_t idx = 0;
  for (std::size_t i = 0; i < units_.rank(); ++i) {
    const std::uint32_t e = chi.exponents[i] == 0
                                ? 0
                                : static_cast<std::uint32_t>(units_.orders[i]) - chi.exponents[i];
    idx = idx * units_.orders[i] + e;
  }
  return idx;
}

std::vector<Character> all_characters(std::uint64_t f) { return DirichletGroup(f).characters(); }

}  // namespace tqm
