#include "tqm/kernels.hpp"

#include <cmath>
#include <numbers>
#include <numeric>
#include <stdexcept>
#include <string>

#include "tqm/kahan.hpp"

namespace tqm {
namespace {

void validate(const KernelConfig& cfg) {
  if (cfg.series_truncation < 100)
    throw std::invalid_argument("KernelConfig: series_truncation must be >= 100");
  if (!(cfg.tolerance > 0.0)) throw std::invalid_argument("KernelConfig: tolerance must be > 0");
}

void require_coprime(std::uint64_t c, std::uint64_t d, const char* who) {
  if (std::gcd(c, d) != 1) throw std::invalid_argument(std::string(who) + ": gcd(c,d) must be 1");
}

}  // namespace

double f_truncation_bound(double x, std::int64_t n) {
  const double dn = static_cast<double>(n);
  return x * x / (dn * (dn + 1.0));
}

double F(double x, const KernelConfig& cfg) {
  validate(cfg);
  const double fl = std::floor(x);
  if (x == fl) return 0.0;
  const double xr = x - fl;  // in (0,1); F has period 1
  const double x2 = xr * xr;
  KahanSum s;
  s.add(1.0 / xr);
  for (std::int64_t n = 1; n <= cfg.series_truncation; ++n) {
    const double dn = static_cast<double>(n);
    s.add(2.0 * x2 / (dn * (dn * dn - x2)));
  }
  return s.value();
}

double G(double x, const KernelConfig& cfg) {
  if (!(x > 0.0 && x < 1.0)) throw std::invalid_argument("G: x must lie in (0,1)");
  return F(x, cfg) - 1.0 / x - 1.0 / (1.0 - x) + 1.0;
}

std::vector<double> log_sine_table(std::uint64_t m) {
  std::vector<double> t(m, 0.0);
  for (std::uint64_t j = 1; 2 * j <= m; ++j) {
    t[j] = std::log(2.0 * std::sin(std::numbers::pi * static_cast<double>(j) /
                                   static_cast<double>(m)));
    if (j != m - j) t[m - j] = t[j];
  }
  return t;
}

double log_sine_sum(std::uint64_t m) {
  if (m == 0) throw std::invalid_argument("log_sine_sum: m must be >= 1");
  const std::vector<double> t = log_sine_table(m);
  KahanSum s;
  for (std::uint64_t j = 1; j < m; ++j) s.add(t[j]);
  return s.value();
}

double R(std::uint64_t c, std::uint64_t d) {
  if (c == 0 || d == 0) throw std::invalid_argument("R: c, d must be >= 1");
  require_coprime(c, d, "R");
  if (d == 1) return 0.0;
  const std::uint64_t cr = c % d;
  const std::vector<double> t = log_sine_table(d);
  KahanSum s;
  for (std::uint64_t k = 1; k < d; ++k) s.add(t[k] * t[cr * k % d]);
  return s.value();
}

double R_via_F(std::uint64_t c, std::uint64_t d, const KernelConfig& cfg) {
  if (c == 0 || d == 0) throw std::invalid_argument("R_via_F: c, d must be >= 1");
  require_coprime(c, d, "R_via_F");
  validate(cfg);
  if (d == 1) return 0.0;
  const std::uint64_t cr = c % d;
  std::vector<double> fe(d, 0.0);
#pragma omp parallel for schedule(static)
  for (std::int64_t e = 1; e < static_cast<std::int64_t>(d); ++e)
    fe[e] = F(static_cast<double>(e) / static_cast<double>(d), cfg);
  KahanSum s;
  for (std::uint64_t e = 1; e < d; ++e) s.add(fe[cr * e % d] * fe[e]);
  const double logd = std::log(static_cast<double>(d));
  return s.value() / (4.0 * static_cast<double>(d)) - logd * logd;
}

double r_asymptotic(std::uint64_t c, std::uint64_t d) {
  if (c < 2) throw std::invalid_argument("r_asymptotic: requires c >= 2");
  if (d < 2) throw std::invalid_argument("r_asymptotic: requires d >= 2");
  require_coprime(c, d, "r_asymptotic");
  const std::uint64_t cr = c < d ? c : c % d;
  const double logd = std::log(static_cast<double>(d));
  return std::numbers::pi * std::numbers::pi * static_cast<double>(d) /
             (12.0 * static_cast<double>(cr)) -
         logd * logd;
}

double S(std::uint64_t c, std::int64_t d) {
  if (c == 0) throw std::invalid_argument("S: c must be >= 1");
  const std::uint64_t dr =
      static_cast<std::uint64_t>(((d % static_cast<std::int64_t>(c)) + static_cast<std::int64_t>(c)) %
                                 static_cast<std::int64_t>(c));
  if (std::gcd(c, dr) != 1) throw std::invalid_argument("S: gcd(c,d) must be 1");
  if (c < 3) return 0.0;  // c=1 empty sum; c=2 has the single term cot(pi/2) = 0

  // antisymmetric cotangent table: ct[c-a] = -ct[a], middle exactly 0
  std::vector<double> ct(c, 0.0);
  for (std::uint64_t a = 1; 2 * a < c; ++a) {
    ct[a] = 1.0 / std::tan(std::numbers::pi * static_cast<double>(a) / static_cast<double>(c));
    ct[c - a] = -ct[a];
  }
  KahanSum s;
  for (std::uint64_t a = 1; a < c; ++a) s.add(ct[a] * ct[a * dr % c]);
  return s.value();
}

HarmonicProgression harmonic_progression(double x_cut, std::uint64_t a, std::int64_t b,
                                         const KernelConfig& cfg) {
  if (a == 0) throw std::invalid_argument("harmonic_progression: a must be > 0");
  if (!(x_cut > static_cast<double>(a)))
    throw std::invalid_argument("harmonic_progression: X must exceed a");
  validate(cfg);

  const std::int64_t ia = static_cast<std::int64_t>(a);
  const std::uint64_t b_mod = static_cast<std::uint64_t>(((b % ia) + ia) % ia);

  KahanSum s;
  // positive n == b (mod a)
  for (std::uint64_t n = b_mod == 0 ? a : b_mod; static_cast<double>(n) < x_cut; n += a)
    s.add(1.0 / static_cast<double>(n));
  // negative n == b (mod a), i.e. n = -m with m == -b (mod a)
  const std::uint64_t m0 = (a - b_mod) % a;
  for (std::uint64_t m = m0 == 0 ? a : m0; static_cast<double>(m) < x_cut; m += a)
    s.add(1.0 / static_cast<double>(m));

  const double da = static_cast<double>(a);
  double predicted = (2.0 * std::log(x_cut) - 2.0 * std::log(da) + 2.0 * kEulerGamma) / da;
  if (b_mod != 0)
    predicted += F(static_cast<double>(b_mod) / da, cfg) / da;
  return {s.value(), predicted};
}

double f_grid_sum(std::uint64_t d, const KernelConfig& cfg) {
  if (d == 0) throw std::invalid_argument("f_grid_sum: d must be >= 1");
  validate(cfg);
  std::vector<double> vals(d, 0.0);
#pragma omp parallel for schedule(static)
  for (std::int64_t a = 1; a < static_cast<std::int64_t>(d); ++a)
    vals[a] = F(static_cast<double>(a) / static_cast<double>(d), cfg);
  KahanSum s;
  for (std::uint64_t a = 1; a < d; ++a) s.add(vals[a]);
  return s.value();
}

}  // namespace tqm
