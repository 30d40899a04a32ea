#include "tqm/moments.hpp"

#include <cmath>
#include <numbers>
#include <numeric>
#include <stdexcept>
#include <string>

#include "tqm/arith.hpp"
#include "tqm/kahan.hpp"
#include "tqm/kernels.hpp"

namespace tqm {
namespace {

constexpr double kPi2 = std::numbers::pi * std::numbers::pi;

void require_valid_pair(std::uint64_t f, std::uint64_t c, const char* who) {
  if (f < 3) throw std::invalid_argument(std::string(who) + ": requires f >= 3");
  if (c < 1 || c >= f) throw std::invalid_argument(std::string(who) + ": requires f > c >= 1");
  if (std::gcd(f, c) != 1) throw std::invalid_argument(std::string(who) + ": gcd(f,c) must be 1");
}

double squarefree_kernel_product(const Factorization& fact, double offset_sign) {
  // prod over p | f of (1 + offset_sign/p)
  double prod = 1.0;
  for (const auto& pp : fact) prod *= 1.0 + offset_sign / static_cast<double>(pp.prime);
  return prod;
}

}  // namespace

double m_plus_exact(std::uint64_t f, std::uint64_t c) {
  require_valid_pair(f, c, "m_plus_exact");
  const Factorization fact = factorize(f);
  const double df = static_cast<double>(f);
  const double phi = static_cast<double>(euler_phi(fact));
  const double mls = mobius_log_sum(fact);

  KahanSum divisor_sum;
  for (const DivisorMu& dm : divisors_with_complement_mu(fact)) {
    const double log_fd = std::log(df / static_cast<double>(dm.d));
    divisor_sum.add(static_cast<double>(dm.mu_complement) * static_cast<double>(dm.d) *
                    (log_fd * log_fd + R(c, dm.d)));
  }
  const double cross = phi / df * mls;
  return phi / (df * df) * divisor_sum.value() - cross * cross;
}

double s_divisor_sum(std::uint64_t f, std::uint64_t c) {
  require_valid_pair(f, c, "s_divisor_sum");
  KahanSum s;
  for (const DivisorMu& dm : divisors_with_complement_mu(factorize(f)))
    s.add(static_cast<double>(dm.d) * static_cast<double>(dm.mu_complement) *
          S(c, static_cast<std::int64_t>(dm.d)));
  return s.value();
}

double m_minus_exact(std::uint64_t f, std::uint64_t c) {
  require_valid_pair(f, c, "m_minus_exact");
  const Factorization fact = factorize(f);
  const double df = static_cast<double>(f);
  const double dc = static_cast<double>(c);
  const double phi = static_cast<double>(euler_phi(fact));

  const double lead = kPi2 / (12.0 * dc) * phi * phi / df *
                      (squarefree_kernel_product(fact, +1.0) - 3.0 * dc / df);
  const double s_term = kPi2 * phi / (4.0 * dc * df * df) * s_divisor_sum(f, c);
  return lead - s_term;
}

double m_exact(std::uint64_t f, std::uint64_t c) { return m_plus_exact(f, c) + m_minus_exact(f, c); }

std::complex<double> m_brute(const DirichletGroup& g, const LValueTable& table, std::uint64_t c,
                             ParityFilter filter) {
  if (std::gcd(g.modulus(), c) != 1)
    throw std::invalid_argument("m_brute: gcd(f,c) must be 1");
  KahanComplexSum s;
  const auto& chars = g.characters();
  for (std::size_t i = 1; i < chars.size(); ++i) {
    const Character& chi = chars[i];
    if (filter == ParityFilter::odd && !chi.odd) continue;
    if (filter == ParityFilter::even_nontrivial && chi.odd) continue;
    s.add(g.eval(chi, c) * std::norm(table.value(i)));
  }
  return s.value();
}

std::complex<double> m_brute(std::uint64_t f, std::uint64_t c, ParityFilter filter) {
  if (f < 3) throw std::invalid_argument("m_brute: requires f >= 3");
  if (std::gcd(f, c) != 1) throw std::invalid_argument("m_brute: gcd(f,c) must be 1");
  const DirichletGroup g(f);
  return m_brute(g, l1_batch(g), c, filter);
}

double m_plus_asymptotic(std::uint64_t f, std::uint64_t c) {
  require_valid_pair(f, c, "m_plus_asymptotic");
  const Factorization fact = factorize(f);
  const double df = static_cast<double>(f);
  const double phi = static_cast<double>(euler_phi(fact));
  double prod = 1.0;
  for (const auto& pp : fact) {
    const double p = static_cast<double>(pp.prime);
    prod *= 1.0 - 1.0 / (p * p);
  }
  const double logs = std::log(df) + mobius_log_sum(fact);
  return kPi2 / (12.0 * static_cast<double>(c)) * phi * prod - (phi / df) * (phi / df) * logs * logs;
}

double m_minus_asymptotic(std::uint64_t f, std::uint64_t c) {
  require_valid_pair(f, c, "m_minus_asymptotic");
  const Factorization fact = factorize(f);
  const double phi = static_cast<double>(euler_phi(fact));
  double prod = 1.0;
  for (const auto& pp : fact) {
    const double p = static_cast<double>(pp.prime);
    prod *= 1.0 - 1.0 / (p * p);
  }
  return kPi2 / (12.0 * static_cast<double>(c)) * phi * prod;
}

double m_asymptotic(std::uint64_t f, std::uint64_t c) {
  return m_plus_asymptotic(f, c) + m_minus_asymptotic(f, c);
}

MomentReport moment_report(std::uint64_t f, std::uint64_t c, const ReportOptions& opt) {
  require_valid_pair(f, c, "moment_report");
  if (c == 1 && !opt.allow_untwisted)
    throw std::invalid_argument("moment_report: c = 1 requires the untwisted opt-in");

  MomentReport r;
  r.f = f;
  r.c = c;
  r.phi = euler_phi(f);
  r.m_plus_exact = m_plus_exact(f, c);
  r.m_minus_exact = m_minus_exact(f, c);
  r.m_exact = r.m_plus_exact + r.m_minus_exact;
  r.m_plus_asym = m_plus_asymptotic(f, c);
  r.m_minus_asym = m_minus_asymptotic(f, c);
  r.m_asym = r.m_plus_asym + r.m_minus_asym;
  r.residual = r.m_exact - r.m_asym;
  r.residual_over_logf = r.residual / std::log(static_cast<double>(f));

  if (f <= opt.brute_cap) {
    const DirichletGroup g(f);
    const LValueTable table = l1_batch(g);
    r.m_brute = m_brute(g, table, c, ParityFilter::all);
    r.m_plus_brute = m_brute(g, table, c, ParityFilter::even_nontrivial);
    r.m_minus_brute = m_brute(g, table, c, ParityFilter::odd);
  }
  return r;
}

}  // namespace tqm
