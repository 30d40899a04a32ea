#include "tqm/verify.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <numbers>
#include <numeric>
#include <random>
#include <sstream>

#include "tqm/arith.hpp"
#include "tqm/kahan.hpp"
#include "tqm/lvalues.hpp"
#include "tqm/moments.hpp"

namespace tqm {
namespace {

struct WorstCase {
  double dev = 0.0;
  std::string where;

  void offer(double d, const std::string& w) {
    if (d > dev) {
      dev = d;
      where = w;
    }
  }
  void merge(const WorstCase& o) { offer(o.dev, o.where); }
};

std::string fc_tag(std::uint64_t f, std::uint64_t c) {
  std::ostringstream os;
  os << "(f,c)=(" << f << ',' << c << ')';
  return os.str();
}

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  const Factorization fact = factorize(n);
  return fact.size() == 1 && fact[0].exponent == 1;
}

// Deterministic merge of per-index worst cases: lowest index wins ties.
WorstCase reduce_worst(const std::vector<WorstCase>& per_index) {
  WorstCase total;
  for (const WorstCase& w : per_index) total.merge(w);
  return total;
}

}  // namespace

SuiteResult check_orthogonality(std::uint64_t f_max, double tol) {
  std::vector<WorstCase> per_f(f_max + 1);
#pragma omp parallel for schedule(dynamic)
  for (std::int64_t fi = 3; fi <= static_cast<std::int64_t>(f_max); ++fi) {
    const std::uint64_t f = static_cast<std::uint64_t>(fi);
    const DirichletGroup g(f);
    WorstCase& w = per_f[f];

    // row sums: every nontrivial character sums to zero over a full period
    for (std::size_t i = 1; i < g.size(); ++i) {
      KahanComplexSum s;
      for (std::uint64_t a = 1; a <= f; ++a) s.add(g.eval(g.characters()[i], a));
      std::ostringstream os;
      os << "row f=" << f << " chi#" << i;
      w.offer(std::abs(s.value()), os.str());
    }
    // column sums over all characters
    for (std::uint64_t a = 1; a < f; ++a) {
      if (!g.units().coprime[a]) continue;
      KahanComplexSum s;
      for (const Character& chi : g.characters()) s.add(g.eval(chi, a));
      const double expected = (a == 1) ? static_cast<double>(g.phi()) : 0.0;
      std::ostringstream os;
      os << "col f=" << f << " a=" << a;
      w.offer(std::abs(s.value() - expected), os.str());
    }
    if (f > 2) {
      const double parity_gap =
          std::abs(static_cast<double>(2 * g.odd_count()) - static_cast<double>(g.phi()));
      w.offer(parity_gap, "parity census f=" + std::to_string(f));
    }
  }
  const WorstCase w = reduce_worst(per_f);
  return {"character orthogonality", w.dev, tol, w.where};
}

SuiteResult check_multiplicativity(std::uint64_t f_max, double tol) {
  std::vector<WorstCase> per_f(f_max + 1);
#pragma omp parallel for schedule(dynamic)
  for (std::int64_t fi = 3; fi <= static_cast<std::int64_t>(f_max); ++fi) {
    const std::uint64_t f = static_cast<std::uint64_t>(fi);
    const DirichletGroup g(f);
    std::mt19937 rng(0x5eedu + static_cast<std::uint32_t>(f));
    std::uniform_int_distribution<std::uint64_t> dist(1, f - 1);
    WorstCase& w = per_f[f];
    for (int trial = 0; trial < 100; ++trial) {
      std::uint64_t a = dist(rng), b = dist(rng);
      while (!g.units().coprime[a]) a = dist(rng);
      while (!g.units().coprime[b]) b = dist(rng);
      for (const Character& chi : g.characters()) {
        const double dev = std::abs(g.eval(chi, a * b) - g.eval(chi, a) * g.eval(chi, b));
        std::ostringstream os;
        os << "f=" << f << " a=" << a << " b=" << b << " chi#" << chi.index;
        w.offer(dev, os.str());
      }
    }
  }
  const WorstCase w = reduce_worst(per_f);
  return {"character multiplicativity", w.dev, tol, w.where};
}

SuiteResult check_root_of_unity_sums(std::uint64_t f_max, double tol) {
  std::vector<WorstCase> per_f(f_max + 1);
#pragma omp parallel for schedule(dynamic)
  for (std::int64_t fi = 1; fi <= static_cast<std::int64_t>(f_max); ++fi) {
    const std::uint64_t f = static_cast<std::uint64_t>(fi);
    const Factorization fact = factorize(f);
    std::vector<std::complex<double>> zeta(f);
    for (std::uint64_t k = 0; k < f; ++k) {
      const double ang = 2.0 * std::numbers::pi * static_cast<double>(k) / static_cast<double>(f);
      zeta[k] = {std::cos(ang), std::sin(ang)};
    }
    WorstCase& w = per_f[f];
    for (std::uint64_t t = 0; t < std::max<std::uint64_t>(f, 1); ++t) {
      // full range 1..f-1 (the nonzero residues): f-1 when f | t, else -1
      KahanComplexSum full;
      for (std::uint64_t a = 1; a < f; ++a) full.add(zeta[a * t % f]);
      const double expected_full = (t % f == 0) ? static_cast<double>(f - 1) : -1.0;
      w.offer(std::abs(full.value() - expected_full),
              "full sum f=" + std::to_string(f) + " t=" + std::to_string(t));

      // coprime range vs the Moebius divisor expression
      KahanComplexSum cop;
      for (std::uint64_t a = 1; a <= f; ++a)
        if (std::gcd(a, f) == 1) cop.add(zeta[a * t % f]);
      std::int64_t expected_cop = 0;
      const std::uint64_t gtf = std::gcd(t, f);
      for (std::uint64_t d : divisors(fact))
        if (gtf % d == 0) expected_cop += mobius(f / d) * static_cast<std::int64_t>(d);
      w.offer(std::abs(cop.value() - static_cast<double>(expected_cop)),
              "coprime sum f=" + std::to_string(f) + " t=" + std::to_string(t));

      // the closed form of the same expression, exact in integers
      const std::uint64_t m = f / gtf;
      const std::int64_t closed =
          static_cast<std::int64_t>(euler_phi(f)) * mobius(m) / static_cast<std::int64_t>(euler_phi(m));
      if (closed != expected_cop)
        w.offer(1.0, "Ramanujan closed form f=" + std::to_string(f) + " t=" + std::to_string(t));
    }
  }
  const WorstCase w = reduce_worst(per_f);
  return {"root-of-unity sums", w.dev, tol, w.where};
}

SuiteResult check_mobius_divisor_sums(std::uint64_t f_max, double tol) {
  WorstCase w;
  for (std::uint64_t f = 1; f <= f_max; ++f) {
    const Factorization fact = factorize(f);
    const std::vector<std::uint64_t> divs = divisors(fact);

    std::int64_t int_sum = 0;  // sum mu(d) f/d, must equal phi(f) exactly
    KahanSum frac, logfrac;
    for (std::uint64_t d : divs) {
      const int mu = mobius(d);
      if (mu == 0) continue;
      int_sum += mu * static_cast<std::int64_t>(f / d);
      frac.add(static_cast<double>(mu) / static_cast<double>(d));
      logfrac.add(static_cast<double>(mu) * std::log(static_cast<double>(d)) /
                  static_cast<double>(d));
    }
    const double phi_over_f = static_cast<double>(euler_phi(fact)) / static_cast<double>(f);
    if (int_sum != static_cast<std::int64_t>(euler_phi(fact)))
      w.offer(1.0, "integer identity f=" + std::to_string(f));
    w.offer(std::abs(frac.value() - phi_over_f), "mu(d)/d f=" + std::to_string(f));
    w.offer(std::abs(logfrac.value() + phi_over_f * mobius_log_sum(fact)),
            "mu(d)log d/d f=" + std::to_string(f));
  }
  return {"Moebius divisor sums", w.dev, tol, w.where};
}

SuiteResult check_f_grid_identity(std::uint64_t d_max, double per_d_tol, const KernelConfig& cfg) {
  WorstCase w;
  for (std::uint64_t d = 2; d <= d_max; ++d) {
    const double lhs = f_grid_sum(d, cfg);
    const double rhs = 2.0 * static_cast<double>(d) * std::log(static_cast<double>(d));
    w.offer(std::abs(lhs - rhs) / static_cast<double>(d), "d=" + std::to_string(d));
  }
  return {"F grid identity (per unit d)", w.dev, per_d_tol, w.where};
}

SuiteResult check_log_sine(std::uint64_t m_max, double tol) {
  WorstCase w;
  for (std::uint64_t m = 1; m <= m_max; ++m)
    w.offer(std::abs(log_sine_sum(m) - std::log(static_cast<double>(m))),
            "m=" + std::to_string(m));
  return {"log-sine sum", w.dev, tol, w.where};
}

SuiteResult check_double_sum_identity(std::uint64_t f_max, double tol) {
  std::vector<WorstCase> per_f(f_max + 1);
#pragma omp parallel for schedule(dynamic)
  for (std::int64_t fi = 3; fi <= static_cast<std::int64_t>(f_max); ++fi) {
    const std::uint64_t f = static_cast<std::uint64_t>(fi);
    const std::vector<double> lam = log_sine_table(f);
    WorstCase& w = per_f[f];
    for (std::uint64_t c : {2ull, 3ull, 5ull, 7ull}) {
      if (std::gcd(c, f) != 1 || c >= f) continue;
      for (std::uint64_t d : divisors(factorize(f))) {
        KahanSum lhs;
        for (std::uint64_t k = 1; k < f; ++k) {
          const std::uint64_t j0 = c * k % d;
          for (std::uint64_t j = (j0 == 0) ? d : j0; j < f; j += d) lhs.add(lam[j] * lam[k]);
        }
        const double log_fd = std::log(static_cast<double>(f) / static_cast<double>(d));
        const double rhs = log_fd * log_fd + R(c, d);
        std::ostringstream os;
        os << "(f,c,d)=(" << f << ',' << c << ',' << d << ')';
        w.offer(std::abs(lhs.value() - rhs), os.str());
      }
    }
  }
  const WorstCase w = reduce_worst(per_f);
  return {"double-sum collapse", w.dev, tol, w.where};
}

SuiteResult check_trivial_character_transform(std::uint64_t f_max, double tol) {
  std::vector<WorstCase> per_f(f_max + 1);
#pragma omp parallel for schedule(dynamic)
  for (std::int64_t fi = 3; fi <= static_cast<std::int64_t>(f_max); ++fi) {
    const std::uint64_t f = static_cast<std::uint64_t>(fi);
    const Factorization fact = factorize(f);
    const std::vector<double> v = log_sine_dft(f);
    KahanSum s;
    for (std::uint64_t a = 1; a < f; ++a)
      if (std::gcd(a, f) == 1) s.add(v[a]);
    const double lhs = s.value() / static_cast<double>(f);
    const double rhs =
        -static_cast<double>(euler_phi(fact)) / static_cast<double>(f) * mobius_log_sum(fact);
    per_f[f].offer(std::abs(lhs - rhs), "f=" + std::to_string(f));
  }
  const WorstCase w = reduce_worst(per_f);
  return {"trivial-character transform", w.dev, tol, w.where};
}

SuiteResult check_reductions(double tol) {
  WorstCase w;
  for (std::uint64_t d = 2; d <= 40; ++d) {
    for (std::uint64_t c = d + 1; c <= d + 60; ++c) {
      if (std::gcd(c, d) != 1) continue;
      const double dev = std::abs(R(c, d) - R(c % d, d));
      w.offer(dev, "R (c,d)=(" + std::to_string(c) + ',' + std::to_string(d) + ')');
    }
  }
  for (std::uint64_t c = 2; c <= 40; ++c) {
    for (std::int64_t d = static_cast<std::int64_t>(c) + 1; d <= static_cast<std::int64_t>(c) + 60;
         ++d) {
      if (std::gcd(c, static_cast<std::uint64_t>(d)) != 1) continue;
      const double dev = std::abs(S(c, d) - S(c, d % static_cast<std::int64_t>(c)));
      w.offer(dev, "S (c,d)=(" + std::to_string(c) + ',' + std::to_string(d) + ')');
    }
  }
  return {"argument reduction", w.dev, tol, w.where};
}

namespace {

template <typename Fn>
SuiteResult brute_grid_suite(const char* name, std::uint64_t f_min, std::uint64_t f_max,
                             std::uint64_t c_max, double tol, Fn&& per_pair) {
  std::vector<WorstCase> per_f(f_max + 1);
#pragma omp parallel for schedule(dynamic)
  for (std::int64_t fi = static_cast<std::int64_t>(std::max<std::uint64_t>(f_min, 5));
       fi <= static_cast<std::int64_t>(f_max); ++fi) {
    const std::uint64_t f = static_cast<std::uint64_t>(fi);
    const DirichletGroup g(f);
    const LValueTable table = l1_batch(g);
    for (std::uint64_t c = 2; c <= std::min(c_max, f - 1); ++c) {
      if (std::gcd(f, c) != 1) continue;
      per_f[f].offer(per_pair(g, table, f, c), fc_tag(f, c));
    }
  }
  const WorstCase w = reduce_worst(per_f);
  return {name, w.dev, tol, w.where};
}

}  // namespace

SuiteResult check_exact_vs_brute(std::uint64_t f_min, std::uint64_t f_max, std::uint64_t c_max,
                                 double rel_tol) {
  return brute_grid_suite(
      "exact vs brute force", f_min, f_max, c_max, rel_tol,
      [](const DirichletGroup& g, const LValueTable& table, std::uint64_t f, std::uint64_t c) {
        const double plus = m_plus_exact(f, c);
        const double minus = m_minus_exact(f, c);
        const double dev_plus =
            std::abs(plus - m_brute(g, table, c, ParityFilter::even_nontrivial).real()) /
            (1.0 + std::abs(plus));
        const double dev_minus = std::abs(minus - m_brute(g, table, c, ParityFilter::odd).real()) /
                                 (1.0 + std::abs(minus));
        const double dev_all = std::abs(plus + minus - m_brute(g, table, c, ParityFilter::all).real()) /
                               (1.0 + std::abs(plus + minus));
        return std::max({dev_plus, dev_minus, dev_all});
      });
}

SuiteResult check_brute_partition(std::uint64_t f_min, std::uint64_t f_max, std::uint64_t c_max,
                                  double tol) {
  return brute_grid_suite(
      "brute-force partition", f_min, f_max, c_max, tol,
      [](const DirichletGroup& g, const LValueTable& table, std::uint64_t, std::uint64_t c) {
        const std::complex<double> all = m_brute(g, table, c, ParityFilter::all);
        const std::complex<double> split = m_brute(g, table, c, ParityFilter::odd) +
                                           m_brute(g, table, c, ParityFilter::even_nontrivial);
        return std::abs(all - split);
      });
}

SuiteResult check_brute_realness(std::uint64_t f_min, std::uint64_t f_max, std::uint64_t c_max,
                                 double tol) {
  return brute_grid_suite(
      "brute-force realness", f_min, f_max, c_max, tol,
      [](const DirichletGroup& g, const LValueTable& table, std::uint64_t, std::uint64_t c) {
        const std::complex<double> all = m_brute(g, table, c, ParityFilter::all);
        return std::abs(all.imag()) / (1.0 + std::abs(all.real()));
      });
}

std::vector<SuiteResult> run_verify_suites(std::uint64_t f_max,
                                           std::optional<double> tol_override) {
  const auto tol = [&](double def) { return tol_override.value_or(def); };
  std::vector<SuiteResult> out;
  out.push_back(check_orthogonality(f_max, tol(1e-9)));
  out.push_back(check_multiplicativity(f_max, tol(1e-12)));
  out.push_back(check_root_of_unity_sums(std::min<std::uint64_t>(f_max, 100), tol(1e-9)));
  out.push_back(check_mobius_divisor_sums(f_max, tol(1e-10)));
  out.push_back(check_f_grid_identity(std::min<std::uint64_t>(f_max, 500), tol(1e-6),
                                      KernelConfig{2000, 1e-6}));
  out.push_back(check_log_sine(f_max, tol(1e-9)));
  out.push_back(check_double_sum_identity(std::min<std::uint64_t>(f_max, 60), tol(1e-9)));
  out.push_back(check_trivial_character_transform(f_max, tol(1e-9)));
  out.push_back(check_reductions(tol(0.0)));
  out.push_back(check_exact_vs_brute(5, f_max, 10, tol(1e-8)));
  out.push_back(check_brute_partition(5, f_max, 10, tol(1e-12)));
  out.push_back(check_brute_realness(5, f_max, 10, tol(1e-9)));
  return out;
}

RatioStats r_asymptotic_residuals(std::uint64_t d_min, std::uint64_t d_max,
                                        const std::vector<std::uint64_t>& c_values) {
  std::vector<std::uint64_t> ds;
  for (std::uint64_t d = d_min; d <= d_max; ++d)
    if (is_prime(d)) ds.push_back(d);

  std::vector<std::vector<double>> ratios(ds.size());
  std::vector<WorstCase> worst(ds.size());
#pragma omp parallel for schedule(dynamic)
  for (std::int64_t i = 0; i < static_cast<std::int64_t>(ds.size()); ++i) {
    const std::uint64_t d = ds[i];
    for (std::uint64_t c : c_values) {
      if (std::gcd(c, d) != 1) continue;
      const double ratio =
          std::abs(R(c, d) - r_asymptotic(c, d)) / std::log(static_cast<double>(d));
      ratios[i].push_back(ratio);
      std::ostringstream os;
      os << "(c,d)=(" << c << ',' << d << ')';
      worst[i].offer(ratio, os.str());
    }
  }

  RatioStats stats;
  std::vector<double> flat;
  for (std::size_t i = 0; i < ds.size(); ++i) {
    flat.insert(flat.end(), ratios[i].begin(), ratios[i].end());
    if (worst[i].dev > stats.max_ratio) {
      stats.max_ratio = worst[i].dev;
      stats.worst = worst[i].where;
    }
  }
  stats.count = flat.size();
  if (!flat.empty()) {
    std::sort(flat.begin(), flat.end());
    stats.median_ratio = flat[flat.size() / 2];
  }
  return stats;
}

MomentResidualStats moment_asymptotic_residuals(std::uint64_t f_min, std::uint64_t f_max,
                                                std::uint64_t c, std::uint64_t brute_cap) {
  std::vector<std::uint64_t> fs;
  for (std::uint64_t f = f_min; f <= f_max; ++f)
    if (is_prime(f) && f > c && std::gcd(f, c) == 1) fs.push_back(f);

  struct PerF {
    double ratio_m = 0, ratio_plus = 0, brute_dev = 0;
    bool brute = false;
  };
  std::vector<PerF> acc(fs.size());
#pragma omp parallel for schedule(dynamic)
  for (std::int64_t i = 0; i < static_cast<std::int64_t>(fs.size()); ++i) {
    const std::uint64_t f = fs[i];
    const double logf = std::log(static_cast<double>(f));
    const double plus = m_plus_exact(f, c);
    const double minus = m_minus_exact(f, c);
    const double total = plus + minus;
    acc[i].ratio_m = std::abs(total - m_asymptotic(f, c)) / logf;
    acc[i].ratio_plus = std::abs(plus - m_plus_asymptotic(f, c)) / logf;
    if (f <= brute_cap) {
      const DirichletGroup g(f);
      const LValueTable table = l1_batch(g);
      const double dev_plus =
          std::abs(plus - m_brute(g, table, c, ParityFilter::even_nontrivial).real()) /
          (1.0 + std::abs(plus));
      const double dev_minus = std::abs(minus - m_brute(g, table, c, ParityFilter::odd).real()) /
                               (1.0 + std::abs(minus));
      const double dev_all =
          std::abs(total - m_brute(g, table, c, ParityFilter::all).real()) / (1.0 + std::abs(total));
      acc[i].brute_dev = std::max({dev_plus, dev_minus, dev_all});
      acc[i].brute = true;
    }
  }

  MomentResidualStats stats;
  stats.count = fs.size();
  for (std::size_t i = 0; i < fs.size(); ++i) {
    if (acc[i].ratio_m > stats.max_ratio_m) {
      stats.max_ratio_m = acc[i].ratio_m;
      stats.worst_m = "f=" + std::to_string(fs[i]);
    }
    stats.max_ratio_m_plus = std::max(stats.max_ratio_m_plus, acc[i].ratio_plus);
    if (acc[i].brute) {
      ++stats.brute_checked;
      stats.max_brute_rel_dev = std::max(stats.max_brute_rel_dev, acc[i].brute_dev);
    }
  }
  return stats;
}

}  // namespace tqm
