// Acceptance suite: one pass/fail line per criterion, nonzero exit on any
// failure. Grids and tolerances are pinned here, not configurable.

#include <cmath>
#include <complex>
#include <cstdio>
#include <numbers>
#include <numeric>
#include <sstream>
#include <string>
#include <vector>

#include "tqm/arith.hpp"
#include "tqm/kernels.hpp"
#include "tqm/lvalues.hpp"
#include "tqm/moments.hpp"
#include "tqm/sweep.hpp"
#include "tqm/verify.hpp"

namespace {

constexpr double kPi2 = std::numbers::pi * std::numbers::pi;

// Empirical bounds recorded from this implementation's own sweeps (measured
// maxima 1.666, 0.386, 0.675); the criteria assert boundedness, not any
// constant claimed by the formulas.
constexpr double kLemma41RatioBound = 2.0;     // |R - asym| / log d over the grid
constexpr double kMomentRatioBound = 0.5;      // |m_exact - m_asym| / log f, prime f
constexpr double kMomentPlusRatioBound = 0.8;  // M+ analogue

int failures = 0;

void report(int idx, const std::string& title, bool pass, const std::string& detail) {
  std::printf("[%s] %d. %s: %s\n", pass ? "PASS" : "FAIL", idx, title.c_str(), detail.c_str());
  std::fflush(stdout);
  if (!pass) ++failures;
}

std::string fmt(double v) { return tqm::format_double(v, 4); }

// criteria 1 and 2 share one pass over the grid
struct GridDevs {
  double plus = 0.0, minus = 0.0;
  std::string worst_plus, worst_minus;
};

GridDevs exactness_grid(std::uint64_t f_min, std::uint64_t f_max, std::uint64_t c_max) {
  std::vector<GridDevs> per_f(f_max + 1);
#pragma omp parallel for schedule(dynamic)
  for (std::int64_t fi = static_cast<std::int64_t>(f_min); fi <= static_cast<std::int64_t>(f_max);
       ++fi) {
    const std::uint64_t f = static_cast<std::uint64_t>(fi);
    const tqm::DirichletGroup g(f);
    const tqm::LValueTable table = tqm::l1_batch(g);
    for (std::uint64_t c = 2; c <= std::min(c_max, f - 1); ++c) {
      if (std::gcd(f, c) != 1) continue;
      const double plus = tqm::m_plus_exact(f, c);
      const double minus = tqm::m_minus_exact(f, c);
      const double dev_plus =
          std::abs(plus - tqm::m_brute(g, table, c, tqm::ParityFilter::even_nontrivial).real()) /
          (1.0 + std::abs(plus));
      const double dev_minus =
          std::abs(minus - tqm::m_brute(g, table, c, tqm::ParityFilter::odd).real()) /
          (1.0 + std::abs(minus));
      std::ostringstream tag;
      tag << "(f,c)=(" << f << ',' << c << ')';
      if (dev_plus > per_f[f].plus) {
        per_f[f].plus = dev_plus;
        per_f[f].worst_plus = tag.str();
      }
      if (dev_minus > per_f[f].minus) {
        per_f[f].minus = dev_minus;
        per_f[f].worst_minus = tag.str();
      }
    }
  }
  GridDevs total;
  for (const GridDevs& d : per_f) {
    if (d.plus > total.plus) {
      total.plus = d.plus;
      total.worst_plus = d.worst_plus;
    }
    if (d.minus > total.minus) {
      total.minus = d.minus;
      total.worst_minus = d.worst_minus;
    }
  }
  return total;
}

void criterion_1_2() {
  const GridDevs devs = exactness_grid(5, 300, 10);

  report(1, "explicit even-moment formula vs brute force on [5,300] x [2,10]",
         devs.plus < 1e-8,
         "max rel dev " + fmt(devs.plus) + " at " + devs.worst_plus + ", tolerance 1e-8");

  // adjudication of the S-sum coefficient: the shipped 1/4 passes the same
  // grid; re-weighting to the 1/2 variant must fail wherever S contributes
  double alt_min_miss = 1e300;
  bool alt_discriminated = false;
  for (std::uint64_t f : {7ull, 11ull, 13ull}) {
    const tqm::DirichletGroup g(f);
    const tqm::LValueTable table = tqm::l1_batch(g);
    for (std::uint64_t c : {2ull, 3ull}) {
      const double brute = tqm::m_brute(g, table, c, tqm::ParityFilter::odd).real();
      const double s_sum = tqm::s_divisor_sum(f, c);
      const double quarter_term = kPi2 * static_cast<double>(tqm::euler_phi(f)) /
                                  (4.0 * static_cast<double>(c * f * f)) * s_sum;
      const double alt = tqm::m_minus_exact(f, c) - quarter_term;  // the 1/2-weight variant
      if (s_sum != 0.0) {
        alt_discriminated = true;
        alt_min_miss = std::min(alt_min_miss, std::abs(alt - brute));
      }
    }
  }
  const bool pass2 = devs.minus < 1e-8 && alt_discriminated && alt_min_miss > 1e-3;
  report(2, "odd-moment formula vs brute force, S-coefficient 1/4 adjudicated",
         pass2,
         "max rel dev " + fmt(devs.minus) + " at " + devs.worst_minus +
             "; rejected 1/2-variant misses brute force by >= " + fmt(alt_min_miss));
}

void criterion_3() {
  const double dev_a = std::abs(tqm::m_minus_exact(4, 3) + kPi2 / 16.0);
  const double dev_b = std::abs(tqm::m_minus_exact(3, 2) + kPi2 / 27.0);
  const double dev_c = std::abs(tqm::m_plus_exact(3, 2));
  const double dev_d = std::abs(tqm::m_brute(3, 2, tqm::ParityFilter::even_nontrivial));

  // the closed constants re-derived through the series oracle
  const tqm::DirichletGroup g4(4);
  const tqm::SeriesValue o4 = tqm::l1_series_oracle(g4, g4.characters()[1], 1000000);
  const double oracle_m43 = -std::norm(o4.value);  // chi(3) = -1
  const tqm::DirichletGroup g3(3);
  const tqm::SeriesValue o3 = tqm::l1_series_oracle(g3, g3.characters()[1], 1000000);
  const double oracle_m32 = -std::norm(o3.value);  // chi(2) = -1

  const bool pass = dev_a < 1e-10 && dev_b < 1e-10 && dev_c < 1e-10 && dev_d < 1e-10 &&
                    std::abs(oracle_m43 + kPi2 / 16.0) < 1e-5 &&
                    std::abs(oracle_m32 + kPi2 / 27.0) < 1e-5;
  report(3, "closed points M-(4,3), M-(3,2), M+(3,2)", pass,
         "devs " + fmt(dev_a) + ", " + fmt(dev_b) + ", divisor-sum cancellation " + fmt(dev_c) +
             ", empty brute sum " + fmt(dev_d) + ", oracle cross-check ok");
}

void criterion_4() {
  // per-F truncation error is at most 1/N^2, so the d-term sum stays below
  // d/(3 N^2); N = 2000 leaves an order of magnitude under the budget
  const tqm::KernelConfig cfg{2000, 1e-6};
  const tqm::SuiteResult grid = tqm::check_f_grid_identity(500, 1e-6, cfg);

  const double f_half_dev = std::abs(tqm::F(0.5, tqm::KernelConfig{10000, 1e-8}) - 4.0 * std::log(2.0));
  const bool pass = grid.pass() && f_half_dev < 1e-8;
  report(4, "harmonic kernel grid identity for d <= 500 and pinned F(1/2)", pass,
         "max per-d dev " + fmt(grid.max_dev) + " (tol 1e-6), |F(1/2) - 4 log 2| = " +
             fmt(f_half_dev));
}

void criterion_5() {
  const tqm::RatioStats stats = tqm::r_asymptotic_residuals(101, 2003, {2, 3, 5});
  const bool pass = stats.count > 0 && stats.max_ratio <= kLemma41RatioBound &&
                    stats.max_ratio <= 3.0 * stats.median_ratio;
  report(5, "R-kernel asymptotic residual bounded over prime d in [101,2003]", pass,
         "max ratio " + fmt(stats.max_ratio) + " at " + stats.worst + ", median " +
             fmt(stats.median_ratio) + ", recorded bound " + fmt(kLemma41RatioBound) + ", " +
             std::to_string(stats.count) + " pairs");
}

void criterion_6() {
  const tqm::MomentResidualStats stats = tqm::moment_asymptotic_residuals(100, 5000, 2, 1000);
  const bool pass = stats.count > 0 && stats.brute_checked > 0 &&
                    stats.max_ratio_m <= kMomentRatioBound &&
                    stats.max_ratio_m_plus <= kMomentPlusRatioBound &&
                    stats.max_brute_rel_dev < 1e-8;
  report(6, "moment asymptotics bounded over prime f in [100,5000], c=2", pass,
         "max |m_exact-m_asym|/log f = " + fmt(stats.max_ratio_m) + " (bound " +
             fmt(kMomentRatioBound) + ", worst " + stats.worst_m + "), M+ analogue " +
             fmt(stats.max_ratio_m_plus) + ", brute rel dev " + fmt(stats.max_brute_rel_dev) +
             " over " + std::to_string(stats.brute_checked) + " of " +
             std::to_string(stats.count) + " moduli");
}

void criterion_7() {
  const std::vector<tqm::SuiteResult> suites = {
      tqm::check_orthogonality(200, 1e-9),
      tqm::check_root_of_unity_sums(100, 1e-9),
      tqm::check_mobius_divisor_sums(2000, 1e-9),
      tqm::check_log_sine(500, 1e-9),
      tqm::check_double_sum_identity(60, 1e-9),
      tqm::check_reductions(0.0),
  };
  bool pass = true;
  std::string detail;
  for (const tqm::SuiteResult& s : suites) {
    pass = pass && s.pass();
    if (!detail.empty()) detail += "; ";
    detail += s.name + " " + fmt(s.max_dev);
    if (!s.pass()) detail += " FAILED at " + s.worst;
  }
  report(7, "identity suites", pass, detail);
}

void criterion_8() {
  tqm::SweepSpec spec;
  spec.f_min = 5;
  spec.f_max = 60;
  spec.c_list = {2, 3};
  spec.brute_cap = 2000;

  bool pass = true;
  for (const tqm::OutputFormat format : {tqm::OutputFormat::csv, tqm::OutputFormat::json}) {
    spec.format = format;
    spec.threads = 1;
    std::ostringstream one;
    tqm::run_sweep(spec, one);
    spec.threads = 8;
    std::ostringstream eight;
    tqm::run_sweep(spec, eight);
    pass = pass && one.str() == eight.str() && !one.str().empty();
  }
  report(8, "sweep output byte-identical across thread counts", pass,
         pass ? "csv and json match between 1 and 8 threads" : "outputs differ");
}

}  // namespace

int main() {
  criterion_1_2();
  criterion_3();
  criterion_4();
  criterion_5();
  criterion_6();
  criterion_7();
  criterion_8();
  if (failures > 0) std::printf("%d criterion(s) failed\n", failures);
  return failures == 0 ? 0 : 1;
}
