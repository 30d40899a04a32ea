#include <omp.h>

#include <CLI11.hpp>
#include <cmath>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "tqm/kernels.hpp"
#include "tqm/moments.hpp"
#include "tqm/sweep.hpp"
#include "tqm/verify.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitVerifyFailure = 1;
constexpr int kExitUsage = 2;

std::string g12(double v) { return tqm::format_double(v, 12); }

void print_report(const tqm::MomentReport& r) {
  std::cout << "f                  = " << r.f << '\n'
            << "c                  = " << r.c << '\n'
            << "phi_f              = " << r.phi << '\n'
            << "m_plus_exact       = " << g12(r.m_plus_exact) << '\n'
            << "m_minus_exact      = " << g12(r.m_minus_exact) << '\n'
            << "m_exact            = " << g12(r.m_exact) << '\n';
  if (r.m_brute) {
    std::cout << "m_brute            = " << g12(r.m_brute->real()) << " + " << g12(r.m_brute->imag())
              << "i\n"
              << "m_plus_brute       = " << g12(r.m_plus_brute->real()) << " + "
              << g12(r.m_plus_brute->imag()) << "i\n"
              << "m_minus_brute      = " << g12(r.m_minus_brute->real()) << " + "
              << g12(r.m_minus_brute->imag()) << "i\n"
              << "exact_brute_dev    = " << g12(std::abs(r.m_exact - r.m_brute->real())) << '\n';
  } else {
    std::cout << "m_brute            = (skipped: f above brute cap)\n";
  }
  std::cout << "m_asym             = " << g12(r.m_asym) << '\n'
            << "m_plus_asym        = " << g12(r.m_plus_asym) << '\n'
            << "m_minus_asym       = " << g12(r.m_minus_asym) << '\n'
            << "residual           = " << g12(r.residual) << '\n'
            << "residual_over_logf = " << g12(r.residual_over_logf) << '\n';
}

int run_verify(std::uint64_t f_max, std::optional<double> tol) {
  const std::vector<tqm::SuiteResult> results = tqm::run_verify_suites(f_max, tol);
  bool all_pass = true;
  for (const tqm::SuiteResult& s : results) {
    std::cout << (s.pass() ? "[PASS] " : "[FAIL] ") << s.name << ": max deviation "
              << tqm::format_double(s.max_dev, 6) << " (tolerance "
              << tqm::format_double(s.tolerance, 6) << ")";
    if (!s.pass()) std::cout << " worst at " << s.worst;
    std::cout << '\n';
    all_pass = all_pass && s.pass();
  }
  return all_pass ? kExitOk : kExitVerifyFailure;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"twisted quadratic moments of Dirichlet L-functions"};
  app.require_subcommand(1);
  int threads = 0;
  app.add_option("--threads", threads, "worker threads (default: TM_THREADS or hardware)");

  // compute
  auto* compute = app.add_subcommand("compute", "evaluate one (f, c) pair and print the report");
  std::uint64_t cf = 0, cc = 0, compute_brute_cap = 2000;
  bool allow_c1 = false;
  compute->add_option("f", cf, "modulus")->required();
  compute->add_option("c", cc, "twist")->required();
  compute->add_option("--brute-cap", compute_brute_cap, "largest f for brute-force cross-check");
  compute->add_flag("--allow-c1", allow_c1, "permit the untwisted moment c = 1");

  // verify
  auto* verify = app.add_subcommand("verify", "run the identity suites");
  std::uint64_t fmax = 100;
  double tol = -1.0;
  verify->add_option("--fmax", fmax, "largest modulus in the grids")->check(CLI::Range(5u, 100000u));
  verify->add_option("--tol", tol, "override every suite tolerance");

  // sweep
  auto* sweep = app.add_subcommand("sweep", "tabulate reports over a range of moduli");
  tqm::SweepSpec spec;
  std::vector<std::uint64_t> c_list;
  std::string out_path, format = "csv";
  bool primes_only = false, squarefree_only = false, all_moduli = false;
  sweep->add_option("--f-min", spec.f_min, "smallest modulus")->required();
  sweep->add_option("--f-max", spec.f_max, "largest modulus")->required();
  sweep->add_flag("--primes", primes_only, "prime moduli only");
  sweep->add_flag("--squarefree", squarefree_only, "squarefree moduli only");
  sweep->add_flag("--all", all_moduli, "all moduli (default)");
  sweep->add_option("--c", c_list, "twist values")->delimiter(',');
  sweep->add_option("--brute-cap", spec.brute_cap, "largest f for brute-force columns");
  sweep->add_option("--out", out_path, "output path (default: stdout)");
  sweep->add_option("--format", format, "csv or json")->check(CLI::IsMember({"csv", "json"}));

  // kernel
  auto* kernel = app.add_subcommand("kernel", "evaluate one trigonometric kernel");
  auto* kr = kernel->add_subcommand("r", "R(c,d) log-sine kernel");
  auto* ks = kernel->add_subcommand("s", "S(c,d) cotangent kernel");
  auto* kf = kernel->add_subcommand("f", "F(x) harmonic kernel");
  kernel->require_subcommand(1);
  std::uint64_t kc = 0, kd = 0;
  std::int64_t ks_d = 0;
  double kx = 0.0;
  std::int64_t series_n = 10000;
  kr->add_option("c", kc, "twist")->required();
  kr->add_option("d", kd, "modulus")->required();
  ks->add_option("c", kc, "modulus of the cotangent sum")->required();
  ks->add_option("d", ks_d, "twist")->required();
  kf->add_option("x", kx, "argument")->required();
  kf->add_option("--series-n", series_n, "series truncation");

  for (CLI::App* sub : {compute, verify, sweep, kernel, kr, ks, kf}) sub->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  omp_set_num_threads(tqm::resolve_threads(threads));

  try {
    if (*compute) {
      tqm::ReportOptions opt;
      opt.brute_cap = compute_brute_cap;
      opt.allow_untwisted = allow_c1;
      print_report(tqm::moment_report(cf, cc, opt));
      return kExitOk;
    }
    if (*verify) {
      return run_verify(fmax, tol > 0 ? std::optional<double>(tol) : std::nullopt);
    }
    if (*sweep) {
      if (primes_only + squarefree_only + all_moduli > 1)
        throw std::invalid_argument("sweep: choose at most one modulus filter");
      spec.filter = primes_only ? tqm::ModulusFilter::primes
                    : squarefree_only ? tqm::ModulusFilter::squarefree
                                      : tqm::ModulusFilter::all;
      spec.c_list = c_list;
      spec.threads = threads;
      spec.format = format == "json" ? tqm::OutputFormat::json : tqm::OutputFormat::csv;
      spec.output_path = out_path;

      std::ostringstream buffer;
      const tqm::SweepStats stats = tqm::run_sweep(spec, buffer);
      if (out_path.empty()) {
        std::cout << buffer.str();
      } else {
        std::ofstream file(out_path, std::ios::binary | std::ios::trunc);
        if (!file) throw std::invalid_argument("sweep: cannot open output path " + out_path);
        file << buffer.str();
        if (!file.good()) throw std::invalid_argument("sweep: write failed for " + out_path);
      }
      std::cerr << "rows: " << stats.rows << ", skipped pairs: " << stats.skipped << '\n';
      return kExitOk;
    }
    if (*kernel) {
      if (*kr) {
        std::cout << tqm::format_double(tqm::R(kc, kd), 12) << '\n';
      } else if (*ks) {
        std::cout << tqm::format_double(tqm::S(kc, ks_d), 12) << '\n';
      } else if (*kf) {
        tqm::KernelConfig cfg;
        cfg.series_truncation = series_n;
        std::cout << tqm::format_double(tqm::F(kx, cfg), 12) << '\n';
      }
      return kExitOk;
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitOk;
}
