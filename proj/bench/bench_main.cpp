// Wall-clock comparison of the serial reference paths against the
// OpenMP-parallel kernels, plus bit-identity checks across thread counts.

#include <omp.h>

#include <chrono>
#include <cmath>
#include <complex>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <numeric>
#include <vector>

#include "tqm/kernels.hpp"
#include "tqm/lvalues.hpp"
#include "tqm/moments.hpp"
#include "tqm/sweep.hpp"

namespace {

using Clock = std::chrono::steady_clock;

double time_ms(const std::function<void()>& fn) {
  const auto start = Clock::now();
  fn();
  return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

void bench_l1_table(std::uint64_t f, int threads) {
  const tqm::DirichletGroup g(f);

  tqm::LValueTable ref = tqm::l1_table_reference(g);
  omp_set_num_threads(1);
  const double t_ref = time_ms([&] { ref = tqm::l1_table_reference(g); });

  tqm::LValueTable batch1 = tqm::l1_batch(g);
  const double t_batch1 = time_ms([&] { batch1 = tqm::l1_batch(g); });

  omp_set_num_threads(threads);
  tqm::LValueTable batchN = tqm::l1_batch(g);
  const double t_batchN = time_ms([&] { batchN = tqm::l1_batch(g); });

  double max_dev = 0.0;
  bool bit_identical = true;
  for (std::size_t i = 1; i < g.size(); ++i) {
    max_dev = std::max(max_dev, std::abs(ref.value(i) - batch1.value(i)));
    bit_identical = bit_identical && batch1.value(i) == batchN.value(i);
  }
  std::printf("l1 table      f=%-6lu ref %9.2f ms | batch(1) %9.2f ms | batch(%d) %9.2f ms | "
              "ref vs batch %.2e | threads bit-identical: %s\n",
              static_cast<unsigned long>(f), t_ref, t_batch1, threads, t_batchN, max_dev,
              bit_identical ? "yes" : "NO");
}

void bench_f_grid(std::uint64_t d, int threads) {
  const tqm::KernelConfig cfg{10000, 1e-8};
  omp_set_num_threads(1);
  double serial = 0.0;
  const double t1 = time_ms([&] { serial = tqm::f_grid_sum(d, cfg); });
  omp_set_num_threads(threads);
  double parallel = 0.0;
  const double tN = time_ms([&] { parallel = tqm::f_grid_sum(d, cfg); });
  std::printf("F grid sum    d=%-6lu serial %8.2f ms | %d threads %8.2f ms | bit-identical: %s\n",
              static_cast<unsigned long>(d), t1, threads, tN,
              serial == parallel ? "yes" : "NO");
}

void bench_moment_grid(std::uint64_t f_max, int threads) {
  std::vector<std::uint64_t> fs;
  for (std::uint64_t f = 101; f <= f_max; f += 2)
    if (std::gcd(f, 2ull) == 1) fs.push_back(f);

  const auto run = [&] {
    std::vector<double> out(fs.size());
#pragma omp parallel for schedule(dynamic)
    for (std::int64_t i = 0; i < static_cast<std::int64_t>(fs.size()); ++i) {
      const tqm::DirichletGroup g(fs[i]);
      out[i] = tqm::m_brute(g, tqm::l1_batch(g), 2, tqm::ParityFilter::all).real();
    }
    return out;
  };

  omp_set_num_threads(1);
  std::vector<double> serial;
  const double t1 = time_ms([&] { serial = run(); });
  omp_set_num_threads(threads);
  std::vector<double> parallel;
  const double tN = time_ms([&] { parallel = run(); });
  std::printf("brute moments f<=%-4lu serial %8.2f ms | %d threads %8.2f ms | bit-identical: %s\n",
              static_cast<unsigned long>(f_max), t1, threads, tN,
              serial == parallel ? "yes" : "NO");
}

}  // namespace

int main(int argc, char** argv) {
  const int threads = argc > 1 ? std::atoi(argv[1]) : tqm::resolve_threads(0);
  std::printf("comparing serial reference vs OpenMP kernels (%d threads)\n", threads);
  for (std::uint64_t f : {400ull, 800ull, 1600ull}) bench_l1_table(f, threads);
  for (std::uint64_t d : {500ull, 1500ull}) bench_f_grid(d, threads);
  bench_moment_grid(300, threads);
  return 0;
}
