#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "tqm/moments.hpp"

namespace tqm {

enum class ModulusFilter { all, primes, squarefree };
enum class OutputFormat { csv, json };

struct SweepSpec {
  std::uint64_t f_min = 3;
  std::uint64_t f_max = 3;
  ModulusFilter filter = ModulusFilter::all;
  std::vector<std::uint64_t> c_list;
  std::uint64_t brute_cap = 2000;
  int threads = 0;  // 0 = resolve from TM_THREADS / hardware
  std::string output_path;
  OutputFormat format = OutputFormat::csv;
};

struct SweepStats {
  std::size_t rows = 0;
  std::size_t skipped = 0;  // pairs dropped for gcd(f,c) > 1 or f <= c
};

inline constexpr const char* kSweepCsvHeader =
    "f,c,phi_f,m_plus_exact,m_minus_exact,m_exact,m_brute_re,m_brute_im,"
    "m_asym,m_plus_asym,residual,residual_over_logf,brute_checked";

/// Locale-free rendering with 15 significant digits (std::to_chars).
std::string format_double(double v, int significant = 15);

/// Thread count resolution: explicit flag wins, then TM_THREADS, then the
/// OpenMP default.
int resolve_threads(int flag_value);

/// Evaluates every valid (f, c) pair of the spec and streams one row per
/// pair, sorted by (f, c). Work is distributed over a thread pool but each
/// row is computed with a fixed serial summation order and the output is
/// assembled on the calling thread, so bytes do not depend on the thread
/// count. Throws std::invalid_argument on spec violations.
SweepStats run_sweep(const SweepSpec& spec, std::ostream& out);

}  // namespace tqm
