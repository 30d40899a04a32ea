#include "tqm/sweep.hpp"

#include <omp.h>

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdlib>
#include <numeric>
#include <ostream>
#include <stdexcept>

#include "tqm/arith.hpp"

namespace tqm {
namespace {

bool passes_filter(std::uint64_t f, ModulusFilter filter) {
  switch (filter) {
    case ModulusFilter::all:
      return true;
    case ModulusFilter::primes: {
      const Factorization fact = factorize(f);
      return fact.size() == 1 && fact[0].exponent == 1;
    }
    case ModulusFilter::squarefree:
      return mobius(f) != 0;
  }
  return false;
}

struct Row {
  MomentReport report;
  bool brute_checked = false;
};

void write_csv_row(std::ostream& out, const Row& row) {
  const MomentReport& r = row.report;
  out << r.f << ',' << r.c << ',' << r.phi << ',' << format_double(r.m_plus_exact) << ','
      << format_double(r.m_minus_exact) << ',' << format_double(r.m_exact) << ',';
  if (row.brute_checked)
    out << format_double(r.m_brute->real()) << ',' << format_double(r.m_brute->imag());
  else
    out << ',';
  out << ',' << format_double(r.m_asym) << ',' << format_double(r.m_plus_asym) << ','
      << format_double(r.residual) << ',' << format_double(r.residual_over_logf) << ','
      << (row.brute_checked ? "true" : "false") << '\n';
}

void write_json_row(std::ostream& out, const Row& row, bool last) {
  const MomentReport& r = row.report;
  out << "  {\"f\": " << r.f << ", \"c\": " << r.c << ", \"phi_f\": " << r.phi
      << ", \"m_plus_exact\": " << format_double(r.m_plus_exact)
      << ", \"m_minus_exact\": " << format_double(r.m_minus_exact)
      << ", \"m_exact\": " << format_double(r.m_exact) << ", \"m_brute_re\": "
      << (row.brute_checked ? format_double(r.m_brute->real()) : "null")
      << ", \"m_brute_im\": "
      << (row.brute_checked ? format_double(r.m_brute->imag()) : "null")
      << ", \"m_asym\": " << format_double(r.m_asym)
      << ", \"m_plus_asym\": " << format_double(r.m_plus_asym)
      << ", \"residual\": " << format_double(r.residual)
      << ", \"residual_over_logf\": " << format_double(r.residual_over_logf)
      << ", \"brute_checked\": " << (row.brute_checked ? "true" : "false") << '}'
      << (last ? "\n" : ",\n");
}

}  // namespace

std::string format_double(double v, int significant) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof(buf), v, std::chars_format::general, significant);
  return std::string(buf, res.ptr);
}

int resolve_threads(int flag_value) {
  if (flag_value > 0) return flag_value;
  if (const char* env = std::getenv("TM_THREADS")) {
    const int n = std::atoi(env);
    if (n > 0) return n;
  }
  return omp_get_max_threads();
}

SweepStats run_sweep(const SweepSpec& spec, std::ostream& out) {
  if (spec.f_min < 3) throw std::invalid_argument("sweep: f_min must be >= 3");
  if (spec.f_max < spec.f_min) throw std::invalid_argument("sweep: f_max must be >= f_min");
  if (spec.c_list.empty()) throw std::invalid_argument("sweep: c list must not be empty");
  for (std::uint64_t c : spec.c_list)
    if (c < 1) throw std::invalid_argument("sweep: every c must be >= 1");

  std::vector<std::uint64_t> cs = spec.c_list;
  std::sort(cs.begin(), cs.end());
  cs.erase(std::unique(cs.begin(), cs.end()), cs.end());

  // (f, c) worklist in output order
  struct Task {
    std::uint64_t f, c;
  };
  std::vector<Task> tasks;
  std::size_t skipped = 0;
  for (std::uint64_t f = spec.f_min; f <= spec.f_max; ++f) {
    if (!passes_filter(f, spec.filter)) continue;
    for (std::uint64_t c : cs) {
      if (c >= f || std::gcd(f, c) != 1) {
        ++skipped;
        continue;
      }
      tasks.push_back({f, c});
    }
  }

  std::vector<Row> rows(tasks.size());
  const int threads = resolve_threads(spec.threads);
  ReportOptions opt;
  opt.brute_cap = spec.brute_cap;
  opt.allow_untwisted = true;  // a c of 1 in the list is an explicit request
#pragma omp parallel for schedule(dynamic) num_threads(threads)
  for (std::int64_t i = 0; i < static_cast<std::int64_t>(tasks.size()); ++i) {
    rows[i].report = moment_report(tasks[i].f, tasks[i].c, opt);
    rows[i].brute_checked = rows[i].report.m_brute.has_value();
  }

  if (spec.format == OutputFormat::csv) {
    out << kSweepCsvHeader << '\n';
    for (const Row& row : rows) write_csv_row(out, row);
  } else {
    out << "[\n";
    for (std::size_t i = 0; i < rows.size(); ++i) write_json_row(out, rows[i], i + 1 == rows.size());
    out << "]\n";
  }
  return {rows.size(), skipped};
}

}  // namespace tqm
