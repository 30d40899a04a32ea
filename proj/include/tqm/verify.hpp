#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "tqm/kernels.hpp"

namespace tqm {

/// Outcome of one identity suite: the worst deviation observed over the
/// suite's grid, the threshold it was held to, and where the worst case sat.
struct SuiteResult {
  std::string name;
  double max_dev = 0.0;
  double tolerance = 0.0;
  std::string worst;
  bool pass() const { return max_dev <= tolerance; }
};

/// Character orthogonality, both directions, plus the parity census
/// |X_f^-| = |X_f^+| = phi(f)/2 for f > 2.
SuiteResult check_orthogonality(std::uint64_t f_max, double tol);

/// chi(ab) = chi(a) chi(b) on random coprime pairs (fixed seed).
SuiteResult check_multiplicativity(std::uint64_t f_max, double tol);

/// Root-of-unity sums: full sum f-1 / -1, and the coprime-restricted sum
/// against the Moebius divisor expression.
SuiteResult check_root_of_unity_sums(std::uint64_t f_max, double tol);

/// Moebius divisor sums: sum mu(d)/d = phi(f)/f (held exactly in integers)
/// and sum mu(d) log(d)/d = -(phi/f) sum_p log p/(p-1).
SuiteResult check_mobius_divisor_sums(std::uint64_t f_max, double tol);

/// sum_{0<a<d} F(a/d) = 2 d log d, deviation measured per unit of d.
SuiteResult check_f_grid_identity(std::uint64_t d_max, double per_d_tol,
                                  const KernelConfig& cfg = {});

/// sum_{j=1}^{m-1} log(2 sin(pi j/m)) = log m.
SuiteResult check_log_sine(std::uint64_t m_max, double tol);

/// The double-sum collapse: for d | f and gcd(c, f) = 1,
/// sum_{j,k: d | j-ck} log(2 sin pi j/f) log(2 sin pi k/f)
///   = (log(f/d))^2 + R(c,d).
SuiteResult check_double_sum_identity(std::uint64_t f_max, double tol);

/// Trivial-character value of the log-sine transform:
/// (1/f) sum_{(a,f)=1} V(a) = -(phi/f) sum_p log p/(p-1).
SuiteResult check_trivial_character_transform(std::uint64_t f_max, double tol);

/// R(c,d) = R(c mod d, d) and S(c,d) = S(c, d mod c), summand-for-summand.
SuiteResult check_reductions(double tol);

/// The central equivalence: explicit formulas against the brute-force
/// character sums over f in [f_min, f_max], c in [2, min(c_max, f-1)],
/// gcd(f,c) = 1. Deviations are relative: |exact - brute| / (1 + |exact|).
SuiteResult check_exact_vs_brute(std::uint64_t f_min, std::uint64_t f_max, std::uint64_t c_max,
                                 double rel_tol);

/// m_brute(all) = m_brute(odd) + m_brute(even-nontrivial) on the same grid.
SuiteResult check_brute_partition(std::uint64_t f_min, std::uint64_t f_max, std::uint64_t c_max,
                                  double tol);

/// |Im m_brute(all)| / (1 + |Re|) on the same grid.
SuiteResult check_brute_realness(std::uint64_t f_min, std::uint64_t f_max, std::uint64_t c_max,
                                 double tol);

/// Everything cmd_verify runs, grids scaled by f_max. A tolerance override
/// replaces every suite's default.
std::vector<SuiteResult> run_verify_suites(std::uint64_t f_max, std::optional<double> tol_override);

/// Empirical error-term statistics for the R asymptotic: the ratio
/// |R(c,d) - pi^2 d/(12c) + (log d)^2| / log d over prime d in
/// [d_min, d_max] and the given c values (pairs with gcd > 1 skipped).
struct RatioStats {
  double max_ratio = 0.0;
  double median_ratio = 0.0;
  std::string worst;
  std::size_t count = 0;
};
RatioStats r_asymptotic_residuals(std::uint64_t d_min, std::uint64_t d_max,
                                        const std::vector<std::uint64_t>& c_values);

/// Same idea for the moment asymptotics over prime f in [f_min, f_max] at
/// fixed c: max |m_exact - m_asym| / log f, the M+ analogue, and the worst
/// relative disagreement against brute force for f <= brute_cap.
struct MomentResidualStats {
  double max_ratio_m = 0.0;
  double max_ratio_m_plus = 0.0;
  double max_brute_rel_dev = 0.0;
  std::string worst_m;
  std::size_t count = 0;
  std::size_t brute_checked = 0;
};
MomentResidualStats moment_asymptotic_residuals(std::uint64_t f_min, std::uint64_t f_max,
                                                std::uint64_t c, std::uint64_t brute_cap);

}  // namespace tqm
