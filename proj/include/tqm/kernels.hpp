#pragma once

#include <cstdint>
#include <vector>

namespace tqm {

/// Euler-Mascheroni constant, 20 significant digits.
inline constexpr double kEulerGamma = 0.57721566490153286061;

/// Truncation control for the regularized harmonic series F.
struct KernelConfig {
  std::int64_t series_truncation = 10000;  // symmetric cutoff N, >= 100
  double tolerance = 1e-8;                 // acceptance threshold for F-based identities
};

/// Rigorous truncation-error bound for F at reduced argument x in (0,1):
/// the discarded tail is positive and at most x^2 / (N(N+1)).
double f_truncation_bound(double x, std::int64_t n);

/// F(x) = 1/|x| + sum_{n != 0} (1/|n-x| - 1/|n|), and F := 0 on the integers.
///
/// The argument is first reduced into (0,1) by periodicity; the surviving
/// terms pair up as 2x^2 / (n(n^2 - x^2)), summed to cfg.series_truncation
/// with compensated accumulation. Satisfies F(x) = F(x+1) = F(1-x) and
/// sum_{0<a<d} F(a/d) = 2 d log d.
///
/// Observed closed form on (0,1), kept here as documentation only:
/// F(x) = 1/x - 2*gamma - psi(1+x) - psi(1-x), psi the digamma function.
double F(double x, const KernelConfig& cfg = {});

/// G(x) = F(x) - 1/x - 1/(1-x) + 1 on (0,1); G(0+) = G(1-) = 0 and
/// |G(x)| = O(x(1-x)).
double G(double x, const KernelConfig& cfg = {});

/// log(2 sin(pi j/m)) for j in [0, m), with the j = 0 slot set to 0 and the
/// upper half mirrored from the lower so the table is symmetric bit-for-bit.
std::vector<double> log_sine_table(std::uint64_t m);

/// sum_{j=1}^{m-1} log(2 sin(pi j/m)); equals log m.
double log_sine_sum(std::uint64_t m);

/// R(c,d) = sum_{k=1}^{d-1} log(2 sin(pi k/d)) log(2 sin(pi ck/d)).
/// Angles are reduced mod pi in integer arithmetic (ck mod d) before the
/// sine call, so R(c,d) == R(c mod d, d) holds summand-for-summand.
/// Requires gcd(c,d) = 1.
double R(std::uint64_t c, std::uint64_t d);

/// Same quantity through the harmonic kernel:
/// R(c,d) = (1/4d) sum_{0<e<d} F(ce/d) F(e/d) - (log d)^2.
/// Agreement with R() is limited by the F truncation in cfg.
double R_via_F(std::uint64_t c, std::uint64_t d, const KernelConfig& cfg = {});

/// Two-term prediction pi^2 d / (12 c) - (log d)^2, with c replaced by
/// c mod d when c > d. Valid regime: c >= 2, d >= 2, gcd(c,d) = 1.
double r_asymptotic(std::uint64_t c, std::uint64_t d);

/// S(c,d) = sum_{a=1}^{c-1} cot(pi a/c) cot(pi a d/c), gcd(c,d) = 1.
/// Depends on d only through d mod c, again summand-for-summand.
double S(std::uint64_t c, std::int64_t d);

struct HarmonicProgression {
  double truncated_sum;  // sum of 1/|n| over 0 < |n| < X, n == b (mod a)
  double predicted;      // (2 log X - 2 log a + 2 gamma)/a + F(b/a)/a
};

/// Both sides of the harmonic-progression asymptotic; the difference is
/// O(1/X) uniformly in a and b. The F-term drops out when a | b.
HarmonicProgression harmonic_progression(double x_cut, std::uint64_t a, std::int64_t b,
                                         const KernelConfig& cfg = {});

/// sum_{0<a<d} F(a/d). Elementwise F evaluations run in parallel; the
/// reduction is a serial compensated sum in index order, so the result is
/// independent of the thread count.
double f_grid_sum(std::uint64_t d, const KernelConfig& cfg = {});

}  // namespace tqm
