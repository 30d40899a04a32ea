#pragma once

#include <complex>
#include <cstdint>
#include <vector>

#include "tqm/characters.hpp"

namespace tqm {

enum class LMethod { closed_form, series_oracle };

/// L(1, chi) for every nontrivial chi mod f, keyed by character index.
/// There is deliberately no slot for the trivial character.
class LValueTable {
 public:
  LValueTable(std::uint64_t modulus, LMethod method,
              std::vector<std::complex<double>> nontrivial_values);

  std::uint64_t modulus() const { return modulus_; }
  LMethod method() const { return method_; }
  std::size_t count() const { return values_.size(); }  // phi(f) - 1

  std::complex<double> value(std::size_t character_index) const;
  std::complex<double> value(const Character& chi) const { return value(chi.index); }

 private:
  std::uint64_t modulus_;
  LMethod method_;
  std::vector<std::complex<double>> values_;  // slot i <-> character index i+1
};

/// The inner transform V(a) = sum_{j=1}^{f-1} zeta_f^{aj} log(2 sin(pi j/f))
/// for all a in [0, f) at once. The log-sine weights are symmetric, so V is
/// real and computed as a cosine transform; rows run in parallel, each row a
/// serial compensated sum.
std::vector<double> log_sine_dft(std::uint64_t f);

/// Closed finite form for L(1, chi), chi nontrivial:
///   even chi:  -(1/f) sum_a chi(a) V(a)
///   odd chi:   (pi/2f) sum_a chi(a) cot(pi a/f)
/// Serial per-character path, kept as the reference the batched path is
/// tested against.
std::complex<double> l1_closed_form(const DirichletGroup& g, const Character& chi);

/// The parity-free double sum
///   (1/f) sum_a chi(a) sum_j zeta_f^{aj} (-log(2 sin(pi j/f)) + i(pi j/f - pi/2))
/// which both parity-specific forms above must reproduce. Test-facing.
std::complex<double> l1_generic(const DirichletGroup& g, const Character& chi);

/// All nontrivial L(1, chi) mod f in one pass: one shared V transform, then
/// one character sum per chi. Parallel over characters with a fixed
/// summation order inside each, so results do not depend on thread count.
/// Requires f >= 3.
LValueTable l1_batch(const DirichletGroup& g);

/// Fully serial per-character construction of the same table.
LValueTable l1_table_reference(const DirichletGroup& g);

struct SeriesValue {
  std::complex<double> value;  // partial sum of sum_n chi(n)/n to N = n_periods * f
  double tail_bound;           // f/N, from |sum_{n<=x} chi(n)| <= f by Abel summation
};

/// Independent slow oracle: the Dirichlet series at s = 1, truncated at a
/// whole number of periods so the character sum in the Abel tail estimate
/// starts from zero. Certified error is O(f/N) = O(1/n_periods).
SeriesValue l1_series_oracle(const DirichletGroup& g, const Character& chi,
                             std::uint64_t n_periods);

}  // namespace tqm
