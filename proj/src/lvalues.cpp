#include "tqm/lvalues.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

#include "tqm/kahan.hpp"
#include "tqm/kernels.hpp"

namespace tqm {
namespace {

constexpr double kPi = std::numbers::pi;

void require_nontrivial(const Character& chi, const char* who) {
  for (std::uint32_t e : chi.exponents)
    if (e != 0) return;
  throw std::invalid_argument(std::string(who) + ": trivial character has no L(1) value");
}

// cot(pi a/f) for a in [0, f), antisymmetric bit-for-bit, middle slot 0.
std::vector<double> cot_table(std::uint64_t f) {
  std::vector<double> t(f, 0.0);
  for (std::uint64_t a = 1; 2 * a < f; ++a) {
    t[a] = 1.0 / std::tan(kPi * static_cast<double>(a) / static_cast<double>(f));
    t[f - a] = -t[a];
  }
  return t;
}

std::vector<std::complex<double>> unit_roots(std::uint64_t n) {
  std::vector<std::complex<double>> r(n);
  for (std::uint64_t k = 0; k < n; ++k) {
    const double ang = 2.0 * kPi * static_cast<double>(k) / static_cast<double>(n);
    r[k] = {std::cos(ang), std::sin(ang)};
  }
  return r;
}

std::complex<double> character_sum_even(const DirichletGroup& g, const Character& chi,
                                        const std::vector<double>& v) {
  const std::uint64_t f = g.modulus();
  KahanComplexSum s;
  for (std::uint64_t a = 1; a < f; ++a) {
    if (!g.units().coprime[a]) continue;
    s.add(g.eval(chi, a) * v[a]);
  }
  return s.value() * (-1.0 / static_cast<double>(f));
}

std::complex<double> character_sum_odd(const DirichletGroup& g, const Character& chi,
                                       const std::vector<double>& cot) {
  const std::uint64_t f = g.modulus();
  KahanComplexSum s;
  for (std::uint64_t a = 1; a < f; ++a) {
    if (!g.units().coprime[a]) continue;
    s.add(g.eval(chi, a) * cot[a]);
  }
  return s.value() * (kPi / (2.0 * static_cast<double>(f)));
}

}  // namespace

LValueTable::LValueTable(std::uint64_t modulus, LMethod method,
                         std::vector<std::complex<double>> nontrivial_values)
    : modulus_(modulus), method_(method), values_(std::move(nontrivial_values)) {}

std::complex<double> LValueTable::value(std::size_t character_index) const {
  if (character_index == 0 || character_index > values_.size())
    throw std::out_of_range("LValueTable: no entry for this character index");
  return values_[character_index - 1];
}

std::vector<double> log_sine_dft(std::uint64_t f) {
  const std::vector<double> lam = log_sine_table(f);
  std::vector<double> cos_tab(f);
  for (std::uint64_t k = 0; k < f; ++k)
    cos_tab[k] = std::cos(2.0 * kPi * static_cast<double>(k) / static_cast<double>(f));

  std::vector<double> v(f, 0.0);
#pragma omp parallel for schedule(static)
  for (std::int64_t a = 0; a < static_cast<std::int64_t>(f); ++a) {
    KahanSum row;
    for (std::uint64_t j = 1; j < f; ++j)
      row.add(lam[j] * cos_tab[static_cast<std::uint64_t>(a) * j % f]);
    v[a] = row.value();
  }
  return v;
}

std::complex<double> l1_closed_form(const DirichletGroup& g, const Character& chi) {
  require_nontrivial(chi, "l1_closed_form");
  const std::uint64_t f = g.modulus();
  if (chi.odd) return character_sum_odd(g, chi, cot_table(f));

  const std::vector<double> lam = log_sine_table(f);
  std::vector<double> cos_tab(f);
  for (std::uint64_t k = 0; k < f; ++k)
    cos_tab[k] = std::cos(2.0 * kPi * static_cast<double>(k) / static_cast<double>(f));

  KahanComplexSum s;
  for (std::uint64_t a = 1; a < f; ++a) {
    if (!g.units().coprime[a]) continue;
    KahanSum inner;  // V(a), computed per character: this is the slow reference
    for (std::uint64_t j = 1; j < f; ++j) inner.add(lam[j] * cos_tab[a * j % f]);
    s.add(g.eval(chi, a) * inner.value());
  }
  return s.value() * (-1.0 / static_cast<double>(f));
}

std::complex<double> l1_generic(const DirichletGroup& g, const Character& chi) {
  require_nontrivial(chi, "l1_generic");
  const std::uint64_t f = g.modulus();
  const std::vector<double> lam = log_sine_table(f);
  const std::vector<std::complex<double>> zeta = unit_roots(f);

  KahanComplexSum outer;
  for (std::uint64_t a = 1; a < f; ++a) {
    if (!g.units().coprime[a]) continue;
    KahanComplexSum inner;
    for (std::uint64_t j = 1; j < f; ++j) {
      const std::complex<double> w{-lam[j],
                                   kPi * static_cast<double>(j) / static_cast<double>(f) -
                                       kPi / 2.0};
      inner.add(zeta[a * j % f] * w);
    }
    outer.add(g.eval(chi, a) * inner.value());
  }
  return outer.value() / static_cast<double>(f);
}

LValueTable l1_batch(const DirichletGroup& g) {
  const std::uint64_t f = g.modulus();
  if (f < 3) throw std::invalid_argument("l1_batch: requires f >= 3");

  const std::vector<double> v = log_sine_dft(f);
  const std::vector<double> cot = cot_table(f);
  const auto& chars = g.characters();

  std::vector<std::complex<double>> vals(chars.size() - 1);
#pragma omp parallel for schedule(dynamic)
  for (std::int64_t i = 1; i < static_cast<std::int64_t>(chars.size()); ++i) {
    const Character& chi = chars[i];
    vals[i - 1] = chi.odd ? character_sum_odd(g, chi, cot) : character_sum_even(g, chi, v);
  }
  return LValueTable(f, LMethod::closed_form, std::move(vals));
}

LValueTable l1_table_reference(const DirichletGroup& g) {
  const std::uint64_t f = g.modulus();
  if (f < 3) throw std::invalid_argument("l1_table_reference: requires f >= 3");
  const auto& chars = g.characters();
  std::vector<std::complex<double>> vals(chars.size() - 1);
  for (std::size_t i = 1; i < chars.size(); ++i) vals[i - 1] = l1_closed_form(g, chars[i]);
  return LValueTable(f, LMethod::closed_form, std::move(vals));
}

SeriesValue l1_series_oracle(const DirichletGroup& g, const Character& chi,
                             std::uint64_t n_periods) {
  require_nontrivial(chi, "l1_series_oracle");
  if (n_periods == 0) throw std::invalid_argument("l1_series_oracle: n_periods must be >= 1");
  const std::uint64_t f = g.modulus();

  // sum_{n <= n_periods f} chi(n)/n, grouped by residue class so chi factors
  // out of each inner harmonic sum
  KahanComplexSum total;
  for (std::uint64_t r = 1; r < f; ++r) {
    if (!g.units().coprime[r]) continue;
    KahanSum h;
    double n = static_cast<double>(r);
    for (std::uint64_t k = 0; k < n_periods; ++k, n += static_cast<double>(f)) h.add(1.0 / n);
    total.add(g.eval(chi, r) * h.value());
  }
  return {total.value(), 1.0 / static_cast<double>(n_periods)};
}

}  // namespace tqm
