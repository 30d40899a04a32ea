#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <complex>
#include <numeric>
#include <random>

#include "tqm/characters.hpp"
#include "tqm/kahan.hpp"

using namespace tqm;

TEST_SUITE_BEGIN("characters");

TEST_CASE("unit_group small cases") {
  const UnitGroup g1 = unit_group(1);
  CHECK(g1.generators.empty());
  CHECK(g1.phi == 1);

  const UnitGroup g8 = unit_group(8);
  CHECK(g8.orders == std::vector<std::uint64_t>{2, 2});
  CHECK(g8.phi == 4);

  UnitGroup g15 = unit_group(15);
  std::vector<std::uint64_t> orders = g15.orders;
  std::sort(orders.begin(), orders.end());
  CHECK(orders == std::vector<std::uint64_t>{2, 4});
  CHECK(g15.phi == 8);
}

TEST_CASE("unit_group invariants across moduli") {
  for (std::uint64_t f = 1; f <= 256; ++f) {
    const UnitGroup g = unit_group(f);

    std::uint64_t order_product = 1;
    for (std::uint64_t m : g.orders) order_product *= m;
    CHECK(order_product == euler_phi(f));
    CHECK(g.phi == euler_phi(f));

    std::size_t coprime_count = 0;
    for (std::uint64_t a = 0; a < f; ++a) {
      if (std::gcd(a, f) != 1) {
        CHECK(g.coprime[a] == 0);
        continue;
      }
      ++coprime_count;
      CHECK(g.coprime[a] == 1);
      // the exponent vector reconstructs a
      std::uint64_t prod = 1 % f;
      const std::uint32_t* row = g.dlog_row(a);
      for (std::size_t i = 0; i < g.rank(); ++i)
        prod = prod * pow_mod(g.generators[i], row[i], f) % f;
      CHECK(prod == a % f);
      for (std::size_t i = 0; i < g.rank(); ++i) CHECK(row[i] < g.orders[i]);
    }
    CHECK(coprime_count == g.phi);
  }
}

TEST_CASE("all_characters counts and parity split") {
  const DirichletGroup g3(3);
  CHECK(g3.size() == 2);
  CHECK(g3.odd_count() == 1);
  CHECK_FALSE(g3.characters()[0].odd);  // trivial character is even

  const DirichletGroup g5(5);
  CHECK(g5.size() == 4);
  CHECK(g5.odd_count() == 2);
  // the two even characters: trivial and the quadratic one of order 2
  std::size_t even_order2 = 0;
  for (const Character& chi : g5.characters()) {
    if (chi.odd || chi.index == 0) continue;
    ++even_order2;
    CHECK(chi.exponents == std::vector<std::uint32_t>{2});
  }
  CHECK(even_order2 == 1);

  const DirichletGroup g8(8);
  CHECK(g8.size() == 4);
  CHECK(g8.odd_count() == 2);

  for (std::uint64_t f = 3; f <= 200; ++f) {
    const DirichletGroup g(f);
    CHECK(g.size() == euler_phi(f));
    CHECK(2 * g.odd_count() == g.phi());
    std::size_t trivial = 0;
    for (const Character& chi : g.characters())
      if (std::all_of(chi.exponents.begin(), chi.exponents.end(),
                      [](std::uint32_t e) { return e == 0; }))
        ++trivial;
    CHECK(trivial == 1);
    CHECK(g.characters()[0].index == 0);
  }
}

TEST_CASE("eval basics") {
  const DirichletGroup g4(4);
  REQUIRE(g4.size() == 2);
  const Character& chi = g4.characters()[1];  // unique nontrivial character mod 4
  CHECK(std::abs(g4.eval(chi, 3) - std::complex<double>{-1.0, 0.0}) < 1e-15);
  CHECK(g4.parity(chi) == Parity::odd);
  CHECK(g4.eval(chi, 2) == std::complex<double>{0.0, 0.0});

  const DirichletGroup g3(3);
  CHECK(std::abs(g3.eval(g3.characters()[1], 2) + 1.0) < 1e-15);
  CHECK(g3.characters()[1].odd);

  // trivial character: 1 on coprime, 0 elsewhere
  const DirichletGroup g12(12);
  for (std::uint64_t a = 0; a < 12; ++a) {
    const std::complex<double> v = g12.eval(g12.characters()[0], a);
    if (std::gcd(a, 12ull) == 1)
      CHECK(std::abs(v - 1.0) < 1e-15);
    else
      CHECK(v == std::complex<double>{0.0, 0.0});
  }
}

TEST_CASE("character values lie on the unit circle") {
  for (std::uint64_t f : {7ull, 16ull, 24ull, 45ull, 97ull}) {
    const DirichletGroup g(f);
    for (const Character& chi : g.characters())
      for (std::uint64_t a = 1; a < f; ++a) {
        if (std::gcd(a, f) != 1) continue;
        CHECK(std::abs(std::abs(g.eval(chi, a)) - 1.0) < 1e-14);
      }
  }
}

TEST_CASE("parity agrees with eval at f-1") {
  for (std::uint64_t f = 3; f <= 150; ++f) {
    const DirichletGroup g(f);
    for (const Character& chi : g.characters()) {
      const std::complex<double> at_minus_one = g.eval(chi, f - 1);
      if (chi.odd)
        CHECK(std::abs(at_minus_one + 1.0) < 1e-10);
      else
        CHECK(std::abs(at_minus_one - 1.0) < 1e-10);
    }
  }
}

TEST_CASE("orthogonality rows and columns") {
  for (std::uint64_t f = 3; f <= 200; ++f) {
    const DirichletGroup g(f);
    for (std::size_t i = 1; i < g.size(); ++i) {
      KahanComplexSum s;
      for (std::uint64_t a = 1; a <= f; ++a) s.add(g.eval(g.characters()[i], a));
      CHECK(std::abs(s.value()) < 1e-9);
    }
    for (std::uint64_t a = 2; a < f; ++a) {
      if (std::gcd(a, f) != 1) continue;
      KahanComplexSum s;
      for (const Character& chi : g.characters()) s.add(g.eval(chi, a));
      CHECK(std::abs(s.value()) < 1e-9);
    }
    KahanComplexSum at_one;
    for (const Character& chi : g.characters()) at_one.add(g.eval(chi, 1));
    CHECK(std::abs(at_one.value() - static_cast<double>(g.phi())) < 1e-9);
  }
}

TEST_CASE("multiplicativity on sampled pairs") {
  std::mt19937 rng(20240811u);
  for (std::uint64_t f : {5ull, 12ull, 36ull, 61ull, 100ull, 144ull, 199ull}) {
    const DirichletGroup g(f);
    std::uniform_int_distribution<std::uint64_t> dist(1, f - 1);
    for (int t = 0; t < 100; ++t) {
      std::uint64_t a = dist(rng), b = dist(rng);
      while (std::gcd(a, f) != 1) a = dist(rng);
      while (std::gcd(b, f) != 1) b = dist(rng);
      for (const Character& chi : g.characters())
        CHECK(std::abs(g.eval(chi, a * b) - g.eval(chi, a) * g.eval(chi, b)) < 1e-12);
    }
  }
}

TEST_CASE("conjugate_index pairs characters with their conjugates") {
  for (std::uint64_t f : {5ull, 8ull, 21ull, 40ull}) {
    const DirichletGroup g(f);
    for (const Character& chi : g.characters()) {
      const std::size_t j = g.conjugate_index(chi);
      const Character& bar = g.characters()[j];
      for (std::uint64_t a = 1; a < f; ++a)
        CHECK(std::abs(g.eval(bar, a) - std::conj(g.eval(chi, a))) < 1e-14);
      CHECK(g.conjugate_index(bar) == chi.index);
    }
  }
}

TEST_SUITE_END();
