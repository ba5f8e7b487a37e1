#include <doctest.h>

#include "circlight/spectral.hpp"
#include "oracles.hpp"

#include <cmath>
#include <numbers>
#include <random>

using namespace circlight;

TEST_CASE("dft of a delta is flat and idft inverts it") {
  const CVector v{1.0, 0.0, 0.0, 0.0};
  const auto t = dft(v);
  for (const auto& z : t) CHECK(std::abs(z - Complex{0.25, 0.0}) < 1e-15);
  const auto back = idft(t);
  for (int i = 0; i < 4; ++i) CHECK(std::abs(back[static_cast<std::size_t>(i)] - v[static_cast<std::size_t>(i)]) < 1e-15);
}

TEST_CASE("dft of a pure tone picks one bin") {
  const int n = 6;
  CVector v(static_cast<std::size_t>(n));
  for (int m = 0; m < n; ++m) v[static_cast<std::size_t>(m)] = std::polar(1.0, 2.0 * std::numbers::pi * 2 * m / n);
  const auto t = dft(v);
  for (int k = 0; k < n; ++k) CHECK(std::abs(t[static_cast<std::size_t>(k)] - (k == 2 ? 1.0 : 0.0)) < 1e-14);
}

TEST_CASE("dft round trip for N up to 64") {
  std::mt19937_64 rng(11);
  for (int n = 1; n <= 64; ++n) {
    const CVector v(oracle::random_complex(n, rng));
    const auto back = idft(dft(v));
    double err = 0.0;
    for (int i = 0; i < n; ++i) err = std::max(err, std::abs(back[static_cast<std::size_t>(i)] - v[static_cast<std::size_t>(i)]));
    CHECK(err < 1e-12);
  }
}

TEST_CASE("dft rejects an empty vector") { CHECK_THROWS_AS(dft(CVector{}), std::invalid_argument); }

TEST_CASE("gram vector examples") {
  const auto g2 = gram_vector(1.0, 2);
  CHECK(std::abs(g2[0] - 1.0) < 1e-15);
  CHECK(std::abs(g2[1] - 0.1353352832366127) < 1e-15);

  const auto g4 = gram_vector(Complex{0.0, 1.5}, 4);
  for (int m = 1; m < 4; ++m) {
    CHECK(std::abs(g4[static_cast<std::size_t>(m)] - std::conj(g4[static_cast<std::size_t>(4 - m)])) < 1e-15);
  }
  CHECK(std::abs(g4[0] - 1.0) < 1e-15);
}

TEST_CASE("g_tilde examples") {
  const auto a = g_tilde(1.0, 2);
  CHECK(a[0] == doctest::Approx(0.5676676416183064).epsilon(1e-14));
  CHECK(a[1] == doctest::Approx(0.4323323583816936).epsilon(1e-14));

  const auto one = g_tilde(5.0, 1);
  CHECK(one.size() == 1);
  CHECK(one[0] == doctest::Approx(1.0));

  const auto vac = g_tilde(0.0, 5);
  CHECK(vac[0] == 1.0);
  for (int k = 1; k < 5; ++k) CHECK(vac[static_cast<std::size_t>(k)] == 0.0);
}

TEST_CASE("g_tilde matches a direct Poisson sum and the transformed Gram vector") {
  for (double alpha : {0.2, 1.0, 2.5, 4.0}) {
    for (int n : {1, 2, 3, 7, 16, 32}) {
      const double mu = alpha * alpha;
      const auto gt = g_tilde(mu, n);
      const auto direct = oracle::poisson_residues_direct(mu, n);
      const auto via_dft = dft(gram_vector(alpha, n));
      for (int k = 0; k < n; ++k) {
        const auto i = static_cast<std::size_t>(k);
        CHECK(std::abs(gt[i] - direct[i]) < 1e-13);
        CHECK(std::abs(gt[i] - via_dft[i].real()) < 1e-12);
        CHECK(std::abs(via_dft[i].imag()) < 1e-12);
      }
    }
  }
}

TEST_CASE("g_tilde depends only on the radius") {
  const auto a = dft(gram_vector(2.0, 9));
  const auto b = dft(gram_vector(std::polar(2.0, 0.7), 9));
  for (int k = 0; k < 9; ++k) CHECK(std::abs(a[static_cast<std::size_t>(k)] - b[static_cast<std::size_t>(k)]) < 1e-13);
}

TEST_CASE("g_tilde stays normalized for large mean") {
  const auto gt = g_tilde(900.0, 7);
  double s = 0.0;
  for (double w : gt) s += w;
  CHECK(std::abs(s - 1.0) < 1e-10);
  for (double w : gt) CHECK(w == doctest::Approx(1.0 / 7).epsilon(1e-6));
}

TEST_CASE("residue convolution identity") {
  for (int n : {1, 2, 5, 13, 64}) {
    for (double mu : {0.09, 1.0, 6.25, 16.0, 32.0}) {
      const auto gt = g_tilde(mu, n);
      const auto doubled = oracle::poisson_residues_direct(2.0 * mu, n);
      for (int q = 0; q < n; ++q) {
        double conv = 0.0;
        for (int k = 0; k < n; ++k) conv += gt[static_cast<std::size_t>(k)] * gt.cyclic(q - k);
        CHECK(std::abs(conv - doubled[static_cast<std::size_t>(q)]) < 1e-10);
      }
    }
  }
}

TEST_CASE("g_tilde rejects bad arguments") {
  CHECK_THROWS_AS(g_tilde(-1.0, 3), DomainError);
  CHECK_THROWS_AS(g_tilde(1.0, 0), DomainError);
}

TEST_CASE("shannon entropy examples") {
  CHECK(shannon_entropy(ProbDist({0.5, 0.5})) == doctest::Approx(1.0));
  CHECK(shannon_entropy(ProbDist({1.0, 0.0, 0.0})) == 0.0);
  CHECK(shannon_entropy(ProbDist({0.25, 0.25, 0.25, 0.25})) == doctest::Approx(2.0));
  CHECK(shannon_entropy(binomial_dist(4)) == doctest::Approx(2.0306390622295662).epsilon(1e-14));
}

TEST_CASE("ProbDist validates its weights") {
  CHECK_THROWS_AS(ProbDist({0.5, 0.6}), DomainError);
  CHECK_THROWS_AS(ProbDist({1.2, -0.2}), DomainError);
  CHECK_NOTHROW(ProbDist({0.5, 0.5 + 1e-12}));
}

TEST_CASE("binomial distribution") {
  const auto b = binomial_dist(4);
  const double expected[] = {1.0 / 16, 4.0 / 16, 6.0 / 16, 4.0 / 16, 1.0 / 16};
  for (int k = 0; k <= 4; ++k) CHECK(b[static_cast<std::size_t>(k)] == doctest::Approx(expected[k]));
  for (int q : {0, 1, 7, 30, 200}) {
    CHECK(shannon_entropy(binomial_dist(q)) == doctest::Approx(oracle::binomial_entropy_direct(q)).epsilon(1e-12));
  }
}
