#include <doctest.h>

#include "circlight/circular.hpp"
#include "oracles.hpp"

#include <cmath>
#include <numbers>
#include <random>

using namespace circlight;

namespace {

std::vector<Complex> rics_c(int n, int q) {
  std::vector<Complex> c(static_cast<std::size_t>(n));
  for (int m = 0; m < n; ++m) c[static_cast<std::size_t>(m)] = std::polar(1.0, 2.0 * std::numbers::pi * m * q / n);
  return c;
}

}  // namespace

TEST_CASE("RICS labels are validated") {
  CHECK_THROWS_AS(rics_coefficients({3, 3, 1.0}), DomainError);
  CHECK_THROWS_AS(rics_coefficients({3, -1, 1.0}), DomainError);
  CHECK_THROWS_AS(rics_coefficients({0, 0, 1.0}), DomainError);
  CHECK_THROWS_AS(rics_coefficients({3, 1, 0.0}), DomainError);
}

TEST_CASE("RICS coefficients carry one Fourier mode") {
  const auto s = rics_coefficients({5, 2, 1.3});
  CHECK(s.norm() == doctest::Approx(1.0).epsilon(1e-12));
  const auto c = s.coefficients();
  const double expected = 1.0 / (5.0 * std::sqrt(g_tilde(1.69, 5)[2]));
  for (int m = 0; m < 5; ++m) {
    CHECK(std::abs(c[static_cast<std::size_t>(m)] - expected * std::polar(1.0, 2.0 * std::numbers::pi * 2 * m / 5)) < 1e-12);
  }
}

TEST_CASE("spectral norm matches the Gram quadratic form") {
  std::mt19937_64 rng(3);
  for (int n : {1, 2, 5, 9}) {
    for (double alpha : {0.7, 1.5, 3.0}) {
      const auto s = CircularState::from_coefficients(alpha, CVector(oracle::random_complex(n, rng)));
      CHECK(s.norm() == doctest::Approx(1.0).epsilon(1e-12));
      CHECK(s.gram_norm() == doctest::Approx(1.0).epsilon(1e-9));
    }
  }
}

TEST_CASE("null states are rejected") {
  CHECK_THROWS_AS(CircularState::from_coefficients(1.0, CVector{}), DomainError);
  CHECK_THROWS_AS(CircularState::from_coefficients(1.0, CVector(3)), DomainError);
}

TEST_CASE("Fock expansion of a RICS lives on one residue class") {
  const RicsLabel label{4, 3, 1.8};
  const int cutoff = default_fock_cutoff(label.alpha0, label.n);
  const auto f = fock_expansion(label, cutoff);
  CHECK(f.norm_squared() == doctest::Approx(1.0).epsilon(1e-10));
  for (int n = 0; n < cutoff; ++n) {
    if (n % 4 != 3) CHECK(f[n] == Complex{});
  }
}

TEST_CASE("small amplitude RICS tends to the Fock state |q>") {
  const auto f = fock_expansion({6, 2, 0.01}, min_fock_cutoff(0.01, 6));
  CHECK(std::abs(f[2]) == doctest::Approx(1.0).epsilon(1e-8));
}

TEST_CASE("Fock cutoff below the mass rule is rejected") {
  CHECK_THROWS_AS(fock_expansion({3, 0, 2.0}, min_fock_cutoff(2.0, 3) - 1), DomainError);
  CHECK_NOTHROW(fock_expansion({3, 0, 2.0}, min_fock_cutoff(2.0, 3)));
}

TEST_CASE("RICS Fock expansions are pairwise orthonormal") {
  for (double alpha : {0.5, 1.5, 3.0}) {
    for (int n : {1, 3, 6}) {
      const int cutoff = default_fock_cutoff(alpha, n);
      for (int p = 0; p < n; ++p) {
        const auto fp = fock_expansion({n, p, alpha}, cutoff);
        for (int q = 0; q < n; ++q) {
          const auto fq = fock_expansion({n, q, alpha}, cutoff);
          CHECK(std::abs(fp.overlap(fq) - (p == q ? 1.0 : 0.0)) < 1e-8);
        }
      }
    }
  }
}

TEST_CASE("analytic Fock expansion matches a direct coherent superposition") {
  const double alpha = 1.7;
  for (int n : {2, 5}) {
    const int cutoff = default_fock_cutoff(alpha, n);
    for (int q = 0; q < n; ++q) {
      const auto analytic = fock_expansion({n, q, alpha}, cutoff);
      const auto direct = oracle::coherent_superposition(alpha, rics_c(n, q), cutoff);
      CHECK(analytic.overlap(direct) == doctest::Approx(1.0).epsilon(1e-10));
      const auto general = circular_fock_expansion(rics_coefficients({n, q, alpha}), cutoff);
      for (int k = 0; k < cutoff; ++k) CHECK(std::abs(general[k] - analytic[k]) < 1e-12);
    }
  }
}

TEST_CASE("rotating a RICS multiplies it by a phase") {
  // Σ c_m |α_{m+1}⟩ = Σ c_{m-1} |α_m⟩ and c_{m-1} = e^{-i2πq/N} c_m.
  const int n = 5, q = 2;
  const double alpha = 1.2;
  const auto base = rics_coefficients({n, q, alpha}).coefficients();
  CVector shifted(static_cast<std::size_t>(n));
  for (int m = 0; m < n; ++m) shifted[static_cast<std::size_t>(m)] = base.cyclic(m - 1);
  const auto s = CircularState::from_coefficients(alpha, shifted);
  const auto t = to_rics_basis(s);
  for (int k = 0; k < n; ++k) {
    CHECK(std::abs(std::abs(t[static_cast<std::size_t>(k)]) - (k == q ? 1.0 : 0.0)) < 1e-12);
  }
  CHECK(std::abs(std::arg(t[static_cast<std::size_t>(q)]) + 2.0 * std::numbers::pi * q / n) < 1e-12);
}

TEST_CASE("a^N acts as alpha0^N on a RICS") {
  for (int n : {1, 2, 4}) {
    const double alpha = 1.4;
    const int cutoff = default_fock_cutoff(alpha, n) + n + 20;
    const int q = n - 1;
    const auto f = fock_expansion({n, q, alpha}, cutoff);
    auto g = f;
    for (int i = 0; i < n; ++i) g = g.annihilate();
    const double scale = std::pow(alpha, n);
    double err = 0.0;
    for (int k = 0; k + n < cutoff; ++k) err = std::max(err, std::abs(g[k] - scale * f[k]));
    CHECK(err < 1e-8);
  }
}

TEST_CASE("RICS basis round trip and norm identity") {
  std::mt19937_64 rng(5);
  for (int n : {1, 3, 8, 16}) {
    for (double alpha : {0.4, 2.0}) {
      const auto s = CircularState::from_coefficients(alpha, CVector(oracle::random_complex(n, rng)));
      const auto b = to_rics_basis(s);
      CHECK(b.norm_squared() == doctest::Approx(s.norm()).epsilon(1e-10));
      const auto back = from_rics_basis(alpha, b);
      for (int k = 0; k < n; ++k) {
        CHECK(std::abs(back.spectral()[static_cast<std::size_t>(k)] - s.spectral()[static_cast<std::size_t>(k)]) < 1e-12);
      }
    }
  }
}

TEST_CASE("mean photon number") {
  CHECK(mean_photon_number({1, 0, 2.0}) == doctest::Approx(4.0));
  for (int q = 0; q < 6; ++q) CHECK(mean_photon_number({200, q, 1.0}) == doctest::Approx(q).epsilon(1e-10));
  for (int n : {1, 3, 8, 32}) {
    for (double alpha : {0.5, 2.0, 4.0}) {
      double s = 0.0;
      for (int q = 0; q < n; ++q) s += projection_probability({n, q, alpha}) * mean_photon_number({n, q, alpha});
      CHECK(std::abs(s - alpha * alpha) < 1e-10);
    }
  }
  CHECK_THROWS_AS(mean_photon_number({3, 1, 0.0}), DomainError);
}

TEST_CASE("Kerr state is normalized and has flat Fourier weights") {
  const auto s = kerr_state(7, 2.0);
  CHECK(s.norm() == doctest::Approx(1.0).epsilon(1e-12));
  const double mag = std::abs(s.spectral()[0]);
  for (const auto& z : s.spectral()) CHECK(std::abs(z) == doctest::Approx(mag));
  CHECK_THROWS_AS(kerr_state(0, 1.0), DomainError);
}

TEST_CASE("in-state has the doubled mean photon number") {
  const auto s = kerr_state(4, 1.5);
  const auto in = in_state(s);
  CHECK(std::norm(in.alpha0()) == doctest::Approx(2.0 * 2.25));
  CHECK(in.norm() == doctest::Approx(1.0).epsilon(1e-12));
}
