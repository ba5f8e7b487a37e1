// Test-only reference computations. Each one reaches its answer by a route
// that shares no code with the library path it is used to check.
#pragma once

#include "circlight/circlight.hpp"

#include <random>
#include <vector>

namespace circlight::oracle {

/// g̃(k) with every Poisson term formed independently in log space.
std::vector<double> poisson_residues_direct(double mu, int n);

/// Real roots of det(M − xI) for Hermitian M, located by a dense sign-change
/// scan of the LU determinant and refined by bisection. Ascending order.
/// Assumes simple eigenvalues.
std::vector<double> characteristic_roots(const HermitianMatrix& m, int scan_points = 40000);

/// Σ_m c_m |α_m⟩ in the Fock basis by explicit summation of N coherent-state
/// expansions, normalized numerically. No Gram matrix or g̃ involved.
FockVector coherent_superposition(Complex alpha0, const std::vector<Complex>& coeffs, int cutoff);

/// Entropy (bits) of Binomial(q, 1/2) with weights from lgamma.
double binomial_entropy_direct(int q);


HermitianMatrix random_hermitian(int dim, std::mt19937_64& rng);
std::vector<Complex> random_complex(int n, std::mt19937_64& rng);

}  // namespace circlight::oracle
