// Single-mode circular states: superpositions Σ_m c_m |α_m⟩ of N coherent
// states with α_m = α₀ e^{-i2πm/N}, the rotationally-invariant family (RICS)
// that forms an orthonormal basis of their span, and Kerr states.
//
// Throughout, `alpha0` is the circle radius of the state it belongs to. A
// two-mode state Σ_m c_m |α_m⟩_A |α_m⟩_B is described by the CircularState
// holding its per-mode radius; the corresponding single-mode in-state, which
// produces it on a 50:50 beam splitter, has radius √2·α₀ (see in_state()).
#pragma once

#include "circlight/spectral.hpp"

#include <vector>

namespace circlight {

/// Index q of the RICS |c_q⟩ for N components of radius alpha0.
struct RicsLabel {
  int n = 1;
  int q = 0;
  Complex alpha0{1.0, 0.0};

  /// Throws DomainError unless n ≥ 1 and 0 ≤ q < n.
  void validate() const;
};

/// Normalized superposition of N coherent states on a circle.
///
/// Stored in the Fourier domain (c̃ = dft(c)): the RICS are exactly the
/// Fourier modes, and the norm N² Σ_k g̃(k)|c̃_k|² is a sum of positive terms,
/// whereas c†Gc cancels catastrophically when the Gram matrix is nearly
/// singular (small |α₀| or large N).
class CircularState {
 public:
  /// Rescales `coeffs` so that ⟨ψ|ψ⟩ = 1. Throws DomainError for an empty or
  /// null state.
  static CircularState from_coefficients(Complex alpha0, const CVector& coeffs);
  /// Same, from the Fourier-domain coefficients c̃.
  static CircularState from_spectral(Complex alpha0, CVector spectral);

  int size() const noexcept { return spectral_.length(); }
  Complex alpha0() const noexcept { return alpha0_; }

  /// c̃_k, k = 0..N-1.
  const CVector& spectral() const noexcept { return spectral_; }
  /// c_m, m = 0..N-1.
  CVector coefficients() const { return idft(spectral_); }

  /// N² Σ_k g̃(k)|c̃_k|².
  double norm() const;
  /// c†Gc evaluated directly with the Gram matrix; for cross-checks only.
  double gram_norm() const;

 private:
  CircularState(Complex alpha0, CVector spectral) : alpha0_(alpha0), spectral_(std::move(spectral)) {}

  Complex alpha0_;
  CVector spectral_;
};

/// Amplitudes ⟨n|ψ⟩ for n = 0..cutoff-1.
class FockVector {
 public:
  explicit FockVector(std::vector<Complex> amps) : amps_(std::move(amps)) {}

  int cutoff() const noexcept { return static_cast<int>(amps_.size()); }
  Complex operator[](int n) const { return amps_[static_cast<std::size_t>(n)]; }
  const std::vector<Complex>& amplitudes() const noexcept { return amps_; }

  double norm_squared() const noexcept;
  /// a|ψ⟩, i.e. amps'(n) = √(n+1) amps(n+1), truncated to the same cutoff.
  FockVector annihilate() const;
  /// |⟨this|other⟩|, the overlap modulo global phase.
  double overlap(const FockVector& other) const;

 private:
  std::vector<Complex> amps_;
};

inline constexpr double kFockNormTolerance = 1e-8;

/// Smallest admissible Fock cutoff for N components of radius `alpha0`:
/// the first integer above 2|α₀|² + 10√(|α₀|²+1) + N.
int min_fock_cutoff(Complex alpha0, int n);
/// Default cutoff, ten levels above min_fock_cutoff().
int default_fock_cutoff(Complex alpha0, int n);

/// The RICS |c_q⟩: c_m = e^{i2πmq/N}/(N√g̃(q)). Throws DomainError for α₀ = 0.
CircularState rics_coefficients(const RicsLabel& label);

/// Kerr state with c̃_k ∝ e^{-iπk(k−p)/N}, p = N mod 2, normalized.
CircularState kerr_state(int n, Complex alpha0);

/// The single-mode state whose 50:50 beam splitting yields the two-mode state
/// Σ c_m |α_m⟩|α_m⟩ described by `two_mode`: same coefficients, radius √2·α₀.
CircularState in_state(const CircularState& two_mode);

/// Fock amplitudes of |c_q⟩: nonzero only for n ≡ q (mod N),
/// ⟨n|c_q⟩ = e^{-|α₀|²/2} α₀ⁿ / (√g̃(q) √n!).
/// Throws DomainError when cutoff < min_fock_cutoff().
FockVector fock_expansion(const RicsLabel& label, int cutoff);

/// Fock amplitudes Σ_m c_m e^{-|α₀|²/2} α_mⁿ/√n! of an arbitrary circular
/// state, evaluated through the identity Σ_m c_m α_mⁿ = N α₀ⁿ c̃(n mod N).
FockVector circular_fock_expansion(const CircularState& s, int cutoff);

/// Coordinates in the RICS basis, b_q = N √g̃(q) c̃_q (Σ|b_q|² = 1).
CVector to_rics_basis(const CircularState& s);
/// Inverse of to_rics_basis().
CircularState from_rics_basis(Complex alpha0, const CVector& b);

/// ⟨c_q|a†a|c_q⟩ = |α₀|² g̃(q−1)/g̃(q).
double mean_photon_number(const RicsLabel& label);

/// Probability |⟨α_m|c_q⟩|² = g̃(q) of projecting a coherent state on |c_q⟩.
double projection_probability(const RicsLabel& label);

}  // namespace circlight
