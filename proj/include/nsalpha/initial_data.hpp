#pragma once

#include "nsalpha/field.hpp"

#include <functional>

namespace nsalpha {

/// A grid field together with its exact evaluator when the family is
/// analytic. Monte Carlo estimators prefer the closure for terminal values;
/// everything deterministic works on the grid field.
struct InitialData {
  SpectralField field;
  std::function<Real(const Vec3&, int component)> analytic;
};

/// A cos(2 pi <k,x>/L), mean-zero scalar on the 2-d torus.
InitialData single_mode_2d(const std::array<int, 3>& shape, Real box_length,
                           int k0, int k1, Real amplitude = 1.0);

/// a1 cos(2 pi <k1,x>/L) + a2 cos(2 pi <k2,x>/L).
InitialData two_mode_2d(const std::array<int, 3>& shape, Real box_length,
                        int k10, int k11, Real a1, int k20, int k21, Real a2);

/// Mean-zero real scalar with independent random coefficients on the band
/// kmin <= |k| <= kmax (Hermitian symmetry enforced); deterministic in seed.
SpectralField random_band_scalar(int dim, const std::array<int, 3>& shape, Real box_length,
                                 std::uint64_t seed, int kmin, int kmax, Real amplitude = 1.0);

/// Random band-limited vector field; solenoidal projects each mode onto the
/// plane orthogonal to k.
SpectralField random_band_vector(int dim, const std::array<int, 3>& shape, Real box_length,
                                 std::uint64_t seed, int kmin, int kmax, Real amplitude = 1.0,
                                 bool solenoidal = false);

/// Single-mode divergence-free vector field A cos(2 pi <k,x>/L) e with
/// e picked orthogonal to k.
InitialData single_mode_vector(int dim, const std::array<int, 3>& shape, Real box_length,
                               int k0, int k1, int k2, Real amplitude = 1.0);

/// Divergence-free bump supported in the middle of the box: the curl of a
/// Gaussian vector potential, normalized so sobolev_norm(.,k,p) equals
/// `target_norm`. The analytic closure matches the normalized grid field.
InitialData centered_bump_3d(const std::array<int, 3>& shape, Real box_length, Real sigma,
                             int norm_k, Real norm_p, Real target_norm);

/// Fraction of squared L^2 mass in the shell within L/8 of the box boundary.
Real boundary_shell_energy_fraction(const SpectralField& f);

}  // namespace nsalpha
