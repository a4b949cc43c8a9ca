#pragma once

#include "nsalpha/errors.hpp"
#include "nsalpha/field.hpp"

namespace nsalpha {

/// Default relative tolerance for the mean-zero preconditions.
inline constexpr Real kMeanZeroTol = 1e-10;

/// Throws NonZeroMeanError unless |mean coefficient| <= tol * max|coeff|
/// for every component.
void require_mean_zero(const SpectralField& f, Real tol = kMeanZeroTol,
                       const char* what = "field");

/// Relative spectral divergence defect: max_k |sum_a ik_a vhat^a| over the
/// max term magnitude. ~1 for generic fields, roundoff for solenoidal ones.
Real divergence_defect_rel(const SpectralField& v);

/// Throws NotDivergenceFreeError if divergence_defect_rel exceeds tol.
void require_divergence_free(const SpectralField& v, Real tol = 1e-8,
                             const char* what = "field");

/// Spectral partial derivative of the given order along one axis:
/// multiplier (2 pi i k_axis / L)^order. Odd orders zero the Nyquist mode so
/// real fields stay real.
SpectralField derivative(const SpectralField& f, int axis, int order = 1);

SpectralField laplacian(const SpectralField& f);

/// Gradient of a scalar field as a dim-component vector field.
SpectralField gradient(const SpectralField& f);

SpectralField divergence(const SpectralField& v);

/// Extracts one component as a scalar field.
SpectralField component(const SpectralField& v, int c);

/// (I - alpha^2 Laplacian)^{-1}, applied per component. The forward operator
/// recovers the input to roundoff; alpha = 0 is the identity.
SpectralField helmholtz_inverse(const SpectralField& f, Real alpha);

/// Divergence-free velocity from a mean-zero 2-d vorticity: the solution of
/// Lap u1 = -d2 w, Lap u2 = d1 w with zero mean.
SpectralField biot_savart(const SpectralField& omega);

/// biot_savart composed with helmholtz_inverse.
SpectralField k_tilde_alpha(const SpectralField& q, Real alpha);

/// Mean-free inverse Laplacian on the periodic box: Lap(N f) = f for
/// mean-zero f; the zero mode of the output is fixed to zero.
SpectralField newtonian_potential(const SpectralField& f, Real mean_tol = kMeanZeroTol);

/// Orthogonal projection onto divergence-free fields: m - grad N(div m).
SpectralField leray_project(const SpectralField& m);

/// Zeroes modes with |k_a| > n_a/3 on any axis (2/3 rule); applied after
/// every product of fields.
SpectralField dealias(const SpectralField& f);
void dealias_inplace(SpectralField& f);

/// Heat semigroup exp(t nu Lap).
SpectralField heat_flow(const SpectralField& f, Real nu, Real t);

/// Advection u . grad f, computed pointwise from dealiased inputs and
/// dealiased again; u must be divergence-free so the result is mean-free
/// (the zero mode is projected out exactly).
SpectralField advect(const SpectralField& u, const SpectralField& f);

/// The quadratic pressure source. For the full model
///   G = sum_ij d_i v^j d_j m^i - alpha^2 div w,   w_i = sum_j d_i v^j Lap v^j;
/// the variant without the alpha^2 transport term uses G = sum_ij d_i v^j d_j m^i.
SpectralField assemble_g(const SpectralField& m, const SpectralField& v, Real alpha,
                         bool leray_alpha);

struct JAssembly {
  SpectralField j;  // grad N(G) (+ alpha^2 w for the full model)
  SpectralField g;  // the source fed to the potential
};

/// The momentum forcing J of a divergence-free m. Satisfies
/// div J = sum_ij d_i v^j d_j m^i up to roundoff in both variants.
JAssembly assemble_j_parts(const SpectralField& m, Real alpha, bool leray_alpha = false);
SpectralField assemble_j(const SpectralField& m, Real alpha, bool leray_alpha = false);

/// Pressure from a divergence-free momentum field: p = -N(G_u) with
/// u = helmholtz_inverse(m, alpha), mean-zero.
SpectralField recover_pressure(const SpectralField& m, Real alpha);

/// Smallest nonzero eigenvalue of -Laplacian on the grid's mode lattice.
Real spectral_gap(const std::array<int, 3>& shape, int dim, Real box_length);

/// max_k |fhat(k)| over modes and components.
Real max_coeff_magnitude(const SpectralField& f);

}  // namespace nsalpha
