#pragma once

#include <Eigen/Dense>

#include <array>
#include <complex>
#include <cstdint>
#include <stdexcept>

namespace nsalpha {

using Real = double;
using Complex = std::complex<Real>;

// Fields are stored flattened: one column per component, one row per grid point.
using ArrayXr = Eigen::ArrayXd;
using ArrayXc = Eigen::ArrayXcd;
using ArrayXXr = Eigen::ArrayXXd;
using ArrayXXc = Eigen::ArrayXXcd;
using Index = Eigen::Index;

// Spatial point; for dim=2 the third entry is zero and ignored.
using Vec3 = Eigen::Vector3d;

inline constexpr Real kPi = 3.14159265358979323846264338327950288;
inline constexpr Real kTwoPi = 2.0 * kPi;

/// Physical parameters of the alpha model: viscosity, filter length,
/// horizon, dimension and box side.
struct AlphaModelParams {
  Real nu = 0.1;
  Real alpha = 0.0;
  Real T = 1.0;
  int d = 2;
  Real L = 1.0;

  void validate() const {
    if (!(nu > 0)) throw std::invalid_argument("AlphaModelParams: nu must be > 0");
    if (!(T > 0)) throw std::invalid_argument("AlphaModelParams: T must be > 0");
    if (!(alpha >= 0)) throw std::invalid_argument("AlphaModelParams: alpha must be >= 0");
    if (d != 2 && d != 3) throw std::invalid_argument("AlphaModelParams: d must be 2 or 3");
    if (!(L > 0)) throw std::invalid_argument("AlphaModelParams: L must be > 0");
  }
};

/// Signed Fourier mode for grid index i on an axis with n points.
/// Standard ordering: 0..n/2-1, then -n/2..-1 (Nyquist stored as -n/2).
inline int signed_mode(int i, int n) { return (2 * i < n) ? i : i - n; }

}  // namespace nsalpha
