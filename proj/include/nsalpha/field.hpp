#pragma once

#include "nsalpha/fft.hpp"
#include "nsalpha/types.hpp"

#include <array>
#include <cassert>

namespace nsalpha {

/// Scalar or vector field sampled on a uniform periodic grid, with lazily
/// synchronized Fourier coefficients. Values are row-major over
/// (x0, x1, x2); component c lives in column c of the storage.
///
/// Both representations describe the same field; whichever was written last
/// is authoritative and the other is rebuilt on demand. Lazy synchronization
/// is not thread-safe: call values() or coeffs() once before handing a field
/// to concurrent readers.
class SpectralField {
 public:
  SpectralField() = default;
  SpectralField(int dim, int n_components, const std::array<int, 3>& shape, Real box_length);

  static SpectralField zeros(int dim, int n_components, const std::array<int, 3>& shape,
                             Real box_length) {
    return SpectralField(dim, n_components, shape, box_length);
  }

  /// Samples fn(point, component) on the grid.
  template <class Fn>
  static SpectralField from_function(int dim, int n_components, const std::array<int, 3>& shape,
                                     Real box_length, Fn&& fn) {
    SpectralField f(dim, n_components, shape, box_length);
    ArrayXXr& v = f.values_mut();
    for (Index p = 0; p < f.n_points(); ++p) {
      const Vec3 x = f.point(p);
      for (int c = 0; c < n_components; ++c) v(p, c) = fn(x, c);
    }
    return f;
  }

  int dim() const { return dim_; }
  int n_components() const { return n_components_; }
  const std::array<int, 3>& shape() const { return shape_; }
  Real box_length() const { return box_length_; }
  Index n_points() const { return n_points_; }
  bool is_scalar() const { return n_components_ == 1; }
  Real spacing(int axis) const { return box_length_ / shape_[axis]; }
  bool empty() const { return n_points_ == 0; }

  /// Coordinates of the grid point with flattened row-major index p.
  Vec3 point(Index p) const {
    const auto [i0, i1, i2] = unflatten(p);
    return Vec3(i0 * spacing(0), i1 * spacing(1), dim_ > 2 ? i2 * spacing(2) : 0.0);
  }

  std::array<int, 3> unflatten(Index p) const {
    const int i2 = static_cast<int>(p % shape_[2]);
    const Index q = p / shape_[2];
    const int i1 = static_cast<int>(q % shape_[1]);
    const int i0 = static_cast<int>(q / shape_[1]);
    return {i0, i1, i2};
  }

  Index flatten(int i0, int i1, int i2) const {
    return (static_cast<Index>(i0) * shape_[1] + i1) * shape_[2] + i2;
  }

  const ArrayXXr& values() const;
  const ArrayXXc& coeffs() const;
  ArrayXXr& values_mut();
  ArrayXXc& coeffs_mut();

  bool mean_zero() const { return mean_zero_; }
  bool divergence_free() const { return divergence_free_; }
  SpectralField& set_mean_zero(bool flag) {
    mean_zero_ = flag;
    return *this;
  }
  SpectralField& set_divergence_free(bool flag) {
    divergence_free_ = flag;
    return *this;
  }

  /// Grid average of one component (the mode-0 Fourier coefficient).
  Real mean(int component = 0) const { return coeffs()(0, component).real(); }

  /// Subtracts the mean from every component and sets the flag.
  SpectralField& project_mean_zero();

  bool same_layout(const SpectralField& other) const {
    return dim_ == other.dim_ && n_components_ == other.n_components_ &&
           shape_ == other.shape_ && box_length_ == other.box_length_;
  }

 private:
  void ensure_values() const;
  void ensure_coeffs() const;

  int dim_ = 0;
  int n_components_ = 0;
  std::array<int, 3> shape_ = {1, 1, 1};
  Real box_length_ = 1.0;
  Index n_points_ = 0;
  bool mean_zero_ = false;
  bool divergence_free_ = false;

  mutable ArrayXXr values_;
  mutable ArrayXXc coeffs_;
  mutable bool values_valid_ = false;
  mutable bool coeffs_valid_ = false;
};

/// Calls fn(flat_index, k0, k1, k2) with signed modes for every grid index.
template <class Fn>
void for_each_mode(const std::array<int, 3>& shape, Fn&& fn) {
  Index p = 0;
  for (int i0 = 0; i0 < shape[0]; ++i0) {
    const int k0 = signed_mode(i0, shape[0]);
    for (int i1 = 0; i1 < shape[1]; ++i1) {
      const int k1 = signed_mode(i1, shape[1]);
      for (int i2 = 0; i2 < shape[2]; ++i2, ++p) {
        fn(p, k0, k1, signed_mode(i2, shape[2]));
      }
    }
  }
}

/// New field with coefficients symbol(k) * fhat(k), same symbol for every
/// component. The symbol may return Real or Complex.
template <class Fn>
SpectralField apply_symbol(const SpectralField& f, Fn&& symbol) {
  SpectralField out(f.dim(), f.n_components(), f.shape(), f.box_length());
  const ArrayXXc& in = f.coeffs();
  ArrayXXc& oc = out.coeffs_mut();
  for_each_mode(f.shape(), [&](Index p, int k0, int k1, int k2) {
    const Complex s = symbol(k0, k1, k2);
    for (int c = 0; c < f.n_components(); ++c) oc(p, c) = s * in(p, c);
  });
  out.set_mean_zero(f.mean_zero());
  out.set_divergence_free(f.divergence_free());
  return out;
}

}  // namespace nsalpha
