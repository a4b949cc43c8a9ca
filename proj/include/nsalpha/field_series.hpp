#pragma once

#include "nsalpha/errors.hpp"
#include "nsalpha/field.hpp"

#include <cmath>
#include <utility>
#include <vector>

namespace nsalpha {

/// Uniform time grid t0, t0+dt, ..., t0+n_steps*dt.
struct TimeGrid {
  Real t0 = 0;
  Real dt = 0;
  int n_steps = 0;

  Real t(int i) const { return t0 + i * dt; }
  Real t_end() const { return t0 + n_steps * dt; }
  int n_slices() const { return n_steps + 1; }

  bool contains(Real a, Real b, Real tol = 1e-9) const {
    return a >= t0 - tol && b <= t_end() + tol;
  }

  /// Index of the slice at time t; throws if t is not a grid node.
  int index_at(Real t, const char* what = "time") const {
    const Real x = (t - t0) / dt;
    const int i = static_cast<int>(std::lround(x));
    if (i < 0 || i > n_steps || std::abs(x - i) > 1e-6)
      throw TimeGridMismatchError(std::string(what) + " is not on the field time grid");
    return i;
  }

  /// Left-slice index for piecewise-constant-in-time lookup.
  int floor_index(Real t) const {
    const int i = static_cast<int>(std::floor((t - t0) / dt + 1e-9));
    return std::min(std::max(i, 0), n_steps);
  }
};

/// Time-indexed sequence of fields on a shared grid.
class FieldSeries {
 public:
  FieldSeries() = default;
  explicit FieldSeries(const TimeGrid& grid) : grid_(grid), slices_(grid.n_slices()) {}

  const TimeGrid& grid() const { return grid_; }
  int n_slices() const { return static_cast<int>(slices_.size()); }
  bool empty() const { return slices_.empty(); }

  SpectralField& slice(int i) { return slices_.at(i); }
  const SpectralField& slice(int i) const { return slices_.at(i); }

  const SpectralField& at_left(Real t) const { return slices_.at(grid_.floor_index(t)); }

  /// Truncation to [t0, t0 + n_steps*dt] sharing the slice prefix.
  FieldSeries head(int n_steps) const {
    FieldSeries out(TimeGrid{grid_.t0, grid_.dt, n_steps});
    for (int i = 0; i <= n_steps; ++i) out.slice(i) = slices_.at(i);
    return out;
  }

  /// Time reversal: slice(i) of the result is slice(n-i) of the input, so
  /// value at time s equals the input's value at t_end - s.
  FieldSeries reversed() const {
    FieldSeries out(grid_);
    const int n = grid_.n_steps;
    for (int i = 0; i <= n; ++i) out.slice(i) = slices_.at(n - i);
    return out;
  }

  /// Synchronizes grid values of every slice (for concurrent readers).
  void ensure_values() const {
    for (const auto& s : slices_) {
      if (!s.empty()) (void)s.values();
    }
  }

 private:
  TimeGrid grid_;
  std::vector<SpectralField> slices_;
};

}  // namespace nsalpha
