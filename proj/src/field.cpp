#include "nsalpha/field.hpp"

#include <stdexcept>

namespace nsalpha {

SpectralField::SpectralField(int dim, int n_components, const std::array<int, 3>& shape,
                             Real box_length)
    : dim_(dim), n_components_(n_components), shape_(shape), box_length_(box_length) {
  if (dim != 2 && dim != 3) throw std::invalid_argument("SpectralField: dim must be 2 or 3");
  if (n_components != 1 && n_components != dim)
    throw std::invalid_argument("SpectralField: n_components must be 1 or dim");
  if (dim == 2 && shape_[2] != 1)
    throw std::invalid_argument("SpectralField: 2-d fields need shape[2] == 1");
  for (int a = 0; a < dim; ++a)
    if (shape_[a] < 2) throw std::invalid_argument("SpectralField: axis too short");
  if (!(box_length > 0)) throw std::invalid_argument("SpectralField: box_length must be > 0");
  n_points_ = static_cast<Index>(shape_[0]) * shape_[1] * shape_[2];
  values_ = ArrayXXr::Zero(n_points_, n_components_);
  coeffs_ = ArrayXXc::Zero(n_points_, n_components_);
  values_valid_ = true;
  coeffs_valid_ = true;
}

void SpectralField::ensure_values() const {
  if (values_valid_) return;
  if (!coeffs_valid_) throw std::logic_error("SpectralField: no representation to sync from");
  values_ = coeffs_to_grid(shape_, coeffs_);
  values_valid_ = true;
}

void SpectralField::ensure_coeffs() const {
  if (coeffs_valid_) return;
  if (!values_valid_) throw std::logic_error("SpectralField: no representation to sync from");
  coeffs_ = grid_to_coeffs(shape_, values_);
  coeffs_valid_ = true;
}

const ArrayXXr& SpectralField::values() const {
  ensure_values();
  return values_;
}

const ArrayXXc& SpectralField::coeffs() const {
  ensure_coeffs();
  return coeffs_;
}

ArrayXXr& SpectralField::values_mut() {
  ensure_values();
  coeffs_valid_ = false;
  return values_;
}

ArrayXXc& SpectralField::coeffs_mut() {
  ensure_coeffs();
  values_valid_ = false;
  return coeffs_;
}

SpectralField& SpectralField::project_mean_zero() {
  ArrayXXc& c = coeffs_mut();
  for (int comp = 0; comp < n_components_; ++comp) c(0, comp) = Complex(0, 0);
  set_mean_zero(true);
  return *this;
}

}  // namespace nsalpha
