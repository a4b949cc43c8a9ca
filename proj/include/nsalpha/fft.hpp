#pragma once

#include "nsalpha/types.hpp"

#include <array>

namespace nsalpha {

/// In-place unnormalized DFT along every axis of each column of `a`.
/// Each column is a row-major (shape[0], shape[1], shape[2]) block;
/// axes with a single point are skipped.
void dft_inplace(const std::array<int, 3>& shape, ArrayXXc& a);

/// Fourier coefficients of real samples: DFT / (number of points), matching
/// f(x) = sum_k fhat(k) e^{2 pi i <k,x>/L}.
ArrayXXc grid_to_coeffs(const std::array<int, 3>& shape, const ArrayXXr& values);

/// Samples from coefficients via the conjugate transform; imaginary residue
/// is dropped (inputs are Hermitian up to roundoff).
ArrayXXr coeffs_to_grid(const std::array<int, 3>& shape, const ArrayXXc& coeffs);

}  // namespace nsalpha
