#include "nsalpha/fft.hpp"

#include <unsupported/Eigen/FFT>

namespace nsalpha {

namespace {

// One transformer per thread; it caches twiddle tables per length.
Eigen::FFT<Real>& transformer() {
  thread_local Eigen::FFT<Real> fft;
  return fft;
}

// DFT of every line along `axis` of one flattened row-major block.
void dft_axis(const std::array<int, 3>& shape, int axis, Complex* data) {
  const int n = shape[axis];
  if (n <= 1) return;

  Index stride = 1;
  for (int a = axis + 1; a < 3; ++a) stride *= shape[a];

  const Index total = static_cast<Index>(shape[0]) * shape[1] * shape[2];
  const Index block = stride * n;  // span of one transform line group

  Eigen::VectorXcd line(n), out(n);
  auto& fft = transformer();
  for (Index base = 0; base < total; base += block) {
    for (Index off = 0; off < stride; ++off) {
      Complex* p = data + base + off;
      for (int i = 0; i < n; ++i) line[i] = p[i * stride];
      fft.fwd(out, line);
      for (int i = 0; i < n; ++i) p[i * stride] = out[i];
    }
  }
}

}  // namespace

void dft_inplace(const std::array<int, 3>& shape, ArrayXXc& a) {
  for (Index c = 0; c < a.cols(); ++c) {
    Complex* col = a.col(c).data();
    for (int axis = 0; axis < 3; ++axis) dft_axis(shape, axis, col);
  }
}

ArrayXXc grid_to_coeffs(const std::array<int, 3>& shape, const ArrayXXr& values) {
  ArrayXXc a = values.cast<Complex>();
  dft_inplace(shape, a);
  const Real n_total = static_cast<Real>(shape[0]) * shape[1] * shape[2];
  a /= n_total;
  return a;
}

ArrayXXr coeffs_to_grid(const std::array<int, 3>& shape, const ArrayXXc& coeffs) {
  ArrayXXc a = coeffs.conjugate();
  dft_inplace(shape, a);
  return a.real();
}

}  // namespace nsalpha
