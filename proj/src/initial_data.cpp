#include "nsalpha/initial_data.hpp"

#include "nsalpha/norms.hpp"
#include "nsalpha/operators.hpp"
#include "nsalpha/rng.hpp"

#include <cmath>
#include <stdexcept>

namespace nsalpha {

namespace {

// Index of the mode -k for a mode living at grid indices (i0,i1,i2).
Index conjugate_index(const std::array<int, 3>& shape, int i0, int i1, int i2) {
  const int j0 = (shape[0] - i0) % shape[0];
  const int j1 = (shape[1] - i1) % shape[1];
  const int j2 = (shape[2] - i2) % shape[2];
  return (static_cast<Index>(j0) * shape[1] + j1) * shape[2] + j2;
}

bool canonical(int k0, int k1, int k2) {
  if (k0 != 0) return k0 > 0;
  if (k1 != 0) return k1 > 0;
  return k2 > 0;
}

}  // namespace

InitialData single_mode_2d(const std::array<int, 3>& shape, Real box_length, int k0, int k1,
                           Real amplitude) {
  if (k0 == 0 && k1 == 0) throw std::invalid_argument("single_mode_2d: zero mode");
  const Real w = kTwoPi / box_length;
  auto fn = [=](const Vec3& x, int) { return amplitude * std::cos(w * (k0 * x[0] + k1 * x[1])); };
  InitialData out;
  out.field = SpectralField::from_function(2, 1, shape, box_length, fn);
  out.field.set_mean_zero(true);
  out.analytic = fn;
  return out;
}

InitialData two_mode_2d(const std::array<int, 3>& shape, Real box_length, int k10, int k11,
                        Real a1, int k20, int k21, Real a2) {
  const Real w = kTwoPi / box_length;
  auto fn = [=](const Vec3& x, int) {
    return a1 * std::cos(w * (k10 * x[0] + k11 * x[1])) +
           a2 * std::cos(w * (k20 * x[0] + k21 * x[1]));
  };
  InitialData out;
  out.field = SpectralField::from_function(2, 1, shape, box_length, fn);
  out.field.set_mean_zero(true);
  out.analytic = fn;
  return out;
}

SpectralField random_band_scalar(int dim, const std::array<int, 3>& shape, Real box_length,
                                 std::uint64_t seed, int kmin, int kmax, Real amplitude) {
  SpectralField f(dim, 1, shape, box_length);
  ArrayXXc& c = f.coeffs_mut();
  Index p = 0;
  for (int i0 = 0; i0 < shape[0]; ++i0)
    for (int i1 = 0; i1 < shape[1]; ++i1)
      for (int i2 = 0; i2 < shape[2]; ++i2, ++p) {
        const int k0 = signed_mode(i0, shape[0]);
        const int k1 = signed_mode(i1, shape[1]);
        const int k2 = signed_mode(i2, shape[2]);
        const Real k2norm = Real(k0) * k0 + Real(k1) * k1 + Real(k2) * k2;
        if (!canonical(k0, k1, k2)) continue;
        if (k2norm < Real(kmin) * kmin || k2norm > Real(kmax) * kmax) continue;
        const auto g = gaussian_pair(seed, static_cast<std::uint32_t>(p), 0, 0);
        const Complex z(g[0], g[1]);
        c(p, 0) = z;
        c(conjugate_index(shape, i0, i1, i2), 0) = std::conj(z);
      }
  f.set_mean_zero(true);
  const Real norm = l2_norm(f);
  if (norm > 0) f.coeffs_mut() *= Complex(amplitude / norm, 0);
  return f;
}

SpectralField random_band_vector(int dim, const std::array<int, 3>& shape, Real box_length,
                                 std::uint64_t seed, int kmin, int kmax, Real amplitude,
                                 bool solenoidal) {
  SpectralField f(dim, dim, shape, box_length);
  ArrayXXc& c = f.coeffs_mut();
  Index p = 0;
  for (int i0 = 0; i0 < shape[0]; ++i0)
    for (int i1 = 0; i1 < shape[1]; ++i1)
      for (int i2 = 0; i2 < shape[2]; ++i2, ++p) {
        const int ks[3] = {signed_mode(i0, shape[0]), signed_mode(i1, shape[1]),
                           signed_mode(i2, shape[2])};
        const Real k2norm = Real(ks[0]) * ks[0] + Real(ks[1]) * ks[1] + Real(ks[2]) * ks[2];
        if (!canonical(ks[0], ks[1], ks[2])) continue;
        if (k2norm < Real(kmin) * kmin || k2norm > Real(kmax) * kmax) continue;

        Complex z[3] = {};
        for (int a = 0; a < dim; ++a) {
          const auto g = gaussian_pair(seed, static_cast<std::uint32_t>(p),
                                       static_cast<std::uint32_t>(a), 0);
          z[a] = Complex(g[0], g[1]);
        }
        if (solenoidal) {
          Complex kdotz(0, 0);
          for (int a = 0; a < dim; ++a) kdotz += Real(ks[a]) * z[a];
          for (int a = 0; a < dim; ++a) z[a] -= Real(ks[a]) * kdotz / k2norm;
        }
        const Index pc = conjugate_index(shape, i0, i1, i2);
        for (int a = 0; a < dim; ++a) {
          c(p, a) = z[a];
          c(pc, a) = std::conj(z[a]);
        }
      }
  f.set_mean_zero(true);
  f.set_divergence_free(solenoidal);
  const Real norm = l2_norm(f);
  if (norm > 0) f.coeffs_mut() *= Complex(amplitude / norm, 0);
  return f;
}

InitialData single_mode_vector(int dim, const std::array<int, 3>& shape, Real box_length, int k0,
                               int k1, int k2, Real amplitude) {
  if (k0 == 0 && k1 == 0 && k2 == 0)
    throw std::invalid_argument("single_mode_vector: zero mode");
  Vec3 k(k0, k1, dim > 2 ? k2 : 0);
  Vec3 e;
  if (dim == 2) {
    e = Vec3(-k[1], k[0], 0).normalized();
  } else {
    const Vec3 probe = std::abs(k[0]) <= std::abs(k[2]) ? Vec3(1, 0, 0) : Vec3(0, 0, 1);
    e = k.cross(probe).normalized();
  }
  const Real w = kTwoPi / box_length;
  auto fn = [=](const Vec3& x, int c) {
    return amplitude * e[c] * std::cos(w * (k[0] * x[0] + k[1] * x[1] + k[2] * x[2]));
  };
  InitialData out;
  out.field = SpectralField::from_function(dim, dim, shape, box_length, fn);
  out.field.set_mean_zero(true);
  out.field.set_divergence_free(true);
  out.analytic = fn;
  return out;
}

InitialData centered_bump_3d(const std::array<int, 3>& shape, Real box_length, Real sigma,
                             int norm_k, Real norm_p, Real target_norm) {
  const Real l = box_length;
  const Vec3 center(l / 2, l / 2, l / 2);
  const Vec3 axis = Vec3(1, 1, 1).normalized();
  const Real inv_s2 = 1.0 / (sigma * sigma);

  // curl of exp(-|r|^2/(2 sigma^2)) axis, nearest periodic image
  auto raw = [=](const Vec3& x, int c) {
    Vec3 r = x - center;
    for (int a = 0; a < 3; ++a) r[a] -= l * std::round(r[a] / l);
    const Real g = std::exp(-0.5 * r.squaredNorm() * inv_s2);
    const Vec3 value = -g * inv_s2 * r.cross(axis);
    return value[c];
  };

  InitialData out;
  // project out the (tiny) sampling divergence so the flag holds exactly;
  // the analytic closure stays within the aliasing tail of the samples
  out.field = leray_project(SpectralField::from_function(3, 3, shape, box_length, raw));
  out.field.set_mean_zero(true);
  const Real norm = sobolev_norm(out.field, norm_k, norm_p);
  const Real scale = norm > 0 ? target_norm / norm : 1.0;
  out.field.coeffs_mut() *= Complex(scale, 0);
  out.analytic = [raw, scale](const Vec3& x, int c) { return scale * raw(x, c); };
  return out;
}

Real boundary_shell_energy_fraction(const SpectralField& f) {
  const Real l = f.box_length();
  const Real inner_lo = l / 8, inner_hi = 7 * l / 8;
  const ArrayXXr& v = f.values();
  Real shell = 0, total = 0;
  for (Index p = 0; p < f.n_points(); ++p) {
    const Vec3 x = f.point(p);
    Real density = 0;
    for (int c = 0; c < f.n_components(); ++c) density += v(p, c) * v(p, c);
    total += density;
    bool in_shell = false;
    for (int a = 0; a < f.dim(); ++a)
      if (x[a] < inner_lo || x[a] > inner_hi) in_shell = true;
    if (in_shell) shell += density;
  }
  return total == 0 ? 0.0 : shell / total;
}

}  // namespace nsalpha
