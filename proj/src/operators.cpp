#include "nsalpha/operators.hpp"

#include <cmath>
#include <string>

namespace nsalpha {

namespace {

Complex ipow(Complex z, int order) {
  Complex r(1, 0);
  for (int i = 0; i < order; ++i) r *= z;
  return r;
}

int mode_of(int k0, int k1, int k2, int axis) { return axis == 0 ? k0 : (axis == 1 ? k1 : k2); }

// w_i = sum_j d_i v^j Lap v^j, dealiased.
SpectralField transport_term(const SpectralField& v) {
  const int dim = v.dim();
  SpectralField w(dim, dim, v.shape(), v.box_length());
  ArrayXXr& wv = w.values_mut();
  wv.setZero();
  for (int j = 0; j < dim; ++j) {
    const ArrayXXr lap_vj = laplacian(component(v, j)).values();
    for (int i = 0; i < dim; ++i) {
      wv.col(i) += derivative(component(v, j), i).values().col(0) * lap_vj.col(0);
    }
  }
  dealias_inplace(w);
  return w;
}

// sum_ij d_i v^j d_j m^i, dealiased.
SpectralField strain_source(const SpectralField& m, const SpectralField& v) {
  const int dim = m.dim();
  SpectralField g(dim, 1, m.shape(), m.box_length());
  ArrayXXr& gv = g.values_mut();
  gv.setZero();
  for (int i = 0; i < dim; ++i) {
    for (int j = 0; j < dim; ++j) {
      const ArrayXXr dv = derivative(component(v, j), i).values();
      const ArrayXXr dm = derivative(component(m, i), j).values();
      gv.col(0) += dv.col(0) * dm.col(0);
    }
  }
  dealias_inplace(g);
  return g;
}

}  // namespace

Real max_coeff_magnitude(const SpectralField& f) {
  return f.coeffs().abs().maxCoeff();
}

void require_mean_zero(const SpectralField& f, Real tol, const char* what) {
  const Real scale = max_coeff_magnitude(f);
  if (scale == 0) return;
  for (int c = 0; c < f.n_components(); ++c) {
    if (std::abs(f.coeffs()(0, c)) > tol * scale)
      throw NonZeroMeanError(std::string(what) + ": mean " +
                             std::to_string(std::abs(f.coeffs()(0, c))) +
                             " exceeds tolerance");
  }
}

Real divergence_defect_rel(const SpectralField& v) {
  const ArrayXXc& c = v.coeffs();
  const Real two_pi_over_l = kTwoPi / v.box_length();
  Real num = 0, den = 0;
  for_each_mode(v.shape(), [&](Index p, int k0, int k1, int k2) {
    Complex div(0, 0);
    Real terms = 0;
    const int ks[3] = {k0, k1, k2};
    for (int a = 0; a < v.dim(); ++a) {
      const Complex t = Complex(0, two_pi_over_l * ks[a]) * c(p, a);
      div += t;
      terms += std::abs(t);
    }
    num = std::max(num, std::abs(div));
    den = std::max(den, terms);
  });
  return den == 0 ? 0.0 : num / den;
}

void require_divergence_free(const SpectralField& v, Real tol, const char* what) {
  const Real defect = divergence_defect_rel(v);
  if (defect > tol)
    throw NotDivergenceFreeError(std::string(what) + ": relative divergence defect " +
                                 std::to_string(defect));
}

SpectralField derivative(const SpectralField& f, int axis, int order) {
  if (axis < 0 || axis >= f.dim())
    throw std::out_of_range("derivative: axis " + std::to_string(axis) + " out of range for dim " +
                            std::to_string(f.dim()));
  const Real two_pi_over_l = kTwoPi / f.box_length();
  const int n_axis = f.shape()[axis];
  const bool odd = (order % 2) != 0;
  SpectralField out = apply_symbol(f, [&](int k0, int k1, int k2) {
    const int k = mode_of(k0, k1, k2, axis);
    if (odd && 2 * k == -n_axis) return Complex(0, 0);  // Nyquist has no signed direction
    return ipow(Complex(0, two_pi_over_l * k), order);
  });
  out.set_mean_zero(true);
  out.set_divergence_free(false);
  return out;
}

SpectralField laplacian(const SpectralField& f) {
  const Real factor = 4 * kPi * kPi / (f.box_length() * f.box_length());
  return apply_symbol(f, [factor](int k0, int k1, int k2) {
    return Complex(-factor * (Real(k0) * k0 + Real(k1) * k1 + Real(k2) * k2), 0);
  });
}

SpectralField gradient(const SpectralField& f) {
  if (!f.is_scalar()) throw std::invalid_argument("gradient: expects a scalar field");
  SpectralField out(f.dim(), f.dim(), f.shape(), f.box_length());
  const ArrayXXc& in = f.coeffs();
  ArrayXXc& oc = out.coeffs_mut();
  const Real two_pi_over_l = kTwoPi / f.box_length();
  for_each_mode(f.shape(), [&](Index p, int k0, int k1, int k2) {
    const int ks[3] = {k0, k1, k2};
    for (int a = 0; a < f.dim(); ++a) {
      const bool nyquist = 2 * ks[a] == -f.shape()[a];
      oc(p, a) = nyquist ? Complex(0, 0) : Complex(0, two_pi_over_l * ks[a]) * in(p, 0);
    }
  });
  out.set_mean_zero(true);
  return out;
}

SpectralField divergence(const SpectralField& v) {
  if (v.is_scalar()) throw std::invalid_argument("divergence: expects a vector field");
  SpectralField out(v.dim(), 1, v.shape(), v.box_length());
  const ArrayXXc& in = v.coeffs();
  ArrayXXc& oc = out.coeffs_mut();
  const Real two_pi_over_l = kTwoPi / v.box_length();
  for_each_mode(v.shape(), [&](Index p, int k0, int k1, int k2) {
    const int ks[3] = {k0, k1, k2};
    Complex d(0, 0);
    for (int a = 0; a < v.dim(); ++a) {
      if (2 * ks[a] == -v.shape()[a]) continue;
      d += Complex(0, two_pi_over_l * ks[a]) * in(p, a);
    }
    oc(p, 0) = d;
  });
  out.set_mean_zero(true);
  return out;
}

SpectralField component(const SpectralField& v, int c) {
  if (c < 0 || c >= v.n_components()) throw std::out_of_range("component: index out of range");
  SpectralField out(v.dim(), 1, v.shape(), v.box_length());
  out.coeffs_mut().col(0) = v.coeffs().col(c);
  out.set_mean_zero(v.mean_zero());
  return out;
}

SpectralField helmholtz_inverse(const SpectralField& f, Real alpha) {
  const Real factor = alpha * alpha * 4 * kPi * kPi / (f.box_length() * f.box_length());
  return apply_symbol(f, [factor](int k0, int k1, int k2) {
    const Real k2norm = Real(k0) * k0 + Real(k1) * k1 + Real(k2) * k2;
    return Complex(1.0 / (1.0 + factor * k2norm), 0);
  });
}

SpectralField biot_savart(const SpectralField& omega) {
  if (omega.dim() != 2 || !omega.is_scalar())
    throw std::invalid_argument("biot_savart: expects a 2-d scalar vorticity");
  require_mean_zero(omega, kMeanZeroTol, "biot_savart vorticity");

  SpectralField u(2, 2, omega.shape(), omega.box_length());
  const ArrayXXc& w = omega.coeffs();
  ArrayXXc& uc = u.coeffs_mut();
  const Real l = omega.box_length();
  for_each_mode(omega.shape(), [&](Index p, int k0, int k1, int) {
    const Real k2norm = Real(k0) * k0 + Real(k1) * k1;
    if (k2norm == 0) {
      uc(p, 0) = uc(p, 1) = Complex(0, 0);
      return;
    }
    // Lap u1 = -d2 omega, Lap u2 = d1 omega per mode.
    const Complex base = Complex(0, l / (kTwoPi * k2norm)) * w(p, 0);
    uc(p, 0) = Real(k1) * base;
    uc(p, 1) = -Real(k0) * base;
  });
  u.set_mean_zero(true);
  u.set_divergence_free(true);
  return u;
}

SpectralField k_tilde_alpha(const SpectralField& q, Real alpha) {
  return biot_savart(helmholtz_inverse(q, alpha));
}

SpectralField newtonian_potential(const SpectralField& f, Real mean_tol) {
  require_mean_zero(f, mean_tol, "newtonian_potential source");
  const Real l2 = f.box_length() * f.box_length();
  SpectralField out = apply_symbol(f, [l2](int k0, int k1, int k2) {
    const Real k2norm = Real(k0) * k0 + Real(k1) * k1 + Real(k2) * k2;
    if (k2norm == 0) return Complex(0, 0);
    return Complex(-l2 / (4 * kPi * kPi * k2norm), 0);
  });
  out.set_mean_zero(true);
  return out;
}

SpectralField leray_project(const SpectralField& m) {
  if (m.is_scalar()) throw std::invalid_argument("leray_project: expects a vector field");
  const SpectralField grad_part = gradient(newtonian_potential(divergence(m)));
  SpectralField out(m.dim(), m.n_components(), m.shape(), m.box_length());
  out.coeffs_mut() = m.coeffs() - grad_part.coeffs();
  out.set_mean_zero(m.mean_zero());
  out.set_divergence_free(true);
  return out;
}

SpectralField dealias(const SpectralField& f) {
  SpectralField out = f;
  dealias_inplace(out);
  return out;
}

void dealias_inplace(SpectralField& f) {
  const auto shape = f.shape();
  const int dim = f.dim();
  const int nc = f.n_components();
  ArrayXXc& c = f.coeffs_mut();
  const int cut0 = shape[0] / 3, cut1 = shape[1] / 3, cut2 = shape[2] / 3;
  for_each_mode(shape, [&](Index p, int k0, int k1, int k2) {
    const bool kill = std::abs(k0) > cut0 || std::abs(k1) > cut1 ||
                      (dim > 2 && std::abs(k2) > cut2);
    if (kill)
      for (int comp = 0; comp < nc; ++comp) c(p, comp) = Complex(0, 0);
  });
}

SpectralField heat_flow(const SpectralField& f, Real nu, Real t) {
  const Real factor = 4 * kPi * kPi * nu * t / (f.box_length() * f.box_length());
  return apply_symbol(f, [factor](int k0, int k1, int k2) {
    const Real k2norm = Real(k0) * k0 + Real(k1) * k1 + Real(k2) * k2;
    return Complex(std::exp(-factor * k2norm), 0);
  });
}

SpectralField advect(const SpectralField& u, const SpectralField& f) {
  if (u.n_components() != u.dim())
    throw std::invalid_argument("advect: velocity must have dim components");
  if (u.shape() != f.shape())
    throw std::invalid_argument("advect: velocity and field live on different grids");
  SpectralField out(f.dim(), f.n_components(), f.shape(), f.box_length());
  ArrayXXr& ov = out.values_mut();
  ov.setZero();
  const ArrayXXr& uv = u.values();
  for (int c = 0; c < f.n_components(); ++c) {
    const SpectralField fc = f.is_scalar() ? f : component(f, c);
    for (int a = 0; a < f.dim(); ++a) {
      const SpectralField d = derivative(fc, a);
      ov.col(c) += uv.col(a) * d.values().col(0);
    }
  }
  dealias_inplace(out);
  // solenoidal transport leaves the mean untouched; pin it exactly
  out.project_mean_zero();
  return out;
}

SpectralField assemble_g(const SpectralField& m, const SpectralField& v, Real alpha,
                         bool leray_alpha) {
  SpectralField g = strain_source(m, v);
  if (!leray_alpha && alpha > 0)
    g.coeffs_mut() -= alpha * alpha * divergence(transport_term(v)).coeffs();
  return g;
}

JAssembly assemble_j_parts(const SpectralField& m, Real alpha, bool leray_alpha) {
  require_divergence_free(m, 1e-8, "assemble_j momentum");
  const SpectralField v = helmholtz_inverse(m, alpha);

  JAssembly out;
  if (leray_alpha || alpha == 0) {
    out.g = strain_source(m, v);
    out.j = gradient(newtonian_potential(out.g));
  } else {
    const SpectralField w = transport_term(v);
    out.g = strain_source(m, v);
    out.g.coeffs_mut() -= alpha * alpha * divergence(w).coeffs();
    out.j = gradient(newtonian_potential(out.g));
    out.j.coeffs_mut() += alpha * alpha * w.coeffs();
  }
  out.j.set_mean_zero(false);
  out.j.set_divergence_free(false);
  return out;
}

SpectralField assemble_j(const SpectralField& m, Real alpha, bool leray_alpha) {
  return assemble_j_parts(m, alpha, leray_alpha).j;
}

SpectralField recover_pressure(const SpectralField& m, Real alpha) {
  require_divergence_free(m, 1e-8, "recover_pressure momentum");
  const SpectralField u = helmholtz_inverse(m, alpha);
  SpectralField g = assemble_g(m, u, alpha, /*leray_alpha=*/false);
  g.coeffs_mut() *= Complex(-1, 0);
  return newtonian_potential(g);
}

Real spectral_gap(const std::array<int, 3>& shape, int dim, Real box_length) {
  (void)dim;
  Real min_k2 = 0;
  for_each_mode(shape, [&](Index, int k0, int k1, int k2) {
    const Real k2norm = Real(k0) * k0 + Real(k1) * k1 + Real(k2) * k2;
    if (k2norm > 0 && (min_k2 == 0 || k2norm < min_k2)) min_k2 = k2norm;
  });
  return 4 * kPi * kPi * min_k2 / (box_length * box_length);
}

}  // namespace nsalpha
