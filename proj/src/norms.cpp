#include "nsalpha/norms.hpp"

#include "nsalpha/operators.hpp"

#include <cmath>
#include <stdexcept>
#include <vector>

namespace nsalpha {

namespace {

Real cell_volume(const SpectralField& f) {
  Real v = 1;
  for (int a = 0; a < f.dim(); ++a) v *= f.spacing(a);
  return v;
}

// All multi-indices over `dim` axes with |beta| <= k.
void multi_indices(int dim, int k, std::vector<std::array<int, 3>>& out) {
  out.clear();
  for (int b0 = 0; b0 <= k; ++b0)
    for (int b1 = 0; b0 + b1 <= k; ++b1) {
      if (dim == 2) {
        out.push_back({b0, b1, 0});
      } else {
        for (int b2 = 0; b0 + b1 + b2 <= k; ++b2) out.push_back({b0, b1, b2});
      }
    }
}

}  // namespace

Real lp_norm(const SpectralField& f, Real p) {
  if (!(p >= 1)) throw std::invalid_argument("lp_norm: p must be >= 1");
  const Real sum = f.values().abs().pow(p).sum();
  return std::pow(cell_volume(f) * sum, 1.0 / p);
}

Real l2_norm(const SpectralField& f) { return lp_norm(f, 2.0); }

Real linf_norm(const SpectralField& f) {
  return f.n_points() == 0 ? 0.0 : f.values().abs().maxCoeff();
}

Real l2_inner(const SpectralField& a, const SpectralField& b) {
  if (!a.same_layout(b)) throw std::invalid_argument("l2_inner: layout mismatch");
  return cell_volume(a) * (a.values() * b.values()).sum();
}

Real sobolev_norm(const SpectralField& f, int k, Real p) {
  if (k < 0) throw std::invalid_argument("sobolev_norm: k must be >= 0");
  if (!(p > 1)) throw std::invalid_argument("sobolev_norm: p must be > 1");
  std::vector<std::array<int, 3>> betas;
  multi_indices(f.dim(), k, betas);

  Real acc = 0;
  for (const auto& beta : betas) {
    SpectralField d = f;
    for (int a = 0; a < f.dim(); ++a)
      if (beta[a] > 0) d = derivative(d, a, beta[a]);
    acc += std::pow(lp_norm(d, p), p);
  }
  return std::pow(acc, 1.0 / p);
}

Real neg_sobolev_norm(const SpectralField& f) {
  const ArrayXXc& c = f.coeffs();
  Real acc = 0;
  for_each_mode(f.shape(), [&](Index p, int k0, int k1, int k2) {
    const Real k2norm = Real(k0) * k0 + Real(k1) * k1 + Real(k2) * k2;
    const Real weight = 1.0 / ((1.0 + k2norm) * (1.0 + k2norm));
    for (int comp = 0; comp < f.n_components(); ++comp) acc += weight * std::norm(c(p, comp));
  });
  return std::sqrt(acc);
}

}  // namespace nsalpha
