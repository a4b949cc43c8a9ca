#pragma once

#include "nsalpha/field.hpp"

namespace nsalpha {

/// L^p norm by grid quadrature, all components pooled:
/// ( h^d sum_{x,c} |f|^p )^{1/p}.
Real lp_norm(const SpectralField& f, Real p);

Real l2_norm(const SpectralField& f);

Real linf_norm(const SpectralField& f);

/// L^2 grid inner product, components pooled.
Real l2_inner(const SpectralField& a, const SpectralField& b);

/// W^{k,p} norm: sum over all multi-indices |beta| <= k of the L^p norm to
/// the p-th power of the spectral derivative, then the p-th root.
Real sobolev_norm(const SpectralField& f, int k, Real p);

/// Lattice-mode negative norm: sqrt( sum_k (1+|k|^2)^{-2} |fhat(k)|^2 ).
/// Never exceeds the L^2 norm on the unit box.
Real neg_sobolev_norm(const SpectralField& f);

}  // namespace nsalpha
