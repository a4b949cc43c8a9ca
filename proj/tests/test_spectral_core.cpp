#include <doctest.h>

#include "nsalpha/field.hpp"
#include "nsalpha/field_series.hpp"
#include "nsalpha/initial_data.hpp"
#include "nsalpha/norms.hpp"
#include "nsalpha/operators.hpp"

#include "test_utils.hpp"

#include <cmath>

using namespace nsalpha;
using namespace nsalpha::test;

namespace {
const std::array<int, 3> g64 = {64, 64, 1};
const std::array<int, 3> g32 = {32, 32, 1};
const std::array<int, 3> c16 = {16, 16, 16};

SpectralField cos_x1(const std::array<int, 3>& shape, Real l = 1.0, Real amp = 1.0) {
  return single_mode_2d(shape, l, 1, 0, amp).field;
}
}  // namespace

TEST_CASE("grid/coefficient round trip is exact to 1e-12") {
  SpectralField f = random_band_scalar(2, g64, 1.0, 7, 1, 20, 1.0);
  const ArrayXXr before = f.values();
  // force a round trip through the other representation
  SpectralField g = f;
  g.coeffs_mut();  // sync + invalidate values
  const Real err = (g.values() - before).abs().maxCoeff();
  CHECK(err <= 1e-12 * before.abs().maxCoeff());
}

TEST_CASE("derivative: trig examples and finite-difference oracle") {
  SpectralField f = cos_x1(g64);
  SpectralField d1 = derivative(f, 0);
  SpectralField want = SpectralField::from_function(
      2, 1, g64, 1.0, [](const Vec3& x, int) { return -kTwoPi * std::sin(kTwoPi * x[0]); });
  CHECK(rel_l2_error(d1, want) < 1e-12);

  SpectralField d2 = derivative(f, 1);
  CHECK(linf_norm(d2) < 1e-12);

  // Laplacian of sin sin against dense finite differences
  SpectralField ss = SpectralField::from_function(2, 1, g64, 1.0, [](const Vec3& x, int) {
    return std::sin(kTwoPi * x[0]) * std::sin(kTwoPi * x[1]);
  });
  SpectralField lap = laplacian(ss);
  SpectralField fd = fd_laplacian(ss);
  CHECK(max_abs_diff(lap, fd) < 1e-9 * linf_norm(lap));
  // and the closed form -8 pi^2 sin sin
  SpectralField closed = ss;
  closed.values_mut() *= -8 * kPi * kPi;
  CHECK(rel_l2_error(lap, closed) < 1e-12);

  CHECK_THROWS_AS(derivative(f, 2), std::out_of_range);
}

TEST_CASE("helmholtz_inverse: identity cases, frozen mode value, round trip") {
  SpectralField f = random_band_scalar(2, g32, 1.0, 3, 1, 10, 1.0);
  CHECK(max_abs_diff(helmholtz_inverse(f, 0.0), f) < 1e-14);

  SpectralField c(2, 1, g32, 1.0);
  c.values_mut().col(0).setConstant(2.5);
  CHECK(max_abs_diff(helmholtz_inverse(c, 0.7), c) < 1e-13);

  const Real alpha = 0.3;
  SpectralField filtered = helmholtz_inverse(cos_x1(g32), alpha);
  SpectralField want = cos_x1(g32, 1.0, 1.0 / (1.0 + 4 * kPi * kPi * alpha * alpha));
  CHECK(rel_l2_error(filtered, want) < 1e-12);

  // forward operator (I - alpha^2 Lap) recovers the input
  SpectralField fwd = filtered;
  fwd.coeffs_mut() -= alpha * alpha * laplacian(filtered).coeffs();
  CHECK(rel_l2_error(fwd, cos_x1(g32)) < 1e-12);
}

TEST_CASE("helmholtz_inverse contracts every sobolev norm") {
  for (std::uint64_t seed : {11u, 12u, 13u, 14u, 15u}) {
    SpectralField f = random_band_scalar(2, g32, 1.0, seed, 1, 10, 1.0);
    SpectralField h = helmholtz_inverse(f, 0.25);
    for (int k = 0; k <= 2; ++k) {
      CHECK(sobolev_norm(h, k, 2.0) <= sobolev_norm(f, k, 2.0) * (1 + 1e-12));
    }
  }
}

TEST_CASE("biot_savart: frozen velocities and Poisson identities") {
  SpectralField zero(2, 1, g32, 1.0);
  CHECK(linf_norm(biot_savart(zero)) == 0.0);

  {
    SpectralField u = biot_savart(cos_x1(g64));
    SpectralField want = SpectralField::from_function(2, 2, g64, 1.0, [](const Vec3& x, int c) {
      return c == 0 ? 0.0 : std::sin(kTwoPi * x[0]) / kTwoPi;
    });
    CHECK(rel_l2_error(u, want) < 1e-12);
    CHECK(u.divergence_free());
    // Lap u2 = d1 omega
    CHECK(rel_l2_error(laplacian(component(u, 1)), derivative(cos_x1(g64), 0)) < 1e-12);
  }
  {
    SpectralField omega = SpectralField::from_function(
        2, 1, g64, 1.0, [](const Vec3& x, int) { return std::sin(kTwoPi * x[1]); });
    omega.set_mean_zero(true);
    SpectralField u = biot_savart(omega);
    SpectralField want = SpectralField::from_function(2, 2, g64, 1.0, [](const Vec3& x, int c) {
      return c == 0 ? std::cos(kTwoPi * x[1]) / kTwoPi : 0.0;
    });
    CHECK(rel_l2_error(u, want) < 1e-12);
    // Lap u1 = -d2 omega
    SpectralField neg_d2 = derivative(omega, 1);
    neg_d2.coeffs_mut() *= Complex(-1, 0);
    CHECK(rel_l2_error(laplacian(component(u, 0)), neg_d2) < 1e-12);
  }

  SpectralField biased(2, 1, g32, 1.0);
  biased.values_mut().col(0).setConstant(1.0);
  biased.values_mut()(0, 0) += 1.0;
  CHECK_THROWS_AS(biot_savart(biased), NonZeroMeanError);
}

TEST_CASE("biot_savart operator bounds on random vorticities") {
  const Real lambda1 = spectral_gap(g32, 2, 1.0);
  CHECK(lambda1 == doctest::Approx(4 * kPi * kPi).epsilon(1e-13));
  for (std::uint64_t seed = 1; seed <= 20; ++seed) {
    SpectralField w = random_band_scalar(2, g32, 1.0, seed, 1, 10, 1.0);
    SpectralField u = biot_savart(w);
    const Real wn = l2_norm(w);
    for (int j = 0; j < 2; ++j) {
      SpectralField uj = component(u, j);
      SpectralField grad_uj = gradient(uj);
      CHECK(l2_norm(grad_uj) <= wn * (1 + 1e-12));
      CHECK(l2_norm(uj) <= wn / std::sqrt(lambda1) * (1 + 1e-12));
    }
  }
}

TEST_CASE("k_tilde_alpha: composition, exact solenoidality, frozen value") {
  SpectralField q = random_band_scalar(2, g32, 1.0, 5, 1, 10, 1.0);
  CHECK(max_abs_diff(k_tilde_alpha(q, 0.0), biot_savart(q)) < 1e-14);

  const Real alpha = 0.2;
  SpectralField u = k_tilde_alpha(cos_x1(g32), alpha);
  const Real denom = kTwoPi * (1 + 4 * kPi * kPi * alpha * alpha);
  SpectralField want = SpectralField::from_function(2, 2, g32, 1.0, [&](const Vec3& x, int c) {
    return c == 0 ? 0.0 : std::sin(kTwoPi * x[0]) / denom;
  });
  CHECK(rel_l2_error(u, want) < 1e-12);

  CHECK(divergence_defect_rel(k_tilde_alpha(q, alpha)) < 1e-14);
  CHECK(linf_norm(divergence(k_tilde_alpha(q, alpha))) < 1e-12);

  SpectralField zero(2, 1, g32, 1.0);
  CHECK(linf_norm(k_tilde_alpha(zero, alpha)) == 0.0);
}

TEST_CASE("newtonian_potential: frozen mode value and inverse property") {
  const Real l = 2.0;
  const std::array<int, 3> box = {16, 16, 16};
  SpectralField f = SpectralField::from_function(
      3, 1, box, l, [&](const Vec3& x, int) { return std::cos(kTwoPi * x[0] / l); });
  f.set_mean_zero(true);
  SpectralField n = newtonian_potential(f);
  SpectralField want = f;
  want.coeffs_mut() *= Complex(-l * l / (4 * kPi * kPi), 0);
  CHECK(rel_l2_error(n, want) < 1e-12);

  // Lap N = identity on mean-zero fields
  SpectralField g = random_band_scalar(3, box, l, 3, 1, 5, 1.0);
  CHECK(rel_l2_error(laplacian(newtonian_potential(g)), g) < 1e-10);
  // N(Lap g) = g for mean-zero g
  CHECK(rel_l2_error(newtonian_potential(laplacian(g)), g) < 1e-10);

  SpectralField zero(3, 1, box, l);
  CHECK(linf_norm(newtonian_potential(zero)) == 0.0);

  SpectralField biased(3, 1, box, l);
  biased.values_mut().col(0).setConstant(0.3);
  biased.values_mut()(0, 0) += 0.1;
  CHECK_THROWS_AS(newtonian_potential(biased), NonZeroMeanError);
}

TEST_CASE("leray_project: fixed points, annihilation, idempotence, self-adjointness") {
  SpectralField sol = random_band_vector(3, c16, 2.0, 21, 1, 5, 1.0, true);
  CHECK(max_abs_diff(leray_project(sol), sol) < 1e-12);

  SpectralField phi = random_band_scalar(3, c16, 2.0, 22, 1, 5, 1.0);
  CHECK(linf_norm(leray_project(gradient(phi))) < 1e-12 * linf_norm(gradient(phi)));

  SpectralField m = random_band_vector(3, c16, 2.0, 23, 1, 5, 1.0, false);
  SpectralField pm = leray_project(m);
  CHECK(max_abs_diff(leray_project(pm), pm) < 1e-10 * linf_norm(pm));
  CHECK(divergence_defect_rel(pm) < 1e-12);

  // m - Pm = grad N (div m)
  SpectralField residual = m;
  residual.coeffs_mut() -= pm.coeffs();
  SpectralField grad_n = gradient(newtonian_potential(divergence(m)));
  CHECK(max_abs_diff(residual, grad_n) < 1e-12 * (1 + linf_norm(grad_n)));

  // self-adjoint in the grid L2 inner product
  SpectralField a = random_band_vector(3, c16, 2.0, 24, 1, 5, 1.0, false);
  SpectralField b = random_band_vector(3, c16, 2.0, 25, 1, 5, 1.0, false);
  const Real lhs = l2_inner(leray_project(a), b);
  const Real rhs = l2_inner(a, leray_project(b));
  CHECK(std::abs(lhs - rhs) <= 1e-10 * (1 + std::abs(lhs)));
}

TEST_CASE("assemble_j: zero input, quadrature oracle, divergence identity") {
  const Real l = 2.0;
  SpectralField zero(3, 3, c16, l);
  zero.set_divergence_free(true);
  CHECK(linf_norm(assemble_j(zero, 0.2)) == 0.0);

  // alpha = 0, single mode: G = sum d_i v^j d_j v^i with v = m, against a
  // dense finite-difference quadrature
  {
    SpectralField m = single_mode_vector(3, c16, l, 1, 0, 0, 0.8).field;
    auto parts = assemble_j_parts(m, 0.0);
    SpectralField g_fd(3, 1, c16, l);
    g_fd.values_mut().setZero();
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j)
        g_fd.values_mut().col(0) += fd_derivative(component(m, j), i, 1).values().col(0) *
                                    fd_derivative(component(m, i), j, 1).values().col(0);
    CHECK(max_abs_diff(parts.g, g_fd) < 1e-7 * (1 + linf_norm(parts.g)));
  }

  // div J = sum d_i v^j d_j m^i for random solenoidal m, both variants
  for (bool leray : {false, true}) {
    for (std::uint64_t seed : {31u, 32u, 33u}) {
      SpectralField m = random_band_vector(3, c16, l, seed, 1, 5, 1.0, true);
      const Real alpha = 0.25;
      SpectralField j = assemble_j(m, alpha, leray);
      SpectralField v = helmholtz_inverse(m, alpha);
      SpectralField rhs(3, 1, c16, l);
      rhs.values_mut().setZero();
      for (int i = 0; i < 3; ++i)
        for (int jj = 0; jj < 3; ++jj)
          rhs.values_mut().col(0) += derivative(component(v, jj), i).values().col(0) *
                                     derivative(component(m, i), jj).values().col(0);
      dealias_inplace(rhs);
      const SpectralField div_j = divergence(j);
      CHECK(l2_norm(div_j) > 0);
      SpectralField diff = div_j;
      diff.coeffs_mut() -= rhs.coeffs();
      CHECK(l2_norm(diff) <= 1e-8 * l2_norm(j));
    }
  }

  SpectralField not_sol = random_band_vector(3, c16, l, 40, 1, 5, 1.0, false);
  CHECK_THROWS_AS(assemble_j(not_sol, 0.1), NotDivergenceFreeError);
}

TEST_CASE("recover_pressure: zero, residual, classical reduction at alpha 0") {
  const Real l = 2.0;
  SpectralField zero(3, 3, c16, l);
  zero.set_divergence_free(true);
  CHECK(linf_norm(recover_pressure(zero, 0.3)) == 0.0);

  {
    SpectralField m = single_mode_vector(3, c16, l, 1, 1, 0, 0.6).field;
    const Real alpha = 0.2;
    SpectralField p = recover_pressure(m, alpha);
    SpectralField g = assemble_g(m, helmholtz_inverse(m, alpha), alpha, false);
    SpectralField residual = laplacian(p);
    residual.coeffs_mut() += g.coeffs();
    CHECK(l2_norm(residual) <= 1e-8 * (1 + l2_norm(g)));
  }

  // alpha = 0: the source is the classical one built from u = m
  {
    SpectralField u = random_band_vector(3, c16, l, 51, 1, 4, 1.0, true);
    SpectralField g = assemble_g(u, u, 0.0, false);
    SpectralField classical(3, 1, c16, l);
    classical.values_mut().setZero();
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j)
        classical.values_mut().col(0) += derivative(component(u, j), i).values().col(0) *
                                         derivative(component(u, i), j).values().col(0);
    dealias_inplace(classical);
    CHECK(max_abs_diff(g, classical) < 1e-11 * (1 + linf_norm(classical)));
  }
}

TEST_CASE("advect: single-mode transport vanishes, mean stays zero") {
  SpectralField q = cos_x1(g32);
  SpectralField u = k_tilde_alpha(q, 0.1);
  SpectralField adv = advect(u, q);
  CHECK(linf_norm(adv) < 1e-12);

  SpectralField q2 = random_band_scalar(2, g32, 1.0, 7, 1, 8, 1.0);
  SpectralField adv2 = advect(k_tilde_alpha(q2, 0.1), q2);
  CHECK(std::abs(adv2.mean()) == 0.0);
}

TEST_CASE("dealias removes the aliased band only") {
  SpectralField f = random_band_scalar(2, g32, 1.0, 9, 1, 10, 1.0);
  SpectralField d = dealias(f);
  for_each_mode(f.shape(), [&](Index p, int k0, int k1, int) {
    if (std::abs(k0) > 10 || std::abs(k1) > 10) {
      CHECK(std::abs(d.coeffs()(p, 0)) == 0.0);
    } else {
      CHECK(std::abs(d.coeffs()(p, 0) - f.coeffs()(p, 0)) < 1e-15);
    }
  });
}
