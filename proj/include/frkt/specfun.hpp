#pragma once

#include <optional>

#include "frkt/core.hpp"

namespace frkt::specfun {

// Integer and fractional parts attached to the complex order z:
// z = m_z - theta_z with m_z = ceil(Re z), theta = m_z - Re z in [0, 1).
struct ZParams {
  cplx z;
  int eps_z = 1;
  int m = 0;
  int m_z = 0;
  double theta = 0.0;
  cplx theta_z;

  static ZParams from(cplx z);
  bool is_integer() const { return z.imag() == 0.0 && theta == 0.0; }
};

struct NewtonOptions {
  double tol = 1e-12;
  int max_iter = 100;
};

// I(w) = int_0^w (e^v - 1) dv / v.
cplx eval_I(cplx w);
// J(s) = int_s^inf e^-u du / u, i.e. E1(s), for Re s > 0.
cplx eval_J(cplx s);
// Laplace transform of the Dickman function.
cplx rho_hat(cplx s);

// (e^z - 1)/z and its derivative, accurate near z = 0.
cplx expm1_ratio(cplx z);
cplx expm1_ratio_prime(cplx z);

struct XiResult {
  double xi = 0.0;
  double xi_prime = 0.0;
  double residual = 0.0;
};

// Real root of e^xi = 1 + u xi, with xi(1) = 0.
XiResult solve_xi(double u, const NewtonOptions& opt = {});

struct SaddleResult {
  cplx argument;
  cplx root;
  double residual = 0.0;
  cplx derivative;
};

// Root of e^zeta = 1 + w zeta continued from the real root xi(|w|).
SaddleResult solve_zeta0(cplx w, const NewtonOptions& opt = {});

// Scaled residual |e^r - 1 - w r| / max(1, |e^r|).
double saddle_residual(cplx w, cplx root);

cplx zeta(cplx s);
cplx zeta_partial(cplx s, double y);
// Sum of principal logarithms of the Euler factors over p <= y.
cplx log_zeta_partial(cplx s, double y);
cplx zeta_values(cplx s, std::optional<double> y = std::nullopt);

cplx gamma_complex(cplx s);
// 1/Gamma(s), zero at the poles.
cplx rgamma(cplx s);

double normal_cdf(double v);

}  // namespace frkt::specfun
