#include "frkt/specfun.hpp"

#include <array>
#include <cmath>
#include <limits>

#include "frkt/primes.hpp"
#include "frkt/quadrature.hpp"

namespace frkt::specfun {

ZParams ZParams::from(cplx z) {
  if (z == cplx(0.0)) throw DomainError("ZParams: z must be nonzero");
  ZParams p;
  p.z = z;
  p.eps_z = z.real() > 0.0 ? 1 : -1;
  p.m_z = static_cast<int>(std::ceil(z.real()));
  p.m = p.eps_z * p.m_z;
  p.theta = p.m_z - z.real();
  p.theta_z = cplx(p.theta, -z.imag());
  return p;
}

cplx expm1_ratio(cplx z) {
  if (std::abs(z) < 0.5) {
    cplx term = 1.0, sum = 1.0;
    for (int n = 1; n < 30; ++n) {
      term *= z / double(n + 1);
      sum += term;
      if (std::abs(term) < 1e-18) break;
    }
    return sum;
  }
  return (std::exp(z) - 1.0) / z;
}

cplx expm1_ratio_prime(cplx z) {
  if (std::abs(z) < 1.0) {
    // sum_{n>=1} n z^(n-1) / (n+1)!
    cplx pw = 1.0, sum = 0.0;
    double fact = 2.0;
    for (int n = 1; n < 40; ++n) {
      const cplx term = double(n) * pw / fact;
      sum += term;
      if (std::abs(term) < 1e-18) break;
      pw *= z;
      fact *= n + 2;
    }
    return sum;
  }
  return (std::exp(z) * (z - 1.0) + 1.0) / (z * z);
}

namespace {

bool series_is_stable(cplx w) {
  const double a = std::abs(w);
  return a <= 2.0 || (a <= 20.0 && a - w.real() <= 8.0);
}

}  // namespace

cplx eval_I(cplx w) {
  if (!std::isfinite(w.real()) || !std::isfinite(w.imag())) throw DomainError("eval_I: non-finite argument");
  if (w.real() > 700.0) throw RangeError("eval_I: Re w too large, e^w overflows");
  if (series_is_stable(w)) {
    cplx term = 1.0, sum = 0.0;
    for (int n = 1; n < 200; ++n) {
      term *= w / double(n);
      const cplx add = term / double(n);
      sum += add;
      if (n > std::abs(w) && std::abs(add) <= 1e-17 * std::abs(sum)) break;
    }
    return sum;
  }
  // I(w) = int_0^1 w (e^{wt} - 1)/(wt) dt along the segment
  static const quad::Rule gl = quad::gauss_legendre(16);
  const int panels = static_cast<int>(std::ceil(std::abs(w) / 2.0));
  cplx sum = 0.0;
  for (int k = 0; k < panels; ++k) {
    const double a = double(k) / panels, b = double(k + 1) / panels;
    sum += quad::integrate(gl, a, b, [&](double t) { return expm1_ratio(w * t); });
  }
  return w * sum;
}

cplx eval_J(cplx s) {
  if (!(s.real() > 0.0)) throw DomainError("eval_J: requires Re s > 0");
  if (std::abs(s) > 2.0) {
    // modified Lentz on E1(s) = e^{-s} / (s + 1 - 1/(s + 3 - 4/(s + 5 - ...)))
    const double tiny = 1e-300;
    cplx b = s + 1.0;
    cplx c = 1.0 / tiny;
    cplx d = 1.0 / b;
    cplx h = d;
    for (int i = 1; i < 100000; ++i) {
      const double a = -double(i) * i;
      b += 2.0;
      d = 1.0 / (a * d + b);
      c = b + a / c;
      const cplx del = c * d;
      h *= del;
      if (std::abs(del - 1.0) < 1e-16) return h * std::exp(-s);
    }
    throw ConvergenceError("eval_J: continued fraction did not converge", h * std::exp(-s), 0.0);
  }
  // J(s) = int_0^inf e^{-s-t}/(s+t) dt on panels graded away from the pole at t = -s
  static const quad::Rule gl = quad::gauss_legendre(16);
  const double scale = std::abs(s);
  cplx sum = 0.0;
  double a = 0.0, len = scale;
  while (a < 60.0) {
    const double b = a + len;
    sum += quad::integrate(gl, a, b, [&](double t) { return std::exp(-t) / (s + t); });
    a = b;
    len = std::min(2.0 * len, 4.0);
  }
  return std::exp(-s) * sum;
}

cplx rho_hat(cplx s) { return std::exp(kEulerGamma + eval_I(-s)); }

double saddle_residual(cplx w, cplx root) {
  const cplx e = std::exp(root);
  return std::abs(e - 1.0 - w * root) / std::max(1.0, std::abs(e));
}

XiResult solve_xi(double u, const NewtonOptions& opt) {
  if (!(u > 0.0) || !std::isfinite(u)) throw DomainError("solve_xi: requires u > 0");
  if (u == 1.0) return {0.0, 2.0, 0.0};
  const double log_u = std::log(u);
  auto F = [&](double x) { return std::log(expm1_ratio(x).real()) - log_u; };
  double lo, hi, x;
  if (u > 1.0) {
    lo = 0.0;
    hi = 2.0 * log_u + 2.0;
    x = (u < 2.0) ? 2.0 * (u - 1.0) : std::log(u * std::log(u)) + 1.0;
  } else {
    hi = 0.0;
    lo = -1.0 / u - 1.0;
    x = (u > 0.5) ? 2.0 * (u - 1.0) : -1.0 / u;
  }
  if (!(x > lo && x < hi)) x = 0.5 * (lo + hi);
  for (int it = 0; it < opt.max_iter; ++it) {
    const double f = F(x);
    if (f == 0.0) break;
    if (f < 0.0) lo = x; else hi = x;
    const double dfdx = (expm1_ratio_prime(x) / expm1_ratio(x)).real();
    double next = x - f / dfdx;
    if (!(next > lo && next < hi)) next = 0.5 * (lo + hi);
    const double step = std::abs(next - x);
    x = next;
    if (step <= 4e-16 * std::max(1.0, std::abs(x))) break;
  }
  XiResult r;
  r.xi = x;
  r.xi_prime = 1.0 / expm1_ratio_prime(x).real();
  r.residual = saddle_residual(u, x);
  if (r.residual > opt.tol)
    throw ConvergenceError("solve_xi: residual above tolerance", x, r.residual);
  return r;
}

SaddleResult solve_zeta0(cplx w, const NewtonOptions& opt) {
  if (w == cplx(0.0)) throw DomainError("solve_zeta0: w must be nonzero");
  SaddleResult out;
  out.argument = w;
  if (w.imag() == 0.0 && w.real() > 0.0) {
    const XiResult xr = solve_xi(w.real(), opt);
    out.root = xr.xi;
    out.residual = xr.residual;
    out.derivative = xr.xi_prime;
    return out;
  }
  const double rho = std::abs(w);
  const double theta = std::arg(w);
  cplx zeta = solve_xi(rho, opt).xi;
  const int steps = std::max(1, static_cast<int>(std::ceil(std::abs(theta) / (kPi / 32.0))));
  for (int k = 1; k <= steps; ++k) {
    const cplx wk = (k == steps) ? w : std::polar(rho, theta * k / steps);
    bool converged = false;
    for (int it = 0; it < opt.max_iter; ++it) {
      const cplx h = expm1_ratio(zeta);
      const cplx g = std::log(h / wk);
      const cplx step = g * h / expm1_ratio_prime(zeta);
      zeta -= step;
      if (!std::isfinite(zeta.real()) || !std::isfinite(zeta.imag())) break;
      if (std::abs(step) <= 1e-15 * std::max(1.0, std::abs(zeta))) {
        converged = true;
        break;
      }
    }
    if (!converged)
      throw ConvergenceError("solve_zeta0: Newton did not converge", zeta, saddle_residual(wk, zeta));
  }
  out.root = zeta;
  out.residual = saddle_residual(w, zeta);
  out.derivative = 1.0 / expm1_ratio_prime(zeta);
  if (out.residual > opt.tol)
    throw ConvergenceError("solve_zeta0: residual above tolerance", zeta, out.residual);
  return out;
}

cplx zeta(cplx s) {
  if (s == cplx(1.0)) throw PoleError("zeta: pole at s = 1");
  constexpr int N = 10000;
  cplx sum = 0.0;
  for (int n = N - 1; n >= 1; --n) sum += std::exp(-s * std::log(double(n)));
  const double logN = std::log(double(N));
  const cplx Ns = std::exp(-s * logN);
  sum += Ns * double(N) / (s - 1.0) + 0.5 * Ns;
  static constexpr std::array<double, 8> B2k = {1.0 / 6,    -1.0 / 30, 1.0 / 42,       -1.0 / 30,
                                                5.0 / 66,   -691.0 / 2730, 7.0 / 6, -3617.0 / 510};
  // term_k = B_2k/(2k)! s(s+1)...(s+2k-2) N^{-s-2k+1}
  cplx rising = s;
  cplx power = Ns / double(N);
  double fact = 2.0;
  for (int k = 1; k <= 8; ++k) {
    sum += B2k[k - 1] / fact * rising * power;
    rising *= (s + double(2 * k - 1)) * (s + double(2 * k));
    power /= double(N) * N;
    fact *= double(2 * k + 1) * (2 * k + 2);
  }
  return sum;
}

namespace {

cplx log1p_small(cplx x) {
  if (std::abs(x) < 1e-3) {
    cplx term = x, sum = 0.0;
    for (int n = 1; n <= 8; ++n) {
      sum += (n % 2 ? 1.0 : -1.0) * term / double(n);
      term *= x;
    }
    return sum;
  }
  return std::log(1.0 + x);
}

}  // namespace

cplx log_zeta_partial(cplx s, double y) {
  if (!(s.real() > 0.0)) throw DomainError("zeta_partial: requires Re s > 0");
  if (std::exp2(-s.real()) == 0.0) throw RangeError("zeta_partial: p^-s underflows");
  const auto primes = arith::primes_up_to(static_cast<std::uint64_t>(std::floor(y)));
  cplx sum = 0.0;
  for (auto p : primes) sum -= log1p_small(-std::exp(-s * std::log(double(p))));
  return sum;
}

cplx zeta_partial(cplx s, double y) { return std::exp(log_zeta_partial(s, y)); }

cplx zeta_values(cplx s, std::optional<double> y) {
  if (y) {
    if (*y < 2.0) throw DomainError("zeta_values: y must be at least 2");
    return zeta_partial(s, *y);
  }
  return zeta(s);
}

namespace {

constexpr std::array<double, 9> kLanczos = {
    0.99999999999980993,  676.5203681218851,     -1259.1392167224028,
    771.32342877765313,   -176.61502916214059,   12.507343278686905,
    -0.13857109526572012, 9.9843695780195716e-6, 1.5056327351493116e-7};

bool is_nonpositive_integer(cplx s) {
  return s.imag() == 0.0 && s.real() <= 0.0 && s.real() == std::floor(s.real());
}

cplx gamma_right(cplx s) {
  s -= 1.0;
  cplx x = kLanczos[0];
  for (int i = 1; i < 9; ++i) x += kLanczos[i] / (s + double(i));
  const cplx t = s + 7.5;
  return std::sqrt(2.0 * kPi) * std::exp((s + 0.5) * std::log(t) - t) * x;
}

}  // namespace

cplx gamma_complex(cplx s) {
  if (is_nonpositive_integer(s)) throw PoleError("gamma_complex: pole at non-positive integer");
  if (s.real() < 0.5) return kPi / (std::sin(kPi * s) * gamma_right(1.0 - s));
  return gamma_right(s);
}

cplx rgamma(cplx s) {
  if (is_nonpositive_integer(s)) return 0.0;
  if (s.real() < 0.5) return std::sin(kPi * s) * gamma_right(1.0 - s) / kPi;
  return 1.0 / gamma_right(s);
}

double normal_cdf(double v) { return 0.5 * std::erfc(-v / std::sqrt(2.0)); }

}  // namespace frkt::specfun
