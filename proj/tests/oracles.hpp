#pragma once

// Reference values computed independently of the library (Boost quadrature and
// special functions, plain series, trial division).

#include <boost/math/quadrature/exp_sinh.hpp>
#include <boost/math/quadrature/gauss.hpp>
#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <boost/math/special_functions/bernoulli.hpp>
#include <boost/math/special_functions/erf.hpp>
#include <boost/math/special_functions/expint.hpp>
#include <boost/math/special_functions/zeta.hpp>

#include <cmath>
#include <complex>
#include <cstdint>
#include <functional>
#include <vector>

namespace oracle {

using cplx = std::complex<double>;
using lcplx = std::complex<long double>;

inline constexpr double kGamma = 0.57721566490153286060651209008240243;

template <class F>
double gk(F&& f, double a, double b, double tol = 1e-14) {
  return boost::math::quadrature::gauss_kronrod<double, 31>::integrate(f, a, b, 15, tol);
}

// I(w) = sum w^n / (n n!)
inline cplx I_series(cplx w) {
  lcplx term = 1.0L, acc = 0.0L;
  const lcplx lw(w.real(), w.imag());
  for (int n = 1; n < 400; ++n) {
    term *= lw / static_cast<long double>(n);
    acc += term / static_cast<long double>(n);
    if (std::abs(term) < 1e-30L * (1.0L + std::abs(acc))) break;
  }
  return {double(acc.real()), double(acc.imag())};
}

// I(s) = Ei(s) - gamma - log s and I(-s) = -E_1(s) - gamma - log s for real s > 0
inline double I_real(double w) {
  if (w > 0.0) return boost::math::expint(w) - kGamma - std::log(w);
  return -boost::math::expint(1, -w) - kGamma - std::log(-w);
}

// J(s) = E_1(s) for real s > 0
inline double J_real(double s) { return boost::math::expint(1, s); }

// Gamma(s) = int_0^inf t^{s-1} e^{-t} dt, Re s >= 1
inline cplx gamma_quad(cplx s) {
  boost::math::quadrature::exp_sinh<double> q;
  auto re = [&](double t) { return t == 0.0 || t > 700.0 ? 0.0 : std::real(std::pow(cplx(t), s - 1.0)) * std::exp(-t); };
  auto im = [&](double t) { return t == 0.0 || t > 700.0 ? 0.0 : std::imag(std::pow(cplx(t), s - 1.0)) * std::exp(-t); };
  return {q.integrate(re, 1e-15), q.integrate(im, 1e-15)};
}

inline double normal_cdf(double v) { return 0.5 * boost::math::erfc(-v / std::sqrt(2.0)); }

// 30-point Gauss-Legendre; the integrands below are analytic on each piece.
template <class F>
double gl30(F&& f, double a, double b) {
  return boost::math::quadrature::gauss<double, 30>::integrate(f, a, b);
}

// Dickman rho on [0, 4] from its closed form on [0, 3] and one more integration step.
inline double dickman(double v) {
  if (v < 0.0) return 0.0;
  if (v <= 1.0) return 1.0;
  if (v <= 2.0) return 1.0 - std::log(v);
  if (v <= 3.0) return 1.0 - std::log(v) + gl30([](double t) { return std::log(t - 1.0) / t; }, 2.0, v);
  static const double r3 = dickman(3.0);
  return r3 - gl30([](double t) { return dickman(t - 1.0) / t; }, 3.0, v);
}

inline double dickman_conv(double v) {
  std::vector<double> cuts{0.0, v};
  for (int h = 1; h < v; ++h) {
    cuts.push_back(h);
    cuts.push_back(v - h);
  }
  std::sort(cuts.begin(), cuts.end());
  double acc = 0.0;
  for (std::size_t i = 0; i + 1 < cuts.size(); ++i)
    if (cuts[i + 1] - cuts[i] > 1e-15)
      acc += gl30([v](double t) { return dickman(t) * dickman(v - t); }, cuts[i], cuts[i + 1]);
  return acc;
}

// Stieltjes constant gamma_n by Euler-Maclaurin on sum (log k)^n / k, cut at N.
inline long double stieltjes(int n) {
  const int N = 200;
  const int K = 12;  // Bernoulli terms
  long double sum = 0.0L;
  for (int k = 2; k < N; ++k) sum += std::pow(std::log(static_cast<long double>(k)), n) / k;
  if (n == 0) sum += 1.0L;
  const long double lN = std::log(static_cast<long double>(N));
  sum -= std::pow(lN, n + 1) / (n + 1);
  sum += std::pow(lN, n) / (2.0L * N);
  // Taylor coefficients of f(N + h) = log(N + h)^n / (N + h) in h
  const int D = 2 * K + 1;
  std::vector<long double> lg(D + 1, 0.0L), inv(D + 1, 0.0L), pw(D + 1, 0.0L);
  lg[0] = lN;
  for (int i = 1; i <= D; ++i) lg[i] = ((i % 2) ? 1.0L : -1.0L) / (i * std::pow(static_cast<long double>(N), i));
  for (int i = 0; i <= D; ++i) inv[i] = ((i % 2) ? -1.0L : 1.0L) / std::pow(static_cast<long double>(N), i + 1);
  pw[0] = 1.0L;
  for (int p = 0; p < n; ++p) {
    std::vector<long double> next(D + 1, 0.0L);
    for (int i = 0; i <= D; ++i)
      for (int j = 0; i + j <= D; ++j) next[i + j] += pw[i] * lg[j];
    pw = next;
  }
  std::vector<long double> f(D + 1, 0.0L);
  for (int i = 0; i <= D; ++i)
    for (int j = 0; i + j <= D; ++j) f[i + j] += pw[i] * inv[j];
  // - sum_k B_2k / (2k)! f^{(2k-1)}(N), with f^{(m)}(N) = m! f[m]
  long double fact = 1.0L;  // (2k-1)!
  for (int k = 1; k <= K; ++k) {
    if (k > 1) fact *= (2.0L * k - 2) * (2.0L * k - 1);
    const long double b = boost::math::bernoulli_b2n<long double>(k);
    const long double deriv = fact * f[2 * k - 1];
    sum -= b / (fact * 2.0L * k) * deriv;
  }
  return sum;
}

inline double zeta_real(double s) { return boost::math::zeta(s); }

// int_0^a e^w w^{theta - 1} dw = a^theta sum a^k / (k! (k + theta)), Re theta > 0
inline cplx power_exp_integral(double a, cplx theta) {
  lcplx th(theta.real(), theta.imag());
  lcplx acc = 0.0L;
  long double term = 1.0L;
  for (int k = 0; k < 400; ++k) {
    if (k > 0) term *= static_cast<long double>(a) / k;
    acc += term / (static_cast<long double>(k) + th);
    if (term < 1e-30L) break;
  }
  acc *= std::pow(lcplx(a, 0.0L), th);
  return {double(acc.real()), double(acc.imag())};
}

inline int omega_trial(std::uint64_t n) {
  int w = 0;
  for (std::uint64_t p = 2; p * p <= n; ++p)
    if (n % p == 0) {
      ++w;
      while (n % p == 0) n /= p;
    }
  return w + (n > 1 ? 1 : 0);
}

inline std::uint64_t largest_prime_factor(std::uint64_t n) {
  std::uint64_t big = 1;
  for (std::uint64_t p = 2; p * p <= n; ++p)
    while (n % p == 0) {
      big = p;
      n /= p;
    }
  return n > 1 ? n : big;
}

}  // namespace oracle
