#include "frkt/quadrature.hpp"

#include <cmath>

namespace frkt::quad {

Rule gauss_legendre(int n) {
  if (n < 1) throw DomainError("gauss_legendre: n must be positive");
  Rule r;
  r.nodes.resize(n);
  r.weights.resize(n);
  for (int i = 0; i < (n + 1) / 2; ++i) {
    double x = std::cos(kPi * (i + 0.75) / (n + 0.5));
    double dp = 0.0;
    for (int it = 0; it < 100; ++it) {
      double p0 = 1.0, p1 = x;
      for (int k = 2; k <= n; ++k) {
        const double p2 = ((2 * k - 1) * x * p1 - (k - 1) * p0) / k;
        p0 = p1;
        p1 = p2;
      }
      dp = n * (x * p1 - p0) / (x * x - 1.0);
      const double dx = p1 / dp;
      x -= dx;
      if (std::abs(dx) < 1e-16) break;
    }
    // recompute derivative at the converged node
    double p0 = 1.0, p1 = x;
    for (int k = 2; k <= n; ++k) {
      const double p2 = ((2 * k - 1) * x * p1 - (k - 1) * p0) / k;
      p0 = p1;
      p1 = p2;
    }
    dp = n * (x * p1 - p0) / (x * x - 1.0);
    const double w = 2.0 / ((1.0 - x * x) * dp * dp);
    r.nodes[i] = -x;
    r.nodes[n - 1 - i] = x;
    r.weights[i] = w;
    r.weights[n - 1 - i] = w;
  }
  if (n % 2 == 1) r.nodes[n / 2] = 0.0;
  return r;
}

PowerWeightedRule::PowerWeightedRule(cplx exponent, int levels, int points)
    : exponent_(exponent) {
  if (exponent.real() <= -1.0) throw DomainError("PowerWeightedRule: Re exponent must exceed -1");
  const Rule gl = gauss_legendre(points);
  nodes_.reserve(static_cast<std::size_t>(levels) * points);
  weights_.reserve(nodes_.capacity());
  double hi = 1.0;
  for (int k = 0; k < levels; ++k) {
    const double lo = 0.25 * hi;
    const double half = 0.5 * (hi - lo), mid = 0.5 * (hi + lo);
    for (int i = 0; i < points; ++i) {
      const double t = mid + half * gl.nodes[i];
      nodes_.push_back(t);
      weights_.push_back(gl.weights[i] * half * std::exp(exponent * std::log(t)));
    }
    hi = lo;
  }
  const cplx e1 = exponent + 1.0;
  head_ = std::exp(e1 * std::log(hi)) / e1;
}

}  // namespace frkt::quad
