#pragma once

#include <cmath>
#include <vector>

#include "frkt/core.hpp"

namespace frkt::quad {

// Nodes and weights on [-1, 1].
struct Rule {
  std::vector<double> nodes;
  std::vector<double> weights;
};

Rule gauss_legendre(int n);

template <class F>
auto integrate(const Rule& rule, double a, double b, F&& f) {
  const double half = 0.5 * (b - a);
  const double mid = 0.5 * (a + b);
  decltype(f(mid)) sum{};
  for (std::size_t i = 0; i < rule.nodes.size(); ++i)
    sum += rule.weights[i] * f(mid + half * rule.nodes[i]);
  return sum * half;
}

// Integral of t^e q(t) over [0, 1] for smooth q and Re e > -1. Panels are
// geometric towards 0; the leftover sliver [0, eps] is taken as q(0) eps^(e+1)/(e+1).
class PowerWeightedRule {
 public:
  explicit PowerWeightedRule(cplx exponent, int levels = 26, int points = 16);

  template <class Q>
  cplx integrate(Q&& q) const {
    cplx sum = head_ * cplx(q(0.0));
    for (std::size_t i = 0; i < nodes_.size(); ++i) sum += weights_[i] * cplx(q(nodes_[i]));
    return sum;
  }

  cplx exponent() const { return exponent_; }
  const std::vector<double>& nodes() const { return nodes_; }
  const std::vector<cplx>& weights() const { return weights_; }
  // weight attached to q(0)
  cplx head() const { return head_; }

 private:
  cplx exponent_;
  std::vector<double> nodes_;
  std::vector<cplx> weights_;
  cplx head_;
};

struct AdaptiveResult {
  double value = 0.0;
  double error = 0.0;
  int evaluations = 0;
};

// Gauss-Kronrod 7/15 with interval bisection until the local error estimate
// drops below tol scaled to the interval.
template <class F>
AdaptiveResult adaptive(F&& f, double a, double b, double tol, int max_depth = 40);

}  // namespace frkt::quad

#include "frkt/quadrature_impl.hpp"
