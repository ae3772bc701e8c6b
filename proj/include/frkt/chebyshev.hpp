#pragma once

#include <span>
#include <vector>

#include "frkt/core.hpp"

namespace frkt {

// Chebyshev series on the unit interval s in [0, 1] (x = 2s - 1).
class ChebSeries {
 public:
  ChebSeries() = default;
  explicit ChebSeries(std::vector<cplx> coefficients) : c_(std::move(coefficients)) {}

  // Lobatto points s_k = (1 + cos(pi k / n)) / 2, k = 0..n.
  static std::vector<double> nodes(int degree);
  static ChebSeries from_values(std::span<const cplx> values);
  static ChebSeries constant(cplx value) { return ChebSeries({value}); }

  cplx operator()(double s) const;
  ChebSeries derivative() const;
  // Antiderivative vanishing at s = 0.
  ChebSeries integral() const;

  bool empty() const { return c_.empty(); }
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  const std::vector<cplx>& coefficients() const { return c_; }

 private:
  std::vector<cplx> c_;
};

}  // namespace frkt
