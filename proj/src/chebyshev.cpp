#include "frkt/chebyshev.hpp"

#include <cmath>

namespace frkt {

std::vector<double> ChebSeries::nodes(int degree) {
  std::vector<double> s(degree + 1);
  for (int k = 0; k <= degree; ++k) s[k] = 0.5 * (1.0 + std::cos(kPi * k / degree));
  // pin the endpoints exactly
  s[0] = 1.0;
  s[degree] = 0.0;
  return s;
}

ChebSeries ChebSeries::from_values(std::span<const cplx> values) {
  const int n = static_cast<int>(values.size()) - 1;
  if (n < 1) return ChebSeries({values.empty() ? cplx(0.0) : values[0]});
  std::vector<cplx> c(n + 1);
  for (int j = 0; j <= n; ++j) {
    cplx sum = 0.0;
    for (int k = 0; k <= n; ++k) {
      double w = std::cos(kPi * static_cast<double>((static_cast<long>(j) * k) % (2 * n)) / n);
      if (k == 0 || k == n) w *= 0.5;
      sum += w * values[k];
    }
    c[j] = sum * (2.0 / n);
  }
  c[0] *= 0.5;
  c[n] *= 0.5;
  return ChebSeries(std::move(c));
}

cplx ChebSeries::operator()(double s) const {
  if (c_.empty()) return 0.0;
  const double x = 2.0 * s - 1.0;
  cplx b1 = 0.0, b2 = 0.0;
  for (std::size_t j = c_.size() - 1; j >= 1; --j) {
    const cplx b0 = 2.0 * x * b1 - b2 + c_[j];
    b2 = b1;
    b1 = b0;
  }
  return x * b1 - b2 + c_[0];
}

ChebSeries ChebSeries::derivative() const {
  const int n = degree();
  if (n < 1) return ChebSeries({cplx(0.0)});
  std::vector<cplx> d(n, 0.0);
  // d/dx recurrence, then the chain factor 2 for s
  cplx next = 0.0, next2 = 0.0;
  for (int j = n; j >= 1; --j) {
    const cplx v = next2 + 2.0 * j * c_[j];
    d[j - 1] = v;
    next2 = next;
    next = v;
  }
  d[0] *= 0.5;
  for (auto& v : d) v *= 2.0;
  return ChebSeries(std::move(d));
}

ChebSeries ChebSeries::integral() const {
  const int n = degree();
  if (n < 0) return {};
  std::vector<cplx> c(c_);
  c.resize(n + 3, 0.0);
  std::vector<cplx> out(n + 2, 0.0);
  for (int j = 1; j <= n + 1; ++j) {
    const cplx lower = (j == 1) ? 2.0 * c[0] : c[j - 1];
    out[j] = (lower - c[j + 1]) / (2.0 * j) * 0.5;
  }
  cplx at_minus_one = 0.0;
  for (int j = 1; j <= n + 1; ++j) at_minus_one += (j % 2 ? -1.0 : 1.0) * out[j];
  out[0] = -at_minus_one;
  return ChebSeries(std::move(out));
}

}  // namespace frkt
