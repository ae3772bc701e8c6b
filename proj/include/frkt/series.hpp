#pragma once

#include <vector>

#include "frkt/core.hpp"

namespace frkt {

// Truncated power series sum_{j<=J} c_j (s - center)^j.
class SeriesPoly {
 public:
  SeriesPoly() = default;
  SeriesPoly(std::vector<cplx> coefficients, cplx center = 0.0);
  static SeriesPoly constant(cplx value, int order, cplx center = 0.0);
  // c0 + c1 (s - center)
  static SeriesPoly linear(cplx c0, cplx c1, int order, cplx center = 0.0);

  int order() const { return static_cast<int>(c_.size()) - 1; }
  cplx center() const { return center_; }
  const std::vector<cplx>& coefficients() const { return c_; }
  // a_j with the convention a_j = 0 outside 0..J
  cplx operator[](int j) const;
  cplx& at(int j) { return c_.at(j); }
  cplx evaluate(cplx s) const;

  SeriesPoly& operator+=(const SeriesPoly& o);
  SeriesPoly& operator-=(const SeriesPoly& o);
  SeriesPoly& operator*=(cplx k);

  friend SeriesPoly operator+(SeriesPoly a, const SeriesPoly& b) { return a += b; }
  friend SeriesPoly operator-(SeriesPoly a, const SeriesPoly& b) { return a -= b; }
  friend SeriesPoly operator*(SeriesPoly a, cplx k) { return a *= k; }
  friend SeriesPoly operator*(cplx k, SeriesPoly a) { return a *= k; }
  friend SeriesPoly operator*(const SeriesPoly& a, const SeriesPoly& b);
  friend SeriesPoly operator/(const SeriesPoly& a, const SeriesPoly& b);

 private:
  std::vector<cplx> c_;
  cplx center_ = 0.0;
};

SeriesPoly inverse(const SeriesPoly& a);
SeriesPoly exp(const SeriesPoly& a);
// Principal log of the constant term plus the log of the normalized series.
SeriesPoly log(const SeriesPoly& a);
// exp(z log a), which needs a nonzero constant term.
SeriesPoly pow(const SeriesPoly& a, cplx z);

}  // namespace frkt
