#include "frkt/series.hpp"

#include <algorithm>
#include <cmath>

namespace frkt {

namespace {

void check_compatible(const SeriesPoly& a, const SeriesPoly& b) {
  if (a.center() != b.center()) throw DomainError("SeriesPoly: expansion centers differ");
}

}  // namespace

SeriesPoly::SeriesPoly(std::vector<cplx> coefficients, cplx center)
    : c_(std::move(coefficients)), center_(center) {
  if (c_.empty()) c_.push_back(0.0);
}

SeriesPoly SeriesPoly::constant(cplx value, int order, cplx center) {
  std::vector<cplx> c(order + 1, 0.0);
  c[0] = value;
  return SeriesPoly(std::move(c), center);
}

SeriesPoly SeriesPoly::linear(cplx c0, cplx c1, int order, cplx center) {
  std::vector<cplx> c(order + 1, 0.0);
  c[0] = c0;
  if (order >= 1) c[1] = c1;
  return SeriesPoly(std::move(c), center);
}

cplx SeriesPoly::operator[](int j) const {
  if (j < 0 || j > order()) return 0.0;
  return c_[j];
}

cplx SeriesPoly::evaluate(cplx s) const {
  cplx acc = 0.0;
  const cplx t = s - center_;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * t + *it;
  return acc;
}

SeriesPoly& SeriesPoly::operator+=(const SeriesPoly& o) {
  check_compatible(*this, o);
  c_.resize(std::min(c_.size(), o.c_.size()));
  for (std::size_t j = 0; j < c_.size(); ++j) c_[j] += o.c_[j];
  return *this;
}

SeriesPoly& SeriesPoly::operator-=(const SeriesPoly& o) {
  check_compatible(*this, o);
  c_.resize(std::min(c_.size(), o.c_.size()));
  for (std::size_t j = 0; j < c_.size(); ++j) c_[j] -= o.c_[j];
  return *this;
}

SeriesPoly& SeriesPoly::operator*=(cplx k) {
  for (auto& v : c_) v *= k;
  return *this;
}

SeriesPoly operator*(const SeriesPoly& a, const SeriesPoly& b) {
  check_compatible(a, b);
  const int n = std::min(a.order(), b.order());
  std::vector<cplx> c(n + 1, 0.0);
  for (int i = 0; i <= n; ++i)
    for (int j = 0; i + j <= n; ++j) c[i + j] += a.c_[i] * b.c_[j];
  return SeriesPoly(std::move(c), a.center());
}

SeriesPoly inverse(const SeriesPoly& a) {
  if (a[0] == cplx(0.0)) throw DomainError("SeriesPoly: inverse needs a nonzero constant term");
  const int n = a.order();
  std::vector<cplx> r(n + 1, 0.0);
  r[0] = 1.0 / a[0];
  for (int k = 1; k <= n; ++k) {
    cplx acc = 0.0;
    for (int i = 1; i <= k; ++i) acc += a[i] * r[k - i];
    r[k] = -acc * r[0];
  }
  return SeriesPoly(std::move(r), a.center());
}

SeriesPoly operator/(const SeriesPoly& a, const SeriesPoly& b) { return a * inverse(b); }

SeriesPoly exp(const SeriesPoly& a) {
  const int n = a.order();
  std::vector<cplx> e(n + 1, 0.0);
  e[0] = std::exp(a[0]);
  for (int k = 1; k <= n; ++k) {
    cplx acc = 0.0;
    for (int i = 1; i <= k; ++i) acc += double(i) * a[i] * e[k - i];
    e[k] = acc / double(k);
  }
  return SeriesPoly(std::move(e), a.center());
}

SeriesPoly log(const SeriesPoly& a) {
  if (a[0] == cplx(0.0)) throw DomainError("SeriesPoly: log needs a nonzero constant term");
  const int n = a.order();
  std::vector<cplx> g(n + 1);
  for (int k = 0; k <= n; ++k) g[k] = a[k] / a[0];
  std::vector<cplx> l(n + 1, 0.0);
  l[0] = std::log(a[0]);
  for (int k = 1; k <= n; ++k) {
    cplx acc = double(k) * g[k];
    for (int i = 1; i < k; ++i) acc -= double(i) * l[i] * g[k - i];
    l[k] = acc / double(k);
  }
  return SeriesPoly(std::move(l), a.center());
}

SeriesPoly pow(const SeriesPoly& a, cplx z) { return exp(log(a) * z); }

}  // namespace frkt
