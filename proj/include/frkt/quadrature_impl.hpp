#pragma once

#include <array>
#include <cmath>
#include <utility>
#include <vector>

namespace frkt::quad {

namespace detail {

inline constexpr std::array<double, 8> kKronrodNodes = {
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
    0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
    0.586087235467691130294144845693013, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.000000000000000000000000000000000};

inline constexpr std::array<double, 8> kKronrodWeights = {
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714};

// Gauss weights for the odd Kronrod nodes (indices 1, 3, 5, 7).
inline constexpr std::array<double, 4> kGaussWeights = {
    0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
    0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

template <class F>
std::pair<double, double> gk15(F& f, double a, double b) {
  const double c = 0.5 * (a + b);
  const double h = 0.5 * (b - a);
  const double fc = f(c);
  double kron = kKronrodWeights[7] * fc;
  double gauss = kGaussWeights[3] * fc;
  for (int i = 0; i < 7; ++i) {
    const double dx = h * kKronrodNodes[i];
    const double s = f(c - dx) + f(c + dx);
    kron += kKronrodWeights[i] * s;
    if (i % 2 == 1) gauss += kGaussWeights[i / 2] * s;
  }
  return {kron * h, std::abs((kron - gauss) * h)};
}

}  // namespace detail

template <class F>
AdaptiveResult adaptive(F&& f, double a, double b, double tol, int max_depth) {
  struct Item {
    double a, b;
    int depth;
  };
  AdaptiveResult out;
  std::vector<Item> stack{{a, b, 0}};
  const double width = b - a;
  while (!stack.empty()) {
    Item it = stack.back();
    stack.pop_back();
    auto [val, err] = detail::gk15(f, it.a, it.b);
    out.evaluations += 15;
    const double budget = tol * (it.b - it.a) / width;
    if (err <= budget || it.depth >= max_depth) {
      out.value += val;
      out.error += err;
      continue;
    }
    const double m = 0.5 * (it.a + it.b);
    stack.push_back({it.a, m, it.depth + 1});
    stack.push_back({m, it.b, it.depth + 1});
  }
  return out;
}

}  // namespace frkt::quad
