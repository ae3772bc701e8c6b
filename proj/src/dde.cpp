#include "frkt/dde.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "frkt/quadrature.hpp"

namespace frkt::dde {

using specfun::rgamma;

const char* kind_name(Kind k) {
  switch (k) {
    case Kind::G: return "G";
    case Kind::RHO: return "RHO";
    case Kind::PHI: return "PHI";
  }
  return "?";
}

namespace {

bool is_nonneg_integer(cplx e) {
  return e.imag() == 0.0 && e.real() >= 0.0 && e.real() == std::floor(e.real());
}

cplx power(double s, cplx e) {
  if (s == 0.0) {
    if (e == cplx(0.0)) return 1.0;
    if (e.real() > 0.0) return 0.0;
    return {HUGE_VAL, 0.0};
  }
  return std::exp(e * std::log(s));
}

cplx eval_segment(const Segment& seg, double s) {
  cplx out = seg.smooth(s);
  if (!seg.singular.empty()) out += power(s, seg.exponent) * seg.singular(s);
  return out;
}

bool all_finite(const std::vector<cplx>& v) {
  return std::all_of(v.begin(), v.end(),
                     [](cplx c) { return std::isfinite(c.real()) && std::isfinite(c.imag()); });
}

// Largest abscissa covered by the table.
double coverage(const SolutionTable& tab) { return static_cast<double>(tab.segments().size()); }

}  // namespace

SolutionTable::SolutionTable(Kind kind, const ZParams& zp, double v_max, std::vector<Segment> segments)
    : kind_(kind), zp_(zp), v_max_(v_max), segments_(std::move(segments)) {
  b_ = zp.z;
  switch (kind) {
    case Kind::G:
      a_ = 0.0;
      alpha_ = 0.0;
      break;
    case Kind::RHO:
      a_ = 1.0 - zp.z;
      alpha_ = zp.z - 1.0;
      break;
    case Kind::PHI:
      a_ = zp.theta_z;
      alpha_ = -zp.theta_z;
      break;
  }
}

cplx SolutionTable::initial(double v, int j) const {
  return power(v, alpha_ - double(j)) * rgamma(alpha_ + 1.0 - double(j));
}

cplx SolutionTable::value(double v) const {
  if (v < 0.0) return 0.0;
  if (v == 0.0) return kind_ == Kind::G ? cplx(1.0) : cplx(0.0);
  if (v <= 1.0) return initial(v, 0);
  const double top = coverage(*this);
  if (v > top * (1.0 + 1e-14)) throw RangeError("SolutionTable: v beyond the solved range");
  int h = static_cast<int>(std::floor(v));
  if (h >= static_cast<int>(segments_.size())) h = static_cast<int>(segments_.size()) - 1;
  return eval_segment(segments_[h], std::min(v - h, 1.0));
}

cplx SolutionTable::slope(double v) const {
  if (v <= 0.0) return 0.0;
  if (v < 1.0) return initial(v, 1);
  const double top = coverage(*this);
  if (v > top * (1.0 + 1e-14)) throw RangeError("SolutionTable: v beyond the solved range");
  int h = static_cast<int>(std::floor(v));
  if (h >= static_cast<int>(segments_.size())) h = static_cast<int>(segments_.size()) - 1;
  const double s = std::min(v - h, 1.0);
  const Segment& seg = segments_[h];
  cplx out = seg.smooth.derivative()(s);
  if (!seg.singular.empty()) {
    const cplx e = seg.exponent;
    out += e * power(s, e - 1.0) * seg.singular(s) + power(s, e) * seg.singular.derivative()(s);
  }
  return out;
}

namespace {

// Value-space operators on the Lobatto nodes of one unit segment.
class Collocation {
 public:
  explicit Collocation(int degree) : n_(degree), s_(ChebSeries::nodes(degree)), bary_(degree + 1) {
    for (int k = 0; k <= n_; ++k) bary_[k] = ((k % 2) ? -1.0 : 1.0) * ((k == 0 || k == n_) ? 0.5 : 1.0);
    // Q(i, k) = int_0^{s_i} l_k
    q_.assign((n_ + 1) * (n_ + 1), 0.0);
    std::vector<cplx> unit(n_ + 1, 0.0);
    for (int k = 0; k <= n_; ++k) {
      unit[k] = 1.0;
      const ChebSeries integral = ChebSeries::from_values(unit).integral();
      for (int i = 0; i <= n_; ++i) q_[i * (n_ + 1) + k] = integral(s_[i]).real();
      unit[k] = 0.0;
    }
  }

  int size() const { return n_ + 1; }
  const std::vector<double>& nodes() const { return s_; }
  double q(int i, int k) const { return q_[i * (n_ + 1) + k]; }

  // Lagrange basis values at x.
  void lagrange(double x, std::vector<double>& out) const {
    out.assign(n_ + 1, 0.0);
    double denom = 0.0;
    for (int k = 0; k <= n_; ++k) {
      const double d = x - s_[k];
      if (d == 0.0) {
        out.assign(n_ + 1, 0.0);
        out[k] = 1.0;
        return;
      }
      out[k] = bary_[k] / d;
      denom += out[k];
    }
    for (auto& v : out) v /= denom;
  }

  // W(i, k) = int_0^1 t^e l_k(s_i t) dt, so that
  // int_0^{s_i} sigma^e B(sigma) dsigma = s_i^{e+1} sum_k W(i, k) B_k.
  std::vector<cplx> weighted(cplx e) const {
    const quad::PowerWeightedRule rule(e);
    const int m = n_ + 1;
    std::vector<cplx> w(m * m, 0.0);
    std::vector<double> basis;
    for (int i = 0; i < m; ++i) {
      cplx* row = &w[i * m];
      lagrange(0.0, basis);
      for (int k = 0; k < m; ++k) row[k] += rule.head() * basis[k];
      for (std::size_t t = 0; t < rule.nodes().size(); ++t) {
        lagrange(s_[i] * rule.nodes()[t], basis);
        const cplx wt = rule.weights()[t];
        for (int k = 0; k < m; ++k) row[k] += wt * basis[k];
      }
    }
    return w;
  }

 private:
  int n_;
  std::vector<double> s_;
  std::vector<double> bary_;
  std::vector<double> q_;
};

// Dense complex solve by Gaussian elimination with partial pivoting.
std::vector<cplx> solve_dense(std::vector<cplx> M, std::vector<cplx> rhs) {
  const int n = static_cast<int>(rhs.size());
  for (int c = 0; c < n; ++c) {
    int piv = c;
    for (int r = c + 1; r < n; ++r)
      if (std::abs(M[r * n + c]) > std::abs(M[piv * n + c])) piv = r;
    if (M[piv * n + c] == cplx(0.0)) throw SolverError("solve_system: singular collocation matrix");
    if (piv != c) {
      for (int k = 0; k < n; ++k) std::swap(M[c * n + k], M[piv * n + k]);
      std::swap(rhs[c], rhs[piv]);
    }
    for (int r = c + 1; r < n; ++r) {
      const cplx f = M[r * n + c] / M[c * n + c];
      if (f == cplx(0.0)) continue;
      for (int k = c; k < n; ++k) M[r * n + k] -= f * M[c * n + k];
      rhs[r] -= f * rhs[c];
    }
  }
  for (int r = n - 1; r >= 0; --r) {
    cplx acc = rhs[r];
    for (int k = r + 1; k < n; ++k) acc -= M[r * n + k] * rhs[k];
    rhs[r] = acc / M[r * n + r];
  }
  return rhs;
}

}  // namespace

// Integrating the equation from 0 gives v f(v) = (1-a) int_0^v f - b int_0^{v-1} f.
// For RHO (1-a = b) this is v f(v) = z int_{v-1}^v f, free of cancellation.
// Each segment solves this Volterra equation by collocation, separately for
// the smooth part and for the s^e part.
SolutionTable solve_system(Kind kind, const ZParams& zp, double v_max, const SolverOptions& opt) {
  if (kind == Kind::RHO && !(zp.z.real() > 0.0))
    throw DomainError("solve_system: RHO requires Re z > 0");
  if (!(v_max >= 1.0) || !std::isfinite(v_max)) throw DomainError("solve_system: v_max must be at least 1");
  if (opt.cheb_degree < 4) throw DomainError("solve_system: Chebyshev degree too small");

  SolutionTable tab(kind, zp, v_max, {});
  const cplx a = tab.a(), b = tab.b(), alpha = tab.alpha();
  const cplx c1 = 1.0 - a;
  const int N = opt.cheb_degree;
  const int m = N + 1;
  const Collocation col(N);
  const std::vector<double>& s = col.nodes();
  const int H = std::max(0, static_cast<int>(std::ceil(v_max)) - 1);

  // previous segment in value space
  std::vector<cplx> A_prev(m, 0.0), B_prev;
  cplx e_prev = alpha;
  if (is_nonneg_integer(alpha)) {
    for (int i = 0; i < m; ++i) A_prev[i] = power(s[i], alpha) * rgamma(alpha + 1.0);
  } else {
    B_prev.assign(m, rgamma(alpha + 1.0));
  }

  std::vector<Segment> segs;
  segs.reserve(H + 1);
  {
    Segment first;
    first.smooth = ChebSeries::from_values(A_prev);
    if (!B_prev.empty()) {
      first.singular = ChebSeries::from_values(B_prev);
      first.exponent = alpha;
    }
    segs.push_back(std::move(first));
  }

  std::vector<cplx> W_prev;
  if (!B_prev.empty()) W_prev = col.weighted(e_prev);
  cplx T_prev = 0.0;  // int_0^{h-1} f
  const int top = 0;  // node index of s = 1

  for (int h = 1; h <= H; ++h) {
    const double hd = h;
    // int_0^{s_i} prev, split by part
    std::vector<cplx> IA(m, 0.0), IB(m, 0.0);
    for (int i = 0; i < m; ++i) {
      cplx acc = 0.0;
      for (int k = 0; k < m; ++k) acc += col.q(i, k) * A_prev[k];
      IA[i] = acc;
    }
    if (!B_prev.empty()) {
      for (int i = 0; i < m; ++i) {
        cplx acc = 0.0;
        for (int k = 0; k < m; ++k) acc += W_prev[i * m + k] * B_prev[k];
        IB[i] = acc;
      }
    }
    const cplx P1 = IA[top] + IB[top];

    // smooth part: (h+s) A - c1 Q A = (c1 - b) T_{h-1} + c1 P1 - b Q A_prev
    std::vector<cplx> M(m * m), rhs(m);
    for (int i = 0; i < m; ++i) {
      for (int k = 0; k < m; ++k) M[i * m + k] = -c1 * col.q(i, k);
      M[i * m + i] += hd + s[i];
      rhs[i] = (c1 - b) * T_prev + c1 * P1 - b * IA[i];
    }
    std::vector<cplx> A = solve_dense(M, rhs);

    Segment seg;
    seg.smooth = ChebSeries::from_values(A);
    std::vector<cplx> B;
    std::vector<cplx> W_next;
    if (!B_prev.empty()) {
      // s^{e+1} part: (h+s) B - c1 s W^{(e+1)} B = -b W^{(e)} B_prev
      const cplx e_next = e_prev + 1.0;
      W_next = col.weighted(e_next);
      for (int i = 0; i < m; ++i) {
        for (int k = 0; k < m; ++k) M[i * m + k] = -c1 * s[i] * W_next[i * m + k];
        M[i * m + i] += hd + s[i];
        rhs[i] = -b * IB[i];
      }
      B = solve_dense(M, rhs);
      seg.singular = ChebSeries::from_values(B);
      seg.exponent = e_next;
      e_prev = e_next;
    }
    if (!all_finite(A) || !all_finite(B))
      throw SolverError("solve_system: non-finite values on segment [" + std::to_string(h) + ", " +
                        std::to_string(h + 1) + "]");
    segs.push_back(std::move(seg));
    T_prev += P1;
    A_prev = std::move(A);
    B_prev = std::move(B);
    W_prev = std::move(W_next);
  }

  tab.segments_ = std::move(segs);
  if (zp.is_integer()) {
    const int mz = static_cast<int>(zp.z.real());
    const bool matches = (mz >= 1 && (kind == Kind::RHO || (mz == 1 && kind == Kind::PHI))) ||
                         (mz <= -1 && kind == Kind::PHI);
    if (matches) tab.jumps_ = jump_table(tab, std::max(8, mz));
  }
  return tab;
}

namespace {

cplx derivative_at_zero(const SolutionTable& tab, int j) {
  const cplx e = tab.alpha() - double(j);
  const cplx c = rgamma(e + 1.0);
  if (c == cplx(0.0)) return 0.0;
  if (e == cplx(0.0)) return c;
  if (e.real() > 0.0) return 0.0;
  throw SmoothnessError("eval_derivative: derivative of order " + std::to_string(j) +
                        " is unbounded at 0+");
}

cplx derivative(const SolutionTable& tab, int j, double v, Side side) {
  if (v < 0.0) return 0.0;
  if (v == 0.0) return side == Side::Left ? cplx(0.0) : derivative_at_zero(tab, j);
  if (v < 1.0 || (v == 1.0 && side == Side::Left)) return tab.initial(v, j);
  if (j == 0) return tab.value(v);
  const cplx here = derivative(tab, j - 1, v, side);
  const cplx back = derivative(tab, j - 1, v - 1.0, side);
  return -((tab.a() + double(j - 1)) * here + tab.b() * back) / v;
}

}  // namespace

cplx eval_derivative(const SolutionTable& tab, int j, double v, Side side) {
  if (j < 0) throw DomainError("eval_derivative: negative order");
  if (j > kMaxDerivativeOrder)
    throw UnsupportedOrderError("eval_derivative: order above " + std::to_string(kMaxDerivativeOrder));
  if (!(v > 0.0)) throw DomainError("eval_derivative: requires v > 0");
  if (v > coverage(tab) * (1.0 + 1e-14)) throw RangeError("eval_derivative: v beyond the solved range");
  if (side == Side::Auto) {
    if (v == std::floor(v)) {
      const cplx left = derivative(tab, j, v, Side::Left);
      const cplx right = derivative(tab, j, v, Side::Right);
      if (std::abs(left - right) > 1e-9 * (1.0 + std::abs(left) + std::abs(right)))
        throw SmoothnessError("eval_derivative: order " + std::to_string(j) + " jumps at v = " +
                              std::to_string(static_cast<long>(v)) + "; request a side");
      return right;
    }
    side = Side::Right;
  }
  return derivative(tab, j, v, side);
}

cplx jump(const SolutionTable& tab, int h, int j) {
  if (h < 1) throw DomainError("jump: h must be at least 1");
  return eval_derivative(tab, j, h, Side::Right) - eval_derivative(tab, j, h, Side::Left);
}

std::vector<Jump> jump_table(const SolutionTable& tab, int J) {
  const ZParams& zp = tab.zp();
  if (!zp.is_integer()) throw DomainError("jump_table: z must be an integer");
  const int m = static_cast<int>(zp.z.real());
  if (m >= 1 && J < m) throw DomainError("jump_table: J must be at least m");
  const int h_top = static_cast<int>(std::floor(coverage(tab)));
  std::vector<Jump> out;
  for (int j = 0; j <= std::min(J, kMaxDerivativeOrder); ++j) {
    const int h_max = std::min(m >= 1 ? j + 1 - m : j, h_top);
    for (int h = 1; h <= h_max; ++h) out.push_back({h, j, jump(tab, h, j)});
  }
  return out;
}

LaplaceResult laplace_transform(const SolutionTable& tab, cplx s, double V) {
  if (!(s.real() > 0.0)) throw DomainError("laplace_transform: requires Re s > 0");
  if (!(V >= 1.0) || V > coverage(tab) * (1.0 + 1e-14))
    throw RangeError("laplace_transform: V outside the solved range");
  static const quad::Rule gl = quad::gauss_legendre(32);
  const auto& segs = tab.segments();

  const quad::PowerWeightedRule head_rule(tab.alpha());
  cplx total = rgamma(tab.alpha() + 1.0) * head_rule.integrate([&](double t) { return std::exp(-s * t); });

  double last_max = std::abs(tab.value(std::min(V, 1.0)));
  for (int h = 1; h < static_cast<int>(segs.size()) && h < V; ++h) {
    const Segment& seg = segs[h];
    const double c = std::min(1.0, V - h);
    const double hd = h;
    total += quad::integrate(gl, 0.0, c, [&](double t) { return seg.smooth(t) * std::exp(-s * (hd + t)); });
    if (!seg.singular.empty()) {
      const quad::PowerWeightedRule rule(seg.exponent);
      const cplx scale = std::exp((seg.exponent + 1.0) * std::log(c));
      total += scale * rule.integrate([&](double t) {
        return seg.singular(c * t) * std::exp(-s * (hd + c * t));
      });
    }
    if (h + 1 >= V) {
      last_max = 0.0;
      for (int k = 0; k <= 16; ++k) last_max = std::max(last_max, std::abs(tab.value(hd + c * k / 16.0)));
    }
  }
  const double sigma = s.real();
  return {total, 2.0 * last_max * std::exp(-sigma * V) / sigma};
}

cplx rho_asym(const ZParams& zp, double v) {
  if (!(zp.z.real() > 0.0)) throw DomainError("rho_asym: requires Re z > 0");
  if (v < 3.0 + std::abs(zp.z)) throw RangeError("rho_asym: requires v >= 3 + |z|");
  const cplx zeta = specfun::solve_zeta0(v / zp.z).root;
  const cplx expo = kEulerGamma * zp.z - v * zeta + zp.z * specfun::eval_I(zeta);
  return std::exp(expo) / std::sqrt(2.0 * kPi * v * (1.0 - 1.0 / zeta));
}

double big_R(const ZParams& zp, double v, double tol) {
  if (!(v >= 1.0)) throw RangeError("big_R: requires v >= 1");
  const double r = std::abs(zp.z);
  auto integrand = [&](double t) { return specfun::solve_zeta0(t / zp.z).root.real(); };
  double integral = 0.0;
  if (v != r) {
    const double lo = std::min(r, v), hi = std::max(r, v);
    integral = quad::adaptive(integrand, lo, hi, tol).value;
    if (v < r) integral = -integral;
  }
  return std::exp(-integral) / std::sqrt(v);
}

SeriesPoly taylor_c(const ZParams& zp, int J) {
  if (J < 0) throw DomainError("taylor_c: J must be non-negative");
  std::vector<cplx> c(J + 1, 0.0);
  c[0] = kEulerGamma;
  double fact = 1.0;
  for (int n = 1; n <= J; ++n) {
    fact *= n;
    c[n] = (n % 2 ? -1.0 : 1.0) / (n * fact);
  }
  return exp(SeriesPoly(std::move(c)) * zp.z);
}

cplx g_large_v(const ZParams& zp, double v, int J) {
  if (!(v > 0.0)) throw DomainError("g_large_v: requires v > 0");
  const SeriesPoly c = taylor_c(zp, J);
  cplx sum = 0.0;
  for (int j = 0; j <= J; ++j) {
    const cplx e = zp.z + double(j);
    sum += c[j] * std::exp(-e * std::log(v)) * rgamma(1.0 - e);
  }
  return sum;
}

namespace {

SolutionTable psi_table(const ZParams& zp, double v_max, const SolverOptions& opt) {
  return solve_system(zp.z.real() > 0.0 ? Kind::RHO : Kind::PHI, zp, v_max, opt);
}

}  // namespace

PsiEvaluator::PsiEvaluator(const ZParams& zp, double v_max, const SolverOptions& opt)
    : table_(psi_table(zp, v_max, opt)), offset_(zp.z.real() > 0.0 ? 0 : zp.m + 1) {}

cplx PsiEvaluator::operator()(int j, double u, Side side) const {
  return eval_derivative(table_, j + offset_, u, side);
}

PsiEvaluator psi_dispatch(const ZParams& zp, double v_max, const SolverOptions& opt) {
  return PsiEvaluator(zp, v_max, opt);
}

}  // namespace frkt::dde
