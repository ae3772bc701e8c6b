#include "frkt/asymptotics.hpp"

#include <algorithm>
#include <array>
#include <cmath>

#include "frkt/kernels.hpp"
#include "frkt/primes.hpp"
#include "frkt/quadrature.hpp"

namespace frkt::asym {

namespace {

using kernels::kOmegaMask;

double log_u(double x, double y) { return std::log(x) / std::log(y); }

void check_xy(double x, double y, const char* who) {
  if (!(y >= 2.0) || !(x >= y) || !std::isfinite(x))
    throw DomainError(std::string(who) + ": requires x >= y >= 2");
}

std::array<cplx, kOmegaMask + 1> powers(cplx z) {
  std::array<cplx, kOmegaMask + 1> p{};
  p[0] = 1.0;
  for (std::size_t k = 1; k < p.size(); ++k) p[k] = p[k - 1] * z;
  return p;
}

void require_full(const arith::FriableTable& all, std::uint64_t n, const char* who) {
  if (all.mode() != arith::TableMode::SPF_SIEVE || all.x_max() < n || all.y() < double(n))
    throw RangeError(std::string(who) + ": omega table must cover every n <= " + std::to_string(n));
}

// Support of the DDE tables used below, with a unit of headroom.
double table_span(double u) { return std::max(2.0, std::ceil(u) + 1.0); }

double factorial(int k) { return std::tgamma(k + 1.0); }

}  // namespace

void Settings::validate() const {
  if (!(beta > 0.0)) throw ConfigError("beta: must be positive");
  if (!(delta > 0.0)) throw ConfigError("delta: must be positive");
  if (!(beta + delta < 0.6)) throw ConfigError("beta + delta: must be below 3/5");
  if (!(quad_tol > 0.0)) throw ConfigError("quad_tol: must be positive");
  if (!(newton.tol > 0.0)) throw ConfigError("newton_tol: must be positive");
  if (dde.cheb_degree < 4) throw ConfigError("cheb_degree: must be at least 4");
  if (coeff.P < 1000) throw ConfigError("euler_P: must be at least 1000");
  if (coeff.M < 8) throw ConfigError("cauchy_M: must be at least 8");
  if (!(r_min > 0.0 && r_max > r_min)) throw ConfigError("r_min/r_max: need 0 < r_min < r_max");
  if (!(c_ld > 0.0)) throw ConfigError("c_28: must be positive");
}

bool in_G_beta(double x, double y, double beta) {
  if (!(y <= x)) return false;
  return std::log(y) >= std::pow(std::log(x), 1.0 - beta);
}

double e_y(double y, double beta) {
  if (!(y > std::exp(1.0))) throw DomainError("e_y: requires y > e");
  const double ly = std::log(y);
  return std::pow(std::log(ly), 1.0 / beta) / ly;
}

bool in_V(double u, int J, double y, double beta) {
  if (u < 1.0) return false;
  const double e = e_y(y, beta);
  const int top = static_cast<int>(std::min(std::floor(u), double(J + 1)));
  for (int j = 1; j <= top; ++j)
    if (u - j < e) return false;
  return true;
}

// --- Lambda_f ---------------------------------------------------------------

DriftKernel::DriftKernel(const dde::SolutionTable& g, double L, double w_max, int degree)
    : L_(L), w_max_(w_max) {
  if (g.kind() != dde::Kind::G) throw DomainError("DriftKernel: needs the g_z table");
  if (w_max > double(g.segments().size())) throw RangeError("DriftKernel: g_z table too short");
  const int per_unit = std::max(1, static_cast<int>(std::ceil(L / 2.0)));
  const double width = 1.0 / per_unit;
  static const quad::Rule gl = quad::gauss_legendre(24);
  const auto nodes = ChebSeries::nodes(degree);
  auto gp = [&](double t) { return dde::eval_derivative(g, 1, t, dde::Side::Right); };
  cplx start = std::exp(-L);
  for (int h = 1; h < w_max; ++h) {
    for (int k = 0; k < per_unit && h + k * width < w_max; ++k) {
      const double p = h + k * width;
      std::vector<cplx> vals(nodes.size());
      for (std::size_t i = 0; i < nodes.size(); ++i) {
        const double w = p + nodes[i] * width;
        vals[i] = std::exp(-L * (w - p)) * start;
        if (w > p) vals[i] += quad::integrate(gl, p, w, [&](double t) { return gp(t) * std::exp(-L * (w - t)); });
      }
      pieces_.push_back(ChebSeries::from_values(vals));
      starts_.push_back(p);
      widths_.push_back(width);
      start = pieces_.back()(1.0);
    }
  }
}

cplx DriftKernel::operator()(double w) const {
  if (w < 0.0) return 0.0;
  if (w <= 1.0) return std::exp(-L_ * w);
  if (w > w_max_ * (1.0 + 1e-12)) throw RangeError("DriftKernel: w beyond table");
  auto it = std::upper_bound(starts_.begin(), starts_.end(), w);
  const std::size_t i = std::max<std::ptrdiff_t>(0, (it - starts_.begin()) - 1);
  return pieces_[i](std::clamp((w - starts_[i]) / widths_[i], 0.0, 1.0));
}

LambdaResult lambda_weighted(double x, double y, cplx z, const std::function<cplx(std::uint64_t)>& f,
                             const Settings& s) {
  check_xy(x, y, "lambda_f");
  const double L = std::log(y);
  const double u = log_u(x, y);
  const ZParams zp = ZParams::from(z);
  const auto g = dde::solve_system(dde::Kind::G, zp, table_span(u), s.dde);
  const DriftKernel D(g, L, std::max(u, 1.0));
  const auto N = static_cast<std::uint64_t>(std::floor(x));
  const double logx = std::log(x);
  auto term = [&](std::uint64_t n) -> cplx {
    const cplx fn = f(n);
    if (fn == cplx(0.0)) return 0.0;
    const double w = (logx - std::log(double(n))) / L;
    if (w <= 1.0) return fn;  // (x/n) e^{-Lw} = 1
    return fn * (x / double(n)) * D(w);
  };
  return {kernels::block_sum(1, N, term, s.exec), u};
}

arith::FriableTable omega_table(std::uint64_t x, Exec exec) {
  const double y = std::max(2.0, double(x));
  return arith::FriableTable::from_records(y, x, kernels::friable_records(x, y, std::uint64_t(1) << 22, exec));
}

LambdaResult lambda_f(double x, double y, cplx z, const arith::FriableTable& all, const Settings& s) {
  const auto N = static_cast<std::uint64_t>(std::floor(x));
  require_full(all, N, "lambda_f");
  const auto zp = powers(z);
  const auto& rec = all.records();
  return lambda_weighted(x, y, z, [&](std::uint64_t n) { return zp[rec[n - 1] & kOmegaMask]; }, s);
}

LambdaResult lambda_f(double x, double y, cplx z, const Settings& s) {
  check_xy(x, y, "lambda_f");
  return lambda_f(x, y, z, omega_table(static_cast<std::uint64_t>(std::floor(x)), s.exec), s);
}

// --- expansion --------------------------------------------------------------

namespace {

// psi_z^{(j)}(u), left limit at integers so u = 1 gives the closed form on (0, 1].
cplx psi_at(const dde::PsiEvaluator& psi, int j, double u) {
  return psi(j, u, u == std::floor(u) ? dde::Side::Left : dde::Side::Auto);
}

void check_J(int J) {
  if (J < 0) throw DomainError("expansion: J must be non-negative");
  if (J > 8) throw UnsupportedOrderError("expansion: J <= 8 supported");
}

}  // namespace

cplx main_term_raw(double x, double y, cplx z, int J, const Settings& s) {
  check_xy(x, y, "main_term");
  check_J(J);
  const double L = std::log(y);
  const double u = log_u(x, y);
  const ZParams zp = ZParams::from(z);
  const SeriesPoly a = coeffs::a_coeffs(z, J, s.coeff);
  const auto psi = dde::psi_dispatch(zp, table_span(u), s.dde);
  cplx sum = 0.0;
  for (int j = 0; j <= J; ++j) sum += a[j] * psi_at(psi, j, u) / std::pow(L, j);
  return x * std::exp((z - 1.0) * std::log(L)) * sum;
}

Expansion main_expansion(double x, double y, cplx z, int J, const Settings& s, const arith::FriableTable* all) {
  check_xy(x, y, "main_expansion");
  check_J(J);
  Expansion e;
  e.z = ZParams::from(z);
  e.J = J;
  e.x = x;
  e.y = y;
  e.u = log_u(x, y);
  const double L = std::log(y);
  const int mz = e.z.m_z;
  if (J < mz) e.notes.push_back("J below m_z; the expansion assumes J >= m_z");

  e.in_G_beta = in_G_beta(x, y, s.beta);
  if (!e.in_G_beta) e.notes.push_back("warning: (x, y) outside G_beta; result flagged invalid");

  const int Jz = std::max(0, J + 1 - mz);
  const int ell = static_cast<int>(std::ceil(e.u)) - 1;
  e.in_V = y > std::exp(1.0) && in_V(e.u, Jz, y, s.beta);
  int j_top = J;
  if (!e.in_V) {
    if (e.z.is_integer()) {
      std::optional<arith::FriableTable> own;
      if (!all) {
        own = omega_table(static_cast<std::uint64_t>(std::max(std::floor(x), s.sieve_cap)), s.exec);
        all = &*own;
      }
      const Correction c = correction_terms(x, y, z, J, *all, s);
      e.correction = x * c.U;
      e.notes.push_back("u outside V_J: x U_J added");
    } else {
      e.restricted = true;
      j_top = std::min(J, ell + mz - 1);
      e.notes.push_back("u outside V_J: summation restricted to j < l + m_z");
    }
  }

  const SeriesPoly a = coeffs::a_coeffs(z, J, s.coeff);
  const auto psi = dde::psi_dispatch(e.z, table_span(e.u), s.dde);
  cplx sum = 0.0;
  for (int j = 0; j <= j_top; ++j) {
    const cplx d = psi_at(psi, j, e.u);
    e.terms.push_back({j, a[j], d});
    sum += a[j] * d / std::pow(L, j);
  }
  e.main = x * std::exp((z - 1.0) * std::log(L)) * sum;
  if (e.restricted) {
    e.error_envelope = x / std::pow(L, ell);
  } else {
    const double R = dde::big_R(e.z, std::max(e.u, 1.0), s.quad_tol);
    e.error_envelope = x * R * std::pow(std::log(2.0 * e.u), J + 1) / std::pow(L, J + 2 - z.real());
  }
  return e;
}

WResult W_j(int j, double t, double y, int z, const arith::FriableTable& all, const Settings& s) {
  if (j < 0) throw DomainError("W_j: j must be non-negative");
  if (z == 0) throw DomainError("W_j: z must be nonzero");
  if (!(t >= 0.0)) throw DomainError("W_j: requires t >= 0");
  if (!(y >= 2.0)) throw DomainError("W_j: requires y >= 2");
  const double L = std::log(y);
  const std::uint64_t X = all.x_max();
  require_full(all, X, "W_j");
  WResult out;
  out.v_cut = std::log(double(X)) / L;
  out.tail = std::pow(L, -j) * std::exp(-std::pow(std::log(double(X)), s.beta + s.delta / 2.0));
  if (t >= out.v_cut) return out;

  // polynomial part P(v) = sum_i p_i v^i and the limit C of M(y^v)/y^v - P(v)
  const int mz = z;
  std::vector<double> p(std::max(mz, 1), 0.0);
  double C = 0.0;
  if (mz >= 1) {
    const SeriesPoly a = coeffs::a_coeffs(double(z), mz - 1, s.coeff);
    for (int i = 1; i < mz; ++i)
      p[i] = (a[mz - 1 - i] * std::pow(L, double(z - 1)) / (factorial(i) * std::pow(L, mz - 1 - i))).real();
    C = a[mz - 1].real();
  }
  auto P = [&](double v) {
    double acc = 0.0;
    for (int i = int(p.size()) - 1; i >= 1; --i) acc = (acc + p[i]) * v;
    return acc;
  };

  const auto zp = powers(double(z));
  const auto& rec = all.records();
  const double V = out.v_cut;
  if (j == 0) {
    // n < y^t: an atom at v = t belongs to the integral from t
    const auto top = static_cast<std::uint64_t>(std::ceil(std::exp(L * t))) - 1;
    const cplx M = kernels::block_sum(1, std::min(top, X), [&](std::uint64_t n) { return zp[rec[n - 1] & kOmegaMask]; },
                                      s.exec);
    out.value = C - (M * std::exp(-L * t) - P(t));
    return out;
  }

  // int_t^V (v-t)^k (N(v) - C) dv with k = j - 1
  const int k = j - 1;
  const double kf = factorial(k);
  const double scale = kf / std::pow(L, k + 1);
  auto partial_exp = [&](double c) {
    double term = 1.0, acc = 1.0;
    for (int i = 1; i <= k; ++i) {
      term *= c / i;
      acc += term;
    }
    return acc;
  };
  const double B = V - t;
  const double tail_part = std::exp(-L * V) * partial_exp(L * B);
  const double ey_t = std::exp(-L * t);
  const double start_t = partial_exp(0.0) * ey_t;
  const double yt = std::exp(L * t);
  auto term = [&](std::uint64_t n) -> cplx {
    const double dn = double(n);
    double head;
    if (dn <= yt) {
      head = start_t;
    } else {
      const double A = std::log(dn) / L - t;
      head = partial_exp(L * A) / dn;
    }
    return zp[rec[n - 1] & kOmegaMask] * (scale * (head - tail_part));
  };
  const cplx sum_M = kernels::block_sum(1, X, term, s.exec);
  // int_0^B w^k (w + t)^i dw
  double poly = 0.0;
  for (int i = 1; i < int(p.size()); ++i) {
    double acc = 0.0, binom = 1.0;
    for (int l = 0; l <= i; ++l) {
      acc += binom * std::pow(t, i - l) * std::pow(B, k + l + 1) / (k + l + 1);
      binom = binom * (i - l) / (l + 1);
    }
    poly += p[i] * acc;
  }
  const double const_part = C * std::pow(B, k + 1) / (k + 1);
  out.value = -double(j) * (sum_M - poly - const_part);
  return out;
}

Correction correction_terms(double x, double y, cplx z, int J, const arith::FriableTable& all, const Settings& s) {
  check_xy(x, y, "correction_terms");
  const ZParams zp = ZParams::from(z);
  if (!zp.is_integer()) throw DomainError("correction_terms: z must be an integer");
  check_J(J);
  const int mz = zp.m_z;
  const int Jz = J + 1 - mz;
  const double u = log_u(x, y);
  Correction c;
  c.ell = static_cast<int>(std::ceil(u)) - 1;
  c.U = 0.0;
  if (c.ell < 1 || Jz < c.ell) return c;
  const auto psi = dde::psi_dispatch(zp, table_span(u), s.dde);
  const double t = u - c.ell;
  for (int j = c.ell; j <= Jz; ++j) {
    const cplx delta = psi(j, c.ell, dde::Side::Right) - psi(j, c.ell, dde::Side::Left);
    if (std::abs(delta) < 1e-14) continue;
    const WResult w = W_j(j, t, y, mz, all, s);
    c.U += ((j + 1) % 2 ? -1.0 : 1.0) * delta / factorial(j) * w.value;
    c.tail += std::abs(delta) / factorial(j) * w.tail;
  }
  return c;
}

cplx z_density(double v, double y, cplx z, const arith::FriableTable& all) {
  const ZParams zp = ZParams::from(z);
  if (zp.theta == 0.0) throw DomainError("z_density: Re z must not be an integer");
  if (!(y >= 2.0) || !(v > 0.0)) throw DomainError("z_density: requires y >= 2 and v > 0");
  const double L = std::log(y);
  const double V = v * L;
  const double top = std::exp(V);
  if (std::abs(top - std::round(top)) <= 1e-14 * top)
    throw DomainError("z_density: y^v is an integer, the density is not defined there");
  const auto N = static_cast<std::uint64_t>(std::floor(top));
  require_full(all, N, "z_density");
  const cplx th = zp.theta_z;
  static const quad::Rule gl = quad::gauss_legendre(16);
  const quad::PowerWeightedRule head(th - 1.0);
  // int_0^a e^w w^{th-1} dw
  auto inner = [&](double a) {
    const double c = std::min(a, 1.0);
    cplx acc = std::exp(th * std::log(c)) * head.integrate([&](double t) { return std::exp(c * t); });
    for (double lo = 1.0; lo < a; lo += 1.0) {
      const double hi = std::min(a, lo + 1.0);
      acc += quad::integrate(gl, lo, hi, [&](double w) { return std::exp(w + (th - 1.0) * std::log(w)); });
    }
    return acc;
  };
  const auto zpow = powers(z);
  const auto& rec = all.records();
  cplx first = 0.0, second = 0.0;
  for (std::uint64_t n = 1; n <= N; ++n) {
    const cplx f = zpow[rec[n - 1] & kOmegaMask];
    const double a = V - std::log(double(n));
    first += f * inner(a);
    second += f / double(n) * std::exp((th - 1.0) * std::log(a));
  }
  const cplx Ze = (second - std::exp(-V) * first) * specfun::rgamma(th);
  return std::exp((1.0 - th) * std::log(L)) * Ze;
}

// --- omega statistics -------------------------------------------------------

MomentSet moments(double x, double y, double r, const Settings& s, bool with_prefactor) {
  check_xy(x, y, "moments");
  if (!(y > std::exp(1.0))) throw DomainError("moments: requires y > e");
  if (!(r >= s.r_min && r <= s.r_max)) throw DomainError("moments: r outside the configured bracket");
  MomentSet m;
  m.r = r;
  m.y = y;
  m.u = log_u(x, y);
  const auto xr = specfun::solve_xi(m.u / r, s.newton);
  m.xi = xr.xi;
  const double I = specfun::eval_I(m.xi).real();
  m.L = std::log(std::log(y)) + I;
  m.mu_r = r * m.L;
  m.sigma_r2 = m.mu_r - m.u * m.u * xr.xi_prime / r;
  if (with_prefactor) {
    const double span = table_span(m.u);
    const double rho_r = dde::solve_system(dde::Kind::RHO, ZParams::from(r), span, s.dde).value(m.u).real();
    const double rho = dde::solve_system(dde::Kind::RHO, ZParams::from(1.0), span, s.dde).value(m.u).real();
    const double B = coeffs::euler_B(r, 1.0, s.coeff.P).value.real();
    m.K_r = B * rho_r / rho * std::exp((1.0 - r) * I) * std::sqrt(m.mu_r / m.sigma_r2);
  }
  return m;
}

double sigma_r2_closed_form(double x, double y, double r) {
  check_xy(x, y, "sigma_r2");
  const double u = log_u(x, y);
  const double xi = specfun::solve_xi(u / r).xi;
  const double mu = r * (std::log(std::log(y)) + specfun::eval_I(xi).real());
  // xi'(v) = xi / (1 - v + v xi) at v = u/r
  return mu - u * u * xi / (r + u * (xi - 1.0));
}

double solve_r_for_k(double x, double y, double k, const Settings& s) {
  auto mu = [&](double r) { return moments(x, y, r, s, false).mu_r; };
  auto slope = [&](double r) { return moments(x, y, r, s, false).sigma_r2; };  // r dmu/dr
  double lo = s.r_min, hi = s.r_max;
  if (!(slope(lo) > 0.0)) throw RangeError("solve_r_for_k: mu_r is not increasing at r_min");
  if (!(slope(hi) > 0.0)) {
    // cut the bracket at the maximum of mu_r
    double a = lo, b = hi;
    for (int it = 0; it < 200 && b - a > 1e-14 * b; ++it) {
      const double mid = 0.5 * (a + b);
      if (slope(mid) > 0.0) a = mid; else b = mid;
    }
    hi = a;
  }
  const double flo = mu(lo) - k, fhi = mu(hi) - k;
  if (flo > 0.0 || fhi < 0.0)
    throw RangeError("solve_r_for_k: no root in [" + std::to_string(lo) + ", " + std::to_string(hi) +
                     "]; mu = " + std::to_string(flo + k) + " and " + std::to_string(fhi + k));
  if (flo == 0.0) return lo;
  if (fhi == 0.0) return hi;
  for (int it = 0; it < 200 && hi - lo > 1e-15 * hi; ++it) {
    const double mid = 0.5 * (lo + hi);
    if (mu(mid) < k) lo = mid; else hi = mid;
  }
  return 0.5 * (lo + hi);
}

TiltedRange tilted_range(double x, double y, double k, const Settings& s) {
  const MomentSet m = moments(x, y, 1.0, s, false);
  TiltedRange t;
  const double u = m.u;
  t.lower = s.c1 * m.sigma_r2 - s.c2 * u / std::pow(std::log(2.0 * u), 2);
  t.upper = s.c3 * m.sigma_r2;
  t.value = k - specfun::eval_I(m.xi).real();
  t.ok = t.lower <= t.value && t.value <= t.upper;
  return t;
}

double predict_ek(double x, double y, double v) {
  check_xy(x, y, "predict_ek");
  return specfun::normal_cdf(v);
}

double predict_local(double x, double y, int k, LocalMode mode, const Settings& s) {
  if (k < 0) throw DomainError("predict_local: k must be non-negative");
  if (mode == LocalMode::GAUSS) {
    const MomentSet m = moments(x, y, 1.0, s, false);
    const double sigma = std::sqrt(m.sigma_r2);
    const double d = m.mu_r - k;
    return std::exp(-0.5 * d * d / m.sigma_r2) / (std::sqrt(2.0 * kPi) * sigma);
  }
  const TiltedRange range = tilted_range(x, y, k, s);
  if (!range.ok)
    throw RangeError("predict_local: k = " + std::to_string(k) + " outside the tilted range (k - I = " +
                     std::to_string(range.value) + ", bounds " + std::to_string(range.lower) + ", " +
                     std::to_string(range.upper) + ")");
  return tilted_law(x, y, k, s);
}

double tilted_law(double x, double y, int k, const Settings& s) {
  if (k < 0) throw DomainError("tilted_law: k must be non-negative");
  const double r = solve_r_for_k(x, y, k, s);
  const MomentSet m = moments(x, y, r, s, true);
  return m.K_r * std::exp(-m.L + k * std::log(m.L) - std::lgamma(k + 1.0));
}

double large_dev(double x, double y, double v, const Settings& s) {
  if (!(v >= 0.0)) throw DomainError("large_dev: requires v >= 0");
  const MomentSet m = moments(x, y, 1.0, s, false);
  const double sigma = std::sqrt(m.sigma_r2);
  return std::exp(-v * v / 3.0) + std::exp(-s.c_ld * m.sigma_r2 / std::pow(std::log(sigma), 4));
}

// --- saddle points and diagnostics -----------------------------------------

cplx alpha_z(double x, double y, cplx z, const Settings& s) {
  check_xy(x, y, "alpha_z");
  return 1.0 - specfun::solve_zeta0(log_u(x, y) / z, s.newton).root / std::log(y);
}

namespace {

double alpha_r_lhs(const std::vector<std::uint32_t>& primes, double r, double alpha) {
  double acc = 0.0;
  for (auto p : primes) {
    const double lp = std::log(double(p));
    acc += r * lp / std::expm1(alpha * lp);
  }
  return acc;
}

}  // namespace

double alpha_r(double x, double y, double r) {
  check_xy(x, y, "alpha_r");
  if (!(r > 0.0)) throw DomainError("alpha_r: requires r > 0");
  const auto primes = arith::primes_up_to(static_cast<std::uint64_t>(std::floor(y)));
  const double target = std::log(x);
  double lo = 0.0, hi = 2.0;
  if (alpha_r_lhs(primes, r, hi) > target) throw RangeError("alpha_r: root lies above 2");
  for (int it = 0; it < 200 && hi - lo > 4e-16 * hi; ++it) {
    const double mid = 0.5 * (lo + hi);
    if (alpha_r_lhs(primes, r, mid) > target) lo = mid; else hi = mid;
  }
  return 0.5 * (lo + hi);
}

double alpha_r_residual(double x, double y, double r, double alpha) {
  const auto primes = arith::primes_up_to(static_cast<std::uint64_t>(std::floor(y)));
  return std::abs(alpha_r_lhs(primes, r, alpha) - std::log(x));
}

CharFnDiag char_fn_diag(double x, double y, double r, double t, const Settings& s) {
  if (!(std::abs(t) <= kPi)) throw DomainError("char_fn_diag: requires |t| <= pi");
  const MomentSet m = moments(x, y, r, s, false);
  const double u = m.u;
  const cplx I1(0.0, 1.0);
  auto F = [&](double tt) {
    const cplx w = specfun::solve_zeta0(u * std::exp(-I1 * tt) / r, s.newton).root;
    return u * w - r * std::exp(I1 * tt) * specfun::eval_I(w);
  };
  CharFnDiag d;
  d.H = r * (std::exp(I1 * t) - 1.0) * std::log(std::log(y)) + F(0.0) - F(t);
  d.quadratic = I1 * t * m.mu_r - 0.5 * t * t * m.sigma_r2;
  return d;
}

cplx partial_zeta_factorization_error(double y, cplx s, cplx z) {
  if (!(y >= 2.0)) throw DomainError("factorization: requires y >= 2");
  if (s == cplx(1.0)) throw PoleError("factorization: s = 1");
  const double L = std::log(y);
  const cplx sy = (s - 1.0) * L;
  const cplx lhs = z * specfun::log_zeta_partial(s, y);
  const cplx rhs = z * (std::log((s - 1.0) * specfun::zeta(s)) + std::log(L) + kEulerGamma + specfun::eval_I(-sy));
  return std::exp(lhs - rhs) - 1.0;
}

}  // namespace frkt::asym
