#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "frkt/asymptotics.hpp"
#include "oracles.hpp"

using namespace frkt;
using namespace frkt::asym;

namespace {

double psi_exact(std::uint64_t x, double y) {
  return double(arith::friable_stats(arith::build_table(x, y, arith::TableMode::SPF_SIEVE)).psi);
}

// j int_t^V (v - t)^{j-1} W_0(v) dv with W_0(v) = C - (M(y^v) y^{-v} - P(v)), M counting n < y^v,
// integrated piece by piece between the jumps log n / log y.
double W_oracle(int j, double t, double y, int z, std::uint64_t X, double C, const std::vector<double>& p) {
  const double L = std::log(y);
  const double V = std::log(double(X)) / L;
  auto P = [&](double v) {
    double acc = 0.0, pw = 1.0;
    for (std::size_t i = 1; i < p.size(); ++i) acc += p[i] * (pw *= v);
    return acc;
  };
  std::vector<double> cum(X + 1, 0.0);
  for (std::uint64_t n = 1; n <= X; ++n) cum[n] = cum[n - 1] + std::pow(double(z), oracle::omega_trial(n));
  if (j == 0) {
    const auto below = static_cast<std::uint64_t>(std::ceil(std::exp(L * t))) - 1;
    return C - (cum[std::min(below, X)] * std::exp(-L * t) - P(t));
  }
  double acc = 0.0;
  for (std::uint64_t n = 1; n < X; ++n) {
    const double a = std::max(t, std::log(double(n)) / L);
    const double b = std::min(V, std::log(double(n + 1)) / L);
    if (b <= a) continue;
    const double Mn = cum[n];
    acc += oracle::gl30([&](double v) { return std::pow(v - t, j - 1) * (C - (Mn * std::exp(-L * v) - P(v))); }, a, b);
  }
  return j * acc;
}

}  // namespace

TEST_CASE("settings and ranges") {
  Settings s;
  CHECK_NOTHROW(s.validate());
  s.beta = 0.4;
  s.delta = 0.2;
  try {
    s.validate();
    FAIL("expected ConfigError");
  } catch (const ConfigError& e) {
    CHECK(std::string(e.what()).find("beta + delta") != std::string::npos);
  }
  CHECK(in_G_beta(1e6, 1e3, 0.3));
  CHECK_FALSE(in_G_beta(1e6, 10.0, 0.3));
  CHECK(in_G_beta(1e6, 1e6, 0.3));
  const double y = 1e4;
  CHECK(e_y(y, 0.3) == doctest::Approx(std::pow(std::log(std::log(y)), 1.0 / 0.3) / std::log(y)));
  // e_y is about 1.55 here
  CHECK(in_V(10.0, 2, y, 0.3));
  CHECK_FALSE(in_V(0.5, 0, y, 0.3));
  CHECK_FALSE(in_V(1.0, 0, y, 0.3));
  CHECK_FALSE(in_V(3.0 + 0.5 * e_y(y, 0.3), 2, y, 0.3));
  CHECK(in_V(3.0 + 1.5 * e_y(y, 0.3), 2, y, 0.3));
}

TEST_CASE("Lambda_f") {
  CHECK(std::abs(lambda_weighted(1e5, 100.0, 1.0, [](std::uint64_t) { return cplx(0.0); }).value) == 0.0);

  // y = x: every n counts and Lambda is M(x)
  const auto small = omega_table(20000);
  for (double x : {1e4, 12345.5}) {
    const cplx M = arith::partial_sum_M(&small, x, 2.0);
    CHECK(std::abs(lambda_f(x, x, 2.0, small).value - M) <= 1e-9 * std::abs(M));
  }
  CHECK(lambda_f(1e4, 1e4, 1.0, small).value.real() == doctest::Approx(10000.0).epsilon(1e-10));

  // Lambda is closer to Psi than the bare main term over u in [1.5, 3]
  const auto all = omega_table(1000000);
  for (double y : {1e3, 1e4, 200.0}) {
    const double psi = psi_exact(1000000, y);
    const double lam = lambda_f(1e6, y, 1.0, all).value.real();
    const double main = main_term_raw(1e6, y, 1.0, 0).real();
    CHECK(std::abs(psi - lam) < std::abs(psi - main));
  }
}

TEST_CASE("main expansion") {
  const auto e0 = main_expansion(1e6, 1e3, 1.0, 0);
  CHECK(std::abs(e0.main.real() - 1e6 * oracle::dickman(2.0)) <= 1e-6);
  CHECK(e0.in_G_beta);
  const double psi = psi_exact(1000000, 1e3);
  const auto e1 = main_expansion(1e6, 1e3, 1.0, 1);
  CHECK(std::abs(psi - e1.main.real()) < std::abs(psi - e0.main.real()));
  CHECK(e1.error_envelope > 0.0);
}

TEST_CASE("correction terms") {
  const auto all = omega_table(100000);
  CHECK_THROWS_AS(correction_terms(1e5, 100.0, 1.5, 2, all), DomainError);
  // z = 2: psi has no jumps of order j at l >= j - m + 2, so U_0 vanishes at u in (2, 3)
  const auto c = correction_terms(1e5, 50.0, 2.0, 0, all);
  CHECK(c.U == cplx(0.0));
}

TEST_CASE("W_j at t = 0") {
  const auto all = omega_table(1000000);
  for (int z : {1, 2})
    for (double y : {30.0, 1000.0}) {
      const auto a = coeffs::a_coeffs(double(z), 4);
      const double L = std::log(y);
      for (int j = 0; j <= 3; ++j) {
        const cplx expect = ((j % 2) ? -1.0 : 1.0) * std::tgamma(j + 1.0) * a[j + z - 1] / std::pow(L, j);
        const auto w = W_j(j, 0.0, y, z, all);
        CHECK(std::abs(w.value - expect) <= 1e-3 * (1.0 + std::abs(expect)) + w.tail);
      }
    }
}

TEST_CASE("W_j against piecewise quadrature") {
  const std::uint64_t X = 3000;
  const auto all = omega_table(X);
  const double y = 30.0, L = std::log(y);
  CHECK(W_j(2, std::log(double(X)) / L + 0.1, y, 1, all).value == cplx(0.0));
  for (int z : {1, 2}) {
    std::vector<double> p(std::max(z, 1), 0.0);
    double C = 1.0;
    if (z == 2) {
      const auto a = coeffs::a_coeffs(2.0, 1);
      p[1] = a[0].real() * L;
      C = a[1].real();
    }
    for (double t : {0.3, 1.2, 2.0})
      for (int j = 0; j <= 3; ++j) {
        const double expect = W_oracle(j, t, y, z, X, C, p);
        const cplx got = W_j(j, t, y, z, all).value;
        CHECK(std::abs(got - expect) <= 1e-9 * (1.0 + std::abs(expect)));
      }
  }
}

TEST_CASE("density of the continuous part") {
  const auto all = omega_table(20000);
  // y^v < 2: only n = 1 contributes
  const double y = 100.0, L = std::log(y);
  for (cplx z : {cplx(0.5), cplx(1.5), cplx(0.4, 0.3)}) {
    const cplx th = specfun::ZParams::from(z).theta_z;
    const cplx gamma_th = oracle::gamma_quad(th + 1.0) / th;
    for (double v : {0.05, 0.1}) {
      const double a = v * L;
      const cplx expect = std::pow(cplx(L), 1.0 - th) *
                          (std::pow(cplx(a), th - 1.0) - std::exp(-a) * oracle::power_exp_integral(a, th)) / gamma_th;
      CHECK(std::abs(z_density(v, y, z, all) - expect) <= 1e-10 * std::abs(expect));
    }
  }
  CHECK_THROWS_AS(z_density(0.5, y, 2.0, all), DomainError);
  CHECK_THROWS_AS(z_density(std::log(6.0) / L, y, 0.5, all), DomainError);

  // Laplace transform at y = e: int Z(v) e^{-sv} dv = zeta(1+s)^z B_z(1+s) s^{1-theta} / (s+1)
  const double e = std::exp(1.0), s = 4.0, V = 5.0;
  for (double z : {0.5, 2.7}) {
    const double th = specfun::ZParams::from(z).theta_z.real();
    const double q = 1.0 / th;
    double acc = 0.0;
    for (int n = 1; std::log(double(n)) < V; ++n) {
      const double a = std::log(double(n)), h = std::min(V, std::log(n + 1.0)) - a;
      // v = a + h tau^q absorbs (v - a)^{theta - 1}
      acc += oracle::gl30(
          [&](double tau) {
            const double v = a + h * std::pow(tau, q);
            return z_density(v, e, z, all).real() * std::exp(-s * v) * h * q * std::pow(tau, q - 1.0);
          },
          0.0, 1.0);
    }
    const double F = std::pow(oracle::zeta_real(1.0 + s), z) * coeffs::euler_B(z, 1.0 + s, 100000).value.real();
    const double expect = F * std::pow(s, 1.0 - th) / (s + 1.0);
    CHECK(std::abs(acc - expect) <= 1e-7 * expect);
  }

  // z = 1/2: inner integral int_0^a e^w w^{-1/2} dw = 2 int_0^{sqrt a} e^{t^2} dt by the midpoint rule
  for (double v : {0.7, 1.9}) {
    cplx expect = 0.0;
    for (std::uint64_t n = 1; double(n) <= std::exp(v); ++n) {
      const double f = std::pow(0.5, oracle::omega_trial(n));
      const double a = v - std::log(double(n)), top = std::sqrt(a);
      const int K = 2000;
      double mid = 0.0;
      for (int i = 0; i < K; ++i) {
        const double t = (i + 0.5) * top / K;
        mid += std::exp(t * t);
      }
      mid *= 2.0 * top / K;
      expect += f / double(n) / std::sqrt(a) - std::exp(-v) * f * mid;
    }
    expect /= std::sqrt(kPi);
    CHECK(std::abs(z_density(v, e, 0.5, all) - expect) <= 1e-4 * std::abs(expect));
  }

  // complex z: the same formula evaluated with trial-division omega and the power series
  for (cplx z : {cplx(0.4, 0.3), cplx(1.5, -0.5)}) {
    const cplx th = specfun::ZParams::from(z).theta_z;
    const cplx gamma_th = oracle::gamma_quad(th + 1.0) / th;
    for (double v : {0.9, 2.3, 4.7}) {
      cplx first = 0.0, second = 0.0;
      for (std::uint64_t n = 1; double(n) <= std::exp(v); ++n) {
        const cplx f = std::pow(z, oracle::omega_trial(n));
        const double a = v - std::log(double(n));
        first += f * oracle::power_exp_integral(a, th);
        second += f / double(n) * std::pow(cplx(a), th - 1.0);
      }
      const cplx expect = (second - std::exp(-v) * first) / gamma_th;
      CHECK(std::abs(z_density(v, e, z, all) - expect) <= 1e-9 * std::abs(expect));
    }
  }
}

TEST_CASE("moments") {
  const double y = 1e3;
  const auto m1 = moments(y, y, 1.0, {}, false);
  CHECK(m1.mu_r == doctest::Approx(std::log(std::log(y))).epsilon(1e-14));
  const double x = 1e7;
  const auto m = moments(x, y, 1.0);
  CHECK(solve_r_for_k(x, y, m.mu_r) == doctest::Approx(1.0).epsilon(1e-10));
  CHECK(m.K_r == doctest::Approx(std::sqrt(m.mu_r / m.sigma_r2)).epsilon(1e-12));
  for (double r : {0.8, 1.0, 1.3}) {
    const double s2 = moments(x, y, r, {}, false).sigma_r2;
    CHECK(s2 == doctest::Approx(sigma_r2_closed_form(x, y, r)).epsilon(1e-10));
    // sigma_r^2 = r d mu_r / dr
    const double h = 1e-5;
    const double d = (moments(x, y, r + h, {}, false).mu_r - moments(x, y, r - h, {}, false).mu_r) / (2 * h);
    CHECK(s2 == doctest::Approx(r * d).epsilon(1e-6));
  }
  // sigma_1^2 - log log y - u/xi^2 = u (5/xi^3 + 23/xi^4 + ...); y^u must stay finite, so y = 3
  for (double u : {10.0, 100.0, 300.0, 600.0}) {
    const double yy = 3.0;
    const double xi = specfun::solve_xi(u).xi;
    const double diff = moments(std::pow(yy, u), yy, 1.0, {}, false).sigma_r2 - std::log(std::log(yy)) - u / (xi * xi);
    CHECK(std::abs(diff) <= 12.0 * u / (xi * xi * xi));
  }
  CHECK_THROWS_AS(moments(x, y, 5.0), DomainError);
  CHECK_THROWS_AS(solve_r_for_k(x, y, 40.0), RangeError);
}

TEST_CASE("local laws") {
  const double x = 1e7, y = 1e3;
  const auto m = moments(x, y, 1.0, {}, false);
  const double sigma = std::sqrt(m.sigma_r2);
  const int k0 = int(std::lround(m.mu_r));
  const double d = m.mu_r - k0;
  CHECK(predict_local(x, y, k0, LocalMode::GAUSS) ==
        doctest::Approx(std::exp(-0.5 * d * d / m.sigma_r2) / (std::sqrt(2 * kPi) * sigma)));
  for (double xx : {1e7, 1e12, 1e20}) {
    const auto mm = moments(xx, y, 1.0, {}, false);
    const double sg = std::sqrt(mm.sigma_r2);
    double sum = 0.0;
    for (int k = 0; k <= int(mm.mu_r + 6 * sg) + 1; ++k) sum += predict_local(xx, y, k, LocalMode::GAUSS);
    CHECK(sum == doctest::Approx(1.0).epsilon(0.01));
  }
  CHECK_THROWS_AS(predict_local(x, y, 0, LocalMode::TILTED), RangeError);
  CHECK_THROWS_AS(predict_local(x, y, 12, LocalMode::TILTED), RangeError);
  const double t4 = predict_local(x, y, 4, LocalMode::TILTED);
  CHECK(t4 == doctest::Approx(tilted_law(x, y, 4)));
  CHECK(t4 > 0.0);
  CHECK(t4 < 1.0);
  CHECK_THROWS_AS(predict_local(x, y, -1, LocalMode::GAUSS), DomainError);

  CHECK(predict_ek(x, y, 0.0) == 0.5);
  CHECK(predict_ek(x, y, 1.3) == doctest::Approx(oracle::normal_cdf(1.3)).epsilon(1e-14));
  CHECK(large_dev(x, y, 3.0) < large_dev(x, y, 0.5));
  CHECK(large_dev(x, y, 0.0) > 1.0);
}

TEST_CASE("saddle points") {
  CHECK(alpha_z(1e3, 1e3, 1.0) == cplx(1.0));
  const cplx a = alpha_z(1e6, 1e3, 1.0);
  CHECK(a.imag() == 0.0);
  CHECK(a.real() > 0.0);
  CHECK(a.real() < 1.0);
  const cplx b = alpha_z(1e6, 1e3, cplx(1.3, 0.4));
  CHECK(std::abs(alpha_z(1e6, 1e3, cplx(1.3, -0.4)) - std::conj(b)) <= 1e-14);

  const double ar = alpha_r(1e6, 1e3, 1.0);
  CHECK(alpha_r_residual(1e6, 1e3, 1.0, ar) <= 1e-9);
  // the prime-sum saddle and its continuous approximation agree to O(1/log y)
  CHECK(std::abs(ar - a.real()) <= 2.0 / std::log(1e3));
  // direct sum over primes
  double lhs = 0.0;
  for (std::uint64_t p = 2; p <= 1000; ++p)
    if (oracle::largest_prime_factor(p) == p) lhs += std::log(double(p)) / std::expm1(ar * std::log(double(p)));
  CHECK(lhs == doctest::Approx(std::log(1e6)).epsilon(1e-12));
}

TEST_CASE("characteristic function diagnostic") {
  const double x = 1e6, y = 1e3;
  CHECK(std::abs(char_fn_diag(x, y, 1.0, 0.0).H) <= 1e-12);
  const double h = 1e-5;
  const cplx dH = (char_fn_diag(x, y, 1.0, h).H - char_fn_diag(x, y, 1.0, -h).H) / (2 * h);
  const double mu = moments(x, y, 1.0, {}, false).mu_r;
  CHECK(std::abs(dH - cplx(0.0, mu)) <= 1e-4 * mu);
  double worst = 0.0;
  for (double t : {0.01, 0.02, 0.04}) {
    const auto d = char_fn_diag(x, y, 1.0, t);
    worst = std::max(worst, std::abs(d.H - d.quadratic) / (t * t * t));
  }
  CHECK(worst <= 10.0);
  CHECK_THROWS_AS(char_fn_diag(x, y, 1.0, 4.0), DomainError);
}

TEST_CASE("partial zeta factorization") {
  for (double y : {1e3, 1e4})
    for (cplx s : {cplx(1.1), cplx(1.5, 1.0)})
      for (cplx z : {cplx(1.0), cplx(1.3, 0.4)}) CHECK(std::abs(partial_zeta_factorization_error(y, s, z)) <= 0.05);
  // shrinks as y grows
  CHECK(std::abs(partial_zeta_factorization_error(1e4, 1.1, 1.0)) <
        std::abs(partial_zeta_factorization_error(1e3, 1.1, 1.0)));
  CHECK_THROWS_AS(partial_zeta_factorization_error(1e3, 1.0, 1.0), PoleError);
}
