#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "frkt/specfun.hpp"
#include "oracles.hpp"

using namespace frkt;
using namespace frkt::specfun;

TEST_CASE("ZParams splits z into integer and fractional parts") {
  for (cplx z : {cplx(0.7), cplx(1.0), cplx(1.6, 0.5), cplx(-0.8), cplx(-2.0), cplx(3.0, -1.0), cplx(0.0, 2.0)}) {
    const auto p = ZParams::from(z);
    CHECK(p.theta >= 0.0);
    CHECK(p.theta < 1.0);
    CHECK(p.m_z == p.eps_z * p.m);
    CHECK(p.m >= 0);
    CHECK(std::abs(cplx(p.m_z) - p.theta_z - z) < 1e-15);
    CHECK(std::abs(p.theta_z - cplx(p.theta, -z.imag())) < 1e-15);
  }
  CHECK(ZParams::from(2.0).is_integer());
  CHECK_FALSE(ZParams::from(cplx(2.0, 1.0)).is_integer());
  CHECK(ZParams::from(-0.8).m_z == 0);
}

TEST_CASE("I(w) on small and large arguments") {
  CHECK(std::abs(eval_I(0.0)) == 0.0);
  CHECK(eval_I(1.0).real() == doctest::Approx(1.3179021514544).epsilon(1e-12));
  CHECK(eval_I(-1.0).real() == doctest::Approx(-0.7965995992970).epsilon(1e-12));
  for (cplx w : {cplx(0.3, 0.2), cplx(-4.0, 1.0), cplx(8.0, -3.0), cplx(15.0), cplx(-19.0, 0.5)}) {
    const cplx ref = oracle::I_series(w);
    CHECK(std::abs(eval_I(w) - ref) <= 1e-11 * (1.0 + std::abs(ref)));
  }
  // past the series crossover, against exponential integrals
  for (double w : {-60.0, -30.0, -21.0, 21.0, 25.0, 60.0}) {
    const double ref = oracle::I_real(w);
    CHECK(std::abs(eval_I(w).real() - ref) <= 1e-12 * (1.0 + std::abs(ref)));
  }
  CHECK(std::abs(eval_I(cplx(22.0, 10.0)) - oracle::I_series(cplx(22.0, 10.0))) <= 1e-11 * std::abs(eval_I(cplx(22.0, 10.0))));
  // e^s/s T(s) with T(s) = 1 + 1/s + 2/s^2; the remainder times s^4/e^s tends to 3! = 6
  double prev = 1e300;
  for (double s : {10.0, 20.0, 40.0}) {
    const double lead = std::exp(s) / s * (1 + 1 / s + 2 / (s * s));
    const double scaled = (eval_I(s).real() - lead) * std::pow(s, 4) / std::exp(s);
    CHECK(scaled > 6.0);
    CHECK(scaled < prev);
    prev = scaled;
  }
  CHECK(prev < 7.0);
}

TEST_CASE("J(s) and the identity I(-s) + log s = -gamma - J(s)") {
  CHECK(eval_J(1.0).real() == doctest::Approx(0.21938393439552).epsilon(1e-12));
  CHECK(std::abs(eval_J(1.0).real() - oracle::J_real(1.0)) < 1e-12);
  for (double s : {0.05, 0.5, 2.0, 7.5, 30.0}) CHECK(std::abs(eval_J(s).real() - oracle::J_real(s)) < 1e-12 * (1 + oracle::J_real(s)));
  CHECK(std::abs(eval_J(50.0)) <= std::exp(-50.0));
  for (double re : {0.1, 1.0, 5.0})
    for (double im : {0.0, 1.0, -1.0}) {
      const cplx s(re, im);
      CHECK(std::abs(eval_I(-s) + std::log(s) + kEulerGamma + eval_J(s)) <= 1e-9);
    }
  CHECK_THROWS_AS(eval_J(cplx(-1.0, 0.5)), DomainError);
}

TEST_CASE("rho_hat") {
  CHECK(std::abs(rho_hat(0.0) - std::exp(kEulerGamma)) < 1e-14);
  CHECK(std::abs(rho_hat(20.0) * 20.0 - 1.0) < 1e-2);
  CHECK(std::abs(rho_hat(1.0) - std::exp(kEulerGamma + oracle::I_series(-1.0))) < 1e-13);
}

TEST_CASE("xi(u)") {
  const auto one = solve_xi(1.0);
  CHECK(one.xi == 0.0);
  CHECK(one.xi_prime == 2.0);
  // finite differences across u = 1
  const double h = 1e-4;
  CHECK((solve_xi(1 + h).xi - solve_xi(1 - h).xi) / (2 * h) == doctest::Approx(2.0).epsilon(1e-6));
  CHECK(solve_xi(std::exp(1.0) - 1.0).xi == doctest::Approx(1.0).epsilon(1e-13));
  CHECK(solve_xi(0.5).xi < 0.0);
  CHECK(solve_xi(2.0).xi > 0.0);
  CHECK_THROWS_AS(solve_xi(0.0), DomainError);

  double prev = -1.0;
  for (int i = 0; i <= 400; ++i) {
    const double u = (1 + 1e-4) * std::pow(1e6 / (1 + 1e-4), i / 400.0);
    const auto r = solve_xi(u);
    CHECK(r.residual <= 1e-12);
    CHECK(r.xi > prev);
    prev = r.xi;
    // implicit derivative
    CHECK(r.xi_prime == doctest::Approx(r.xi / (1 + u * r.xi - u)).epsilon(1e-10));
  }
  // xi - log(u log u) decays like log log u / log u
  std::vector<double> scaled;
  for (double u : {1e2, 1e4, 1e6}) {
    const double d = std::abs(solve_xi(u).xi - std::log(u * std::log(u)));
    scaled.push_back(d / (std::log(std::log(u)) / std::log(u)));
  }
  for (double s : scaled) CHECK(s < 2.0);
}

TEST_CASE("zeta0 branch and accuracy") {
  const auto r5 = solve_zeta0(5.0);
  CHECK(std::abs(r5.root.imag()) <= 1e-12);
  CHECK(std::abs(r5.root.real() - solve_xi(5.0).xi) <= 1e-12);
  for (double u : {1.5, 3.0, 40.0, 1e4}) CHECK(std::abs(solve_zeta0(u).root.real() - solve_xi(u).xi) <= 1e-12);
  const auto w = 100.0 * std::polar(1.0, -kPi / 4);
  CHECK(solve_zeta0(w).residual <= 1e-12);
  CHECK(saddle_residual(w, solve_zeta0(w).root) <= 1e-12);

  // dzeta0/dw by centered differences
  for (cplx a : {cplx(10.0, 3.0), cplx(3.0, -2.0), cplx(200.0, 50.0)}) {
    const auto r = solve_zeta0(a);
    const double h = 1e-5 * std::abs(a);
    const cplx fd = (solve_zeta0(a + h).root - solve_zeta0(a - h).root) / (2 * h);
    CHECK(std::abs(fd - r.derivative) <= 1e-6 * std::abs(r.derivative));
    CHECK(std::abs(r.derivative - r.root / (1.0 + a * (r.root - 1.0))) <= 1e-12 * std::abs(r.derivative));
    // large-v form zeta0 / (v (zeta0 - 1))
    CHECK(std::abs(r.derivative - r.root / (a * (r.root - 1.0))) <= 2.0 / std::abs(a * (r.root - 1.0)) * std::abs(r.derivative));
  }

  // expansion error shrinks as v grows, bounded by C / xi_z^3
  const cplx z = std::polar(1.0, kPi / 4);
  const double t = std::arg(z);
  std::vector<double> err, c;
  for (double v : {50.0, 100.0, 200.0, 400.0}) {
    const double xz = solve_xi(v / std::abs(z)).xi;
    const cplx ex = xz + t * t / (2 * xz * xz) - cplx(0.0, 1.0) * xz * t / (xz - 1.0);
    err.push_back(std::abs(solve_zeta0(v / z).root - ex));
    c.push_back(err.back() * xz * xz * xz);
  }
  for (std::size_t i = 1; i < err.size(); ++i) CHECK(err[i] < err[i - 1]);
  for (double ci : c) CHECK(ci < 2.0 * c.front());
}

TEST_CASE("zeta and partial zeta") {
  CHECK(std::abs(zeta_values(2.0) - kPi * kPi / 6) < 1e-10);
  CHECK(std::abs(zeta_values(2.0, 3.0) - 1.5) < 1e-15);
  for (double s : {0.5, 1.5, 3.0, 7.0})
    CHECK(std::abs(zeta_values(s).real() - oracle::zeta_real(s)) < 1e-10 * std::abs(oracle::zeta_real(s)));
  CHECK(std::abs(zeta_values(cplx(0.5, 14.134725141734693))) < 1e-8);
  CHECK_THROWS_AS(zeta_values(1.0), PoleError);
  // multiplicative in the prime range
  const cplx s(1.2, 3.0);
  cplx extra = 1.0;
  for (int p : {101, 103, 107, 109, 113, 127}) extra /= 1.0 - std::pow(double(p), -s);
  CHECK(std::abs(zeta_values(s, 130.0) - zeta_values(s, 100.0) * extra) < 1e-12 * std::abs(zeta_values(s, 130.0)));
  CHECK(std::abs(log_zeta_partial(s, 100.0) - std::log(zeta_values(s, 100.0))) < 1e-12);
}

TEST_CASE("complex Gamma") {
  CHECK(std::abs(gamma_complex(1.0) - 1.0) < 1e-14);
  CHECK(std::abs(gamma_complex(0.5) - std::sqrt(kPi)) < 1e-12);
  CHECK(std::abs(gamma_complex(cplx(1.0, 1.0)) - cplx(0.49801566811835604, -0.15494982830181069)) < 1e-9);
  for (cplx s : {cplx(1.0, 1.0), cplx(2.5, -0.7), cplx(4.0, 3.0)})
    CHECK(std::abs(gamma_complex(s) - oracle::gamma_quad(s)) < 1e-10 * std::abs(gamma_complex(s)));
  // reflection side
  for (cplx s : {cplx(-0.3, 0.4), cplx(-2.5), cplx(0.2, -1.0)}) {
    const cplx refl = kPi / (std::sin(kPi * s) * gamma_complex(1.0 - s));
    CHECK(std::abs(gamma_complex(s) - refl) < 1e-12 * std::abs(refl));
  }
  CHECK(std::abs(rgamma(-2.0)) == 0.0);
  CHECK_THROWS_AS(gamma_complex(-3.0), PoleError);
}

TEST_CASE("normal cdf") {
  CHECK(normal_cdf(0.0) == 0.5);
  for (double v : {0.5, 1.0, 3.0}) CHECK(std::abs(normal_cdf(v) + normal_cdf(-v) - 1.0) < 1e-15);
  CHECK(normal_cdf(1.0) == doctest::Approx(0.841344746).epsilon(1e-9));
  for (double v : {-8.0, -2.2, -0.1, 0.7, 4.5}) CHECK(std::abs(normal_cdf(v) - oracle::normal_cdf(v)) < 1e-12);
}
