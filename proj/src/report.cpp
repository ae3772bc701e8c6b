#include "frkt/report.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <memory>

#include "frkt/arith.hpp"
#include "frkt/coeffs.hpp"
#include "frkt/dde.hpp"
#include "frkt/quadrature.hpp"
#include "frkt/specfun.hpp"

namespace frkt::report {

namespace {

using dde::Kind;
using specfun::ZParams;

struct Timer {
  std::chrono::steady_clock::time_point t0 = std::chrono::steady_clock::now();
  double seconds() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  }
};

std::string fmt(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.6g", v);
  return buf;
}

void dickman_values(CheckResult& r, const References& refs, const asym::Settings& s) {
  const auto tab = dde::solve_system(Kind::RHO, ZParams::from(1.0), 4.0, s.dde);
  const double e2 = std::abs(tab.value(2.0).real() - (1.0 - std::log(2.0)));
  const double e3 = std::abs(tab.value(3.0).real() - refs.rho3);
  r.values = {{"err_rho2", e2}, {"err_rho3", e3}};
  r.pass = e2 <= 1e-10 && e3 <= 1e-8;
}

void convolution_power(CheckResult& r, const References& refs, const asym::Settings& s) {
  const auto conv = refs.rho_conv ? refs.rho_conv : library_rho_conv();
  const auto rho2 = dde::solve_system(Kind::RHO, ZParams::from(2.0), 4.0, s.dde);
  double sup = 0.0;
  for (int i = 1; i <= 80; ++i) {
    const double v = 0.05 * i;
    sup = std::max(sup, std::abs(rho2.value(v).real() - conv(v)));
  }
  r.values = {{"sup_err", sup}};
  r.pass = sup <= 1e-6;
}

void laplace_identities(CheckResult& r, const asym::Settings& s) {
  const cplx zs[] = {0.7, 1.0, {1.6, 0.5}, -0.8};
  const cplx ss[] = {1.0, 2.0, {1.0, 1.0}};
  const double V = 40.0;
  double worst = 0.0;  // max of error - (1e-6 + tail)
  double max_err = 0.0;
  for (cplx z : zs) {
    const ZParams zp = ZParams::from(z);
    const auto g = dde::solve_system(Kind::G, zp, V, s.dde);
    const auto phi = dde::solve_system(Kind::PHI, zp, V, s.dde);
    for (cplx sv : ss) {
      const auto lg = dde::laplace_transform(g, sv, V);
      const cplx g_exact = std::exp((z - 1.0) * std::log(sv) + z * std::log(specfun::rho_hat(sv)));
      const auto lp = dde::laplace_transform(phi, sv, V);
      const cplx p_exact = std::exp((zp.theta_z - 1.0) * std::log(sv) - z * specfun::eval_J(sv));
      const double eg = std::abs(lg.value - g_exact), ep = std::abs(lp.value - p_exact);
      max_err = std::max({max_err, eg, ep});
      worst = std::max({worst, eg - (1e-6 + lg.tail_bound), ep - (1e-6 + lp.tail_bound)});
    }
  }
  const auto rho = dde::solve_system(Kind::RHO, ZParams::from(1.0), V, s.dde);
  for (cplx sv : ss) {
    const auto lr = dde::laplace_transform(rho, sv, V);
    const double e = std::abs(lr.value - specfun::rho_hat(sv));
    max_err = std::max(max_err, e);
    worst = std::max(worst, e - (1e-6 + lr.tail_bound));
  }
  r.values = {{"max_err", max_err}};
  r.pass = worst <= 0.0;
}

void saddle_solvers(CheckResult& r, const asym::Settings& s) {
  double xi_res = 0.0;
  for (int i = 0; i <= 200; ++i) {
    const double u = 1.0001 * std::pow(1e6 / 1.0001, i / 200.0);
    xi_res = std::max(xi_res, specfun::solve_xi(u, s.newton).residual);
  }
  double z_res = 0.0;
  const cplx zs[] = {{1.0, 1.0}, std::polar(1.0, kPi / 6), std::polar(2.0, -kPi / 3), {0.5, 0.2}};
  for (cplx z : zs)
    for (double v : {4.0, 10.0, 50.0, 300.0, 3000.0})
      z_res = std::max(z_res, specfun::solve_zeta0(v / z, s.newton).residual);
  const cplx z = std::polar(1.0, kPi / 4);
  const double t = std::arg(z);
  std::vector<double> errs;
  for (double v : {50.0, 100.0, 200.0}) {
    const double xz = specfun::solve_xi(v / std::abs(z), s.newton).xi;
    const cplx expansion = xz + t * t / (2 * xz * xz) - cplx(0.0, 1.0) * xz * t / (xz - 1.0);
    errs.push_back(std::abs(specfun::solve_zeta0(v / z, s.newton).root - expansion));
  }
  r.values = {{"xi_residual", xi_res}, {"zeta0_residual", z_res},
              {"exp_err_50", errs[0]}, {"exp_err_100", errs[1]}, {"exp_err_200", errs[2]}};
  r.pass = xi_res <= 1e-12 && z_res <= 1e-12 && errs[1] < errs[0] && errs[2] < errs[1];
}

void sieve_exactness(CheckResult& r, const asym::Settings& s) {
  using arith::TableMode;
  arith::BuildOptions bo;
  bo.exec = s.exec;
  const auto t100 = arith::build_table(100, 5, TableMode::SPF_SIEVE, bo);
  const auto st = arith::friable_stats(t100);
  bool ok = st.psi == 34 && st.histogram.size() == 4 && st.histogram[0] == 1 && st.histogram[1] == 12 &&
            st.histogram[2] == 18 && st.histogram[3] == 3;
  const auto tx = arith::build_table(10000, 10000, TableMode::SPF_SIEVE, bo);
  ok = ok && tx.count_upto(10000) == 10000;
  const auto t6 = arith::build_table(1000000, 1000, TableMode::SPF_SIEVE, bo);
  const auto s6 = arith::friable_stats(t6);
  std::uint64_t sum_omega = 0;
  for (std::size_t k = 0; k < s6.histogram.size(); ++k) sum_omega += k * s6.histogram[k];
  const std::uint64_t by_primes = arith::first_moment_by_primes(t6, 1000000);
  ok = ok && sum_omega == by_primes;
  Timer big;
  const auto t7 = arith::build_table(10000000, 1000, TableMode::SPF_SIEVE, bo);
  const double psi7 = double(t7.count_upto(1e7));
  const double secs = big.seconds();
  r.values = {{"psi_100_5", double(st.psi)}, {"sum_omega", double(sum_omega)},
              {"sum_psi_x_over_p", double(by_primes)}, {"psi_1e7_1e3", psi7}, {"sieve_seconds", secs}};
  r.pass = ok && secs < 30.0;
}

void euler_products(CheckResult& r, const asym::Settings& s) {
  const long P = s.coeff.P;
  const auto b1 = coeffs::euler_B(1.0, 1.0, P);
  const auto b2 = coeffs::euler_B(2.0, 1.0, P);
  const auto b2d = coeffs::euler_B(2.0, 1.0, 2 * P);
  const double e1 = std::abs(b1.value - 1.0);
  const double e2 = std::abs(b2.value - 6.0 / (kPi * kPi));
  const double drift = std::abs(b2.value - b2d.value);
  const auto c = coeffs::euler_B({1.3, 0.4}, 1.0, P);
  const auto cd = coeffs::euler_B({1.3, 0.4}, 1.0, 2 * P);
  const double drift_c = std::abs(c.value - cd.value);
  r.values = {{"err_B1", e1}, {"err_B2", e2}, {"tail_B2", b2.tail_bound}, {"doubling_B2", drift},
              {"tail_Bz", c.tail_bound}, {"doubling_Bz", drift_c}};
  r.pass = e1 <= 1e-9 && e2 <= 1e-6 && drift <= b2.tail_bound && e2 <= b2.tail_bound && drift_c <= c.tail_bound;
}

void z2_leading_term(CheckResult& r, const asym::Settings& s) {
  arith::BuildOptions bo;
  bo.exec = s.exec;
  const double x = 1e7;
  std::vector<double> devs;
  for (double y : {200.0, 500.0, 2000.0}) {
    const auto tab = arith::build_table(static_cast<std::uint64_t>(x), y, arith::TableMode::SPF_SIEVE, bo);
    const cplx exact = arith::friable_stats(tab, cplx(2.0)).psi_f;
    const cplx main = asym::main_term_raw(x, y, 2.0, 0, s);
    devs.push_back(std::abs(exact / main - 1.0));
    r.values.push_back({"dev_y" + fmt(y), devs.back()});
  }
  r.pass = devs[1] < devs[0] && devs[2] < devs[1] && devs[2] <= 0.5;
}

void lambda_beats_main(CheckResult& r, const asym::Settings& s) {
  const double x = 1e6;
  const double y = std::exp(std::pow(std::log(x), 0.7));
  arith::BuildOptions bo;
  bo.exec = s.exec;
  const double psi = double(arith::build_table(1000000, y, arith::TableMode::SPF_SIEVE, bo).count_upto(x));
  const cplx lam = asym::lambda_f(x, y, 1.0, s).value;
  const cplx main = asym::main_term_raw(x, y, 1.0, 0, s);
  const double el = std::abs(psi - lam), em = std::abs(psi - main);
  r.values = {{"y", y}, {"psi", psi}, {"err_lambda", el}, {"err_main", em}};
  r.pass = el <= em;
}

void omega_envelopes(CheckResult& r, const asym::Settings& s) {
  const double x = 1e7, y = 1e3;
  arith::BuildOptions bo;
  bo.exec = s.exec;
  const auto tab = arith::build_table(10000000, y, arith::TableMode::SPF_SIEVE, bo);
  const auto st = arith::friable_stats(tab);
  const auto m = asym::moments(x, y, 1.0, s, false);
  const double mu = m.mu_r, sigma = std::sqrt(m.sigma_r2);
  const double N = double(st.psi);

  // Kolmogorov distance: check both one-sided limits at every atom.
  double ks = 0.0, below = 0.0;
  for (std::size_t k = 0; k < st.histogram.size(); ++k) {
    const double phi = specfun::normal_cdf((double(k) - mu) / sigma);
    ks = std::max(ks, std::abs(below - phi));
    below += st.histogram[k] / N;
    ks = std::max(ks, std::abs(below - phi));
  }
  ks = std::max(ks, std::abs(1.0 - below));
  bool ok_ks = ks <= 0.25;

  auto exact = [&](int k) { return k < int(st.histogram.size()) ? st.histogram[k] / N : 0.0; };
  auto within2 = [](double pred, double ex) { return ex > 0.0 && pred >= 0.5 * ex && pred <= 2.0 * ex; };
  bool ok_gauss = true;
  const int fl = static_cast<int>(std::floor(mu));
  for (int k = fl - 1; k <= fl + 1; ++k) {
    const double g = asym::predict_local(x, y, k, asym::LocalMode::GAUSS, s);
    r.values.push_back({"gauss_ratio_k" + std::to_string(k), g / exact(k)});
    ok_gauss = ok_gauss && within2(g, exact(k));
  }
  bool ok_tilted = true;
  for (double rr : {0.8, 1.0, 1.3}) {
    const int k = static_cast<int>(std::lround(asym::moments(x, y, rr, s, false).mu_r));
    double t = 0.0;
    try {
      t = asym::predict_local(x, y, k, asym::LocalMode::TILTED, s);
    } catch (const Error&) {
      t = 0.0;
    }
    r.values.push_back({"tilted_ratio_r" + fmt(rr), t / exact(k)});
    ok_tilted = ok_tilted && within2(t, exact(k));
  }
  asym::Settings sl = s;
  sl.c_ld = 0.01;
  bool ok_tail = true;
  for (double v : {1.0, 1.5, 2.0}) {
    double freq = 0.0;
    for (std::size_t k = 0; k < st.histogram.size(); ++k)
      if (std::abs(double(k) - mu) > v * sigma) freq += st.histogram[k] / N;
    const double bound = asym::large_dev(x, y, v, sl);
    r.values.push_back({"tail_v" + fmt(v), freq});
    ok_tail = ok_tail && freq <= bound;
  }
  r.values.insert(r.values.begin(), {{"mu", mu}, {"sigma", sigma}, {"ks", ks}});
  r.pass = ok_ks && ok_gauss && ok_tilted && ok_tail;
  r.detail = std::string("ks ") + (ok_ks ? "ok" : "fail") + ", gauss " + (ok_gauss ? "ok" : "fail") +
             ", tilted " + (ok_tilted ? "ok" : "fail") + ", tails " + (ok_tail ? "ok" : "fail");
}

void factorization(CheckResult& r, const asym::Settings&) {
  double worst = 0.0;
  for (cplx z : {cplx(1.0), cplx(1.3, 0.4)}) {
    const double e = std::abs(asym::partial_zeta_factorization_error(1e4, 1.1, z));
    r.values.push_back({"rel_err_z" + fmt(z.real()), e});
    worst = std::max(worst, e);
  }
  r.pass = worst <= 0.05;
}

void phi_limit(CheckResult& r, const asym::Settings& s) {
  const cplx z = -0.8;
  const ZParams zp = ZParams::from(z);
  const auto phi = dde::solve_system(Kind::PHI, zp, 20.0, s.dde);
  const cplx v = dde::eval_derivative(phi, zp.m, 20.0);
  const double e = std::abs(v - std::exp(kEulerGamma * z));
  r.values = {{"err", e}};
  r.pass = e <= 1e-3;
}

const double kBudget[kCheckCount + 1] = {0, 1, 10, 30, 5, 30, 10, 120, 60, 180, 10, 5};

}  // namespace

const char* check_name(int id) {
  switch (id) {
    case 1: return "Dickman values";
    case 2: return "convolution power";
    case 3: return "Laplace identities";
    case 4: return "saddle solvers";
    case 5: return "sieve exactness";
    case 6: return "Euler products";
    case 7: return "z = 2 leading term";
    case 8: return "Lambda_f beats the bare main term";
    case 9: return "omega-statistics envelopes";
    case 10: return "partial zeta factorization";
    case 11: return "phi_z limit";
  }
  throw DomainError("check_name: unknown check " + std::to_string(id));
}

std::function<double(double)> library_rho_conv() {
  auto tab = std::make_shared<dde::SolutionTable>(dde::solve_system(Kind::RHO, ZParams::from(1.0), 4.0));
  return [tab](double v) {
    auto f = [&](double t) { return tab->value(t).real() * tab->value(v - t).real(); };
    // breakpoints of rho(t) and rho(v - t)
    std::vector<double> cuts{0.0, v};
    for (int h = 1; h < v; ++h) {
      cuts.push_back(h);
      cuts.push_back(v - h);
    }
    std::sort(cuts.begin(), cuts.end());
    double acc = 0.0;
    for (std::size_t i = 0; i + 1 < cuts.size(); ++i)
      if (cuts[i + 1] > cuts[i]) acc += quad::adaptive(f, cuts[i], cuts[i + 1], 1e-13).value;
    return acc;
  };
}

CheckResult run_check(int id, const asym::Settings& s, const References& refs) {
  CheckResult r;
  r.id = id;
  r.name = check_name(id);
  r.budget_seconds = kBudget[id];
  Timer t;
  try {
    switch (id) {
      case 1: dickman_values(r, refs, s); break;
      case 2: convolution_power(r, refs, s); break;
      case 3: laplace_identities(r, s); break;
      case 4: saddle_solvers(r, s); break;
      case 5: sieve_exactness(r, s); break;
      case 6: euler_products(r, s); break;
      case 7: z2_leading_term(r, s); break;
      case 8: lambda_beats_main(r, s); break;
      case 9: omega_envelopes(r, s); break;
      case 10: factorization(r, s); break;
      case 11: phi_limit(r, s); break;
    }
  } catch (const Error& e) {
    r.pass = false;
    r.detail = std::string("error: ") + e.what();
  }
  r.seconds = t.seconds();
  if (r.seconds > r.budget_seconds) {
    r.pass = false;
    r.detail += (r.detail.empty() ? "" : "; ") + std::string("over time budget");
  }
  return r;
}

std::vector<CheckResult> run_checks(const std::vector<int>& ids, const asym::Settings& s, const References& refs) {
  std::vector<CheckResult> out;
  for (int id : ids) out.push_back(run_check(id, s, refs));
  return out;
}

}  // namespace frkt::report
