#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "frkt/arith.hpp"
#include "frkt/chebyshev.hpp"
#include "frkt/coeffs.hpp"
#include "frkt/core.hpp"
#include "frkt/dde.hpp"
#include "frkt/specfun.hpp"

namespace frkt::asym {

using specfun::ZParams;

struct Settings {
  double beta = 0.3;
  double delta = 0.2;
  double quad_tol = 1e-10;
  specfun::NewtonOptions newton{};
  dde::SolverOptions dde{};
  coeffs::CoeffOptions coeff{};
  // bracket for solve_r_for_k
  double r_min = 0.25;
  double r_max = 4.0;
  // constants of the tilted-law range and of the large-deviation bound
  double c1 = 0.1;
  double c2 = 1.0;
  double c3 = 4.0;
  double c_ld = 0.01;
  // omega table size used for the W_j integrals when none is supplied
  double sieve_cap = 1e7;
  Exec exec = Exec::Parallel;

  void validate() const;
};

// --- ranges -----------------------------------------------------------------

// exp((log x)^(1 - beta)) <= y <= x
bool in_G_beta(double x, double y, double beta);
// (log log y)^(1/beta) / log y
double e_y(double y, double beta);
// u >= 1 and u - j >= e_y for 1 <= j <= min(u, J + 1)
bool in_V(double u, int J, double y, double beta);

// --- Lambda_f ---------------------------------------------------------------

// D(w) = e^{-Lw} + int_0^w g'(s) e^{-L(w-s)} ds on [0, w_max]; x/n * D(u - log n / L)
// is the weight of n in Lambda_f.
class DriftKernel {
 public:
  DriftKernel(const dde::SolutionTable& g, double L, double w_max, int degree = 24);
  cplx operator()(double w) const;
  double w_max() const { return w_max_; }

 private:
  double L_;
  double w_max_;
  std::vector<double> starts_;
  std::vector<double> widths_;
  std::vector<ChebSeries> pieces_;
};

struct LambdaResult {
  cplx value;
  double u = 0.0;
};

// Lambda for an arbitrary weight f(n), n <= x.
LambdaResult lambda_weighted(double x, double y, cplx z, const std::function<cplx(std::uint64_t)>& f,
                             const Settings& s = {});
// Lambda_f for f(n) = z^omega(n); `all` must have threshold >= floor(x) (every n recorded).
LambdaResult lambda_f(double x, double y, cplx z, const arith::FriableTable& all, const Settings& s = {});
LambdaResult lambda_f(double x, double y, cplx z, const Settings& s = {});

// Table with every n <= x marked, so omega(n) is available for all n.
arith::FriableTable omega_table(std::uint64_t x, Exec exec = Exec::Parallel);

// --- expansion --------------------------------------------------------------

struct ExpansionTerm {
  int j = 0;
  cplx a_j;
  cplx psi_deriv;
};

struct Expansion {
  ZParams z;
  int J = 0;
  double x = 0.0;
  double y = 0.0;
  double u = 0.0;
  std::vector<ExpansionTerm> terms;
  cplx main;
  cplx correction{0.0};  // x U_J, integer z outside V only
  double error_envelope = 0.0;
  bool in_G_beta = true;
  bool in_V = true;
  bool restricted = false;  // summation cut to j < l + m_z
  std::vector<std::string> notes;

  cplx total() const { return main + correction; }
};

// x (log y)^{z-1} sum_{j<=J} a_j psi_z^{(j)}(u) / (log y)^j with no range logic.
cplx main_term_raw(double x, double y, cplx z, int J, const Settings& s = {});

// Full expansion with range checks. `all` feeds the correction term and may be null.
Expansion main_expansion(double x, double y, cplx z, int J, const Settings& s = {},
                         const arith::FriableTable* all = nullptr);

struct WResult {
  cplx value;
  double v_cut = 0.0;
  double tail = 0.0;
};

// W_j(t, y; f_z) for integer z, truncated at v_cut = log(all.x_max()) / log y.
WResult W_j(int j, double t, double y, int z, const arith::FriableTable& all, const Settings& s = {});

struct Correction {
  cplx U;  // U_J, not multiplied by x
  int ell = 0;
  double tail = 0.0;
};

Correction correction_terms(double x, double y, cplx z, int J, const arith::FriableTable& all,
                            const Settings& s = {});

// Z_{y,f}(v) of the absolutely continuous measure, Re z not an integer.
cplx z_density(double v, double y, cplx z, const arith::FriableTable& all);

// --- omega statistics -------------------------------------------------------

struct MomentSet {
  double r = 1.0;
  double u = 1.0;
  double y = 0.0;
  double xi = 0.0;
  double mu_r = 0.0;
  double sigma_r2 = 0.0;  // mu_r - u^2 xi'(u/r) / r
  double L = 0.0;
  double K_r = 0.0;
};

// K_r is filled only when with_prefactor is set (it needs two DDE solves and an Euler product).
MomentSet moments(double x, double y, double r, const Settings& s = {}, bool with_prefactor = true);
// sigma_r^2 with xi'(u/r) written out in terms of xi(u/r).
double sigma_r2_closed_form(double x, double y, double r);
double solve_r_for_k(double x, double y, double k, const Settings& s = {});

enum class LocalMode { GAUSS, TILTED };

struct TiltedRange {
  double lower = 0.0;
  double upper = 0.0;
  double value = 0.0;  // k - I(xi(u))
  bool ok = false;
};
TiltedRange tilted_range(double x, double y, double k, const Settings& s = {});

double predict_ek(double x, double y, double v);
double predict_local(double x, double y, int k, LocalMode mode, const Settings& s = {});
// Tilted formula without the range check; throws RangeError when no r gives mu_r = k.
double tilted_law(double x, double y, int k, const Settings& s = {});
double large_dev(double x, double y, double v, const Settings& s = {});

// --- saddle points and diagnostics -----------------------------------------

cplx alpha_z(double x, double y, cplx z, const Settings& s = {});
double alpha_r(double x, double y, double r);
double alpha_r_residual(double x, double y, double r, double alpha);

struct CharFnDiag {
  cplx H;
  cplx quadratic;
};
CharFnDiag char_fn_diag(double x, double y, double r, double t, const Settings& s = {});

// zeta(s, y)^z / [((s-1) zeta(s))^z (log y)^z rho_hat((s-1) log y)^z] - 1
cplx partial_zeta_factorization_error(double y, cplx s, cplx z);

}  // namespace frkt::asym
