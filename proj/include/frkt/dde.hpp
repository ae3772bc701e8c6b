#pragma once

#include <vector>

#include "frkt/chebyshev.hpp"
#include "frkt/core.hpp"
#include "frkt/series.hpp"
#include "frkt/specfun.hpp"

namespace frkt::dde {

using specfun::ZParams;

// The three delay systems v f'(v) + a f(v) + b f(v-1) = 0 (v > 1) with
// initial data v^alpha / Gamma(alpha+1) on (0, 1]:
//   G    a = 0        alpha = 0
//   RHO  a = 1 - z    alpha = z - 1
//   PHI  a = theta_z  alpha = -theta_z
// and b = z in every case.
enum class Kind { G, RHO, PHI };

const char* kind_name(Kind k);

enum class Side { Auto, Left, Right };

struct SolverOptions {
  int cheb_degree = 32;
};

struct Jump {
  int h = 0;
  int j = 0;
  cplx delta;
};

// On [h, h+1] with s = v - h: f = smooth(s) + s^exponent singular(s).
struct Segment {
  ChebSeries smooth;
  ChebSeries singular;
  cplx exponent{0.0};
};

class SolutionTable {
 public:
  SolutionTable(Kind kind, const ZParams& zp, double v_max, std::vector<Segment> segments);

  Kind kind() const { return kind_; }
  const ZParams& zp() const { return zp_; }
  double v_max() const { return v_max_; }
  cplx a() const { return a_; }
  cplx b() const { return b_; }
  cplx alpha() const { return alpha_; }
  const std::vector<Segment>& segments() const { return segments_; }
  // Filled for integer z (see jump_table); empty otherwise.
  const std::vector<Jump>& jumps() const { return jumps_; }

  // f(v); right-continuous at integers. Zero for v < 0.
  cplx value(double v) const;
  // Derivative of the stored representation.
  cplx slope(double v) const;
  // j-th derivative of the closed form on (0, 1].
  cplx initial(double v, int j) const;

 private:
  friend SolutionTable solve_system(Kind, const ZParams&, double, const SolverOptions&);

  Kind kind_;
  ZParams zp_;
  double v_max_;
  cplx a_, b_, alpha_;
  std::vector<Segment> segments_;
  std::vector<Jump> jumps_;
};

SolutionTable solve_system(Kind kind, const ZParams& zp, double v_max, const SolverOptions& opt = {});

inline constexpr int kMaxDerivativeOrder = 12;

// j-th derivative by differentiating the delay equation:
// f^{(j+1)}(v) = -[(a + j) f^{(j)}(v) + b f^{(j)}(v-1)] / v.
cplx eval_derivative(const SolutionTable& tab, int j, double v, Side side = Side::Auto);

std::vector<Jump> jump_table(const SolutionTable& tab, int J);
cplx jump(const SolutionTable& tab, int h, int j);

struct LaplaceResult {
  cplx value;
  double tail_bound = 0.0;
};

// int_0^V f(v) e^{-sv} dv with an exponential tail estimate beyond V.
LaplaceResult laplace_transform(const SolutionTable& tab, cplx s, double V);

// Saddle-point asymptotic form of rho_z(v).
cplx rho_asym(const ZParams& zp, double v);
// v^{-1/2} exp(-Re int_{|z|}^v zeta_0(t/z) dt).
double big_R(const ZParams& zp, double v, double tol = 1e-10);

// Taylor coefficients c_0..c_J of rho_hat(s)^z at s = 0.
SeriesPoly taylor_c(const ZParams& zp, int J);
// sum_{j<=J} c_j v^{-z-j} / Gamma(1-z-j)
cplx g_large_v(const ZParams& zp, double v, int J);

// psi_z = rho_z for Re z > 0 and phi_z^{(m+1)} otherwise.
class PsiEvaluator {
 public:
  PsiEvaluator(const ZParams& zp, double v_max, const SolverOptions& opt = {});
  cplx operator()(int j, double u, Side side = Side::Auto) const;
  const SolutionTable& table() const { return table_; }
  int offset() const { return offset_; }

 private:
  SolutionTable table_;
  int offset_;
};

PsiEvaluator psi_dispatch(const ZParams& zp, double v_max, const SolverOptions& opt = {});

}  // namespace frkt::dde
