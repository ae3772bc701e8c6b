#include "frkt/coeffs.hpp"

#include <cmath>
#include <string>

#include "frkt/primes.hpp"

namespace frkt::coeffs {

const std::array<double, 11> kStieltjes = {
    0.577215664901532860606512090082,  -0.0728158454836767248605863758750,
    -0.00969036319287231848453038603521, 0.00205383442030334586616004654275,
    0.00232537006546730005746817017752,  0.000793323817301062701753334877444,
    -0.000238769345430199609872421841908, -0.000527289567057751046074097505478,
    -0.000352123353803039509602052165001, -0.0000343947744180880481779146237982,
    0.000205332814909064794683722289237};

namespace {

cplx log1p_complex(cplx x) {
  if (std::abs(x) < 1e-3) {
    cplx term = x, sum = 0.0;
    for (int n = 1; n <= 8; ++n) {
      sum += (n % 2 ? 1.0 : -1.0) * term / double(n);
      term *= x;
    }
    return sum;
  }
  return std::log(1.0 + x);
}

}  // namespace

cplx log_euler_B(cplx z, cplx s, std::span<const std::uint32_t> primes) {
  cplx sum = 0.0;
  for (auto p : primes) {
    const cplx x = std::exp(-s * std::log(double(p)));
    const cplx second = z * x / (1.0 - x);
    if (std::abs(1.0 + second) < 1e-14)
      throw SingularFactorError("euler_B: factor vanishes at p = " + std::to_string(p));
    sum += z * log1p_complex(-x) + log1p_complex(second);
  }
  return sum;
}

double euler_log_tail(cplx z, cplx s, long P) {
  const double sigma = s.real();
  const double quad_const = 0.5 * std::abs(z - z * z);
  const double cubic_const = std::pow(1.0 + std::abs(z), 3);
  const double Pd = static_cast<double>(P);
  double tail = quad_const * std::pow(Pd, 1.0 - 2.0 * sigma) / (2.0 * sigma - 1.0);
  if (z != cplx(1.0) && 3.0 * sigma > 1.0)
    tail += cubic_const * std::pow(Pd, 1.0 - 3.0 * sigma) / (3.0 * sigma - 1.0);
  return tail;
}

EulerProductValue euler_B(cplx z, cplx s, long P) {
  if (!(s.real() > 0.5)) throw DomainError("euler_B: requires Re s > 1/2");
  if (P < 1000) throw DomainError("euler_B: prime cutoff must be at least 1000");
  const auto primes = arith::primes_up_to(static_cast<std::uint64_t>(P));
  EulerProductValue out;
  out.z = z;
  out.s = s;
  out.prime_cutoff = P;
  out.value = std::exp(log_euler_B(z, s, primes));
  out.tail_bound = std::abs(out.value) * std::expm1(euler_log_tail(z, s, P));
  return out;
}

SeriesPoly szeta_series(int J) {
  if (J < 0) throw DomainError("szeta_series: J must be non-negative");
  if (J > 10) throw UnsupportedOrderError("szeta_series: Stieltjes table supports J <= 10");
  std::vector<cplx> c(J + 1, 0.0);
  c[0] = 1.0;
  double fact = 1.0;
  for (int k = 1; k <= J; ++k) {
    const int n = k - 1;
    if (n > 0) fact *= n;
    c[k] = (n % 2 ? -1.0 : 1.0) * kStieltjes[n] / fact;
  }
  return SeriesPoly(std::move(c));
}

std::vector<cplx> cauchy_node_values(cplx z, const CoeffOptions& opt) {
  if (opt.M < 4) throw DomainError("cauchy_node_values: M too small");
  const auto primes = arith::primes_up_to(static_cast<std::uint64_t>(opt.P));
  std::vector<cplx> out(opt.M);
  const int M = opt.M;
  auto node = [&](int k) {
    const cplx s = 1.0 + std::polar(opt.radius, 2.0 * kPi * k / M);
    out[k] = std::exp(log_euler_B(z, s, primes));
  };
  if (opt.exec == Exec::Parallel) {
#pragma omp parallel for schedule(static)
    for (int k = 0; k < M; ++k) node(k);
  } else {
    for (int k = 0; k < M; ++k) node(k);
  }
  return out;
}

SeriesPoly euler_taylor(cplx z, int J, const CoeffOptions& opt) {
  if (J < 0) throw DomainError("euler_taylor: J must be non-negative");
  if (J >= opt.M / 2) throw DomainError("euler_taylor: J too large for the node count");
  const std::vector<cplx> vals = cauchy_node_values(z, opt);
  std::vector<cplx> c(J + 1, 0.0);
  for (int j = 0; j <= J; ++j) {
    cplx acc = 0.0;
    for (int k = 0; k < opt.M; ++k) acc += vals[k] * std::polar(1.0, -2.0 * kPi * double(j) * k / opt.M);
    c[j] = acc / (double(opt.M) * std::pow(opt.radius, j));
  }
  return SeriesPoly(std::move(c));
}

SeriesPoly a_coeffs(cplx z, int J, const CoeffOptions& opt) {
  if (z == cplx(0.0)) throw DomainError("a_coeffs: z must be nonzero");
  if (J < 0) throw DomainError("a_coeffs: J must be non-negative");
  if (J > 8) throw UnsupportedOrderError("a_coeffs: J <= 8 supported");
  const SeriesPoly zeta_part = pow(szeta_series(J), z);
  const SeriesPoly euler_part = euler_taylor(z, J, opt);
  return zeta_part * euler_part / SeriesPoly::linear(1.0, 1.0, J);
}

}  // namespace frkt::coeffs
