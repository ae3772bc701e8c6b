#pragma once

#include <array>
#include <cstdint>
#include <span>
#include <vector>

#include "frkt/core.hpp"
#include "frkt/series.hpp"

namespace frkt::coeffs {

struct EulerProductValue {
  cplx z;
  cplx s;
  long prime_cutoff = 0;
  cplx value;
  double tail_bound = 0.0;
};

// B_z(s) = prod_{p<=P} (1 - p^-s)^z (1 + z/(p^s - 1)).
EulerProductValue euler_B(cplx z, cplx s, long P);
// Sum of principal logs of the factors over the supplied primes.
cplx log_euler_B(cplx z, cplx s, std::span<const std::uint32_t> primes);
// Majorant of the omitted log-factors for p > P.
double euler_log_tail(cplx z, cplx s, long P);

// gamma_0 .. gamma_10
extern const std::array<double, 11> kStieltjes;

// Coefficients of s zeta(s+1) = 1 + gamma s + sum_{n>=1} (-1)^n gamma_n s^{n+1} / n!.
SeriesPoly szeta_series(int J);

struct CoeffOptions {
  long P = 100000;
  int M = 64;
  double radius = 0.25;
  Exec exec = Exec::Parallel;
};

// B_z(1 + s) on the Cauchy circle s = r e^{2 pi i k / M}.
std::vector<cplx> cauchy_node_values(cplx z, const CoeffOptions& opt);
// Taylor coefficients 0..J of B_z(1 + s).
SeriesPoly euler_taylor(cplx z, int J, const CoeffOptions& opt = {});
// a_0 .. a_J with s^z F(s+1)/(s+1) = sum_j a_j s^j and F = zeta^z B_z.
SeriesPoly a_coeffs(cplx z, int J, const CoeffOptions& opt = {});

}  // namespace frkt::coeffs
