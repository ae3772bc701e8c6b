#pragma once

#include <cstdint>
#include <vector>

#include "frkt/core.hpp"

namespace frkt::kernels {

// Per-integer record: bit 7 set when P+(n) <= y, bits 0..6 hold omega(n).
inline constexpr std::uint8_t kFriableBit = 0x80;
inline constexpr std::uint8_t kOmegaMask = 0x7f;

// Records for n = 1..x (index n-1) by a segmented sieve. Blocks are
// independent; Exec::Parallel spreads them over OpenMP threads.
std::vector<std::uint8_t> friable_records(std::uint64_t x, double y, std::uint64_t block, Exec exec);

// Serial reference: full smallest-prime-factor table, then one linear pass.
std::vector<std::uint8_t> friable_records_reference(std::uint64_t x, double y);

// spf[n] for n = 0..x, with spf[0] = 0 and spf[1] = 1.
std::vector<std::uint32_t> spf_table(std::uint64_t x);
std::vector<std::uint8_t> records_from_spf(const std::vector<std::uint32_t>& spf, double y);

// Sum of term(n) over n in [lo, hi] in fixed blocks, partial sums combined
// in block order so the result does not depend on the thread count.
template <class F>
cplx block_sum(std::uint64_t lo, std::uint64_t hi, F&& term, Exec exec, std::uint64_t block = 1 << 16) {
  if (hi < lo) return 0.0;
  const std::uint64_t count = hi - lo + 1;
  const std::int64_t nblocks = static_cast<std::int64_t>((count + block - 1) / block);
  std::vector<cplx> partial(nblocks, 0.0);
  auto run = [&](std::int64_t b) {
    const std::uint64_t a = lo + static_cast<std::uint64_t>(b) * block;
    const std::uint64_t e = std::min(hi, a + block - 1);
    cplx acc = 0.0;
    for (std::uint64_t n = a; n <= e; ++n) acc += term(n);
    partial[b] = acc;
  };
  if (exec == Exec::Parallel) {
#pragma omp parallel for schedule(dynamic, 1)
    for (std::int64_t b = 0; b < nblocks; ++b) run(b);
  } else {
    for (std::int64_t b = 0; b < nblocks; ++b) run(b);
  }
  cplx total = 0.0;
  for (const cplx& p : partial) total += p;
  return total;
}

}  // namespace frkt::kernels
