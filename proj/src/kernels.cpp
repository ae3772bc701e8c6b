#include "frkt/kernels.hpp"

#include <algorithm>
#include <cmath>

#include "frkt/primes.hpp"

namespace frkt::kernels {

namespace {

std::uint64_t isqrt(std::uint64_t n) {
  auto r = static_cast<std::uint64_t>(std::sqrt(static_cast<double>(n)));
  while (r * r > n) --r;
  while ((r + 1) * (r + 1) <= n) ++r;
  return r;
}

// Largest integer prime bound implied by the real threshold y.
std::uint64_t floor_y(double y) { return static_cast<std::uint64_t>(std::floor(y)); }

void sieve_block(std::uint64_t lo, std::uint64_t hi, const std::vector<std::uint32_t>& primes,
                 std::uint64_t ylim, std::uint8_t* out) {
  const std::size_t len = hi - lo;
  std::vector<std::uint32_t> rem(len);
  std::vector<std::uint32_t> largest(len, 1);
  std::vector<std::uint8_t> omega(len, 0);
  for (std::size_t i = 0; i < len; ++i) rem[i] = static_cast<std::uint32_t>(lo + i);
  for (std::uint32_t p : primes) {
    if (static_cast<std::uint64_t>(p) * p >= hi) break;
    std::uint64_t first = ((lo + p - 1) / p) * p;
    for (std::uint64_t n = first; n < hi; n += p) {
      const std::size_t i = n - lo;
      std::uint32_t r = rem[i];
      do r /= p;
      while (r % p == 0);
      rem[i] = r;
      ++omega[i];
      largest[i] = p;
    }
  }
  for (std::size_t i = 0; i < len; ++i) {
    std::uint64_t big = largest[i];
    std::uint8_t w = omega[i];
    if (rem[i] > 1) {
      ++w;
      big = rem[i];
    }
    out[i] = static_cast<std::uint8_t>((big <= ylim ? kFriableBit : 0) | w);
  }
}

}  // namespace

std::vector<std::uint8_t> friable_records(std::uint64_t x, double y, std::uint64_t block, Exec exec) {
  if (x > 0xFFFFFFFFull) throw RangeError("friable_records: x must fit in 32 bits");
  if (block == 0) throw DomainError("friable_records: block must be positive");
  std::vector<std::uint8_t> out(x);
  if (x == 0) return out;
  const auto primes = arith::primes_up_to(isqrt(x));
  const std::uint64_t ylim = floor_y(y);
  const std::int64_t nblocks = static_cast<std::int64_t>((x + block - 1) / block);
  auto run = [&](std::int64_t b) {
    const std::uint64_t lo = 1 + static_cast<std::uint64_t>(b) * block;
    const std::uint64_t hi = std::min(x + 1, lo + block);
    sieve_block(lo, hi, primes, ylim, out.data() + (lo - 1));
  };
  if (exec == Exec::Parallel) {
#pragma omp parallel for schedule(dynamic, 1)
    for (std::int64_t b = 0; b < nblocks; ++b) run(b);
  } else {
    for (std::int64_t b = 0; b < nblocks; ++b) run(b);
  }
  return out;
}

std::vector<std::uint32_t> spf_table(std::uint64_t x) {
  if (x > 0xFFFFFFFFull) throw RangeError("spf_table: x must fit in 32 bits");
  std::vector<std::uint32_t> spf(x + 1, 0);
  if (x >= 1) spf[1] = 1;
  for (std::uint64_t n = 2; n <= x; ++n) {
    if (spf[n] != 0) continue;
    spf[n] = static_cast<std::uint32_t>(n);
    if (n * n > x) continue;
    for (std::uint64_t m = n * n; m <= x; m += n)
      if (spf[m] == 0) spf[m] = static_cast<std::uint32_t>(n);
  }
  return spf;
}

std::vector<std::uint8_t> records_from_spf(const std::vector<std::uint32_t>& spf, double y) {
  const std::uint64_t x = spf.empty() ? 0 : spf.size() - 1;
  const std::uint64_t ylim = floor_y(y);
  std::vector<std::uint8_t> omega(x + 1, 0);
  std::vector<std::uint32_t> largest(x + 1, 1);
  std::vector<std::uint8_t> out(x);
  for (std::uint64_t n = 2; n <= x; ++n) {
    const std::uint32_t p = spf[n];
    const std::uint64_t m = n / p;
    omega[n] = static_cast<std::uint8_t>(omega[m] + (spf[m] == p ? 0 : 1));
    largest[n] = std::max<std::uint32_t>(largest[m], p);
  }
  for (std::uint64_t n = 1; n <= x; ++n)
    out[n - 1] = static_cast<std::uint8_t>((largest[n] <= ylim ? kFriableBit : 0) | omega[n]);
  return out;
}

std::vector<std::uint8_t> friable_records_reference(std::uint64_t x, double y) {
  return records_from_spf(spf_table(x), y);
}

}  // namespace frkt::kernels
