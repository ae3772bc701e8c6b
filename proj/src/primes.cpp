#include "frkt/primes.hpp"

#include "frkt/core.hpp"

namespace frkt::arith {

std::vector<std::uint32_t> primes_up_to(std::uint64_t n) {
  if (n > 0xFFFFFFFFull) throw RangeError("primes_up_to: bound exceeds 32 bits");
  std::vector<std::uint32_t> out;
  if (n < 2) return out;
  std::vector<bool> composite(n + 1, false);
  for (std::uint64_t p = 2; p <= n; ++p) {
    if (composite[p]) continue;
    out.push_back(static_cast<std::uint32_t>(p));
    for (std::uint64_t q = p * p; q <= n; q += p) composite[q] = true;
  }
  return out;
}

}  // namespace frkt::arith
