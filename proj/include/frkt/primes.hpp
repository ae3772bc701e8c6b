#pragma once

#include <cstdint>
#include <vector>

namespace frkt::arith {

// Primes p <= n by a plain sieve of Eratosthenes.
std::vector<std::uint32_t> primes_up_to(std::uint64_t n);

}  // namespace frkt::arith
