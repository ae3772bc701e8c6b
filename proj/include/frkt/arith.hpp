#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "frkt/core.hpp"

namespace frkt::arith {

enum class TableMode { SPF_SIEVE, SMOOTH_ENUM };

struct BuildOptions {
  std::uint64_t memory_budget = std::uint64_t(2) << 30;  // bytes
  std::uint64_t block = std::uint64_t(1) << 22;
  Exec exec = Exec::Parallel;
};

// SPF_SIEVE: one record per n <= x_max (see kernels.hpp for the bit layout).
// SMOOTH_ENUM: sorted friable n with their omega only.
class FriableTable {
 public:
  FriableTable() = default;
  static FriableTable from_records(double y, std::uint64_t x_max, std::vector<std::uint8_t> records);
  static FriableTable from_smooth(double y, std::uint64_t x_max, std::vector<std::uint64_t> n,
                                  std::vector<std::uint8_t> omega);

  double y() const { return y_; }
  std::uint64_t x_max() const { return x_max_; }
  TableMode mode() const { return mode_; }

  bool friable(std::uint64_t n) const;
  // omega(n); in SMOOTH_ENUM mode only defined for friable n.
  int omega(std::uint64_t n) const;

  // Calls f(n, omega) for every friable n <= x in increasing order.
  void for_each_friable(std::uint64_t x, const std::function<void(std::uint64_t, int)>& f) const;
  std::uint64_t count_upto(double x) const;

  const std::vector<std::uint8_t>& records() const { return records_; }
  const std::vector<std::uint64_t>& smooth() const { return smooth_; }
  const std::vector<std::uint8_t>& smooth_omega() const { return smooth_omega_; }

 private:
  double y_ = 2.0;
  std::uint64_t x_max_ = 0;
  TableMode mode_ = TableMode::SPF_SIEVE;
  std::vector<std::uint8_t> records_;
  std::vector<std::uint64_t> smooth_;
  std::vector<std::uint8_t> smooth_omega_;
};

FriableTable build_table(std::uint64_t x, double y, TableMode mode, const BuildOptions& opt = {});

// Ascending y-friable integers <= x by recursive products over primes <= y.
void enumerate_smooth(std::uint64_t x, double y, std::vector<std::uint64_t>& n, std::vector<std::uint8_t>& omega);

struct FriableStats {
  std::uint64_t psi = 0;
  cplx psi_f = 0.0;
  std::uint64_t psi_k = 0;
  double mean = 0.0;
  double var = 0.0;
  std::vector<std::uint64_t> histogram;  // counts by omega

  // Empirical CDF of (omega - mu) / sigma at v.
  double cdf(double v, double mu, double sigma) const;
};

FriableStats friable_stats(const FriableTable& tab, std::optional<cplx> z = std::nullopt,
                           std::optional<int> k = std::nullopt, std::optional<double> x = std::nullopt);

// sum_{n <= x} z^omega(n). Uses the table when it covers floor(x) with y >= x.
cplx partial_sum_M(const FriableTable* tab, double x, cplx z);

// Sum_{p <= y} Psi(x/p, y), computed from the table counts.
std::uint64_t first_moment_by_primes(const FriableTable& tab, std::uint64_t x);

// Cache file: "FRKT1", little-endian u64 x_max, then u32 spf[n] for n = 0..x_max.
void write_spf_cache(const std::string& path, const std::vector<std::uint32_t>& spf);
std::vector<std::uint32_t> read_spf_cache(const std::string& path);

}  // namespace frkt::arith
