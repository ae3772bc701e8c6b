#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <random>

#include "frkt/arith.hpp"
#include "frkt/kernels.hpp"
#include "oracles.hpp"

using namespace frkt;
using namespace frkt::arith;

TEST_CASE("hand-enumerated S(100, 5)") {
  for (auto mode : {TableMode::SPF_SIEVE, TableMode::SMOOTH_ENUM}) {
    const auto t = build_table(100, 5, mode);
    const auto st = friable_stats(t, cplx(-1.0), 2);
    CHECK(st.psi == 34);
    REQUIRE(st.histogram.size() == 4);
    CHECK(st.histogram[0] == 1);
    CHECK(st.histogram[1] == 12);
    CHECK(st.histogram[2] == 18);
    CHECK(st.histogram[3] == 3);
    CHECK(st.psi_k == 18);
    CHECK(std::abs(st.psi_f - 4.0) == 0.0);
    CHECK(t.friable(1));
    CHECK(t.omega(1) == 0);
    CHECK(t.friable(96));
    CHECK_FALSE(t.friable(98));
  }
  const auto t = build_table(100, 5, TableMode::SPF_SIEVE);
  CHECK(friable_stats(t, cplx(1.0)).psi_f == cplx(34.0));
  CHECK_THROWS_AS(friable_stats(t, std::nullopt, -1), DomainError);
  CHECK_THROWS_AS(friable_stats(t, cplx(9.0)), DomainError);
}

TEST_CASE("omega and friability against trial division") {
  const auto t = build_table(200000, 97.5, TableMode::SPF_SIEVE);
  std::mt19937_64 rng(3);
  std::uniform_int_distribution<std::uint64_t> pick(1, 200000);
  for (int i = 0; i < 1000; ++i) {
    const auto n = pick(rng);
    CHECK(t.omega(n) == oracle::omega_trial(n));
    CHECK(t.friable(n) == (oracle::largest_prime_factor(n) <= 97));
  }
  // additivity over coprime factors
  for (int i = 0; i < 1000; ++i) {
    const std::uint64_t a = 1 + pick(rng) % 400, b = 1 + pick(rng) % 400;
    if (std::gcd(a, b) == 1) CHECK(t.omega(a * b) == t.omega(a) + t.omega(b));
  }
}

TEST_CASE("both modes agree") {
  const auto a = build_table(10000, 30, TableMode::SPF_SIEVE);
  const auto b = build_table(10000, 30, TableMode::SMOOTH_ENUM);
  std::vector<std::pair<std::uint64_t, int>> la, lb;
  a.for_each_friable(10000, [&](std::uint64_t n, int w) { la.push_back({n, w}); });
  b.for_each_friable(10000, [&](std::uint64_t n, int w) { lb.push_back({n, w}); });
  CHECK(la == lb);
  for (double x : {1.0, 17.5, 999.0, 10000.0}) CHECK(a.count_upto(x) == b.count_upto(x));
}

TEST_CASE("Psi(x, x) and monotonicity") {
  const auto t = build_table(10000, 10000, TableMode::SPF_SIEVE);
  CHECK(t.count_upto(10000) == 10000);
  CHECK(t.count_upto(5000.7) == 5000);
  std::uint64_t prev = 0;
  for (double y : {2.0, 3.0, 10.0, 50.0, 200.0, 1000.0}) {
    const auto c = build_table(10000, y, TableMode::SPF_SIEVE).count_upto(10000);
    CHECK(c >= prev);
    prev = c;
  }
  const auto u = build_table(10000, 50, TableMode::SPF_SIEVE);
  std::uint64_t last = 0;
  for (double x = 1; x <= 10000; x += 37) {
    CHECK(u.count_upto(x) >= last);
    last = u.count_upto(x);
  }
}

TEST_CASE("first-moment identity") {
  for (auto [x, y] : {std::pair<std::uint64_t, double>{10000, 50}, {1000000, 1000}}) {
    const auto t = build_table(x, y, TableMode::SPF_SIEVE);
    const auto st = friable_stats(t);
    std::uint64_t direct = 0, total = 0;
    for (std::size_t k = 0; k < st.histogram.size(); ++k) {
      direct += k * st.histogram[k];
      total += st.histogram[k];
    }
    CHECK(total == st.psi);
    CHECK(direct == first_moment_by_primes(t, x));
    CHECK(st.mean == doctest::Approx(double(direct) / st.psi).epsilon(1e-14));
  }
}

TEST_CASE("empirical cdf") {
  const auto t = build_table(100, 5, TableMode::SPF_SIEVE);
  const auto st = friable_stats(t);
  CHECK(st.cdf(-10.0, 0.0, 1.0) == 0.0);
  CHECK(st.cdf(0.0, 0.0, 1.0) == doctest::Approx(1.0 / 34));
  CHECK(st.cdf(2.0, 0.0, 1.0) == doctest::Approx(31.0 / 34));
  CHECK(st.cdf(3.0, 0.0, 1.0) == 1.0);
}

TEST_CASE("partial sums M(x; z^omega)") {
  CHECK(partial_sum_M(nullptr, 1.0, cplx(0.3, 2.0)) == cplx(1.0));
  CHECK(partial_sum_M(nullptr, 10.0, 1.0) == cplx(10.0));
  CHECK(partial_sum_M(nullptr, 10.0, 2.0) == cplx(23.0));
  const auto all = build_table(1000, 1000, TableMode::SPF_SIEVE);
  cplx direct = 0.0;
  const cplx z(0.4, -1.1);
  for (std::uint64_t n = 1; n <= 777; ++n) direct += std::pow(z, oracle::omega_trial(n));
  CHECK(std::abs(partial_sum_M(&all, 777.9, z) - direct) <= 1e-10 * std::abs(direct));
}

TEST_CASE("memory budget") {
  BuildOptions small;
  small.memory_budget = 20000;
  CHECK_THROWS_AS(build_table(100000, 10, TableMode::SPF_SIEVE, small), ResourceError);
  CHECK_NOTHROW(build_table(100000, 10, TableMode::SMOOTH_ENUM, small));
  CHECK_THROWS_AS(build_table(100, 1.5, TableMode::SPF_SIEVE), DomainError);
}

TEST_CASE("SPF cache round trip") {
  const auto spf = kernels::spf_table(5000);
  const auto path = (std::filesystem::temp_directory_path() / "frkt_test_cache.bin").string();
  write_spf_cache(path, spf);
  CHECK(std::filesystem::file_size(path) == 5 + 8 + 4 * spf.size());
  {
    std::ifstream f(path, std::ios::binary);
    char magic[5];
    f.read(magic, 5);
    CHECK(std::string(magic, 5) == "FRKT1");
    unsigned char le[8];
    f.read(reinterpret_cast<char*>(le), 8);
    std::uint64_t x = 0;
    for (int i = 7; i >= 0; --i) x = (x << 8) | le[i];
    CHECK(x == 5000);
  }
  CHECK(read_spf_cache(path) == spf);
  const auto t = FriableTable::from_records(30, 5000, kernels::records_from_spf(spf, 30));
  CHECK(t.count_upto(5000) == build_table(5000, 30, TableMode::SPF_SIEVE).count_upto(5000));
  {
    std::ofstream f(path, std::ios::binary);
    f << "FRKT0garbage";
  }
  CHECK_THROWS_AS(read_spf_cache(path), Error);
  std::filesystem::remove(path);
}
