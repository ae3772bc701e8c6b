#include "frkt/arith.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <cstring>
#include <fstream>
#include <numeric>

#include "frkt/kernels.hpp"
#include "frkt/primes.hpp"

namespace frkt::arith {

using kernels::kFriableBit;
using kernels::kOmegaMask;

FriableTable FriableTable::from_records(double y, std::uint64_t x_max, std::vector<std::uint8_t> records) {
  if (records.size() != x_max) throw DomainError("FriableTable: record count does not match x_max");
  FriableTable t;
  t.y_ = y;
  t.x_max_ = x_max;
  t.mode_ = TableMode::SPF_SIEVE;
  t.records_ = std::move(records);
  return t;
}

FriableTable FriableTable::from_smooth(double y, std::uint64_t x_max, std::vector<std::uint64_t> n,
                                       std::vector<std::uint8_t> omega) {
  if (n.size() != omega.size()) throw DomainError("FriableTable: size mismatch");
  FriableTable t;
  t.y_ = y;
  t.x_max_ = x_max;
  t.mode_ = TableMode::SMOOTH_ENUM;
  t.smooth_ = std::move(n);
  t.smooth_omega_ = std::move(omega);
  return t;
}

bool FriableTable::friable(std::uint64_t n) const {
  if (n == 0 || n > x_max_) throw RangeError("FriableTable: n outside table");
  if (mode_ == TableMode::SPF_SIEVE) return records_[n - 1] & kFriableBit;
  return std::binary_search(smooth_.begin(), smooth_.end(), n);
}

int FriableTable::omega(std::uint64_t n) const {
  if (n == 0 || n > x_max_) throw RangeError("FriableTable: n outside table");
  if (mode_ == TableMode::SPF_SIEVE) return records_[n - 1] & kOmegaMask;
  auto it = std::lower_bound(smooth_.begin(), smooth_.end(), n);
  if (it == smooth_.end() || *it != n) throw DomainError("FriableTable: omega unknown for non-friable n");
  return smooth_omega_[it - smooth_.begin()];
}

void FriableTable::for_each_friable(std::uint64_t x, const std::function<void(std::uint64_t, int)>& f) const {
  x = std::min(x, x_max_);
  if (mode_ == TableMode::SPF_SIEVE) {
    for (std::uint64_t n = 1; n <= x; ++n) {
      const std::uint8_t r = records_[n - 1];
      if (r & kFriableBit) f(n, r & kOmegaMask);
    }
    return;
  }
  for (std::size_t i = 0; i < smooth_.size() && smooth_[i] <= x; ++i) f(smooth_[i], smooth_omega_[i]);
}

std::uint64_t FriableTable::count_upto(double x) const {
  if (x < 1.0) return 0;
  const std::uint64_t xi = std::min<std::uint64_t>(x_max_, static_cast<std::uint64_t>(std::floor(x)));
  if (mode_ == TableMode::SMOOTH_ENUM)
    return std::upper_bound(smooth_.begin(), smooth_.end(), xi) - smooth_.begin();
  std::uint64_t c = 0;
  for (std::uint64_t n = 0; n < xi; ++n) c += records_[n] >> 7;
  return c;
}

void enumerate_smooth(std::uint64_t x, double y, std::vector<std::uint64_t>& n, std::vector<std::uint8_t>& omega) {
  n.clear();
  omega.clear();
  if (x == 0) return;
  const std::uint64_t ylim = static_cast<std::uint64_t>(std::floor(std::min<double>(y, double(x))));
  const auto primes = primes_up_to(ylim);
  // Depth-first over non-increasing primes: each product is visited once.
  struct Frame {
    std::uint64_t value;
    std::size_t limit;  // primes[0..limit) may still be used
    std::uint8_t w;
  };
  std::vector<Frame> stack{{1, primes.size(), 0}};
  while (!stack.empty()) {
    const Frame f = stack.back();
    stack.pop_back();
    n.push_back(f.value);
    omega.push_back(f.w);
    const std::uint64_t room = x / f.value;
    for (std::size_t i = 0; i < f.limit; ++i) {
      const std::uint64_t p = primes[i];
      if (p > room) break;
      // Exact power p^e, then continue with primes below p.
      std::uint64_t v = f.value * p;
      const auto w = static_cast<std::uint8_t>(f.w + 1);
      while (true) {
        stack.push_back({v, i, w});
        if (v > x / p) break;
        v *= p;
      }
    }
  }
  std::vector<std::size_t> order(n.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return n[a] < n[b]; });
  std::vector<std::uint64_t> ns(n.size());
  std::vector<std::uint8_t> ws(n.size());
  for (std::size_t i = 0; i < order.size(); ++i) {
    ns[i] = n[order[i]];
    ws[i] = omega[order[i]];
  }
  n.swap(ns);
  omega.swap(ws);
}

FriableTable build_table(std::uint64_t x, double y, TableMode mode, const BuildOptions& opt) {
  if (!(y >= 2.0)) throw DomainError("build_table: requires y >= 2");
  if (x < 1) throw DomainError("build_table: requires x >= 1");
  if (mode == TableMode::SPF_SIEVE) {
    if (x > opt.memory_budget)
      throw ResourceError("build_table: sieve needs " + std::to_string(x) + " bytes, over the memory budget; use SMOOTH_ENUM");
    return FriableTable::from_records(y, x, kernels::friable_records(x, y, opt.block, opt.exec));
  }
  std::vector<std::uint64_t> n;
  std::vector<std::uint8_t> w;
  enumerate_smooth(x, y, n, w);
  if (n.size() * 9 > opt.memory_budget) throw ResourceError("build_table: smooth list exceeds memory budget");
  return FriableTable::from_smooth(y, x, std::move(n), std::move(w));
}

double FriableStats::cdf(double v, double mu, double sigma) const {
  if (!(sigma > 0.0)) throw DomainError("cdf: sigma must be positive");
  if (psi == 0) return 0.0;
  std::uint64_t c = 0;
  for (std::size_t k = 0; k < histogram.size(); ++k)
    if ((double(k) - mu) / sigma <= v) c += histogram[k];
  return double(c) / double(psi);
}

FriableStats friable_stats(const FriableTable& tab, std::optional<cplx> z, std::optional<int> k,
                           std::optional<double> x) {
  if (k && *k < 0) throw DomainError("friable_stats: k must be non-negative");
  if (z && std::abs(*z) > 8.0) throw DomainError("friable_stats: |z| must be at most 8");
  const std::uint64_t xi =
      x ? std::min<std::uint64_t>(tab.x_max(), *x < 1.0 ? 0 : static_cast<std::uint64_t>(std::floor(*x))) : tab.x_max();
  FriableStats s;
  s.histogram.assign(kOmegaMask + 1, 0);
  tab.for_each_friable(xi, [&](std::uint64_t, int w) { ++s.histogram[w]; });
  while (!s.histogram.empty() && s.histogram.back() == 0) s.histogram.pop_back();
  std::array<cplx, kOmegaMask + 1> zpow{};
  const cplx zz = z.value_or(1.0);
  zpow[0] = 1.0;
  for (std::size_t j = 1; j < zpow.size(); ++j) zpow[j] = zpow[j - 1] * zz;
  long double sum = 0, sum2 = 0;
  for (std::size_t w = 0; w < s.histogram.size(); ++w) {
    const auto c = s.histogram[w];
    s.psi += c;
    s.psi_f += double(c) * zpow[w];
    sum += static_cast<long double>(c) * w;
    sum2 += static_cast<long double>(c) * w * w;
  }
  if (k) s.psi_k = *k < static_cast<int>(s.histogram.size()) ? s.histogram[*k] : 0;
  if (s.psi > 0) {
    const long double m = sum / s.psi;
    s.mean = static_cast<double>(m);
    s.var = static_cast<double>(sum2 / s.psi - m * m);
  }
  return s;
}

cplx partial_sum_M(const FriableTable* tab, double x, cplx z) {
  if (!(x >= 1.0)) throw DomainError("partial_sum_M: requires x >= 1");
  const auto xi = static_cast<std::uint64_t>(std::floor(x));
  std::array<cplx, kOmegaMask + 1> zpow{};
  zpow[0] = 1.0;
  for (std::size_t j = 1; j < zpow.size(); ++j) zpow[j] = zpow[j - 1] * z;
  std::vector<std::uint8_t> local;
  const std::vector<std::uint8_t>* rec = nullptr;
  if (tab && tab->mode() == TableMode::SPF_SIEVE && tab->x_max() >= xi && tab->y() >= x) {
    rec = &tab->records();
  } else {
    local = kernels::friable_records(xi, std::max(2.0, x), std::uint64_t(1) << 22, Exec::Parallel);
    rec = &local;
  }
  std::array<std::uint64_t, kOmegaMask + 1> hist{};
  for (std::uint64_t n = 0; n < xi; ++n) ++hist[(*rec)[n] & kOmegaMask];
  cplx total = 0.0;
  for (std::size_t w = 0; w < hist.size(); ++w) total += double(hist[w]) * zpow[w];
  return total;
}

std::uint64_t first_moment_by_primes(const FriableTable& tab, std::uint64_t x) {
  x = std::min(x, tab.x_max());
  const auto ylim = static_cast<std::uint64_t>(std::floor(tab.y()));
  const auto primes = primes_up_to(std::min(ylim, x));
  // cumulative friable counts, so each Psi(x/p, y) is a lookup
  std::vector<std::uint64_t> counts;
  if (tab.mode() == TableMode::SPF_SIEVE) {
    const std::uint64_t top = x / 2;
    counts.assign(top + 1, 0);
    for (std::uint64_t n = 1; n <= top; ++n) counts[n] = counts[n - 1] + (tab.records()[n - 1] >> 7);
  }
  std::uint64_t total = 0;
  for (std::uint32_t p : primes) {
    const std::uint64_t q = x / p;
    total += tab.mode() == TableMode::SPF_SIEVE ? counts[q] : tab.count_upto(double(q));
  }
  return total;
}

namespace {

constexpr char kMagic[5] = {'F', 'R', 'K', 'T', '1'};

void put_le(std::ostream& os, std::uint64_t v, int bytes) {
  char b[8];
  for (int i = 0; i < bytes; ++i) b[i] = static_cast<char>((v >> (8 * i)) & 0xff);
  os.write(b, bytes);
}

std::uint64_t get_le(const unsigned char* b, int bytes) {
  std::uint64_t v = 0;
  for (int i = 0; i < bytes; ++i) v |= std::uint64_t(b[i]) << (8 * i);
  return v;
}

}  // namespace

void write_spf_cache(const std::string& path, const std::vector<std::uint32_t>& spf) {
  if (spf.empty()) throw DomainError("write_spf_cache: empty table");
  std::ofstream os(path, std::ios::binary);
  if (!os) throw ResourceError("write_spf_cache: cannot open " + path);
  os.write(kMagic, sizeof kMagic);
  put_le(os, spf.size() - 1, 8);
  std::vector<char> buf;
  buf.reserve(1 << 20);
  for (std::uint32_t v : spf) {
    for (int i = 0; i < 4; ++i) buf.push_back(static_cast<char>((v >> (8 * i)) & 0xff));
    if (buf.size() >= (1 << 20)) {
      os.write(buf.data(), buf.size());
      buf.clear();
    }
  }
  os.write(buf.data(), buf.size());
  if (!os) throw ResourceError("write_spf_cache: write failed for " + path);
}

std::vector<std::uint32_t> read_spf_cache(const std::string& path) {
  std::ifstream is(path, std::ios::binary);
  if (!is) throw ResourceError("read_spf_cache: cannot open " + path);
  unsigned char head[13];
  if (!is.read(reinterpret_cast<char*>(head), sizeof head) || std::memcmp(head, kMagic, 5) != 0)
    throw DomainError("read_spf_cache: bad header in " + path);
  const std::uint64_t x_max = get_le(head + 5, 8);
  std::vector<std::uint32_t> spf(x_max + 1);
  std::vector<unsigned char> buf(4 * (x_max + 1));
  if (!is.read(reinterpret_cast<char*>(buf.data()), buf.size()))
    throw DomainError("read_spf_cache: truncated file " + path);
  for (std::uint64_t i = 0; i <= x_max; ++i) spf[i] = static_cast<std::uint32_t>(get_le(buf.data() + 4 * i, 4));
  return spf;
}

}  // namespace frkt::arith
