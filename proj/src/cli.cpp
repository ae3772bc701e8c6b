#include "frkt/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cmath>
#include <cstdio>
#include <fstream>
#include <functional>
#include <map>
#include <optional>
#include <sstream>

#include "frkt/arith.hpp"
#include "frkt/coeffs.hpp"
#include "frkt/dde.hpp"
#include "frkt/kernels.hpp"
#include "frkt/report.hpp"
#include "frkt/specfun.hpp"

namespace frkt::cli {

namespace {

using json = nlohmann::json;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string num(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.15g", v);
  return buf;
}

// Buffered CSV; nothing reaches the stream unless every cell is finite.
class Csv {
 public:
  explicit Csv(std::vector<std::string> header) : header_(std::move(header)) {
    for (std::size_t i = 0; i < header_.size(); ++i) buf_ << (i ? "," : "") << header_[i];
    buf_ << '\n';
  }
  // an empty optional leaves the cell blank
  void row(const std::vector<std::optional<double>>& cells) {
    if (cells.size() != header_.size()) throw std::logic_error("csv row width");
    for (std::size_t i = 0; i < cells.size(); ++i) {
      buf_ << (i ? "," : "");
      if (!cells[i]) continue;
      if (!std::isfinite(*cells[i])) throw RangeError("non-finite value in column " + header_[i]);
      buf_ << num(*cells[i]);
    }
    buf_ << '\n';
  }
  std::string str() const { return buf_.str(); }

 private:
  std::vector<std::string> header_;
  std::ostringstream buf_;
};

cplx arg_complex(const std::string& flag, const std::string& text) {
  try {
    return parse_complex(text);
  } catch (const DomainError& e) {
    throw UsageError(flag + ": " + e.what());
  }
}

dde::Kind parse_kind(const std::string& k) {
  if (k == "G" || k == "g") return dde::Kind::G;
  if (k == "RHO" || k == "rho") return dde::Kind::RHO;
  if (k == "PHI" || k == "phi") return dde::Kind::PHI;
  throw UsageError("--kind: expected G, RHO or PHI");
}

dde::Side parse_side(const std::string& s) {
  if (s == "auto") return dde::Side::Auto;
  if (s == "left") return dde::Side::Left;
  if (s == "right") return dde::Side::Right;
  throw UsageError("--side: expected auto, left or right");
}

std::uint64_t to_count(double x, const char* flag) {
  if (!(x >= 1.0) || x > 1e12) throw UsageError(std::string(flag) + ": expected 1 <= x <= 1e12");
  return static_cast<std::uint64_t>(std::floor(x));
}

json settings_json(const asym::Settings& s) {
  return {{"newton_tol", s.newton.tol},
          {"quad_tol", s.quad_tol},
          {"cheb_degree", s.dde.cheb_degree},
          {"euler_P", s.coeff.P},
          {"cauchy_M", s.coeff.M},
          {"beta", s.beta},
          {"delta", s.delta},
          {"constants",
           {{"c_28", s.c_ld}, {"c1", s.c1}, {"c2", s.c2}, {"c3", s.c3}, {"r_min", s.r_min}, {"r_max", s.r_max}}}};
}

struct Context {
  asym::Settings s;
  std::string out_path;
  std::ostream* out = nullptr;
  std::ostream* err = nullptr;

  void emit(const std::string& text) const {
    if (out_path.empty()) {
      *out << text;
      return;
    }
    std::ofstream f(out_path, std::ios::binary);
    if (!f) throw ResourceError("cannot open " + out_path + " for writing");
    f << text;
  }

  arith::FriableTable table(double x, double y, const std::string& mode, const std::string& cache) const {
    const std::uint64_t n = to_count(x, "--x");
    if (!(y >= 2.0)) throw UsageError("--y: expected y >= 2");
    if (!cache.empty()) {
      auto spf = arith::read_spf_cache(cache);
      const std::uint64_t x_max = spf.size() - 1;
      if (x_max < n) throw RangeError("cache " + cache + " covers only x <= " + std::to_string(x_max));
      return arith::FriableTable::from_records(y, x_max, kernels::records_from_spf(spf, y));
    }
    arith::BuildOptions bo;
    bo.exec = s.exec;
    if (mode == "spf") return arith::build_table(n, y, arith::TableMode::SPF_SIEVE, bo);
    if (mode == "enum") return arith::build_table(n, y, arith::TableMode::SMOOTH_ENUM, bo);
    throw UsageError("--mode: expected spf or enum");
  }
};

using Actions = std::map<const CLI::App*, std::function<void()>>;

// --- specfun ----------------------------------------------------------------

void add_specfun(CLI::App& app, Context& c, Actions& act) {
  auto* mod = app.add_subcommand("specfun", "special functions")->require_subcommand(1)->fallthrough();

  auto* xi = mod->add_subcommand("xi", "xi(u) and xi'(u)")->fallthrough();
  auto u = std::make_shared<std::vector<double>>();
  xi->add_option("--u", *u, "u > 0 (comma list)")->required()->delimiter(',');
  act[xi] = [&c, u] {
    Csv csv({"u", "xi", "xi_prime", "residual"});
    for (double v : *u) {
      const auto r = specfun::solve_xi(v, c.s.newton);
      csv.row({v, r.xi, r.xi_prime, r.residual});
    }
    c.emit(csv.str());
  };

  // single complex argument ops
  struct Unary {
    const char* name;
    const char* help;
    const char* flag;
    const char* col;
    std::function<cplx(cplx)> f;
  };
  const std::vector<Unary> unary = {
      {"I", "I(w) = int_0^w (e^t - 1)/t dt", "--w", "I", specfun::eval_I},
      {"J", "J(s) = int_0^inf e^{-t}/(s + t) dt", "--s", "J", specfun::eval_J},
      {"rhohat", "Laplace transform of the Dickman function", "--s", "rhohat", specfun::rho_hat},
      {"gamma", "Gamma(s)", "--s", "gamma", specfun::gamma_complex},
  };
  for (const auto& op : unary) {
    auto* sub = mod->add_subcommand(op.name, op.help)->fallthrough();
    auto arg = std::make_shared<std::vector<std::string>>();
    sub->add_option(op.flag, *arg, "complex a+bi (comma list)")->required()->delimiter(',');
    act[sub] = [&c, arg, op] {
      const std::string a = op.flag + 2;
      Csv csv({a + "_re", a + "_im", std::string(op.col) + "_re", std::string(op.col) + "_im"});
      for (const auto& t : *arg) {
        const cplx w = arg_complex(op.flag, t);
        const cplx v = op.f(w);
        csv.row({w.real(), w.imag(), v.real(), v.imag()});
      }
      c.emit(csv.str());
    };
  }

  auto* z0 = mod->add_subcommand("zeta0", "root of e^zeta = 1 + w zeta")->fallthrough();
  auto w = std::make_shared<std::vector<std::string>>();
  z0->add_option("--w", *w, "complex a+bi (comma list)")->required()->delimiter(',');
  act[z0] = [&c, w] {
    Csv csv({"w_re", "w_im", "root_re", "root_im", "residual"});
    for (const auto& t : *w) {
      const cplx a = arg_complex("--w", t);
      const auto r = specfun::solve_zeta0(a, c.s.newton);
      csv.row({a.real(), a.imag(), r.root.real(), r.root.imag(), r.residual});
    }
    c.emit(csv.str());
  };

  auto* zt = mod->add_subcommand("zeta", "zeta(s), or the partial product zeta(s, y)")->fallthrough();
  auto zs = std::make_shared<std::vector<std::string>>();
  auto zy = std::make_shared<std::optional<double>>();
  zt->add_option("--s", *zs, "complex a+bi (comma list)")->required()->delimiter(',');
  zt->add_option("--y", *zy, "restrict the Euler product to p <= y");
  act[zt] = [&c, zs, zy] {
    Csv csv({"s_re", "s_im", "zeta_re", "zeta_im"});
    for (const auto& t : *zs) {
      const cplx s = arg_complex("--s", t);
      const cplx v = specfun::zeta_values(s, *zy);
      csv.row({s.real(), s.imag(), v.real(), v.imag()});
    }
    c.emit(csv.str());
  };
}

// --- dde --------------------------------------------------------------------

void add_dde(CLI::App& app, Context& c, Actions& act) {
  auto* mod = app.add_subcommand("dde", "delay-differential systems g_z, rho_z, phi_z")
                  ->require_subcommand(1)
                  ->fallthrough();
  struct Common {
    std::string kind = "RHO";
    std::string z = "1";
  };
  auto common = [](CLI::App* sub, Common& o) {
    sub->add_option("--kind", o.kind, "G, RHO or PHI")->capture_default_str();
    sub->add_option("--z", o.z, "complex order a+bi")->capture_default_str();
  };

  auto* table = mod->add_subcommand("table", "tabulate the solution")->fallthrough();
  auto to = std::make_shared<Common>();
  auto vmax = std::make_shared<double>(10.0);
  auto step = std::make_shared<double>(0.25);
  common(table, *to);
  table->add_option("--vmax", *vmax, "upper end")->capture_default_str();
  table->add_option("--step", *step, "grid spacing")->capture_default_str();
  act[table] = [&c, to, vmax, step] {
    if (!(*step > 0.0)) throw UsageError("--step: must be positive");
    const auto zp = specfun::ZParams::from(arg_complex("--z", to->z));
    const auto tab = dde::solve_system(parse_kind(to->kind), zp, *vmax, c.s.dde);
    Csv csv({"v", "re", "im"});
    const long n = std::lround(std::floor(*vmax / *step + 1e-9));
    for (long i = 0; i <= n; ++i) {
      const double v = i * *step;
      const cplx f = tab.value(v);
      csv.row({v, f.real(), f.imag()});
    }
    c.emit(csv.str());
  };

  auto* eval = mod->add_subcommand("eval", "j-th derivative at v")->fallthrough();
  auto eo = std::make_shared<Common>();
  auto ej = std::make_shared<int>(0);
  auto ev = std::make_shared<std::vector<double>>();
  auto side = std::make_shared<std::string>("auto");
  common(eval, *eo);
  eval->add_option("--j", *ej, "derivative order")->capture_default_str();
  eval->add_option("--v", *ev, "points (comma list)")->required()->delimiter(',');
  eval->add_option("--side", *side, "auto, left or right at integer v")->capture_default_str();
  act[eval] = [&c, eo, ej, ev, side] {
    const auto zp = specfun::ZParams::from(arg_complex("--z", eo->z));
    double top = 1.0;
    for (double v : *ev) top = std::max(top, v);
    const auto tab = dde::solve_system(parse_kind(eo->kind), zp, std::ceil(top) + 1.0, c.s.dde);
    const auto sd = parse_side(*side);
    Csv csv({"v", "j", "re", "im"});
    for (double v : *ev) {
      const cplx f = dde::eval_derivative(tab, *ej, v, sd);
      csv.row({v, double(*ej), f.real(), f.imag()});
    }
    c.emit(csv.str());
  };

  auto* jumps = mod->add_subcommand("jumps", "derivative jumps at integers (integer z)")->fallthrough();
  auto jo = std::make_shared<Common>();
  auto jJ = std::make_shared<int>(3);
  common(jumps, *jo);
  jumps->add_option("--J", *jJ, "highest derivative")->capture_default_str();
  act[jumps] = [&c, jo, jJ] {
    const auto zp = specfun::ZParams::from(arg_complex("--z", jo->z));
    const auto tab = dde::solve_system(parse_kind(jo->kind), zp, *jJ + 3.0, c.s.dde);
    Csv csv({"h", "j", "delta_re", "delta_im"});
    for (const auto& jp : dde::jump_table(tab, *jJ)) csv.row({double(jp.h), double(jp.j), jp.delta.real(), jp.delta.imag()});
    c.emit(csv.str());
  };

  auto* lap = mod->add_subcommand("laplace", "truncated Laplace transform")->fallthrough();
  auto lo = std::make_shared<Common>();
  auto ls = std::make_shared<std::vector<std::string>>();
  auto lV = std::make_shared<double>(40.0);
  common(lap, *lo);
  lap->add_option("--s", *ls, "complex a+bi (comma list)")->required()->delimiter(',');
  lap->add_option("--V", *lV, "truncation point")->capture_default_str();
  act[lap] = [&c, lo, ls, lV] {
    const auto zp = specfun::ZParams::from(arg_complex("--z", lo->z));
    const auto tab = dde::solve_system(parse_kind(lo->kind), zp, *lV, c.s.dde);
    Csv csv({"s_re", "s_im", "re", "im", "tail_bound"});
    for (const auto& t : *ls) {
      const cplx s = arg_complex("--s", t);
      const auto r = dde::laplace_transform(tab, s, *lV);
      csv.row({s.real(), s.imag(), r.value.real(), r.value.imag(), r.tail_bound});
    }
    c.emit(csv.str());
  };
}

// --- coeffs -----------------------------------------------------------------

void add_coeffs(CLI::App& app, Context& c, Actions& act) {
  auto* mod = app.add_subcommand("coeffs", "expansion coefficients and Euler products")
                  ->require_subcommand(1)
                  ->fallthrough();

  auto series_op = [&](const char* name, const char* help, std::function<SeriesPoly(cplx, int)> f) {
    auto* sub = mod->add_subcommand(name, help)->fallthrough();
    auto z = std::make_shared<std::string>("1");
    auto J = std::make_shared<int>(3);
    sub->add_option("--z", *z, "complex a+bi")->capture_default_str();
    sub->add_option("--J", *J, "highest index")->capture_default_str();
    act[sub] = [&c, z, J, f] {
      if (*J < 0) throw UsageError("--J: must be non-negative");
      const auto p = f(arg_complex("--z", *z), *J);
      Csv csv({"j", "re", "im"});
      for (int j = 0; j <= *J; ++j) csv.row({double(j), p[j].real(), p[j].imag()});
      c.emit(csv.str());
    };
  };
  series_op("a", "a_j coefficients", [&c](cplx z, int J) { return coeffs::a_coeffs(z, J, c.s.coeff); });
  series_op("c", "Taylor coefficients of rho_hat(s)^z at 0",
            [](cplx z, int J) { return dde::taylor_c(specfun::ZParams::from(z), J); });

  auto* B = mod->add_subcommand("B", "truncated Euler product B_z(s)")->fallthrough();
  auto bz = std::make_shared<std::string>("1");
  auto bs = std::make_shared<std::string>("1");
  auto bP = std::make_shared<std::optional<long>>();
  B->add_option("--z", *bz, "complex a+bi")->capture_default_str();
  B->add_option("--s", *bs, "complex a+bi")->capture_default_str();
  B->add_option("--P", *bP, "prime cutoff (default euler_P)");
  act[B] = [&c, bz, bs, bP] {
    const long P = bP->value_or(c.s.coeff.P);
    const auto r = coeffs::euler_B(arg_complex("--z", *bz), arg_complex("--s", *bs), P);
    Csv csv({"P", "re", "im", "tail_bound"});
    csv.row({double(r.prime_cutoff), r.value.real(), r.value.imag(), r.tail_bound});
    c.emit(csv.str());
  };
}

// --- sieve ------------------------------------------------------------------

void add_sieve(CLI::App& app, Context& c, Actions& act) {
  auto* mod = app.add_subcommand("sieve", "exact friable counts")->require_subcommand(1)->fallthrough();
  struct Opts {
    double x = 100.0;
    double y = 5.0;
    std::string mode = "spf";
    std::string cache;
  };
  auto opts = [](CLI::App* sub, Opts& o) {
    sub->add_option("--x", o.x, "upper bound")->capture_default_str();
    sub->add_option("--y", o.y, "friability threshold")->capture_default_str();
    sub->add_option("--mode", o.mode, "spf (segmented sieve) or enum (smooth-number enumeration)")
        ->capture_default_str();
    sub->add_option("--cache", o.cache, "read smallest prime factors from a cache file");
  };

  auto* psi = mod->add_subcommand("psi", "Psi(x, y)")->fallthrough();
  auto po = std::make_shared<Opts>();
  opts(psi, *po);
  act[psi] = [&c, po] {
    const auto tab = c.table(po->x, po->y, po->mode, po->cache);
    Csv csv({"x", "y", "psi"});
    csv.row({po->x, po->y, double(tab.count_upto(po->x))});
    c.emit(csv.str());
  };

  auto* hist = mod->add_subcommand("hist", "counts of friable n <= x by omega(n)")->fallthrough();
  auto ho = std::make_shared<Opts>();
  opts(hist, *ho);
  act[hist] = [&c, ho] {
    const auto tab = c.table(ho->x, ho->y, ho->mode, ho->cache);
    const auto st = arith::friable_stats(tab, std::nullopt, std::nullopt, ho->x);
    Csv csv({"k", "count"});
    for (std::size_t k = 0; k < st.histogram.size(); ++k) csv.row({double(k), double(st.histogram[k])});
    c.emit(csv.str());
  };

  auto* mom = mod->add_subcommand("moment", "sum of omega over S(x, y) two ways")->fallthrough();
  auto mo = std::make_shared<Opts>();
  opts(mom, *mo);
  act[mom] = [&c, mo] {
    const auto tab = c.table(mo->x, mo->y, mo->mode, mo->cache);
    const auto st = arith::friable_stats(tab, std::nullopt, std::nullopt, mo->x);
    double direct = 0.0;
    for (std::size_t k = 0; k < st.histogram.size(); ++k) direct += double(k) * st.histogram[k];
    const auto by_primes = arith::first_moment_by_primes(tab, to_count(mo->x, "--x"));
    Csv csv({"x", "y", "sum_omega", "sum_psi_x_over_p"});
    csv.row({mo->x, mo->y, direct, double(by_primes)});
    c.emit(csv.str());
  };

  auto* M = mod->add_subcommand("M", "M(x) = sum_{n <= x} z^omega(n)")->fallthrough();
  auto mx = std::make_shared<std::vector<double>>();
  auto mz = std::make_shared<std::string>("1");
  M->add_option("--x", *mx, "upper bounds (comma list)")->required()->delimiter(',');
  M->add_option("--z", *mz, "complex a+bi")->capture_default_str();
  act[M] = [&c, mx, mz] {
    const cplx z = arg_complex("--z", *mz);
    double top = 1.0;
    for (double x : *mx) top = std::max(top, x);
    const auto all = asym::omega_table(to_count(top, "--x"), c.s.exec);
    Csv csv({"x", "re", "im"});
    for (double x : *mx) {
      to_count(x, "--x");
      const cplx v = arith::partial_sum_M(&all, x, z);
      csv.row({x, v.real(), v.imag()});
    }
    c.emit(csv.str());
  };

  auto* cache = mod->add_subcommand("cache", "write a smallest-prime-factor cache file")->fallthrough();
  auto cx = std::make_shared<double>(1e6);
  auto cf = std::make_shared<std::string>();
  cache->add_option("--x", *cx, "table size")->capture_default_str();
  cache->add_option("--file", *cf, "output path")->required();
  act[cache] = [&c, cx, cf] {
    const auto spf = kernels::spf_table(to_count(*cx, "--x"));
    arith::write_spf_cache(*cf, spf);
    Csv csv({"x_max", "bytes"});
    csv.row({double(spf.size() - 1), double(13 + 4 * spf.size())});
    c.emit(csv.str());
  };
}

// --- compare / omega / report ----------------------------------------------

void add_compare(CLI::App& app, Context& c, Actions& act) {
  auto* cmp = app.add_subcommand("compare", "exact Psi(x, y; z^omega) against Lambda_f and the expansion")
                  ->fallthrough();
  auto xs = std::make_shared<std::vector<double>>();
  auto ys = std::make_shared<std::vector<double>>();
  auto z = std::make_shared<std::string>("1");
  auto J = std::make_shared<int>(2);
  cmp->add_option("--x", *xs, "x values (comma list)")->required()->delimiter(',');
  cmp->add_option("--y", *ys, "y values (comma list)")->required()->delimiter(',');
  cmp->add_option("--z", *z, "complex a+bi")->capture_default_str();
  cmp->add_option("--J", *J, "expansion order for mainJ")->capture_default_str();
  act[cmp] = [&c, xs, ys, z, J] {
    const cplx zz = arg_complex("--z", *z);
    double top = 1.0;
    for (double x : *xs) top = std::max(top, x + 0.5);
    const std::uint64_t n = to_count(top, "--x");
    const auto all = asym::omega_table(n, c.s.exec);
    arith::BuildOptions bo;
    bo.exec = c.s.exec;
    Csv csv({"x", "y", "u", "exact_re", "exact_im", "lambda_re", "lambda_im", "mainJ0_re", "mainJ0_im", "mainJ_re",
             "mainJ_im", "envelope"});
    for (double y : *ys) {
      if (!(y >= 2.0)) throw UsageError("--y: expected y >= 2");
      const auto tab = arith::build_table(n, y, arith::TableMode::SPF_SIEVE, bo);
      for (double x0 : *xs) {
        for (double x : {x0, x0 + 0.5}) {
          const cplx exact = arith::friable_stats(tab, zz, std::nullopt, x).psi_f;
          const auto lam = asym::lambda_f(x, y, zz, all, c.s);
          const auto e0 = asym::main_expansion(x, y, zz, 0, c.s, &all);
          const auto eJ = asym::main_expansion(x, y, zz, *J, c.s, &all);
          csv.row({x, y, lam.u, exact.real(), exact.imag(), lam.value.real(), lam.value.imag(), e0.total().real(),
                   e0.total().imag(), eJ.total().real(), eJ.total().imag(), eJ.error_envelope});
        }
      }
    }
    c.emit(csv.str());
  };
}

void add_omega(CLI::App& app, Context& c, Actions& act) {
  auto* om = app.add_subcommand("omega", "omega(n) statistics on S(x, y) against the local laws")->fallthrough();
  auto x = std::make_shared<double>(1e7);
  auto y = std::make_shared<double>(1e3);
  om->add_option("--x", *x, "upper bound")->capture_default_str();
  om->add_option("--y", *y, "friability threshold")->capture_default_str();
  act[om] = [&c, x, y] {
    const auto tab = c.table(*x, *y, "spf", "");
    const auto st = arith::friable_stats(tab, std::nullopt, std::nullopt, *x);
    const double N = double(st.psi);
    Csv csv({"k", "count", "gauss", "tilted", "in_range_2_6"});
    for (std::size_t k = 0; k < st.histogram.size(); ++k) {
      const int kk = static_cast<int>(k);
      std::optional<double> tilted;
      try {
        tilted = N * asym::tilted_law(*x, *y, kk, c.s);
      } catch (const RangeError& e) {
        *c.err << "omega: no tilted value at k = " << k << ": " << e.what() << '\n';
      }
      const double gauss = N * asym::predict_local(*x, *y, kk, asym::LocalMode::GAUSS, c.s);
      const bool in_range = asym::tilted_range(*x, *y, kk, c.s).ok;
      csv.row({double(k), double(st.histogram[k]), gauss, tilted, in_range ? 1.0 : 0.0});
    }
    c.emit(csv.str());
  };
}

void add_report(CLI::App& app, Context& c, Actions& act) {
  auto* rep = app.add_subcommand("report", "run the acceptance checks and emit a JSON summary")->fallthrough();
  auto ids = std::make_shared<std::vector<int>>();
  rep->add_option("--checks", *ids, "check ids 1..11 (comma list, default all)")->delimiter(',');
  act[rep] = [&c, ids] {
    std::vector<int> run = *ids;
    if (run.empty())
      for (int i = 1; i <= report::kCheckCount; ++i) run.push_back(i);
    for (int i : run)
      if (i < 1 || i > report::kCheckCount) throw UsageError("--checks: ids must be in 1.." + std::to_string(report::kCheckCount));
    json checks = json::array(), outputs = json::object();
    for (const auto& r : report::run_checks(run, c.s)) {
      json vals = json::object();
      for (const auto& [k, v] : r.values) vals[k] = std::isfinite(v) ? json(v) : json(nullptr);
      outputs[std::to_string(r.id)] = vals;
      checks.push_back({{"id", r.id},
                        {"name", r.name},
                        {"pass", r.pass},
                        {"seconds", r.seconds},
                        {"budget_seconds", r.budget_seconds},
                        {"detail", r.detail}});
    }
    json doc = {{"inputs", {{"checks", run}}},
                {"outputs", outputs},
                {"tolerances", settings_json(c.s)},
                {"checks", checks}};
    c.emit(doc.dump(2) + "\n");
  };
}

}  // namespace

cplx parse_complex(const std::string& text) {
  std::string t;
  for (char ch : text)
    if (ch != ' ') t += ch;
  auto real = [&](const std::string& s) {
    if (s.empty() || s == "+") return 1.0;
    if (s == "-") return -1.0;
    std::size_t used = 0;
    double v = 0.0;
    try {
      v = std::stod(s, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used != s.size()) throw DomainError("cannot parse '" + text + "' as a complex number");
    return v;
  };
  if (t.empty()) throw DomainError("empty complex number");
  if (t.back() != 'i' && t.back() != 'j') return real(t);
  t.pop_back();
  // split at the last sign that is not an exponent sign
  std::size_t cut = std::string::npos;
  for (std::size_t k = t.size(); k-- > 1;)
    if ((t[k] == '+' || t[k] == '-') && t[k - 1] != 'e' && t[k - 1] != 'E') {
      cut = k;
      break;
    }
  if (cut == std::string::npos) return {0.0, real(t)};
  const std::string re = t.substr(0, cut);
  if (re.empty()) throw DomainError("cannot parse '" + text + "' as a complex number");
  return {real(re), real(t.substr(cut))};
}

void apply_config_json(const std::string& text, asym::Settings& s) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ConfigError(std::string("config: malformed JSON: ") + e.what());
  }
  if (!doc.is_object()) throw ConfigError("config: top level must be an object");
  auto number = [](const json& v, const std::string& field) {
    if (!v.is_number()) throw ConfigError(field + ": expected a number");
    return v.get<double>();
  };
  auto integer = [](const json& v, const std::string& field) {
    if (!v.is_number_integer()) throw ConfigError(field + ": expected an integer");
    return v.get<long>();
  };
  for (const auto& [key, v] : doc.items()) {
    if (key == "newton_tol") s.newton.tol = number(v, key);
    else if (key == "quad_tol") s.quad_tol = number(v, key);
    else if (key == "cheb_degree") s.dde.cheb_degree = static_cast<int>(integer(v, key));
    else if (key == "euler_P") s.coeff.P = integer(v, key);
    else if (key == "cauchy_M") s.coeff.M = static_cast<int>(integer(v, key));
    else if (key == "beta") s.beta = number(v, key);
    else if (key == "delta") s.delta = number(v, key);
    else if (key == "constants") {
      if (!v.is_object()) throw ConfigError("constants: expected an object");
      for (const auto& [name, cv] : v.items()) {
        const std::string field = "constants." + name;
        if (name == "c_28") s.c_ld = number(cv, field);
        else if (name == "c1") s.c1 = number(cv, field);
        else if (name == "c2") s.c2 = number(cv, field);
        else if (name == "c3") s.c3 = number(cv, field);
        else if (name == "r_min") s.r_min = number(cv, field);
        else if (name == "r_max") s.r_max = number(cv, field);
        else throw ConfigError(field + ": unknown constant");
      }
    } else {
      throw ConfigError(key + ": unknown field");
    }
  }
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Context c;
  c.out = &out;
  c.err = &err;
  Actions act;

  CLI::App app("Friable integers weighted by z^omega(n): special functions, DDE solvers, exact sieves and "
               "asymptotic comparisons.",
               "frkt");
  app.require_subcommand(1);
  std::string config;
  std::optional<double> newton_tol, quad_tol, beta, delta;
  std::optional<int> cheb_degree, cauchy_M;
  std::optional<long> euler_P;
  bool serial = false;
  app.add_option("--config", config, "JSON config file (flags override it)");
  app.add_option("--out", c.out_path, "write output to a file instead of stdout");
  app.add_option("--newton-tol", newton_tol, "Newton tolerance (default 1e-12)");
  app.add_option("--quad-tol", quad_tol, "quadrature tolerance (default 1e-10)");
  app.add_option("--cheb-degree", cheb_degree, "Chebyshev degree per unit interval (default 32)");
  app.add_option("--euler-P", euler_P, "Euler product prime cutoff (default 100000)");
  app.add_option("--cauchy-M", cauchy_M, "Cauchy contour nodes (default 64)");
  app.add_option("--beta", beta, "beta (default 0.3)");
  app.add_option("--delta", delta, "delta (default 0.2; beta + delta < 3/5)");
  app.add_flag("--serial", serial, "run every kernel on one thread");

  add_specfun(app, c, act);
  add_dde(app, c, act);
  add_coeffs(app, c, act);
  add_sieve(app, c, act);
  add_compare(app, c, act);
  add_omega(app, c, act);
  add_report(app, c, act);

  std::vector<std::string> rev(args.rbegin(), args.rend());
  try {
    app.parse(rev);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  try {
    if (!config.empty()) {
      std::ifstream f(config);
      if (!f) throw ConfigError("config: cannot read " + config);
      std::stringstream ss;
      ss << f.rdbuf();
      apply_config_json(ss.str(), c.s);
    }
    if (newton_tol) c.s.newton.tol = *newton_tol;
    if (quad_tol) c.s.quad_tol = *quad_tol;
    if (cheb_degree) c.s.dde.cheb_degree = *cheb_degree;
    if (euler_P) c.s.coeff.P = *euler_P;
    if (cauchy_M) c.s.coeff.M = *cauchy_M;
    if (beta) c.s.beta = *beta;
    if (delta) c.s.delta = *delta;
    c.s.exec = serial ? Exec::Serial : Exec::Parallel;
    c.s.coeff.exec = c.s.exec;
    c.s.validate();
  } catch (const ConfigError& e) {
    err << "config error: " << e.what() << '\n';
    return 2;
  }

  const CLI::App* leaf = nullptr;
  for (const auto* mod : app.get_subcommands()) {
    leaf = mod;
    const auto subs = mod->get_subcommands();
    if (!subs.empty()) leaf = subs.front();
  }
  try {
    act.at(leaf)();
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << '\n';
    return 2;
  } catch (const ConfigError& e) {
    err << "config error: " << e.what() << '\n';
    return 2;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}

}  // namespace frkt::cli
