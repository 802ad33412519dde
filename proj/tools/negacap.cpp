// negacap: command-line front end for the channel and Gaussian analyses.
#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdlib>
#include <exception>
#include <fstream>
#include <iostream>
#include <mutex>
#include <numbers>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "CLI11.hpp"
#include "negacap/entcap.hpp"
#include "negacap/families.hpp"
#include "negacap/gaussian.hpp"
#include "negacap/io.hpp"
#include "negacap/random.hpp"

using namespace negacap;
using io::json;

namespace {

constexpr int kExitValidation = 2;
constexpr int kExitParse = 3;

struct Globals {
  std::string base = "2";
  double hbar = 1.0;
  double tol = 1e-9;
  std::string out;
  std::string format;
};

double parse_base(const std::string& s) {
  if (s == "2") return 2.0;
  if (s == "10") return 10.0;
  if (s == "e") return std::numbers::e;
  fail(ErrorKind::InvalidParams, "--base must be 2, e or 10");
}

// Accepts "0.5", "pi", "2pi/3", "2*pi/3", "pi/5".
double parse_value(std::string s) {
  s.erase(std::remove(s.begin(), s.end(), '*'), s.end());
  try {
    const auto pos = s.find("pi");
    if (pos == std::string::npos) {
      std::size_t used = 0;
      const double v = std::stod(s, &used);
      if (used != s.size()) throw std::invalid_argument(s);
      return v;
    }
    double v = std::numbers::pi;
    if (pos > 0) {
      std::size_t used = 0;
      const std::string head = s.substr(0, pos);
      v *= head == "-" ? -1.0 : std::stod(head, &used);
      if (head != "-" && used != head.size()) throw std::invalid_argument(s);
    }
    const std::string tail = s.substr(pos + 2);
    if (!tail.empty()) {
      if (tail[0] != '/') throw std::invalid_argument(s);
      std::size_t used = 0;
      v /= std::stod(tail.substr(1), &used);
      if (used != tail.size() - 1) throw std::invalid_argument(s);
    }
    return v;
  } catch (const std::logic_error&) {
    fail(ErrorKind::ParseError, "cannot parse number '" + s + "'");
  }
}

// "v" is a fixed value; "start:stop:steps" a grid (steps >= 2, start < stop).
std::vector<double> parse_grid(const std::string& text, bool geometric = false) {
  std::vector<std::string> parts;
  std::stringstream ss(text);
  for (std::string p; std::getline(ss, p, ':');) parts.push_back(p);
  if (parts.size() == 1) return {parse_value(parts[0])};
  if (parts.size() != 3) fail(ErrorKind::ParseError, "grid must be 'value' or 'start:stop:steps'");
  const double a = parse_value(parts[0]), b = parse_value(parts[1]);
  int steps = 0;
  try {
    std::size_t used = 0;
    steps = std::stoi(parts[2], &used);
    if (used != parts[2].size()) throw std::invalid_argument(parts[2]);
  } catch (const std::logic_error&) {
    fail(ErrorKind::ParseError, "grid steps must be an integer");
  }
  if (steps < 2) fail(ErrorKind::InvalidParams, "grid needs steps >= 2");
  if (!(a < b)) fail(ErrorKind::InvalidParams, "grid needs start < stop");
  if (geometric && !(a > 0)) fail(ErrorKind::InvalidParams, "log grid needs a positive start");
  std::vector<double> g(static_cast<std::size_t>(steps));
  for (int k = 0; k < steps; ++k) {
    const double t = static_cast<double>(k) / (steps - 1);
    g[k] = geometric ? a * std::pow(b / a, t) : a * (1 - t) + b * t;
  }
  g.back() = b;
  return g;
}

std::size_t thread_cap() {
  std::size_t n = std::max(1u, std::thread::hardware_concurrency());
  if (const char* env = std::getenv("NEGACAP_THREADS")) {
    char* end = nullptr;
    const long v = std::strtol(env, &end, 10);
    if (end == env || *end != '\0' || v < 1) fail(ErrorKind::InvalidParams, "NEGACAP_THREADS must be a positive integer");
    n = std::min<std::size_t>(n, static_cast<std::size_t>(v));
  }
  return n;
}

// Evaluates f(0..n-1) on a worker pool; results come back in index order.
template <class F>
auto parallel_map(std::size_t n, F f) -> std::vector<decltype(f(std::size_t{}))> {
  std::vector<decltype(f(std::size_t{}))> out(n);
  const std::size_t workers = std::min(thread_cap(), std::max<std::size_t>(n, 1));
  std::atomic<std::size_t> next{0};
  std::exception_ptr err;
  std::mutex err_mu;
  auto body = [&] {
    for (std::size_t i; (i = next++) < n;) {
      try {
        out[i] = f(i);
      } catch (...) {
        std::lock_guard<std::mutex> lock(err_mu);
        if (!err) err = std::current_exception();
      }
    }
  };
  std::vector<std::thread> pool;
  for (std::size_t w = 1; w < workers; ++w) pool.emplace_back(body);
  body();
  for (auto& t : pool) t.join();
  if (err) std::rethrow_exception(err);
  return out;
}

void emit(const Globals& g, const std::string& text) {
  if (g.out.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream f(g.out, std::ios::binary);
  if (!f) fail(ErrorKind::InvalidParams, "cannot write " + g.out);
  f << text;
}

std::string csv(const std::vector<std::string>& header, const std::vector<std::vector<double>>& rows) {
  std::string s;
  for (std::size_t i = 0; i < header.size(); ++i) s += (i ? "," : "") + header[i];
  s += '\n';
  for (const auto& r : rows) {
    for (std::size_t i = 0; i < r.size(); ++i) s += (i ? "," : "") + io::format_double(r[i]);
    s += '\n';
  }
  return s;
}

std::string rows_as_json(const std::vector<std::string>& header, const std::vector<std::vector<double>>& rows) {
  json arr = json::array();
  for (const auto& r : rows) {
    json o = json::object();
    for (std::size_t i = 0; i < header.size(); ++i) o[header[i]] = r[i];
    arr.push_back(o);
  }
  return arr.dump(2) + "\n";
}

std::string table(const Globals& g, const std::vector<std::string>& header,
                  const std::vector<std::vector<double>>& rows) {
  if (g.format.empty() || g.format == "csv") return csv(header, rows);
  if (g.format == "json") return rows_as_json(header, rows);
  fail(ErrorKind::InvalidParams, "--format must be json or csv");
}

std::string report(const Globals& g, const json& j) {
  if (g.format.empty() || g.format == "json") return j.dump(2) + "\n";
  if (g.format != "csv") fail(ErrorKind::InvalidParams, "--format must be json or csv");
  std::vector<std::string> keys, vals;
  // Nested objects flatten to "outer.inner" columns; arrays are skipped.
  auto walk = [&](auto&& self, const json& obj, const std::string& prefix) -> void {
    for (auto it = obj.begin(); it != obj.end(); ++it) {
      if (it->is_array()) continue;
      if (it->is_object()) {
        self(self, *it, prefix + it.key() + ".");
        continue;
      }
      keys.push_back(prefix + it.key());
      vals.push_back(it->is_number() ? io::format_double(it->get<double>())
                     : it->is_string() ? it->get<std::string>()
                                       : it->dump());
    }
  };
  walk(walk, j, "");
  std::string s;
  for (std::size_t i = 0; i < keys.size(); ++i) s += (i ? "," : "") + keys[i];
  s += '\n';
  for (std::size_t i = 0; i < vals.size(); ++i) s += (i ? "," : "") + vals[i];
  return s + '\n';
}

struct ChannelSource {
  std::string file;
  std::string family;
  std::string alpha = "0";
  std::string beta = "0";

  void attach(CLI::App* cmd) {
    cmd->add_option("channel", file, "channel JSON file");
    cmd->add_option("--family", family, "built-in family: rot22, gencnot, rot23, rot33, cnot");
    cmd->add_option("--alpha", alpha, "family angle alpha (accepts pi expressions)");
    cmd->add_option("--beta", beta, "family angle beta");
  }

  Channel load() const {
    if (!file.empty() && !family.empty()) fail(ErrorKind::InvalidParams, "give a channel file or --family, not both");
    if (!file.empty()) return io::channel_from_json(io::read_json_file(file));
    if (family == "cnot") return unitary_channel(cnot_unitary(), {2, 2});
    if (family.empty()) fail(ErrorKind::InvalidParams, "a channel file or --family is required");
    const FamilyMember m = family_unitary(family, parse_value(alpha), parse_value(beta));
    return unitary_channel(m.unitary, m.dims);
  }
};

std::pair<double, double> eig_range(const ComplexMatrix& h) {
  const EigenSystem es = eig_hermitian(h);
  return {es.values.front(), es.values.back()};
}

int cmd_channel_analyze(const Globals& g, const ChannelSource& src) {
  const Channel ch = src.load();
  const double base = parse_base(g.base);
  json j;
  j["in_dims"] = {ch.in_dims.d_A, ch.in_dims.d_B};
  j["out_dims"] = {ch.out_dims.d_A, ch.out_dims.d_B};
  j["cp"] = is_cp(ch, g.tol);
  j["hp"] = is_hp(ch, g.tol);
  j["tp"] = is_tp(ch, g.tol);
  j["ppt"] = is_cp(map_partial_transpose(ch), g.tol);
  j["gamma_norm_1"] = gamma_norm(ch, 1.0);
  bool perfect = false;
  try {
    BoundOptions opt;
    opt.base = base;
    opt.tol = g.tol;
    const ECBounds b = ec_bounds_deterministic(ch, opt);
    const auto [lo, hi] = eig_range(negative_adjoint(ch, g.tol));
    j["bounds"] = io::to_json(b);
    j["negative_adjoint_min_eig"] = lo;
    j["negative_adjoint_max_eig"] = hi;
    const double dmin = static_cast<double>(std::min(ch.in_dims.d_A, ch.in_dims.d_B));
    perfect = std::abs(b.upper_L - log_base(dmin, base)) <= std::max(g.tol, 1e-12);
  } catch (const Error& e) {
    if (e.kind() != ErrorKind::NotCPTP) throw;
    j["bounds_error"] = e.what();
  }
  j["perfect_entangler"] = perfect;
  emit(g, report(g, j));
  return 0;
}

struct SweepArgs {
  std::string family = "rot22";
  std::string alpha = "0:pi:21";
  std::string beta = "0:pi:21";
  std::string p = "0:1:21";
  std::string pair = "rot23";
  std::string a1 = "pi/3", b1 = "pi/5", a2 = "pi/4", b2 = "pi/3";
};

int cmd_channel_sweep(const Globals& g, const SweepArgs& a) {
  BoundOptions opt;
  opt.base = parse_base(g.base);
  opt.tol = g.tol;
  if (a.family == "mix") {
    const std::vector<double> ps = parse_grid(a.p);
    for (double p : ps)
      if (p < 0 || p > 1) fail(ErrorKind::InvalidParams, "p must lie in [0, 1]");
    const FamilyMember m1 = family_unitary(a.pair, parse_value(a.a1), parse_value(a.b1));
    const FamilyMember m2 = family_unitary(a.pair, parse_value(a.a2), parse_value(a.b2));
    const Channel s1 = unitary_channel(m1.unitary, m1.dims), s2 = unitary_channel(m2.unitary, m2.dims);
    const auto rows = parallel_map(ps.size(), [&](std::size_t i) {
      const double p = ps[i];
      const Channel s = mix({s1, s2}, {p, 1 - p});
      const ECBounds b = ec_bounds_deterministic(s, opt);
      const ECBounds c = ec_upper_from_split(s, convex_split({s1, s2}, {p, 1 - p}, opt.tol), opt);
      const auto [lo, hi] = eig_range(negative_adjoint(s, opt.tol));
      return std::vector<double>{p, b.lower_N, b.lower_L, b.upper_L, c.upper_L, lo, hi};
    });
    emit(g, table(g, {"p", "lower_N", "lower_L", "upper_L", "upper_L_convex", "min_eig", "max_eig"}, rows));
    return 0;
  }
  const std::vector<double> al = parse_grid(a.alpha), be = parse_grid(a.beta);
  family_unitary(a.family, 0.0, 0.0);  // validates the name
  const auto rows = parallel_map(al.size() * be.size(), [&](std::size_t k) {
    const double x = al[k / be.size()], y = be[k % be.size()];
    const FamilyMember m = family_unitary(a.family, x, y);
    const Channel ch = unitary_channel(m.unitary, m.dims);
    const ECBounds b = ec_bounds_deterministic(ch, opt);
    const auto [lo, hi] = eig_range(negative_adjoint(ch, opt.tol));
    return std::vector<double>{x, y, b.lower_N, b.upper_N_coefficient, b.upper_N_max, b.lower_L, b.upper_L, lo, hi};
  });
  emit(g, table(g,
                {"alpha", "beta", "lower_N", "upper_N_coefficient", "upper_N_max", "lower_L", "upper_L", "min_eig",
                 "max_eig"},
                rows));
  return 0;
}

Measure parse_measure(const std::string& m) {
  if (m == "logneg") return Measure::LogNegativity;
  if (m == "neg") return Measure::Negativity;
  fail(ErrorKind::InvalidParams, "--measure must be logneg or neg");
}

struct BlockArgs {
  int N = 3, n1 = 1, n2 = 1;
  std::string measure = "logneg";
  std::optional<double> nu_D;
};

int cmd_gaussian_sup(const Globals& g, const BlockArgs& a) {
  const BlockSpec bs{a.N, a.n1, a.n2};
  const double base = parse_base(g.base);
  const SupResult r = sup_block_entanglement(bs, parse_measure(a.measure), base, a.nu_D, g.hbar);
  json j;
  j["N"] = a.N;
  j["n1"] = a.n1;
  j["n2"] = a.n2;
  j["n_s"] = bs.n_s();
  j["n_d"] = bs.n_d();
  j["measure"] = a.measure;
  if (a.measure == "logneg") j["base"] = g.base;
  if (a.nu_D) j["nu_D"] = *a.nu_D;
  if (!r.unbounded) j["K"] = sup_gap_ratio(bs);
  j["unbounded"] = r.unbounded;
  if (r.unbounded)
    j["sup"] = "unbounded";
  else
    j["sup"] = r.value;
  emit(g, report(g, j));
  return 0;
}

struct GaussSweepArgs {
  BlockArgs blocks;
  std::string gamma = "1";
  std::string r = "1e-8:1e8:17";
  std::string r_scale = "log";
};

int cmd_gaussian_sweep(const Globals& g, const GaussSweepArgs& a) {
  const BlockSpec bs{a.blocks.N, a.blocks.n1, a.blocks.n2};
  validate(bs);
  if (a.r_scale != "log" && a.r_scale != "linear") fail(ErrorKind::InvalidParams, "--r-scale must be log or linear");
  const double base = parse_base(g.base);
  const double nu_D = a.blocks.nu_D.value_or(g.hbar / 2);
  const std::vector<double> gs = parse_grid(a.gamma), rs = parse_grid(a.r, a.r_scale == "log");
  const auto rows = parallel_map(gs.size() * rs.size(), [&](std::size_t k) {
    const SymmetricParams p{a.blocks.N, nu_D, gs[k / rs.size()], rs[k % rs.size()], g.hbar};
    return std::vector<double>{nu_D, p.gamma, p.r, f_block(p, bs), block_log_negativity(p, bs, base),
                               block_negativity(p, bs)};
  });
  emit(g, table(g, {"nu_D", "gamma", "r", "f", "E_L", "E_N"}, rows));
  return 0;
}

int cmd_saturate(const Globals& g, const ChannelSource& src, const std::string& state_file) {
  const Channel ch = src.load();
  if (!is_cp(ch, g.tol) || !is_tp(ch, g.tol)) fail(ErrorKind::NotCPTP, "saturate needs a CPTP channel");
  json j;
  if (!state_file.empty()) {
    const ComplexMatrix rho = io::state_from_json(io::read_json_file(state_file));
    const SaturationReport r = saturation_check(ch, rho, g.tol);
    j = io::to_json(r);
    const double en_in = negativity(rho, ch.in_dims), en_out = negativity(apply(ch, rho), ch.out_dims);
    j["E_N_in"] = en_in;
    j["E_N_out"] = en_out;
    j["upper_N"] = ec_bounds_deterministic(ch).upper_N_coefficient * gamma_norm(rho, ch.in_dims);
  } else {
    const ComplexMatrix m = negative_adjoint(ch, g.tol);
    const auto [lo, hi] = eig_range(m);
    j["prop_identity"] = hi - lo <= g.tol * std::max(1.0, std::abs(hi));
    j["minus_part_zero"] = std::max(std::abs(lo), std::abs(hi)) <= g.tol;
    j["negative_adjoint_min_eig"] = lo;
    j["negative_adjoint_max_eig"] = hi;
    if (src.family == "rot22")
      j["known_solutions"] = "theta1 = pi/4 + n pi/2, and theta2 = m pi/2 or phi2 = p pi";
    else if (src.family == "gencnot" || src.family == "cnot")
      j["known_solutions"] = "theta1 = pi/4 + n pi/2, theta2 = arctan(tan(alpha + beta) / cos(phi2)) / 2";
  }
  emit(g, report(g, j));
  return 0;
}

struct SoundnessArgs {
  std::size_t trials = 1000;
  std::uint64_t seed = 0;
  std::string dims = "2x2";
  std::size_t kraus = 2;
};

BipartiteDims parse_dims(const std::string& s) {
  const auto x = s.find('x');
  try {
    if (x == std::string::npos) throw std::invalid_argument(s);
    const int a = std::stoi(s.substr(0, x)), b = std::stoi(s.substr(x + 1));
    if (a < 1 || b < 1) fail(ErrorKind::InvalidParams, "dims must be positive");
    return {static_cast<std::size_t>(a), static_cast<std::size_t>(b)};
  } catch (const std::logic_error&) {
    fail(ErrorKind::ParseError, "dims must look like 2x3");
  }
}

int cmd_soundness(const Globals& g, const SoundnessArgs& a) {
  const BipartiteDims dims = parse_dims(a.dims);
  const double base = parse_base(g.base);
  // Each trial seeds its own generator, so results do not depend on the thread count.
  const auto rows = parallel_map(a.trials, [&](std::size_t i) {
    std::seed_seq seq{static_cast<std::uint64_t>(a.seed), static_cast<std::uint64_t>(i)};
    Rng rng(seq);
    const Channel ch = random_cptp(dims, a.kraus, rng);
    BoundOptions opt;
    opt.base = base;
    const ECBounds b = ec_bounds_deterministic(ch, opt);
    const ComplexMatrix rho =
        i % 2 ? random_density(dims.total(), rng) : projector(random_pure_state(dims.total(), rng));
    const ComplexMatrix out = apply(ch, rho);
    const double slack_n =
        negativity(out, dims) - negativity(rho, dims) - b.upper_N_coefficient * gamma_norm(rho, dims);
    const double slack_l = log_negativity(out, dims, base) - log_negativity(rho, dims, base) - b.upper_L;
    const double slack_lo = b.lower_L - b.upper_L;
    return std::vector<double>{slack_n, slack_l, slack_lo};
  });
  std::size_t violations = 0;
  double max_n = -1e300, max_l = -1e300;
  for (const auto& r : rows) {
    max_n = std::max(max_n, r[0]);
    max_l = std::max(max_l, r[1]);
    if (r[0] > 1e-10 || r[1] > 1e-10 || r[2] > 1e-12) ++violations;
  }
  json j;
  j["trials"] = a.trials;
  j["seed"] = a.seed;
  j["dims"] = a.dims;
  j["kraus"] = a.kraus;
  j["violations"] = violations;
  j["max_slack_N"] = a.trials ? max_n : 0.0;
  j["max_slack_L"] = a.trials ? max_l : 0.0;
  emit(g, report(g, j));
  return violations == 0 ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"negacap: entangling-capacity bounds and Gaussian block entanglement"};
  app.require_subcommand(1);
  app.fallthrough();
  Globals g;
  app.add_option("--base", g.base, "log base: 2, e or 10")->capture_default_str();
  app.add_option("--hbar", g.hbar, "value of hbar")->capture_default_str();
  app.add_option("--tol", g.tol, "numerical tolerance")->capture_default_str();
  app.add_option("--out", g.out, "write output to this path");
  app.add_option("--format", g.format, "json or csv");

  ChannelSource analyze_src, saturate_src;
  auto* analyze = app.add_subcommand("channel-analyze", "predicates, Gamma norm and bounds of one channel");
  analyze_src.attach(analyze);

  SweepArgs sweep;
  auto* sw = app.add_subcommand("channel-sweep", "bounds over a family grid (CSV)");
  sw->add_option("--family", sweep.family, "rot22, gencnot, rot23, rot33 or mix")->capture_default_str();
  sw->add_option("--alpha", sweep.alpha, "alpha grid 'start:stop:steps' or a value")->capture_default_str();
  sw->add_option("--beta", sweep.beta, "beta grid")->capture_default_str();
  sw->add_option("--p", sweep.p, "mixing weight grid for the mix family")->capture_default_str();
  sw->add_option("--pair", sweep.pair, "family of the two mixed unitaries")->capture_default_str();
  sw->add_option("--alpha1", sweep.a1)->capture_default_str();
  sw->add_option("--beta1", sweep.b1)->capture_default_str();
  sw->add_option("--alpha2", sweep.a2)->capture_default_str();
  sw->add_option("--beta2", sweep.b2)->capture_default_str();

  BlockArgs sup;
  auto* gsup = app.add_subcommand("gaussian-sup", "supremum of block entanglement");
  gsup->add_option("--N", sup.N)->required();
  gsup->add_option("--n1", sup.n1)->required();
  gsup->add_option("--n2", sup.n2)->required();
  gsup->add_option("--nu-D", sup.nu_D, "fix nu_D");
  gsup->add_option("--measure", sup.measure, "logneg or neg")->capture_default_str();

  GaussSweepArgs gsw;
  auto* gsweep = app.add_subcommand("gaussian-sweep", "f and E_L over (gamma, r) grids (CSV)");
  gsweep->add_option("--N", gsw.blocks.N)->required();
  gsweep->add_option("--n1", gsw.blocks.n1)->required();
  gsweep->add_option("--n2", gsw.blocks.n2)->required();
  gsweep->add_option("--nu-D", gsw.blocks.nu_D, "nu_D (default hbar/2)");
  gsweep->add_option("--gamma", gsw.gamma, "gamma grid or value")->capture_default_str();
  gsweep->add_option("--r", gsw.r, "r grid or value")->capture_default_str();
  gsweep->add_option("--r-scale", gsw.r_scale, "log or linear spacing of the r grid")->capture_default_str();

  std::string state_file;
  auto* sat = app.add_subcommand("saturate", "check whether a state reaches the upper bound");
  saturate_src.attach(sat);
  sat->add_option("--state", state_file, "state JSON file with 'rho' or 'psi'");

  SoundnessArgs snd;
  auto* sound = app.add_subcommand("soundness", "Monte-Carlo check of the upper bounds on random channels");
  sound->add_option("--trials", snd.trials)->capture_default_str();
  sound->add_option("--seed", snd.seed)->capture_default_str();
  sound->add_option("--dims", snd.dims, "e.g. 2x3")->capture_default_str();
  sound->add_option("--kraus", snd.kraus, "Kraus rank of the random channels")->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitParse;
  }

  try {
    if (*analyze) return cmd_channel_analyze(g, analyze_src);
    if (*sw) return cmd_channel_sweep(g, sweep);
    if (*gsup) return cmd_gaussian_sup(g, sup);
    if (*gsweep) return cmd_gaussian_sweep(g, gsw);
    if (*sat) return cmd_saturate(g, saturate_src, state_file);
    if (*sound) return cmd_soundness(g, snd);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return e.kind() == ErrorKind::ParseError ? kExitParse : kExitValidation;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitValidation;
  }
  return 0;
}
