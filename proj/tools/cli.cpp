#include "cli.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <stdexcept>

#include <CLI11.hpp>

#include "qwalk/continuous.hpp"
#include "qwalk/discrete.hpp"
#include "qwalk/mixing.hpp"
#include "qwalk/numerics.hpp"
#include "qwalk/spectral.hpp"
#include "qwalk/verify.hpp"

namespace qwalk::cli {

namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

class CsvWriter {
 public:
  explicit CsvWriter(std::ostream& os) : os_(os) {}

  void row(std::initializer_list<std::string> cells) {
    bool first = true;
    for (const auto& c : cells) {
      if (!first) os_ << ',';
      os_ << c;
      first = false;
    }
    os_ << '\n';
  }

 private:
  std::ostream& os_;
};

std::string num(double v) { return format_double(v); }
std::string num(long v) { return std::to_string(v); }
std::string num(int v) { return std::to_string(v); }

long to_step(const TimeSpec& spec, int n, const char* flag) {
  const double v = spec.resolve(n);
  const double r = std::round(v);
  if (!(v >= 0.0) || std::abs(v - r) > 1e-9 * std::max(1.0, std::abs(v))) {
    throw UsageError(std::string(flag) + " must resolve to a non-negative integer step, got " + format_double(v));
  }
  return static_cast<long>(r);
}

void require_n(int n) {
  if (n < 1) throw UsageError("--n must be >= 1");
}

// Flags shared by several subcommands.
struct Options {
  int n = 0;
  std::vector<int> ns;
  std::string t_max;
  std::optional<long> snapshot_t;
  bool plateau = false;
  double resolution = 512.0;
  std::optional<double> epsilon;
  std::string walk = "discrete";
  std::string kind = "aakv";
  int k = 2;
  double phase = 0.0;
  long members = 256;
  bool trace = false;
  std::string out = "-";
};

TimeSpec time_or(const std::string& text, TimeSpec fallback) {
  if (text.empty()) return fallback;
  try {
    return parse_time(text);
  } catch (const std::invalid_argument& e) {
    throw UsageError(std::string("--t-max: ") + e.what());
  }
}

int cmd_discrete(const Options& o, std::ostream& os) {
  require_n(o.n);
  CsvWriter csv(os);
  if (o.snapshot_t) {
    if (*o.snapshot_t < 0) throw UsageError("--snapshot-t must be >= 0");
    CollapsedState s = initial_state(o.n);
    advance(s, *o.snapshot_t);
    const WeightDistribution p = distribution(s);
    csv.row({"weight", "log2_prob"});
    for (int x = 0; x <= o.n; ++x) {
      if (o.plateau && x % 2 != *o.snapshot_t % 2) continue;
      csv.row({num(x), num(p.log2_vertex_probability(x))});
    }
    return kOk;
  }
  const long t_max = to_step(time_or(o.t_max, {2.0, true}), o.n, "--t-max");
  if (t_max < 1) throw UsageError("--t-max must be >= 1");
  const std::vector<double> tv = tv_trace(o.n, t_max);
  csv.row({"t", "t_over_n", "tv_vs_parity_uniform"});
  for (long t = 1; t <= t_max; ++t) {
    csv.row({num(t), num(static_cast<double>(t) / o.n), num(tv[static_cast<std::size_t>(t)])});
  }
  return kOk;
}

int cmd_continuous(const Options& o, std::ostream& os) {
  require_n(o.n);
  const double t_max = time_or(o.t_max, {2.0, true}).resolve(o.n);
  if (!(t_max > 0.0)) throw UsageError("--t-max must be positive");
  const TimeGrid grid = TimeGrid::continuous(o.n, 0.0, t_max, o.resolution, 1024);
  CsvWriter csv(os);
  csv.row({"t", "t_over_n", "tv_vs_uniform", "ds_bound"});
  for (double t : grid.times) {
    const double tv = tv_to_uniform_continuous(o.n, t);
    csv.row({num(t), num(t / o.n), num(tv), num(ds_bound_continuous(o.n, t))});
  }
  return kOk;
}

int cmd_scan(const Options& o, std::ostream& os) {
  const std::vector<int> ns = o.ns.empty() ? std::vector<int>{o.n} : o.ns;
  const Walk walk = o.walk == "continuous" ? Walk::continuous : Walk::discrete;
  CsvWriter csv(os);
  csv.row({"walk", "n", "argmin_t", "argmin_t_over_n", "min_tv", "epsilon", "first_epsilon_time"});
  for (int n : ns) {
    require_n(n);
    const TimeSpec spec = time_or(o.t_max, {2.0, true});
    const TimeGrid grid = walk == Walk::discrete
                              ? TimeGrid::integers(1, std::max(1L, to_step(spec, n, "--t-max")))
                              : TimeGrid::continuous(n, 0.0, spec.resolve(n), o.resolution, 1024);
    const MixingScanResult r = instantaneous_scan(walk, n, grid, o.epsilon);
    csv.row({o.walk, num(n), num(r.argmin_t), num(r.argmin_t / n), num(r.min_tv),
             o.epsilon ? num(*o.epsilon) : std::string{},
             r.first_epsilon_time ? num(*r.first_epsilon_time) : std::string{}});
  }
  return kOk;
}

int cmd_average(const Options& o, std::ostream& os) {
  require_n(o.n);
  CsvWriter csv(os);
  if (o.walk == "discrete") {
    const long t_max = to_step(time_or(o.t_max, {10000.0, false}), o.n, "--t-max");
    if (t_max < 1) throw UsageError("--t-max must be >= 1");
    std::vector<long> horizons;
    for (long T = 1; T <= t_max; T *= 10) horizons.push_back(T);
    if (horizons.back() != t_max) horizons.push_back(t_max);
    csv.row({"T", "tv_vs_uniform"});
    for (const AverageDistribution& avg : average_distribution_discrete(o.n, horizons)) {
      csv.row({num(static_cast<long>(avg.horizon)), num(tv_distance(avg.mass, FullUniform{o.n}))});
    }
    return kOk;
  }
  const double t_max = time_or(o.t_max, {3.0, true}).resolve(o.n);
  if (!(t_max > 0.0)) throw UsageError("--t-max must be positive");
  if (o.k < 0 || o.k > o.n) throw UsageError("--k must lie in [0, n]");
  const long points = std::max(2L, static_cast<long>(std::ceil(o.resolution * t_max / o.n)));
  csv.row({"T", "T_over_n", "avg_coefficient", "tv_lower_bound"});
  for (long i = 1; i <= points; ++i) {
    const double T = t_max * static_cast<double>(i) / static_cast<double>(points);
    const double c = average_coefficient_continuous(o.n, o.k, T);
    csv.row({num(T), num(T / o.n), num(c), num(tv_lower_bound_from_coefficient(o.n, c))});
  }
  return kOk;
}

int cmd_bounds(const Options& o, std::ostream& os) {
  CsvWriter csv(os);
  if (o.kind == "ds") {
    require_n(o.n);
    if (o.n < 2) throw UsageError("--kind ds needs n >= 2");
    const long t_max = to_step(time_or(o.t_max, {2.0, true}), o.n, "--t-max");
    if (t_max < 1) throw UsageError("--t-max must be >= 1");
    const std::vector<double> tv = tv_trace(o.n, t_max);
    csv.row({"t", "t_over_n", "tv_vs_parity_uniform", "ds_bound"});
    for (long t = 1; t <= t_max; ++t) {
      csv.row({num(t), num(static_cast<double>(t) / o.n), num(tv[static_cast<std::size_t>(t)]),
               num(ds_bound(o.n, t))});
    }
    return kOk;
  }
  std::vector<int> ns = o.ns;
  if (ns.empty()) {
    if (o.n >= 1) {
      ns = {o.n};
    } else {
      for (int n = 8; n <= 16; ++n) ns.push_back(n);
    }
  }
  const double eps = o.epsilon.value_or(0.01);
  csv.row({"n", "aakv_constant", "epsilon", "min_horizon", "pair_count"});
  for (int n : ns) {
    require_n(n);
    csv.row({num(n), num(aakv_constant(n)), num(eps), num(aakv_horizon(n, eps)), aakv_pair_count(n).str()});
  }
  return kOk;
}

int cmd_coin(const Options& o, std::ostream& os) {
  require_n(o.n);
  if (o.n < 2) throw UsageError("coin needs n >= 2; the n = 1 family is a single phase");
  if (o.members < 2) throw UsageError("--members must be >= 2");
  const double lo = std::max(0.0, 1.0 - 2.0 / o.n);
  CsvWriter csv(os);
  csv.row({"mod_a", "phase_a", "distance_to_diagonal", "unitarity_residual"});
  for (long i = 0; i < o.members; ++i) {
    const double mod_a = lo + (1.0 - lo) * static_cast<double>(i) / static_cast<double>(o.members - 1);
    const SymmetricCoin<double> coin = coin_family(o.n, mod_a, o.phase);
    csv.row({num(mod_a), num(o.phase), num(distance_to_diagonal(coin)), num(coin.unitarity_residual())});
  }
  return kOk;
}

int cmd_verify(const Options& o, std::ostream& os, std::ostream& err) {
  require_n(o.n);
  const long t_max = to_step(time_or(o.t_max, {40.0, false}), o.n, "--t-max");
  const std::vector<CheckResult> results = run_verification(o.n, t_max);
  CsvWriter csv(os);
  csv.row({"check", "passed", "max_error", "tolerance"});
  bool all = true;
  for (const CheckResult& r : results) {
    csv.row({r.name, r.passed ? "1" : "0", num(r.max_error), num(r.tolerance)});
    err << (r.passed ? "PASS " : "FAIL ") << r.name << "  max_error=" << num(r.max_error)
        << "  tolerance=" << num(r.tolerance) << '\n';
    all = all && r.passed;
  }
  if (o.trace) {
    CollapsedState s = initial_state(o.n);
    for (long t = 0; t <= t_max; ++t) {
      const WeightDistribution p = distribution(s);
      err << "t=" << t << " P(x):";
      for (int x = 0; x <= o.n; ++x) err << ' ' << num(p.mass(x));
      err << '\n';
      advance(s, 1);
    }
  }
  err << (all ? "verify: all checks passed\n" : "verify: FAILED\n");
  return all ? kOk : kVerificationFailed;
}

}  // namespace

TimeSpec parse_time(const std::string& text) {
  std::string body = text;
  TimeSpec spec;
  if (!body.empty() && body.back() == 'n') {
    spec.per_n = true;
    body.pop_back();
    if (body.empty()) body = "1";
  }
  std::size_t used = 0;
  double v = 0.0;
  try {
    v = std::stod(body, &used);
  } catch (const std::exception&) {
    throw std::invalid_argument("not a time: '" + text + "'");
  }
  if (used != body.size() || !std::isfinite(v)) throw std::invalid_argument("not a time: '" + text + "'");
  spec.value = v;
  return spec;
}

std::string format_double(double value) {
  if (std::isnan(value)) return "nan";
  if (std::isinf(value)) return value > 0 ? "inf" : "-inf";
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", value);
  return buf;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Quantum walks on the hypercube: exact distributions, mixing scans and bounds", "qwalk"};
  app.require_subcommand(1);
  Options o;

  auto add_out = [&](CLI::App* sub) { sub->add_option("--out,-o", o.out, "output file, '-' for stdout"); };
  auto add_n = [&](CLI::App* sub) { sub->add_option("--n", o.n, "hypercube dimension")->required(); };
  auto add_t = [&](CLI::App* sub, const char* help) { sub->add_option("--t-max", o.t_max, help); };

  CLI::App* discrete = app.add_subcommand("discrete", "TV trace of the Grover walk, or a per-weight snapshot");
  add_n(discrete);
  add_t(discrete, "last step, literal or multiple of n (default 2n)");
  discrete->add_option("--snapshot-t", o.snapshot_t, "emit log2 per-vertex probability by weight at this step");
  discrete->add_flag("--plateau", o.plateau, "snapshot rows only for weights reachable at that step");
  add_out(discrete);

  CLI::App* continuous = app.add_subcommand("continuous", "TV and bound trace of the continuous walk");
  add_n(continuous);
  add_t(continuous, "end time (default 2n)");
  continuous->add_option("--resolution", o.resolution, "samples per unit of t/n (>= 2)");
  add_out(continuous);

  CLI::App* scan = app.add_subcommand("scan", "Instantaneous mixing summary per dimension");
  scan->add_option("--n", o.ns, "one or more dimensions")->required();
  scan->add_option("--walk", o.walk)->check(CLI::IsMember({"discrete", "continuous"}));
  add_t(scan, "end time (default 2n)");
  scan->add_option("--resolution", o.resolution, "continuous samples per unit of t/n");
  scan->add_option("--epsilon", o.epsilon, "report the first time TV <= epsilon");
  add_out(scan);

  CLI::App* average = app.add_subcommand("average", "Time-averaged distribution");
  add_n(average);
  average->add_option("--walk", o.walk)->check(CLI::IsMember({"discrete", "continuous"}));
  add_t(average, "largest horizon (default 10000 discrete, 3n continuous)");
  average->add_option("--resolution", o.resolution, "continuous horizons per unit of T/n");
  average->add_option("--k", o.k, "wave-vector weight of the averaged coefficient (continuous)");
  add_out(average);

  CLI::App* bounds = app.add_subcommand("bounds", "Upper bounds: AAKV horizons or the discrete DS bound");
  bounds->add_option("--kind", o.kind)->check(CLI::IsMember({"aakv", "ds"}));
  bounds->add_option("--n", o.ns, "dimensions (aakv default 8..16; ds takes one)");
  add_t(bounds, "last step for --kind ds (default 2n)");
  bounds->add_option("--epsilon", o.epsilon, "target distance for the AAKV horizon (default 0.01)");
  add_out(bounds);

  CLI::App* coin = app.add_subcommand("coin", "Distance to scalar unitaries across the symmetric coin family");
  add_n(coin);
  coin->add_option("--members", o.members, "number of |a| samples in [1 - 2/n, 1]");
  coin->add_option("--phase", o.phase, "arg of the diagonal entry");
  add_out(coin);

  CLI::App* verify = app.add_subcommand("verify", "Closed forms against brute-force oracles");
  add_n(verify);
  add_t(verify, "last step (default 40)");
  verify->add_flag("--trace", o.trace, "print the collapsed distribution at every step");
  add_out(verify);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  if (o.resolution < 2.0) {
    err << "error: --resolution must be >= 2\n";
    return kUsage;
  }
  if (bounds->parsed() && o.kind == "ds") {
    if (o.ns.size() != 1) {
      err << "error: --kind ds takes exactly one --n\n";
      return kUsage;
    }
    o.n = o.ns.front();
    o.ns.clear();
  }

  std::ostringstream buffer;
  int code = kOk;
  try {
    if (discrete->parsed()) code = cmd_discrete(o, buffer);
    if (continuous->parsed()) code = cmd_continuous(o, buffer);
    if (scan->parsed()) code = cmd_scan(o, buffer);
    if (average->parsed()) code = cmd_average(o, buffer);
    if (bounds->parsed()) code = cmd_bounds(o, buffer);
    if (coin->parsed()) code = cmd_coin(o, buffer);
    if (verify->parsed()) code = cmd_verify(o, buffer, err);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const DomainError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const ResourceError& e) {
    err << "error: " << e.what() << '\n';
    return kResourceCap;
  }

  if (o.out == "-") {
    out << buffer.str();
  } else {
    std::ofstream file(o.out, std::ios::binary);
    if (!file) {
      err << "error: cannot open " << o.out << '\n';
      return kUsage;
    }
    file << buffer.str();
  }
  return code;
}

}  // namespace qwalk::cli
