#include "qwalk/mixing.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>
#include <numeric>

#include "qwalk/continuous.hpp"
#include "qwalk/discrete.hpp"
#include "qwalk/spectral.hpp"

namespace qwalk {

namespace {

bool is_step_time(double t) { return t >= 0.0 && std::floor(t) == t; }

// 8-point Gauss-Legendre on [-1, 1].
constexpr std::array<double, 4> kGaussNodes{0.1834346424956498, 0.5255324099163290,
                                            0.7966664774136267, 0.9602898564975363};
constexpr std::array<double, 4> kGaussWeights{0.3626837833783620, 0.3137066458778873,
                                              0.2223810344533745, 0.1012285362903763};

}  // namespace

TimeGrid TimeGrid::integers(long t_first, long t_last) {
  if (t_last < t_first) throw DomainError("TimeGrid::integers: empty range");
  TimeGrid g;
  g.times.reserve(static_cast<std::size_t>(t_last - t_first + 1));
  for (long t = t_first; t <= t_last; ++t) g.times.push_back(static_cast<double>(t));
  return g;
}

TimeGrid TimeGrid::uniform(double begin, double end, long points) {
  if (points < 1 || end < begin) throw DomainError("TimeGrid::uniform: empty range");
  TimeGrid g;
  g.times.resize(static_cast<std::size_t>(points));
  if (points == 1) {
    g.times[0] = begin;
    return g;
  }
  const double h = (end - begin) / static_cast<double>(points - 1);
  for (long i = 0; i < points; ++i) g.times[static_cast<std::size_t>(i)] = begin + h * i;
  g.times.back() = end;
  return g;
}

TimeGrid TimeGrid::continuous(int n, double begin, double end, double per_unit, long min_points) {
  if (n < 1) throw DomainError("TimeGrid::continuous: n must be positive");
  if (per_unit < 2.0) throw DomainError("TimeGrid::continuous: resolution must be >= 2");
  if (!(end > begin)) throw DomainError("TimeGrid::continuous: empty range");
  const long points =
      std::max(min_points, static_cast<long>(std::ceil(per_unit * (end - begin) / n)));
  TimeGrid g = uniform(begin, end, std::max(points, 2L));
  const double h = (end - begin) / static_cast<double>(g.times.size() - 1);
  const double quarter = std::numbers::pi / 4.0 * n;
  for (long m = 1;; m += 2) {
    const double target = quarter * m;
    if (target > end) break;
    if (target < begin) continue;
    const auto i = static_cast<std::size_t>(std::llround((target - begin) / h));
    g.times[std::min(i, g.times.size() - 1)] = target;
  }
  return g;
}

MixingScanResult instantaneous_scan(Walk walk, int n, const TimeGrid& grid,
                                    std::optional<double> epsilon) {
  if (grid.times.empty()) throw DomainError("instantaneous_scan: empty time range");
  if (n < 1) throw DomainError("instantaneous_scan: n must be positive");
  MixingScanResult r{n, grid.times, std::vector<double>(grid.times.size()), 0.0, 0.0, epsilon,
                     std::nullopt};

  if (walk == Walk::discrete) {
    std::vector<std::size_t> order(grid.times.size());
    std::iota(order.begin(), order.end(), std::size_t{0});
    for (double t : grid.times) {
      if (!is_step_time(t)) throw DomainError("instantaneous_scan: discrete times must be integers >= 0");
    }
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t a, std::size_t b) { return grid.times[a] < grid.times[b]; });
    const WeightDistribution even = ParityUniform{n, 0}.distribution();
    const WeightDistribution odd = ParityUniform{n, 1}.distribution();
    CollapsedState s = initial_state(n);
    for (std::size_t i : order) {
      const auto t = static_cast<long>(grid.times[i]);
      advance(s, t - s.t);
      r.tv[i] = tv_distance(distribution(s), t % 2 == 0 ? even : odd);
    }
  } else {
    for (std::size_t i = 0; i < grid.times.size(); ++i) r.tv[i] = tv_to_uniform_continuous(n, grid.times[i]);
  }

  const auto best = std::min_element(r.tv.begin(), r.tv.end());
  r.min_tv = *best;
  r.argmin_t = r.times[static_cast<std::size_t>(best - r.tv.begin())];
  if (epsilon) {
    for (std::size_t i = 0; i < r.tv.size(); ++i) {
      if (r.tv[i] <= *epsilon) {
        r.first_epsilon_time = r.times[i];
        break;
      }
    }
  }
  return r;
}

double windowed_argmin(const MixingScanResult& scan, double center, double radius) {
  std::optional<std::size_t> best;
  for (std::size_t i = 0; i < scan.times.size(); ++i) {
    if (std::abs(scan.times[i] - center) > radius) continue;
    if (!best || scan.tv[i] < scan.tv[*best]) best = i;
  }
  if (!best) throw DomainError("windowed_argmin: no grid point inside the window");
  return scan.times[*best];
}

std::vector<AverageDistribution> average_distribution_discrete(int n, const std::vector<long>& horizons) {
  if (!std::is_sorted(horizons.begin(), horizons.end()) ||
      (!horizons.empty() && horizons.front() < 1)) {
    throw DomainError("average_distribution_discrete: horizons must be sorted and >= 1");
  }
  std::vector<AverageDistribution> out;
  out.reserve(horizons.size());
  std::vector<CompensatedSum<double>> running(static_cast<std::size_t>(n) + 1);
  CollapsedState s = initial_state(n);
  long summed = 0;  // number of steps folded into `running`
  for (long horizon : horizons) {
    while (summed < horizon) {
      advance(s, summed - s.t);
      const WeightDistribution p = distribution(s);
      for (int x = 0; x <= n; ++x) running[static_cast<std::size_t>(x)].add(p.mass(x));
      ++summed;
    }
    Eigen::VectorXd mass(n + 1);
    for (int x = 0; x <= n; ++x) {
      mass[x] = running[static_cast<std::size_t>(x)].value() / static_cast<double>(horizon);
    }
    out.push_back({n, static_cast<double>(horizon), WeightDistribution(n, std::move(mass))});
  }
  return out;
}

AverageDistribution average_distribution_discrete(int n, long horizon) {
  if (horizon < 1) throw DomainError("average_distribution_discrete: T must be >= 1");
  return std::move(average_distribution_discrete(n, std::vector<long>{horizon}).front());
}

AverageDistribution average_distribution_continuous(int n, double horizon, int panels) {
  if (horizon <= 0.0) throw DomainError("average_distribution_continuous: T must be positive");
  if (panels < 1) throw DomainError("average_distribution_continuous: panels must be positive");
  // The integrand is a trigonometric polynomial of degree 2n in t/n.
  const long count = static_cast<long>(std::ceil(std::max(panels, 2 * n) * horizon / n));
  const double width = horizon / static_cast<double>(count);
  std::vector<CompensatedSum<double>> acc(static_cast<std::size_t>(n) + 1);
  auto fold = [&](double t, double weight) {
    const WeightDistribution p = wave(n, t).distribution();
    for (int x = 0; x <= n; ++x) acc[static_cast<std::size_t>(x)].add(weight * p.mass(x));
  };
  for (long panel = 0; panel < count; ++panel) {
    const double mid = (panel + 0.5) * width;
    for (std::size_t i = 0; i < kGaussNodes.size(); ++i) {
      const double offset = 0.5 * width * kGaussNodes[i];
      const double w = 0.5 * width * kGaussWeights[i] / horizon;
      fold(mid - offset, w);
      fold(mid + offset, w);
    }
  }
  Eigen::VectorXd mass(n + 1);
  for (int x = 0; x <= n; ++x) mass[x] = acc[static_cast<std::size_t>(x)].value();
  return {n, horizon, WeightDistribution(n, std::move(mass))};
}

double average_coefficient_continuous(int n, int k, double horizon) {
  if (n < 1) throw DomainError("average_coefficient_continuous: n must be positive");
  if (k < 0) throw DomainError("average_coefficient_continuous: k must be non-negative");
  if (!(horizon > 0.0)) throw DomainError("average_coefficient_continuous: T must be positive");
  // With u = 2t/n: (1/T) int_0^T cos^k(2t/n) dt = I_k(X) / X, X = 2T/n, and
  // I_k = cos^{k-1}X sin X / k + (k-1)/k I_{k-2}.
  const double x = 2.0 * horizon / n;
  const double c = std::cos(x);
  const double s = std::sin(x);
  double even = x;     // I_0
  double odd = s;      // I_1
  double c_pow = 1.0;  // cos^{m-1} X for the current m
  if (k == 0) return 1.0;
  if (k == 1) return odd / x;
  c_pow = c;  // m = 2
  for (int m = 2; m <= k; ++m) {
    double& prev = (m % 2 == 0) ? even : odd;
    prev = c_pow * s / m + (m - 1.0) / m * prev;
    c_pow *= c;
  }
  return ((k % 2 == 0) ? even : odd) / x;
}

double limiting_coefficient(int k) {
  if (k < 0) throw DomainError("limiting_coefficient: k must be non-negative");
  if (k % 2 == 1) return 0.0;
  return std::exp(log_binomial(k, k / 2) - k * std::numbers::ln2);
}

double tv_lower_bound_from_coefficient(int /*n*/, double coefficient) { return 0.5 * std::abs(coefficient); }

double aakv_constant(int n) {
  if (n < 2) throw DomainError("aakv_bound: n must be at least 2");
  struct EigenClass {
    int k;
    int sign;
    double phase;
    double log_mult;
  };
  std::vector<EigenClass> classes;
  classes.reserve(2 * static_cast<std::size_t>(n + 1));
  for (int k = 0; k <= n; ++k) {
    const double omega = block_phase(n, k);
    for (int sign : {+1, -1}) classes.push_back({k, sign, sign * omega, log_binomial(n, k)});
  }
  const double log_weight = log_nontrivial_weight(n);
  CompensatedSum<double> acc;
  for (const EigenClass& ci : classes) {
    for (const EigenClass& cj : classes) {
      // Eigenvalues coincide iff same k and either the same sign or a real
      // eigenvalue (k = 0 or k = n).
      const bool same = ci.k == cj.k && (ci.sign == cj.sign || ci.k == 0 || ci.k == n);
      if (same) continue;
      const double gap = 2.0 * std::abs(std::sin(0.5 * (ci.phase - cj.phase)));
      acc.add(std::exp(ci.log_mult + cj.log_mult + log_weight - std::log(gap)));
    }
  }
  return 2.0 * acc.value();
}

double aakv_bound(int n, double horizon) {
  if (!(horizon >= 1.0)) throw DomainError("aakv_bound: T must be >= 1");
  return aakv_constant(n) / horizon;
}

long aakv_horizon(int n, double epsilon) {
  if (!(epsilon > 0.0)) throw DomainError("aakv_horizon: epsilon must be positive");
  return std::max(1L, static_cast<long>(std::ceil(aakv_constant(n) / epsilon)));
}

boost::multiprecision::cpp_int aakv_pair_count(int n) {
  using boost::multiprecision::cpp_int;
  if (n < 1) throw DomainError("aakv_pair_count: n must be positive");
  std::vector<cpp_int> row(static_cast<std::size_t>(n) + 1);
  row[0] = 1;
  for (int k = 1; k <= n; ++k) row[static_cast<std::size_t>(k)] = row[static_cast<std::size_t>(k - 1)] * (n - k + 1) / k;
  cpp_int squares = 0;
  cpp_int total = 0;
  for (int k = 0; k <= n; ++k) {
    const cpp_int& c = row[static_cast<std::size_t>(k)];
    total += c;
    if (k >= 1 && k <= n - 1) squares += c * c;
  }
  return squares + 4 * total * total;
}

}  // namespace qwalk
