#include "qwalk/verify.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdint>
#include <numbers>

#include "qwalk/continuous.hpp"
#include "qwalk/discrete.hpp"
#include "qwalk/oracle.hpp"

namespace qwalk {

namespace {

constexpr double kAmplitudeTolerance = 1e-10;
constexpr double kDistributionTolerance = 1e-10;
constexpr double kNormTolerance = 1e-12;
constexpr double kFourierTolerance = 1e-9;
constexpr double kContinuousTolerance = 1e-8;

int weight(Eigen::Index v) { return std::popcount(static_cast<std::uint64_t>(v)); }

CheckResult make(std::string name, double err, double tol) {
  return {std::move(name), err <= tol, err, tol};
}

std::vector<double> sample_times(double t_end, int samples) {
  std::vector<double> times;
  for (int i = 1; i <= samples; ++i) times.push_back(t_end * i / samples);
  return times;
}

}  // namespace

CheckResult check_discrete_amplitudes(int n, long t_max) {
  oracle::DiscreteState full = oracle::discrete_initial(n);
  CollapsedState collapsed = initial_state(n);
  const Eigen::Index vertices = Eigen::Index{1} << n;
  double worst = 0.0;
  for (long t = 0;; ++t) {
    for (Eigen::Index v = 0; v < vertices; ++v) {
      const int x = weight(v);
      for (int j = 0; j < n; ++j) {
        const bool set = (v >> j) & 1;
        const Amplitude expected = set ? collapsed.set_amp[x] : collapsed.unset_amp[x];
        worst = std::max(worst, std::abs(full.at(static_cast<std::uint32_t>(v), j) - expected));
      }
    }
    if (t == t_max) break;
    full = oracle::discrete_step(full);
    advance(collapsed, 1);
  }
  return make("discrete_class_amplitudes", worst, kAmplitudeTolerance);
}

CheckResult check_discrete_distribution(int n, long t_max) {
  oracle::DiscreteState full = oracle::discrete_initial(n);
  CollapsedState collapsed = initial_state(n);
  double worst = 0.0;
  for (long t = 0;; ++t) {
    const WeightDistribution brute = oracle::collapse_by_weight(n, oracle::discrete_probabilities(full));
    worst = std::max(worst, tv_distance(distribution(collapsed), brute));
    if (t == t_max) break;
    full = oracle::discrete_step(full);
    advance(collapsed, 1);
  }
  return make("discrete_distribution_tv", worst, kDistributionTolerance);
}

CheckResult check_discrete_norm(int n, long t_max) {
  CollapsedState s = initial_state(n);
  double previous = s.norm();
  double worst = std::abs(previous - 1.0);
  for (long t = 0; t < t_max; ++t) {
    advance(s, 1);
    const double current = s.norm();
    worst = std::max(worst, std::abs(current - previous));
    previous = current;
  }
  return make("discrete_norm_per_step", worst, kNormTolerance);
}

CheckResult check_discrete_fourier(int n, long t_max) {
  oracle::DiscreteState full = oracle::discrete_initial(n);
  double worst = 0.0;
  for (long t = 0;; ++t) {
    const oracle::WalshSpectrum spectrum = oracle::walsh_transform(oracle::discrete_probabilities(full));
    const FourierEvaluator eval(n, t);
    Eigen::VectorXd by_weight(n + 1);
    for (int k = 0; k <= n; ++k) by_weight[k] = eval.coefficient(k);
    for (Eigen::Index m = 0; m < spectrum.coefficients.size(); ++m) {
      worst = std::max(worst, std::abs(spectrum.coefficients[m] - by_weight[weight(m)]));
    }
    if (t == t_max) break;
    full = oracle::discrete_step(full);
  }
  return make("discrete_fourier_vs_walsh", worst, kFourierTolerance);
}

CheckResult check_continuous_distribution(int n, double t_end, int samples, double dt) {
  oracle::ContinuousState s = oracle::continuous_initial(n);
  const double step = dt > 0.0 ? dt : 1e-3 * n;
  double worst = 0.0;
  for (double t : sample_times(t_end, samples)) {
    oracle::continuous_advance(s, t - s.t, step);
    const WeightDistribution brute = oracle::collapse_by_weight(n, oracle::continuous_probabilities(s));
    worst = std::max(worst, tv_distance(wave(n, t).distribution(), brute));
  }
  return make("continuous_product_form_vs_rk4", worst, kContinuousTolerance);
}

CheckResult check_continuous_fourier(int n, double t_end, int samples, double dt) {
  oracle::ContinuousState s = oracle::continuous_initial(n);
  const double step = dt > 0.0 ? dt : 1e-3 * n;
  double worst = 0.0;
  for (double t : sample_times(t_end, samples)) {
    oracle::continuous_advance(s, t - s.t, step);
    const oracle::WalshSpectrum spectrum = oracle::walsh_transform(oracle::continuous_probabilities(s));
    for (Eigen::Index m = 0; m < spectrum.coefficients.size(); ++m) {
      const double closed = fourier_coefficient_continuous(n, weight(m), t);
      worst = std::max(worst, std::abs(spectrum.coefficients[m] - closed));
    }
  }
  return make("continuous_fourier_vs_walsh", worst, kFourierTolerance);
}

std::vector<CheckResult> run_verification(int n, long t_max) {
  if (n > oracle::kMaxDiscreteDimension) {
    throw ResourceError("verify: n=" + std::to_string(n) + " exceeds the oracle cap of " +
                        std::to_string(oracle::kMaxDiscreteDimension));
  }
  if (n < 1) throw DomainError("verify: n must be positive");
  if (t_max < 0) throw DomainError("verify: t_max must be non-negative");
  std::vector<CheckResult> results{
      check_discrete_amplitudes(n, t_max),
      check_discrete_distribution(n, t_max),
      check_discrete_norm(n, t_max),
      check_discrete_fourier(n, t_max),
  };
  if (n <= oracle::kMaxContinuousDimension) {
    const double t_end = std::max(1.0, static_cast<double>(t_max));
    results.push_back(check_continuous_distribution(n, t_end, 8));
    results.push_back(check_continuous_fourier(n, t_end, 8));
  }
  return results;
}

}  // namespace qwalk
