#include "qwalk/continuous.hpp"

#include <cmath>
#include <limits>
#include <numbers>

namespace qwalk {

namespace {

double log_sq(double v) {
  return v == 0.0 ? -std::numeric_limits<double>::infinity() : 2.0 * std::log(std::abs(v));
}

}  // namespace

ContinuousWave wave(int n, double t) {
  if (n < 1) throw DomainError("wave: n must be positive");
  if (!std::isfinite(t)) throw DomainError("wave: t must be finite");
  const double angle = t / n;
  return {n, t, Amplitude(std::cos(angle), 0.0), Amplitude(0.0, std::sin(angle))};
}

Amplitude ContinuousWave::vertex_amplitude(int x) const {
  if (x < 0 || x > n) throw DomainError("vertex_amplitude: weight out of range");
  return std::pow(c, n - x) * std::pow(s, x);
}

double ContinuousWave::log_vertex_probability(int x) const {
  if (x < 0 || x > n) throw DomainError("log_vertex_probability: weight out of range");
  const double from_cos = (n - x) == 0 ? 0.0 : (n - x) * log_sq(c.real());
  const double from_sin = x == 0 ? 0.0 : x * log_sq(s.imag());
  return from_cos + from_sin;
}

WeightDistribution ContinuousWave::distribution() const {
  Eigen::VectorXd log_mass(n + 1);
  for (int x = 0; x <= n; ++x) log_mass[x] = log_binomial(n, x) + log_vertex_probability(x);
  return WeightDistribution::from_log_mass(n, log_mass);
}

double fourier_coefficient_continuous(int n, int k, double t) {
  if (n < 1) throw DomainError("fourier_coefficient_continuous: n must be positive");
  if (k < 0 || k > n) throw DomainError("fourier_coefficient_continuous: k outside 0..n");
  if (k == 0) return 1.0;
  return std::pow(std::cos(2.0 * t / n), k);
}

double tv_to_uniform_continuous(int n, double t) {
  if (n < 1) throw DomainError("tv_to_uniform_continuous: n must be positive");
  if (!std::isfinite(t)) throw DomainError("tv_to_uniform_continuous: t must be finite");
  const double g = std::cos(2.0 * t / n);
  const double log_up = std::log1p(g);
  const double log_down = std::log1p(-g);
  const double log_uniform = -n * std::numbers::ln2;
  CompensatedSum<double> acc;
  for (int x = 0; x <= n; ++x) {
    double log_ratio = 0.0;
    if (n - x > 0) log_ratio += (n - x) * log_up;
    if (x > 0) log_ratio += x * log_down;
    acc.add(std::exp(log_binomial(n, x) + log_uniform) * std::abs(std::expm1(log_ratio)));
  }
  return 0.5 * acc.value();
}

double ds_bound_continuous(int n, double t) {
  if (n < 1) throw DomainError("ds_bound_continuous: n must be positive");
  const double c = std::cos(2.0 * t / n);
  // expm1/log1p keep the value accurate when cos^2 is tiny.
  return std::sqrt(std::expm1(n * std::log1p(c * c)));
}

std::vector<double> instantaneous_uniformity_times(int n, int k_max) {
  if (n < 1) throw DomainError("instantaneous_uniformity_times: n must be positive");
  if (k_max < 1) throw DomainError("instantaneous_uniformity_times: k_max must be >= 1");
  std::vector<double> times;
  for (int k = 1; k <= k_max; k += 2) times.push_back(std::numbers::pi / 4.0 * n * k);
  return times;
}

}  // namespace qwalk
