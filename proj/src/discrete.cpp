#include "qwalk/discrete.hpp"

#include <algorithm>
#include <limits>
#include <numbers>

#include "qwalk/spectral.hpp"

namespace qwalk {

double CollapsedState::vertex_probability(int x) const {
  return x * std::norm(set_amp[x]) + (n - x) * std::norm(unset_amp[x]);
}

double CollapsedState::log_vertex_probability(int x) const {
  // Scale by the larger modulus so |amp|^2 cannot underflow before the
  // binomial multiplicity is applied.
  const double d = std::abs(set_amp[x]);
  const double u = std::abs(unset_amp[x]);
  const double scale = std::max(d, u);
  if (scale == 0.0) return -std::numeric_limits<double>::infinity();
  const double rd = d / scale;
  const double ru = u / scale;
  return 2.0 * std::log(scale) + std::log(x * rd * rd + (n - x) * ru * ru);
}

double CollapsedState::norm() const {
  CompensatedSum<double> acc;
  for (int x = 0; x <= n; ++x) {
    const double lp = log_vertex_probability(x);
    if (std::isfinite(lp)) acc.add(std::exp(log_binomial(n, x) + lp));
  }
  return acc.value();
}

CollapsedState initial_state(int n) {
  if (n < 1) throw DomainError("initial_state: n must be positive");
  CollapsedState s{n, 0, Eigen::VectorXcd::Zero(n + 1), Eigen::VectorXcd::Zero(n + 1)};
  s.unset_amp[0] = 1.0 / std::sqrt(static_cast<double>(n));
  return s;
}

void advance(CollapsedState& s, long steps) {
  const int n = s.n;
  const Eigen::ArrayXd set_count = Eigen::ArrayXd::LinSpaced(n + 1, 0.0, n);
  const Eigen::ArrayXd unset_count = static_cast<double>(n) - set_count;
  Eigen::ArrayXcd coined_set(n + 1);
  Eigen::ArrayXcd coined_unset(n + 1);
  for (long step = 0; step < steps; ++step) {
    // Grover coin: (D psi)_j = (2/n) sum_i psi_i - psi_j on each vertex block.
    const Eigen::ArrayXcd mean_field =
        (2.0 / n) * (set_count * s.set_amp.array() + unset_count * s.unset_amp.array());
    coined_set = mean_field - s.set_amp.array();
    coined_unset = mean_field - s.unset_amp.array();
    // Shift along direction j flips bit j: unset at x -> set at x+1 and back.
    s.set_amp[0] = 0.0;
    s.set_amp.tail(n) = coined_unset.head(n);
    s.unset_amp.head(n) = coined_set.tail(n);
    s.unset_amp[n] = 0.0;
    ++s.t;
  }
}

CollapsedState step(const CollapsedState& s) {
  CollapsedState next = s;
  advance(next, 1);
  return next;
}

WeightDistribution distribution(const CollapsedState& s) {
  Eigen::VectorXd log_mass(s.n + 1);
  for (int x = 0; x <= s.n; ++x) {
    log_mass[x] = log_binomial(s.n, x) + s.log_vertex_probability(x);
  }
  return WeightDistribution::from_log_mass(s.n, log_mass);
}

FourierEvaluator::FourierEvaluator(int n, long t)
    : n_(n), flipped_(Eigen::VectorXd::Zero(n + 1)), unflipped_(Eigen::VectorXd::Zero(n + 1)) {
  if (n < 1) throw DomainError("FourierEvaluator: n must be positive");
  if (t < 0) throw DomainError("FourierEvaluator: t must be non-negative");
  const double inv_sqrt_n = 1.0 / std::sqrt(static_cast<double>(n));
  for (int w = 0; w <= n; ++w) {
    const BlockRotation rot = block_rotation(n, w, t);
    if (w > 0) {
      flipped_[w] = inv_sqrt_n * (rot.cos - std::sqrt(static_cast<double>(n - w) / w) * rot.sin);
    }
    if (w < n) {
      unflipped_[w] = inv_sqrt_n * (rot.cos + std::sqrt(static_cast<double>(w) / (n - w)) * rot.sin);
    }
  }
}

double FourierEvaluator::coefficient(int k) const {
  if (k < 0 || k > n_) throw DomainError("fourier_coefficient: k outside 0..n");
  const int rest = n_ - k;
  const double log_scale = -n_ * std::numbers::ln2;
  const Eigen::VectorXd log_ck = log_binomial_row(k);
  const Eigen::VectorXd log_crest = log_binomial_row(rest);
  CompensatedSum<double> acc;
  for (int j = 0; j <= k; ++j) {
    for (int l = 0; l <= rest; ++l) {
      const int p = j + l;      // weight of k'
      const int q = k - j + l;  // weight of k xor k'
      const double dot = j * flipped_[p] * unflipped_[q] + l * flipped_[p] * flipped_[q] +
                         (k - j) * unflipped_[p] * flipped_[q] +
                         (rest - l) * unflipped_[p] * unflipped_[q];
      acc.add(std::exp(log_ck[j] + log_crest[l] + log_scale) * dot);
    }
  }
  return acc.value();
}

FourierCoefficient fourier_coefficient(int n, int k, long t) {
  return {n, k, t, FourierEvaluator(n, t).coefficient(k)};
}

double ds_bound(int n, long t) {
  if (n < 2) throw DomainError("ds_bound: n must be at least 2");
  const FourierEvaluator eval(n, t);
  CompensatedSum<double> acc;
  for (int k = 1; k < n; ++k) {
    const double c = eval.coefficient(k);
    if (c != 0.0) acc.add(std::exp(log_binomial(n, k) + 2.0 * std::log(std::abs(c))));
  }
  return std::sqrt(0.25 * acc.value());
}

double dominant_approximation(int n, int k, double t) {
  if (k <= 0 || k >= n) throw DomainError("dominant_approximation: requires 0 < k < n");
  const double c = std::cos(2.0 * t / n);
  return std::pow(c, k) + std::pow(c, n - k);
}

std::vector<TraceEntry> walk_trace(int n, long t_max) {
  if (t_max < 0) throw DomainError("walk_trace: t_max must be non-negative");
  std::vector<TraceEntry> trace;
  trace.reserve(static_cast<std::size_t>(t_max) + 1);
  CollapsedState s = initial_state(n);
  for (long t = 0;; ++t) {
    WeightDistribution p = distribution(s);
    const double tv = tv_distance(p, ParityUniform{n, static_cast<int>(t % 2)});
    trace.push_back({t, std::move(p), tv});
    if (t == t_max) break;
    advance(s, 1);
  }
  return trace;
}

std::vector<double> tv_trace(int n, long t_max) {
  if (t_max < 0) throw DomainError("tv_trace: t_max must be non-negative");
  const WeightDistribution even = ParityUniform{n, 0}.distribution();
  const WeightDistribution odd = ParityUniform{n, 1}.distribution();
  std::vector<double> tv;
  tv.reserve(static_cast<std::size_t>(t_max) + 1);
  CollapsedState s = initial_state(n);
  for (long t = 0;; ++t) {
    tv.push_back(tv_distance(distribution(s), t % 2 == 0 ? even : odd));
    if (t == t_max) break;
    advance(s, 1);
  }
  return tv;
}

}  // namespace qwalk
