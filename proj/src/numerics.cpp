#include "qwalk/numerics.hpp"

#include <cmath>
#include <limits>

namespace qwalk {

namespace {

constexpr double kNormTolerance = 1e-9;

void require_same_dimension(int a, int b) {
  if (a != b) {
    throw DomainError("tv_distance: dimension mismatch (" + std::to_string(a) + " vs " +
                      std::to_string(b) + ")");
  }
}

// ln C(n, x) in extended precision. Exponents near -n ln 2 at n ~ 200 lose
// ~1e-14 relative accuracy when rounded to double first.
long double log_binomial_extended(long n, long x) {
  if (x == 0 || x == n) return 0.0L;
  return std::lgammal(static_cast<long double>(n) + 1.0L) - std::lgammal(static_cast<long double>(x) + 1.0L) -
         std::lgammal(static_cast<long double>(n - x) + 1.0L);
}

constexpr long double kLn2 = 0.693147180559945309417232121458176568L;

// C(n, x) 2^-shift for every x of the requested parity (-1 for all weights).
WeightDistribution uniform_masses(int n, int shift, int parity) {
  Eigen::VectorXd mass = Eigen::VectorXd::Zero(n + 1);
  for (int x = 0; x <= n; ++x) {
    if (parity >= 0 && (x & 1) != (parity & 1)) continue;
    mass[x] = static_cast<double>(expl(log_binomial_extended(n, x) - shift * kLn2));
  }
  return WeightDistribution(n, std::move(mass));
}

}  // namespace

double compensated_sum(std::span<const double> terms) {
  CompensatedSum<double> acc;
  for (double term : terms) acc.add(term);
  return acc.value();
}

double log_binomial(long n, long x) {
  if (n < 0 || x < 0 || x > n) {
    throw DomainError("log_binomial: require 0 <= x <= n, got n=" + std::to_string(n) +
                      ", x=" + std::to_string(x));
  }
  // Extended precision keeps the three-way cancellation below 1e-11 at n ~ 1e6.
  return static_cast<double>(log_binomial_extended(n, x));
}

Eigen::VectorXd log_binomial_row(int n) {
  if (n < 0) throw DomainError("log_binomial_row: negative dimension");
  Eigen::VectorXd row(n + 1);
  for (int x = 0; x <= n; ++x) row[x] = log_binomial(n, x);
  return row;
}

WeightDistribution::WeightDistribution(int n, Eigen::VectorXd mass) : n_(n), mass_(std::move(mass)) {
  if (n_ < 1) throw DomainError("WeightDistribution: dimension must be positive");
  if (mass_.size() != n_ + 1) {
    throw DomainError("WeightDistribution: expected n+1 masses");
  }
  for (Eigen::Index x = 0; x < mass_.size(); ++x) {
    if (!std::isfinite(mass_[x]) || mass_[x] < 0.0) {
      throw DomainError("WeightDistribution: masses must be finite and non-negative");
    }
  }
  if (std::abs(total() - 1.0) > kNormTolerance) {
    throw DomainError("WeightDistribution: masses sum to " + std::to_string(total()));
  }
}

WeightDistribution WeightDistribution::from_log_mass(int n, const Eigen::VectorXd& log_mass) {
  Eigen::VectorXd mass(log_mass.size());
  for (Eigen::Index x = 0; x < log_mass.size(); ++x) {
    mass[x] = std::isinf(log_mass[x]) && log_mass[x] < 0 ? 0.0 : std::exp(log_mass[x]);
  }
  return WeightDistribution(n, std::move(mass));
}

WeightDistribution WeightDistribution::point_mass(int n, int weight) {
  if (weight < 0 || weight > n) throw DomainError("point_mass: weight out of range");
  Eigen::VectorXd mass = Eigen::VectorXd::Zero(n + 1);
  mass[weight] = 1.0;
  return WeightDistribution(n, std::move(mass));
}

double WeightDistribution::log_vertex_probability(int weight) const {
  if (weight < 0 || weight > n_) throw DomainError("log_vertex_probability: weight out of range");
  if (mass_[weight] == 0.0) return -std::numeric_limits<double>::infinity();
  return std::log(mass_[weight]) - log_binomial(n_, weight);
}

double ParityUniform::log_vertex_probability(int weight) const {
  if ((weight & 1) != (parity & 1)) return -std::numeric_limits<double>::infinity();
  return -(n - 1) * std::log(2.0);
}

WeightDistribution ParityUniform::distribution() const {
  if (n < 1) throw DomainError("ParityUniform: dimension must be positive");
  return uniform_masses(n, n - 1, parity & 1);
}

WeightDistribution FullUniform::distribution() const {
  if (n < 1) throw DomainError("FullUniform: dimension must be positive");
  return uniform_masses(n, n, -1);
}

// Both sides are constant on weight classes, so the per-vertex sum
// sum_x C(n,x) |p_x/C - q_x/C| collapses to the mass difference.
double tv_distance(const WeightDistribution& p, const WeightDistribution& q) {
  require_same_dimension(p.dimension(), q.dimension());
  CompensatedSum<double> acc;
  for (int x = 0; x <= p.dimension(); ++x) acc.add(std::abs(p.mass(x) - q.mass(x)));
  return 0.5 * acc.value();
}

double tv_distance(const WeightDistribution& p, const ParityUniform& q) {
  require_same_dimension(p.dimension(), q.n);
  return tv_distance(p, q.distribution());
}

double tv_distance(const WeightDistribution& p, const FullUniform& q) {
  require_same_dimension(p.dimension(), q.n);
  return tv_distance(p, q.distribution());
}

}  // namespace qwalk
