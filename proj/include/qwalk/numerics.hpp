#pragma once

#include <cmath>
#include <complex>
#include <span>
#include <stdexcept>
#include <string>

#include <Eigen/Dense>

namespace qwalk {

using Amplitude = std::complex<double>;

/// Raised when an argument lies outside the mathematical domain of an operation.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Raised when a brute-force evaluation would exceed its size cap.
class ResourceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Neumaier-style compensated accumulator. Terms are folded in the order
/// they are added, so equal input sequences give bit-identical results.
template <typename Scalar = double>
class CompensatedSum {
 public:
  void add(Scalar term) {
    const Scalar t = sum_ + term;
    if (std::abs(sum_) >= std::abs(term)) {
      carry_ += (sum_ - t) + term;
    } else {
      carry_ += (term - t) + sum_;
    }
    sum_ = t;
  }

  CompensatedSum& operator+=(Scalar term) {
    add(term);
    return *this;
  }

  Scalar value() const { return sum_ + carry_; }

 private:
  Scalar sum_{0};
  Scalar carry_{0};
};

double compensated_sum(std::span<const double> terms);

template <typename Derived>
typename Derived::Scalar compensated_sum(const Eigen::DenseBase<Derived>& terms) {
  CompensatedSum<typename Derived::Scalar> acc;
  for (Eigen::Index i = 0; i < terms.size(); ++i) acc.add(terms.derived().coeff(i));
  return acc.value();
}

/// ln C(n, x). Throws DomainError unless 0 <= x <= n.
double log_binomial(long n, long x);

/// ln C(n, x) for x = 0..n, evaluated once per dimension.
Eigen::VectorXd log_binomial_row(int n);

/// Probability mass aggregated by Hamming weight: mass[x] is the total
/// probability carried by all C(n, x) vertices of weight x.
class WeightDistribution {
 public:
  WeightDistribution(int n, Eigen::VectorXd mass);

  /// Builds a distribution from ln(mass[x]); -inf entries are exact zeros.
  static WeightDistribution from_log_mass(int n, const Eigen::VectorXd& log_mass);

  static WeightDistribution point_mass(int n, int weight);

  int dimension() const { return n_; }
  const Eigen::VectorXd& mass() const { return mass_; }
  double mass(int weight) const { return mass_[weight]; }
  double total() const { return compensated_sum(mass_); }

  /// Probability of a single vertex of the given weight, ln-scale.
  double log_vertex_probability(int weight) const;
  double log2_vertex_probability(int weight) const {
    return log_vertex_probability(weight) / std::log(2.0);
  }

 private:
  int n_;
  Eigen::VectorXd mass_;
};

/// Uniform over the 2^(n-1) vertices whose weight parity equals `parity`.
struct ParityUniform {
  int n;
  int parity;

  double log_vertex_probability(int weight) const;
  WeightDistribution distribution() const;
};

/// Uniform over all 2^n vertices.
struct FullUniform {
  int n;

  WeightDistribution distribution() const;
};

/// Total variation distance (1/2) sum_v |p(v) - q(v)|.
double tv_distance(const WeightDistribution& p, const WeightDistribution& q);
double tv_distance(const WeightDistribution& p, const ParityUniform& q);
double tv_distance(const WeightDistribution& p, const FullUniform& q);

inline double tv_distance(const ParityUniform& q, const WeightDistribution& p) {
  return tv_distance(p, q);
}
inline double tv_distance(const FullUniform& q, const WeightDistribution& p) {
  return tv_distance(p, q);
}

}  // namespace qwalk
