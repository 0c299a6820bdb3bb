#pragma once

#include <random>

#include <Eigen/Dense>
#include <boost/multiprecision/cpp_int.hpp>

#include "qwalk/numerics.hpp"

namespace qwalk::testing {

inline boost::multiprecision::cpp_int exact_binomial(int n, int x) {
  boost::multiprecision::cpp_int c = 1;
  for (int i = 1; i <= x; ++i) {
    c *= n - x + i;
    c /= i;
  }
  return c;
}

/// Random weight distribution; a random subset of weights is zeroed so
/// supports differ between draws.
inline WeightDistribution random_distribution(std::mt19937_64& rng, int n) {
  std::exponential_distribution<double> draw(1.0);
  std::bernoulli_distribution keep(0.7);
  Eigen::VectorXd mass(n + 1);
  for (int x = 0; x <= n; ++x) mass[x] = keep(rng) ? draw(rng) : 0.0;
  if (mass.sum() == 0.0) mass[0] = 1.0;
  mass /= mass.sum();
  return WeightDistribution(n, mass);
}

/// Grover coin as a dense matrix.
inline Eigen::MatrixXd dense_grover(int n) {
  Eigen::MatrixXd d = Eigen::MatrixXd::Constant(n, n, 2.0 / n);
  d.diagonal().array() -= 1.0;
  return d;
}

/// U_k = S_k D with the n - k unflipped directions first and the k flipped
/// directions last (S_k negates the flipped rows).
inline Eigen::MatrixXd dense_block(int n, int k) {
  Eigen::MatrixXd u = dense_grover(n);
  u.bottomRows(k) *= -1.0;
  return u;
}

}  // namespace qwalk::testing
