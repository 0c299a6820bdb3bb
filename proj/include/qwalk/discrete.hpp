#pragma once

#include <vector>

#include <Eigen/Dense>

#include "qwalk/numerics.hpp"

namespace qwalk {

/// Symmetry-reduced state of the Grover-coined walk started at the origin.
///
/// Every basis state (vertex v, direction j) with |v| = x carries one of two
/// amplitudes: set_amp[x] when bit j of v is set, unset_amp[x] otherwise.
/// The classes (x = 0, set) and (x = n, unset) are empty and stay zero.
struct CollapsedState {
  int n;
  long t;
  Eigen::VectorXcd set_amp;
  Eigen::VectorXcd unset_amp;

  /// Probability of one vertex of weight x: x|d_x|^2 + (n-x)|u_x|^2.
  double vertex_probability(int x) const;

  /// ln of vertex_probability(x), evaluated without squaring tiny amplitudes.
  double log_vertex_probability(int x) const;

  /// sum_x C(n,x) * vertex_probability(x), assembled in log space.
  double norm() const;
};

CollapsedState initial_state(int n);

/// One walk step: Grover coin on every direction block, then the shift.
CollapsedState step(const CollapsedState& s);

/// Advances in place by `steps` walk steps.
void advance(CollapsedState& s, long steps);

WeightDistribution distribution(const CollapsedState& s);

struct FourierCoefficient {
  int n;
  int k;
  long t;
  double value;
};

/// Fourier coefficients P~_t(k) = sum_x (-1)^{k.x} P_t(x) of the walk
/// distribution at a fixed step t, for any weight k.
///
/// Evaluates the convolution of Psi~_t with itself grouped by the overlaps
/// (j, l) of k' with k and with its complement. The dot product of the two
/// wave-vector components is formed per direction class, so classes that
/// are empty never touch the 0/0 limits at weights 0 and n.
class FourierEvaluator {
 public:
  FourierEvaluator(int n, long t);

  double coefficient(int k) const;

  /// Component of Psi~_t(k') on a flipped (bit set in k') direction, for |k'| = w.
  double flipped_component(int w) const { return flipped_[w]; }
  /// Component on an unflipped direction.
  double unflipped_component(int w) const { return unflipped_[w]; }

 private:
  int n_;
  Eigen::VectorXd flipped_;
  Eigen::VectorXd unflipped_;
};

FourierCoefficient fourier_coefficient(int n, int k, long t);

/// sqrt( (1/4) sum_{k=1}^{n-1} C(n,k) P~_t(k)^2 ), an upper bound on the
/// distance to the parity-matched uniform distribution.
double ds_bound(int n, long t);

/// cos^k(2t/n) + cos^{n-k}(2t/n); first-order estimate of |P~_t(k)|.
double dominant_approximation(int n, int k, double t);

struct TraceEntry {
  long t;
  WeightDistribution distribution;
  double tv_vs_parity_uniform;
};

/// Steps 0..t_max from the initial state.
std::vector<TraceEntry> walk_trace(int n, long t_max);

/// TV against the parity-matched uniform distribution for t = 0..t_max,
/// without retaining the distributions.
std::vector<double> tv_trace(int n, long t_max);

}  // namespace qwalk
