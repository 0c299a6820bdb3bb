#pragma once

#include <vector>

#include "qwalk/numerics.hpp"

namespace qwalk {

/// Continuous-time walk generated by the degree-normalized adjacency matrix,
/// started at the origin. The state factorizes into n independent qubits,
/// each in cos(t/n)|0> + i sin(t/n)|1>.
struct ContinuousWave {
  int n;
  double t;
  Amplitude c;  // cos(t/n)
  Amplitude s;  // i sin(t/n)

  /// c^{n-x} s^x, the amplitude on any vertex of weight x.
  Amplitude vertex_amplitude(int x) const;

  /// ln |c^{n-x} s^x|^2; -inf where the amplitude vanishes.
  double log_vertex_probability(int x) const;

  WeightDistribution distribution() const;
};

ContinuousWave wave(int n, double t);

/// P~_t(k) = cos^k(2t/n).
double fourier_coefficient_continuous(int n, int k, double t);

/// TV(P_t, uniform) from the per-vertex ratios (1 + g)^{n-x} (1 - g)^x,
/// g = cos(2t/n). The binomial weights multiply |ratio - 1| instead of
/// being cancelled against 2^{-n}, so the result keeps relative accuracy
/// near the uniformity times where the generic evaluation bottoms out at
/// ~1e-15.
double tv_to_uniform_continuous(int n, double t);

/// sqrt((1 + cos^2(2t/n))^n - 1).
double ds_bound_continuous(int n, double t);

/// (pi/4) n k for odd k <= k_max: times at which the distribution is exactly uniform.
std::vector<double> instantaneous_uniformity_times(int n, int k_max);

}  // namespace qwalk
