#pragma once

#include <optional>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "qwalk/numerics.hpp"

namespace qwalk {

enum class Walk { discrete, continuous };

/// Sample times for a scan. Discrete scans require non-negative integer times.
struct TimeGrid {
  std::vector<double> times;

  /// t_first, t_first + 1, ..., t_last.
  static TimeGrid integers(long t_first, long t_last);

  /// `points` evenly spaced samples on [begin, end], endpoints included.
  static TimeGrid uniform(double begin, double end, long points);

  /// Uniform grid in units of t/n with `per_unit` samples per unit of t/n.
  /// The sample nearest each odd multiple of (pi/4)n inside the range is
  /// moved onto it, so exact-uniformity times are always sampled.
  static TimeGrid continuous(int n, double begin, double end, double per_unit, long min_points = 2);
};

struct MixingScanResult {
  int n;
  std::vector<double> times;
  std::vector<double> tv;
  double argmin_t;
  double min_tv;
  std::optional<double> epsilon_threshold;
  std::optional<double> first_epsilon_time;
};

/// Distance to the reference distribution at every grid time. The reference
/// is parity-matched uniform for the discrete walk and uniform for the
/// continuous walk. Throws DomainError on an empty grid.
MixingScanResult instantaneous_scan(Walk walk, int n, const TimeGrid& grid,
                                    std::optional<double> epsilon = std::nullopt);

/// Smallest-TV time inside [center - radius, center + radius] of a discrete scan.
double windowed_argmin(const MixingScanResult& scan, double center, double radius);

struct AverageDistribution {
  int n;
  double horizon;
  WeightDistribution mass;
};

/// (1/T) sum_{t<T} P_t for the discrete walk.
AverageDistribution average_distribution_discrete(int n, long horizon);

/// Running averages of the discrete walk reported at each requested horizon
/// (sorted ascending, all >= 1) in a single pass.
std::vector<AverageDistribution> average_distribution_discrete(int n, const std::vector<long>& horizons);

/// (1/T) integral_0^T P_t dt for the continuous walk, composite Gauss-Legendre
/// with `panels` panels per unit of t/n.
AverageDistribution average_distribution_continuous(int n, double horizon, int panels = 64);

/// (1/T) integral_0^T cos^k(2t/n) dt by the power-reduction recurrence.
double average_coefficient_continuous(int n, int k, double horizon);

/// lim_{T->inf} of the averaged coefficient: 0 for odd k, C(k, k/2)/2^k for even k.
double limiting_coefficient(int k);

/// |coefficient| / 2; any non-constant Fourier coefficient bounds 2 TV from below.
double tv_lower_bound_from_coefficient(int n, double coefficient);

/// T * aakv_bound(n, T): the horizon-independent part of the bound.
double aakv_constant(int n);

/// (2/T) sum over ordered pairs of eigenvectors with distinct eigenvalues of
/// |a_i|^2 / |lambda_i - lambda_j|, summed class-wise in O(n^2).
double aakv_bound(int n, double horizon);

/// Smallest integer T with aakv_bound(n, T) <= epsilon.
long aakv_horizon(int n, double epsilon);

/// sum_{k=1}^{n-1} C(n,k)^2 + 4 sum_{k,k'} C(n,k) C(n,k'), exactly.
boost::multiprecision::cpp_int aakv_pair_count(int n);

}  // namespace qwalk
