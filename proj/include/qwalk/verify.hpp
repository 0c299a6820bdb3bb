#pragma once

#include <string>
#include <vector>

namespace qwalk {

struct CheckResult {
  std::string name;
  bool passed;
  double max_error;
  double tolerance;
};

/// Collapsed amplitudes of the discrete walk against the full state vector,
/// every basis state checked against its symmetry class, for t = 0..t_max.
CheckResult check_discrete_amplitudes(int n, long t_max);

/// TV between collapsed and brute-force distributions, t = 0..t_max.
CheckResult check_discrete_distribution(int n, long t_max);

/// Largest per-step drift of the collapsed norm.
CheckResult check_discrete_norm(int n, long t_max);

/// Closed-form Fourier coefficients of the discrete walk against the Walsh
/// spectrum of the brute-force distribution, every wave vector, t = 0..t_max.
CheckResult check_discrete_fourier(int n, long t_max);

/// Product-form wave against RK4 integration of the Schrodinger equation
/// at `samples` times spread over [0, t_end].
CheckResult check_continuous_distribution(int n, double t_end, int samples, double dt = 0.0);

/// cos^k(2t/n) against the Walsh spectrum of the RK4 distribution.
CheckResult check_continuous_fourier(int n, double t_end, int samples, double dt = 0.0);

/// All applicable checks. Throws ResourceError above the discrete oracle cap;
/// continuous checks are skipped above the continuous cap.
std::vector<CheckResult> run_verification(int n, long t_max);

}  // namespace qwalk
