#pragma once

#include <cstdint>

#include <Eigen/Dense>

#include "qwalk/numerics.hpp"

// Brute-force reference dynamics over the full 2^n (x n) state space. Nothing
// here uses the Fourier eigenbasis; these are the ground truth for the
// closed forms elsewhere in the library.
namespace qwalk::oracle {

inline constexpr int kMaxDiscreteDimension = 14;
inline constexpr int kMaxContinuousDimension = 12;

/// Coined-walk state; amplitude of (vertex v, direction j) at index v * n + j.
struct DiscreteState {
  int n;
  long t;
  Eigen::VectorXcd amp;

  Amplitude at(std::uint32_t vertex, int direction) const {
    return amp[static_cast<Eigen::Index>(vertex) * n + direction];
  }
};

/// Walker at the origin in the uniform superposition of directions.
/// Throws ResourceError for n above the cap.
DiscreteState discrete_initial(int n);

/// Grover coin on each vertex's direction block, then v -> v xor e_j for direction j.
DiscreteState discrete_step(const DiscreteState& s);

/// P(v) = sum_j |psi(v, j)|^2 for every vertex.
Eigen::VectorXd discrete_probabilities(const DiscreteState& s);

/// Continuous-walk state over the 2^n vertices.
struct ContinuousState {
  int n;
  double t;
  Eigen::VectorXcd amp;
};

ContinuousState continuous_initial(int n);

/// Integrates d psi/dt = i H psi with classical RK4, H the adjacency matrix
/// scaled by 1/n. Uses the smallest uniform step count whose step does not
/// exceed `dt`.
void continuous_advance(ContinuousState& s, double duration, double dt);

/// Evolves the origin point mass to time t. dt <= 0 selects 1e-3 * n.
ContinuousState continuous_evolve(int n, double t, double dt = 0.0);

Eigen::VectorXd continuous_probabilities(const ContinuousState& s);

/// Walsh-Hadamard spectrum: coefficient[m] = sum_x (-1)^{popcount(m & x)} p[x].
struct WalshSpectrum {
  int n;
  Eigen::VectorXd coefficients;
};

WalshSpectrum walsh_transform(const Eigen::VectorXd& p);

/// In-place butterfly on any dense vector whose length is a power of two.
template <typename Derived>
void walsh_butterfly(Eigen::MatrixBase<Derived>& v) {
  const Eigen::Index size = v.size();
  for (Eigen::Index half = 1; half < size; half <<= 1) {
    for (Eigen::Index block = 0; block < size; block += 2 * half) {
      for (Eigen::Index i = block; i < block + half; ++i) {
        const auto a = v(i);
        const auto b = v(i + half);
        v(i) = a + b;
        v(i + half) = a - b;
      }
    }
  }
}

/// Aggregates per-vertex probabilities by Hamming weight.
WeightDistribution collapse_by_weight(int n, const Eigen::VectorXd& per_vertex);

}  // namespace qwalk::oracle
