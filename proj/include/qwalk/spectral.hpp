#pragma once

#include <complex>
#include <optional>

#include <Eigen/Dense>

#include "qwalk/numerics.hpp"

namespace qwalk {

/// A permutation-symmetric coin on n directions: D_ii = diagonal, D_ij = off_diagonal.
template <typename Scalar = double>
struct SymmetricCoin {
  using Complex = std::complex<Scalar>;
  using Matrix = Eigen::Matrix<Complex, Eigen::Dynamic, Eigen::Dynamic>;

  int n;
  Complex diagonal;
  Complex off_diagonal;

  Matrix matrix() const {
    Matrix d = Matrix::Constant(n, n, off_diagonal);
    d.diagonal().setConstant(diagonal);
    return d;
  }

  /// max |(D^dagger D - 1)_ij|
  Scalar unitarity_residual() const {
    const Matrix d = matrix();
    return (d.adjoint() * d - Matrix::Identity(n, n)).cwiseAbs().maxCoeff();
  }

  /// |a|^2 + (n-1)|b|^2 - 1
  Scalar row_norm_residual() const {
    return std::norm(diagonal) + (n - 1) * std::norm(off_diagonal) - Scalar(1);
  }

  /// |a - b|^2 - 1
  Scalar circle_residual() const { return std::norm(diagonal - off_diagonal) - Scalar(1); }
};

/// D_ij = 2/n - delta_ij.
SymmetricCoin<double> grover_coin(int n);

/// The member of the symmetric family with |a| = mod_a and arg(a) = phase_a.
/// Of the two admissible off-diagonal entries, returns the one whose phase
/// relative to a lies in [0, pi]. Throws DomainError when mod_a is outside
/// [1 - 2/n, 1] (no unitary solution).
SymmetricCoin<double> coin_family(int n, double mod_a, double phase_a);

/// min over |c| = 1 of Tr[(D - c)^dagger (D - c)] = 2n(1 - |a|), the squared
/// Frobenius distance to the scalar unitaries.
double distance_to_diagonal(const SymmetricCoin<double>& coin);

/// Eigen-data of the weight-k Fourier block U_k = S_k D of the Grover walk.
struct SpectralBlock {
  int n;
  int k;
  double omega;     // cos(omega) = 1 - 2k/n, omega in [0, pi]
  int mult_plus;    // multiplicity of eigenvalue +1
  int mult_minus;   // multiplicity of eigenvalue -1

  std::complex<double> eigenvalue(int sign = +1) const { return std::polar(1.0, sign * omega); }
  bool degenerate() const { return k == 0 || k == n; }
};

SpectralBlock spectral_block(int n, int k);

/// Non-trivial eigenphase omega_k with cos(omega_k) = 1 - 2k/n.
double block_phase(int n, int k);

/// (cos omega_k t, sin omega_k t), exact at the degenerate endpoints k = 0, n.
struct BlockRotation {
  double cos;
  double sin;
};
BlockRotation block_rotation(int n, int k, long t);

/// Overlap <Psi_0 | v_k> of the uniform initial state with the non-trivial
/// eigenvector of eigenvalue e^{i omega_k}. Underflows to zero for n beyond
/// ~2000; use log_nontrivial_weight for the modulus in that regime.
Amplitude nontrivial_amplitude(int n, int k);

/// ln |a_k|^2 = -(n+1) ln 2, independent of k.
double log_nontrivial_weight(int n);

/// Non-trivial eigenvector of U_k on the direction space with eigenvalue
/// e^{i sign omega_k}, unflipped directions first. Requires 0 < k < n.
Eigen::VectorXcd nontrivial_eigenvector(int n, int k, int sign = +1);

/// Closed form of U_k^t. In direction order (unflipped, flipped):
///   top block      a + (-1)^t delta_ij
///   bottom block   b + delta_ij
///   top-right      c,  bottom-left  -c
/// Entries whose denominators vanish (k = 0 or k = n) are absent.
struct BlockPower {
  int n;
  int k;
  long t;
  std::optional<double> a_entry;
  std::optional<double> b_entry;
  std::optional<double> c_entry;

  double top_diagonal_shift() const { return (t % 2 == 0) ? 1.0 : -1.0; }
  static constexpr double bottom_diagonal_shift() { return 1.0; }

  /// Dense n x n reconstruction.
  Eigen::MatrixXd matrix() const;
};

BlockPower block_power(int n, int k, long t);

}  // namespace qwalk
