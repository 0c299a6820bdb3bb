#include "qwalk/spectral.hpp"

#include <algorithm>
#include <numbers>

namespace qwalk {

namespace {

void require_block(int n, int k) {
  if (n < 1) throw DomainError("dimension must be positive");
  if (k < 0 || k > n) {
    throw DomainError("weight k=" + std::to_string(k) + " outside 0.." + std::to_string(n));
  }
}

}  // namespace

SymmetricCoin<double> grover_coin(int n) {
  if (n < 1) throw DomainError("grover_coin: n must be positive");
  return {n, {2.0 / n - 1.0, 0.0}, {2.0 / n, 0.0}};
}

SymmetricCoin<double> coin_family(int n, double mod_a, double phase_a) {
  constexpr double slack = 1e-12;
  if (n < 1) throw DomainError("coin_family: n must be positive");
  const double lower = (n == 1) ? 1.0 : 1.0 - 2.0 / n;
  if (!(mod_a >= lower - slack && mod_a <= 1.0 + slack)) {
    throw DomainError("coin_family: no unitary solution for |a|=" + std::to_string(mod_a) +
                      " (need " + std::to_string(lower) + " <= |a| <= 1)");
  }
  mod_a = std::clamp(mod_a, std::max(lower, 0.0), 1.0);
  const std::complex<double> a = std::polar(mod_a, phase_a);
  if (n == 1) return {n, a, {0.0, 0.0}};

  // |a|^2 + (n-1)|b|^2 = 1 fixes |b|; |a - b|^2 = 1 fixes the relative phase.
  const double mod_b = std::sqrt(std::max(0.0, (1.0 - mod_a * mod_a) / (n - 1)));
  if (mod_b == 0.0) return {n, a, {0.0, 0.0}};
  double relative = std::numbers::pi / 2;
  if (mod_a > 0.0) {
    const double cos_rel = (mod_a * mod_a + mod_b * mod_b - 1.0) / (2.0 * mod_a * mod_b);
    relative = std::acos(std::clamp(cos_rel, -1.0, 1.0));
  }
  return {n, a, std::polar(mod_b, phase_a + relative)};
}

double distance_to_diagonal(const SymmetricCoin<double>& coin) {
  return 2.0 * coin.n * (1.0 - std::abs(coin.diagonal));
}

double block_phase(int n, int k) {
  require_block(n, k);
  return std::atan2(2.0 * std::sqrt(static_cast<double>(k) * (n - k)), static_cast<double>(n - 2 * k));
}

BlockRotation block_rotation(int n, int k, long t) {
  require_block(n, k);
  if (k == 0) return {1.0, 0.0};
  if (k == n) return {(t % 2 == 0) ? 1.0 : -1.0, 0.0};
  const double angle = block_phase(n, k) * static_cast<double>(t);
  return {std::cos(angle), std::sin(angle)};
}

SpectralBlock spectral_block(int n, int k) {
  require_block(n, k);
  return {n, k, block_phase(n, k), std::max(k - 1, 0), std::max(n - k - 1, 0)};
}

Amplitude nontrivial_amplitude(int n, int k) {
  require_block(n, k);
  const double scale = std::exp(0.5 * log_nontrivial_weight(n));
  const double frac = static_cast<double>(k) / n;
  return scale * Amplitude(std::sqrt(frac), -std::sqrt(1.0 - frac));
}

double log_nontrivial_weight(int n) { return -(n + 1) * std::numbers::ln2; }

Eigen::VectorXcd nontrivial_eigenvector(int n, int k, int sign) {
  require_block(n, k);
  if (k == 0 || k == n) throw DomainError("nontrivial_eigenvector: requires 0 < k < n");
  const double r = 1.0 / std::numbers::sqrt2;
  Eigen::VectorXcd v(n);
  v.head(n - k).setConstant(Amplitude(0.0, -sign * r / std::sqrt(static_cast<double>(n - k))));
  v.tail(k).setConstant(Amplitude(r / std::sqrt(static_cast<double>(k)), 0.0));
  return v;
}

BlockPower block_power(int n, int k, long t) {
  require_block(n, k);
  if (t < 0) throw DomainError("block_power: t must be non-negative");
  const BlockRotation rot = block_rotation(n, k, t);
  const double parity = (t % 2 == 0) ? 1.0 : -1.0;
  BlockPower p{n, k, t, std::nullopt, std::nullopt, std::nullopt};
  if (k < n) p.a_entry = (rot.cos - parity) / (n - k);
  if (k > 0) p.b_entry = (rot.cos - 1.0) / k;
  if (k > 0 && k < n) p.c_entry = rot.sin / std::sqrt(static_cast<double>(k) * (n - k));
  return p;
}

Eigen::MatrixXd BlockPower::matrix() const {
  const int top = n - k;
  Eigen::MatrixXd m = Eigen::MatrixXd::Zero(n, n);
  if (a_entry) {
    m.topLeftCorner(top, top).setConstant(*a_entry);
    m.topLeftCorner(top, top).diagonal().array() += top_diagonal_shift();
  }
  if (b_entry) {
    m.bottomRightCorner(k, k).setConstant(*b_entry);
    m.bottomRightCorner(k, k).diagonal().array() += bottom_diagonal_shift();
  }
  if (c_entry) {
    m.topRightCorner(top, k).setConstant(*c_entry);
    m.bottomLeftCorner(k, top).setConstant(-*c_entry);
  }
  return m;
}

}  // namespace qwalk
