#include "qwalk/oracle.hpp"

#include <bit>
#include <cmath>
#include <string>
#include <vector>

namespace qwalk::oracle {

namespace {

void require_cap(int n, int cap, const char* what) {
  if (n < 1) throw DomainError(std::string(what) + ": n must be positive");
  if (n > cap) {
    throw ResourceError(std::string(what) + ": n=" + std::to_string(n) + " exceeds the oracle cap of " +
                        std::to_string(cap));
  }
}

// y = i H x with H(x, y) = 1/n on hypercube edges.
void apply_generator(int n, const Eigen::VectorXcd& x, Eigen::VectorXcd& y) {
  const Eigen::Index size = x.size();
  const Amplitude scale(0.0, 1.0 / n);
  for (Eigen::Index v = 0; v < size; ++v) {
    Amplitude acc = 0.0;
    for (int j = 0; j < n; ++j) acc += x[v ^ (Eigen::Index{1} << j)];
    y[v] = scale * acc;
  }
}

}  // namespace

DiscreteState discrete_initial(int n) {
  require_cap(n, kMaxDiscreteDimension, "oracle discrete walk");
  DiscreteState s{n, 0, Eigen::VectorXcd::Zero((Eigen::Index{1} << n) * n)};
  s.amp.head(n).setConstant(1.0 / std::sqrt(static_cast<double>(n)));
  return s;
}

DiscreteState discrete_step(const DiscreteState& s) {
  const int n = s.n;
  require_cap(n, kMaxDiscreteDimension, "oracle discrete walk");
  const Eigen::Index vertices = Eigen::Index{1} << n;
  DiscreteState next{n, s.t + 1, Eigen::VectorXcd::Zero(s.amp.size())};
  Eigen::VectorXcd block(n);
  for (Eigen::Index v = 0; v < vertices; ++v) {
    const auto in = s.amp.segment(v * n, n);
    const Amplitude total = in.sum();
    block = (2.0 / n) * total * Eigen::VectorXcd::Ones(n) - in;
    for (int j = 0; j < n; ++j) next.amp[(v ^ (Eigen::Index{1} << j)) * n + j] = block[j];
  }
  return next;
}

Eigen::VectorXd discrete_probabilities(const DiscreteState& s) {
  const Eigen::Index vertices = Eigen::Index{1} << s.n;
  Eigen::VectorXd p(vertices);
  for (Eigen::Index v = 0; v < vertices; ++v) p[v] = s.amp.segment(v * s.n, s.n).squaredNorm();
  return p;
}

ContinuousState continuous_initial(int n) {
  require_cap(n, kMaxContinuousDimension, "oracle continuous walk");
  ContinuousState s{n, 0.0, Eigen::VectorXcd::Zero(Eigen::Index{1} << n)};
  s.amp[0] = 1.0;
  return s;
}

void continuous_advance(ContinuousState& s, double duration, double dt) {
  if (!(dt > 0.0)) throw DomainError("continuous_advance: dt must be positive");
  if (duration < 0.0) throw DomainError("continuous_advance: duration must be non-negative");
  if (duration == 0.0) return;
  const long steps = static_cast<long>(std::ceil(duration / dt));
  const double h = duration / static_cast<double>(steps);
  const Eigen::Index size = s.amp.size();
  Eigen::VectorXcd k1(size), k2(size), k3(size), k4(size), tmp(size);
  for (long i = 0; i < steps; ++i) {
    apply_generator(s.n, s.amp, k1);
    tmp = s.amp + (0.5 * h) * k1;
    apply_generator(s.n, tmp, k2);
    tmp = s.amp + (0.5 * h) * k2;
    apply_generator(s.n, tmp, k3);
    tmp = s.amp + h * k3;
    apply_generator(s.n, tmp, k4);
    s.amp += (h / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
  }
  s.t += duration;
}

ContinuousState continuous_evolve(int n, double t, double dt) {
  ContinuousState s = continuous_initial(n);
  continuous_advance(s, t, dt > 0.0 ? dt : 1e-3 * n);
  return s;
}

Eigen::VectorXd continuous_probabilities(const ContinuousState& s) { return s.amp.cwiseAbs2(); }

WalshSpectrum walsh_transform(const Eigen::VectorXd& p) {
  const auto size = static_cast<std::uint64_t>(p.size());
  if (size == 0 || !std::has_single_bit(size)) {
    throw DomainError("walsh_transform: length must be a power of two");
  }
  const int n = std::countr_zero(size);
  require_cap(n, kMaxDiscreteDimension, "walsh_transform");
  WalshSpectrum spectrum{n, p};
  walsh_butterfly(spectrum.coefficients);
  return spectrum;
}

WeightDistribution collapse_by_weight(int n, const Eigen::VectorXd& per_vertex) {
  if (per_vertex.size() != (Eigen::Index{1} << n)) {
    throw DomainError("collapse_by_weight: expected 2^n probabilities");
  }
  std::vector<CompensatedSum<double>> acc(static_cast<std::size_t>(n) + 1);
  for (Eigen::Index v = 0; v < per_vertex.size(); ++v) {
    acc[static_cast<std::size_t>(std::popcount(static_cast<std::uint64_t>(v)))].add(per_vertex[v]);
  }
  Eigen::VectorXd mass(n + 1);
  for (int x = 0; x <= n; ++x) mass[x] = acc[static_cast<std::size_t>(x)].value();
  return WeightDistribution(n, std::move(mass));
}

}  // namespace qwalk::oracle
