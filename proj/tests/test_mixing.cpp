#include <catch2/catch_amalgamated.hpp>

#include <bit>
#include <cmath>
#include <complex>
#include <numbers>
#include <random>

#include <boost/math/quadrature/gauss_kronrod.hpp>

#include "qwalk/discrete.hpp"
#include "qwalk/mixing.hpp"
#include "qwalk/oracle.hpp"
#include "support.hpp"

using namespace qwalk;
using Catch::Approx;
using boost::multiprecision::cpp_int;
using std::numbers::pi;

namespace {

double quadrature_average(int n, int k, double horizon) {
  const auto f = [&](double t) { return std::pow(std::cos(2.0 * t / n), k); };
  return boost::math::quadrature::gauss_kronrod<double, 61>::integrate(f, 0.0, horizon, 30, 1e-13) / horizon;
}

// TV of a per-vertex distribution against the parity-matched uniform one.
double oracle_parity_tv(int n, const Eigen::VectorXd& p, long t) {
  double acc = 0.0;
  const double level = std::ldexp(1.0, -(n - 1));
  for (Eigen::Index v = 0; v < p.size(); ++v) {
    const bool matches = std::popcount(static_cast<std::uint64_t>(v)) % 2 == t % 2;
    acc += std::abs(p[v] - (matches ? level : 0.0));
  }
  return 0.5 * acc;
}

// (2/T) sum over every ordered pair of non-trivial eigenvectors (one per
// wave vector and sign) whose eigenvalues differ numerically.
double aakv_enumerated(int n, double horizon) {
  std::vector<std::complex<double>> lambda;
  for (std::uint64_t m = 0; m < (std::uint64_t{1} << n); ++m) {
    const double omega = std::acos(1.0 - 2.0 * std::popcount(m) / n);
    lambda.push_back(std::polar(1.0, omega));
    lambda.push_back(std::polar(1.0, -omega));
  }
  const double weight = std::ldexp(1.0, -(n + 1));
  CompensatedSum<double> acc;
  for (const auto& li : lambda) {
    for (const auto& lj : lambda) {
      const double gap = std::abs(li - lj);
      if (gap > 1e-9) acc.add(weight / gap);
    }
  }
  return 2.0 / horizon * acc.value();
}

cpp_int pair_count_reference(int n) {
  cpp_int total = 0;
  for (int k = 1; k < n; ++k) total += testing::exact_binomial(n, k) * testing::exact_binomial(n, k);
  cpp_int row = 0;
  for (int k = 0; k <= n; ++k) row += testing::exact_binomial(n, k);
  return total + 4 * row * row;
}

}  // namespace

TEST_CASE("continuous scan finds the exact uniformity time") {
  const MixingScanResult r = instantaneous_scan(Walk::continuous, 32, TimeGrid::continuous(32, 0.0, 32.0, 512.0));
  CHECK(r.argmin_t == Approx(8.0 * pi).epsilon(1e-15));
  CHECK(r.min_tv <= 1e-12);
}

TEST_CASE("discrete scan minimum lies near (pi/4) n") {
  const MixingScanResult r = instantaneous_scan(Walk::discrete, 50, TimeGrid::integers(1, 120));
  CHECK(std::abs(r.argmin_t - 40.0) <= 3.0);
  CHECK(windowed_argmin(r, 40.0, 5.0) == r.argmin_t);
}

TEST_CASE("discrete scan matches the full oracle") {
  const int n = 4;
  const MixingScanResult r = instantaneous_scan(Walk::discrete, n, TimeGrid::integers(1, 50));
  oracle::DiscreteState s = oracle::discrete_initial(n);
  for (long t = 1; t <= 50; ++t) {
    s = oracle::discrete_step(s);
    REQUIRE(std::abs(r.tv[static_cast<std::size_t>(t - 1)] - oracle_parity_tv(n, oracle::discrete_probabilities(s), t)) <=
            1e-10);
  }
}

TEST_CASE("scan bookkeeping") {
  const MixingScanResult r = instantaneous_scan(Walk::discrete, 20, TimeGrid::integers(0, 60), 0.3);
  REQUIRE(r.tv.size() == 61);
  const auto best = std::min_element(r.tv.begin(), r.tv.end());
  CHECK(r.min_tv == *best);
  CHECK(r.argmin_t == static_cast<double>(best - r.tv.begin()));
  REQUIRE(r.first_epsilon_time.has_value());
  const auto first = static_cast<std::size_t>(*r.first_epsilon_time);
  CHECK(r.tv[first] <= 0.3);
  for (std::size_t i = 0; i < first; ++i) CHECK(r.tv[i] > 0.3);

  const MixingScanResult none = instantaneous_scan(Walk::discrete, 20, TimeGrid::integers(0, 5), 1e-6);
  CHECK_FALSE(none.first_epsilon_time.has_value());
}

TEST_CASE("scans reject empty or non-integer grids") {
  CHECK_THROWS_AS(instantaneous_scan(Walk::discrete, 5, TimeGrid{}), DomainError);
  CHECK_THROWS_AS(TimeGrid::integers(5, 4), DomainError);
  CHECK_THROWS_AS(instantaneous_scan(Walk::discrete, 5, TimeGrid{{1.5}}), DomainError);
}

TEST_CASE("continuous grids contain the odd multiples of (pi/4) n") {
  const TimeGrid g = TimeGrid::continuous(64, 0.0, 3.0 * 64, 1024.0);
  CHECK(g.times.size() == 3072);
  for (int m : {1, 3}) {
    CHECK(std::find(g.times.begin(), g.times.end(), pi / 4.0 * 64 * m) != g.times.end());
  }
  CHECK(TimeGrid::continuous(1, 0.0, 1.0, 512.0, 1024).times.size() == 1024);
}

TEST_CASE("average_distribution_discrete examples") {
  const AverageDistribution one = average_distribution_discrete(6, 1);
  CHECK(one.mass.mass(0) == Approx(1.0).epsilon(1e-15));

  const std::vector<AverageDistribution> eight = average_distribution_discrete(8, std::vector<long>{1000, 10000});
  CHECK(tv_distance(eight[1].mass, FullUniform{8}) <= tv_distance(eight[0].mass, FullUniform{8}));

  oracle::DiscreteState s = oracle::discrete_initial(4);
  Eigen::VectorXd sum = Eigen::VectorXd::Zero(16);
  for (int t = 0; t < 100; ++t) {
    sum += oracle::discrete_probabilities(s);
    s = oracle::discrete_step(s);
  }
  const WeightDistribution brute = oracle::collapse_by_weight(4, sum / 100.0);
  CHECK(tv_distance(average_distribution_discrete(4, 100).mass, brute) <= 1e-10);
}

TEST_CASE("multi-horizon averages equal single-horizon averages") {
  const std::vector<AverageDistribution> many = average_distribution_discrete(9, std::vector<long>{1, 7, 50, 333});
  for (const AverageDistribution& a : many) {
    const AverageDistribution single = average_distribution_discrete(9, static_cast<long>(a.horizon));
    CHECK((a.mass.mass() - single.mass.mass()).cwiseAbs().maxCoeff() <= 1e-14);
  }
}

TEST_CASE("discrete averages approach their limit without increasing at decade horizons") {
  for (int n : {4, 8, 12}) {
    const std::vector<AverageDistribution> avg = average_distribution_discrete(n, std::vector<long>{100, 1000, 10000});
    const double a = tv_distance(avg[0].mass, FullUniform{n});
    const double b = tv_distance(avg[1].mass, FullUniform{n});
    const double c = tv_distance(avg[2].mass, FullUniform{n});
    INFO("n=" << n << " " << a << " " << b << " " << c);
    CHECK(b <= a);
    CHECK(c <= b);
  }
}

TEST_CASE("continuous averages of the distribution match the coefficient average") {
  const int n = 6;
  for (double T : {1.0, 5.5, 17.0}) {
    const AverageDistribution avg = average_distribution_continuous(n, T);
    CHECK(std::abs(avg.mass.total() - 1.0) <= 1e-9);
    // Weight-2 Walsh coefficient of a weight-symmetric distribution.
    double coefficient = 0.0;
    for (int x = 0; x <= n; ++x) {
      double krawtchouk = 0.0;
      for (int i = 0; i <= std::min(2, x); ++i) {
        const double ways = static_cast<double>(testing::exact_binomial(x, i)) *
                            static_cast<double>(testing::exact_binomial(n - x, 2 - i));
        krawtchouk += (i % 2 ? -1.0 : 1.0) * ways;
      }
      coefficient += avg.mass.mass(x) * krawtchouk / static_cast<double>(testing::exact_binomial(n, 2));
    }
    CHECK(coefficient == Approx(average_coefficient_continuous(n, 2, T)).margin(1e-10));
  }
}

TEST_CASE("average_coefficient_continuous examples") {
  CHECK(average_coefficient_continuous(9, 0, 3.0) == 1.0);
  CHECK(std::abs(average_coefficient_continuous(50, 2, 1.12335 * 50) - 0.39138) <= 1e-4);
  CHECK(std::abs(average_coefficient_continuous(10, 4, 7.3) - quadrature_average(10, 4, 7.3)) <= 1e-9);
  CHECK_THROWS_AS(average_coefficient_continuous(10, 2, 0.0), DomainError);
  CHECK_THROWS_AS(average_coefficient_continuous(10, 2, -1.0), DomainError);
}

TEST_CASE("averaged coefficient recurrence agrees with quadrature") {
  for (int k = 0; k <= 9; ++k) {
    for (double tn : {0.05, 0.9, 3.3, 12.0}) {
      const int n = 14;
      INFO("k=" << k << " T/n=" << tn);
      CHECK(std::abs(average_coefficient_continuous(n, k, tn * n) - quadrature_average(n, k, tn * n)) <= 1e-10);
    }
  }
}

TEST_CASE("k = 2 average has the closed form and its global minimum") {
  const int n = 40;
  double lowest = 1.0;
  for (int i = 1; i <= 200'000; ++i) {
    const double T = 20.0 * n * i / 200'000.0;
    const double value = average_coefficient_continuous(n, 2, T);
    const double closed = 0.5 + std::sin(4.0 * T / n) / (8.0 * T / n);
    REQUIRE(std::abs(value - closed) <= 1e-12);
    lowest = std::min(lowest, value);
    REQUIRE(tv_lower_bound_from_coefficient(n, value) >= 0.1956);
  }
  CHECK(std::abs(lowest - 0.39138) <= 1e-4);
}

TEST_CASE("limiting_coefficient examples") {
  CHECK(limiting_coefficient(1) == 0.0);
  CHECK(limiting_coefficient(2) == 0.5);
  CHECK(limiting_coefficient(6) == Approx(20.0 / 64.0).epsilon(1e-15));
  for (int k = 0; k <= 20; k += 2) {
    const double gamma_form = std::ldexp(pi, k) / (std::pow(std::tgamma(0.5 - k / 2.0), 2) * std::tgamma(k + 1.0));
    const auto f = [k](double x) { return std::pow(std::cos(x), k); };
    const double quad = boost::math::quadrature::gauss_kronrod<double, 61>::integrate(f, 0.0, pi, 15, 1e-14) / pi;
    INFO("k=" << k);
    CHECK(limiting_coefficient(k) == Approx(gamma_form).epsilon(1e-12));
    CHECK(limiting_coefficient(k) == Approx(quad).epsilon(1e-12));
  }
}

TEST_CASE("averaged coefficients converge to the limiting values") {
  const int n = 10;
  for (int k = 0; k <= 8; ++k) {
    // Exact at multiples of (pi/2) n.
    CHECK(std::abs(average_coefficient_continuous(n, k, 400 * pi / 2 * n) - limiting_coefficient(k)) <= 1e-12);
    // Elsewhere the remainder is a partial-period integral over 2T/n, at most n/(2T).
    CHECK(std::abs(average_coefficient_continuous(n, k, 1e4 * n) - limiting_coefficient(k)) <= 1.0 / (2.0 * 1e4));
  }
}

TEST_CASE("tv_lower_bound_from_coefficient examples") {
  CHECK(tv_lower_bound_from_coefficient(5, 0.0) == 0.0);
  CHECK(tv_lower_bound_from_coefficient(5, 0.39138) == Approx(0.19569));
  CHECK(tv_lower_bound_from_coefficient(5, -0.4) == Approx(0.2));
}

TEST_CASE("every Walsh coefficient bounds the distance to uniform (n = 8)") {
  std::mt19937_64 rng(2718);
  std::exponential_distribution<double> draw(1.0);
  for (int trial = 0; trial < 40; ++trial) {
    Eigen::VectorXd p(256);
    for (Eigen::Index v = 0; v < 256; ++v) p[v] = draw(rng);
    p /= p.sum();
    const double tv = 0.5 * (p.array() - 1.0 / 256.0).abs().sum();
    const oracle::WalshSpectrum w = oracle::walsh_transform(p);
    for (Eigen::Index m = 1; m < 256; ++m) REQUIRE(tv_lower_bound_from_coefficient(8, w.coefficients[m]) <= tv + 1e-15);
  }
}

TEST_CASE("aakv_bound scales as 1/T") {
  for (int n : {2, 7, 15}) {
    CHECK(aakv_bound(n, 2.0 * 37.0) == Approx(aakv_bound(n, 37.0) / 2.0).epsilon(1e-15));
    CHECK(aakv_bound(n, 1.0) == Approx(aakv_constant(n)).epsilon(1e-15));
  }
  CHECK_THROWS_AS(aakv_bound(5, 0.5), DomainError);
}

TEST_CASE("class-wise AAKV sum equals explicit eigenvector enumeration") {
  for (int n : {2, 3, 6, 10}) {
    INFO("n=" << n);
    CHECK(std::abs(aakv_bound(n, 1.0) - aakv_enumerated(n, 1.0)) <= 1e-9 * aakv_enumerated(n, 1.0));
  }
}

TEST_CASE("aakv_horizon is the smallest admissible horizon") {
  for (int n : {4, 8, 12}) {
    const long h = aakv_horizon(n, 0.01);
    CHECK(aakv_bound(n, static_cast<double>(h)) <= 0.01);
    CHECK(aakv_bound(n, static_cast<double>(h - 1)) > 0.01);
  }
}

TEST_CASE("aakv_bound dominates the distance to the long-run average") {
  for (int n = 2; n <= 8; ++n) {
    const std::vector<AverageDistribution> avg =
        average_distribution_discrete(n, std::vector<long>{10, 100, 1000, 10000, 1'000'000});
    for (std::size_t i = 0; i + 1 < avg.size(); ++i) {
      const double tv = tv_distance(avg[i].mass, avg.back().mass);
      INFO("n=" << n << " T=" << avg[i].horizon);
      CHECK(aakv_bound(n, avg[i].horizon) + 1e-3 >= tv);
    }
  }
}

TEST_CASE("aakv_pair_count examples") {
  CHECK(aakv_pair_count(1) == 16);
  CHECK(aakv_pair_count(2) == 68);
  for (int n = 1; n <= 20; ++n) CHECK(aakv_pair_count(n) == pair_count_reference(n));
  for (int n = 4; n <= 20; ++n) CHECK(aakv_pair_count(n) >= cpp_int(1) << (2 * n));
}
