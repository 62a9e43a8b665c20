#include <doctest.h>

#include <narranet/rng.hpp>

#include <cmath>
#include <cstdint>
#include <vector>

using namespace narranet;

// Seeded distributional checks. Tolerances are wide multiples of the standard
// error at the chosen sample sizes, so a correct sampler fails with
// negligible probability, and the fixed seeds make every run identical.

TEST_CASE("uniform01 has the right first two moments") {
  RandomStream rng(1001);
  const int n = 200000;
  double sum = 0.0;
  double sum_sq = 0.0;
  for (int i = 0; i < n; ++i) {
    const double u = rng.uniform01();
    sum += u;
    sum_sq += u * u;
  }
  const double mean = sum / n;
  const double var = sum_sq / n - mean * mean;
  // se(mean) ~ 0.00065; se(var) of U(0,1) is of the same order.
  CHECK(mean == doctest::Approx(0.5).epsilon(0.01));
  CHECK(var == doctest::Approx(1.0 / 12.0).epsilon(0.03));
}

TEST_CASE("uniform_below is uniform across residue classes") {
  RandomStream rng(1002);
  const std::uint64_t k = 7;
  const int n = 140000;
  std::vector<int> counts(k, 0);
  for (int i = 0; i < n; ++i) ++counts[rng.uniform_below(k)];
  const double expected = static_cast<double>(n) / static_cast<double>(k);
  double chi_sq = 0.0;
  for (int c : counts) {
    const double d = c - expected;
    chi_sq += d * d / expected;
  }
  // chi-square with 6 dof: mean 6, far tail starts ~22 (p ~ 0.001).
  CHECK(chi_sq < 30.0);
}

TEST_CASE("bernoulli frequency tracks p") {
  RandomStream rng(1003);
  for (double p : {0.1, 0.3, 0.71}) {
    const int n = 100000;
    int hits = 0;
    for (int i = 0; i < n; ++i) {
      if (rng.bernoulli(p)) ++hits;
    }
    const double se = std::sqrt(p * (1 - p) / n);
    CHECK(std::abs(static_cast<double>(hits) / n - p) < 5 * se);
  }
}

TEST_CASE("poisson draws have matching mean and dispersion") {
  RandomStream rng(1004);
  // Covers the inversion path (lambda <= 30) and the chunked path above it.
  for (double lambda : {0.0093, 0.71, 5.0, 29.9, 31.0, 81.0, 400.0}) {
    CAPTURE(lambda);
    const int n = 200000;
    double sum = 0.0;
    double sum_sq = 0.0;
    for (int i = 0; i < n; ++i) {
      const auto v = static_cast<double>(rng.poisson(lambda));
      sum += v;
      sum_sq += v * v;
    }
    const double mean = sum / n;
    const double var = sum_sq / n - mean * mean;
    // se(mean) = sqrt(lambda/n); allow 5 standard errors.
    CHECK(std::abs(mean - lambda) < 5 * std::sqrt(lambda / n));
    // Poisson index of dispersion is 1.
    CHECK(var / mean == doctest::Approx(1.0).epsilon(0.03));
  }
}

TEST_CASE("poisson tail probabilities are sane at small rates") {
  RandomStream rng(1005);
  const double lambda = 0.71;
  const int n = 200000;
  std::vector<int> counts(8, 0);
  for (int i = 0; i < n; ++i) {
    const std::uint64_t v = rng.poisson(lambda);
    ++counts[std::min<std::uint64_t>(v, counts.size() - 1)];
  }
  const double p0 = std::exp(-lambda);
  const double p1 = lambda * p0;
  const double se0 = std::sqrt(p0 * (1 - p0) / n);
  const double se1 = std::sqrt(p1 * (1 - p1) / n);
  CHECK(std::abs(counts[0] / static_cast<double>(n) - p0) < 5 * se0);
  CHECK(std::abs(counts[1] / static_cast<double>(n) - p1) < 5 * se1);
}

TEST_CASE("sibling child streams look independent") {
  // Correlation between adjacent child streams of one base must vanish.
  const int n = 20000;
  double sum_xy = 0.0, sum_x = 0.0, sum_y = 0.0, sum_xx = 0.0, sum_yy = 0.0;
  for (int k = 0; k < n; ++k) {
    RandomStream a = RandomStream::child(555, static_cast<std::uint64_t>(k));
    RandomStream b = RandomStream::child(555, static_cast<std::uint64_t>(k) + 1);
    const double x = a.uniform01();
    const double y = b.uniform01();
    sum_x += x;
    sum_y += y;
    sum_xy += x * y;
    sum_xx += x * x;
    sum_yy += y * y;
  }
  const double cov = sum_xy / n - (sum_x / n) * (sum_y / n);
  const double vx = sum_xx / n - (sum_x / n) * (sum_x / n);
  const double vy = sum_yy / n - (sum_y / n) * (sum_y / n);
  const double corr = cov / std::sqrt(vx * vy);
  CHECK(std::abs(corr) < 0.03);  // se ~ 1/sqrt(n) ~ 0.007
}
