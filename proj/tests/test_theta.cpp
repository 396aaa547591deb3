#include <gtest/gtest.h>

#include <random>

#include "ellrook/errors.hpp"
#include "ellrook/theta.hpp"

using namespace ellrook;
using Value = std::complex<double>;

namespace {

// Frozen from tests/oracles/generate_values.py (bilateral series, 40 digits).
const Value kTheta{-0.034416144549332469259, 0.31806202892201427103};
const Value kThetaLargeNome{0.43094142624372191897, 0.21667651368570818661};

// The triple-product series, summed directly in double precision.
Value theta_series(Value x, Value p) {
  Value sum(0);
  for (int n = -60; n <= 60; ++n) {
    const Value term = std::pow(p, 0.5 * n * (n - 1)) * std::pow(x, n);
    sum += (n % 2 == 0 ? 1.0 : -1.0) * term;
  }
  Value euler(1);
  Value pj = p;
  for (int j = 1; j < 400; ++j, pj *= p) euler *= 1.0 - pj;
  return sum / euler;
}

double eps() { return default_truncation_eps<double>(); }

Value th(Value x, Value p) { return theta(x, p, eps(), 4096); }

}  // namespace

TEST(Theta, FrozenReferenceValues) {
  EXPECT_LT(std::abs(th({1.2, -0.5}, {0.2, 0.1}) - kTheta), 1e-14);
  EXPECT_LT(std::abs(th({0.9, 0.6}, {0.85, 0.3}) - kThetaLargeNome), 1e-12);
}

TEST(Theta, MatchesSeriesAtRandomPoints) {
  std::mt19937_64 rng(11);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  for (int i = 0; i < 50; ++i) {
    const Value x = std::polar(0.5 + 1.5 * u(rng), 6.283 * u(rng));
    const Value p = std::polar(0.5 * u(rng), 6.283 * u(rng));
    // Integer powers of p keep the series on the principal branch.
    Value series(0);
    Value euler(1), pj = p;
    for (int j = 1; j < 200; ++j, pj *= p) euler *= 1.0 - pj;
    for (int n = -40; n <= 40; ++n) {
      const long long e = static_cast<long long>(n) * (n - 1) / 2;
      Value pe(1);
      for (long long t = 0; t < e; ++t) pe *= p;
      series += (n % 2 == 0 ? 1.0 : -1.0) * pe * std::pow(x, n);
    }
    series /= euler;
    EXPECT_LT(std::abs(th(x, p) - series), 1e-12 * std::max(1.0, std::abs(series)));
  }
}

TEST(Theta, RealNomeAgreesWithSeries) {
  const Value x{0.7, 0.4}, p{0.3, 0.0};
  EXPECT_LT(std::abs(th(x, p) - theta_series(x, p)), 1e-13);
}

TEST(Theta, ZeroNomeIsLinear) {
  for (Value x : {Value(0.3, 0.1), Value(-2.0, 0.5), Value(1.5, -1.5)})
    EXPECT_EQ(th(x, 0.0), 1.0 - x);
}

TEST(Theta, VanishesAtOne) { EXPECT_EQ(th(1.0, 0.3), Value(0)); }

TEST(Theta, QuasiPeriodAndInversion) {
  std::mt19937_64 rng(5);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  for (int i = 0; i < 100; ++i) {
    const Value x = std::polar(0.5 + 1.5 * u(rng), 6.283 * u(rng));
    const Value p = std::polar(0.5 * u(rng), 6.283 * u(rng));
    EXPECT_LT(std::abs(th(p * x, p) + th(x, p) / x), 1e-13);
    EXPECT_LT(std::abs(th(1.0 / x, p) + th(x, p) / x), 1e-13);
  }
}

TEST(Theta, QuadAgreesWithDouble) {
  const Value x{1.2, -0.5}, p{0.2, 0.1};
  const auto quad = theta(convert<Quad>(x), convert<Quad>(p), default_truncation_eps<Quad>(), 4096);
  EXPECT_LT(std::abs(convert<double>(quad) - kTheta), 1e-15);
}

TEST(Theta, RejectsZeroArgument) { EXPECT_THROW(th(0.0, 0.2), DomainError); }

TEST(Theta, TruncationBudget) {
  EXPECT_THROW(theta(Value(0.5), Value(0.95), 1e-15, 3), ConvergenceError);
}

TEST(EllipticParams, Validation) {
  EXPECT_NO_THROW(EllipticParams<double>::make(0.5, 1.5, 0.8, 0.95));
  EXPECT_THROW(EllipticParams<double>::make(0.5, 1.5, 0.8, 0.96), DomainError);
  EXPECT_THROW(EllipticParams<double>::make(0.0, 1.5, 0.8, 0.1), ValidationError);
  EXPECT_THROW(EllipticParams<double>::make(0.5, 1.5, 0.0, 0.1), ValidationError);
}

TEST(ShiftedFactorial, Conventions) {
  const auto params = EllipticParams<double>::make({0.7, 0.3}, {1.3, -0.4}, {0.8, 0.5}, {0.2, 0.1});
  const Value a0{1.1, 0.4};
  EXPECT_EQ(shifted_factorial(a0, 0, params), Value(1));
  EXPECT_LT(std::abs(shifted_factorial(a0, 1, params) - theta(a0, params)), 1e-15);
  EXPECT_LT(std::abs(shifted_factorial(a0, -1, params) - 1.0 / theta(a0 / params.q, params)),
            1e-14);
  // (a0)_{m+n} = (a0)_m (a0 q^m)_n, for negative n as well
  for (int m = 0; m <= 3; ++m)
    for (int n = -3; n <= 3; ++n) {
      const Value lhs = shifted_factorial(a0, m + n, params);
      const Value rhs = shifted_factorial(a0, m, params) *
                        shifted_factorial(a0 * std::pow(params.q, m), n, params);
      EXPECT_LT(std::abs(lhs - rhs), 1e-12 * std::max(1.0, std::abs(lhs))) << m << ',' << n;
    }
}

TEST(ShiftedFactorial, NegativeOrderPoleIsSingular) {
  const auto params = EllipticParams<double>::make(0.5, 1.5, 0.5, 0.0);
  // (a0; q)_{-1} = 1/theta(a0/q) and a0/q = 1 is a zero of theta.
  EXPECT_THROW(shifted_factorial(Value(0.5), -1, params), SingularError);
}
