#include <gtest/gtest.h>

#include <algorithm>
#include <vector>

#include "ellrook/errors.hpp"
#include "ellrook/sampling.hpp"
#include "ellrook/weights.hpp"

using namespace ellrook;
using Value = std::complex<double>;
using Engine = WeightEngine<double>;

namespace {

// Frozen from tests/oracles/generate_values.py at
// a = 0.7+0.3i, b = 1.3-0.4i, q = 0.8+0.5i, p = 0.2+0.1i.
const Value kWm3{-0.081647891820502852609, -0.00089501403791715246882};
const Value kW2{0.0024432414059688906995, -0.024410491725205794138};
const Value kW5{-0.00007163601545089034171, 0.000056737153791222406764};
const Value kw2{0.089858922438572047781, -0.10519385537406502301};
const Value kNumberm2{1.0570909932728153095, -0.1192573074417168476};
const Value kNumber3{1.1480715817869844882, -0.12558336251068587157};
const Value kNumber7{1.1450631443783130157, -0.12786468991733171425};
const Value kBinom63{-9.1895894699913142396, 14.942958252903405285};
const Value kBinom52{2.008749524990987583, 0.79194888123924910943};

Engine reference() {
  return Engine::elliptic(EllipticParams<double>::make({0.7, 0.3}, {1.3, -0.4}, {0.8, 0.5}, {0.2, 0.1}));
}

double rel(Value x, Value y) { return relative_residual(x, y); }

std::vector<Engine> sampled_engines(int count, std::uint64_t seed) {
  std::vector<Engine> out;
  ParamSampler s(seed);
  while (static_cast<int>(out.size()) < count) {
    try {
      out.push_back(make_engine<double>(EngineKind::Elliptic, s.draw(EngineKind::Elliptic)));
      out.back().big_weight(3);
    } catch (const SingularError&) {
      out.pop_back();
    }
  }
  return out;
}

}  // namespace

TEST(Weights, FrozenReferenceValues) {
  const Engine e = reference();
  EXPECT_LT(rel(e.big_weight(-3), kWm3), 1e-13);
  EXPECT_LT(rel(e.big_weight(2), kW2), 1e-13);
  EXPECT_LT(std::abs(e.big_weight(5) - kW5), 1e-15);
  EXPECT_LT(rel(e.small_weight(2), kw2), 1e-13);
  EXPECT_LT(rel(e.number(-2), kNumberm2), 1e-13);
  EXPECT_LT(rel(e.number(3), kNumber3), 1e-13);
  EXPECT_LT(rel(e.number(7), kNumber7), 1e-13);
  EXPECT_LT(rel(ell_binomial(e, 6, 3), kBinom63), 1e-12);
  EXPECT_LT(rel(ell_binomial(e, 5, 2), kBinom52), 1e-12);
}

TEST(Weights, BasicValues) {
  for (const Engine& e : sampled_engines(5, 1)) {
    EXPECT_LT(std::abs(e.big_weight(0) - 1.0), 1e-14);
    EXPECT_LT(std::abs(e.number(1) - 1.0), 1e-14);
    EXPECT_EQ(e.number(0), Value(0));
  }
}

TEST(Weights, SmallWeightIsRatioOfBigWeights) {
  for (const Engine& e : sampled_engines(10, 2))
    for (int k = -2; k <= 3; ++k)
      EXPECT_LT(rel(e.small_weight(k), e.big_weight(k) / e.big_weight(k - 1)), 1e-11);
}

TEST(Weights, AdditiveShiftLaw) {
  for (const Engine& e : sampled_engines(10, 3))
    for (int k = -2; k <= 2; ++k)
      for (int n = -2; n <= 2; ++n)
        EXPECT_LT(rel(e.big_weight(k + n), e.big_weight(k) * e.shifted(2 * k, k).big_weight(n)),
                  1e-11);
}

TEST(Weights, NumberIsSumOfWeights) {
  for (const Engine& e : sampled_engines(10, 4))
    for (int z = 1; z <= 6; ++z) {
      Value sum(0);
      for (int j = 0; j < z; ++j) sum += e.big_weight(j);
      EXPECT_LT(rel(e.number(z), sum), 1e-11);
    }
}

TEST(Weights, QEngine) {
  const Value q{0.6, 0.3};
  const Engine e = Engine::q_only(q);
  for (int k = -3; k <= 4; ++k) {
    EXPECT_LT(std::abs(e.small_weight(k) - q), 1e-15);
    EXPECT_LT(rel(e.big_weight(k), std::pow(q, k)), 1e-14);
  }
  EXPECT_EQ(Engine::q_only(0.5).number(3), Value(1.75));
}

TEST(Weights, ClassicalEngine) {
  const Engine e = Engine::classical();
  for (int k = -3; k <= 4; ++k) {
    EXPECT_EQ(e.small_weight(k), Value(1));
    EXPECT_EQ(e.big_weight(k), Value(1));
    EXPECT_EQ(e.number(k), Value(k));
  }
}

TEST(Weights, AQClosedForm) {
  const Value a{0.7, 0.3}, q{0.9, -0.2};
  const Engine e = Engine::aq(a, q);
  for (int k = -3; k <= 4; ++k) {
    const Value expected = (1.0 - a * std::pow(q, 1 + 2 * k)) / (1.0 - a * q) * std::pow(q, -k);
    EXPECT_LT(rel(e.big_weight(k), expected), 1e-13);
  }
  for (int z = -3; z <= 5; ++z) {
    Value expected = (1.0 - std::pow(q, z)) * (1.0 - a * std::pow(q, z)) /
                     ((1.0 - q) * (1.0 - a * q)) * std::pow(q, 1 - z);
    EXPECT_LT(rel(e.number(z), expected), 1e-13);
  }
}

// Elliptic at p = 0 with b = 10^-m tends to the a;q engine, the a;q engine
// with a = 10^m tends to the q engine, and q = 1 + 10^-m tends to classical.
TEST(Weights, DegenerationChain) {
  const Value a{0.7, 0.3}, b{1.3, -0.4}, q{0.8, 0.5};
  auto gap = [](const Engine& x, const Engine& y) {
    double g = 0.0;
    for (int k = -3; k <= 4; ++k) g = std::max(g, rel(x.big_weight(k), y.big_weight(k)));
    for (int z = -3; z <= 5; ++z) g = std::max(g, rel(x.number(z), y.number(z)));
    return g;
  };
  std::vector<double> to_aq, to_q, to_classical;
  for (int m : {2, 4, 6}) {
    const double t = std::pow(10.0, -m);
    to_aq.push_back(gap(Engine::elliptic(EllipticParams<double>::make(a, t, q, 0.0)),
                        Engine::aq(a, q)));
    to_q.push_back(gap(Engine::aq(1.0 / t, q), Engine::q_only(q)));
    to_classical.push_back(gap(Engine::q_only(1.0 + t), Engine::classical()));
  }
  for (const auto* seq : {&to_aq, &to_q, &to_classical}) {
    EXPECT_GT((*seq)[0], (*seq)[1]);
    EXPECT_GT((*seq)[1], (*seq)[2]);
    EXPECT_LT((*seq)[2], 1e-4);
  }
  const Engine at_p0 = Engine::elliptic(EllipticParams<double>::make(a, b, q, 0.0));
  EXPECT_GT(gap(Engine::elliptic(EllipticParams<double>::make(a, b, q, 1e-2)), at_p0),
            gap(Engine::elliptic(EllipticParams<double>::make(a, b, q, 1e-4)), at_p0));
}

TEST(Weights, ShiftingBDoesNotAffectAQ) {
  const Engine e = Engine::aq({0.7, 0.3}, {0.9, -0.2});
  EXPECT_EQ(e.shifted(0, 3).big_weight(2), e.big_weight(2));
  EXPECT_LT(rel(e.shifted(2, 0).big_weight(1),
                Engine::aq(Value(0.7, 0.3) * std::pow(Value(0.9, -0.2), 2), {0.9, -0.2})
                    .big_weight(1)),
            1e-14);
}

TEST(Weights, CacheMatchesDirectEvaluation) {
  const Engine e = reference();
  const Engine cached = e.with_weight_cache(-6, 6);
  for (int k = -8; k <= 8; ++k) EXPECT_EQ(cached.big_weight(k), e.big_weight(k));
  EXPECT_THROW(e.with_weight_cache(3, 2), ValidationError);
}

TEST(Weights, PoleRaisesSingularError) {
  // b = q^-2 puts theta(b q^{k+2}) = theta(1) = 0 in the denominator at k = 0.
  const Value q{0.8, 0.5};
  const Engine e = Engine::elliptic(EllipticParams<double>::make({0.7, 0.3}, 1.0 / (q * q), q, 0.1));
  EXPECT_THROW(e.big_weight(0), SingularError);
}

TEST(Weights, QuadConversionAgrees) {
  const Engine e = reference();
  const auto quad = e.convert<Quad>();
  for (int k = -3; k <= 4; ++k)
    EXPECT_LT(rel(convert<double>(quad.big_weight(k)), e.big_weight(k)), 1e-14);
}

TEST(Binomial, InitialConditions) {
  for (const Engine& e : sampled_engines(5, 6))
    for (int n = 0; n <= 6; ++n) {
      EXPECT_LT(std::abs(ell_binomial(e, n, 0) - 1.0), 1e-13);
      EXPECT_EQ(ell_binomial(e, n, n + 1), Value(0));
      EXPECT_EQ(ell_binomial(e, n, -1), Value(0));
      if (n >= 1) EXPECT_LT(rel(ell_binomial(e, n, 1), e.number(n)), 1e-11);
    }
}

TEST(Binomial, ClosedFormRecurrenceAndPathsAgree) {
  for (const Engine& e : sampled_engines(4, 7)) {
    const auto table = ell_binomial_recurrence_table(e, 8);
    for (int n = 0; n <= 8; ++n)
      for (int k = 0; k <= n; ++k) {
        const Value closed = ell_binomial(e, n, k);
        EXPECT_LT(rel(closed, table[n][k]), 1e-9) << n << ',' << k;
        EXPECT_LT(rel(closed, ell_binomial_paths(e, n, k)), 1e-9) << n << ',' << k;
      }
  }
}

TEST(Binomial, QEngineIsGaussian) {
  const Value q{0.6, 0.3};
  const Engine e = Engine::q_only(q);
  EXPECT_LT(std::abs(ell_binomial_paths(e, 3, 1) - (1.0 + q + q * q)), 1e-15);
  EXPECT_LT(std::abs(ell_binomial(e, 3, 1) - (1.0 + q + q * q)), 1e-15);
  EXPECT_EQ(ell_binomial(Engine::classical(), 6, 2), Value(15));
}

TEST(Binomial, PathSumOfSingleWeights) {
  const Engine e = reference();
  // The single path with all east steps first has weight prod_s W_s(0) = 1.
  LatticePath path{{Step::East, Step::East, Step::North}};
  EXPECT_LT(std::abs(path_weight(e, path) - 1.0), 1e-14);
  EXPECT_EQ(ell_binomial_paths(e, 0, 0), Value(1));
}

TEST(LatticePaths, CountsAndBounds) {
  EXPECT_EQ(lattice_paths(4, 2).size(), 6u);
  EXPECT_EQ(lattice_paths(0, 0).size(), 1u);
  for (const auto& p : lattice_paths(5, 2)) {
    EXPECT_EQ(p.east(), 2);
    EXPECT_EQ(p.north(), 3);
  }
  EXPECT_THROW(lattice_paths(13, 3), SizeError);
  EXPECT_THROW(lattice_paths(3, 4), ValidationError);
}

TEST(EngineKind, StringRoundTrip) {
  for (auto k : {EngineKind::Elliptic, EngineKind::AQ, EngineKind::Q, EngineKind::Classical})
    EXPECT_EQ(engine_kind_from_string(to_string(k)), k);
  EXPECT_THROW(engine_kind_from_string("hyper"), ValidationError);
}
