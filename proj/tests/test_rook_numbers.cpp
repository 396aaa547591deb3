#include <gtest/gtest.h>

#include "ellrook/errors.hpp"
#include "ellrook/placements.hpp"
#include "ellrook/rook_numbers.hpp"
#include "ellrook/sampling.hpp"

using namespace ellrook;
using Value = std::complex<double>;
using Engine = WeightEngine<double>;

namespace {

// Frozen from tests/oracles/generate_values.py: weighted sums over explicitly
// enumerated placements on A=(2,1,1), B=(1,2,0), sgn=(+,-,+), sgnbar=(+,-,-),
// indexed by the number of rooks.
const Value kMR[] = {{1, 0},
                     {-0.088537347108200287918, -0.018084436656236770171},
                     {-0.095748733418570546871, -0.0085581694835639963937},
                     {-0.046287343816487789086, -0.036730342212378181533}};

Engine reference() {
  return Engine::elliptic(EllipticParams<double>::make({0.7, 0.3}, {1.3, -0.4}, {0.8, 0.5}, {0.2, 0.1}));
}

AugmentedBoard oracle_board() {
  return make_augmented({2, 1, 1}, {1, 2, 0}, {{1, -1, 1}, {1, -1, -1}});
}

double rel(Value x, Value y) { return relative_residual(x, y); }

std::vector<Engine> sampled(EngineKind kind, int count, std::uint64_t seed) {
  std::vector<Engine> out;
  ParamSampler s(seed);
  while (static_cast<int>(out.size()) < count) {
    try {
      Engine e = make_engine<double>(kind, s.draw(kind));
      e.big_weight(-8);
      e.big_weight(8);
      out.push_back(e);
    } catch (const SingularError&) {
    }
  }
  return out;
}

}  // namespace

TEST(MR, FrozenReferenceValues) {
  const auto dp = mr_coefficients(oracle_board(), reference());
  const auto en = mr_by_enumeration(oracle_board(), reference());
  ASSERT_EQ(dp.size(), 4u);
  for (int k = 0; k <= 3; ++k) {
    EXPECT_LT(rel(dp[k], kMR[k]), 1e-13) << k;
    EXPECT_LT(rel(en[k], kMR[k]), 1e-13) << k;
    EXPECT_LT(rel(MR(oracle_board(), k, reference()), kMR[k]), 1e-13) << k;
  }
}

TEST(MR, TransferMatchesEnumeration) {
  const std::vector<AugmentedBoard> boards{
      make_augmented({1, 2, 1, 2}, {1, 2, 2, 3}, SignFunctions::uniform(4, 1, 1)),
      make_augmented({0, 2, 1}, {2, 0, 1}, {{-1, 1, -1}, {1, -1, 1}}),
      make_augmented({3, 0, 1, 1}, {0, 1, 0, 2}, {{1, 1, -1, -1}, {-1, 1, 1, -1}})};
  // High-order MR values on the uniform-sign board nearly vanish while the
  // placement terms do not, so the comparison runs in quad precision.
  ParamSampler s(21);
  for (int i = 0; i < 3; ++i) {
    const auto e = make_engine<Quad>(EngineKind::Elliptic, s.draw(EngineKind::Elliptic));
    for (const auto& b : boards) {
      const auto dp = mr_coefficients(b, e);
      const auto en = mr_by_enumeration(b, e);
      for (size_t k = 0; k < dp.size(); ++k) EXPECT_LT(relative_residual(dp[k], en[k]), 1e-20) << k;
    }
  }
}

TEST(MR, ZeroRooksIsOne) {
  for (const Engine& e : sampled(EngineKind::Elliptic, 3, 22))
    EXPECT_EQ(mr_coefficients(oracle_board(), e)[0], Value(1));
}

TEST(MR, EmptyBoard) {
  const auto b = make_augmented({0, 0, 0}, {0, 0, 0}, SignFunctions::uniform(3, 1, 1));
  const auto mr = mr_coefficients(b, reference());
  EXPECT_EQ(mr[0], Value(1));
  for (int k = 1; k <= 3; ++k) EXPECT_EQ(mr[k], Value(0));
}

TEST(MR, ClassicalStaircaseShiftCountsRooks) {
  // With sgn = +1 and sgnbar = -1 every cell weighs 1 in the classical
  // engine, so MR_k counts the k-rook placements of the Ferrers board.
  for (const auto& b : std::vector<std::vector<int>>{{1, 2}, {2, 3, 3}, {1, 2, 3, 4}, {2, 2, 4, 4}}) {
    const int n = static_cast<int>(b.size());
    std::vector<int> A(n, 1), B(n);
    A[0] = 0;
    for (int i = 0; i < n; ++i) B[i] = b[i] - i;
    const auto board = make_augmented(A, B, SignFunctions::uniform(n, 1, -1));
    const auto mr = mr_coefficients(board, Engine::classical());
    for (int k = 0; k <= n; ++k)
      EXPECT_EQ(mr[k], Value(static_cast<double>(enumerate_classic(SkylineBoard(b), k).size())));
  }
}

TEST(R, NormalisationFactor) {
  const Engine e = reference();
  const auto board = oracle_board();
  const auto mr = mr_coefficients(board, e);
  const auto r = r_coefficients(board, e);
  ASSERT_EQ(r.size(), 4u);
  for (int m = 0; m <= 3; ++m) {
    Value factor(1);
    for (int s = 1; s <= 3 - m; ++s) factor *= e.big_weight(-board.signed_partial(s));
    for (int i = 1; i <= 3; ++i) factor /= e.big_weight(-board.sgn(i) * board.b(i));
    EXPECT_LT(rel(r[m], factor * mr[m]), 1e-13) << m;
    EXPECT_LT(rel(R(board, m, e), r[m]), 1e-13);
  }
}

TEST(R, TrivialBoards) {
  const auto one = make_augmented({0}, {0}, SignFunctions::uniform(1, 1, 1));
  EXPECT_LT(std::abs(R(one, 0, reference()) - 1.0), 1e-14);
  // B = 0 leaves a denominator of prod W(0) = 1.
  const auto b0 = make_augmented({1, 1}, {0, 0}, SignFunctions::uniform(2, 1, 1));
  const Engine e = reference();
  const auto mr = mr_coefficients(b0, e);
  const auto r = r_coefficients(b0, e);
  EXPECT_LT(rel(r[0], e.big_weight(-1) * e.big_weight(-2) * mr[0]), 1e-13);
}

TEST(Stirling, ClassicalValues) {
  const Engine c = Engine::classical();
  EXPECT_EQ(stirling2_ell(0, 0, 0, 1, c), Value(1));
  EXPECT_EQ(stirling2_ell(3, 2, 0, 1, c), Value(3));
  EXPECT_EQ(stirling2_ell(4, 2, 0, 1, c), Value(7));
  EXPECT_EQ(stirling1_ell(0, 0, 0, 1, c), Value(1));
  EXPECT_EQ(unsigned_stirling1_ell(3, 1, 0, 1, c), Value(2));
  EXPECT_EQ(stirling1_ell(3, 1, 0, 1, c), Value(2));
  EXPECT_EQ(stirling1_ell(3, 2, 0, 1, c), Value(-3));
  EXPECT_EQ(stirling2_ell(3, 4, 0, 1, c), Value(0));
  EXPECT_EQ(stirling2_ell(3, -1, 0, 1, c), Value(0));
}

TEST(Stirling, UnsignedIsSignFlip) {
  const Engine e = reference();
  const auto s = stirling1_table(6, 1, 2, e);
  const auto c = unsigned_stirling1_table(6, 1, 2, e);
  for (int n = 0; n <= 6; ++n)
    for (int k = 0; k <= n; ++k) EXPECT_EQ(c.at(n, k), ((n - k) % 2 ? -1.0 : 1.0) * s.at(n, k));
}

TEST(Stirling, InverseMatrices) {
  for (auto kind : {EngineKind::Elliptic, EngineKind::AQ, EngineKind::Q})
    for (const Engine& e : sampled(kind, 3, 23)) {
      const auto S = stirling2_table(8, 1, 1, e);
      const auto s = stirling1_table(8, 1, 1, e);
      for (int n = 0; n <= 8; ++n)
        for (int r = 0; r <= n; ++r) {
          Value sum(0);
          double scale = 1.0;
          for (int k = r; k <= n; ++k) {
            sum += S.at(n, k) * s.at(k, r);
            scale = std::max(scale, std::abs(S.at(n, k) * s.at(k, r)));
          }
          EXPECT_LT(std::abs(sum - Value(r == n ? 1.0 : 0.0)) / scale, 1e-9)
              << to_string(kind) << ' ' << n << ' ' << r;
        }
    }
}

TEST(Stirling, BoardTablesMatchRecurrence) {
  for (const Engine& e : sampled(EngineKind::Elliptic, 2, 24))
    for (auto [I, J] : std::vector<std::pair<int, int>>{{0, 1}, {1, 2}, {2, 1}}) {
      const auto S = stirling2_table(4, I, J, e);
      const auto SB = stirling2_board_table(4, I, J, e);
      const auto s = stirling1_table(4, I, J, e);
      const auto sB = stirling1_board_table(4, I, J, e);
      EXPECT_EQ(SB.provenance(), Provenance::BoardEnumeration);
      for (int n = 0; n <= 4; ++n)
        for (int k = 0; k <= n; ++k) {
          EXPECT_LT(rel(S.at(n, k), SB.at(n, k)), 1e-10) << n << ',' << k;
          EXPECT_LT(rel(s.at(n, k), sB.at(n, k)), 1e-10) << n << ',' << k;
        }
    }
}

TEST(CoefficientTable, Bounds) {
  CoefficientTable<double> t(3, Provenance::Recurrence);
  EXPECT_EQ(t.at(2, 3), Value(0));
  EXPECT_EQ(t.at(2, -1), Value(0));
  EXPECT_THROW(t.at(4, 0), IndexError);
  EXPECT_THROW(t.set(2, 3, 1.0), IndexError);
  EXPECT_THROW(CoefficientTable<double>(-1, Provenance::Recurrence), ValidationError);
  EXPECT_THROW(stirling2_table(3, -1, 1, reference()), ValidationError);
  EXPECT_EQ(to_string(Provenance::ClosedForm), "closed-form");
}

TEST(Gaussian, SmallValues) {
  const Value q{0.6, 0.3};
  const Value expected = 1.0 + q + 2.0 * q * q + q * q * q + q * q * q * q;
  EXPECT_LT(std::abs(gaussian_binomial(4, 2, q) - expected), 1e-14);
  EXPECT_EQ(gaussian_binomial(5, 2, Value(1)), Value(10));
  EXPECT_EQ(gaussian_binomial(3, 4, q), Value(0));
}

TEST(AlphaFile, SingleCellStaircase) {
  const Value q{0.6, 0.3};
  EXPECT_LT(std::abs(alpha_file_number(SkylineBoard({0, 1}), 1, 2, q) - 1.0), 1e-15);
}

TEST(AlphaFile, StaircaseAlphaTwo) {
  for (Value q : {Value(0.6, 0.3), Value(1.2, -0.4), Value(-0.7, 0.5)})
    for (int n = 1; n <= 4; ++n) {
      std::vector<int> h(n);
      for (int i = 0; i < n; ++i) h[i] = i;
      const auto nums = alpha_file_numbers(SkylineBoard(h), 2, q);
      for (int k = 0; k <= n; ++k)
        EXPECT_LT(rel(nums[k], staircase_alpha2_number(n, k, q)), 1e-12) << n << ',' << k;
    }
}

TEST(AlphaFile, CollapsesAtQEqualOne) {
  for (const auto& h : std::vector<std::vector<int>>{{1, 2}, {0, 2, 3}, {1, 1, 3, 4}}) {
    const SkylineBoard b(h);
    const auto zero = alpha_file_numbers(b, 0, Value(1));
    const auto one = alpha_file_numbers(b, 1, Value(1));
    for (int k = 0; k <= b.size(); ++k) {
      EXPECT_EQ(zero[k], Value(static_cast<double>(enumerate_classic(b, k).size())));
      EXPECT_EQ(one[k], Value(static_cast<double>(enumerate_file(b, k).size())));
    }
  }
  EXPECT_THROW(alpha_file_numbers(SkylineBoard({2, 1}), 2, Value(1)), ValidationError);
}

TEST(Alpha2, SmallestCase) {
  const Value a{0.7, 0.3}, q{0.9, -0.2};
  EXPECT_LT(std::abs(alpha2_closed_form(1, 0, a, q) - 1.0), 1e-14);
  EXPECT_EQ(alpha2_closed_form(1, 1, a, q), Value(0));
  EXPECT_EQ(alpha2_recursion(1, 0, a, q), Value(1));
  EXPECT_THROW(alpha2_closed_form(0, 0, a, q), ValidationError);
  EXPECT_THROW(alpha2_recursion(2, 3, a, q), ValidationError);
}

TEST(Alpha2, ClosedFormRecursionAndBoardAgree) {
  ParamSampler s(25);
  for (int i = 0; i < 3; ++i) {
    const ParamPoint pt = s.draw(EngineKind::AQ);
    const auto table = alpha2_recursion_table(5, pt.a, pt.q);
    for (int n = 1; n <= 5; ++n) {
      const auto board = r_coefficients(alpha2_board(n), Engine::aq(pt.a, pt.q));
      for (int k = 0; k <= n; ++k) {
        const Value closed = alpha2_closed_form(n, k, pt.a, pt.q);
        EXPECT_LT(rel(closed, table[n][k]), 1e-9) << n << ',' << k;
        EXPECT_LT(rel(closed, board[k]), 1e-9) << n << ',' << k;
      }
    }
  }
}

TEST(Alpha2, Board) {
  const auto b = alpha2_board(3);
  EXPECT_EQ(b.A(), (std::vector<int>{0, 1, 1}));
  EXPECT_EQ(b.B(), (std::vector<int>{0, 2, 4}));
  EXPECT_THROW(alpha2_board(0), ValidationError);
}
