#include <gtest/gtest.h>

#include <set>

#include "ellrook/errors.hpp"
#include "ellrook/placements.hpp"

using namespace ellrook;

namespace {

std::vector<long long> classic_counts(const SkylineBoard& b) {
  std::vector<long long> out;
  for (int k = 0; k <= b.size(); ++k) out.push_back(enumerate_classic(b, k).size());
  return out;
}

long long binom(int n, int k) {
  long long r = 1;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

// Brute force over every choice of at most one cell per column (0 = empty).
// Calls visit with rows[i] in 0..height(i) for each column.
void each_column_choice(const std::vector<int>& sizes,
                        const std::function<void(const std::vector<int>&)>& visit) {
  std::vector<int> choice(sizes.size(), 0);
  while (true) {
    visit(choice);
    size_t i = 0;
    while (i < sizes.size() && choice[i] == sizes[i]) choice[i++] = 0;
    if (i == sizes.size()) return;
    ++choice[i];
  }
}

// Nonattacking placements with the uncancelled-cell count, by direct
// inspection of every cell.
std::multiset<int> classic_statistics_oracle(const std::vector<int>& heights, int k) {
  std::multiset<int> out;
  each_column_choice(heights, [&](const std::vector<int>& rows) {
    int used = 0;
    std::set<int> seen;
    for (int r : rows)
      if (r) {
        ++used;
        if (!seen.insert(r).second) return;
      }
    if (used != k) return;
    int free = 0;
    for (size_t c = 0; c < heights.size(); ++c)
      for (int r = 1; r <= heights[c]; ++r) {
        if (rows[c] == r) continue;
        if (rows[c] > r) continue;  // below a rook
        bool right_of_rook = false;
        for (size_t d = 0; d < c; ++d) right_of_rook |= rows[d] == r;
        if (!right_of_rook) ++free;
      }
    out.insert(free);
  });
  return out;
}

std::multiset<int> statistics(const std::vector<Placement>& ps) {
  std::multiset<int> out;
  for (const auto& p : ps) out.insert(p.statistic.value());
  return out;
}

// Cells of column i as a flat list for the brute-force oracles.
std::vector<Cell> cells_of(const ExtendedBoard& ext, int i, bool augmented_only) {
  std::vector<Cell> out;
  for (const Cell& c : ext.column_cells(i))
    if (!augmented_only || c.zone == Zone::Base || c.zone == Zone::UpperAug) out.push_back(c);
  return out;
}

bool cancels(const Cell& c, bool extended) {
  return !extended || c.zone == Zone::Base || c.zone == Zone::UpperAug;
}

// Counts legal placements by filtering all per-column choices: a rook in
// column j is illegal if it sits in an augmented part whose index is among
// the t highest, t being the number of cancelling rooks to its left.
long long cancellation_oracle(const ExtendedBoard& ext, bool extended, int k) {
  const int n = ext.size();
  std::vector<std::vector<Cell>> cols;
  std::vector<int> sizes;
  for (int i = 1; i <= n; ++i) {
    cols.push_back(cells_of(ext, i, !extended));
    sizes.push_back(static_cast<int>(cols.back().size()));
  }
  long long count = 0;
  each_column_choice(sizes, [&](const std::vector<int>& pick) {
    int rooks = 0, left = 0;
    for (int j = 1; j <= n; ++j) {
      if (!pick[j - 1]) {
        if (extended) return;
        continue;
      }
      const Cell& c = cols[j - 1][pick[j - 1] - 1];
      if ((c.zone == Zone::LowerAug || c.zone == Zone::UpperAug) && c.part > j - left) return;
      ++rooks;
      if (cancels(c, extended)) ++left;
    }
    if (extended || rooks == k) ++count;
  });
  return count;
}

AugmentedBoard plus_board(std::vector<int> A, std::vector<int> B) {
  const int n = static_cast<int>(A.size());
  return make_augmented(std::move(A), std::move(B), SignFunctions::uniform(n, 1, 1));
}

}  // namespace

TEST(Classic, SmallBoards) {
  EXPECT_EQ(classic_counts(SkylineBoard({1, 2})), (std::vector<long long>{1, 3, 1}));
  EXPECT_EQ(enumerate_classic(SkylineBoard({2, 2}), 2).size(), 2u);
  EXPECT_EQ(classic_counts(SkylineBoard({0, 1, 2})), (std::vector<long long>{1, 3, 1, 0}));
}

TEST(Classic, FullSquareBoards) {
  for (int n = 1; n <= 4; ++n)
    for (int k = 0; k <= n; ++k) {
      long long fact = 1;
      for (int i = 2; i <= k; ++i) fact *= i;
      EXPECT_EQ(static_cast<long long>(enumerate_classic(SkylineBoard(std::vector<int>(n, n)), k).size()),
                binom(n, k) * binom(n, k) * fact);
    }
}

TEST(Classic, StatisticMatchesOracle) {
  for (const auto& h : std::vector<std::vector<int>>{{1, 2}, {0, 2, 3}, {1, 1, 3, 4}, {2, 2, 2}, {0, 1, 2, 3}})
    for (int k = 0; k <= static_cast<int>(h.size()); ++k)
      EXPECT_EQ(statistics(enumerate_classic(SkylineBoard(h), k)), classic_statistics_oracle(h, k));
}

TEST(Classic, OrderIsColumnMajorLowestFirst) {
  const auto ps = enumerate_classic(SkylineBoard({1, 2}), 1);
  ASSERT_EQ(ps.size(), 3u);
  EXPECT_EQ(ps[0].rooks[0], (Cell{2, Zone::Base, 0, 0}));
  EXPECT_EQ(ps[1].rooks[0], (Cell{2, Zone::Base, 0, 1}));
  EXPECT_EQ(ps[2].rooks[0], (Cell{1, Zone::Base, 0, 0}));
}

TEST(Classic, Errors) {
  EXPECT_THROW(enumerate_classic(SkylineBoard({2, 1}), 1), ValidationError);
  EXPECT_THROW(enumerate_classic(SkylineBoard({1, 2}), 3), ValidationError);
  EXPECT_THROW(enumerate_classic(SkylineBoard({30, 35}), 1), SizeError);
}

TEST(File, Examples) {
  EXPECT_EQ(enumerate_file(SkylineBoard({1, 1}), 2).size(), 1u);
  EXPECT_EQ(enumerate_file(SkylineBoard({2, 2}), 2).size(), 4u);
  const auto empty = enumerate_file(SkylineBoard({1, 3, 2}), 0);
  ASSERT_EQ(empty.size(), 1u);
  EXPECT_EQ(empty[0].statistic, 6);
}

TEST(File, StatisticCountsCellsAbove) {
  // B(2,3), k = 1: rook at row r of column 2 leaves 3-r above plus 2 in column 1.
  std::multiset<int> expected;
  for (int r = 1; r <= 2; ++r) expected.insert(2 - r + 3);
  for (int r = 1; r <= 3; ++r) expected.insert(3 - r + 2);
  EXPECT_EQ(statistics(enumerate_file(SkylineBoard({2, 3}), 1)), expected);
}

TEST(File, InvariantUnderColumnPermutation) {
  for (int k = 0; k <= 3; ++k)
    EXPECT_EQ(statistic_histogram(enumerate_file(SkylineBoard({1, 3, 2}), k)),
              statistic_histogram(enumerate_file(SkylineBoard({3, 2, 1}), k)));
}

TEST(JAttacking, OneEqualsClassic) {
  for (const auto& h : std::vector<std::vector<int>>{{1, 2}, {0, 2, 3}, {1, 1, 3, 4}}) {
    for (int k = 0; k <= static_cast<int>(h.size()); ++k) {
      const auto a = enumerate_j_attacking(SkylineBoard(h), 1, k);
      const auto b = enumerate_classic(SkylineBoard(h), k);
      ASSERT_EQ(a.size(), b.size());
      for (size_t i = 0; i < a.size(); ++i) {
        EXPECT_EQ(a[i].rooks, b[i].rooks);
        EXPECT_EQ(a[i].statistic, b[i].statistic);
      }
    }
  }
}

TEST(JAttacking, Examples) {
  EXPECT_EQ(enumerate_j_attacking(SkylineBoard({0, 2}), 2, 1).size(), 2u);
  EXPECT_EQ(enumerate_j_attacking(SkylineBoard({0, 2}), 2, 2).size(), 0u);
  // B(1,3) with J = 2: a rook at row 1 of column 1 attacks rows 1, 2 of column 2.
  EXPECT_EQ(enumerate_j_attacking(SkylineBoard({1, 3}), 2, 2).size(), 1u);
}

TEST(JAttacking, Errors) {
  EXPECT_THROW(enumerate_j_attacking(SkylineBoard({1, 1}), 2, 1), ValidationError);
  EXPECT_THROW(enumerate_j_attacking(SkylineBoard({1, 2}), 0, 1), ValidationError);
}

TEST(Augmented, Examples) {
  const auto board = plus_board({1, 1}, {1, 1});
  EXPECT_EQ(enumerate_augmented(board, 2).size(), 4u);
  EXPECT_EQ(enumerate_augmented(board, 0).size(), 1u);
}

TEST(Augmented, ZeroAIsFileCount) {
  const auto board = plus_board({0, 0, 0}, {1, 3, 2});
  EXPECT_EQ(enumerate_augmented(board, 3).size(), 6u);
}

TEST(Augmented, MatchesCancellationOracle) {
  for (const auto& [A, B] : std::vector<std::pair<std::vector<int>, std::vector<int>>>{
           {{1, 1}, {1, 1}}, {{1, 2, 1}, {0, 1, 2}}, {{0, 2, 1}, {1, 0, 1}}, {{2, 0, 1, 1}, {0, 1, 0, 1}}}) {
    const auto board = plus_board(A, B);
    const auto ext = make_extended(board, 0);
    for (int k = 0; k <= board.size(); ++k)
      EXPECT_EQ(static_cast<long long>(enumerate_augmented(board, k).size()),
                cancellation_oracle(ext, false, k))
          << k;
  }
}

TEST(Augmented, StaircaseShiftMatchesClassic) {
  for (const auto& b : std::vector<std::vector<int>>{{1, 2}, {2, 3, 3}, {1, 2, 3, 4}, {3, 3, 4, 5}}) {
    const int n = static_cast<int>(b.size());
    std::vector<int> A(n, 1), B(n);
    A[0] = 0;
    for (int i = 0; i < n; ++i) B[i] = b[i] - i;
    const auto board = plus_board(A, B);
    for (int k = 0; k <= n; ++k)
      EXPECT_EQ(enumerate_augmented(board, k).size(), enumerate_classic(SkylineBoard(b), k).size());
  }
}

TEST(Extended, Examples) {
  EXPECT_EQ(enumerate_extended(make_extended(plus_board({0}, {0}), 3)).size(), 3u);
  EXPECT_EQ(enumerate_extended(make_extended(plus_board({1}, {1}), 2)).size(), 5u);
  // The upper rook of column 1 consumes part 2 of column 2, which is empty,
  // so every pair of choices is legal: 3 * 3.
  EXPECT_EQ(enumerate_extended(make_extended(plus_board({1, 0}, {0, 0}), 1)).size(), 9u);
}

TEST(Extended, MatchesCancellationOracle) {
  for (const auto& [A, B] : std::vector<std::pair<std::vector<int>, std::vector<int>>>{
           {{1, 0}, {0, 0}}, {{1, 1}, {1, 1}}, {{1, 2, 1}, {0, 1, 2}}, {{0, 2, 1}, {1, 0, 1}}})
    for (int z = 0; z <= 2; ++z) {
      const auto ext = make_extended(plus_board(A, B), z);
      EXPECT_EQ(static_cast<long long>(enumerate_extended(ext).size()),
                cancellation_oracle(ext, true, 0));
    }
}

TEST(Extended, CancellationStateCountsOnlyHighRooks) {
  const auto ext = make_extended(plus_board({1, 1, 1}, {1, 1, 1}), 1);
  for (const auto& p : enumerate_extended(ext)) {
    const auto state = CancellationState::of(p, 3, true);
    int left = 0;
    for (int j = 1; j <= 3; ++j) {
      EXPECT_EQ(state.left_cancelling[j - 1], left);
      const Cell& c = p.rooks[j - 1];
      if (c.zone == Zone::Base || c.zone == Zone::UpperAug) ++left;
    }
  }
}

TEST(Extended, SizeBound) {
  EXPECT_THROW(enumerate_extended(make_extended(plus_board({3, 3, 3}, {5, 5, 5}), 6)), SizeError);
}

TEST(Histogram, Counts) {
  const auto hist = statistic_histogram(enumerate_classic(SkylineBoard({1, 2}), 1));
  EXPECT_EQ(hist, (std::map<int, long long>{{1, 2}, {2, 1}}));
}
