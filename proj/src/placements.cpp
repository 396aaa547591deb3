#include "ellrook/placements.hpp"

#include <bit>
#include <cstdint>
#include <string>

#include "ellrook/errors.hpp"

namespace ellrook {

namespace {

void check_rook_count(int k, int n) {
  if (k < 0 || k > n)
    throw ValidationError("rook count " + std::to_string(k) + " outside 0.." +
                          std::to_string(n));
}

void check_cells(int cells) {
  if (cells > kMaxEnumerationCells)
    throw SizeError("board has " + std::to_string(cells) +
                    " cells; exhaustive enumeration is limited to 64");
}

std::uint64_t rows_up_to(int h) {  // bits for rows 1..h
  return h >= 64 ? ~std::uint64_t{0} : ((std::uint64_t{1} << h) - 1);
}

std::uint64_t row_bit(int r) { return std::uint64_t{1} << (r - 1); }

int free_rows_between(std::uint64_t taken, int lo, int hi) {  // rows lo+1..hi
  if (hi <= lo) return 0;
  const std::uint64_t window = rows_up_to(hi) & ~rows_up_to(lo);
  return std::popcount(window & ~taken);
}

std::vector<Placement> collect(const std::function<void(const PlacementVisitor&)>& run) {
  std::vector<Placement> out;
  run([&](const Placement& p) { out.push_back(p); });
  return out;
}

}  // namespace

CancellationState CancellationState::of(const Placement& placement, int n, bool extended) {
  CancellationState state;
  state.left_cancelling.assign(n, 0);
  for (const Cell& rook : placement.rooks) {
    const bool cancels =
        !extended || rook.zone == Zone::Base || rook.zone == Zone::UpperAug;
    if (!cancels) continue;
    for (int j = rook.column + 1; j <= n; ++j) ++state.left_cancelling[j - 1];
  }
  return state;
}

void for_each_augmented(const AugmentedBoard& board, int k, const PlacementVisitor& visit) {
  const int n = board.size();
  check_rook_count(k, n);
  check_cells(board.cell_count());
  Placement current;
  std::function<void(int)> step = [&](int j) {
    const int placed = current.size();
    if (placed == k) {
      visit(current);
      return;
    }
    if (j > n || n - j + 1 < k - placed) return;
    step(j + 1);
    auto place = [&](const Cell& c) {
      current.rooks.push_back(c);
      step(j + 1);
      current.rooks.pop_back();
    };
    for (int t = 0; t < board.b(j); ++t) place({j, Zone::Base, 0, t});
    const int parts = j - placed;
    for (int s = 1; s <= parts; ++s)
      for (int t = 0; t < board.a(s); ++t) place({j, Zone::UpperAug, s, t});
  };
  step(1);
}

std::vector<Placement> enumerate_augmented(const AugmentedBoard& board, int k) {
  return collect([&](const PlacementVisitor& v) { for_each_augmented(board, k, v); });
}

void for_each_extended(const ExtendedBoard& ext, const PlacementVisitor& visit) {
  const int n = ext.size();
  check_cells(ext.cell_count());
  const AugmentedBoard& board = ext.base();
  Placement current;
  std::function<void(int, int)> step = [&](int j, int cancelling) {
    if (j > n) {
      visit(current);
      return;
    }
    auto place = [&](const Cell& c, bool cancels) {
      current.rooks.push_back(c);
      step(j + 1, cancelling + (cancels ? 1 : 0));
      current.rooks.pop_back();
    };
    const int parts = j - cancelling;
    for (int s = parts; s >= 1; --s)
      for (int t = board.a(s) - 1; t >= 0; --t) place({j, Zone::LowerAug, s, t}, false);
    for (int t = 0; t < ext.z(); ++t) place({j, Zone::ZPart, 0, t}, false);
    for (int t = 0; t < board.b(j); ++t) place({j, Zone::Base, 0, t}, true);
    for (int s = 1; s <= parts; ++s)
      for (int t = 0; t < board.a(s); ++t) place({j, Zone::UpperAug, s, t}, true);
  };
  step(1, 0);
}

std::vector<Placement> enumerate_extended(const ExtendedBoard& ext) {
  return collect([&](const PlacementVisitor& v) { for_each_extended(ext, v); });
}

void for_each_classic(const SkylineBoard& board, int k, const PlacementVisitor& visit) {
  if (!board.is_ferrers()) throw ValidationError("classic placements need a Ferrers board");
  const int n = board.size();
  check_rook_count(k, n);
  check_cells(board.cell_count());
  Placement current;
  std::function<void(int, std::uint64_t, int)> step = [&](int i, std::uint64_t rows,
                                                          int uncancelled) {
    if (i > n) {
      if (current.size() == k) {
        current.statistic = uncancelled;
        visit(current);
      }
      return;
    }
    const int needed = k - current.size();
    if (n - i + 1 < needed) return;
    const int h = board.height(i);
    if (needed <= n - i)
      step(i + 1, rows, uncancelled + free_rows_between(rows, 0, h));
    if (needed == 0) return;
    for (int r = 1; r <= h; ++r) {
      if (rows & row_bit(r)) continue;
      current.rooks.push_back({i, Zone::Base, 0, r - 1});
      step(i + 1, rows | row_bit(r), uncancelled + free_rows_between(rows, r, h));
      current.rooks.pop_back();
    }
  };
  step(1, 0, 0);
}

std::vector<Placement> enumerate_classic(const SkylineBoard& board, int k) {
  return collect([&](const PlacementVisitor& v) { for_each_classic(board, k, v); });
}

void for_each_file(const SkylineBoard& board, int k, const PlacementVisitor& visit) {
  const int n = board.size();
  check_rook_count(k, n);
  check_cells(board.cell_count());
  Placement current;
  std::function<void(int, int)> step = [&](int i, int above) {
    if (i > n) {
      if (current.size() == k) {
        current.statistic = above;
        visit(current);
      }
      return;
    }
    const int needed = k - current.size();
    if (n - i + 1 < needed) return;
    const int h = board.height(i);
    if (needed <= n - i) step(i + 1, above + h);
    if (needed == 0) return;
    for (int r = 1; r <= h; ++r) {
      current.rooks.push_back({i, Zone::Base, 0, r - 1});
      step(i + 1, above + h - r);
      current.rooks.pop_back();
    }
  };
  step(1, 0);
}

std::vector<Placement> enumerate_file(const SkylineBoard& board, int k) {
  return collect([&](const PlacementVisitor& v) { for_each_file(board, k, v); });
}

void for_each_j_attacking(const SkylineBoard& board, int J, int k,
                          const PlacementVisitor& visit) {
  if (J < 1) throw ValidationError("J must be positive");
  if (!board.satisfies_j_condition(J))
    throw ValidationError("board violates b_{i+1} >= b_i + J - 1");
  const int n = board.size();
  check_rook_count(k, n);
  check_cells(board.cell_count());
  Placement current;
  std::vector<std::uint64_t> attacked(n + 1, 0);  // per column, rows attacked from the left
  std::function<void(int, int)> step = [&](int i, int uncancelled) {
    if (i > n) {
      if (current.size() == k) {
        current.statistic = uncancelled;
        visit(current);
      }
      return;
    }
    const int needed = k - current.size();
    if (n - i + 1 < needed) return;
    const int h = board.height(i);
    const std::uint64_t hit = attacked[i];
    if (needed <= n - i) step(i + 1, uncancelled + free_rows_between(hit, 0, h));
    if (needed == 0) return;
    for (int r = 1; r <= h; ++r) {
      if (hit & row_bit(r)) continue;
      const std::vector<std::uint64_t> saved(attacked.begin() + i + 1, attacked.end());
      // In each later column, claim the first J free rows at or above r.
      for (int c = i + 1; c <= n; ++c) {
        int got = 0;
        for (int row = r; row <= board.height(c) && got < J; ++row) {
          if (attacked[c] & row_bit(row)) continue;
          attacked[c] |= row_bit(row);
          ++got;
        }
      }
      current.rooks.push_back({i, Zone::Base, 0, r - 1});
      step(i + 1, uncancelled + free_rows_between(hit, r, h));
      current.rooks.pop_back();
      std::copy(saved.begin(), saved.end(), attacked.begin() + i + 1);
    }
  };
  step(1, 0);
}

std::vector<Placement> enumerate_j_attacking(const SkylineBoard& board, int J, int k) {
  return collect([&](const PlacementVisitor& v) { for_each_j_attacking(board, J, k, v); });
}

std::map<int, long long> statistic_histogram(const std::vector<Placement>& placements) {
  std::map<int, long long> hist;
  for (const Placement& p : placements)
    if (p.statistic) ++hist[*p.statistic];
  return hist;
}

}  // namespace ellrook
