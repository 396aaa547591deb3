#pragma once

#include <functional>
#include <map>
#include <optional>
#include <vector>

#include "ellrook/boards.hpp"

namespace ellrook {

// Rooks listed by increasing column; statistic holds the uncancelled-cell
// count for the regimes that define one.
struct Placement {
  std::vector<Cell> rooks;
  std::optional<int> statistic;

  int size() const { return static_cast<int>(rooks.size()); }
};

using PlacementVisitor = std::function<void(const Placement&)>;

// Per-column count of cancelling rooks strictly to the left. Column j then has
// parts 1..j - t_j available.
struct CancellationState {
  std::vector<int> left_cancelling;  // index j-1 holds t_j

  static CancellationState of(const Placement& placement, int n, bool extended);
  int available_parts(int column) const {
    return column - left_cancelling.at(column - 1);
  }
};

// Placements of exactly k rooks on the augmented board where every rook
// consumes the highest unconsumed part index of each column to its right.
// Columns are scanned left to right; within a column the empty choice comes
// first, then cells bottom to top.
void for_each_augmented(const AugmentedBoard& board, int k, const PlacementVisitor& visit);
std::vector<Placement> enumerate_augmented(const AugmentedBoard& board, int k);

// One rook per column on the extended board; only rooks above the high bar
// (base or upper augmented zone) cancel, and they cancel the same part in
// both augmented zones.
void for_each_extended(const ExtendedBoard& ext, const PlacementVisitor& visit);
std::vector<Placement> enumerate_extended(const ExtendedBoard& ext);

// Nonattacking placements on a Ferrers board, with u_B.
void for_each_classic(const SkylineBoard& board, int k, const PlacementVisitor& visit);
std::vector<Placement> enumerate_classic(const SkylineBoard& board, int k);

// File placements (distinct columns, rows free), with the count of cells
// above a rook plus all cells of rookless columns.
void for_each_file(const SkylineBoard& board, int k, const PlacementVisitor& visit);
std::vector<Placement> enumerate_file(const SkylineBoard& board, int k);

// J-attacking placements with u_B^J.
void for_each_j_attacking(const SkylineBoard& board, int J, int k,
                          const PlacementVisitor& visit);
std::vector<Placement> enumerate_j_attacking(const SkylineBoard& board, int J, int k);

// Histogram statistic -> number of placements.
std::map<int, long long> statistic_histogram(const std::vector<Placement>& placements);

}  // namespace ellrook
