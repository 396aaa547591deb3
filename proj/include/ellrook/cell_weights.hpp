#pragma once

#include <vector>

#include <json.hpp>

#include "ellrook/boards.hpp"
#include "ellrook/weights.hpp"

namespace ellrook {

// Weights of the lower augmented part s+1, read top to bottom, given
// prev = A-bar_s and next = A-bar_{s+1}. Empty when prev == next.
template <class Real>
std::vector<Complex<Real>> lower_part_weights(const WeightEngine<Real>& engine, int prev,
                                              int next);

// Base cells of a column with b cells and sign sgn, read bottom to top.
template <class Real>
std::vector<Complex<Real>> base_weights(const WeightEngine<Real>& engine, int b, int sgn);

// z-part cells, bottom to top: 1, W(1), ..., W(z-1).
template <class Real>
std::vector<Complex<Real>> zpart_weights(const WeightEngine<Real>& engine, int z);

template <class Real>
Complex<Real> cell_weight(const ExtendedBoard& ext, const Cell& cell,
                          const WeightEngine<Real>& engine);

// Running sums over lower parts 1..s of the given column, s = 1..column.
template <class Real>
std::vector<Complex<Real>> lower_partial_sums(const ExtendedBoard& ext, int column,
                                              const WeightEngine<Real>& engine);

// All cell weights of one extended board under one engine, filled at
// construction and read-only afterwards.
template <class Real>
class WeightedBoard {
 public:
  using Value = Complex<Real>;

  WeightedBoard(ExtendedBoard ext, WeightEngine<Real> engine);

  const ExtendedBoard& board() const { return ext_; }
  const WeightEngine<Real>& engine() const { return engine_; }

  Value weight(const Cell& cell) const;

  // Parts are column independent: lower_part(s) serves every column i >= s.
  const std::vector<Value>& lower_part(int s) const { return lower_.at(s - 1); }
  const std::vector<Value>& base(int column) const { return base_.at(column - 1); }
  const std::vector<Value>& zpart() const { return zpart_; }

  Value lower_part_sum(int s) const { return lower_sum_.at(s - 1); }
  Value upper_part_sum(int s) const { return -lower_sum_.at(s - 1); }
  Value base_sum(int column) const { return base_sum_.at(column - 1); }

 private:
  ExtendedBoard ext_;
  WeightEngine<Real> engine_;
  std::vector<std::vector<Value>> lower_;
  std::vector<std::vector<Value>> base_;
  std::vector<Value> zpart_;
  std::vector<Value> lower_sum_;
  std::vector<Value> base_sum_;
};

// Every cell with zone, part, offset and weight as [re, im].
nlohmann::json board_dump(const WeightedBoard<double>& weighted);

}  // namespace ellrook
