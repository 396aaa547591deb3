#include "ellrook/cell_weights.hpp"

#include "ellrook/errors.hpp"

namespace ellrook {

template <class Real>
std::vector<Complex<Real>> lower_part_weights(const WeightEngine<Real>& engine, int prev,
                                              int next) {
  std::vector<Complex<Real>> out;
  auto W = [&](int k) { return engine.big_weight(k); };
  switch (classify_lower_part(prev, next)) {
    case LowerCase::Empty:
      break;
    case LowerCase::Case1:  // 0 <= prev < next
      for (int k = -prev - 1; k >= -next; --k) out.push_back(W(k));
      break;
    case LowerCase::Case2:  // 0 <= next < prev
      for (int k = -prev; k <= -next - 1; ++k) out.push_back(-W(k));
      break;
    case LowerCase::Case3:  // next < 0 <= prev, passing through -W(0) = -1
      for (int k = -prev; k <= -1; ++k) out.push_back(-W(k));
      out.push_back(Complex<Real>(-1));
      for (int k = 1; k <= -next - 1; ++k) out.push_back(-W(k));
      break;
    case LowerCase::Case4:  // next < prev <= 0
      for (int k = -prev; k <= -next - 1; ++k) out.push_back(-W(k));
      break;
    case LowerCase::Case5:  // prev < next <= 0
      for (int k = -prev - 1; k >= -next; --k) out.push_back(W(k));
      break;
    case LowerCase::Case6:  // prev < 0 < next, passing through W(0) = 1
      for (int k = -prev - 1; k >= 1; --k) out.push_back(W(k));
      out.push_back(Complex<Real>(1));
      for (int k = -1; k >= -next; --k) out.push_back(W(k));
      break;
  }
  return out;
}

template <class Real>
std::vector<Complex<Real>> base_weights(const WeightEngine<Real>& engine, int b, int sgn) {
  std::vector<Complex<Real>> out;
  out.reserve(b);
  for (int t = 0; t < b; ++t)
    out.push_back(sgn == -1 ? -engine.big_weight(t) : engine.big_weight(-t - 1));
  return out;
}

template <class Real>
std::vector<Complex<Real>> zpart_weights(const WeightEngine<Real>& engine, int z) {
  std::vector<Complex<Real>> out;
  out.reserve(z);
  for (int t = 0; t < z; ++t) out.push_back(engine.big_weight(t));
  return out;
}

template <class Real>
Complex<Real> cell_weight(const ExtendedBoard& ext, const Cell& cell,
                          const WeightEngine<Real>& engine) {
  if (!ext.contains(cell)) throw IndexError("cell " + to_string(cell) + " is not on the board");
  const AugmentedBoard& board = ext.base();
  switch (cell.zone) {
    case Zone::ZPart:
      return engine.big_weight(cell.offset);
    case Zone::Base:
      return board.sgn(cell.column) == -1 ? -engine.big_weight(cell.offset)
                                          : engine.big_weight(-cell.offset - 1);
    case Zone::LowerAug:
    case Zone::UpperAug: {
      const auto part = lower_part_weights(engine, board.signed_partial(cell.part - 1),
                                           board.signed_partial(cell.part));
      const Complex<Real> w = part.at(cell.offset);
      return cell.zone == Zone::LowerAug ? w : -w;
    }
  }
  throw IndexError("unknown zone");
}

template <class Real>
std::vector<Complex<Real>> lower_partial_sums(const ExtendedBoard& ext, int column,
                                              const WeightEngine<Real>& engine) {
  if (column < 1 || column > ext.size()) throw IndexError("column out of range");
  const AugmentedBoard& board = ext.base();
  std::vector<Complex<Real>> sums;
  Complex<Real> running(0);
  for (int s = 1; s <= column; ++s) {
    for (const auto& w :
         lower_part_weights(engine, board.signed_partial(s - 1), board.signed_partial(s)))
      running += w;
    sums.push_back(running);
  }
  return sums;
}

template <class Real>
WeightedBoard<Real>::WeightedBoard(ExtendedBoard ext, WeightEngine<Real> engine)
    : ext_(std::move(ext)), engine_(std::move(engine)) {
  const AugmentedBoard& board = ext_.base();
  const int n = board.size();
  for (int s = 1; s <= n; ++s) {
    lower_.push_back(
        lower_part_weights(engine_, board.signed_partial(s - 1), board.signed_partial(s)));
    Value sum(0);
    for (const auto& w : lower_.back()) sum += w;
    lower_sum_.push_back(sum);
  }
  for (int i = 1; i <= n; ++i) {
    base_.push_back(base_weights(engine_, board.b(i), board.sgn(i)));
    Value sum(0);
    for (const auto& w : base_.back()) sum += w;
    base_sum_.push_back(sum);
  }
  zpart_ = zpart_weights(engine_, ext_.z());
}

template <class Real>
auto WeightedBoard<Real>::weight(const Cell& cell) const -> Value {
  if (!ext_.contains(cell)) throw IndexError("cell " + to_string(cell) + " is not on the board");
  switch (cell.zone) {
    case Zone::ZPart: return zpart_[cell.offset];
    case Zone::Base: return base_[cell.column - 1][cell.offset];
    case Zone::LowerAug: return lower_[cell.part - 1][cell.offset];
    case Zone::UpperAug: return -lower_[cell.part - 1][cell.offset];
  }
  throw IndexError("unknown zone");
}

nlohmann::json board_dump(const WeightedBoard<double>& weighted) {
  const ExtendedBoard& ext = weighted.board();
  nlohmann::json cells = nlohmann::json::array();
  for (int i = 1; i <= ext.size(); ++i) {
    for (const Cell& c : ext.column_cells(i)) {
      const auto w = weighted.weight(c);
      cells.push_back({{"column", c.column},
                       {"zone", to_string(c.zone)},
                       {"part", c.part},
                       {"offset", c.offset},
                       {"weight", {w.real(), w.imag()}}});
    }
  }
  nlohmann::json out = board_to_json(ext.base(), ext.z());
  out["cells"] = std::move(cells);
  return out;
}

#define ELLROOK_INSTANTIATE(R)                                                           \
  template std::vector<Complex<R>> lower_part_weights<R>(const WeightEngine<R>&, int, int); \
  template std::vector<Complex<R>> base_weights<R>(const WeightEngine<R>&, int, int);    \
  template std::vector<Complex<R>> zpart_weights<R>(const WeightEngine<R>&, int);        \
  template Complex<R> cell_weight<R>(const ExtendedBoard&, const Cell&,                  \
                                     const WeightEngine<R>&);                            \
  template std::vector<Complex<R>> lower_partial_sums<R>(const ExtendedBoard&, int,      \
                                                         const WeightEngine<R>&);        \
  template class WeightedBoard<R>;

ELLROOK_INSTANTIATE(double)
ELLROOK_INSTANTIATE(Quad)

}  // namespace ellrook
