#include "ellrook/boards.hpp"

#include <set>

#include "ellrook/errors.hpp"

namespace ellrook {

SkylineBoard::SkylineBoard(std::vector<int> h) : heights(std::move(h)) {
  for (int x : heights)
    if (x < 0) throw ValidationError("board heights must be nonnegative");
}

int SkylineBoard::cell_count() const {
  int total = 0;
  for (int x : heights) total += x;
  return total;
}

bool SkylineBoard::is_ferrers() const {
  for (size_t i = 1; i < heights.size(); ++i)
    if (heights[i] < heights[i - 1]) return false;
  return true;
}

bool SkylineBoard::satisfies_j_condition(int J) const {
  for (size_t i = 0; i + 1 < heights.size(); ++i)
    if (heights[i] != 0 && heights[i + 1] < heights[i] + J - 1) return false;
  return true;
}

SignFunctions SignFunctions::uniform(int n, int sgn, int sgnbar) {
  return {std::vector<int>(n, sgn), std::vector<int>(n, sgnbar)};
}

int AugmentedBoard::cell_count() const {
  int total = 0;
  for (int i = 1; i <= size(); ++i) total += column_height(i);
  return total;
}

AugmentedBoard make_augmented(std::vector<int> A, std::vector<int> B, SignFunctions signs) {
  const size_t n = A.size();
  if (B.size() != n || signs.sgn.size() != n || signs.sgnbar.size() != n)
    throw ValidationError("A, B, sgn and sgnbar must have equal length");
  for (size_t i = 0; i < n; ++i) {
    if (A[i] < 0 || B[i] < 0) throw ValidationError("A and B entries must be nonnegative");
    if ((signs.sgn[i] != 1 && signs.sgn[i] != -1) ||
        (signs.sgnbar[i] != 1 && signs.sgnbar[i] != -1))
      throw ValidationError("sign entries must be +1 or -1");
  }
  AugmentedBoard board;
  board.a_ = std::move(A);
  board.b_ = std::move(B);
  board.signs_ = std::move(signs);
  board.partial_.assign(n + 1, 0);
  board.signed_partial_.assign(n + 1, 0);
  for (size_t i = 0; i < n; ++i) {
    board.partial_[i + 1] = board.partial_[i] + board.a_[i];
    board.signed_partial_[i + 1] =
        board.signed_partial_[i] + board.signs_.sgnbar[i] * board.a_[i];
  }
  return board;
}

std::string to_string(Zone zone) {
  switch (zone) {
    case Zone::LowerAug: return "L";
    case Zone::ZPart: return "Z";
    case Zone::Base: return "B";
    case Zone::UpperAug: return "U";
  }
  return "?";
}

std::string to_string(const Cell& cell) {
  return std::to_string(cell.column) + ":" + to_string(cell.zone) + ":" +
         std::to_string(cell.part) + ":" + std::to_string(cell.offset);
}

ExtendedBoard::ExtendedBoard(AugmentedBoard base, int z) : base_(std::move(base)), z_(z) {
  if (z < 0) throw ValidationError("z must be nonnegative");
}

int ExtendedBoard::column_cell_count(int i) const {
  return 2 * base_.partial(i) + z_ + base_.b(i);
}

int ExtendedBoard::cell_count() const {
  int total = 0;
  for (int i = 1; i <= size(); ++i) total += column_cell_count(i);
  return total;
}

bool ExtendedBoard::contains(const Cell& c) const {
  if (c.column < 1 || c.column > size() || c.offset < 0) return false;
  switch (c.zone) {
    case Zone::ZPart: return c.part == 0 && c.offset < z_;
    case Zone::Base: return c.part == 0 && c.offset < base_.b(c.column);
    case Zone::LowerAug:
    case Zone::UpperAug:
      return c.part >= 1 && c.part <= c.column && c.offset < base_.a(c.part);
  }
  return false;
}

std::vector<Cell> ExtendedBoard::column_cells(int i) const {
  if (i < 1 || i > size()) throw IndexError("column out of range");
  std::vector<Cell> cells;
  cells.reserve(column_cell_count(i));
  // Lower zone is reflected: the highest part sits at the bottom, and each
  // part is read top-to-bottom, so bottom rows carry the largest offsets.
  for (int s = i; s >= 1; --s)
    for (int t = base_.a(s) - 1; t >= 0; --t) cells.push_back({i, Zone::LowerAug, s, t});
  for (int t = 0; t < z_; ++t) cells.push_back({i, Zone::ZPart, 0, t});
  for (int t = 0; t < base_.b(i); ++t) cells.push_back({i, Zone::Base, 0, t});
  for (int s = 1; s <= i; ++s)
    for (int t = 0; t < base_.a(s); ++t) cells.push_back({i, Zone::UpperAug, s, t});
  return cells;
}

ExtendedBoard make_extended(const AugmentedBoard& board, int z) {
  return ExtendedBoard(board, z);
}

LowerCase classify_lower_part(int prev, int next) {
  if (prev == next) return LowerCase::Empty;
  if (0 <= prev && prev < next) return LowerCase::Case1;
  if (0 <= next && next < prev) return LowerCase::Case2;
  if (next < 0 && 0 <= prev) return LowerCase::Case3;
  if (next < prev && prev <= 0) return LowerCase::Case4;
  if (prev < next && next <= 0) return LowerCase::Case5;
  return LowerCase::Case6;  // prev < 0 < next
}

namespace {

std::vector<int> int_list(const nlohmann::json& doc, const char* key) {
  const auto& v = doc.at(key);
  if (!v.is_array()) throw ValidationError(std::string(key) + " must be an array");
  std::vector<int> out;
  for (const auto& x : v) {
    if (!x.is_number_integer())
      throw ValidationError(std::string(key) + " entries must be integers");
    out.push_back(x.get<int>());
  }
  return out;
}

}  // namespace

BoardSpec board_from_json(const nlohmann::json& doc) {
  if (!doc.is_object()) throw ValidationError("board description must be a JSON object");
  static const std::set<std::string> known{"A", "B", "sgn", "sgnbar", "z"};
  for (const auto& item : doc.items())
    if (!known.count(item.key()))
      throw ValidationError("unknown board key '" + item.key() + "'");
  if (!doc.contains("A") || !doc.contains("B"))
    throw ValidationError("board description needs A and B");
  std::vector<int> A = int_list(doc, "A");
  std::vector<int> B = int_list(doc, "B");
  const int n = static_cast<int>(A.size());
  SignFunctions signs = SignFunctions::uniform(n, 1, 1);
  if (doc.contains("sgn")) signs.sgn = int_list(doc, "sgn");
  if (doc.contains("sgnbar")) signs.sgnbar = int_list(doc, "sgnbar");
  BoardSpec spec;
  spec.board = make_augmented(std::move(A), std::move(B), std::move(signs));
  if (doc.contains("z")) {
    if (!doc["z"].is_number_integer()) throw ValidationError("z must be an integer");
    spec.z = doc["z"].get<int>();
    if (spec.z < 0) throw ValidationError("z must be nonnegative");
  }
  return spec;
}

nlohmann::json board_to_json(const AugmentedBoard& board, int z) {
  return {{"A", board.A()},
          {"B", board.B()},
          {"sgn", board.signs().sgn},
          {"sgnbar", board.signs().sgnbar},
          {"z", z}};
}

}  // namespace ellrook
