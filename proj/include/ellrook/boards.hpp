#pragma once

#include <string>
#include <vector>

#include <json.hpp>

namespace ellrook {

inline constexpr int kMaxEnumerationCells = 64;

struct SkylineBoard {
  std::vector<int> heights;

  SkylineBoard() = default;
  explicit SkylineBoard(std::vector<int> h);

  int size() const { return static_cast<int>(heights.size()); }
  int height(int column) const { return heights.at(column - 1); }  // 1-based
  int cell_count() const;
  bool is_ferrers() const;
  // b_{i+1} >= b_i + J - 1 whenever b_i != 0.
  bool satisfies_j_condition(int J) const;
};

struct SignFunctions {
  std::vector<int> sgn;
  std::vector<int> sgnbar;

  static SignFunctions uniform(int n, int sgn, int sgnbar);
};

class AugmentedBoard {
 public:
  AugmentedBoard() = default;

  int size() const { return static_cast<int>(a_.size()); }
  // Accessors take 1-based column / part indices.
  int a(int s) const { return a_.at(s - 1); }
  int b(int i) const { return b_.at(i - 1); }
  int sgn(int i) const { return signs_.sgn.at(i - 1); }
  int sgnbar(int i) const { return signs_.sgnbar.at(i - 1); }
  // A_i = a_1 + ... + a_i, with A_0 = 0.
  int partial(int i) const { return partial_.at(i); }
  // Signed partial sum with A-bar_0 = 0.
  int signed_partial(int s) const { return signed_partial_.at(s); }
  int column_height(int i) const { return b(i) + partial(i); }
  int cell_count() const;

  const std::vector<int>& A() const { return a_; }
  const std::vector<int>& B() const { return b_; }
  const SignFunctions& signs() const { return signs_; }

  friend AugmentedBoard make_augmented(std::vector<int> A, std::vector<int> B,
                                       SignFunctions signs);

 private:
  std::vector<int> a_, b_;
  SignFunctions signs_;
  std::vector<int> partial_, signed_partial_;
};

AugmentedBoard make_augmented(std::vector<int> A, std::vector<int> B, SignFunctions signs);

enum class Zone { LowerAug, ZPart, Base, UpperAug };

std::string to_string(Zone zone);

// Zone-relative cell address. part is 1..column in the augmented zones and 0
// elsewhere; offset counts bottom-to-top, except in LowerAug where it counts
// top-to-bottom within the part.
struct Cell {
  int column = 0;
  Zone zone = Zone::Base;
  int part = 0;
  int offset = 0;

  friend bool operator==(const Cell&, const Cell&) = default;
};

std::string to_string(const Cell& cell);  // "col:zone:part:offset"

class ExtendedBoard {
 public:
  ExtendedBoard() = default;
  ExtendedBoard(AugmentedBoard base, int z);

  const AugmentedBoard& base() const { return base_; }
  int z() const { return z_; }
  int size() const { return base_.size(); }
  int column_cell_count(int i) const;
  int cell_count() const;
  bool contains(const Cell& cell) const;
  // Every cell of column i, bottom row first.
  std::vector<Cell> column_cells(int i) const;

 private:
  AugmentedBoard base_;
  int z_ = 0;
};

ExtendedBoard make_extended(const AugmentedBoard& board, int z);

// Which of the six orderings of (A-bar_s, A-bar_{s+1}) against 0 governs the
// lower augmented part s+1.
enum class LowerCase { Empty, Case1, Case2, Case3, Case4, Case5, Case6 };

LowerCase classify_lower_part(int prev, int next);

struct BoardSpec {
  AugmentedBoard board;
  int z = 0;
};

// {"A":[...],"B":[...],"sgn":[...],"sgnbar":[...],"z":int}; sgn/sgnbar
// default to all +1 and z to 0. Unknown keys are rejected.
BoardSpec board_from_json(const nlohmann::json& doc);
nlohmann::json board_to_json(const AugmentedBoard& board, int z);

}  // namespace ellrook
