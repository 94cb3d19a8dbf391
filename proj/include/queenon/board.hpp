#pragma once

#include <cstdint>
#include <vector>

#include "queenon/geometry.hpp"

namespace queenon {

// 1-based board position, x = column, y = row.
struct Position {
  int x = 0;
  int y = 0;
  friend bool operator==(const Position&, const Position&) = default;
  friend auto operator<=>(const Position&, const Position&) = default;
};

// Mutable n x n partial n-queens configuration with O(1) threat queries.
// Occupancy is tracked per row, column, plus-diagonal (x+y) and
// minus-diagonal (y-x). Single writer; move between threads freely.
class BoardState {
 public:
  explicit BoardState(int n);

  int size() const { return n_; }
  int queen_count() const { return static_cast<int>(queens_.size()); }
  // Queens in placement order.
  const std::vector<Position>& queens() const { return queens_; }

  bool in_range(Position p) const {
    return p.x >= 1 && p.x <= n_ && p.y >= 1 && p.y <= n_;
  }
  bool row_occupied(int y) const { return row_[y]; }
  bool col_occupied(int x) const { return col_[x]; }
  bool plus_occupied(int c) const { return plus_[c]; }          // c = x+y in [2, 2n]
  bool minus_occupied(int c) const { return minus_[c + n_]; }   // c = y-x in [-(n-1), n-1]
  bool has_queen(Position p) const;

  // True iff p's row, column, and both diagonals are all unoccupied.
  bool is_available(Position p) const;

  void place(Position p);   // throws if !is_available(p)
  void remove(Position p);  // throws if p is not a queen

  // Available positions among the given candidates, in the order given.
  std::vector<Position> available_among(const std::vector<Position>& candidates) const;

  friend bool operator==(const BoardState&, const BoardState&) = default;

 private:
  int n_ = 0;
  std::vector<Position> queens_;
  std::vector<std::uint8_t> row_, col_, plus_, minus_;
};

// Positions of the n x n board assigned to each nonempty I_N cell (indexed
// like geom.cells()), each list in row-major (y, then x) order.
std::vector<std::vector<Position>> cell_positions(const CellGeometry& geom, int n);

// Available positions of one cell; cell is a CellId of geom. Throws on an
// empty (non-)cell id.
std::vector<Position> available_in_region(const BoardState& state, CellId cell,
                                          const CellGeometry& geom);

// Replays a configuration through place(); throws if any placement conflicts.
BoardState board_from_config(int n, const std::vector<Position>& config);

}  // namespace queenon
