#include "queenon/board.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace queenon {

BoardState::BoardState(int n) : n_(n) {
  if (n < 1) throw std::invalid_argument("BoardState: n must be >= 1");
  row_.assign(n + 1, 0);
  col_.assign(n + 1, 0);
  plus_.assign(2 * n + 1, 0);
  minus_.assign(2 * n, 0);  // index y - x + n in [1, 2n-1]
}

bool BoardState::has_queen(Position p) const {
  return std::find(queens_.begin(), queens_.end(), p) != queens_.end();
}

bool BoardState::is_available(Position p) const {
  if (!in_range(p))
    throw std::invalid_argument("is_available: position out of range");
  return !row_[p.y] && !col_[p.x] && !plus_[p.x + p.y] && !minus_[p.y - p.x + n_];
}

void BoardState::place(Position p) {
  if (!is_available(p))
    throw std::invalid_argument("place: (" + std::to_string(p.x) + "," +
                                std::to_string(p.y) + ") is not available");
  queens_.push_back(p);
  row_[p.y] = col_[p.x] = 1;
  plus_[p.x + p.y] = 1;
  minus_[p.y - p.x + n_] = 1;
}

void BoardState::remove(Position p) {
  auto it = std::find(queens_.begin(), queens_.end(), p);
  if (it == queens_.end())
    throw std::invalid_argument("remove: (" + std::to_string(p.x) + "," +
                                std::to_string(p.y) + ") is not a queen");
  queens_.erase(it);
  row_[p.y] = col_[p.x] = 0;
  plus_[p.x + p.y] = 0;
  minus_[p.y - p.x + n_] = 0;
}

std::vector<Position> BoardState::available_among(
    const std::vector<Position>& candidates) const {
  std::vector<Position> out;
  for (Position p : candidates)
    if (!row_[p.y] && !col_[p.x] && !plus_[p.x + p.y] && !minus_[p.y - p.x + n_])
      out.push_back(p);
  return out;
}

std::vector<std::vector<Position>> cell_positions(const CellGeometry& geom, int n) {
  std::vector<std::vector<Position>> out(geom.cell_count());
  for (int j = 1; j <= n; ++j)
    for (int i = 1; i <= n; ++i) {
      const int idx = geom.cell_index(geom.assign(n, i, j));
      out[idx].push_back({i, j});
    }
  return out;
}

std::vector<Position> available_in_region(const BoardState& state, CellId cell,
                                          const CellGeometry& geom) {
  if (!geom.contains(cell))
    throw std::invalid_argument("available_in_region: not an I_N cell");
  const int n = state.size();
  const int N = geom.n_steps();
  // Bounding rows/columns of the cell, with one square of slack; membership
  // is then decided exactly by the assignment rule.
  const double ylo = (cell.u + cell.v - 2.0 - 2 * N) / (2.0 * N);
  const double yhi = (cell.u + cell.v - 2.0 * N) / (2.0 * N);
  const double xlo = (cell.u - cell.v - 1.0) / (2.0 * N);
  const double xhi = (cell.u - cell.v + 1.0) / (2.0 * N);
  const int jlo = std::max(1, static_cast<int>(n * (ylo + 0.5)));
  const int jhi = std::min(n, static_cast<int>(n * (yhi + 0.5)) + 2);
  const int ilo = std::max(1, static_cast<int>(n * (xlo + 0.5)));
  const int ihi = std::min(n, static_cast<int>(n * (xhi + 0.5)) + 2);
  std::vector<Position> out;
  for (int j = jlo; j <= jhi; ++j)
    for (int i = ilo; i <= ihi; ++i) {
      const Position p{i, j};
      if (geom.assign(n, i, j) == cell && state.is_available(p)) out.push_back(p);
    }
  return out;
}

BoardState board_from_config(int n, const std::vector<Position>& config) {
  BoardState b(n);
  for (Position p : config) b.place(p);
  return b;
}

}  // namespace queenon
