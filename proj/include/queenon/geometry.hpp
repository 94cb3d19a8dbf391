#pragma once

#include <array>
#include <cstdint>
#include <vector>

namespace queenon {

// Diamond-lattice geometry over the unit square [-1/2,1/2]^2.
//
// Everything is indexed by the rotated coordinates s = x + y and d = y - x,
// both ranging over [-1,1]. The square itself is the l1-ball |s| + |d| <= 1.
// For a resolution N, the diamond partition I_N consists of the boxes
// [(u-1)/N - 1, u/N - 1] x [(v-1)/N - 1, v/N - 1] in (s,d)-space, clipped to
// the square; u is the plus-band index and v the minus-band index, 1..2N.
// Cells interior to the square are full boxes ("squares", xy-area 1/(2N^2));
// cells cut by the square boundary are triangles ("half-squares", xy-area
// 1/(4N^2)); the rest are empty.
//
// The mutual refinement K_N of I_N with the axis grid {sigma_ij} consists of
// the 4N^2 triangles obtained by cutting each axis square with both its
// diagonals. Each triangle lies in exactly one I_N cell, one plus-band, and
// one minus-band; a square cell is the union of two triangles, a half-square
// cell of one.

struct CellId {
  int u = 0;  // plus-band (s) index, 1..2N
  int v = 0;  // minus-band (d) index, 1..2N
  friend bool operator==(const CellId&, const CellId&) = default;
};

enum class CellKind { empty, half, square };

// Corner of an axis square sigma_ij, named by which edge of the square the
// triangle touches (bottom = smallest y).
enum class TriCorner : int { bottom = 0, right = 1, top = 2, left = 3 };

struct Triangle {
  int i = 0;  // x-strip of the parent axis square, 1..N
  int j = 0;  // y-strip, 1..N
  TriCorner corner = TriCorner::bottom;
  CellId cell;  // the I_N cell containing this triangle
};

class CellGeometry {
 public:
  explicit CellGeometry(int n_steps);

  int n_steps() const { return n_; }

  CellKind kind(CellId c) const;
  bool contains(CellId c) const { return kind(c) != CellKind::empty; }
  double area(CellId c) const;

  // All nonempty cells, ordered by (u, v).
  const std::vector<CellId>& cells() const { return cells_; }
  int cell_count() const { return static_cast<int>(cells_.size()); }
  // Index of a cell in cells(), or -1 if the cell is empty.
  int cell_index(CellId c) const;

  // All 4N^2 triangles of K_N, ordered by (i, j, corner).
  const std::vector<Triangle>& triangles() const { return tris_; }
  static int triangle_index(int n_steps, int i, int j, TriCorner c) {
    return ((i - 1) * n_steps + (j - 1)) * 4 + static_cast<int>(c);
  }

  // Cell center in (x,y) coordinates: diamond center for squares, centroid
  // for half-squares. Exact rational with denominator 6N, returned as the
  // integer numerator pair used for lexicographic comparisons.
  std::array<std::int64_t, 2> center_numerator(CellId c) const;
  std::array<double, 2> center(CellId c) const;

  // The I_N cell assigned to board position (i,j) on an n x n board: among
  // the cells whose closure meets the closure of sigma_{i,j}^n, the one with
  // lexicographically minimal (x,y) center. Exact integer arithmetic.
  CellId assign(int n, int i, int j) const;

 private:
  int n_ = 0;
  std::vector<CellId> cells_;
  std::vector<int> cell_index_;  // (2N)^2 lookup, -1 for empty
  std::vector<Triangle> tris_;
};

// Band index (1..2N) of the J_N band containing the plus-diagonal through
// board position (i,j): the band holding the center s-value of sigma_ij.
int plus_band_of_diagonal(int n_steps, int n, int diag_sum);
// Same for a minus-diagonal value y - x in [-(n-1), n-1].
int minus_band_of_diagonal(int n_steps, int n, int diag_diff);

}  // namespace queenon
