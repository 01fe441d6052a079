#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace grmir {

// Box in the column picture: column i in [1, n-1], row j in [1, v_i].
struct ColumnBox {
  int col = 0;
  int row = 0;
  friend bool operator==(ColumnBox a, ColumnBox b) {
    return a.col == b.col && a.row == b.row;
  }
  friend bool operator<(ColumnBox a, ColumnBox b) {
    return a.col != b.col ? a.col < b.col : a.row < b.row;
  }
};

// Box in the k x (n-k) rectangle picture.
struct RectBox {
  int r = 0;
  int c = 0;
  friend bool operator==(RectBox a, RectBox b) { return a.r == b.r && a.c == b.c; }
};

// The pair (k, n) with n >= 2k >= 2.
class Shape {
 public:
  Shape(int k, int n) : k_(k), n_(n) {
    if (k < 1)
      throw std::invalid_argument("shape requires k >= 1");
    if (n < 2 * k)
      throw std::invalid_argument(
          "shape (" + std::to_string(k) + "," + std::to_string(n) +
          ") violates n >= 2k; use the dual (" + std::to_string(n - k) + "," +
          std::to_string(n) + ") instead");
  }

  int k() const { return k_; }
  int n() const { return n_; }
  int boxes() const { return k_ * (n_ - k_); }

  // Exponent-vector layout: one slot per box, then z1, then z2.
  int arity() const { return boxes() + 2; }
  int z1_slot() const { return boxes(); }
  int z2_slot() const { return boxes() + 1; }

  // Column heights v_1..v_{n-1}.
  std::vector<int> dimension_vector() const {
    std::vector<int> v(n_ - 1);
    for (int i = 1; i <= n_ - 1; ++i) v[i - 1] = height(i);
    return v;
  }

  int height(int col) const {
    if (col < 1 || col > n_ - 1) return 0;
    if (col < k_) return col;
    if (col <= n_ - k_) return k_;
    return n_ - col;
  }

  bool valid_box(ColumnBox b) const {
    return b.col >= 1 && b.col <= n_ - 1 && b.row >= 1 && b.row <= height(b.col);
  }

  void require_box(ColumnBox b) const {
    if (!valid_box(b))
      throw std::invalid_argument("box (" + std::to_string(b.col) + "," +
                                  std::to_string(b.row) + ") not in shape");
  }

  // Boxes in (col, row) order; positions agree with box_index.
  std::vector<ColumnBox> box_list() const {
    std::vector<ColumnBox> out;
    out.reserve(boxes());
    for (int i = 1; i <= n_ - 1; ++i)
      for (int j = 1; j <= height(i); ++j) out.push_back({i, j});
    return out;
  }

  int box_index(ColumnBox b) const {
    require_box(b);
    int idx = 0;
    for (int i = 1; i < b.col; ++i) idx += height(i);
    return idx + b.row - 1;
  }

  friend bool operator==(const Shape& a, const Shape& b) {
    return a.k_ == b.k_ && a.n_ == b.n_;
  }

 private:
  int k_, n_;
};

// m = |i-k| + 2j - 1, ranging from 1 at (k,1) to n-1 at (n-k,k).
inline int box_weight(const Shape& s, ColumnBox b) {
  s.require_box(b);
  int d = b.col - s.k();
  if (d < 0) d = -d;
  return d + 2 * b.row - 1;
}

// Bijection between the two box pictures. Pinned by the corners
// ColumnBox(k,1) <-> RectBox(k, n-k) and ColumnBox(n-k, k) <-> RectBox(1,1),
// and by weight(col box) = n + 1 - r - c.
inline RectBox rect_of_column(const Shape& s, ColumnBox b) {
  s.require_box(b);
  if (b.col <= s.k()) return {b.col + 1 - b.row, s.n() - s.k() + 1 - b.row};
  return {s.k() + 1 - b.row, s.n() + 1 - b.col - b.row};
}

inline ColumnBox column_of_rect(const Shape& s, RectBox rb) {
  if (rb.r < 1 || rb.r > s.k() || rb.c < 1 || rb.c > s.n() - s.k())
    throw std::invalid_argument("rect box out of range");
  int col = s.n() - s.k() + rb.r - rb.c;
  int row = col <= s.k() ? col + 1 - rb.r : s.k() + 1 - rb.r;
  ColumnBox b{col, row};
  s.require_box(b);
  return b;
}

}  // namespace grmir
