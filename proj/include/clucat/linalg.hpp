#pragma once

// Dense exact rational linear algebra: just enough Gaussian elimination
// for ranks, nullspaces and intertwiner solves on small matrices.

#include <boost/rational.hpp>

#include <cassert>
#include <string>
#include <vector>

namespace clucat {

using Rat = boost::rational<long long>;

struct Mat {
  int rows = 0, cols = 0;
  std::vector<Rat> a;  // row-major

  Mat() = default;
  Mat(int r, int c) : rows(r), cols(c), a((size_t)r * c, Rat(0)) {}

  Rat& at(int r, int c) { return a[(size_t)r * cols + c]; }
  const Rat& at(int r, int c) const { return a[(size_t)r * cols + c]; }

  static Mat identity(int n) {
    Mat m(n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = Rat(1);
    return m;
  }

  bool is_zero() const {
    for (const Rat& x : a)
      if (x != Rat(0)) return false;
    return true;
  }

  bool operator==(const Mat& o) const {
    return rows == o.rows && cols == o.cols && a == o.a;
  }
};

inline Mat matmul(const Mat& x, const Mat& y) {
  assert(x.cols == y.rows);
  Mat z(x.rows, y.cols);
  for (int i = 0; i < x.rows; ++i)
    for (int k = 0; k < x.cols; ++k) {
      if (x.at(i, k) == Rat(0)) continue;
      for (int j = 0; j < y.cols; ++j)
        z.at(i, j) += x.at(i, k) * y.at(k, j);
    }
  return z;
}

inline Mat transpose(const Mat& m) {
  Mat t(m.cols, m.rows);
  for (int i = 0; i < m.rows; ++i)
    for (int j = 0; j < m.cols; ++j) t.at(j, i) = m.at(i, j);
  return t;
}

// Row echelon in place; returns pivot column list.
inline std::vector<int> row_reduce(Mat& m) {
  std::vector<int> pivots;
  int row = 0;
  for (int col = 0; col < m.cols && row < m.rows; ++col) {
    int p = -1;
    for (int r = row; r < m.rows; ++r)
      if (m.at(r, col) != Rat(0)) {
        p = r;
        break;
      }
    if (p == -1) continue;
    for (int c = 0; c < m.cols; ++c) std::swap(m.at(row, c), m.at(p, c));
    Rat inv = Rat(1) / m.at(row, col);
    for (int c = 0; c < m.cols; ++c) m.at(row, c) *= inv;
    for (int r = 0; r < m.rows; ++r) {
      if (r == row || m.at(r, col) == Rat(0)) continue;
      Rat f = m.at(r, col);
      for (int c = 0; c < m.cols; ++c) m.at(r, c) -= f * m.at(row, c);
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

inline int rank(Mat m) { return (int)row_reduce(m).size(); }

// Columns form a basis of {x : m x = 0}.
inline Mat null_space(Mat m) {
  int cols = m.cols;
  auto pivots = row_reduce(m);
  std::vector<bool> is_pivot(cols, false);
  for (int p : pivots) is_pivot[p] = true;
  std::vector<int> free_cols;
  for (int c = 0; c < cols; ++c)
    if (!is_pivot[c]) free_cols.push_back(c);
  Mat basis(cols, (int)free_cols.size());
  for (size_t k = 0; k < free_cols.size(); ++k) {
    int fc = free_cols[k];
    basis.at(fc, (int)k) = Rat(1);
    for (size_t r = 0; r < pivots.size(); ++r)
      basis.at(pivots[r], (int)k) = -m.at((int)r, fc);
  }
  return basis;
}

// Rows form a basis of {y : y m = 0}.
inline Mat left_null_space(const Mat& m) { return transpose(null_space(transpose(m))); }

inline std::string to_string(const Rat& r) {
  std::string s = std::to_string(r.numerator());
  if (r.denominator() != 1) s += "/" + std::to_string(r.denominator());
  return s;
}

}  // namespace clucat
