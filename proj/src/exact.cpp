#include "spintree/exact.hpp"

#include <stdexcept>

namespace spintree::exact {

namespace {

// Scale each row by the lcm of its denominators: integer matrix, same row
// space and nullspace.
std::vector<std::vector<Int>> to_integer_rows(const RatMatrix& m) {
  std::vector<std::vector<Int>> out;
  out.reserve(m.size());
  for (const auto& row : m) {
    Int l = 1;
    for (const auto& v : row) {
      Int d = denominator(v);
      l = lcm(l, d);
    }
    std::vector<Int> r;
    r.reserve(row.size());
    for (const auto& v : row) r.push_back(numerator(v) * (l / denominator(v)));
    out.push_back(std::move(r));
  }
  return out;
}

}  // namespace

int rank(RatMatrix m) {
  if (m.empty()) return 0;
  auto a = to_integer_rows(m);
  const int rows = static_cast<int>(a.size());
  const int cols = static_cast<int>(a[0].size());
  // Bareiss fraction-free forward elimination with row pivoting.
  Int prev = 1;
  int r = 0;
  for (int c = 0; c < cols && r < rows; ++c) {
    int piv = -1;
    for (int i = r; i < rows; ++i)
      if (a[i][c] != 0) {
        piv = i;
        break;
      }
    if (piv < 0) continue;
    std::swap(a[r], a[piv]);
    for (int i = r + 1; i < rows; ++i) {
      for (int j = c + 1; j < cols; ++j)
        a[i][j] = (a[r][c] * a[i][j] - a[i][c] * a[r][j]) / prev;
      a[i][c] = 0;
    }
    prev = a[r][c];
    ++r;
  }
  return r;
}

std::vector<std::vector<Rat>> nullspace(RatMatrix m, int cols) {
  // Reduced row echelon form over the rationals; elimination itself is run
  // fraction-free on integer rows, back substitution is rational.
  auto a = to_integer_rows(m);
  const int rows = static_cast<int>(a.size());
  std::vector<int> pivot_col;
  Int prev = 1;
  int r = 0;
  for (int c = 0; c < cols && r < rows; ++c) {
    int piv = -1;
    for (int i = r; i < rows; ++i)
      if (a[i][c] != 0) {
        piv = i;
        break;
      }
    if (piv < 0) continue;
    std::swap(a[r], a[piv]);
    for (int i = r + 1; i < rows; ++i) {
      for (int j = c + 1; j < cols; ++j)
        a[i][j] = (a[r][c] * a[i][j] - a[i][c] * a[r][j]) / prev;
      a[i][c] = 0;
    }
    prev = a[r][c];
    pivot_col.push_back(c);
    ++r;
  }
  const int nr = r;  // row-echelon rank

  std::vector<bool> is_pivot(cols, false);
  for (int c : pivot_col) is_pivot[c] = true;

  std::vector<std::vector<Rat>> basis;
  for (int free = 0; free < cols; ++free) {
    if (is_pivot[free]) continue;
    std::vector<Rat> x(cols, Rat(0));
    x[free] = 1;
    // Back-substitute through the echelon rows, bottom up.
    for (int i = nr - 1; i >= 0; --i) {
      int pc = pivot_col[i];
      Rat s(0);
      for (int j = pc + 1; j < cols; ++j)
        if (x[j] != 0) s += Rat(a[i][j]) * x[j];
      x[pc] = -s / Rat(a[i][pc]);
    }
    basis.push_back(std::move(x));
  }
  return basis;
}

Rat determinant(RatMatrix m) {
  const int n = static_cast<int>(m.size());
  for (const auto& row : m)
    if (static_cast<int>(row.size()) != n)
      throw std::invalid_argument("determinant: matrix not square");
  Rat det(1);
  for (int c = 0; c < n; ++c) {
    int piv = -1;
    for (int i = c; i < n; ++i)
      if (m[i][c] != 0) {
        piv = i;
        break;
      }
    if (piv < 0) return Rat(0);
    if (piv != c) {
      std::swap(m[piv], m[c]);
      det = -det;
    }
    det *= m[c][c];
    for (int i = c + 1; i < n; ++i) {
      Rat f = m[i][c] / m[c][c];
      for (int j = c; j < n; ++j) m[i][j] -= f * m[c][j];
    }
  }
  return det;
}

bool in_span(const RatMatrix& m, const std::vector<Rat>& v) {
  RatMatrix with = m;
  with.push_back(v);
  return rank(m) == rank(with);
}

}  // namespace spintree::exact
