#include "projembed/smith.hpp"

#include <stdexcept>

namespace projembed {

IntMatrix identity_matrix(std::size_t n) {
  IntMatrix m(n, std::vector<BigInt>(n, 0));
  for (std::size_t i = 0; i < n; ++i) m[i][i] = 1;
  return m;
}

IntMatrix multiply(const IntMatrix& a, const IntMatrix& b) {
  std::size_t n = a.size(), k = b.size(), m = b.empty() ? 0 : b[0].size();
  IntMatrix c(n, std::vector<BigInt>(m, 0));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t t = 0; t < k; ++t) {
      if (a[i][t] == 0) continue;
      for (std::size_t j = 0; j < m; ++j) c[i][j] += a[i][t] * b[t][j];
    }
  return c;
}

namespace {

BigInt floor_div(const BigInt& a, const BigInt& b) {
  BigInt q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

struct Work {
  IntMatrix a, u, v, vinv;
  std::size_t rows, cols;

  void swap_rows(std::size_t i, std::size_t j) {
    std::swap(a[i], a[j]);
    std::swap(u[i], u[j]);
  }
  void swap_cols(std::size_t i, std::size_t j) {
    for (auto& r : a) std::swap(r[i], r[j]);
    for (auto& r : v) std::swap(r[i], r[j]);
    std::swap(vinv[i], vinv[j]);
  }
  // row_i -= q * row_j
  void row_sub(std::size_t i, std::size_t j, const BigInt& q) {
    for (std::size_t c = 0; c < cols; ++c) a[i][c] -= q * a[j][c];
    for (std::size_t c = 0; c < rows; ++c) u[i][c] -= q * u[j][c];
  }
  // col_i -= q * col_j
  void col_sub(std::size_t i, std::size_t j, const BigInt& q) {
    for (std::size_t r = 0; r < rows; ++r) a[r][i] -= q * a[r][j];
    for (std::size_t r = 0; r < cols; ++r) v[r][i] -= q * v[r][j];
    for (std::size_t c = 0; c < cols; ++c) vinv[j][c] += q * vinv[i][c];
  }
  void negate_row(std::size_t i) {
    for (auto& x : a[i]) x = -x;
    for (auto& x : u[i]) x = -x;
  }
};

}  // namespace

SmithForm smith_normal_form(const IntMatrix& r) {
  Work w;
  w.a = r;
  w.rows = r.size();
  w.cols = r.empty() ? 0 : r[0].size();
  w.u = identity_matrix(w.rows);
  w.v = identity_matrix(w.cols);
  w.vinv = identity_matrix(w.cols);
  std::size_t lim = std::min(w.rows, w.cols);
  for (std::size_t t = 0; t < lim; ++t) {
    while (true) {
      // Pivot: smallest nonzero absolute value in the remaining block.
      std::size_t pi = w.rows, pj = w.cols;
      BigInt best = 0;
      for (std::size_t i = t; i < w.rows; ++i)
        for (std::size_t j = t; j < w.cols; ++j) {
          BigInt x = abs(w.a[i][j]);
          if (x != 0 && (best == 0 || x < best)) {
            best = x;
            pi = i;
            pj = j;
          }
        }
      if (best == 0) break;
      if (pi != t) w.swap_rows(pi, t);
      if (pj != t) w.swap_cols(pj, t);
      bool clean = true;
      for (std::size_t i = t + 1; i < w.rows; ++i) {
        if (w.a[i][t] == 0) continue;
        w.row_sub(i, t, floor_div(w.a[i][t], w.a[t][t]));
        if (w.a[i][t] != 0) clean = false;
      }
      for (std::size_t j = t + 1; j < w.cols; ++j) {
        if (w.a[t][j] == 0) continue;
        w.col_sub(j, t, floor_div(w.a[t][j], w.a[t][t]));
        if (w.a[t][j] != 0) clean = false;
      }
      if (!clean) continue;
      // Enforce divisibility of the rest of the block by the pivot.
      bool divides = true;
      for (std::size_t i = t + 1; i < w.rows && divides; ++i)
        for (std::size_t j = t + 1; j < w.cols; ++j)
          if (w.a[i][j] % w.a[t][t] != 0) {
            // row_t += row_i
            w.row_sub(t, i, -1);
            divides = false;
            break;
          }
      if (divides) break;
    }
    if (w.a[t][t] < 0) w.negate_row(t);
  }
  SmithForm s;
  for (std::size_t t = 0; t < lim; ++t) s.d.push_back(w.a[t][t]);
  s.U = std::move(w.u);
  s.V = std::move(w.v);
  s.Vinv = std::move(w.vinv);
  return s;
}

}  // namespace projembed
