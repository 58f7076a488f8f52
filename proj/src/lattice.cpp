#include "toricform/lattice.hpp"

#include <algorithm>
#include <cassert>

namespace toricform {

IntMat IntMat::identity(int n) {
  IntMat m(n, n);
  for (int i = 0; i < n; ++i) m.a[i][i] = 1;
  return m;
}

std::vector<Int> IntMat::column(int j) const {
  std::vector<Int> c(rows);
  for (int i = 0; i < rows; ++i) c[i] = a[i][j];
  return c;
}

IntMat from_rows(const std::vector<Vec>& rows_in, int ncols) {
  IntMat m(static_cast<int>(rows_in.size()), ncols);
  for (size_t i = 0; i < rows_in.size(); ++i) {
    assert(static_cast<int>(rows_in[i].size()) == ncols);
    m.a[i] = rows_in[i];
  }
  return m;
}

IntMat from_columns(const std::vector<Vec>& cols_in, int nrows) {
  IntMat m(nrows, static_cast<int>(cols_in.size()));
  for (size_t j = 0; j < cols_in.size(); ++j) {
    assert(static_cast<int>(cols_in[j].size()) == nrows);
    for (int i = 0; i < nrows; ++i) m.a[i][j] = cols_in[j][i];
  }
  return m;
}

IntMat matmul(const IntMat& x, const IntMat& y) {
  assert(x.cols == y.rows);
  IntMat r(x.rows, y.cols);
  for (int i = 0; i < x.rows; ++i)
    for (int k = 0; k < x.cols; ++k) {
      if (x.a[i][k] == 0) continue;
      for (int j = 0; j < y.cols; ++j) r.a[i][j] += x.a[i][k] * y.a[k][j];
    }
  return r;
}

Int dot(const Vec& u, const Vec& v) {
  assert(u.size() == v.size());
  Int s = 0;
  for (size_t i = 0; i < u.size(); ++i) s += u[i] * v[i];
  return s;
}

// Bareiss fraction-free elimination; exact over Z.
Int det(const IntMat& m) {
  assert(m.rows == m.cols);
  int n = m.rows;
  if (n == 0) return Int(1);
  auto a = m.a;
  Int prev = 1;
  int sign = 1;
  for (int k = 0; k < n - 1; ++k) {
    int piv = -1;
    for (int i = k; i < n; ++i)
      if (a[i][k] != 0) {
        piv = i;
        break;
      }
    if (piv < 0) return Int(0);
    if (piv != k) {
      std::swap(a[piv], a[k]);
      sign = -sign;
    }
    for (int i = k + 1; i < n; ++i) {
      for (int j = k + 1; j < n; ++j) {
        Int num = a[k][k] * a[i][j] - a[i][k] * a[k][j];
        // divisible by the previous pivot by the Bareiss identity
        Int q;
        mpz_divexact(q.get_mpz_t(), num.get_mpz_t(), prev.get_mpz_t());
        a[i][j] = q;
      }
      a[i][k] = 0;
    }
    prev = a[k][k];
  }
  return sign > 0 ? a[n - 1][n - 1] : Int(-a[n - 1][n - 1]);
}

Int minor_det(const IntMat& m, const Subset& rows, const Subset& cols) {
  assert(rows.size() == cols.size());
  IntMat s(static_cast<int>(rows.size()), static_cast<int>(cols.size()));
  for (size_t i = 0; i < rows.size(); ++i)
    for (size_t j = 0; j < cols.size(); ++j) s.a[i][j] = m.a[rows[i]][cols[j]];
  return det(s);
}

IntMat exterior_power(const IntMat& m, int p) {
  assert(m.rows == m.cols);
  auto subs = subsets_of_size(m.rows, p);
  int r = static_cast<int>(subs.size());
  IntMat out(r, r);
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < r; ++j) out.a[i][j] = minor_det(m, subs[i], subs[j]);
  return out;
}

int rank(const IntMat& m) {
  auto a = m.a;
  int rk = 0;
  for (int col = 0; col < m.cols && rk < m.rows; ++col) {
    int piv = -1;
    for (int i = rk; i < m.rows; ++i)
      if (a[i][col] != 0) {
        piv = i;
        break;
      }
    if (piv < 0) continue;
    std::swap(a[piv], a[rk]);
    for (int i = rk + 1; i < m.rows; ++i) {
      if (a[i][col] == 0) continue;
      Int f1 = a[rk][col], f2 = a[i][col];
      for (int j = col; j < m.cols; ++j) a[i][j] = a[i][j] * f1 - a[rk][j] * f2;
    }
    ++rk;
  }
  return rk;
}

std::vector<Int> elementary_divisors(const IntMat& m) {
  auto a = m.a;
  int rows = m.rows, cols = m.cols;
  std::vector<Int> divs;
  int t = 0;
  while (t < rows && t < cols) {
    // locate a nonzero entry of least absolute value in the trailing block
    int bi = -1, bj = -1;
    Int best = 0;
    for (int i = t; i < rows; ++i)
      for (int j = t; j < cols; ++j) {
        if (a[i][j] == 0) continue;
        Int v = abs(a[i][j]);
        if (bi < 0 || v < best) {
          best = v;
          bi = i;
          bj = j;
        }
      }
    if (bi < 0) break;
    std::swap(a[bi], a[t]);
    for (int i = 0; i < rows; ++i) std::swap(a[i][bj], a[i][t]);
    bool again = false;
    for (int i = t + 1; i < rows; ++i) {
      if (a[i][t] == 0) continue;
      Int q = a[i][t] / a[t][t];
      for (int j = t; j < cols; ++j) a[i][j] -= q * a[t][j];
      if (a[i][t] != 0) again = true;  // smaller remainder left behind
    }
    for (int j = t + 1; j < cols; ++j) {
      if (a[t][j] == 0) continue;
      Int q = a[t][j] / a[t][t];
      for (int i = t; i < rows; ++i) a[i][j] -= q * a[i][t];
      if (a[t][j] != 0) again = true;
    }
    if (again) continue;
    // pivot must divide the remaining block; if not, fold that row in and retry
    bool divides = true;
    for (int i = t + 1; i < rows && divides; ++i)
      for (int j = t + 1; j < cols && divides; ++j)
        if (a[i][j] % a[t][t] != 0) {
          for (int jj = t; jj < cols; ++jj) a[t][jj] += a[i][jj];
          divides = false;
        }
    if (!divides) continue;
    divs.push_back(abs(a[t][t]));
    ++t;
  }
  return divs;
}

bool is_smooth(const std::vector<Vec>& generators, int n) {
  if (generators.empty()) return true;
  if (static_cast<int>(generators.size()) > n) return false;
  IntMat m = from_columns(generators, n);
  auto divs = elementary_divisors(m);
  if (divs.size() != generators.size()) return false;  // rank deficient
  for (const auto& d : divs)
    if (d != 1) return false;
  return true;
}

Vec primitive(const Vec& v) {
  Int g = 0;
  for (const auto& x : v) g = gcd(g, x);
  if (g == 0) throw input_error("primitive of the zero vector");
  Vec out(v.size());
  for (size_t i = 0; i < v.size(); ++i) {
    Int q;
    mpz_divexact(q.get_mpz_t(), v[i].get_mpz_t(), g.get_mpz_t());
    out[i] = q;
  }
  return out;
}

bool is_zero(const Vec& v) {
  for (const auto& x : v)
    if (x != 0) return false;
  return true;
}

IntMat unimodular_inverse(const IntMat& m) {
  assert(m.rows == m.cols);
  int n = m.rows;
  Int d = det(m);
  if (d != 1 && d != -1) throw theorem_violation("matrix is not unimodular");
  IntMat inv(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      Subset rs, cs;
      for (int k = 0; k < n; ++k) {
        if (k != j) rs.push_back(k);
        if (k != i) cs.push_back(k);
      }
      Int cof = minor_det(m, rs, cs);
      if ((i + j) % 2 == 1) cof = -cof;
      inv.a[i][j] = cof * d;  // adjugate over det, det = +-1
    }
  return inv;
}

std::vector<Vec> kernel_basis(const IntMat& m) {
  int rows = m.rows, cols = m.cols;
  // rational row echelon with column bookkeeping
  std::vector<std::vector<Rat>> a(rows, std::vector<Rat>(cols));
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < cols; ++j) a[i][j] = Rat(m.a[i][j]);
  std::vector<int> pivot_col;
  int r = 0;
  for (int col = 0; col < cols && r < rows; ++col) {
    int piv = -1;
    for (int i = r; i < rows; ++i)
      if (a[i][col] != 0) {
        piv = i;
        break;
      }
    if (piv < 0) continue;
    std::swap(a[piv], a[r]);
    Rat p = a[r][col];
    for (int j = 0; j < cols; ++j) a[r][j] /= p;
    for (int i = 0; i < rows; ++i) {
      if (i == r || a[i][col] == 0) continue;
      Rat f = a[i][col];
      for (int j = 0; j < cols; ++j) a[i][j] -= f * a[r][j];
    }
    pivot_col.push_back(col);
    ++r;
  }
  std::vector<bool> is_pivot(cols, false);
  for (int c : pivot_col) is_pivot[c] = true;
  std::vector<Vec> basis;
  for (int free = 0; free < cols; ++free) {
    if (is_pivot[free]) continue;
    std::vector<Rat> v(cols, Rat(0));
    v[free] = 1;
    for (int i = 0; i < r; ++i) v[pivot_col[i]] = -a[i][free];
    Int lcm = 1;
    for (const auto& q : v) lcm = lcm * q.get_den() / gcd(lcm, Int(q.get_den()));
    Vec iv(cols);
    for (int j = 0; j < cols; ++j) {
      Rat s = v[j] * Rat(lcm);
      iv[j] = s.get_num();
    }
    basis.push_back(primitive(iv));
  }
  return basis;
}

}  // namespace toricform
