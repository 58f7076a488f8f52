#pragma once

#include <vector>

#include "toricform/numbers.hpp"
#include "toricform/subsets.hpp"

namespace toricform {

using Vec = std::vector<Int>;

struct IntMat {
  int rows = 0;
  int cols = 0;
  std::vector<std::vector<Int>> a;  // row-major

  IntMat() = default;
  IntMat(int r, int c) : rows(r), cols(c), a(r, std::vector<Int>(c, Int(0))) {}

  std::vector<Int>& operator[](int i) { return a[i]; }
  const std::vector<Int>& operator[](int i) const { return a[i]; }

  static IntMat identity(int n);
  std::vector<Int> column(int j) const;
  bool operator==(const IntMat& o) const { return rows == o.rows && cols == o.cols && a == o.a; }
};

IntMat from_rows(const std::vector<Vec>& rows_in, int ncols);
IntMat from_columns(const std::vector<Vec>& cols_in, int nrows);
IntMat matmul(const IntMat& x, const IntMat& y);

Int dot(const Vec& u, const Vec& v);

// Determinant of a square matrix, fraction-free elimination.
Int det(const IntMat& m);

// Determinant of the submatrix with the given rows and columns.
Int minor_det(const IntMat& m, const Subset& rows, const Subset& cols);

// Matrix of all p x p minors, row/column subsets in lexicographic order.
IntMat exterior_power(const IntMat& m, int p);

// Rank over the rationals.
int rank(const IntMat& m);

// Elementary divisors d1 | d2 | ... (nonnegative, zeros trailing) of m.
std::vector<Int> elementary_divisors(const IntMat& m);

// Whether the vectors extend to a basis of Z^n (all elementary divisors 1).
bool is_smooth(const std::vector<Vec>& generators, int n);

// v divided by the gcd of its entries; zero vector is rejected.
Vec primitive(const Vec& v);

bool is_zero(const Vec& v);

// Inverse of a matrix with det = +-1, via the adjugate.
IntMat unimodular_inverse(const IntMat& m);

// Basis of the rational kernel of m (as integer primitive vectors).
std::vector<Vec> kernel_basis(const IntMat& m);

}  // namespace toricform
