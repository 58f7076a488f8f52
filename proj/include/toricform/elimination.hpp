#pragma once

#include <utility>
#include <vector>

#include "toricform/polynomial.hpp"

namespace toricform {

// Dense univariate polynomial with exact rational coefficients.
struct UniPoly {
  std::vector<Rat> c;  // c[i] multiplies x^i; no trailing zeros

  UniPoly() = default;
  explicit UniPoly(std::vector<Rat> coeffs);

  int degree() const { return static_cast<int>(c.size()) - 1; }
  bool is_zero() const { return c.empty(); }
  Rat lc() const;

  Rat eval(const Rat& x) const;
  Cplx eval(const Cplx& x) const;

  UniPoly operator+(const UniPoly& o) const;
  UniPoly operator-(const UniPoly& o) const;
  UniPoly operator*(const UniPoly& o) const;
  UniPoly scale(const Rat& s) const;
  UniPoly monic() const;
  UniPoly derivative() const;
  bool operator==(const UniPoly& o) const { return c == o.c; }

  int valuation() const;         // lowest power with a nonzero coefficient
  UniPoly strip_valuation() const;

  std::string str() const;  // for diagnostics, variable rendered as x
};

// Remainder of a by b over the rationals; b nonzero.
UniPoly uni_rem(const UniPoly& a, const UniPoly& b);

// Monic greatest common divisor; zero when both arguments vanish.
UniPoly uni_gcd(UniPoly a, UniPoly b);

// Sylvester resultant for the written degrees.
Rat uni_resultant(const UniPoly& a, const UniPoly& b);

// Unique interpolant of degree < points through (xs[i], ys[i]); xs distinct.
UniPoly interpolate(const std::vector<Rat>& xs, const std::vector<Rat>& ys);

// All complex roots by simultaneous iteration; input nonconstant.
std::vector<Cplx> uni_roots(const UniPoly& a);

// Verified rational roots with multiplicities, plus the exact cofactor left
// after dividing them out.  remainder.degree() == 0 certifies completeness.
struct RootSplit {
  std::vector<std::pair<Rat, int>> roots;
  UniPoly remainder;
};
RootSplit split_rational_roots(const UniPoly& a);

// Exact division by (x - r); the final remainder must vanish.
UniPoly deflate(const UniPoly& a, const Rat& r);

// Bridge to sparse bivariate polynomials: vars x = 0, y = 1.
int degree_in(const Polynomial& f, int v);
UniPoly to_univariate(const Polynomial& f, int v);  // f may involve only v
UniPoly specialize(const Polynomial& f, int fixed_var, const Rat& value);
UniPoly coeff_of_power(const Polynomial& f, int v, const Int& power);  // in the other var

// Resultant eliminating y, by evaluation at good points and interpolation.
UniPoly resultant_eliminating_y(const Polynomial& f, const Polynomial& g);

}  // namespace toricform
