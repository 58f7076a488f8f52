#pragma once

#include <map>
#include <set>
#include <string>
#include <vector>

#include "toricform/lattice.hpp"
#include "toricform/numbers.hpp"

namespace toricform {

// Exponent vector over the ambient variables; entries are nonnegative.
using Exp = std::vector<Int>;

Exp exp_add(const Exp& a, const Exp& b);

// Sparse multivariate polynomial with exact rational coefficients.
struct Polynomial {
  int nvars = 0;
  std::map<Exp, Rat> terms;  // keys lex-sorted, values nonzero

  Polynomial() = default;
  explicit Polynomial(int n) : nvars(n) {}

  static Polynomial monomial(int n, const Exp& e, const Rat& c);
  static Polynomial constant(int n, const Rat& c);

  bool is_zero() const { return terms.empty(); }
  bool is_monomial() const { return terms.size() == 1; }
  bool is_constant() const;

  void add_term(const Exp& e, const Rat& c);

  Polynomial operator+(const Polynomial& o) const;
  Polynomial operator-(const Polynomial& o) const;
  Polynomial operator*(const Polynomial& o) const;
  Polynomial operator-() const;
  Polynomial scale(const Rat& c) const;
  bool operator==(const Polynomial& o) const { return nvars == o.nvars && terms == o.terms; }
  bool operator!=(const Polynomial& o) const { return !(*this == o); }

  Polynomial mul_monomial(const Exp& e) const;
  bool divisible_by_monomial(const Exp& e) const;
  Polynomial div_monomial(const Exp& e) const;  // throws theorem_violation if inexact

  // Componentwise minimum of all exponents (zero vector when empty).
  Exp monomial_content() const;
  Polynomial strip_content() const;

  // Variables with a positive exponent in some term.
  std::vector<int> active_vars() const;

  // Terms whose exponents lie in the given set.
  Polynomial restrict_to(const std::set<Exp>& exps) const;
  // Set the variables in s to zero.
  Polynomial set_zero(const std::vector<int>& s) const;

  Rat evaluate(const std::vector<Rat>& point) const;
  Cplx evaluate(const std::vector<Cplx>& point) const;

  Polynomial derivative(int var) const;

  // Substitute x_j -> prod_k y_k^{m[j][k]}; exponents map I -> I * m.
  Polynomial monomial_substitute(const IntMat& m) const;

  // Canonical rendering, terms in descending lex order; reparses to itself.
  std::string str(const std::vector<std::string>& names) const;
};

}  // namespace toricform
