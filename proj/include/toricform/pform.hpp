#pragma once

#include <map>
#include <set>
#include <string>
#include <vector>

#include "toricform/polynomial.hpp"
#include "toricform/subsets.hpp"

namespace toricform {

// Form written in the monomial basis dX_J = dx_{j1} ^ ... ^ dx_{jp}:
// sum over J of g_J dX_J.
struct StandardPForm {
  int n = 0;
  int p = 0;
  std::map<Subset, Polynomial> coeffs;  // nonzero g_J only

  void add(const Subset& j, const Polynomial& g);
  bool operator==(const StandardPForm& o) const {
    return n == o.n && p == o.p && coeffs == o.coeffs;
  }
  std::string str(const std::vector<std::string>& names) const;
};

// Same form written against dX_J / X_J; coefficient f_J = g_J * X_J, so every
// term of f_J has positive exponents at all indices in J.
struct LogPForm {
  int n = 0;
  int p = 0;
  std::map<Subset, Polynomial> coeffs;  // nonzero f_J only

  bool operator==(const LogPForm& o) const { return n == o.n && p == o.p && coeffs == o.coeffs; }
};

void validate(const StandardPForm& f);
void validate(const LogPForm& f);

LogPForm to_logarithmic(const StandardPForm& f);
StandardPForm to_standard(const LogPForm& f);

// Union of the exponent vectors of all coefficients, sorted.
std::vector<Exp> support(const LogPForm& f);

// Keep only terms whose exponents lie in the given point set.
LogPForm restrict_support(const LogPForm& f, const std::set<Exp>& points);

// Values of all g_J at a point, in lexicographic subset order (zeros kept).
std::vector<Rat> evaluate_coefficients(const StandardPForm& f, const std::vector<Rat>& point);
std::vector<Cplx> evaluate_coefficients(const StandardPForm& f, const std::vector<Cplx>& point);

// Pull back along x_j = prod_k y_k^{m[j][k]} by direct substitution,
// expanding each d(monomial) and recollecting wedge products.  Reference
// implementation for the minor-based pull-back.
LogPForm substitute_pullback_oracle(const LogPForm& f, const IntMat& m);

}  // namespace toricform
