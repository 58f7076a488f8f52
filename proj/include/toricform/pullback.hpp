#pragma once

#include "toricform/cone.hpp"
#include "toricform/pform.hpp"

namespace toricform {

// Monomial coordinate change x_j = prod_k y_k^{m[j][k]}.  Columns are lattice
// directions; t holds the minimum of each column pairing over the support.
struct Chart {
  IntMat m;
  Vec t;
};

Chart chart_from_matrix(const IntMat& m, const std::vector<Exp>& support);
Chart chart_from_cone(const Cone& sigma, const std::vector<Exp>& support);

// Pull-back through the chart with the monomial Y^t factored out:
// the original form becomes Y^t * sum_K coeffs[K] dY_K / Y_K.
struct ChartPullback {
  Chart chart;
  int n = 0;
  int p = 0;
  std::map<Subset, Polynomial> coeffs;  // every p-subset, zeros kept
};

ChartPullback pull_back(const LogPForm& form, const Chart& chart);

// Each y_k with t_k = 0 must divide every nonzero coefficient mentioning k;
// charts subordinate to the dual fan always satisfy this.
void check_adapted(const ChartPullback& pb);

// Multiply Y^t back in, giving the plain pull-back for cross-checks.
LogPForm reassemble(const ChartPullback& pb);

}  // namespace toricform
