#include "toricform/pullback.hpp"

namespace toricform {

namespace {

Vec column(const IntMat& m, int k) {
  Vec v(m.rows);
  for (int j = 0; j < m.rows; ++j) v[j] = m.a[j][k];
  return v;
}

Vec minima(const IntMat& m, const std::vector<Exp>& support) {
  if (support.empty()) throw input_error("chart needs a nonempty support");
  Vec t(m.cols);
  for (int k = 0; k < m.cols; ++k) {
    Vec v = column(m, k);
    bool first = true;
    for (const auto& e : support) {
      Int s = dot(v, e);
      if (first || s < t[k]) t[k] = s;
      first = false;
    }
  }
  return t;
}

}  // namespace

Chart chart_from_matrix(const IntMat& m, const std::vector<Exp>& support) {
  if (m.rows != m.cols || m.rows == 0) throw input_error("chart matrix must be square");
  for (const auto& row : m.a)
    for (const auto& x : row)
      if (x < 0) throw input_error("chart matrix has a negative exponent");
  Int d = det(m);
  if (d != 1 && d != -1) throw input_error("chart matrix is not unimodular");
  return Chart{m, minima(m, support)};
}

Chart chart_from_cone(const Cone& sigma, const std::vector<Exp>& support) {
  if (sigma.dim != sigma.n || static_cast<int>(sigma.gens.size()) != sigma.n)
    throw input_error("chart cone must be full-dimensional and simplicial");
  if (multiplicity(sigma) != 1) throw input_error("chart cone is not unimodular");
  return chart_from_matrix(from_columns(sigma.gens, sigma.n), support);
}

ChartPullback pull_back(const LogPForm& form, const Chart& chart) {
  validate(form);
  if (chart.m.rows != form.n) throw input_error("chart dimension does not match the form");
  ChartPullback pb;
  pb.chart = chart;
  pb.n = form.n;
  pb.p = form.p;

  // substitute each coefficient once, then divide the shared minimum out
  Exp tshift(chart.t.begin(), chart.t.end());
  std::map<Subset, Polynomial> shifted;
  for (const auto& [j, fj] : form.coeffs)
    shifted.emplace(j, fj.monomial_substitute(chart.m).div_monomial(tshift));

  for (const auto& k : subsets_of_size(form.n, form.p)) {
    Polynomial acc(form.n);
    for (const auto& [j, fj] : shifted) {
      Int minor = minor_det(chart.m, j, k);
      if (minor == 0) continue;
      acc = acc + fj.scale(Rat(minor));
    }
    pb.coeffs.emplace(k, std::move(acc));
  }
  return pb;
}

void check_adapted(const ChartPullback& pb) {
  for (const auto& [k, f] : pb.coeffs) {
    if (f.is_zero()) continue;
    for (int kk : k) {
      if (pb.chart.t[kk] > 0) continue;
      Exp unit(pb.n, Int(0));
      unit[kk] = 1;
      if (!f.divisible_by_monomial(unit))
        throw theorem_violation("pull-back not adapted: variable " + std::to_string(kk + 1) +
                                " fails to divide a coefficient");
    }
  }
}

LogPForm reassemble(const ChartPullback& pb) {
  Exp tshift(pb.chart.t.begin(), pb.chart.t.end());
  LogPForm out;
  out.n = pb.n;
  out.p = pb.p;
  for (const auto& [k, f] : pb.coeffs) {
    if (f.is_zero()) continue;
    out.coeffs.emplace(k, f.mul_monomial(tshift));
  }
  if (out.coeffs.empty()) throw theorem_violation("pull-back of a nonzero form vanished");
  validate(out);
  return out;
}

}  // namespace toricform
