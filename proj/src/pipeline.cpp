#include "toricform/pipeline.hpp"

namespace toricform {

Analysis analyze(const StandardPForm& f, const AnalysisOptions& opt) {
  validate(f);
  Analysis out;
  out.options = opt;
  out.form = to_logarithmic(f);

  auto supp = support(out.form);
  out.newton = NewtonPolyhedron::build(f.n, std::set<Exp>(supp.begin(), supp.end()));
  out.dual = out.newton.dual_fan();
  out.regular = regularize(triangulate(out.dual));
  if (!is_refinement(out.regular, out.dual))
    throw theorem_violation("regularization left the dual fan");
  for (const Cone& sigma : out.regular.maximal_cones())
    if (!is_smooth(sigma.gens, f.n))
      throw theorem_violation("regularization kept a singular cone");

  out.nnd = nnd_check(out.form, out.newton, opt.seed, opt.numeric);

  if (!opt.run_charts) {
    // nondegeneracy on every face is equivalent to smoothness in all charts
    out.log_smooth = out.nnd.nondegenerate;
    return out;
  }
  out.log_smooth = true;
  for (const Cone& sigma : out.regular.maximal_cones()) {
    ChartAnalysis ca;
    ca.index = static_cast<int>(out.charts.size());
    ca.cone = sigma;
    ca.pullback = pull_back(out.form, chart_from_cone(sigma, supp));
    check_adapted(ca.pullback);
    ca.smoothness = log_smooth_check(ca.pullback, out.newton, out.nnd, opt.seed, opt.numeric);
    if (!ca.smoothness.log_smooth) out.log_smooth = false;
    out.charts.push_back(std::move(ca));
  }
  return out;
}

}  // namespace toricform
