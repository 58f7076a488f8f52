#pragma once

#include "toricform/degeneracy.hpp"
#include "toricform/fan.hpp"
#include "toricform/newton.hpp"
#include "toricform/pform.hpp"
#include "toricform/pullback.hpp"

namespace toricform {

struct AnalysisOptions {
  unsigned long seed = 1;
  NumericParams numeric;
  bool run_charts = true;  // pull the form back through every regular chart
};

struct ChartAnalysis {
  int index = 0;  // position in the regular fan's maximal cone order
  Cone cone;
  ChartPullback pullback;
  ChartSmoothness smoothness;
};

// Everything the analysis derives from one form, in dependency order: the
// Newton polyhedron, its dual fan, a unimodular refinement, the face
// nondegeneracy report, and one block per chart of the refinement.
struct Analysis {
  AnalysisOptions options;
  LogPForm form;
  NewtonPolyhedron newton;
  Fan dual;
  Fan regular;
  NndReport nnd;
  std::vector<ChartAnalysis> charts;
  bool log_smooth = false;  // every chart certified on every orbit
};

Analysis analyze(const StandardPForm& f, const AnalysisOptions& opt = {});

}  // namespace toricform
