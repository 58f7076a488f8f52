#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <set>
#include <sstream>
#include <string>

#include "toricform/parser.hpp"
#include "toricform/report.hpp"
#include "toricform/svg.hpp"

using namespace toricform;

namespace {

struct Options {
  std::string file;
  std::string json_path;
  std::string svg_path;
  double tol = 1e-10;
  int trials = 64;
  unsigned long seed = 1;
  int chart = -1;
  bool expect_nnd = false;
};

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw input_error("cannot write file: " + path);
  out << content;
}

std::string fan_text(const Analysis& a) {
  std::ostringstream os;
  auto one = [&](const char* name, const Fan& f) {
    std::set<Vec> rays;
    auto max = f.maximal_cones();
    for (const Cone& c : max)
      for (const Vec& g : c.gens) rays.insert(g);
    os << name << ": " << max.size() << " maximal cones\n";
    os << "  rays:";
    for (const Vec& r : rays) {
      os << " (";
      for (size_t i = 0; i < r.size(); ++i) os << (i ? "," : "") << r[i].get_str();
      os << ")";
    }
    os << "\n  cones:\n";
    for (const Cone& c : max) os << "    " << c.str() << "\n";
  };
  one("dual fan", a.dual);
  one("regular refinement", a.regular);
  return os.str();
}

int run(const std::string& cmd, const Options& o) {
  FormDocument doc = parse_form_file(o.file);
  const std::vector<std::string>& names = doc.variables;

  AnalysisOptions opt;
  opt.seed = o.seed;
  opt.numeric.tol = o.tol;
  opt.numeric.trials = o.trials;
  opt.run_charts = cmd == "reduce" || cmd == "oracle";
  Analysis a = analyze(doc.form, opt);

  if (o.chart >= 0) {
    if (o.chart >= static_cast<int>(a.charts.size()))
      throw input_error("chart index out of range; the regular fan has " +
                        std::to_string(a.charts.size()) + " charts");
    ChartAnalysis keep = a.charts[o.chart];
    a.charts.clear();
    a.charts.push_back(std::move(keep));
  }

  if (cmd == "oracle") {
    for (const ChartAnalysis& ca : a.charts) {
      LogPForm direct = substitute_pullback_oracle(a.form, ca.pullback.chart.m);
      if (reassemble(ca.pullback) != direct)
        throw theorem_violation("pull-back disagrees with direct substitution in chart " +
                                std::to_string(ca.index));
    }
    std::cout << "all " << a.charts.size()
              << " charts agree with direct substitution of the chart monomials\n";
    return 0;
  }

  if (cmd == "fan")
    std::cout << fan_text(a);
  else
    std::cout << text_report(a, names);

  if (!o.json_path.empty()) {
    Json j = json_report(a, names);
    if (cmd == "fan") j = Json{{"dual_fan", j["dual_fan"]}, {"regular_fan", j["regular_fan"]}};
    write_file(o.json_path, j.dump(2) + "\n");
  }
  if (!o.svg_path.empty()) write_file(o.svg_path, svg_picture(a, names));

  if (o.expect_nnd && !a.nnd.nondegenerate) {
    std::cout << "expectation failed: the form is not nondegenerate\n";
    return 1;
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact Newton polyhedron analysis and toric reduction of polynomial p-forms"};
  app.require_subcommand(1);

  Options o;
  auto add_common = [&](CLI::App* c) {
    c->add_option("file", o.file, "input .form file")->required();
    c->add_option("--json", o.json_path, "write the machine report to this path");
    c->add_option("--svg", o.svg_path, "write a picture to this path (two variables only)");
    c->add_option("--seed", o.seed, "seed for the numeric witness search");
    c->add_option("--trials", o.trials, "numeric search trials per system");
    c->add_option("--tol", o.tol, "residual tolerance for numeric witnesses");
    c->add_flag("--expect-nnd", o.expect_nnd, "exit 1 unless every face is certified");
  };

  add_common(app.add_subcommand("analyze", "faces and nondegeneracy of the Newton polyhedron"));
  add_common(app.add_subcommand("fan", "dual fan and its regular refinement"));
  CLI::App* red = app.add_subcommand("reduce", "full chart-by-chart toric reduction");
  add_common(red);
  red->add_option("--chart", o.chart, "restrict the report to one chart index");
  add_common(app.add_subcommand("oracle", "check the pull-back against direct substitution"));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    return run(app.get_subcommands().front()->get_name(), o);
  } catch (const input_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const theorem_violation& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 3;
  }
}
