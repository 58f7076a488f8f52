#include "toricform/report.hpp"

#include <algorithm>
#include <sstream>

namespace toricform {

namespace {

long small(const Int& v) {
  if (!v.fits_slong_p()) throw input_error("value too large for the report");
  return v.get_si();
}

Json vec_json(const std::vector<Int>& v) {
  Json a = Json::array();
  for (const Int& x : v) a.push_back(small(x));
  return a;
}

Json rat_vec_json(const std::vector<Rat>& v) {
  Json a = Json::array();
  for (const Rat& x : v) a.push_back(rat_string(x));
  return a;
}

Json cplx_vec_json(const std::vector<Cplx>& v) {
  Json a = Json::array();
  for (const Cplx& z : v) a.push_back(Json::array({z.real(), z.imag()}));
  return a;
}

Json witness_json(const Witness& w) {
  Json j;
  j["exact"] = w.exact;
  if (w.exact)
    j["point"] = rat_vec_json(w.point);
  else {
    j["point"] = cplx_vec_json(w.approx);
    j["residual"] = w.residual;
  }
  return j;
}

Json decision_json(const Decision& d) {
  Json j;
  j["verdict"] = verdict_name(d.verdict);
  j["reason"] = reason_name(d.reason);
  if (!d.detail.empty()) j["detail"] = d.detail;
  if (d.verdict == Verdict::degenerate && (!d.witness.point.empty() || !d.witness.approx.empty()))
    j["witness"] = witness_json(d.witness);
  return j;
}

Json fan_json(const Fan& f) {
  std::set<Vec> rays;
  auto max = f.maximal_cones();
  for (const Cone& c : max)
    for (const Vec& g : c.gens) rays.insert(g);
  std::vector<Vec> ray_list(rays.begin(), rays.end());

  Json j;
  Json jr = Json::array();
  for (const Vec& r : ray_list) jr.push_back(vec_json(r));
  j["rays"] = jr;
  Json jc = Json::array();
  for (const Cone& c : max) {
    Json one = Json::array();
    for (const Vec& g : c.gens) {
      auto it = std::lower_bound(ray_list.begin(), ray_list.end(), g);
      one.push_back(static_cast<int>(it - ray_list.begin()));
    }
    jc.push_back(one);
  }
  j["maximal_cones"] = jc;
  return j;
}

std::string vec_str(const std::vector<Int>& v) {
  std::ostringstream os;
  os << "(";
  for (size_t i = 0; i < v.size(); ++i) {
    if (i) os << ",";
    os << v[i].get_str();
  }
  os << ")";
  return os.str();
}

std::string witness_str(const Witness& w) {
  std::ostringstream os;
  if (w.exact) {
    os << "(";
    for (size_t i = 0; i < w.point.size(); ++i) {
      if (i) os << ", ";
      os << rat_string(w.point[i]);
    }
    os << ")";
  } else {
    os << "~(";
    for (size_t i = 0; i < w.approx.size(); ++i) {
      if (i) os << ", ";
      os << w.approx[i].real();
      if (w.approx[i].imag() >= 0) os << "+";
      os << w.approx[i].imag() << "i";
    }
    os << ")";
  }
  return os.str();
}

bool facet_compact(const Facet& f) {
  for (const Int& v : f.normal)
    if (v == 0) return false;
  return true;
}

}  // namespace

std::vector<std::string> chart_names(int n) {
  std::vector<std::string> out;
  for (int i = 1; i <= n; ++i) out.push_back("y" + std::to_string(i));
  return out;
}

std::string facet_label(int index) { return "F" + std::to_string(index + 1); }

std::string face_label(const Face& face) {
  if (face.active.empty()) return "Gamma";
  std::string s;
  for (size_t i = 0; i < face.active.size(); ++i) {
    if (i) s += "&";
    s += facet_label(face.active[i]);
  }
  return s;
}

std::string initial_form_string(const LogPForm& f, const Face& face,
                                const std::vector<std::string>& names) {
  return to_standard(restrict_support(f, face.points)).str(names);
}

Json json_report(const Analysis& a, const std::vector<std::string>& names) {
  Json j;
  StandardPForm std_form = to_standard(a.form);

  j["input"] = {{"variables", names}, {"p", a.form.p}, {"form", std_form.str(names)}};
  j["seed"] = a.options.seed;

  Json supp = Json::array();
  for (const Exp& e : support(a.form)) supp.push_back(vec_json(e));
  j["support"] = supp;

  Json facets = Json::array();
  for (size_t i = 0; i < a.newton.facets.size(); ++i) {
    const Facet& f = a.newton.facets[i];
    facets.push_back({{"label", facet_label(static_cast<int>(i))},
                      {"normal", vec_json(f.normal)},
                      {"offset", small(f.offset)},
                      {"compact", facet_compact(f)}});
  }

  Json faces = Json::array();
  for (const FaceCheck& fc : a.nnd.faces) {
    Json one;
    one["label"] = face_label(fc.face);
    one["dim"] = fc.face.dim;
    Json defining = Json::array();
    for (int i : fc.face.active) defining.push_back(facet_label(i));
    one["facets"] = defining;
    Json pts = Json::array();
    for (const Exp& e : fc.face.points) pts.push_back(vec_json(e));
    one["points"] = pts;
    one["recession"] = fc.face.rec;
    one["initial_form"] = initial_form_string(a.form, fc.face, names);
    one["check"] = decision_json(fc.decision);
    faces.push_back(one);
  }
  j["newton"] = {{"facets", facets}, {"faces", faces}};
  j["nondegenerate"] = a.nnd.nondegenerate;

  j["dual_fan"] = fan_json(a.dual);
  Json reg = fan_json(a.regular);
  {
    std::set<Vec> coarse;
    for (const Cone& c : a.dual.maximal_cones())
      for (const Vec& g : c.gens) coarse.insert(g);
    Json added = Json::array();
    for (const Json& r : reg["rays"]) {
      Vec v;
      for (const Json& x : r) v.push_back(Int(x.get<long>()));
      if (!coarse.count(v)) added.push_back(r);
    }
    reg["added_rays"] = added;
  }
  j["regular_fan"] = reg;

  Json charts = Json::array();
  auto ynames = chart_names(a.form.n);
  for (const ChartAnalysis& ca : a.charts) {
    Json one;
    one["index"] = ca.index;
    Json gens = Json::array();
    for (const Vec& g : ca.cone.gens) gens.push_back(vec_json(g));
    one["cone"] = gens;
    Json rows = Json::array();
    for (const Vec& r : ca.pullback.chart.m.a) rows.push_back(vec_json(r));
    one["matrix"] = rows;
    one["shift"] = vec_json(ca.pullback.chart.t);
    Json coeffs = Json::array();
    for (const auto& [k, g] : ca.pullback.coeffs) {
      std::string wedge;
      for (size_t s = 0; s < k.size(); ++s) {
        if (s) wedge += "^";
        wedge += "d" + ynames[k[s]];
      }
      coeffs.push_back({{"wedge", wedge}, {"value", g.str(ynames)}});
    }
    one["coefficients"] = coeffs;
    one["adapted"] = true;
    Json orbits = Json::array();
    for (const OrbitCheck& oc : ca.smoothness.orbits) {
      Json o;
      o["pinned"] = oc.orbit;
      o["check"] = decision_json(oc.decision);
      orbits.push_back(o);
    }
    one["orbits"] = orbits;
    one["log_smooth"] = ca.smoothness.log_smooth;
    charts.push_back(one);
  }
  j["charts"] = charts;
  j["log_smooth"] = a.log_smooth;
  return j;
}

std::string text_report(const Analysis& a, const std::vector<std::string>& names) {
  std::ostringstream os;
  StandardPForm std_form = to_standard(a.form);
  os << "form: " << std_form.str(names) << "\n";
  os << "  n = " << a.form.n << ", p = " << a.form.p << ", seed = " << a.options.seed << "\n";

  auto supp = support(a.form);
  os << "support (" << supp.size() << " points):";
  for (const Exp& e : supp) os << " " << vec_str(e);
  os << "\n\n";

  os << "newton polyhedron: " << a.newton.facets.size() << " facets, " << a.nnd.faces.size()
     << " faces\n";
  for (size_t i = 0; i < a.newton.facets.size(); ++i) {
    const Facet& f = a.newton.facets[i];
    os << "  " << facet_label(static_cast<int>(i)) << ": normal " << vec_str(f.normal)
       << ", offset " << f.offset.get_str() << (facet_compact(f) ? ", compact" : "") << "\n";
  }
  os << "\nface analysis:\n";
  for (const FaceCheck& fc : a.nnd.faces) {
    os << "  " << face_label(fc.face) << " (dim " << fc.face.dim << "): "
       << initial_form_string(a.form, fc.face, names) << "\n";
    os << "    " << verdict_name(fc.decision.verdict) << " ["
       << reason_name(fc.decision.reason) << "]";
    if (fc.decision.verdict == Verdict::degenerate &&
        (!fc.decision.witness.point.empty() || !fc.decision.witness.approx.empty()))
      os << ", witness " << witness_str(fc.decision.witness);
    os << "\n";
  }
  os << "face verdict: " << (a.nnd.nondegenerate ? "nondegenerate" : "degenerate") << "\n\n";

  auto fan_line = [&](const char* name, const Fan& f) {
    std::set<Vec> rays;
    auto max = f.maximal_cones();
    for (const Cone& c : max)
      for (const Vec& g : c.gens) rays.insert(g);
    os << name << ": " << rays.size() << " rays, " << max.size() << " maximal cones; rays:";
    for (const Vec& r : rays) os << " " << vec_str(r);
    os << "\n";
  };
  fan_line("dual fan", a.dual);
  fan_line("regular refinement", a.regular);

  if (!a.charts.empty()) {
    os << "\ncharts:\n";
    auto ynames = chart_names(a.form.n);
    for (const ChartAnalysis& ca : a.charts) {
      os << "  chart " << ca.index << " (rays";
      for (const Vec& g : ca.cone.gens) os << " " << vec_str(g);
      os << "): adapted; ";
      int bad = 0;
      for (const OrbitCheck& oc : ca.smoothness.orbits)
        if (oc.decision.verdict != Verdict::nondegenerate) ++bad;
      if (bad == 0) {
        os << "all " << ca.smoothness.orbits.size() << " orbits certified\n";
      } else {
        os << bad << " of " << ca.smoothness.orbits.size() << " orbits not certified\n";
        for (const OrbitCheck& oc : ca.smoothness.orbits) {
          if (oc.decision.verdict == Verdict::nondegenerate) continue;
          os << "    orbit {";
          for (size_t s = 0; s < oc.orbit.size(); ++s) {
            if (s) os << ",";
            os << ynames[oc.orbit[s]];
          }
          os << "}: " << verdict_name(oc.decision.verdict) << " ["
             << reason_name(oc.decision.reason) << "]";
          if (!oc.decision.witness.point.empty() || !oc.decision.witness.approx.empty())
            os << ", witness " << witness_str(oc.decision.witness);
          os << "\n";
        }
      }
    }
    os << "log smooth in every chart: " << (a.log_smooth ? "yes" : "no") << "\n";
  }
  return os.str();
}

}  // namespace toricform
