#include "toricform/svg.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "toricform/report.hpp"

namespace toricform {

namespace {

struct Panel {
  double ox, oy, scale;  // lattice origin in svg coordinates, pixels per unit

  double x(double u) const { return ox + scale * u; }
  double y(double v) const { return oy - scale * v; }
};

std::string num(double v) {
  std::ostringstream os;
  os.precision(2);
  os << std::fixed << v;
  return os.str();
}

void line(std::ostringstream& os, const Panel& p, double x1, double y1, double x2, double y2,
          const std::string& style) {
  os << "<line x1=\"" << num(p.x(x1)) << "\" y1=\"" << num(p.y(y1)) << "\" x2=\""
     << num(p.x(x2)) << "\" y2=\"" << num(p.y(y2)) << "\" " << style << "/>\n";
}

void text(std::ostringstream& os, const Panel& p, double x, double y, const std::string& s,
          const std::string& extra = "") {
  os << "<text x=\"" << num(p.x(x)) << "\" y=\"" << num(p.y(y)) << "\" font-size=\"12\" "
     << "font-family=\"monospace\" " << extra << ">" << s << "</text>\n";
}

double to_d(const Int& v) { return v.get_d(); }

}  // namespace

std::string svg_picture(const Analysis& a, const std::vector<std::string>& names) {
  if (a.form.n != 2) throw input_error("svg output is only available for two variables");

  auto supp = support(a.form);
  double hi = 1.0;
  for (const Exp& e : supp) hi = std::max({hi, to_d(e[0]), to_d(e[1])});
  double reach = hi + 1.5;  // how far rays and the shaded region extend

  std::ostringstream os;
  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"780\" height=\"420\" "
        "viewBox=\"0 0 780 420\">\n";
  os << "<rect width=\"780\" height=\"420\" fill=\"white\"/>\n";

  // left panel: the Newton polygon
  Panel np{50.0, 370.0, 320.0 / reach};
  os << "<text x=\"50\" y=\"28\" font-size=\"14\" font-family=\"monospace\">newton "
        "polyhedron</text>\n";

  // vertices in boundary order, top-left to bottom-right
  std::vector<Exp> verts;
  for (const FaceCheck& fc : a.nnd.faces)
    if (fc.face.is_vertex()) verts.push_back(*fc.face.points.begin());
  std::sort(verts.begin(), verts.end(), [](const Exp& u, const Exp& v) {
    return u[0] != v[0] ? u[0] < v[0] : u[1] > v[1];
  });

  if (!verts.empty()) {
    std::ostringstream path;
    const Exp& first = verts.front();
    const Exp& last = verts.back();
    path << "M " << num(np.x(to_d(first[0]))) << " " << num(np.y(reach));
    for (const Exp& v : verts)
      path << " L " << num(np.x(to_d(v[0]))) << " " << num(np.y(to_d(v[1])));
    path << " L " << num(np.x(reach)) << " " << num(np.y(to_d(last[1])));
    path << " L " << num(np.x(reach)) << " " << num(np.y(reach)) << " Z";
    os << "<path d=\"" << path.str() << "\" fill=\"#9db8e8\" fill-opacity=\"0.45\" "
          "stroke=\"none\"/>\n";
  }

  // axes
  line(os, np, 0, 0, reach, 0, "stroke=\"black\" stroke-width=\"1\"");
  line(os, np, 0, 0, 0, reach, "stroke=\"black\" stroke-width=\"1\"");
  text(os, np, reach - 0.2, -0.45, names[0]);
  text(os, np, -0.35, reach - 0.2, names[1]);

  // facet segments and rays with their labels
  for (size_t i = 0; i < a.newton.facets.size(); ++i) {
    const Face* face = nullptr;
    for (const FaceCheck& fc : a.nnd.faces)
      if (fc.face.active == std::vector<int>{static_cast<int>(i)}) face = &fc.face;
    if (!face) continue;
    std::vector<Exp> pts(face->points.begin(), face->points.end());
    std::sort(pts.begin(), pts.end(), [](const Exp& u, const Exp& v) { return u[0] < v[0]; });
    double lx, ly;
    if (face->rec.empty() && pts.size() >= 2) {
      const Exp& u = pts.front();
      const Exp& v = pts.back();
      line(os, np, to_d(u[0]), to_d(u[1]), to_d(v[0]), to_d(v[1]),
           "stroke=\"#b03030\" stroke-width=\"2.5\"");
      lx = (to_d(u[0]) + to_d(v[0])) / 2 + 0.15;
      ly = (to_d(u[1]) + to_d(v[1])) / 2 + 0.15;
    } else {
      const Exp& u = pts.front();
      double dx = face->rec.empty() ? 0 : (face->rec[0] == 0 ? 1 : 0);
      double dy = face->rec.empty() ? 0 : (face->rec[0] == 1 ? 1 : 0);
      line(os, np, to_d(u[0]), to_d(u[1]), to_d(u[0]) + dx * (reach - to_d(u[0])),
           to_d(u[1]) + dy * (reach - to_d(u[1])), "stroke=\"#3050b0\" stroke-width=\"2.5\"");
      lx = to_d(u[0]) + dx * 1.1 + 0.15;
      ly = to_d(u[1]) + dy * 1.1 + 0.15;
    }
    text(os, np, lx, ly, facet_label(static_cast<int>(i)), "fill=\"#333\"");
  }

  // support points
  for (const Exp& e : supp) {
    os << "<circle cx=\"" << num(np.x(to_d(e[0]))) << "\" cy=\"" << num(np.y(to_d(e[1])))
       << "\" r=\"4\" fill=\"black\"/>\n";
    text(os, np, to_d(e[0]) + 0.12, to_d(e[1]) - 0.35,
         "(" + e[0].get_str() + "," + e[1].get_str() + ")");
  }

  // right panel: dual fan plus refinement
  Panel fp{440.0, 370.0, 300.0};
  os << "<text x=\"440\" y=\"28\" font-size=\"14\" font-family=\"monospace\">dual fan and "
        "refinement</text>\n";

  auto ray_tip = [](const Vec& r) {
    double x = to_d(r[0]), y = to_d(r[1]);
    double len = std::hypot(x, y);
    return std::pair<double, double>{x / len, y / len};
  };

  std::set<Vec> coarse;
  for (const Cone& c : a.dual.maximal_cones())
    for (const Vec& g : c.gens) coarse.insert(g);
  std::set<Vec> fine;
  for (const Cone& c : a.regular.maximal_cones())
    for (const Vec& g : c.gens) fine.insert(g);

  int shade = 0;
  for (const Cone& c : a.regular.maximal_cones()) {
    if (c.gens.size() != 2) continue;
    auto [x1, y1] = ray_tip(c.gens[0]);
    auto [x2, y2] = ray_tip(c.gens[1]);
    os << "<path d=\"M " << num(fp.x(0)) << " " << num(fp.y(0)) << " L " << num(fp.x(x1)) << " "
       << num(fp.y(y1)) << " L " << num(fp.x(x2)) << " " << num(fp.y(y2)) << " Z\" fill=\""
       << (shade++ % 2 ? "#d8e4f8" : "#eef2fb") << "\" stroke=\"none\"/>\n";
  }
  for (const Vec& r : fine) {
    auto [x, y] = ray_tip(r);
    bool added = !coarse.count(r);
    line(os, fp, 0, 0, x, y,
         added ? "stroke=\"#b03030\" stroke-width=\"2\" stroke-dasharray=\"6 4\""
               : "stroke=\"#203060\" stroke-width=\"2\"");
    text(os, fp, x * 1.07 - 0.02, y * 1.07, "(" + r[0].get_str() + "," + r[1].get_str() + ")");
  }
  os << "</svg>\n";
  return os.str();
}

}  // namespace toricform
