#include "toricform/newton.hpp"

#include <algorithm>
#include <map>

namespace toricform {

namespace {

Vec unit(int n, int i) {
  Vec e(n, Int(0));
  e[i] = 1;
  return e;
}

void direction_subsets(const std::vector<Vec>& pool, size_t start, int want,
                       std::vector<Vec>& cur, std::vector<std::vector<Vec>>& out) {
  if (want == 0) {
    out.push_back(cur);
    return;
  }
  for (size_t i = start; i + want <= pool.size(); ++i) {
    cur.push_back(pool[i]);
    direction_subsets(pool, i + 1, want - 1, cur, out);
    cur.pop_back();
  }
}

// facets in boundary order for the plane, lexicographic beyond
bool facet_before(int n, const Facet& a, const Facet& b) {
  if (n == 2) {
    Int cross = a.normal[0] * b.normal[1] - a.normal[1] * b.normal[0];
    if (cross != 0) return cross > 0;
  }
  return std::tie(a.normal, a.offset) < std::tie(b.normal, b.offset);
}

}  // namespace

NewtonPolyhedron NewtonPolyhedron::build(int n, const std::set<Exp>& support) {
  if (support.empty()) throw input_error("empty support has no Newton polyhedron");
  for (const auto& e : support) {
    if (static_cast<int>(e.size()) != n) throw input_error("support point of wrong length");
    for (const auto& x : e)
      if (x < 0) throw input_error("support point with a negative exponent");
  }

  NewtonPolyhedron np;
  np.n = n;
  np.support = support;

  // every facet hyperplane is spanned by point differences and orthant axes
  std::set<Vec> pool_set;
  std::vector<Exp> pts(support.begin(), support.end());
  for (size_t i = 0; i < pts.size(); ++i)
    for (size_t j = i + 1; j < pts.size(); ++j) {
      Vec d(n);
      for (int k = 0; k < n; ++k) d[k] = pts[i][k] - pts[j][k];
      if (!is_zero(d)) pool_set.insert(primitive(d));
    }
  for (int i = 0; i < n; ++i) pool_set.insert(unit(n, i));
  std::vector<Vec> pool(pool_set.begin(), pool_set.end());

  std::set<Vec> seen;
  std::vector<std::vector<Vec>> subs;
  std::vector<Vec> cur;
  direction_subsets(pool, 0, n - 1, cur, subs);
  for (const auto& sub : subs) {
    auto kern = kernel_basis(from_rows(sub, n));
    if (kern.size() != 1) continue;
    Vec v = kern[0];
    bool pos = false, neg = false;
    for (const auto& x : v) {
      if (x > 0) pos = true;
      if (x < 0) neg = true;
    }
    if (pos && neg) continue;
    if (neg)
      for (auto& x : v) x = -x;
    if (seen.count(v)) continue;

    Int t = dot(v, pts[0]);
    for (const auto& p : pts) t = std::min(t, dot(v, p));
    std::vector<Exp> argmin;
    for (const auto& p : pts)
      if (dot(v, p) == t) argmin.push_back(p);

    // the candidate supports a facet when its tight set has dimension n - 1
    std::vector<Vec> span;
    for (size_t i = 1; i < argmin.size(); ++i) {
      Vec d(n);
      for (int k = 0; k < n; ++k) d[k] = argmin[i][k] - argmin[0][k];
      span.push_back(d);
    }
    for (int k = 0; k < n; ++k)
      if (v[k] == 0) span.push_back(unit(n, k));
    if (span.empty() || rank(from_rows(span, n)) != n - 1) continue;

    seen.insert(v);
    np.facets.push_back(Facet{v, t});
  }

  std::sort(np.facets.begin(), np.facets.end(),
            [n](const Facet& a, const Facet& b) { return facet_before(n, a, b); });
  return np;
}

bool NewtonPolyhedron::contains(const Exp& e) const {
  for (const auto& f : facets)
    if (dot(f.normal, e) < f.offset) return false;
  return true;
}

std::vector<int> NewtonPolyhedron::tight_facets(const Exp& e) const {
  std::vector<int> out;
  for (size_t i = 0; i < facets.size(); ++i)
    if (dot(facets[i].normal, e) == facets[i].offset) out.push_back(static_cast<int>(i));
  return out;
}

bool NewtonPolyhedron::on_boundary(const Exp& e) const {
  return contains(e) && !tight_facets(e).empty();
}

Int NewtonPolyhedron::min_along(const Vec& v) const {
  for (const auto& x : v)
    if (x < 0) throw input_error("minimization direction outside the positive orthant");
  bool first = true;
  Int t = 0;
  for (const auto& p : support) {
    Int s = dot(v, p);
    if (first || s < t) t = s;
    first = false;
  }
  return t;
}

namespace {

Face assemble_face(const NewtonPolyhedron& np, const std::set<Exp>& pts,
                   const std::vector<int>& rec) {
  Face f;
  f.points = pts;
  f.rec = rec;
  for (size_t i = 0; i < np.facets.size(); ++i) {
    const auto& fc = np.facets[i];
    bool tight = true;
    for (const auto& p : pts)
      if (dot(fc.normal, p) != fc.offset) {
        tight = false;
        break;
      }
    for (int a : rec)
      if (fc.normal[a] != 0) tight = false;
    if (tight) f.active.push_back(static_cast<int>(i));
  }
  std::vector<Vec> span;
  const Exp& base = *pts.begin();
  for (const auto& p : pts) {
    Vec d(np.n);
    for (int k = 0; k < np.n; ++k) d[k] = p[k] - base[k];
    if (!is_zero(d)) span.push_back(d);
  }
  for (int a : rec) {
    Vec e(np.n, Int(0));
    e[a] = 1;
    span.push_back(e);
  }
  f.dim = span.empty() ? 0 : rank(from_rows(span, np.n));
  return f;
}

}  // namespace

Face NewtonPolyhedron::whole_face() const {
  std::vector<int> rec;
  for (int i = 0; i < n; ++i) rec.push_back(i);
  return assemble_face(*this, support, rec);
}

Face NewtonPolyhedron::face_minimized_by(const Vec& v) const {
  Int t = min_along(v);
  std::set<Exp> pts;
  for (const auto& p : support)
    if (dot(v, p) == t) pts.insert(p);
  std::vector<int> rec;
  for (int i = 0; i < n; ++i)
    if (v[i] == 0) rec.push_back(i);
  return assemble_face(*this, pts, rec);
}

std::vector<Face> NewtonPolyhedron::all_faces() const {
  size_t m = facets.size();
  if (m > 20) throw input_error("too many facets for face enumeration");
  std::map<std::vector<int>, Face> by_key;
  for (size_t mask = 0; mask < (size_t(1) << m); ++mask) {
    std::set<Exp> pts;
    for (const auto& p : support) {
      bool ok = true;
      for (size_t i = 0; i < m && ok; ++i)
        if (mask & (size_t(1) << i))
          ok = dot(facets[i].normal, p) == facets[i].offset;
      if (ok) pts.insert(p);
    }
    if (pts.empty()) continue;
    std::vector<int> rec;
    for (int a = 0; a < n; ++a) {
      bool zero = true;
      for (size_t i = 0; i < m && zero; ++i)
        if (mask & (size_t(1) << i)) zero = facets[i].normal[a] == 0;
      if (zero) rec.push_back(a);
    }
    Face f = assemble_face(*this, pts, rec);
    by_key.emplace(f.active, std::move(f));
  }
  std::vector<Face> out;
  for (auto& [key, f] : by_key) out.push_back(std::move(f));
  std::sort(out.begin(), out.end(), [](const Face& a, const Face& b) {
    if (a.dim != b.dim) return a.dim > b.dim;
    return a.active < b.active;
  });
  return out;
}

Fan NewtonPolyhedron::dual_fan() const {
  std::vector<Cone> max;
  for (const auto& f : all_faces()) {
    if (!f.is_vertex()) continue;
    std::vector<Vec> gens;
    for (int i : f.active) gens.push_back(facets[i].normal);
    max.push_back(Cone::from_generators(n, gens));
  }
  if (max.empty()) throw theorem_violation("polyhedron without a vertex");
  return Fan::from_maximal(n, max);
}

}  // namespace toricform
