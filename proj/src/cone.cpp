#include "toricform/cone.hpp"

#include <algorithm>
#include <cassert>
#include <set>
#include <sstream>

namespace toricform {

namespace {

// h with <h, s> = 0 for all s in subset and h in the span (orthogonal to all
// eqs); returns empty when that space is not a line.
Vec hyperplane_normal(int n, const std::vector<Vec>& subset, const std::vector<Vec>& eqs) {
  std::vector<Vec> rows = subset;
  rows.insert(rows.end(), eqs.begin(), eqs.end());
  if (rows.empty()) return Vec();  // handled by caller
  auto k = kernel_basis(from_rows(rows, n));
  if (k.size() != 1) return Vec();
  return k[0];
}

void subsets_rec(const std::vector<Vec>& pool, size_t start, int want, std::vector<Vec>& cur,
                 std::vector<std::vector<Vec>>& out) {
  if (want == 0) {
    out.push_back(cur);
    return;
  }
  for (size_t i = start; i + want <= pool.size(); ++i) {
    cur.push_back(pool[i]);
    subsets_rec(pool, i + 1, want - 1, cur, out);
    cur.pop_back();
  }
}

std::vector<std::vector<Vec>> subsets_of(const std::vector<Vec>& pool, int k) {
  std::vector<std::vector<Vec>> out;
  std::vector<Vec> cur;
  subsets_rec(pool, 0, k, cur, out);
  return out;
}

}  // namespace

Cone Cone::origin(int n) {
  Cone c;
  c.n = n;
  c.dim = 0;
  for (int i = 0; i < n; ++i) {
    Vec e(n, Int(0));
    e[i] = 1;
    c.eqs.push_back(e);
  }
  return c;
}

Cone Cone::from_generators(int n, const std::vector<Vec>& raw) {
  std::set<Vec> cleaned;
  for (const auto& v : raw) {
    assert(static_cast<int>(v.size()) == n);
    if (is_zero(v)) continue;
    cleaned.insert(primitive(v));
  }
  if (cleaned.empty()) return origin(n);
  std::vector<Vec> g(cleaned.begin(), cleaned.end());

  Cone c;
  c.n = n;
  c.eqs = kernel_basis(from_rows(g, n));
  c.dim = n - static_cast<int>(c.eqs.size());

  // candidate facet normals from (dim-1)-subsets of the generators
  std::set<Vec> ineq_set;
  if (c.dim == 1) {
    ineq_set.insert(g[0]);  // half-line: forward direction
  } else {
    for (const auto& sub : subsets_of(g, c.dim - 1)) {
      Vec h = hyperplane_normal(n, sub, c.eqs);
      if (h.empty()) continue;
      bool pos = false, neg = false;
      for (const auto& v : g) {
        Int s = dot(h, v);
        if (s > 0) pos = true;
        if (s < 0) neg = true;
      }
      if (pos && neg) continue;
      if (neg)
        for (auto& x : h) x = -x;
      ineq_set.insert(h);
    }
  }
  c.ineqs.assign(ineq_set.begin(), ineq_set.end());

  // strong convexity: no nonzero vector satisfies every constraint with equality,
  // and the derived constraints must not cut away any generator (a line would)
  std::vector<Vec> all = c.ineqs;
  all.insert(all.end(), c.eqs.begin(), c.eqs.end());
  if (rank(from_rows(all, n)) != n) throw input_error("cone is not strongly convex");
  for (const auto& v : g)
    if (!c.contains(v)) throw input_error("cone is not strongly convex");

  // keep generators whose tight constraints cut a line
  for (const auto& v : g) {
    std::vector<Vec> tight = c.eqs;
    for (const auto& h : c.ineqs)
      if (dot(h, v) == 0) tight.push_back(h);
    if (rank(from_rows(tight, n)) == n - 1) c.gens.push_back(v);
  }
  std::sort(c.gens.begin(), c.gens.end());
  return c;
}

bool Cone::contains(const Vec& x) const {
  for (const auto& e : eqs)
    if (dot(e, x) != 0) return false;
  for (const auto& h : ineqs)
    if (dot(h, x) < 0) return false;
  return true;
}

bool Cone::contains_in_relint(const Vec& x) const {
  for (const auto& e : eqs)
    if (dot(e, x) != 0) return false;
  for (const auto& h : ineqs)
    if (dot(h, x) <= 0) return false;
  return true;
}

bool Cone::contains_cone(const Cone& o) const {
  if (o.dim == 0) return true;
  for (const auto& g : o.gens)
    if (!contains(g)) return false;
  return true;
}

std::vector<Cone> Cone::faces() const {
  std::set<Cone> out;
  out.insert(Cone::origin(n));
  size_t m = ineqs.size();
  if (m > 20) throw input_error("too many facet inequalities for face enumeration");
  for (size_t mask = 0; mask < (size_t(1) << m); ++mask) {
    std::vector<Vec> kept;
    for (const auto& v : gens) {
      bool ok = true;
      for (size_t i = 0; i < m && ok; ++i)
        if (mask & (size_t(1) << i)) ok = dot(ineqs[i], v) == 0;
      if (ok) kept.push_back(v);
    }
    out.insert(Cone::from_generators(n, kept));
  }
  return std::vector<Cone>(out.begin(), out.end());
}

std::vector<Cone> Cone::facets() const {
  std::set<Cone> out;
  for (const auto& h : ineqs) {
    std::vector<Vec> kept;
    for (const auto& v : gens)
      if (dot(h, v) == 0) kept.push_back(v);
    Cone f = Cone::from_generators(n, kept);
    if (f.dim == dim - 1) out.insert(f);
  }
  return std::vector<Cone>(out.begin(), out.end());
}

std::string Cone::str() const {
  std::ostringstream os;
  os << "<";
  for (size_t i = 0; i < gens.size(); ++i) {
    if (i) os << ", ";
    os << "(";
    for (size_t j = 0; j < gens[i].size(); ++j) {
      if (j) os << ",";
      os << gens[i][j].get_str();
    }
    os << ")";
  }
  os << ">";
  return os.str();
}

Int multiplicity(const Cone& c) {
  if (!c.is_simplicial()) throw input_error("multiplicity requires a simplicial cone");
  if (c.dim == 0) return Int(1);
  auto divs = elementary_divisors(from_columns(c.gens, c.n));
  if (divs.size() != c.gens.size()) throw theorem_violation("degenerate simplicial cone");
  Int m = 1;
  for (const auto& d : divs) m *= d;
  return m;
}

std::vector<Vec> extreme_rays_of_system(int n, const std::vector<Vec>& ineqs,
                                        const std::vector<Vec>& eqs) {
  int d = n - rank(from_rows(eqs.empty() ? std::vector<Vec>{Vec(n, Int(0))} : eqs, n));
  std::set<Vec> rays;
  if (d == 0) return {};
  auto satisfied = [&](const Vec& r) {
    for (const auto& e : eqs)
      if (dot(e, r) != 0) return false;
    for (const auto& h : ineqs)
      if (dot(h, r) < 0) return false;
    return true;
  };
  // an extreme ray lies on tight constraints of rank n - 1; all the span
  // equations count, so d - 1 inequalities complete the cut
  for (const auto& sub : subsets_of(ineqs, d - 1)) {
    std::vector<Vec> rows = sub;
    rows.insert(rows.end(), eqs.begin(), eqs.end());
    if (rows.empty()) {
      if (n == 1) {
        Vec r(1, Int(1));
        if (satisfied(r)) rays.insert(r);
        r[0] = -1;
        if (satisfied(r)) rays.insert(r);
      }
      continue;
    }
    auto kern = kernel_basis(from_rows(rows, n));
    if (kern.size() != 1) continue;
    Vec r = kern[0];
    if (satisfied(r)) rays.insert(r);
    for (auto& x : r) x = -x;
    if (satisfied(r)) rays.insert(r);
  }
  return std::vector<Vec>(rays.begin(), rays.end());
}

std::vector<Vec> intersection_rays(const Cone& a, const Cone& b) {
  std::vector<Vec> ineqs = a.ineqs;
  ineqs.insert(ineqs.end(), b.ineqs.begin(), b.ineqs.end());
  std::vector<Vec> eqs = a.eqs;
  eqs.insert(eqs.end(), b.eqs.begin(), b.eqs.end());
  return extreme_rays_of_system(a.n, ineqs, eqs);
}

}  // namespace toricform
