#include "toricform/degeneracy.hpp"

#include <algorithm>
#include <cmath>
#include <random>

#include "toricform/elimination.hpp"

namespace toricform {

std::string verdict_name(Verdict v) {
  switch (v) {
    case Verdict::nondegenerate: return "nondegenerate";
    case Verdict::degenerate: return "degenerate";
    case Verdict::unknown: return "unknown";
  }
  return "?";
}

std::string reason_name(Reason r) {
  switch (r) {
    case Reason::empty_system: return "empty-system";
    case Reason::constant_coefficient: return "constant-coefficient";
    case Reason::monomial_coefficient: return "monomial-coefficient";
    case Reason::univariate_gcd: return "univariate-gcd";
    case Reason::single_polynomial: return "single-polynomial";
    case Reason::elimination: return "elimination";
    case Reason::shared_factor: return "shared-factor";
    case Reason::face_transport: return "face-transport";
    case Reason::witness_transport: return "witness-transport";
    case Reason::numeric_witness: return "numeric-witness";
    case Reason::exhausted: return "exhausted";
  }
  return "?";
}

namespace {

double residual_at(const std::vector<Polynomial>& sys, const std::vector<Cplx>& z) {
  double r = 0;
  for (const auto& p : sys) r = std::max(r, std::abs(p.evaluate(z)));
  return r;
}

// in-place complex Gaussian elimination; false on a (near) singular matrix
bool solve_complex(std::vector<std::vector<Cplx>>& a, std::vector<Cplx>& b) {
  int n = static_cast<int>(a.size());
  for (int col = 0; col < n; ++col) {
    int piv = col;
    for (int r = col + 1; r < n; ++r)
      if (std::abs(a[r][col]) > std::abs(a[piv][col])) piv = r;
    if (std::abs(a[piv][col]) < 1e-13) return false;
    std::swap(a[piv], a[col]);
    std::swap(b[piv], b[col]);
    for (int r = col + 1; r < n; ++r) {
      Cplx f = a[r][col] / a[col][col];
      for (int k = col; k < n; ++k) a[r][k] -= f * a[col][k];
      b[r] -= f * b[col];
    }
  }
  for (int col = n - 1; col >= 0; --col) {
    Cplx s = b[col];
    for (int k = col + 1; k < n; ++k) s -= a[col][k] * b[k];
    b[col] = s / a[col][col];
  }
  return true;
}

std::vector<int> union_active(const std::vector<Polynomial>& polys) {
  std::set<int> s;
  for (const auto& p : polys)
    for (int v : p.active_vars()) s.insert(v);
  return {s.begin(), s.end()};
}

Rat grid_value(long k) {  // 1, -1, 2, -2, 3, ...
  long mag = k / 2 + 1;
  return Rat(Int(k % 2 ? -mag : mag));
}

Polynomial project2(const Polynomial& f, int v0, int v1) {
  Polynomial out(2);
  for (const auto& [e, c] : f.terms) out.add_term({e[v0], e[v1]}, c);
  return out;
}

Witness lift_witness(const Witness& w2, int n, int v0, int v1) {
  Witness w;
  w.exact = w2.exact;
  w.residual = w2.residual;
  if (w2.exact && !w2.point.empty()) {
    w.point.assign(n, Rat(1));
    w.point[v0] = w2.point[0];
    w.point[v1] = w2.point[1];
  } else if (!w2.approx.empty()) {
    w.approx.assign(n, Cplx(1.0, 0.0));
    w.approx[v0] = w2.approx[0];
    w.approx[v1] = w2.approx[1];
  }
  return w;
}

Polynomial swap2(const Polynomial& f) {
  Polynomial out(2);
  for (const auto& [e, c] : f.terms) out.add_term({e[1], e[0]}, c);
  return out;
}

// exact torus witness for one stripped two-variable polynomial, if the grid
// or a linear variable hands us one
std::optional<Witness> single_poly_exact_witness_2(const Polynomial& g) {
  for (int v = 0; v < 2; ++v) {
    if (degree_in(g, v) != 1) continue;
    UniPoly a = coeff_of_power(g, v, Int(1));
    UniPoly b = coeff_of_power(g, v, Int(0));
    for (long k = 0; k < 40; ++k) {
      Rat w0 = grid_value(k);
      Rat av = a.eval(w0);
      if (av == 0) continue;
      Rat v0 = -b.eval(w0) / av;
      if (v0 == 0) continue;
      Witness w;
      w.exact = true;
      w.point.assign(2, Rat(0));
      w.point[v] = v0;
      w.point[1 - v] = w0;
      return w;
    }
  }
  for (long k = 0; k < 40; ++k) {
    Rat x0 = grid_value(k);
    UniPoly h = specialize(g, 0, x0);
    if (h.is_zero()) {
      Witness w;
      w.exact = true;
      w.point = {x0, Rat(1)};
      return w;
    }
    if (h.degree() < 1) continue;
    for (const auto& [r, mult] : split_rational_roots(h.strip_valuation()).roots)
      if (r != 0) {
        Witness w;
        w.exact = true;
        w.point = {x0, r};
        return w;
      }
  }
  return std::nullopt;
}

// decide the fiber over a nonzero rational x0 exactly; true = common nonzero
// root in y exists and a witness was produced
bool fiber_check(const std::vector<Polynomial>& polys, const Rat& x0, Witness& out) {
  std::vector<UniPoly> specs;
  for (const auto& p : polys) {
    UniPoly s = specialize(p, 0, x0);
    if (s.is_zero()) continue;
    if (s.degree() == 0) return false;  // a nonzero constant blocks the fiber
    specs.push_back(std::move(s));
  }
  if (specs.empty()) {
    out.exact = true;
    out.point = {x0, Rat(1)};
    return true;
  }
  UniPoly g = specs[0];
  for (size_t i = 1; i < specs.size(); ++i) g = uni_gcd(g, specs[i]);
  UniPoly gs = g.strip_valuation();
  if (gs.degree() < 1) return false;  // at most y = 0 in common
  for (const auto& [r, mult] : split_rational_roots(gs).roots)
    if (r != 0) {
      out.exact = true;
      out.point = {x0, r};
      return true;
    }
  for (const Cplx& z : uni_roots(gs))
    if (std::abs(z) > 1e-12) {
      out.exact = false;
      out.approx = {Cplx(to_double(x0), 0.0), z};
      return true;  // existence certain; only the witness is approximate
    }
  out.exact = false;  // nonzero roots exist even if none was localized
  return true;
}

// E is a nonzero eliminant in x: every common torus zero kills it
Decision decide_with_candidates(const std::vector<Polynomial>& polys, const UniPoly& e,
                                unsigned long seed, const NumericParams& prm) {
  Decision d;
  RootSplit split = split_rational_roots(e);
  for (const auto& [r, mult] : split.roots) {
    if (r == 0) continue;
    Witness w;
    if (fiber_check(polys, r, w)) {
      d.verdict = Verdict::degenerate;
      d.reason = Reason::elimination;
      d.witness = w;
      return d;
    }
  }
  if (split.remainder.degree() <= 0) {
    d.verdict = Verdict::nondegenerate;
    d.reason = Reason::elimination;
    d.detail = "all eliminant roots lead to empty fibers";
    return d;
  }
  if (auto w = numeric_witness_search(polys, seed, prm)) {
    d.verdict = Verdict::degenerate;
    d.reason = Reason::numeric_witness;
    d.witness = *w;
    return d;
  }
  d.verdict = Verdict::unknown;
  d.reason = Reason::exhausted;
  d.detail = "eliminant keeps an unresolved factor: " + split.remainder.str();
  return d;
}

// stripped nonconstant polynomials in two variables, at least two of them
Decision bivariate_decide(const std::vector<Polynomial>& polys, unsigned long seed,
                          const NumericParams& prm) {
  std::vector<UniPoly> xonly, yonly;
  std::vector<Polynomial> both;
  for (const auto& p : polys) {
    int dx = degree_in(p, 0), dy = degree_in(p, 1);
    if (dy <= 0)
      xonly.push_back(to_univariate(p, 0));
    else if (dx <= 0)
      yonly.push_back(to_univariate(p, 1));
    else
      both.push_back(p);
  }

  if (!xonly.empty()) {
    UniPoly e = xonly[0];
    for (size_t i = 1; i < xonly.size(); ++i) e = uni_gcd(e, xonly[i]);
    if (e.degree() == 0) {
      Decision d;
      d.verdict = Verdict::nondegenerate;
      d.reason = Reason::univariate_gcd;
      d.detail = "one-variable constraints are coprime";
      return d;
    }
    return decide_with_candidates(polys, e, seed, prm);
  }
  if (!yonly.empty()) {
    std::vector<Polynomial> swapped;
    for (const auto& p : polys) swapped.push_back(swap2(p));
    Decision d = bivariate_decide(swapped, seed, prm);
    if (d.witness.exact && d.witness.point.size() == 2)
      std::swap(d.witness.point[0], d.witness.point[1]);
    if (!d.witness.exact && d.witness.approx.size() == 2)
      std::swap(d.witness.approx[0], d.witness.approx[1]);
    return d;
  }

  for (size_t i = 0; i < both.size(); ++i)
    for (size_t j = i + 1; j < both.size(); ++j) {
      UniPoly e = resultant_eliminating_y(both[i], both[j]);
      if (!e.is_zero()) return decide_with_candidates(polys, e, seed, prm);
    }

  // every pairwise resultant vanishes identically
  if (both.size() == 2) {
    Decision d;
    d.verdict = Verdict::degenerate;
    d.reason = Reason::shared_factor;
    d.detail = "the pair shares a factor of positive degree";
    for (long k = 0; k < 40; ++k) {
      Witness w;
      if (fiber_check(polys, grid_value(k), w)) {
        d.witness = w;
        return d;
      }
    }
    if (auto w = numeric_witness_search(polys, seed, prm)) d.witness = *w;
    return d;
  }
  if (auto w = numeric_witness_search(polys, seed, prm)) {
    Decision d;
    d.verdict = Verdict::degenerate;
    d.reason = Reason::numeric_witness;
    d.witness = *w;
    return d;
  }
  Decision d;
  d.verdict = Verdict::unknown;
  d.reason = Reason::exhausted;
  d.detail = "pairwise resultants vanish for three or more polynomials";
  return d;
}

}  // namespace

std::optional<Witness> numeric_witness_search(const std::vector<Polynomial>& system,
                                              unsigned long seed, const NumericParams& prm) {
  std::vector<Polynomial> sys;
  for (const auto& p : system)
    if (!p.is_zero()) sys.push_back(p);
  if (sys.empty()) return std::nullopt;
  int n = sys.front().nvars;
  std::vector<int> active = union_active(sys);
  if (active.empty()) return std::nullopt;
  int d = static_cast<int>(active.size());
  int m = static_cast<int>(sys.size());

  std::vector<std::vector<Polynomial>> ders(m);
  for (int i = 0; i < m; ++i)
    for (int k = 0; k < d; ++k) ders[i].push_back(sys[i].derivative(active[k]));

  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> mag(0.4, 1.8), phase(0.0, 6.283185307179586);

  for (int trial = 0; trial < prm.trials; ++trial) {
    std::vector<Cplx> z(n, Cplx(1.0, 0.0));
    for (int v : active) z[v] = std::polar(mag(rng), phase(rng));
    double res = residual_at(sys, z);
    for (int step = 0; step < prm.steps && res >= prm.tol; ++step) {
      std::vector<std::vector<Cplx>> jac(m, std::vector<Cplx>(d));
      std::vector<Cplx> fv(m);
      for (int i = 0; i < m; ++i) {
        fv[i] = sys[i].evaluate(z);
        for (int k = 0; k < d; ++k) jac[i][k] = ders[i][k].evaluate(z);
      }
      // least squares via normal equations, least norm when underdetermined
      std::vector<Cplx> delta(d, Cplx(0));
      if (m >= d) {
        std::vector<std::vector<Cplx>> a(d, std::vector<Cplx>(d, Cplx(0)));
        std::vector<Cplx> b(d, Cplx(0));
        for (int i = 0; i < m; ++i)
          for (int k = 0; k < d; ++k) {
            b[k] += std::conj(jac[i][k]) * fv[i];
            for (int l = 0; l < d; ++l) a[k][l] += std::conj(jac[i][k]) * jac[i][l];
          }
        if (!solve_complex(a, b)) break;
        delta = std::move(b);
      } else {
        std::vector<std::vector<Cplx>> a(m, std::vector<Cplx>(m, Cplx(0)));
        std::vector<Cplx> b = fv;
        for (int i = 0; i < m; ++i)
          for (int j = 0; j < m; ++j)
            for (int k = 0; k < d; ++k) a[i][j] += jac[i][k] * std::conj(jac[j][k]);
        if (!solve_complex(a, b)) break;
        for (int k = 0; k < d; ++k)
          for (int i = 0; i < m; ++i) delta[k] += std::conj(jac[i][k]) * b[i];
      }
      double lambda = 1.0;
      bool accepted = false;
      while (lambda > 1.0 / 512) {
        std::vector<Cplx> zn = z;
        for (int k = 0; k < d; ++k) zn[active[k]] -= lambda * delta[k];
        double rn = residual_at(sys, zn);
        if (rn < res) {
          z = std::move(zn);
          res = rn;
          accepted = true;
          break;
        }
        lambda /= 2;
      }
      if (!accepted) break;
    }
    if (res < prm.tol) {
      bool on_torus = true;
      for (int v : active)
        if (std::abs(z[v]) < prm.floor) on_torus = false;
      if (!on_torus) continue;
      Witness w;
      w.exact = false;
      w.approx = z;
      w.residual = res;
      return w;
    }
  }
  return std::nullopt;
}

Decision decide_torus_emptiness(const std::vector<Polynomial>& system, unsigned long seed,
                                const NumericParams& prm) {
  Decision d;
  std::vector<Polynomial> polys;
  for (const auto& p : system)
    if (!p.is_zero()) polys.push_back(p);

  if (polys.empty()) {
    int n = system.empty() ? 0 : system.front().nvars;
    d.verdict = Verdict::degenerate;
    d.reason = Reason::empty_system;
    d.witness.exact = true;
    d.witness.point.assign(n, Rat(1));
    return d;
  }
  int n = polys.front().nvars;

  auto finish = [&](Decision dec) {
    if (dec.verdict == Verdict::degenerate && dec.witness.exact && !dec.witness.point.empty()) {
      for (const auto& x : dec.witness.point)
        if (x == 0) throw theorem_violation("exact witness touches a coordinate axis");
      for (const auto& p : polys)
        if (p.evaluate(dec.witness.point) != 0)
          throw theorem_violation("exact witness fails verification");
    }
    if (dec.verdict == Verdict::degenerate && !dec.witness.exact && !dec.witness.approx.empty())
      dec.witness.residual = residual_at(polys, dec.witness.approx);
    return dec;
  };

  for (size_t i = 0; i < polys.size(); ++i)
    if (polys[i].is_monomial()) {
      d.verdict = Verdict::nondegenerate;
      d.reason = polys[i].is_constant() ? Reason::constant_coefficient
                                        : Reason::monomial_coefficient;
      d.detail = "coefficient " + std::to_string(i) + " never vanishes on the torus";
      return d;
    }

  std::vector<Polynomial> stripped;
  for (const auto& p : polys) stripped.push_back(p.strip_content());
  std::vector<int> active = union_active(stripped);

  if (active.size() == 1) {
    int v = active[0];
    UniPoly g = to_univariate(stripped[0], v);
    for (size_t i = 1; i < stripped.size(); ++i) g = uni_gcd(g, to_univariate(stripped[i], v));
    if (g.degree() == 0) {
      d.verdict = Verdict::nondegenerate;
      d.reason = Reason::univariate_gcd;
      d.detail = "single-variable constraints are coprime";
      return d;
    }
    d.verdict = Verdict::degenerate;
    d.reason = Reason::univariate_gcd;
    // content stripping keeps the constant terms nonzero, so no root is zero
    for (const auto& [r, mult] : split_rational_roots(g).roots)
      if (r != 0) {
        d.witness.exact = true;
        d.witness.point.assign(n, Rat(1));
        d.witness.point[v] = r;
        return finish(d);
      }
    for (const Cplx& z : uni_roots(g))
      if (std::abs(z) > 1e-12) {
        d.witness.exact = false;
        d.witness.approx.assign(n, Cplx(1.0, 0.0));
        d.witness.approx[v] = z;
        return finish(d);
      }
    return finish(d);
  }

  if (polys.size() == 1) {
    // a stripped non-monomial polynomial always vanishes somewhere on the
    // torus: its zero set cannot hide inside the coordinate axes
    d.verdict = Verdict::degenerate;
    d.reason = Reason::single_polynomial;
    const Polynomial& g = stripped[0];
    if (active.size() == 2) {
      if (auto w = single_poly_exact_witness_2(project2(g, active[0], active[1])))
        d.witness = lift_witness(*w, n, active[0], active[1]);
    } else {
      for (int v : active) {
        if (degree_in(g, v) != 1 || !d.witness.point.empty()) continue;
        Polynomial a = g.derivative(v);
        Polynomial b = g.set_zero({v});
        for (long k = 0; k < 24 && d.witness.point.empty(); ++k) {
          std::vector<Rat> pt(n, Rat(1));
          for (int u : active)
            if (u != v) pt[u] = grid_value(k);
          Rat av = a.evaluate(pt);
          if (av == 0) continue;
          Rat v0 = -b.evaluate(pt) / av;
          if (v0 == 0) continue;
          pt[v] = v0;
          d.witness.exact = true;
          d.witness.point = pt;
        }
      }
    }
    if (!d.witness.exact || d.witness.point.empty()) {
      if (auto w = numeric_witness_search(stripped, seed, prm)) d.witness = *w;
    }
    return finish(d);
  }

  if (active.size() == 2) {
    std::vector<Polynomial> proj;
    for (const auto& p : stripped) proj.push_back(project2(p, active[0], active[1]));
    Decision sub = bivariate_decide(proj, seed, prm);
    Decision out = sub;
    out.witness = lift_witness(sub.witness, n, active[0], active[1]);
    return finish(out);
  }

  if (auto w = numeric_witness_search(stripped, seed, prm)) {
    d.verdict = Verdict::degenerate;
    d.reason = Reason::numeric_witness;
    d.witness = *w;
    return finish(d);
  }
  d.verdict = Verdict::unknown;
  d.reason = Reason::exhausted;
  d.detail = "no exact strategy applies and the numeric search came up empty";
  return d;
}

NndReport nnd_check(const LogPForm& f, const NewtonPolyhedron& np, unsigned long seed,
                    const NumericParams& prm) {
  validate(f);
  NndReport rep;
  rep.nondegenerate = true;
  unsigned long idx = 0;
  for (const auto& face : np.all_faces()) {
    FaceCheck fc;
    fc.face = face;
    std::vector<Polynomial> sys;
    bool any = false;
    for (const auto& [j, fj] : f.coeffs) {
      Polynomial r = fj.restrict_to(face.points);
      if (!r.is_zero()) any = true;
      sys.push_back(r);
      fc.restricted.emplace(j, std::move(r));
    }
    if (!any) throw theorem_violation("face restriction lost every coefficient");
    fc.decision = decide_torus_emptiness(sys, seed + 977 * idx, prm);
    if (fc.decision.verdict != Verdict::nondegenerate) rep.nondegenerate = false;
    rep.faces.push_back(std::move(fc));
    ++idx;
  }
  return rep;
}

const FaceCheck* find_face(const NndReport& r, const std::vector<int>& active) {
  for (const auto& fc : r.faces)
    if (fc.face.active == active) return &fc;
  return nullptr;
}

ChartSmoothness log_smooth_check(const ChartPullback& pb, const NewtonPolyhedron& np,
                                 const NndReport& nnd, unsigned long seed,
                                 const NumericParams& prm) {
  int n = pb.n;
  ChartSmoothness out;
  out.log_smooth = true;
  IntMat minv = unimodular_inverse(pb.chart.m);

  for (size_t mask = 0; mask < (size_t(1) << n); ++mask) {
    OrbitCheck oc;
    for (int k = 0; k < n; ++k)
      if (mask & (size_t(1) << k)) oc.orbit.push_back(k);

    // face of the polyhedron minimized by the pinned chart directions
    Vec w(n, Int(0));
    Int tsum = 0;
    for (int k : oc.orbit) {
      for (int j = 0; j < n; ++j) w[j] += pb.chart.m.a[j][k];
      tsum += pb.chart.t[k];
    }
    if (np.min_along(w) != tsum)
      throw theorem_violation("pinned chart directions do not meet in a face");
    Face face = np.face_minimized_by(w);
    const FaceCheck* fc = find_face(nnd, face.active);
    if (!fc) throw theorem_violation("matching face missing from the face analysis");

    if (fc->decision.verdict == Verdict::nondegenerate) {
      oc.decision.verdict = Verdict::nondegenerate;
      oc.decision.reason = Reason::face_transport;
      oc.decision.detail = "inherited from the matching face certificate";
    } else if (oc.orbit.empty() && fc->decision.verdict == Verdict::degenerate &&
               fc->decision.witness.exact && !fc->decision.witness.point.empty()) {
      // carry the body witness through the inverse of the chart matrix
      std::vector<Rat> c(n, Rat(1));
      for (int k = 0; k < n; ++k)
        for (int j = 0; j < n; ++j) c[k] *= pow_rat(fc->decision.witness.point[j], minv.a[k][j]);
      for (const auto& [kk, coeff] : pb.coeffs)
        if (coeff.evaluate(c) != 0)
          throw theorem_violation("transported witness fails to annihilate the chart");
      oc.decision.verdict = Verdict::degenerate;
      oc.decision.reason = Reason::witness_transport;
      oc.decision.witness.exact = true;
      oc.decision.witness.point = std::move(c);
    } else {
      std::vector<Polynomial> sys;
      bool any = false;
      for (const auto& [kk, coeff] : pb.coeffs) {
        Polynomial r = coeff.set_zero(oc.orbit);
        if (!r.is_zero()) any = true;
        sys.push_back(std::move(r));
      }
      if (!any) throw theorem_violation("orbit system vanished identically");
      oc.decision = decide_torus_emptiness(sys, seed + 31 * mask + 7, prm);
      if (oc.decision.verdict == Verdict::degenerate) {
        for (int k : oc.orbit) {
          if (oc.decision.witness.exact && !oc.decision.witness.point.empty())
            oc.decision.witness.point[k] = 0;
          if (!oc.decision.witness.exact && !oc.decision.witness.approx.empty())
            oc.decision.witness.approx[k] = 0;
        }
      }
    }
    if (oc.decision.verdict != Verdict::nondegenerate) out.log_smooth = false;
    out.orbits.push_back(std::move(oc));
  }
  return out;
}

}  // namespace toricform
