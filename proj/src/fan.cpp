#include "toricform/fan.hpp"

#include <algorithm>
#include <cassert>
#include <random>

namespace toricform {

Fan Fan::from_maximal(int n, const std::vector<Cone>& max) {
  Fan f;
  f.n = n;
  for (const auto& c : max)
    for (const auto& face : c.faces()) f.cones.insert(face);
  if (f.cones.empty()) f.cones.insert(Cone::origin(n));
  return f;
}

std::vector<Cone> Fan::maximal_cones() const {
  std::vector<Cone> out;
  for (const auto& c : cones) {
    bool maximal = true;
    for (const auto& d : cones) {
      if (c == d) continue;
      if (d.contains_cone(c)) {
        maximal = false;
        break;
      }
    }
    if (maximal) out.push_back(c);
  }
  return out;
}

bool Fan::supports(const Vec& x) const {
  for (const auto& c : cones)
    if (c.contains(x)) return true;
  return false;
}

void check_fan(const Fan& f) {
  for (const auto& c : f.cones) {
    if (c.n != f.n) throw theorem_violation("fan member in wrong ambient space");
    for (const auto& face : c.faces())
      if (!f.cones.count(face)) throw theorem_violation("fan misses a face of " + c.str());
  }
  std::vector<Cone> list(f.cones.begin(), f.cones.end());
  for (size_t i = 0; i < list.size(); ++i)
    for (size_t j = i + 1; j < list.size(); ++j) {
      Cone inter = Cone::from_generators(f.n, intersection_rays(list[i], list[j]));
      // the face of `big` cut out by every inequality that is tight across the
      // whole intersection; equality with `inter` on both sides certifies the axiom
      auto face_through = [&](const Cone& big) {
        std::vector<Vec> tight_ineqs;
        for (const auto& h : big.ineqs) {
          bool tight = true;
          for (const auto& r : inter.gens)
            if (dot(h, r) != 0) {
              tight = false;
              break;
            }
          if (tight) tight_ineqs.push_back(h);
        }
        std::vector<Vec> kept;
        for (const auto& g : big.gens) {
          bool on_face = true;
          for (const auto& h : tight_ineqs)
            if (dot(h, g) != 0) {
              on_face = false;
              break;
            }
          if (on_face) kept.push_back(g);
        }
        return Cone::from_generators(f.n, kept);
      };
      if (face_through(list[i]) != inter || face_through(list[j]) != inter)
        throw theorem_violation("intersection of " + list[i].str() + " and " + list[j].str() +
                                " is not a common face");
    }
}

namespace {

std::vector<Cone> triangulate_cone(const Cone& c) {
  if (c.is_simplicial()) return {c};
  Vec w = c.gens.front();  // lexicographically least ray
  std::vector<Cone> out;
  for (const auto& facet : c.facets()) {
    bool has_w = std::find(facet.gens.begin(), facet.gens.end(), w) != facet.gens.end();
    if (has_w) continue;
    for (const auto& piece : triangulate_cone(facet)) {
      std::vector<Vec> g = piece.gens;
      g.push_back(w);
      out.push_back(Cone::from_generators(c.n, g));
    }
  }
  return out;
}

}  // namespace

Fan triangulate(const Fan& f) {
  std::vector<Cone> max;
  for (const auto& c : f.maximal_cones())
    for (const auto& piece : triangulate_cone(c)) max.push_back(piece);
  return Fan::from_maximal(f.n, max);
}

Vec parallelepiped_point(const Cone& c) {
  Int m = multiplicity(c);
  if (m <= 1) throw input_error("cone is already unimodular");
  int d = c.dim;
  if (!m.fits_ulong_p()) throw input_error("multiplicity too large");
  unsigned long mm = m.get_ui();
  double budget = 1;
  for (int i = 0; i < d; ++i) {
    budget *= static_cast<double>(mm);
    if (budget > 2e7) throw input_error("parallelepiped enumeration too large");
  }
  // lattice points are sums (c_i / m) g_i with integer c_i in [0, m)
  std::vector<unsigned long> cnt(d, 0);
  Vec best;
  Int best_sum = 0;
  while (true) {
    bool nonzero = false;
    for (auto v : cnt) nonzero = nonzero || v != 0;
    if (nonzero) {
      Vec num(c.n, Int(0));
      for (int i = 0; i < d; ++i)
        for (int j = 0; j < c.n; ++j) num[j] += Int(cnt[i]) * c.gens[i][j];
      bool integral = true;
      for (const auto& x : num)
        if (x % m != 0) {
          integral = false;
          break;
        }
      if (integral) {
        Int s = 0;
        for (auto v : cnt) s += Int(v);
        Vec w(c.n);
        for (int j = 0; j < c.n; ++j) w[j] = num[j] / m;
        if (best.empty() || s < best_sum || (s == best_sum && w < best)) {
          best = w;
          best_sum = s;
        }
      }
    }
    int i = d - 1;
    while (i >= 0 && cnt[i] == mm - 1) {
      cnt[i] = 0;
      --i;
    }
    if (i < 0) break;
    ++cnt[i];
  }
  if (best.empty()) throw theorem_violation("no parallelepiped point despite multiplicity > 1");
  return primitive(best);
}

namespace {

Int refine_metric(const std::vector<Cone>& max) {
  Int s = 0;
  for (const auto& c : max) s += multiplicity(c) - 1;
  return s;
}

}  // namespace

Fan regularize(const Fan& f) {
  std::vector<Cone> max = f.maximal_cones();
  for (const auto& c : max)
    if (!c.is_simplicial()) throw input_error("regularize requires a simplicial fan");

  Int metric = refine_metric(max);
  while (true) {
    // worst offender: highest multiplicity, canonical order breaking ties
    const Cone* worst = nullptr;
    Int worst_mult = 1;
    for (const auto& c : max) {
      Int m = multiplicity(c);
      if (m > worst_mult) {
        worst_mult = m;
        worst = &c;
      }
    }
    if (!worst) break;

    Vec w = parallelepiped_point(*worst);

    // minimal supporting face: the generators with positive coordinates in
    // the simplicial cone that holds w in its relative interior
    std::vector<Vec> fmin;
    for (const auto& c : max) {
      if (!c.contains(w)) continue;
      std::vector<Vec> cols = c.gens;
      // solve sum l_i g_i = w exactly
      std::vector<std::vector<Rat>> a(c.n, std::vector<Rat>(cols.size() + 1));
      for (int i = 0; i < c.n; ++i) {
        for (size_t j = 0; j < cols.size(); ++j) a[i][j] = Rat(cols[j][i]);
        a[i][cols.size()] = Rat(w[i]);
      }
      int r = 0;
      std::vector<int> pivot(cols.size(), -1);
      for (size_t col = 0; col < cols.size() && r < c.n; ++col) {
        int piv = -1;
        for (int i = r; i < c.n; ++i)
          if (a[i][col] != 0) {
            piv = i;
            break;
          }
        if (piv < 0) continue;
        std::swap(a[piv], a[r]);
        Rat p = a[r][col];
        for (auto& x : a[r]) x /= p;
        for (int i = 0; i < c.n; ++i) {
          if (i == r || a[i][col] == 0) continue;
          Rat fmul = a[i][col];
          for (size_t jj = 0; jj <= cols.size(); ++jj) a[i][jj] -= fmul * a[r][jj];
        }
        pivot[col] = r;
        ++r;
      }
      fmin.clear();
      for (size_t j = 0; j < cols.size(); ++j) {
        Rat lj = pivot[j] >= 0 ? a[pivot[j]][cols.size()] : Rat(0);
        if (lj < 0) throw theorem_violation("membership with negative coordinate");
        if (lj > 0) fmin.push_back(cols[j]);
      }
      break;
    }
    if (fmin.empty()) throw theorem_violation("parallelepiped point escaped its cone");

    std::vector<Cone> next;
    for (const auto& c : max) {
      bool contains_face = true;
      for (const auto& g : fmin)
        if (std::find(c.gens.begin(), c.gens.end(), g) == c.gens.end()) {
          contains_face = false;
          break;
        }
      if (!contains_face) {
        next.push_back(c);
        continue;
      }
      for (const auto& drop : fmin) {
        std::vector<Vec> g;
        for (const auto& x : c.gens)
          if (x != drop) g.push_back(x);
        g.push_back(w);
        next.push_back(Cone::from_generators(f.n, g));
      }
    }
    max = std::move(next);

    Int next_metric = refine_metric(max);
    if (next_metric >= metric)
      throw theorem_violation("subdivision metric failed to decrease");
    metric = next_metric;
  }
  return Fan::from_maximal(f.n, max);
}

bool is_refinement(const Fan& fine, const Fan& coarse) {
  if (fine.n != coarse.n) return false;
  auto fine_max = fine.maximal_cones();
  auto coarse_max = coarse.maximal_cones();
  for (const auto& c : fine_max) {
    bool inside = false;
    for (const auto& d : coarse_max)
      if (d.contains_cone(c)) {
        inside = true;
        break;
      }
    if (!inside) return false;
  }
  // support coverage: generators of coarse cones plus sampled interior rays
  std::mt19937_64 rng(0x5eedf00dULL);
  std::uniform_int_distribution<int> coeff(0, 9);
  for (const auto& d : coarse_max) {
    for (const auto& g : d.gens) {
      bool covered = false;
      for (const auto& c : fine_max)
        if (c.contains(g)) {
          covered = true;
          break;
        }
      if (!covered) return false;
    }
    if (d.gens.empty()) continue;
    for (int trial = 0; trial < 100; ++trial) {
      Vec x(d.n, Int(0));
      bool nonzero = false;
      for (const auto& g : d.gens) {
        int a = coeff(rng);
        if (a == 0) continue;
        nonzero = true;
        for (int j = 0; j < d.n; ++j) x[j] += Int(a) * g[j];
      }
      if (!nonzero) continue;
      bool covered = false;
      for (const auto& c : fine_max)
        if (c.contains(x)) {
          covered = true;
          break;
        }
      if (!covered) return false;
    }
  }
  return true;
}

}  // namespace toricform
