#pragma once

#include <vector>

#include "toricform/lattice.hpp"

namespace toricform {

// Strongly convex rational polyhedral cone.  Canonical data: the primitive
// extreme rays sorted lexicographically, so cones compare by value.  A dual
// description (span equations plus facet inequalities valid on the span) is
// kept alongside for exact membership tests.
struct Cone {
  int n = 0;             // ambient dimension
  int dim = 0;           // dimension of the linear span
  std::vector<Vec> gens;  // extreme rays; empty for the origin cone
  std::vector<Vec> eqs;   // basis of the orthogonal complement of the span
  std::vector<Vec> ineqs;  // supporting inequalities, >= 0 on the cone

  static Cone from_generators(int n, const std::vector<Vec>& raw);
  static Cone origin(int n);

  bool contains(const Vec& x) const;
  bool contains_in_relint(const Vec& x) const;
  bool contains_cone(const Cone& o) const;
  bool is_simplicial() const { return static_cast<int>(gens.size()) == dim; }

  // All faces, including the cone itself and the origin.
  std::vector<Cone> faces() const;
  std::vector<Cone> facets() const;  // faces of dimension dim - 1

  bool operator<(const Cone& o) const { return gens < o.gens; }
  bool operator==(const Cone& o) const { return n == o.n && gens == o.gens; }
  bool operator!=(const Cone& o) const { return !(*this == o); }

  std::string str() const;
};

// Index of the lattice generated by the rays inside the lattice of the span.
// Requires a simplicial cone; 1 means the rays extend to a basis of Z^n.
Int multiplicity(const Cone& c);

// Extreme rays of {x : ineqs * x >= 0, eqs * x = 0}; the system must be
// pointed (contain no line).
std::vector<Vec> extreme_rays_of_system(int n, const std::vector<Vec>& ineqs,
                                        const std::vector<Vec>& eqs);

// Extreme rays of the intersection of two cones.
std::vector<Vec> intersection_rays(const Cone& a, const Cone& b);

}  // namespace toricform
