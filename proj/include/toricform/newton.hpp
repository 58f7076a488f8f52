#pragma once

#include <set>
#include <vector>

#include "toricform/fan.hpp"
#include "toricform/polynomial.hpp"

namespace toricform {

// Supporting hyperplane <normal, x> = offset with normal >= 0 componentwise.
struct Facet {
  Vec normal;
  Int offset = 0;

  bool operator==(const Facet&) const = default;
};

// Face of the polyhedron, keyed by the full set of facets containing it.
// Geometrically conv(points) + cone(unit vectors indexed by rec).
struct Face {
  std::vector<int> active;  // indices into NewtonPolyhedron::facets, sorted
  std::set<Exp> points;     // support points lying on the face
  std::vector<int> rec;     // coordinate axes spanning the recession part
  int dim = 0;

  bool is_vertex() const { return dim == 0; }
  bool operator==(const Face& o) const { return active == o.active; }
  bool operator<(const Face& o) const { return active < o.active; }
};

// Convex hull of finitely many exponent vectors, each fattened by the
// positive orthant.  Full-dimensional and pointed by construction.
struct NewtonPolyhedron {
  int n = 0;
  std::set<Exp> support;
  std::vector<Facet> facets;

  static NewtonPolyhedron build(int n, const std::set<Exp>& support);

  bool contains(const Exp& e) const;
  std::vector<int> tight_facets(const Exp& e) const;
  bool on_boundary(const Exp& e) const;  // contained and on some facet

  // Minimum of <v, .> over the polyhedron; v must be componentwise >= 0.
  Int min_along(const Vec& v) const;

  Face whole_face() const;
  Face face_minimized_by(const Vec& v) const;
  std::vector<Face> all_faces() const;  // every nonempty face, the body included

  // Normal fan: one cone per face, spanned by the normals of the facets
  // through it; covers the positive orthant.
  Fan dual_fan() const;
};

}  // namespace toricform
