#pragma once

#include <set>
#include <vector>

#include "toricform/cone.hpp"

namespace toricform {

// Finite collection of strongly convex cones, closed under taking faces,
// with pairwise intersections that are faces of both.
struct Fan {
  int n = 0;
  std::set<Cone> cones;

  static Fan from_maximal(int n, const std::vector<Cone>& max);

  // Cones not strictly contained in another member, in canonical order.
  std::vector<Cone> maximal_cones() const;

  bool supports(const Vec& x) const;  // x lies in some cone
};

// Verify the fan axioms exactly; violations raise theorem_violation.
void check_fan(const Fan& f);

// Subdivide every non-simplicial cone by pulling at its lexicographically
// least ray, recursively; shared faces receive matching subdivisions.
Fan triangulate(const Fan& f);

// Stellar subdivision loop driving every multiplicity to 1.  Input must be
// simplicial; the worst cone is split at the smallest lattice point of its
// fundamental parallelepiped until all maximal cones are unimodular.
Fan regularize(const Fan& f);

// Every cone of fine lies in a cone of coarse and the supports agree
// (generator membership plus deterministic ray sampling).
bool is_refinement(const Fan& fine, const Fan& coarse);

// Smallest lattice point of the fundamental parallelepiped of a simplicial
// cone with multiplicity > 1 (least coefficient sum, ties lexicographic).
Vec parallelepiped_point(const Cone& c);

}  // namespace toricform
