#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>

#include "toricform/fan.hpp"

using namespace toricform;

namespace {

Vec v2(long a, long b) { return {Int(a), Int(b)}; }
Vec v3(long a, long b, long c) { return {Int(a), Int(b), Int(c)}; }

Cone c2(Vec a, Vec b) { return Cone::from_generators(2, {a, b}); }

// cone over a unit square at height one, the smallest non-simplicial example
Cone square_cone() {
  return Cone::from_generators(3, {v3(1, 0, 0), v3(0, 1, 0), v3(1, 0, 1), v3(0, 1, 1)});
}

}  // namespace

TEST_CASE("generators are primitivized, deduplicated and pruned to extreme rays") {
  Cone c = Cone::from_generators(2, {v2(2, 0), v2(1, 1), v2(0, 3), v2(0, 3)});
  CHECK(c.dim == 2);
  CHECK(c.gens == std::vector<Vec>{v2(0, 1), v2(1, 0)});
  CHECK(c.contains(v2(1, 1)));
  CHECK(c.contains_in_relint(v2(1, 1)));
  CHECK(!c.contains_in_relint(v2(1, 0)));
  CHECK(!c.contains(v2(-1, 2)));
}

TEST_CASE("zero generators give the origin cone") {
  Cone o = Cone::from_generators(3, {});
  CHECK(o.dim == 0);
  CHECK(o == Cone::origin(3));
  CHECK(o.contains(v3(0, 0, 0)));
  CHECK(!o.contains(v3(1, 0, 0)));
}

TEST_CASE("a non-strongly-convex input is rejected") {
  CHECK_THROWS_AS(Cone::from_generators(2, {v2(1, 0), v2(-1, 0)}), input_error);
  CHECK_THROWS_AS(Cone::from_generators(2, {v2(1, 1), v2(-1, 0), v2(0, -1)}), input_error);
}

TEST_CASE("face lattice of the positive quadrant") {
  Cone q = c2(v2(1, 0), v2(0, 1));
  auto faces = q.faces();
  CHECK(faces.size() == 4);  // origin, two rays, the quadrant
  int by_dim[3] = {0, 0, 0};
  for (const auto& f : faces) by_dim[f.dim]++;
  CHECK(by_dim[0] == 1);
  CHECK(by_dim[1] == 2);
  CHECK(by_dim[2] == 1);
}

TEST_CASE("facets of the cone over a square") {
  Cone c = square_cone();
  CHECK(c.dim == 3);
  CHECK(!c.is_simplicial());
  auto fs = c.facets();
  CHECK(fs.size() == 4);
  for (const auto& f : fs) {
    CHECK(f.dim == 2);
    CHECK(f.gens.size() == 2);
  }
  CHECK_THROWS_AS(multiplicity(c), input_error);
}

TEST_CASE("multiplicity of simplicial cones") {
  CHECK(multiplicity(c2(v2(1, 0), v2(0, 1))) == 1);
  CHECK(multiplicity(c2(v2(1, 0), v2(1, 2))) == 2);
  CHECK(multiplicity(c2(v2(2, 1), v2(1, 2))) == 3);
  Cone q = Cone::from_generators(3, {v3(1, 1, 0), v3(1, 0, 1), v3(0, 1, 1)});
  CHECK(multiplicity(q) == 2);
}

TEST_CASE("smallest fundamental parallelepiped points") {
  CHECK(parallelepiped_point(c2(v2(1, 0), v2(1, 2))) == v2(1, 1));
  CHECK(parallelepiped_point(c2(v2(2, 1), v2(1, 2))) == v2(1, 1));
  Cone q = Cone::from_generators(3, {v3(1, 1, 0), v3(1, 0, 1), v3(0, 1, 1)});
  CHECK(parallelepiped_point(q) == v3(1, 1, 1));
  CHECK_THROWS_AS(parallelepiped_point(c2(v2(1, 0), v2(0, 1))), input_error);
}

TEST_CASE("fan assembled from maximal cones is closed under faces") {
  Fan f = Fan::from_maximal(2, {c2(v2(1, 0), v2(1, 1)), c2(v2(1, 1), v2(0, 1))});
  CHECK_NOTHROW(check_fan(f));
  // origin + 3 rays + 2 two-dimensional cones
  CHECK(f.cones.size() == 6);
  auto max = f.maximal_cones();
  CHECK(max.size() == 2);
  CHECK(f.supports(v2(3, 5)));
  CHECK(!f.supports(v2(-1, 0)));
}

TEST_CASE("fan axiom check rejects overlapping cones") {
  Fan bad = Fan::from_maximal(2, {c2(v2(1, 0), v2(1, 2)), c2(v2(2, 1), v2(0, 1))});
  CHECK_THROWS_AS(check_fan(bad), theorem_violation);
}

TEST_CASE("fan axiom check rejects a missing face") {
  Fan f;
  f.n = 2;
  f.cones.insert(c2(v2(1, 0), v2(0, 1)));
  CHECK_THROWS_AS(check_fan(f), theorem_violation);
}

TEST_CASE("pulling triangulation splits the cone over a square") {
  Fan f = Fan::from_maximal(3, {square_cone()});
  Fan t = triangulate(f);
  CHECK_NOTHROW(check_fan(t));
  auto max = t.maximal_cones();
  REQUIRE(max.size() == 2);
  // pulled at the lexicographically least ray (0,1,0)
  Cone a = Cone::from_generators(3, {v3(0, 1, 0), v3(1, 0, 0), v3(1, 0, 1)});
  Cone b = Cone::from_generators(3, {v3(0, 1, 0), v3(1, 0, 1), v3(0, 1, 1)});
  CHECK(std::count(max.begin(), max.end(), a) == 1);
  CHECK(std::count(max.begin(), max.end(), b) == 1);
  for (const auto& c : max) CHECK(multiplicity(c) == 1);
  CHECK(is_refinement(t, f));
  CHECK(!is_refinement(f, t));

  // a strictly smaller collection no longer covers the support
  Fan partial = Fan::from_maximal(3, {a});
  CHECK(!is_refinement(partial, f));
}

TEST_CASE("triangulation leaves a simplicial fan untouched") {
  Fan f = Fan::from_maximal(2, {c2(v2(1, 0), v2(1, 1)), c2(v2(1, 1), v2(0, 1))});
  Fan t = triangulate(f);
  CHECK(t.cones == f.cones);
}

TEST_CASE("stellar subdivision of one cone of multiplicity two") {
  Fan f = Fan::from_maximal(2, {c2(v2(1, 0), v2(1, 2))});
  Fan r = regularize(f);
  CHECK_NOTHROW(check_fan(r));
  auto max = r.maximal_cones();
  REQUIRE(max.size() == 2);
  CHECK(std::count(max.begin(), max.end(), c2(v2(1, 0), v2(1, 1))) == 1);
  CHECK(std::count(max.begin(), max.end(), c2(v2(1, 1), v2(1, 2))) == 1);
  for (const auto& c : max) CHECK(multiplicity(c) == 1);
  CHECK(is_refinement(r, f));
}

TEST_CASE("regularization of a fan with a multiplicity three wedge") {
  std::vector<Cone> max = {c2(v2(1, 0), v2(2, 1)), c2(v2(2, 1), v2(1, 2)),
                           c2(v2(1, 2), v2(0, 1))};
  Fan f = Fan::from_maximal(2, max);
  Fan r = regularize(f);
  CHECK_NOTHROW(check_fan(r));
  auto rmax = r.maximal_cones();
  REQUIRE(rmax.size() == 4);
  for (const auto& c : rmax) CHECK(multiplicity(c) == 1);
  // the new ray subdividing the middle wedge
  CHECK(std::count(rmax.begin(), rmax.end(), c2(v2(2, 1), v2(1, 1))) == 1);
  CHECK(std::count(rmax.begin(), rmax.end(), c2(v2(1, 1), v2(1, 2))) == 1);
  CHECK(is_refinement(r, f));
  CHECK(!is_refinement(f, r));
  // untouched outer wedges survive
  CHECK(std::count(rmax.begin(), rmax.end(), c2(v2(1, 0), v2(2, 1))) == 1);
  CHECK(std::count(rmax.begin(), rmax.end(), c2(v2(1, 2), v2(0, 1))) == 1);
}

TEST_CASE("regularization demands simplicial input") {
  Fan f = Fan::from_maximal(3, {square_cone()});
  CHECK_THROWS_AS(regularize(f), input_error);
  Fan r = regularize(triangulate(f));
  for (const auto& c : r.maximal_cones()) CHECK(multiplicity(c) == 1);
}

TEST_CASE("regularization of the quadric cone inserts the diagonal ray") {
  Cone q = Cone::from_generators(3, {v3(1, 1, 0), v3(1, 0, 1), v3(0, 1, 1)});
  Fan r = regularize(Fan::from_maximal(3, {q}));
  CHECK_NOTHROW(check_fan(r));
  auto max = r.maximal_cones();
  REQUIRE(max.size() == 3);
  for (const auto& c : max) {
    CHECK(multiplicity(c) == 1);
    CHECK(std::count(c.gens.begin(), c.gens.end(), v3(1, 1, 1)) == 1);
  }
  CHECK(is_refinement(r, Fan::from_maximal(3, {q})));
}

TEST_CASE("refinement check rejects mismatched supports") {
  Fan half = Fan::from_maximal(2, {c2(v2(1, 0), v2(1, 1))});
  Fan full = Fan::from_maximal(2, {c2(v2(1, 0), v2(1, 1)), c2(v2(1, 1), v2(0, 1))});
  CHECK(!is_refinement(half, full));
  CHECK(is_refinement(full, full));
}
