#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "toricform/newton.hpp"

using namespace toricform;

namespace {

Exp e2(long a, long b) { return {Int(a), Int(b)}; }
Exp e3(long a, long b, long c) { return {Int(a), Int(b), Int(c)}; }

// support of 2x^3 + x^2 y + x y + y^3 style plane data
std::set<Exp> plane_support() { return {e2(3, 0), e2(2, 1), e2(0, 3), e2(1, 1)}; }

std::set<Exp> space_support() {
  return {e3(1, 1, 6), e3(2, 2, 0), e3(2, 0, 2), e3(6, 1, 1), e3(4, 2, 2), e3(0, 2, 2)};
}

const Face* find_by_points(const std::vector<Face>& faces, const std::set<Exp>& pts) {
  for (const auto& f : faces)
    if (f.points == pts) return &f;
  return nullptr;
}

}  // namespace

TEST_CASE("plane polyhedron has four facets in boundary order") {
  auto np = NewtonPolyhedron::build(2, plane_support());
  REQUIRE(np.facets.size() == 4);
  CHECK(np.facets[0] == Facet{{Int(1), Int(0)}, Int(0)});
  CHECK(np.facets[1] == Facet{{Int(2), Int(1)}, Int(3)});
  CHECK(np.facets[2] == Facet{{Int(1), Int(2)}, Int(3)});
  CHECK(np.facets[3] == Facet{{Int(0), Int(1)}, Int(0)});
}

TEST_CASE("plane polyhedron face lattice") {
  auto np = NewtonPolyhedron::build(2, plane_support());
  auto faces = np.all_faces();
  CHECK(faces.size() == 8);  // body, four facets, three vertices

  int vertices = 0;
  for (const auto& f : faces)
    if (f.is_vertex()) ++vertices;
  CHECK(vertices == 3);

  const Face* body = find_by_points(faces, plane_support());
  REQUIRE(body);
  CHECK(body->dim == 2);
  CHECK(body->active.empty());

  const Face* slanted = find_by_points(faces, {e2(0, 3), e2(1, 1)});
  REQUIRE(slanted);
  CHECK(slanted->dim == 1);
  CHECK(slanted->active == std::vector<int>{1});
  CHECK(slanted->rec.empty());

  const Face* vertical = find_by_points(faces, {e2(0, 3)});
  REQUIRE(vertical);
  // both the coordinate facet and the unbounded ray face live here
  bool found_ray = false;
  for (const auto& f : faces)
    if (f.points == std::set<Exp>{e2(0, 3)} && f.rec == std::vector<int>{1} && f.dim == 1)
      found_ray = true;
  CHECK(found_ray);

  const Face* corner = find_by_points(faces, {e2(1, 1)});
  REQUIRE(corner);
  CHECK(corner->is_vertex());
  CHECK(corner->active == std::vector<int>{1, 2});
}

TEST_CASE("plane membership and boundary classification") {
  auto np = NewtonPolyhedron::build(2, plane_support());
  CHECK(np.contains(e2(2, 1)));
  CHECK(!np.on_boundary(e2(2, 1)));  // strictly inside
  CHECK(np.on_boundary(e2(1, 1)));
  CHECK(np.on_boundary(e2(0, 3)));
  CHECK(np.on_boundary(e2(0, 5)));  // up the unbounded edge
  CHECK(!np.contains(e2(0, 0)));
  CHECK(!np.contains(e2(1, 0)));
  CHECK(np.contains(e2(7, 9)));
  CHECK(!np.on_boundary(e2(7, 9)));
}

TEST_CASE("plane minimization and minimized faces") {
  auto np = NewtonPolyhedron::build(2, plane_support());
  CHECK(np.min_along({Int(1), Int(1)}) == 2);
  CHECK(np.min_along({Int(2), Int(1)}) == 3);
  CHECK(np.min_along({Int(0), Int(0)}) == 0);
  CHECK_THROWS_AS(np.min_along({Int(-1), Int(2)}), input_error);

  Face v = np.face_minimized_by({Int(1), Int(1)});
  CHECK(v.is_vertex());
  CHECK(v.points == std::set<Exp>{e2(1, 1)});

  Face edge = np.face_minimized_by({Int(2), Int(1)});
  CHECK(edge.dim == 1);
  CHECK(edge.points == std::set<Exp>{e2(0, 3), e2(1, 1)});

  Face body = np.face_minimized_by({Int(0), Int(0)});
  CHECK(body.dim == 2);
  CHECK(body.active.empty());
}

TEST_CASE("plane dual fan matches the three corner cones") {
  auto np = NewtonPolyhedron::build(2, plane_support());
  Fan f = np.dual_fan();
  CHECK_NOTHROW(check_fan(f));
  CHECK(f.cones.size() == 8);  // one cone per face of the polyhedron
  auto max = f.maximal_cones();
  REQUIRE(max.size() == 3);
  std::set<Cone> expect = {
      Cone::from_generators(2, {{Int(1), Int(0)}, {Int(2), Int(1)}}),
      Cone::from_generators(2, {{Int(2), Int(1)}, {Int(1), Int(2)}}),
      Cone::from_generators(2, {{Int(1), Int(2)}, {Int(0), Int(1)}})};
  CHECK(std::set<Cone>(max.begin(), max.end()) == expect);
  CHECK(f.supports({Int(5), Int(1)}));
  CHECK(!f.supports({Int(-1), Int(1)}));
}

TEST_CASE("space polyhedron has seven facets") {
  auto np = NewtonPolyhedron::build(3, space_support());
  REQUIRE(np.facets.size() == 7);
  std::set<std::pair<Vec, Int>> got;
  for (const auto& fc : np.facets) got.insert({fc.normal, fc.offset});
  std::set<std::pair<Vec, Int>> expect = {
      {{Int(1), Int(0), Int(0)}, Int(0)}, {{Int(0), Int(1), Int(0)}, Int(0)},
      {{Int(0), Int(0), Int(1)}, Int(0)}, {{Int(1), Int(1), Int(0)}, Int(2)},
      {{Int(1), Int(0), Int(1)}, Int(2)}, {{Int(0), Int(1), Int(1)}, Int(2)},
      {{Int(1), Int(1), Int(1)}, Int(4)}};
  CHECK(got == expect);
}

TEST_CASE("space polyhedron vertices and point classification") {
  auto np = NewtonPolyhedron::build(3, space_support());
  auto faces = np.all_faces();
  std::set<Exp> verts;
  for (const auto& f : faces)
    if (f.is_vertex()) {
      REQUIRE(f.points.size() == 1);
      verts.insert(*f.points.begin());
    }
  CHECK(verts == std::set<Exp>{e3(2, 2, 0), e3(2, 0, 2), e3(0, 2, 2)});

  CHECK(np.on_boundary(e3(2, 2, 0)));
  CHECK(np.on_boundary(e3(1, 1, 6)));  // on a facet but not a vertex
  CHECK(np.on_boundary(e3(6, 1, 1)));
  CHECK(!np.on_boundary(e3(4, 2, 2)));  // strictly inside
  CHECK(np.contains(e3(4, 2, 2)));
}

TEST_CASE("space compact facet and its edge with the mixed facet") {
  auto np = NewtonPolyhedron::build(3, space_support());
  auto faces = np.all_faces();

  const Face* compact = find_by_points(faces, {e3(2, 2, 0), e3(2, 0, 2), e3(0, 2, 2)});
  REQUIRE(compact);
  CHECK(compact->dim == 2);
  CHECK(compact->rec.empty());

  const Face* mixed = find_by_points(faces, {e3(2, 2, 0), e3(2, 0, 2), e3(6, 1, 1)});
  REQUIRE(mixed);
  CHECK(mixed->dim == 2);
  CHECK(mixed->rec == std::vector<int>{0});

  const Face* edge = find_by_points(faces, {e3(2, 2, 0), e3(2, 0, 2)});
  REQUIRE(edge);
  CHECK(edge->dim == 1);
  CHECK(edge->rec.empty());
  CHECK(edge->active.size() == 2);
}

TEST_CASE("space dual fan is three cones over squares") {
  auto np = NewtonPolyhedron::build(3, space_support());
  Fan f = np.dual_fan();
  CHECK_NOTHROW(check_fan(f));
  CHECK(f.cones.size() == np.all_faces().size());
  auto max = f.maximal_cones();
  REQUIRE(max.size() == 3);
  for (const auto& c : max) {
    CHECK(c.dim == 3);
    CHECK(c.gens.size() == 4);
    CHECK(!c.is_simplicial());
  }
  Fan t = triangulate(f);
  auto tmax = t.maximal_cones();
  CHECK(tmax.size() == 6);
  for (const auto& c : tmax) CHECK(multiplicity(c) == 1);
  Fan r = regularize(t);
  CHECK(r.cones == t.cones);  // already unimodular
  CHECK(is_refinement(r, f));
}

TEST_CASE("single point support gives the shifted orthant") {
  auto np = NewtonPolyhedron::build(2, {e2(2, 3)});
  REQUIRE(np.facets.size() == 2);
  CHECK(np.facets[0] == Facet{{Int(1), Int(0)}, Int(2)});
  CHECK(np.facets[1] == Facet{{Int(0), Int(1)}, Int(3)});
  auto faces = np.all_faces();
  CHECK(faces.size() == 4);
  auto f = np.dual_fan();
  CHECK(f.cones.size() == 4);
  CHECK(f.maximal_cones().size() == 1);
  CHECK(np.on_boundary(e2(2, 3)));
  CHECK(np.on_boundary(e2(2, 9)));
  CHECK(!np.on_boundary(e2(3, 4)));
}

TEST_CASE("two point support with one slanted facet") {
  auto np = NewtonPolyhedron::build(2, {e2(2, 0), e2(0, 1)});
  REQUIRE(np.facets.size() == 3);
  CHECK(np.facets[1] == Facet{{Int(1), Int(2)}, Int(2)});
  CHECK(np.all_faces().size() == 6);
  CHECK(np.dual_fan().maximal_cones().size() == 2);
}

TEST_CASE("rejects bad support input") {
  CHECK_THROWS_AS(NewtonPolyhedron::build(2, {}), input_error);
  CHECK_THROWS_AS(NewtonPolyhedron::build(2, {Exp{Int(1)}}), input_error);
  CHECK_THROWS_AS(NewtonPolyhedron::build(2, {e2(-1, 0)}), input_error);
}

TEST_CASE("random supports satisfy structural invariants") {
  std::mt19937_64 rng(20240817);
  std::uniform_int_distribution<int> nd(2, 3), cnt(1, 6), coord(0, 8), probe(0, 7);
  for (int trial = 0; trial < 30; ++trial) {
    int n = nd(rng);
    std::set<Exp> support;
    int m = cnt(rng);
    for (int i = 0; i < m; ++i) {
      Exp e(n);
      for (int k = 0; k < n; ++k) e[k] = coord(rng);
      support.insert(e);
    }
    auto np = NewtonPolyhedron::build(n, support);
    REQUIRE(!np.facets.empty());

    for (const auto& p : support) CHECK(np.contains(p));
    for (const auto& fc : np.facets) {
      bool tight_somewhere = false;
      for (const auto& p : support) {
        CHECK(dot(fc.normal, p) >= fc.offset);
        if (dot(fc.normal, p) == fc.offset) tight_somewhere = true;
      }
      CHECK(tight_somewhere);
      for (const auto& x : fc.normal) CHECK(x >= 0);
    }

    auto faces = np.all_faces();
    bool saw_vertex = false;
    for (const auto& f : faces) {
      REQUIRE(!f.points.empty());
      if (f.is_vertex()) saw_vertex = true;
      if (f.active.empty()) {
        CHECK(f.dim == n);
        continue;
      }
      // the face is recovered as the minimized set along its normal sum
      Vec v(n, Int(0));
      for (int i : f.active)
        for (int k = 0; k < n; ++k) v[k] += np.facets[i].normal[k];
      Face back = np.face_minimized_by(v);
      CHECK(back == f);
      CHECK(back.points == f.points);
    }
    CHECK(saw_vertex);

    Fan dual = np.dual_fan();
    CHECK_NOTHROW(check_fan(dual));
    CHECK(dual.cones.size() == faces.size());
    for (int shot = 0; shot < 20; ++shot) {
      Vec v(n);
      for (int k = 0; k < n; ++k) v[k] = probe(rng);
      CHECK(dual.supports(v));
    }
  }
}
