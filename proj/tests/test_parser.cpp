#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <string>

#include "toricform/parser.hpp"

using namespace toricform;

namespace {

Exp e2(long a, long b) { return {Int(a), Int(b)}; }

StandardPForm plane_std() {
  StandardPForm f;
  f.n = 2;
  f.p = 1;
  Polynomial gx(2), gy(2);
  gx.add_term(e2(2, 0), 2);
  gx.add_term(e2(1, 1), 1);
  gy.add_term(e2(2, 0), 1);
  gy.add_term(e2(0, 2), 1);
  gy.add_term(e2(1, 0), 1);
  f.add({0}, gx);
  f.add({1}, gy);
  return f;
}

StandardPForm space_std() {
  StandardPForm f;
  f.n = 3;
  f.p = 2;
  Polynomial gxy(3), gxz(3), gyz(3);
  gxy.add_term({Int(0), Int(0), Int(6)}, 1);
  gxy.add_term({Int(1), Int(1), Int(0)}, 1);
  gxz.add_term({Int(1), Int(0), Int(1)}, 1);
  gyz.add_term({Int(6), Int(0), Int(0)}, 1);
  gyz.add_term({Int(4), Int(1), Int(1)}, 1);
  gyz.add_term({Int(0), Int(1), Int(1)}, 1);
  f.add({0, 1}, gxy);
  f.add({0, 2}, gxz);
  f.add({1, 2}, gyz);
  return f;
}

std::string error_of(const std::string& text) {
  try {
    parse_form(text);
  } catch (const input_error& e) {
    return e.what();
  }
  return "";
}

}  // namespace

TEST_CASE("the plane example file parses to the expected form") {
  FormDocument doc = parse_form(
      "# plane example\n"
      "vars: x y\n"
      "p: 1\n"
      "form: (2*x^2 + x*y) dx + (x^2 + y^2 + x) dy\n");
  CHECK(doc.variables == std::vector<std::string>{"x", "y"});
  CHECK(doc.form == plane_std());

  // p is inferred when absent, and juxtaposition multiplies
  FormDocument terse = parse_form("vars: x y\nform: (2x^2 + x y) dx + (x^2 + y^2 + x) dy");
  CHECK(terse == doc);
}

TEST_CASE("the space example file parses to the expected form") {
  FormDocument doc = parse_form(
      "vars: x y z\n"
      "form: (z^6 + x*y) dx^dy + x*z dx^dz + (x^6 + x^4*y*z + y*z) dy^dz\n");
  CHECK(doc.form == space_std());
  CHECK(doc.form.p == 2);
}

TEST_CASE("wedges normalize to increasing order with a sign") {
  FormDocument doc = parse_form("vars: x y z\nform: 1 dy^dx + x dx^dy");
  REQUIRE(doc.form.coeffs.size() == 1);
  Polynomial expect(3);
  expect.add_term({Int(0), Int(0), Int(0)}, -1);
  expect.add_term({Int(1), Int(0), Int(0)}, 1);
  CHECK(doc.form.coeffs.at({0, 1}) == expect);

  FormDocument swap3 = parse_form("vars: x y z w\nform: dz^dy^dx");
  CHECK(swap3.form.coeffs.at({0, 1, 2}) == Polynomial::constant(4, -1));
}

TEST_CASE("coefficient expressions cover fractions, powers and nesting") {
  FormDocument doc = parse_form("vars: x y\nform: (1/2 x^3 - 2/3 + (x + y)^2) dx");
  Polynomial g(2);
  g.add_term(e2(3, 0), make_rat(1, 2));
  g.add_term(e2(0, 0), make_rat(-2, 3));
  g.add_term(e2(2, 0), 1);
  g.add_term(e2(1, 1), 2);
  g.add_term(e2(0, 2), 1);
  CHECK(doc.form.coeffs.at({0}) == g);

  // a leading minus applies to the whole first term
  FormDocument neg = parse_form("vars: x y\nform: -x dy + 3 dx");
  CHECK(neg.form.coeffs.at({1}) == Polynomial::monomial(2, e2(1, 0), -1));
  CHECK(neg.form.coeffs.at({0}) == Polynomial::constant(2, 3));
}

TEST_CASE("duplicate monomial and basis pairs accumulate") {
  FormDocument doc = parse_form("vars: x y\nform: x dx + 2 x dx + y dy");
  CHECK(doc.form.coeffs.at({0}) == Polynomial::monomial(2, e2(1, 0), 3));

  // cancellation inside one wedge coefficient drops the whole block
  FormDocument cancel = parse_form("vars: x y\nform: x dx - x dx + y dy");
  CHECK(cancel.form.coeffs.size() == 1);
  CHECK(cancel.form.coeffs.count({0}) == 0);
}

TEST_CASE("comments and continuation lines are tolerated") {
  FormDocument doc = parse_form(
      "vars: x y   # two variables\n"
      "\n"
      "form: (2*x^2 + x*y) dx   # first block\n"
      "    + (x^2 + y^2 + x) dy\n");
  CHECK(doc.form == plane_std());
}

TEST_CASE("parse errors carry line and column positions") {
  CHECK(error_of("vars: x y\nform: x dx + z dy").find("unknown variable or differential 'z'") !=
        std::string::npos);
  CHECK(error_of("vars: x y\nform: x dx + z dy").find("line 2") != std::string::npos);
  CHECK(error_of("vars: x y\nform: x dx^dx").find("repeated differential") != std::string::npos);
  CHECK(error_of("vars: x y z\nform: x dx + y dx^dy").find("arity") != std::string::npos);
  CHECK(error_of("vars: x y\np: 2\nform: x dx").find("does not match p = 2") !=
        std::string::npos);
  CHECK(error_of("vars: x y\nform: x dx + ").find("expected") != std::string::npos);
  CHECK(error_of("vars: x y\nform: $ dx").find("unexpected character") != std::string::npos);
  CHECK(error_of("vars: x y\nform: 1/0 x dx").find("zero denominator") != std::string::npos);
  CHECK(error_of("vars: x y\nform: x dy dx").find("'+' or '-'") != std::string::npos);
}

TEST_CASE("structural problems are rejected") {
  CHECK_THROWS_AS(parse_form("form: x dx"), input_error);          // vars missing
  CHECK_THROWS_AS(parse_form("vars: x y"), input_error);           // form missing
  CHECK_THROWS_AS(parse_form("vars: x x\nform: x dx"), input_error);
  CHECK_THROWS_AS(parse_form("vars: x y\nvars: z w\nform: x dx"), input_error);
  CHECK_THROWS_AS(parse_form("vars: x\nform: x dx"), input_error);          // p = n
  CHECK_THROWS_AS(parse_form("vars: x y\nform: x y dx^dy"), input_error);   // p = n
  CHECK_THROWS_AS(parse_form("vars: x dx\nform: x ddx"), input_error);      // shadowing
  CHECK_THROWS_AS(parse_form("vars: x y\nform: x dx - x dx"), input_error);  // zero form
  CHECK_THROWS_AS(parse_form("vars: x y\nwhat: ever\nform: x dx"), input_error);
}

TEST_CASE("printing is canonical and round-trips") {
  for (const char* text :
       {"vars: x y\np: 1\nform: (2*x^2 + x*y) dx + (x^2 + y^2 + x) dy\n",
        "vars: x y z\nform: (z^6 + x*y) dx^dy + x*z dx^dz + (x^6 + x^4*y*z + y*z) dy^dz",
        "vars: x y\nform: -1/2 x dy + (y - x) dx", "vars: x y z\nform: 1 dy^dx"}) {
    FormDocument doc = parse_form(text);
    std::string printed = print_form(doc);
    FormDocument again = parse_form(printed);
    CHECK(again == doc);
    CHECK(print_form(again) == printed);
  }
}

TEST_CASE("files load through the same path") {
  std::string path = std::filesystem::temp_directory_path() / "parser-roundtrip.form";
  {
    std::ofstream out(path);
    out << "vars: x y\nform: (2*x^2 + x*y) dx + (x^2 + y^2 + x) dy\n";
  }
  FormDocument doc = parse_form_file(path);
  CHECK(doc.form == plane_std());
  std::remove(path.c_str());
  CHECK_THROWS_AS(parse_form_file("/nonexistent/no.form"), input_error);
}
