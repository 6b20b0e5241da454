#include <doctest.h>

#include <sstream>

#include "tverberg/constructions.hpp"
#include "tverberg/error.hpp"
#include "tverberg/io.hpp"

using namespace tverberg;

TEST_CASE("complex text round trip") {
  auto c = chessboard(2, 3);
  std::string text = write_complex_text(c.complex);
  CHECK(text.rfind("simplicial v1 6\n0 4\n", 0) == 0);
  auto back = read_complex(text);
  CHECK(back.complex == c.complex);
}

TEST_CASE("complex json round trip keeps the action") {
  auto c = chessboard(2, 3);
  auto j = complex_to_json(c.complex, &c.column_rotation);
  CHECK(j.begin().key() == "vertex_count");
  auto back = read_complex(j.dump());
  CHECK(back.complex == c.complex);
  REQUIRE(back.action.has_value());
  CHECK(back.action->generators == c.column_rotation.generators);
  CHECK(back.complex.labels() == c.complex.labels());
}

TEST_CASE("complex parse errors carry line numbers") {
  try {
    read_complex("simplicial v1 3\n0 1\n\n1 7\n");
    FAIL("expected ParseError");
  } catch (const ParseError& e) {
    CHECK(e.line() == 4);
  }
  CHECK_THROWS_AS(read_complex("simplex v1 3\n"), ParseError);
  CHECK_THROWS_AS(read_complex("simplicial v1 3\n1 1\n"), ParseError);
  try {
    read_complex("{\n\"vertex_count\": 3,\n\"facets\": [[0,1],\n}");
    FAIL("expected ParseError");
  } catch (const ParseError& e) {
    CHECK(e.line() == 4);
  }
}

TEST_CASE("points and colors") {
  std::istringstream in("points v1 2 3\n0 1/2\n-3/6 4\n\n7 0\n");
  auto p = read_points(in);
  CHECK(p.size() == 3);
  CHECK(p[1][0] == Rational(-1, 2));
  CHECK(write_points(p) == "points v1 2 3\n0 1/2\n-1/2 4\n7 0\n");

  std::istringstream short_in("points v1 2 2\n0 0\n1\n");
  try {
    read_points(short_in);
    FAIL("expected ParseError");
  } catch (const ParseError& e) {
    CHECK(e.line() == 3);
  }

  std::istringstream colors("colors v1\n0 2\n1\n");
  auto c = read_colors(colors, 3);
  CHECK(c.class_count() == 2);
  CHECK(c.color_of(2) == 0);
  CHECK(write_colors(c) == "colors v1\n0 2\n1\n");
  std::istringstream twice("colors v1\n0 1\n1 2\n");
  CHECK_THROWS_AS(read_colors(twice, 3), ParseError);
  std::istringstream missing("colors v1\n0 1\n");
  CHECK_THROWS_AS(read_colors(missing, 3), ParseError);
}

TEST_CASE("rational triplets") {
  RatMatrix m{{1, 0}, {0, Rational(-2, 3)}};
  std::string text = write_rat_triplets(m);
  CHECK(text == "triplets v1 2 2\n0 0 1\n1 1 -2/3\n");
  std::istringstream in(text);
  auto back = read_rat_triplets(in);
  CHECK(back(1, 1) == Rational(-2, 3));
  CHECK(back(0, 1) == 0);
}

TEST_CASE("certificate json") {
  PartitionCertificate c{{{0, 2}, {1}}, {Rational(1)}, {{Rational(1, 2), Rational(1, 2)}, {Rational(1)}}};
  CHECK(certificate_to_json(c).dump() ==
        R"({"parts":[[0,2],[1]],"point":["1"],"coefficients":[["1/2","1/2"],["1"]]})");
}
