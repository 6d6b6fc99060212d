// test_exactalg.cpp
// -----------------
// Unit tests for the Laurent polynomial ring and matrix layers.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "exactalg/laurent.hpp"
#include "exactalg/polymatrix.hpp"

using namespace exactalg;

TEST_CASE("ring construction and variables") {
  Ring r = make_ring("x", 3, 1);
  CHECK(r.vars.size() == 3);
  CHECK(r.vars[1] == "x2");
  CHECK(r.den == 1);

  LaurentPoly x1 = LaurentPoly::var(r, "x1");
  LaurentPoly x2 = LaurentPoly::var(r, "x2");
  CHECK(to_string(x1 * x2) == "x1*x2");
  CHECK(to_string(x1 - x1) == "0");
}

TEST_CASE("arithmetic and exponent bookkeeping") {
  Ring r = make_ring("x", 2, 1);
  LaurentPoly x = LaurentPoly::var(r, "x1"), y = LaurentPoly::var(r, "x2");
  LaurentPoly p = (x + y) * (x - y);
  CHECK(p == x * x - y * y);

  LaurentPoly inv = LaurentPoly::var_pow(r, 0, -1);
  CHECK(to_string(x * inv) == "1");
  CHECK((x * inv).is_monomial());
}

TEST_CASE("fractional exponents over a denominator") {
  Ring r = make_ring("y", 2, 3);
  LaurentPoly a = LaurentPoly::LaurentPoly::var_pow(r, 0, 1);  // y1^(1/3)
  LaurentPoly b = LaurentPoly::LaurentPoly::var_pow(r, 0, 2);  // y1^(2/3)
  CHECK(a * b == LaurentPoly::var(r, "y1"));
  CHECK(to_string(a) == "y1^(1/3)");
}

TEST_CASE("exact division") {
  Ring r = make_ring("x", 2, 1);
  LaurentPoly x = LaurentPoly::var(r, "x1"), y = LaurentPoly::var(r, "x2");
  LaurentPoly num = x * x - y * y;
  CHECK(exact_divide(num, x + y) == x - y);
  CHECK(exact_divide(num, x - y) == x + y);
  CHECK(exact_divide(x + y, x) == LaurentPoly::constant(r, 1) + LaurentPoly::var_pow(r, 0, -1) * y);
  CHECK_THROWS(exact_divide(x + y + LaurentPoly::constant(r, 1), x + y));
}

TEST_CASE("substitution with monomial images of fractional power") {
  Ring src = make_ring("y", 1, 1);
  Ring dst = make_ring("x", 1, 2);
  std::map<std::string, LaurentPoly> images;
  images["y1"] = LaurentPoly::var_pow(dst, 0, 1);  // y1 -> x1^(1/2)
  LaurentPoly p = LaurentPoly::var(src, "y1") + LaurentPoly::constant(src, 2);
  LaurentPoly q = substitute(p, images, dst);
  CHECK(q == LaurentPoly::var_pow(dst, 0, 1) + LaurentPoly::constant(dst, 2));
}

TEST_CASE("json round trip is canonical") {
  Ring r = make_ring("x", 2, 2);
  LaurentPoly p = LaurentPoly::LaurentPoly::var_pow(r, 0, 3) - LaurentPoly::LaurentPoly::var_pow(r, 1, -1) * LaurentPoly::constant(r, 7);
  nlohmann::json j = to_json(p);
  CHECK(poly_from_json(j) == p);
  CHECK(to_json(poly_from_json(j)).dump() == j.dump());
}

TEST_CASE("matrix product and identity") {
  Ring r = make_ring("x", 1, 1);
  PolyMatrix a(r, 2);
  a.at(0, 0) = LaurentPoly::var(r, "x1");
  a.at(0, 1) = LaurentPoly::constant(r, 1);
  a.at(1, 1) = LaurentPoly::var(r, "x1");
  PolyMatrix i = PolyMatrix::identity(r, 2);
  CHECK((a * i).at(0, 1) == a.at(0, 1));
  PolyMatrix sq = a * a;
  CHECK(sq.at(0, 0) == LaurentPoly::var(r, "x1") * LaurentPoly::var(r, "x1"));
  CHECK(sq.at(0, 1) == LaurentPoly::var(r, "x1") + LaurentPoly::var(r, "x1"));
}

TEST_CASE("determinants and exterior traces") {
  Ring r = make_ring("t", 1, 1);
  PolyMatrix d(r, 3);
  d.at(0, 0) = LaurentPoly::constant(r, 1);
  d.at(1, 1) = LaurentPoly::constant(r, 2);
  d.at(2, 2) = LaurentPoly::constant(r, 3);
  CHECK(to_string(exterior_trace(d, 1)) == "6");
  CHECK(to_string(exterior_trace(d, 2)) == "11");
  CHECK(to_string(exterior_trace(d, 3)) == "6");
  CHECK(to_string(det(d)) == "6");

  // 2x2 with an off-diagonal contribution: det = ad - bc.
  PolyMatrix m(r, 2);
  LaurentPoly t = LaurentPoly::var(r, "t1");
  m.at(0, 0) = t;
  m.at(0, 1) = LaurentPoly::constant(r, 1);
  m.at(1, 0) = LaurentPoly::constant(r, 1);
  m.at(1, 1) = t;
  CHECK(det(m) == t * t - LaurentPoly::constant(r, 1));

  // e_k of the identity counts k-subsets.
  PolyMatrix id = PolyMatrix::identity(r, 4);
  CHECK(to_string(exterior_trace(id, 2)) == "6");
  CHECK(to_string(exterior_trace(id, 4)) == "1");
}
