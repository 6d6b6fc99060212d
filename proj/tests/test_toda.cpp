// test_toda.cpp
// -------------
// Unit tests for the factorization matrix and the Hamiltonians H_k.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "exactalg/polymatrix.hpp"
#include "toda/toda.hpp"

using namespace exactalg;
using namespace todasys;

namespace {

LaurentPoly ypoly(const Ring& r, std::initializer_list<std::pair<int, long long>> factors) {
  LaurentPoly p = LaurentPoly::constant(r, 1);
  for (auto [idx, num] : factors) p = p * LaurentPoly::var_pow(r, idx - 1, num);
  return p;
}

}  // namespace

TEST_CASE("rings") {
  Ring yr = y_ring(2);
  CHECK(yr.vars.size() == 4);
  CHECK(yr.den == 3);
  Ring xr = x_ring(2);
  CHECK(xr.vars == std::vector<std::string>{"x1", "x2", "x3", "x4"});
  CHECK(xr.den == 3);
}

TEST_CASE("n=1 factorization matrix has the known entries") {
  PolyMatrix m = factorization_matrix(1);
  Ring r = y_ring(1);
  // Common scalar (y1 y2)^(-1/2); entries (y2 + y1 y2, 1; y2, 1) times it.
  LaurentPoly pmin = ypoly(r, {{1, -1}, {2, -1}});
  LaurentPoly y1 = LaurentPoly::var(r, "y1"), y2 = LaurentPoly::var(r, "y2");
  CHECK(m.at(0, 0) == pmin * (y2 + y1 * y2));
  CHECK(m.at(0, 1) == pmin);
  CHECK(m.at(1, 0) == pmin * y2);
  CHECK(m.at(1, 1) == pmin);
  CHECK(to_string(det(m)) == "1");
}

TEST_CASE("determinant of the factorization matrix is 1") {
  for (int n = 1; n <= 4; ++n) CHECK(to_string(det(factorization_matrix(n))) == "1");
}

TEST_CASE("n=1 Hamiltonian in both coordinate systems") {
  Ring yr = y_ring(1);
  LaurentPoly pmin = ypoly(yr, {{1, -1}, {2, -1}});
  LaurentPoly y1 = LaurentPoly::var(yr, "y1"), y2 = LaurentPoly::var(yr, "y2");
  CHECK(hamiltonian_matrix(1, 1, 'y') ==
        pmin * (LaurentPoly::constant(yr, 1) + y2 + y1 * y2));

  // x-coordinates: y1 = x2^2, y2 = x1^-2, prefactor x1 x2^-1.
  Ring xr = x_ring(1);
  LaurentPoly pre = LaurentPoly::var_pow(xr, 0, 2) * LaurentPoly::var_pow(xr, 1, -2);
  LaurentPoly one = LaurentPoly::constant(xr, 1);
  LaurentPoly yy2 = LaurentPoly::var_pow(xr, 0, -4);
  LaurentPoly yy1 = LaurentPoly::var_pow(xr, 1, 4);
  CHECK(hamiltonian_matrix(1, 1, 'x') == pre * (one + yy2 + yy1 * yy2));
}

TEST_CASE("n=2 Hamiltonians match the closed forms") {
  Ring yr = y_ring(2);
  LaurentPoly one = LaurentPoly::constant(yr, 1);
  LaurentPoly y1 = LaurentPoly::var(yr, "y1"), y2 = LaurentPoly::var(yr, "y2");
  LaurentPoly y3 = LaurentPoly::var(yr, "y3"), y4 = LaurentPoly::var(yr, "y4");
  LaurentPoly pre1 = ypoly(yr, {{1, -1}, {2, -1}, {3, -2}, {4, -2}});
  CHECK(hamiltonian_matrix(2, 1, 'y') ==
        pre1 * (one + y4 + y3 * y4 + y2 * y3 * y4 + y1 * y2 * y3 * y4));
  LaurentPoly pre2 = ypoly(yr, {{1, -2}, {2, -2}, {3, -1}, {4, -1}});
  CHECK(hamiltonian_matrix(2, 2, 'y') ==
        pre2 * (one + y2 + y1 * y2 + y1 * y2 * y4 + y1 * y2 * y3 * y4));
}

TEST_CASE("y_to_x images follow the Cartan matrix") {
  auto img = y_to_x(2);
  Ring xr = x_ring(2);
  // y1 = x2^2 x4^-1, y2 = x1^-2 x3, y3 = x2^-1 x4^2, y4 = x1 x3^-2.
  CHECK(img.at("y1") == LaurentPoly::var_pow(xr, 1, 6) * LaurentPoly::var_pow(xr, 3, -3));
  CHECK(img.at("y2") == LaurentPoly::var_pow(xr, 0, -6) * LaurentPoly::var_pow(xr, 2, 3));
  CHECK(img.at("y3") == LaurentPoly::var_pow(xr, 1, -3) * LaurentPoly::var_pow(xr, 3, 6));
  CHECK(img.at("y4") == LaurentPoly::var_pow(xr, 0, 3) * LaurentPoly::var_pow(xr, 2, -6));
}

TEST_CASE("Hamiltonians are integral Laurent polynomials in x") {
  for (int n = 1; n <= 4; ++n)
    for (int k = 1; k <= n; ++k) {
      LaurentPoly h = hamiltonian_matrix(n, k, 'x');
      for (const auto& [e, c] : h.terms())
        for (long long num : e) CHECK(num % h.ring().den == 0);
    }
}
