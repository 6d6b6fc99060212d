// test_cluster.cpp
// ----------------
// Unit tests for quivers, mutation, seeds, and the p map.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>
#include <functional>

#include "cluster/cluster.hpp"

using namespace cluster;
using exactalg::LaurentPoly;
using exactalg::Ring;

TEST_CASE("Q_n structure") {
  Quiver q = build_Qn(3);
  CHECK(q.n == 6);
  // Double arrow 2i-1 -> 2i.
  CHECK(q.adj[0][1] == 2);
  CHECK(q.adj[2][3] == 2);
  CHECK(q.adj[4][5] == 2);
  // Rightward 2i -> 2i+1 and leftward 2i -> 2i-3.
  CHECK(q.adj[1][2] == 1);
  CHECK(q.adj[3][4] == 1);
  CHECK(q.adj[3][0] == 1);
  CHECK(q.adj[5][2] == 1);
  // Skew-symmetry of the signed matrix.
  for (int i = 0; i < q.n; ++i)
    for (int j = 0; j < q.n; ++j) CHECK(q.adj[i][j] == -q.adj[j][i]);
  // Total arrow count of Q_3 is 10 (3 doubles + 2 right + 2 left).
  int arrows = 0;
  for (int i = 0; i < q.n; ++i)
    for (int j = 0; j < q.n; ++j) arrows += std::max(q.adj[i][j], 0);
  CHECK(arrows == 10);
}

TEST_CASE("quiver mutation is involutive") {
  for (int n = 1; n <= 3; ++n) {
    Quiver q = build_Qn(n);
    for (int k = 1; k <= q.n; ++k) CHECK(mutate_quiver(mutate_quiver(q, k), k) == q);
  }
}

TEST_CASE("seed mutation is involutive") {
  SeedA s = initial_seed_a(build_Qn(2));
  for (int k = 1; k <= 4; ++k) {
    SeedA t = mutate_seed_a(mutate_seed_a(s, k), k);
    CHECK(t.quiver == s.quiver);
    for (int j = 0; j < 4; ++j) CHECK(t.vars[j] == s.vars[j]);
  }
  SeedX x = initial_seed_x(build_Qn(2));
  for (int k = 1; k <= 4; ++k) {
    SeedX t = mutate_seed_x(mutate_seed_x(x, k), k);
    CHECK(t.quiver == x.quiver);
    for (int j = 0; j < 4; ++j) CHECK(ratfn_equal(t.vars[j], x.vars[j]));
  }
}

TEST_CASE("cluster variables stay Laurent to depth 4") {
  // exact_divide throws if an exchange ever fails to divide, so simply
  // walking the mutation tree is the Laurent check.
  SeedA root = initial_seed_a(build_Qn(2));
  std::function<void(const SeedA&, int, int)> walk = [&](const SeedA& s, int last, int depth) {
    if (depth == 0) return;
    for (int k = 1; k <= s.quiver.n; ++k) {
      if (k == last) continue;
      walk(mutate_seed_a(s, k), k, depth - 1);
    }
  };
  CHECK_NOTHROW(walk(root, 0, 4));
}

TEST_CASE("p map matches the quiver exponents") {
  Quiver q = build_Qn(2);
  Ring yr = exactalg::make_ring("y", 4, 1);
  Ring xr = exactalg::make_ring("x", 4, 1);
  auto images = p_map_images(q, yr, xr);
  // y_1 -> prod_j x_j^{Q_1j} = x2^2 x4^-1.
  CHECK(images.at("y1") ==
        exactalg::LaurentPoly::var_pow(xr, 1, 2) * exactalg::LaurentPoly::var_pow(xr, 3, -1));
  // y_2 -> x1^-2 x3.
  CHECK(images.at("y2") == exactalg::LaurentPoly::var_pow(xr, 0, -2) * exactalg::LaurentPoly::var(xr, "x3"));
  LaurentPoly p = exactalg::LaurentPoly::var(yr, "y1") * exactalg::LaurentPoly::var(yr, "y2");
  CHECK(p_map(q, p, xr) == images.at("y1") * images.at("y2"));
}

TEST_CASE("X-seed mutation matches quiver mutation") {
  Quiver q = build_Qn(2);
  SeedX s = initial_seed_x(q);
  SeedX t = mutate_seed_x(s, 2);
  CHECK(t.quiver == mutate_quiver(q, 2));
}

TEST_CASE("dot export is deterministic and expands multi-edges") {
  std::string d1 = quiver_dot(build_Qn(3));
  std::string d2 = quiver_dot(build_Qn(3));
  CHECK(d1 == d2);
  size_t edges = 0, pos = 0;
  while ((pos = d1.find("->", pos)) != std::string::npos) {
    ++edges;
    pos += 2;
  }
  CHECK(edges == 10);
}
