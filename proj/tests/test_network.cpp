// test_network.cpp
// ----------------
// Unit tests for the spectral-network module: wall models, splittings,
// homology bookkeeping, the BPS quiver, path lifting, holonomy traces, and
// the trajectory tracer.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <random>
#include <set>
#include <sstream>

#include "network/network.hpp"
#include "toda/toda.hpp"

using namespace network;
using exactalg::LaurentPoly;
using exactalg::PolyMatrix;

TEST_CASE("standard network wall census") {
  for (int N = 2; N <= 6; ++N) {
    WallModel m = standard_network(N);
    // Each ordered pair contributes one or two phase representatives in the
    // unit window, totalling N^2 - 1.
    CHECK((int)m.walls.size() == N * N - 1);
    for (size_t i = 0; i + 1 < m.walls.size(); ++i)
      CHECK(m.walls[i].phase <= m.walls[i + 1].phase);
    for (const Wall& w : m.walls) {
      CHECK(w.phase <= m.cut);
      CHECK(w.phase > m.cut - 1);
      // (1+1/N) phase = -omega_arg mod 1.
      Angle lhs = w.phase * Angle(N + 1, N) + omega_arg(N, w.label.first, w.label.second);
      CHECK(lhs.denominator() == 1);
    }
  }
}

TEST_CASE("omega_arg antisymmetry up to a half turn") {
  for (int N = 2; N <= 5; ++N)
    for (int i = 0; i < N; ++i)
      for (int j = 0; j < N; ++j) {
        if (i == j) continue;
        Angle d = omega_arg(N, i, j) - omega_arg(N, j, i) - Angle(1, 2);
        CHECK((d - d.numerator() / d.denominator()).numerator() % d.denominator() == 0);
      }
}

TEST_CASE("the N=5 scan contains the reference splitting") {
  bool found = false;
  for (const SplittingData& s : splitting_scan(5)) {
    CHECK(s.Phi.size() == 10);
    CHECK(s.alpha.size() == 4);
    if (s.sigma == std::vector<int>{1, 2, 0, 3, 4}) {
      found = true;
      CHECK(s.Delta_a == std::vector<Pair>{{0, 3}, {1, 2}});
      CHECK(s.Delta_b == std::vector<Pair>{{2, 0}, {3, 4}});
    }
  }
  CHECK(found);
}

TEST_CASE("toda splitting invariants") {
  for (int N = 2; N <= 6; ++N) {
    SplittingData s = toda_splitting(N, Angle(1, 1000));
    CHECK(s.N == N);
    CHECK((int)s.Phi.size() == N * (N - 1) / 2);
    CHECK((int)s.Phip.size() == N * (N - 1) / 2);
    CHECK((int)s.alpha.size() == N - 1);
    CHECK((int)s.Delta.size() == N - 1);
    if (N == 2)
      CHECK(s.Delta_a == s.Delta_b);  // one multiwall plays both roles
    else
      CHECK((int)s.Delta_a.size() + (int)s.Delta_b.size() == N - 1);
    // sigma is a permutation of 0..N-1.
    std::vector<int> p = s.sigma;
    std::sort(p.begin(), p.end());
    for (int i = 0; i < N; ++i) CHECK(p[i] == i);
    // alpha_k links consecutive sigma entries.
    for (int k = 1; k < N; ++k) {
      Pair a = s.alpha[k - 1];
      bool ok = (a == Pair{s.sigma[k - 1], s.sigma[k]}) ||
                (a == Pair{s.sigma[k], s.sigma[k - 1]});
      CHECK(ok);
    }
  }
  CHECK_THROWS_AS(toda_splitting(3, Angle(0)), std::invalid_argument);
}

TEST_CASE("splitting scan finds the expected number of distinct splittings") {
  const int expected[] = {0, 0, 2, 4, 5, 6, 7};
  for (int N = 2; N <= 6; ++N) CHECK((int)splitting_scan(N).size() == expected[N]);
}

TEST_CASE("homology pairing and the quadratic refinement") {
  int N = 4;
  HomologyClass A = hclass_zero(N), B = hclass_zero(N);
  A.A[1] = 1;
  B.B[1] = 1;
  CHECK(intersection(A, B) == Angle(1));
  CHECK(intersection(B, A) == Angle(-1));
  CHECK(intersection(A, A) == Angle(0));
  CHECK(quadratic_refinement(A) == 1);
  CHECK(quadratic_refinement(B) == -1);
  // sigma~(c+c') = sigma~(c) sigma~(c') (-1)^(<c,c'>) on random integral
  // classes.
  std::mt19937 rng(7);
  std::uniform_int_distribution<int> coef(-3, 3);
  for (int trial = 0; trial < 500; ++trial) {
    HomologyClass c = hclass_zero(N), d = hclass_zero(N);
    for (int i = 0; i < N - 1; ++i) {
      c.A[i] = coef(rng); c.B[i] = coef(rng);
      d.A[i] = coef(rng); d.B[i] = coef(rng);
    }
    Angle pair = intersection(c, d);
    int sign = (pair.numerator() % 2 == 0) ? 1 : -1;
    CHECK(quadratic_refinement(hclass_add(c, d)) ==
          quadratic_refinement(c) * quadratic_refinement(d) * sign);
  }
}

TEST_CASE("D classes are refinement-positive and gamma classes negative") {
  for (int N = 2; N <= 5; ++N) {
    SplittingData s = toda_splitting(N, Angle(1, 1000));
    for (int j = 1; j <= N - 1; ++j) CHECK(quadratic_refinement(D_class(N, j)) == 1);
    for (int k = 1; k <= N - 1; ++k) {
      CHECK(quadratic_refinement(gamma_class(s, k)) == -1);
      CHECK(quadratic_refinement(gammap_class(s, k)) == -1);
    }
  }
}

TEST_CASE("BPS quiver is the Toda quiver") {
  for (int N = 2; N <= 8; ++N) {
    BPSData b = bps_spectrum(N, Angle(1, 1000));
    CHECK(b.quiver.adj == cluster::build_Qn(N - 1).adj);
    CHECK((int)b.positive.size() == N * (N - 1));
    // The vertex assignment is a bijection onto 1..2(N-1).
    std::set<int> seen(b.vertex_gamma.begin(), b.vertex_gamma.end());
    seen.insert(b.vertex_gammap.begin(), b.vertex_gammap.end());
    CHECK((int)seen.size() == 2 * (N - 1));
  }
}

TEST_CASE("lifted transport matches the annular transfer matrix") {
  for (int N = 2; N <= 4; ++N) {
    SplittingData s = toda_splitting(N, Angle(1, 1000));
    annular::AnnularGraph g = build_network_graph(s);
    Ring r = holonomy_ring(N);
    PolyMatrix lift = lift_path(s);
    PolyMatrix transfer = annular::transfer_matrix(g, r, annular::minimal_weight(g, r));
    REQUIRE(lift.size() == transfer.size());
    for (size_t i = 0; i < lift.size(); ++i)
      for (size_t j = 0; j < lift.size(); ++j) CHECK(lift.at(i, j) == transfer.at(i, j));
  }
}

TEST_CASE("network graphs are move equivalent to the standard ones") {
  for (int N = 3; N <= 4; ++N)
    for (const SplittingData& s : splitting_scan(N))
      CHECK(annular::move_equivalent(build_network_graph(s), annular::build_Ni(N - 1)));
}

TEST_CASE("holonomy traces reproduce the Hamiltonians") {
  for (int N = 2; N <= 4; ++N)
    for (int k = 1; k <= N - 1; ++k)
      CHECK(holonomy_trace(N, k, Angle(1, 1000)) ==
            todasys::hamiltonian_matrix(N - 1, k, 'x'));
}

TEST_CASE("unit circle trajectories") {
  // On |z| = 1 the flow at phi = -pi/2 is tangent: |z| stays constant until
  // a branch point is reached.
  Trajectory tr = trace_trajectory(2, -1.5707963267948966, {1.0, 0.0}, 0.01, 6.0);
  CHECK(tr.monotonicity == "constant");
  CHECK((tr.termination == "branch_point" || tr.termination == "t_max"));
  for (std::complex<double> z : tr.z) CHECK(std::abs(std::abs(z) - 1.0) < 1e-4);

  // Inside the circle the radius decreases toward the origin.
  Trajectory in = trace_trajectory(2, -1.5707963267948966, {0.6, -0.3}, 0.01, 10.0);
  CHECK(in.monotonicity == "decreasing");
  CHECK(in.termination == "origin");
  CHECK(std::abs(in.z.back()) < 0.03);
}

TEST_CASE("trajectory CSV format") {
  Trajectory tr = trace_trajectory(2, -1.5707963267948966, {0.5, 0.2}, 0.05, 1.0);
  std::istringstream csv(trajectory_csv(tr));
  std::string line;
  REQUIRE(std::getline(csv, line));
  CHECK(line == "t,re_z,im_z,abs_z,branch_re,branch_im");
  size_t rows = 0;
  while (std::getline(csv, line)) {
    ++rows;
    CHECK(std::count(line.begin(), line.end(), ',') == 5);
  }
  CHECK(rows == tr.t.size());
}
