#pragma once
// cluster.hpp
// -----------
// Quivers (signed adjacency matrices), quiver mutation, A- and X-seed
// mutation, and the monomial map p from X- to A-coordinates. Vertex indices
// are 1-based at the API boundary to match the usual labeling of Q_n.

#include <string>
#include <vector>

#include "../exactalg/laurent.hpp"

namespace cluster {

using exactalg::LaurentPoly;
using exactalg::Ring;

struct Quiver {
  int n = 0;                              // vertex count
  std::vector<std::vector<int>> adj;      // adj[i][j] = #(i->j) - #(j->i), 0-based

  bool operator==(const Quiver& o) const { return n == o.n && adj == o.adj; }
};

// The quiver Q_n on 2n vertices: two arrows (2i-1)->(2i); (2i)->(2i+1) for
// i < n; (2i)->(2i-3) for i >= 2 (1-based vertex labels).
Quiver build_Qn(int n);

// Mutation at vertex k (1-based).
Quiver mutate_quiver(const Quiver& q, int k);

// A-seed: cluster variables as Laurent polynomials in the initial x's.
struct SeedA {
  Quiver quiver;
  Ring ring;                      // x1..xn, denominator 1
  std::vector<LaurentPoly> vars;
};

SeedA initial_seed_a(const Quiver& q);
SeedA mutate_seed_a(const SeedA& s, int k);

// X-seed: y-coordinates as reduced numerator/denominator pairs over the
// initial y-ring.
struct RatFn {
  LaurentPoly num, den;
};

struct SeedX {
  Quiver quiver;
  Ring ring;                      // y1..yn, denominator 1
  std::vector<RatFn> vars;
};

SeedX initial_seed_x(const Quiver& q);
SeedX mutate_seed_x(const SeedX& s, int k);

// Cross-multiplied equality of rational expressions.
bool ratfn_equal(const RatFn& a, const RatFn& b);

// p_Q^*: y_i -> prod_j x_j^{Q_ij}, as a substitution table from yring into
// xring (both denominator-1 rings with matching variable counts).
std::map<std::string, LaurentPoly> p_map_images(const Quiver& q, const Ring& yring,
                                                const Ring& xring);
LaurentPoly p_map(const Quiver& q, const LaurentPoly& p, const Ring& xring);

// DOT export with multi-edges expanded.
std::string quiver_dot(const Quiver& q);

}  // namespace cluster
