#pragma once
// jacobian.hpp
// ------------
// The labeled quiver Q_n with potential W_n, its cyclic-derivative relations
// and path basis, the P^1-family of modules M_i^lambda with explicit edge
// matrices, coefficient quivers, submodule enumeration, cluster characters,
// and the framed generating function.

#include <boost/multiprecision/cpp_int.hpp>
#include <boost/rational.hpp>

#include <map>
#include <string>
#include <vector>

#include "../exactalg/laurent.hpp"

namespace jacobian {

using exactalg::LaurentPoly;
using exactalg::Ring;
using Rat = boost::multiprecision::cpp_rational;

// Labeled edges of Q_n: a_i, b_i : 2i-1 -> 2i (1<=i<=n),
// r_i : 2i -> 2i+1 (1<=i<=n-1), l_i : 2i -> 2i-3 (2<=i<=n).
struct Edge {
  char kind;  // 'a', 'b', 'r', 'l'
  int idx;    // the subscript i
  bool operator==(const Edge& o) const { return kind == o.kind && idx == o.idx; }
  bool operator<(const Edge& o) const {
    return kind != o.kind ? kind < o.kind : idx < o.idx;
  }
};

bool edge_exists(int n, const Edge& e);
int edge_source(const Edge& e);  // 1-based Q_n vertex
int edge_target(const Edge& e);
std::string edge_name(const Edge& e);

// A path word in traversal order: word[0] is traversed first.
using Word = std::vector<Edge>;

struct SignedWord {
  int sign;  // +1 or -1
  Word word;
};

// The 2(n-1) signed cyclic terms of W_n.
std::vector<SignedWord> potential_terms(int n);

struct Relation {
  Edge wrt;                       // the edge differentiated against
  std::vector<SignedWord> terms;  // 1 or 2 terms; out-of-range terms dropped
};

std::vector<Relation> cyclic_derivatives(int n);

struct PathTuple {
  int s, t;       // source and target vertices (1-based)
  int lam, rho;   // counts of l- and r-edges
  int a, b;       // counts of a- and b-edges
};

// Number of vertical (a or b) edges forced by (s, t, lam, rho).
int forced_vertical_count(int s, int t, int lam, int rho);

bool is_basis_tuple(int n, const PathTuple& T);

// Coefficient quiver of the basis {t_l} of M_i^lambda: vertices (t, l) with
// 0 <= l <= i-1 and 2(i-l)-1 <= t <= 2(n-l); edges (t,l)->(t+1,l) and, for t
// even, (t,l)->(t-3,l+1), whenever the target is a vertex. Double vertical
// edges are collapsed.
struct CoefficientQuiver {
  int n = 0, i = 0;
  std::vector<std::pair<int, int>> verts;        // (t, l), sorted
  std::vector<std::vector<int>> out;             // out-neighbor vertex indices
  int index_of(int t, int l) const;              // -1 if absent
};

CoefficientQuiver build_coefficient_quiver(int n, int i);

// All successor-closed vertex subsets, as characteristic vectors over verts.
std::vector<std::vector<char>> enumerate_submodule_supports(const CoefficientQuiver& g);

// Dimension vectors over Q_n vertices (size 2n), sorted lexicographically.
std::vector<std::vector<int>> enumerate_submodules(const CoefficientQuiver& g);

// For each submodule support, the tuple m_l = min{t : (t,l) in S} (or
// 2(n-l)+1 when level l is empty), l = 0..i-1.
std::vector<std::vector<int>> submodule_mtuples(const CoefficientQuiver& g);

// x_{2v-1} x_{2v}^{-1} * sum over submodules N of y^{dim N}, v = n+1-i,
// expanded in the x-ring via y_j -> prod_k x_k^{(Q_n)_{jk}}.
LaurentPoly cluster_character(int n, int i);

// x_{2k-1} x_{2k}^{-1} * sum over submodules of M_{n+1-k}^lambda; equals
// cluster_character(n, n+1-k).
LaurentPoly framed_generating_function(int n, int k);

// M_i^lambda in the basis {t_l}, with one matrix per labeled edge acting on
// column coordinate vectors.
struct ConcreteModule {
  int n = 0, i = 0;
  Rat l1, l2;                                 // lambda = (l1 : l2)
  std::vector<std::pair<int, int>> basis;     // (t, l), same order as quiver
  std::map<Edge, std::vector<std::vector<Rat>>> act;
};

ConcreteModule build_module_matrices(int n, int i, const Rat& l1, const Rat& l2);

// Matrix of a word acting on the whole module (block over basis); the word
// must be composable. Out-of-range edges give the zero matrix.
std::vector<std::vector<Rat>> word_matrix(const ConcreteModule& m, const Word& w);

// True when every cyclic-derivative relation vanishes as a matrix identity.
bool relations_vanish(const ConcreteModule& m);

// Submodule supports recovered from the matrices alone: candidate subspaces
// are spanned by l-order tails at each Q_n vertex (the invariant subspaces of
// the E_t operators), filtered by invariance under every edge matrix.
std::vector<std::vector<char>> submodule_supports_from_matrices(const ConcreteModule& m);

}  // namespace jacobian
