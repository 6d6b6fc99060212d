#pragma once
// annular.hpp
// -----------
// Directed graphs embedded in an annulus: r leftward horizontal row cycles
// (row 0 at the top) joined by up/down verticals at exact rational angles,
// with a y-variable label on each bounded face. Provides closed-path and
// nonintersecting-tuple enumeration, LGV-style weighted sums, the boundary
// transfer matrix, the trivalent slide move, and the m-tuple oracle.

#include <boost/rational.hpp>

#include <string>
#include <vector>

#include "../exactalg/polymatrix.hpp"

namespace annular {

using exactalg::LaurentPoly;
using exactalg::PolyMatrix;
using exactalg::Ring;
using Angle = boost::rational<long long>;

struct Vertical {
  int band;     // 1..rows-1; connects rows band-1 (top) and band (bottom)
  Angle angle;  // in [0,1), distinct across all verticals
  bool up;      // true: directed row band -> row band-1; false: the reverse
};

struct AnnularGraph {
  int rows = 0;
  std::vector<Vertical> verts;  // sorted by ascending angle
  // Per band (index band-1): y-variable indices (1-based) of the face
  // immediately right of the up-vertical and of the down-vertical.
  std::vector<std::pair<int, int>> labels;
};

// The graph N_i for the rank-n Toda chain: n+1 rows; band b has an
// up-vertical at angle b/(2n+1) and a down-vertical at (n+b)/(2n+1); the
// face right of the up-vertical is labeled y_{2b-1}, right of the
// down-vertical y_{2b}.
AnnularGraph build_Ni(int n);

// A simple closed directed path winding once, encoded by its row on each
// angular arc (arc i ends at vertical i; arc 0 wraps past angle 0).
struct ClosedPath {
  std::vector<int> row;  // size = verts.size()
  bool operator==(const ClosedPath& o) const { return row == o.row; }
};

std::vector<ClosedPath> enumerate_closed_paths(const AnnularGraph& g);

bool paths_disjoint(const AnnularGraph& g, const ClosedPath& p, const ClosedPath& q);

// All vertex-disjoint k-sets, as sorted index lists into enumerate_closed_paths.
std::vector<std::vector<int>> nonintersecting_tuples(const AnnularGraph& g, int k);

// Product over faces lying between the path and the bottom row, times base.
LaurentPoly path_weight(const AnnularGraph& g, const ClosedPath& p, const Ring& ring,
                        const LaurentPoly& base);
LaurentPoly tuple_weight(const AnnularGraph& g, const std::vector<ClosedPath>& paths,
                         const std::vector<int>& tuple, const Ring& ring,
                         const LaurentPoly& base);
// Sum of tuple_weight over all nonintersecting k-tuples.
LaurentPoly tuple_sum(const AnnularGraph& g, int k, const Ring& ring,
                      const LaurentPoly& base);

// The minimal-path weight prod_i (y_{2i-1} y_{2i})^{-i/den} in the given ring.
LaurentPoly minimal_weight(const AnnularGraph& g, const Ring& ring);

// H_k by nonintersecting path sums on build_Ni(n), in y-coordinates.
LaurentPoly hamiltonian_paths(int n, int k);

// Boundary-to-boundary weighted path matrix of the cut-open graph on
// [0,1]^2: entry (i,j) sums weights of directed paths entering at row j on
// the right edge and leaving at row i on the left edge.
PolyMatrix transfer_matrix(const AnnularGraph& g, const Ring& ring,
                           const LaurentPoly& base);

// Slide move: swap verticals vi (band b) and vj (band b+1) of opposite
// directions, angularly adjacent among verticals of bands {b-1..b+2}.
// Throws std::invalid_argument for non-movable sites.
AnnularGraph apply_move(const AnnularGraph& g, int vi, int vj);

// True when g2 is reachable from g1 by slide moves together with the free
// isotopies (cyclic rotation; transposing angular neighbors whose bands
// differ by at least 2). Face labels must match along the way.
bool move_equivalent(const AnnularGraph& g1, const AnnularGraph& g2, int* moves_used = nullptr);

// All i-tuples (m_0..m_{i-1}) with 2(i-l)-1 <= m_l <= 2(n-l)+1 and
// m_{l+1} <= m_l - 3 for m_l even, m_{l+1} <= m_l - 2 for m_l odd.
std::vector<std::vector<int>> mtuple_oracle(int n, int i);

std::string graph_dot(const AnnularGraph& g);

}  // namespace annular
