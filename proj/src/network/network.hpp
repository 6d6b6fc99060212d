#pragma once
// network.hpp
// -----------
// The strong-coupling Toda spectral network: the standard local model W_N
// with exact rational wall phases, splittings and their root data, homology
// and quadratic-refinement bookkeeping on the spectral curve, the BPS
// spectrum and quiver, the annular graph of a splitting, path-lifting
// parallel transport, holonomy-trace Hamiltonians, and a numerical
// wall-trajectory tracer.

#include <boost/rational.hpp>

#include <complex>
#include <string>
#include <utility>
#include <vector>

#include "../annular/annular.hpp"
#include "../cluster/cluster.hpp"
#include "../exactalg/polymatrix.hpp"

namespace network {

using exactalg::LaurentPoly;
using exactalg::PolyMatrix;
using exactalg::Ring;
using Angle = boost::rational<long long>;  // phases in turns (1 turn = 2*pi)
using Pair = std::pair<int, int>;          // ordered sheet pair (i, j)

struct Wall {
  Pair label;
  Angle phase;  // in (cut-1, cut]
};

struct WallModel {
  int N = 0;
  Angle cut;  // branch-window endpoint for phase representatives
  std::vector<Wall> walls;  // sorted by phase
};

// The standard network W_N: for each ordered pair (i,j) the wall rays solve
// (1+1/N) * phase = -arg(w_ij) (mod 1 turn), with representatives taken in
// the window (cut-1, cut], cut = 1/4 by default.
WallModel standard_network(int N, Angle cut = Angle(1, 4));

// arg(w_ij) in turns for the N-th roots of unity model.
Angle omega_arg(int N, int i, int j);

struct SplittingData {
  int N = 0;
  std::vector<Pair> Phi, Phip;               // positive pairs and their duals
  std::vector<Pair> Delta, Delta_a, Delta_b;  // simple pairs and the split
  std::vector<Pair> Deltap, Deltap_a, Deltap_b;
  std::vector<int> sigma, sigmap;  // sheet orders; Delta = {s_0s_1, ...}
  std::vector<int> tau_a;          // product of Delta_a transpositions
  // alpha[k-1] = sigma_{k-1}sigma_k; alphap[k-1] = tau_a(sigma_k sigma_{k-1}).
  std::vector<Pair> alpha, alphap;
  std::vector<char> alpha_in_a;    // alpha_k in Delta_a?
  std::vector<char> alphap_in_ap_a;
};

// Splitting of the standard network at phase theta (snapped to the next wall
// counterclockwise when theta is not itself a wall phase).
SplittingData splitting(const WallModel& model, Angle theta);

// Splitting of the Toda network at the branch point +i: walls emanate in
// directions psi with (1+1/N) psi = theta - arg(-2i w_ij) (mod 1), and only
// the N+1 inward multiwalls (psi in the lower half circle) survive.
// Throws std::invalid_argument for nongeneric theta.
SplittingData toda_splitting(int N, Angle theta);

// Homology classes on the spectral curve in the A/B basis,
// <A_i, B_j> = delta_ij. Coefficients are exact rationals so the fractional
// classes D_j can be represented.
struct HomologyClass {
  int N = 0;
  std::vector<boost::rational<long long>> A, B;  // indices 1..N-1 stored 0-based
};

HomologyClass hclass_zero(int N);
HomologyClass hclass_add(const HomologyClass& x, const HomologyClass& y);
HomologyClass hclass_scale(const boost::rational<long long>& c, const HomologyClass& x);
bool hclass_integral(const HomologyClass& x);
boost::rational<long long> intersection(const HomologyClass& x, const HomologyClass& y);

// gamma_k = B_k when alpha_k is type a, else A_{k-1} - 2A_k + A_{k+1} - B_k;
// gamma'_k dually. D_j = A_{N-1} + sum_{i>j} (gamma_i + gamma'_i).
HomologyClass gamma_class(const SplittingData& s, int k);
HomologyClass gammap_class(const SplittingData& s, int k);
HomologyClass D_class(int N, int j);

// The quadratic refinement with sigma~(A_i)=1, sigma~(B_i)=-1; throws on
// fractional classes.
int quadratic_refinement(const HomologyClass& c);

struct BPSData {
  SplittingData split;
  std::vector<HomologyClass> positive;            // R then L classes
  std::vector<HomologyClass> gamma, gammap;       // basis, index k-1
  std::vector<int> vertex_gamma, vertex_gammap;   // 1-based Q_{N-1} vertices
  cluster::Quiver quiver;                         // on 2(N-1) vertices
};

BPSData bps_spectrum(int N, Angle theta);

// The annular graph N_W of a splitting: N rows; band b gets its up/down
// verticals at columns (1/5, 4/5) when alpha_b is type b and (2/5, 3/5) when
// type a, with a small per-band stagger to keep angles distinct. Face labels
// follow the vertex identification (right of up = y_{2b-1}, right of down =
// y_{2b}).
annular::AnnularGraph build_network_graph(const SplittingData& s);

// The y-coordinate ring of Q_{N-1}: y1..y_{2(N-1)} over denominator N.
Ring holonomy_ring(int N);

// Homology class of a y-monomial exponent vector (numerators over den N).
HomologyClass class_of_monomial(const SplittingData& s, const exactalg::Expo& e);

// Parallel transport of the unit circle in row space: the ordered product of
// one unipotent wall-crossing factor and one diagonal face factor per
// vertical, times the minimal-weight scalar. Asserts sigma~=1 on every
// monomial class occurring in the entries.
PolyMatrix lift_path(const SplittingData& s);

// exterior_trace(lift_path, k) pushed to x-coordinates; equals
// hamiltonian_matrix(N-1, k, 'x').
LaurentPoly holonomy_trace(int N, int k, Angle theta);

// All distinct splittings found by scanning 4(N+1) equispaced generic phases.
std::vector<SplittingData> splitting_scan(int N);

struct Trajectory {
  std::vector<double> t;
  std::vector<std::complex<double>> z;
  std::vector<std::complex<double>> w;  // tracked branch of (z+1/z)^{1/N}
  std::string monotonicity;             // "decreasing", "constant", "increasing", "mixed"
  std::string termination;              // "t_max", "origin", "branch_point"
};

// Unit-speed integration of arg z'(t) = phi + arg(z / (z+1/z)^{1/N}) with
// RK4 and nearest-root branch continuation; the step is capped at 0.01
// within distance 0.1 of the branch points +-i.
Trajectory trace_trajectory(int N, double phi, std::complex<double> z0, double step,
                            double t_max);

std::string trajectory_csv(const Trajectory& tr);

}  // namespace network
