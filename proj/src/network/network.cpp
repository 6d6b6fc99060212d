// network.cpp
// -----------
// Implementation of the strong-coupling spectral network combinatorics,
// homology bookkeeping, path lifting, and the trajectory tracer.

#include "network.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>

#include "../toda/toda.hpp"

namespace network {

namespace {

Angle mod1(Angle a) {
  long long f = (a.numerator() >= 0) ? a.numerator() / a.denominator()
                                     : -((-a.numerator() + a.denominator() - 1) / a.denominator());
  return a - f;
}

}  // namespace

Angle omega_arg(int N, int i, int j) {
  // arg(w^i - w^j) for w = exp(2*pi*I/N): the chord direction
  // (i+j)/(2N) + 1/4, shifted by a half turn when i < j.
  Angle a(i + j, 2LL * N);
  a += Angle(1, 4);
  if (i < j) a += Angle(1, 2);
  return mod1(a);
}

WallModel standard_network(int N, Angle cut) {
  if (N < 2) throw std::invalid_argument("standard_network: N >= 2");
  WallModel m;
  m.N = N;
  m.cut = cut;
  for (int i = 0; i < N; ++i) {
    for (int j = 0; j < N; ++j) {
      if (i == j) continue;
      Angle a = omega_arg(N, i, j);
      // (1 + 1/N) * phase + arg(w_ij) = 0 (mod 1):
      // phase = N (m - a) / (N+1) in the window (cut-1, cut].
      for (long long k = -3; k <= 3; ++k) {
        Angle phase = Angle(N, N + 1) * (Angle(k) - a);
        if (phase > cut - 1 && phase <= cut) m.walls.push_back({{i, j}, phase});
      }
    }
  }
  std::sort(m.walls.begin(), m.walls.end(),
            [](const Wall& x, const Wall& y) { return x.phase < y.phase; });
  return m;
}

namespace {

// Chain 0 -> 1 -> ... through the ordered pairs of Delta; returns the sheet
// order sigma with Delta = {sigma_0 sigma_1, ..., sigma_{N-2} sigma_{N-1}}.
std::vector<int> chain_order(int N, const std::vector<Pair>& delta) {
  if ((int)delta.size() != N - 1)
    throw std::invalid_argument("splitting: simple-pair count is not N-1");
  std::map<int, int> next;
  std::set<int> targets;
  for (const Pair& p : delta) {
    if (next.count(p.first)) throw std::invalid_argument("splitting: pairs do not chain");
    next[p.first] = p.second;
    targets.insert(p.second);
  }
  int start = -1;
  for (const Pair& p : delta)
    if (!targets.count(p.first)) start = p.first;
  if (start < 0) throw std::invalid_argument("splitting: pairs do not chain");
  std::vector<int> sigma{start};
  while (next.count(sigma.back())) sigma.push_back(next[sigma.back()]);
  if ((int)sigma.size() != N) throw std::invalid_argument("splitting: pairs do not chain");
  return sigma;
}

int apply_perm(const std::vector<int>& p, int x) { return p[x]; }

bool contains_pair(const std::vector<Pair>& v, const Pair& p) {
  return std::find(v.begin(), v.end(), p) != v.end();
}

}  // namespace

SplittingData splitting(const WallModel& model, Angle theta) {
  const int N = model.N;
  // Snap theta to the next wall counterclockwise.
  Angle best(2);
  for (const Wall& w : model.walls) best = std::min(best, mod1(w.phase - theta));
  Angle theta_s = mod1(theta + best);
  // Group the walls of the half-open half-plane window by offset from theta_s.
  std::map<Angle, std::vector<Pair>> groups;
  for (const Wall& w : model.walls) {
    Angle off = mod1(w.phase - theta_s);
    if (off < Angle(1, 2)) groups[off].push_back(w.label);
  }
  if (groups.size() < 2) throw std::invalid_argument("splitting: degenerate phase");
  std::vector<std::vector<Pair>> gs;
  for (auto& [off, labels] : groups) {
    std::sort(labels.begin(), labels.end());
    gs.push_back(labels);
  }
  SplittingData s;
  s.N = N;
  for (size_t k = 1; k < gs.size(); ++k)
    for (const Pair& p : gs[k]) s.Phi.push_back(p);
  s.Delta_b = gs[1];
  s.Delta_a = gs.back();
  s.Delta = s.Delta_a;
  for (const Pair& p : s.Delta_b)
    if (!contains_pair(s.Delta, p)) s.Delta.push_back(p);
  s.sigma = chain_order(N, s.Delta);
  // tau_a: product of the (disjoint) Delta_a transpositions.
  s.tau_a.resize(N);
  for (int k = 0; k < N; ++k) s.tau_a[k] = k;
  for (const Pair& p : s.Delta_a) std::swap(s.tau_a[p.first], s.tau_a[p.second]);
  auto tau = [&](const Pair& p) {
    return Pair{apply_perm(s.tau_a, p.first), apply_perm(s.tau_a, p.second)};
  };
  for (const Pair& p : s.Delta) s.Deltap.push_back(tau({p.second, p.first}));
  s.Deltap_a = s.Delta_a;
  for (const Pair& p : s.Delta_b) s.Deltap_b.push_back(tau({p.second, p.first}));
  s.sigmap = chain_order(N, s.Deltap);
  for (int k = 1; k <= N - 1; ++k) {
    Pair ak{s.sigma[k - 1], s.sigma[k]};
    s.alpha.push_back(ak);
    s.alphap.push_back(tau({s.sigma[k], s.sigma[k - 1]}));
    bool in_a = contains_pair(s.Delta_a, ak);
    s.alpha_in_a.push_back(in_a ? 1 : 0);
    s.alphap_in_ap_a.push_back(in_a ? 1 : 0);
  }
  for (int i = 0; i < N; ++i)
    for (int j = i + 1; j < N; ++j) s.Phip.push_back({s.sigmap[i], s.sigmap[j]});
  return s;
}

SplittingData toda_splitting(int N, Angle theta) {
  // Near the branch point +i the wall directions are the standard pattern
  // rotated by rho = N (theta + 1/4) / (N+1); the inward half circle
  // psi in (1/2, 1) pulls back to the window starting at 1/2 - rho.
  Angle rho = Angle(N, N + 1) * (theta + Angle(1, 4));
  Angle theta_eff = mod1(Angle(1, 2) - rho);
  WallModel m = standard_network(N);
  for (const Wall& w : m.walls)
    if (mod1(w.phase - theta_eff).numerator() == 0)
      throw std::invalid_argument("toda_splitting: nongeneric theta (wall-aligned)");
  return splitting(m, theta_eff);
}

HomologyClass hclass_zero(int N) {
  HomologyClass c;
  c.N = N;
  c.A.assign(N - 1, 0);
  c.B.assign(N - 1, 0);
  return c;
}

HomologyClass hclass_add(const HomologyClass& x, const HomologyClass& y) {
  HomologyClass c = x;
  for (int k = 0; k < c.N - 1; ++k) {
    c.A[k] += y.A[k];
    c.B[k] += y.B[k];
  }
  return c;
}

HomologyClass hclass_scale(const boost::rational<long long>& c, const HomologyClass& x) {
  HomologyClass r = x;
  for (int k = 0; k < r.N - 1; ++k) {
    r.A[k] *= c;
    r.B[k] *= c;
  }
  return r;
}

bool hclass_integral(const HomologyClass& x) {
  for (int k = 0; k < x.N - 1; ++k)
    if (x.A[k].denominator() != 1 || x.B[k].denominator() != 1) return false;
  return true;
}

boost::rational<long long> intersection(const HomologyClass& x, const HomologyClass& y) {
  boost::rational<long long> s(0);
  for (int k = 0; k < x.N - 1; ++k) s += x.A[k] * y.B[k] - x.B[k] * y.A[k];
  return s;
}

namespace {

// A_{k-1} - 2A_k + A_{k+1} - B_k (with A_0 = A_N = 0).
HomologyClass complement_class(int N, int k) {
  HomologyClass c = hclass_zero(N);
  if (k - 2 >= 0) c.A[k - 2] += 1;
  c.A[k - 1] -= 2;
  if (k < N - 1) c.A[k] += 1;
  c.B[k - 1] -= 1;
  return c;
}

HomologyClass b_class(int N, int k) {
  HomologyClass c = hclass_zero(N);
  c.B[k - 1] += 1;
  return c;
}

}  // namespace

HomologyClass gamma_class(const SplittingData& s, int k) {
  return s.alpha_in_a[k - 1] ? b_class(s.N, k) : complement_class(s.N, k);
}

HomologyClass gammap_class(const SplittingData& s, int k) {
  return s.alpha_in_a[k - 1] ? complement_class(s.N, k) : b_class(s.N, k);
}

HomologyClass D_class(int N, int j) {
  // D_N = A_{N-1}; D_j = D_N + sum_{i>j} (gamma_i + gamma'_i), and the
  // gamma sums are splitting-independent.
  HomologyClass c = hclass_zero(N);
  c.A[N - 2] += 1;
  for (int i = j + 1; i <= N - 1; ++i)
    c = hclass_add(c, hclass_add(b_class(N, i), complement_class(N, i)));
  return c;
}

int quadratic_refinement(const HomologyClass& c) {
  if (!hclass_integral(c))
    throw std::invalid_argument("quadratic_refinement: fractional class");
  long long e = 0;
  for (int k = 0; k < c.N - 1; ++k) {
    long long a = c.A[k].numerator(), b = c.B[k].numerator();
    e += b + a * b;
  }
  return (e % 2 == 0) ? 1 : -1;
}

BPSData bps_spectrum(int N, Angle theta) {
  BPSData d;
  d.split = toda_splitting(N, theta);
  const SplittingData& s = d.split;
  for (int k = 1; k <= N - 1; ++k) {
    d.gamma.push_back(gamma_class(s, k));
    d.gammap.push_back(gammap_class(s, k));
    d.vertex_gamma.push_back(s.alpha_in_a[k - 1] ? 2 * k - 1 : 2 * k);
    d.vertex_gammap.push_back(s.alpha_in_a[k - 1] ? 2 * k : 2 * k - 1);
  }
  auto pos_of = [](const std::vector<int>& sig, int sheet) {
    return (int)(std::find(sig.begin(), sig.end(), sheet) - sig.begin());
  };
  for (const Pair& p : s.Phi) {
    int a = pos_of(s.sigma, p.first), b = pos_of(s.sigma, p.second);
    if (a > b) std::swap(a, b);
    HomologyClass c = hclass_zero(N);
    for (int k = a + 1; k <= b; ++k) c = hclass_add(c, d.gamma[k - 1]);
    d.positive.push_back(c);
  }
  for (const Pair& p : s.Phip) {
    int a = pos_of(s.sigmap, p.first), b = pos_of(s.sigmap, p.second);
    if (a > b) std::swap(a, b);
    HomologyClass c = hclass_zero(N);
    for (int k = a + 1; k <= b; ++k) c = hclass_add(c, d.gammap[k - 1]);
    d.positive.push_back(c);
  }
  // Quiver on 2(N-1) vertices from the intersection pairing.
  d.quiver.n = 2 * (N - 1);
  d.quiver.adj.assign(2 * (N - 1), std::vector<int>(2 * (N - 1), 0));
  std::vector<HomologyClass> at_vertex(2 * (N - 1), hclass_zero(N));
  for (int k = 1; k <= N - 1; ++k) {
    at_vertex[d.vertex_gamma[k - 1] - 1] = d.gamma[k - 1];
    at_vertex[d.vertex_gammap[k - 1] - 1] = d.gammap[k - 1];
  }
  for (int u = 0; u < 2 * (N - 1); ++u)
    for (int v = 0; v < 2 * (N - 1); ++v) {
      auto x = intersection(at_vertex[u], at_vertex[v]);
      if (x.denominator() != 1) throw std::logic_error("bps_spectrum: fractional pairing");
      d.quiver.adj[u][v] = (int)x.numerator();
    }
  return d;
}

annular::AnnularGraph build_network_graph(const SplittingData& s) {
  const int N = s.N;
  annular::AnnularGraph g;
  g.rows = N;
  Angle delta(1, 100LL * N);
  for (int b = 1; b <= N - 1; ++b) {
    if (s.alpha_in_a[b - 1]) {
      g.verts.push_back({b, Angle(2, 5) + b * delta, false});
      g.verts.push_back({b, Angle(3, 5) + b * delta, true});
    } else {
      g.verts.push_back({b, Angle(1, 5) + b * delta, true});
      g.verts.push_back({b, Angle(4, 5) + b * delta, false});
    }
    g.labels.push_back({2 * b - 1, 2 * b});
  }
  std::sort(g.verts.begin(), g.verts.end(),
            [](const annular::Vertical& x, const annular::Vertical& y) {
              return x.angle < y.angle;
            });
  return g;
}

Ring holonomy_ring(int N) { return exactalg::make_ring("y", 2 * (N - 1), N); }

HomologyClass class_of_monomial(const SplittingData& s, const exactalg::Expo& e) {
  HomologyClass c = hclass_zero(s.N);
  for (int b = 1; b <= s.N - 1; ++b) {
    // y_{2b-1} is the face right of the up vertical (gamma_b when alpha_b is
    // type a, else gamma'_b); y_{2b} the other one.
    boost::rational<long long> c1(e[2 * b - 2], s.N), c2(e[2 * b - 1], s.N);
    if (s.alpha_in_a[b - 1]) {
      c = hclass_add(c, hclass_scale(c1, gamma_class(s, b)));
      c = hclass_add(c, hclass_scale(c2, gammap_class(s, b)));
    } else {
      c = hclass_add(c, hclass_scale(c1, gammap_class(s, b)));
      c = hclass_add(c, hclass_scale(c2, gamma_class(s, b)));
    }
  }
  return c;
}

PolyMatrix lift_path(const SplittingData& s) {
  const int N = s.N;
  annular::AnnularGraph g = build_network_graph(s);
  Ring ring = holonomy_ring(N);
  PolyMatrix M = PolyMatrix::identity(ring, N);
  // Ordered product over the wall crossings of the clockwise circle: for
  // each vertical (in increasing angle, i.e. reverse traversal order) one
  // unipotent soliton factor and one diagonal face factor, then the
  // minimal-weight arc class.
  for (const annular::Vertical& v : g.verts) {
    int label = v.up ? g.labels[v.band - 1].first : g.labels[v.band - 1].second;
    PolyMatrix E = PolyMatrix::identity(ring, N);
    if (v.up)
      E.at(v.band - 1, v.band) = LaurentPoly::constant(ring, 1);
    else
      E.at(v.band, v.band - 1) = LaurentPoly::constant(ring, 1);
    PolyMatrix D = PolyMatrix::identity(ring, N);
    for (int r = 0; r <= v.band - 1; ++r)
      D.at(r, r) = LaurentPoly::var_pow(ring, label - 1, ring.den);
    M = M * (E * D);
  }
  LaurentPoly pmin = annular::minimal_weight(g, ring);
  PolyMatrix S(ring, N);
  for (int r = 0; r < N; ++r) S.at(r, r) = pmin;
  return M * S;
}

LaurentPoly holonomy_trace(int N, int k, Angle theta) {
  SplittingData s = toda_splitting(N, theta);
  PolyMatrix M = lift_path(s);
  LaurentPoly tr = exactalg::exterior_trace(M, k);
  for (const auto& [e, c] : tr.terms()) {
    HomologyClass hc = class_of_monomial(s, e);
    if (!hclass_integral(hc) || quadratic_refinement(hc) != 1)
      throw std::logic_error("holonomy_trace: untwisted-gauge sign check failed");
  }
  Ring xr = todasys::x_ring(N - 1);
  return exactalg::substitute(tr, todasys::y_to_x(N - 1), xr);
}

std::vector<SplittingData> splitting_scan(int N) {
  std::vector<SplittingData> out;
  auto same = [](const SplittingData& a, const SplittingData& b) {
    return a.Delta_a == b.Delta_a && a.Delta_b == b.Delta_b && a.sigma == b.sigma;
  };
  for (int j = 0; j < 4 * (N + 1); ++j) {
    Angle theta = Angle(j, 4LL * (N + 1)) + Angle(1, 1000LL * (N + 1));
    SplittingData s;
    try {
      s = toda_splitting(N, theta);
    } catch (const std::invalid_argument&) {
      continue;
    }
    bool dup = false;
    for (const SplittingData& t : out)
      if (same(s, t)) dup = true;
    if (!dup) out.push_back(s);
  }
  return out;
}

namespace {

using Cplx = std::complex<double>;

Cplx nearest_root(int N, Cplx c, Cplx wprev, bool* ok) {
  double r = std::pow(std::abs(c), 1.0 / N);
  double a = std::arg(c);
  Cplx best;
  double bd = 1e300;
  for (int k = 0; k < N; ++k) {
    Cplx w = std::polar(r, (a + 2 * M_PI * k) / N);
    double d = std::abs(w - wprev);
    if (d < bd) {
      bd = d;
      best = w;
    }
  }
  // Ambiguous when two roots are nearly equidistant from the previous value.
  double second = 1e300;
  for (int k = 0; k < N; ++k) {
    Cplx w = std::polar(r, (a + 2 * M_PI * k) / N);
    double d = std::abs(w - wprev);
    if (d > bd && d < second) second = d;
  }
  *ok = (N == 1) || bd < 0.9 * second || second > 1e299;
  return best;
}

}  // namespace

Trajectory trace_trajectory(int N, double phi, Cplx z0, double step, double t_max) {
  if (std::abs(z0) < 1e-12 || std::abs(z0 - Cplx(0, 1)) < 1e-12 ||
      std::abs(z0 + Cplx(0, 1)) < 1e-12)
    throw std::invalid_argument("trace_trajectory: singular start");
  if (step <= 0) throw std::invalid_argument("trace_trajectory: step must be positive");
  Trajectory tr;
  Cplx z = z0;
  Cplx c0 = z0 + 1.0 / z0;
  Cplx w = std::polar(std::pow(std::abs(c0), 1.0 / N), std::arg(c0) / N);
  double t = 0;
  tr.termination = "t_max";
  auto field = [&](Cplx zz, Cplx ww) {
    return std::polar(1.0, phi + std::arg(zz) - std::arg(ww));
  };
  auto branch_at = [&](Cplx zz, Cplx wprev, bool* ok) {
    return nearest_root(N, zz + 1.0 / zz, wprev, ok);
  };
  tr.t.push_back(0);
  tr.z.push_back(z);
  tr.w.push_back(w);
  while (t < t_max) {
    if (std::abs(z) < 0.02) {
      tr.termination = "origin";
      break;
    }
    if (std::abs(z - Cplx(0, 1)) < 0.02 || std::abs(z + Cplx(0, 1)) < 0.02) {
      tr.termination = "branch_point";
      break;
    }
    double h = step;
    if (std::abs(z - Cplx(0, 1)) < 0.1 || std::abs(z + Cplx(0, 1)) < 0.1)
      h = std::min(h, 0.01);
    if (std::abs(z) < 0.4) h = std::min(h, std::abs(z) / 4);
    bool ok = true;
    Cplx k1 = field(z, w);
    Cplx w2 = branch_at(z + 0.5 * h * k1, w, &ok);
    Cplx k2 = field(z + 0.5 * h * k1, w2);
    Cplx w3 = branch_at(z + 0.5 * h * k2, w, &ok);
    Cplx k3 = field(z + 0.5 * h * k2, w3);
    Cplx w4 = branch_at(z + h * k3, w, &ok);
    Cplx k4 = field(z + h * k3, w4);
    Cplx znew = z + (h / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
    bool ok2 = true;
    Cplx wnew = branch_at(znew, w, &ok2);
    if (!ok || !ok2) {
      // The roots have (nearly) collided: we are at a branch point.
      tr.termination = "branch_point";
      break;
    }
    z = znew;
    w = wnew;
    t += h;
    tr.t.push_back(t);
    tr.z.push_back(z);
    tr.w.push_back(w);
  }
  double maxinc = -1e300, maxdec = 1e300, lo = 1e300, hi = -1e300;
  for (size_t j = 0; j + 1 < tr.z.size(); ++j) {
    double d = std::abs(tr.z[j + 1]) - std::abs(tr.z[j]);
    maxinc = std::max(maxinc, d);
    maxdec = std::min(maxdec, d);
  }
  for (const Cplx& p : tr.z) {
    lo = std::min(lo, std::abs(p));
    hi = std::max(hi, std::abs(p));
  }
  if (tr.z.size() < 2 || hi - lo <= 1e-6)
    tr.monotonicity = "constant";
  else if (maxinc <= 1e-9)
    tr.monotonicity = "decreasing";
  else if (maxdec >= -1e-9)
    tr.monotonicity = "increasing";
  else
    tr.monotonicity = "mixed";
  return tr;
}

std::string trajectory_csv(const Trajectory& tr) {
  std::ostringstream os;
  os.precision(15);
  os << "t,re_z,im_z,abs_z,branch_re,branch_im\n";
  for (size_t j = 0; j < tr.z.size(); ++j)
    os << tr.t[j] << ',' << tr.z[j].real() << ',' << tr.z[j].imag() << ','
       << std::abs(tr.z[j]) << ',' << tr.w[j].real() << ',' << tr.w[j].imag() << '\n';
  return os.str();
}

}  // namespace network
