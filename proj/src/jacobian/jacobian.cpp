// jacobian.cpp
// ------------
// Implementation of the quiver with potential (Q_n, W_n), the modules
// M_i^lambda, coefficient quivers, submodules, and cluster characters.

#include "jacobian.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

#include "../cluster/cluster.hpp"

namespace jacobian {

bool edge_exists(int n, const Edge& e) {
  switch (e.kind) {
    case 'a':
    case 'b':
      return e.idx >= 1 && e.idx <= n;
    case 'r':
      return e.idx >= 1 && e.idx <= n - 1;
    case 'l':
      return e.idx >= 2 && e.idx <= n;
    default:
      return false;
  }
}

int edge_source(const Edge& e) {
  switch (e.kind) {
    case 'a':
    case 'b':
      return 2 * e.idx - 1;
    default:
      return 2 * e.idx;  // r and l leave the even vertex
  }
}

int edge_target(const Edge& e) {
  switch (e.kind) {
    case 'a':
    case 'b':
      return 2 * e.idx;
    case 'r':
      return 2 * e.idx + 1;
    default:
      return 2 * e.idx - 3;  // l
  }
}

std::string edge_name(const Edge& e) {
  return std::string(1, e.kind) + std::to_string(e.idx);
}

std::vector<SignedWord> potential_terms(int n) {
  // W_n = sum_i a_i l_{i+1} b_{i+1} r_i - b_i l_{i+1} a_{i+1} r_i, with the
  // rightmost factor traversed first.
  std::vector<SignedWord> out;
  for (int i = 1; i <= n - 1; ++i) {
    out.push_back({+1, {{'r', i}, {'b', i + 1}, {'l', i + 1}, {'a', i}}});
    out.push_back({-1, {{'r', i}, {'a', i + 1}, {'l', i + 1}, {'b', i}}});
  }
  return out;
}

namespace {

// Append the term to the relation unless it mentions a nonexistent edge.
void push_term(int n, Relation& rel, int sign, const Word& w) {
  for (const Edge& e : w)
    if (!edge_exists(n, e)) return;
  rel.terms.push_back({sign, w});
}

}  // namespace

std::vector<Relation> cyclic_derivatives(int n) {
  std::vector<Relation> out;
  for (int i = 1; i <= n; ++i) {
    Relation ra{{'a', i}, {}};
    push_term(n, ra, +1, {{'r', i}, {'b', i + 1}, {'l', i + 1}});
    push_term(n, ra, -1, {{'l', i}, {'b', i - 1}, {'r', i - 1}});
    out.push_back(ra);
    Relation rb{{'b', i}, {}};
    push_term(n, rb, +1, {{'l', i}, {'a', i - 1}, {'r', i - 1}});
    push_term(n, rb, -1, {{'r', i}, {'a', i + 1}, {'l', i + 1}});
    out.push_back(rb);
  }
  for (int i = 2; i <= n; ++i) {
    Relation rl{{'l', i}, {}};
    push_term(n, rl, +1, {{'a', i - 1}, {'r', i - 1}, {'b', i}});
    push_term(n, rl, -1, {{'b', i - 1}, {'r', i - 1}, {'a', i}});
    out.push_back(rl);
  }
  for (int i = 1; i <= n - 1; ++i) {
    Relation rr{{'r', i}, {}};
    push_term(n, rr, +1, {{'b', i + 1}, {'l', i + 1}, {'a', i}});
    push_term(n, rr, -1, {{'a', i + 1}, {'l', i + 1}, {'b', i}});
    out.push_back(rr);
  }
  return out;
}

int forced_vertical_count(int s, int t, int lam, int rho) {
  return lam + rho + (s % 2 != 0 ? 1 : 0) - (t % 2 != 0 ? 1 : 0);
}

bool is_basis_tuple(int n, const PathTuple& T) {
  if (T.s < 1 || T.s > 2 * n || T.t < 1 || T.t > 2 * n) return false;
  if (T.lam < 0 || T.rho < 0 || T.a < 0 || T.b < 0) return false;
  int hs = (T.s + 1) / 2, ht = (T.t + 1) / 2;
  if (T.rho - T.lam != ht - hs) return false;
  if (T.rho > n - hs) return false;
  if (T.lam >= hs) return false;
  return T.a + T.b == forced_vertical_count(T.s, T.t, T.lam, T.rho);
}

int CoefficientQuiver::index_of(int t, int l) const {
  auto it = std::lower_bound(verts.begin(), verts.end(), std::make_pair(t, l));
  if (it == verts.end() || *it != std::make_pair(t, l)) return -1;
  return (int)(it - verts.begin());
}

CoefficientQuiver build_coefficient_quiver(int n, int i) {
  if (i < 1 || i > n) throw std::invalid_argument("build_coefficient_quiver: need 1 <= i <= n");
  CoefficientQuiver g;
  g.n = n;
  g.i = i;
  for (int t = 1; t <= 2 * n; ++t)
    for (int l = 0; l <= i - 1; ++l)
      if (2 * (i - l) - 1 <= t && t <= 2 * (n - l)) g.verts.push_back({t, l});
  std::sort(g.verts.begin(), g.verts.end());
  g.out.resize(g.verts.size());
  for (size_t v = 0; v < g.verts.size(); ++v) {
    auto [t, l] = g.verts[v];
    int w = g.index_of(t + 1, l);
    if (w >= 0) g.out[v].push_back(w);
    if (t % 2 == 0) {
      w = g.index_of(t - 3, l + 1);
      if (w >= 0) g.out[v].push_back(w);
    }
  }
  return g;
}

std::vector<std::vector<char>> enumerate_submodule_supports(const CoefficientQuiver& g) {
  const int nv = (int)g.verts.size();
  // Vertices in reverse topological order (all successors decided first).
  std::vector<int> order;
  std::vector<char> seen(nv, 0);
  std::function<void(int)> topo = [&](int v) {
    seen[v] = 1;
    for (int w : g.out[v])
      if (!seen[w]) topo(w);
    order.push_back(v);
  };
  for (int v = 0; v < nv; ++v)
    if (!seen[v]) topo(v);
  std::vector<std::vector<char>> out;
  std::vector<char> in(nv, 0);
  // Every branch keeps the invariant "successor-closed so far", so the
  // recursion tree has one leaf per submodule (no exponential dead ends).
  std::function<void(int)> rec = [&](int k) {
    if (k == nv) {
      out.push_back(in);
      return;
    }
    int v = order[k];
    rec(k + 1);  // exclude v
    bool ok = true;
    for (int w : g.out[v])
      if (!in[w]) {
        ok = false;
        break;
      }
    if (ok) {
      in[v] = 1;
      rec(k + 1);
      in[v] = 0;
    }
  };
  rec(0);
  return out;
}

std::vector<std::vector<int>> enumerate_submodules(const CoefficientQuiver& g) {
  std::vector<std::vector<int>> dims;
  for (const auto& s : enumerate_submodule_supports(g)) {
    std::vector<int> d(2 * g.n, 0);
    for (size_t v = 0; v < s.size(); ++v)
      if (s[v]) d[g.verts[v].first - 1]++;
    dims.push_back(d);
  }
  std::sort(dims.begin(), dims.end());
  return dims;
}

std::vector<std::vector<int>> submodule_mtuples(const CoefficientQuiver& g) {
  std::vector<std::vector<int>> out;
  for (const auto& s : enumerate_submodule_supports(g)) {
    std::vector<int> m(g.i);
    for (int l = 0; l < g.i; ++l) {
      int best = 2 * (g.n - l) + 1;
      for (size_t v = 0; v < s.size(); ++v)
        if (s[v] && g.verts[v].second == l) best = std::min(best, g.verts[v].first);
      m[l] = best;
    }
    out.push_back(m);
  }
  std::sort(out.begin(), out.end());
  return out;
}

LaurentPoly cluster_character(int n, int i) {
  Ring yring = exactalg::make_ring("y", 2 * n, n + 1);
  Ring xring = exactalg::make_ring("x", 2 * n, n + 1);
  CoefficientQuiver g = build_coefficient_quiver(n, i);
  LaurentPoly sum = LaurentPoly::zero(yring);
  for (const auto& s : enumerate_submodule_supports(g)) {
    exactalg::Expo e(2 * n, 0);
    for (size_t v = 0; v < s.size(); ++v)
      if (s[v]) e[g.verts[v].first - 1] += yring.den;
    sum.add_term(e, 1);
  }
  cluster::Quiver q = cluster::build_Qn(n);
  LaurentPoly sx = exactalg::substitute(sum, cluster::p_map_images(q, yring, xring), xring);
  int nu = n + 1 - i;
  exactalg::Expo pre(2 * n, 0);
  pre[2 * nu - 2] = xring.den;
  pre[2 * nu - 1] = -xring.den;
  return LaurentPoly::monomial(xring, pre, 1) * sx;
}

LaurentPoly framed_generating_function(int n, int k) {
  return cluster_character(n, n + 1 - k);
}

namespace {

using Mat = std::vector<std::vector<Rat>>;

Mat zero_mat(int d) { return Mat(d, std::vector<Rat>(d, Rat(0))); }

Mat mat_mul(const Mat& A, const Mat& B) {
  int d = (int)A.size();
  Mat C = zero_mat(d);
  for (int i = 0; i < d; ++i)
    for (int k = 0; k < d; ++k) {
      if (B[k].empty()) continue;
      for (int j = 0; j < d; ++j)
        if (A[i][k] != 0 && B[k][j] != 0) C[i][j] += A[i][k] * B[k][j];
    }
  return C;
}

}  // namespace

ConcreteModule build_module_matrices(int n, int i, const Rat& l1, const Rat& l2) {
  if (l1 == 0 && l2 == 0)
    throw std::invalid_argument("build_module_matrices: lambda must be nonzero");
  CoefficientQuiver g = build_coefficient_quiver(n, i);
  ConcreteModule m;
  m.n = n;
  m.i = i;
  m.l1 = l1;
  m.l2 = l2;
  m.basis = g.verts;
  const int d = (int)m.basis.size();
  // Vertical coefficients: with lambda_2 != 0 the basis classes use only
  // a-edges, so a acts by 1 and b by -l1/l2; with lambda_2 = 0 the roles
  // swap and a-heavy classes vanish.
  Rat ca = (l2 != 0) ? Rat(1) : Rat(0);
  Rat cb = (l2 != 0) ? Rat(-l1 / l2) : Rat(1);
  auto add_edge = [&](const Edge& e) {
    Mat A = zero_mat(d);
    for (int v = 0; v < d; ++v) {
      auto [t, l] = m.basis[v];
      if (t != edge_source(e)) continue;
      int w = -1;
      Rat c(0);
      if (e.kind == 'a' || e.kind == 'b') {
        if (t == 2 * e.idx - 1) {
          w = g.index_of(t + 1, l);
          c = (e.kind == 'a') ? ca : cb;
        }
      } else if (e.kind == 'r') {
        if (t == 2 * e.idx) {
          w = g.index_of(t + 1, l);
          c = 1;
        }
      } else {  // 'l'
        if (t == 2 * e.idx) {
          w = g.index_of(t - 3, l + 1);
          c = 1;
        }
      }
      if (w >= 0 && c != 0) A[w][v] = c;
    }
    m.act[e] = std::move(A);
  };
  for (int k = 1; k <= n; ++k) {
    add_edge({'a', k});
    add_edge({'b', k});
  }
  for (int k = 1; k <= n - 1; ++k) add_edge({'r', k});
  for (int k = 2; k <= n; ++k) add_edge({'l', k});
  return m;
}

std::vector<std::vector<Rat>> word_matrix(const ConcreteModule& m, const Word& w) {
  const int d = (int)m.basis.size();
  Mat M(d, std::vector<Rat>(d, Rat(0)));
  for (int k = 0; k < d; ++k) M[k][k] = 1;
  for (const Edge& e : w) {  // word[0] is traversed first
    auto it = m.act.find(e);
    if (it == m.act.end()) return zero_mat(d);
    M = mat_mul(it->second, M);
  }
  return M;
}

bool relations_vanish(const ConcreteModule& m) {
  const int d = (int)m.basis.size();
  for (const Relation& rel : cyclic_derivatives(m.n)) {
    Mat sum = zero_mat(d);
    for (const SignedWord& t : rel.terms) {
      Mat M = word_matrix(m, t.word);
      for (int r = 0; r < d; ++r)
        for (int c = 0; c < d; ++c) sum[r][c] += Rat(t.sign) * M[r][c];
    }
    for (int r = 0; r < d; ++r)
      for (int c = 0; c < d; ++c)
        if (sum[r][c] != 0) return false;
  }
  return true;
}

std::vector<std::vector<char>> submodule_supports_from_matrices(const ConcreteModule& m) {
  const int d = (int)m.basis.size();
  // Basis indices at each Q_n vertex in ascending-l order; the E_t operators
  // shift l upward, so their invariant subspaces are the l-order tails.
  std::vector<std::vector<int>> at(2 * m.n);
  for (int v = 0; v < d; ++v) at[m.basis[v].first - 1].push_back(v);
  for (auto& lst : at)
    std::sort(lst.begin(), lst.end(),
              [&](int a, int b) { return m.basis[a].second < m.basis[b].second; });
  std::vector<std::vector<char>> out;
  std::vector<int> cut(2 * m.n, 0);  // keep the last cut[t] elements of at[t]
  std::function<void(int)> rec = [&](int t) {
    if (t == 2 * m.n) {
      std::vector<char> keep(d, 0);
      for (int u = 0; u < 2 * m.n; ++u)
        for (int k = (int)at[u].size() - cut[u]; k < (int)at[u].size(); ++k)
          keep[at[u][k]] = 1;
      // Invariance under every edge matrix.
      for (const auto& [e, A] : m.act) {
        for (int v = 0; v < d; ++v) {
          if (!keep[v]) continue;
          for (int w = 0; w < d; ++w)
            if (A[w][v] != 0 && !keep[w]) return;
        }
      }
      out.push_back(keep);
      return;
    }
    for (cut[t] = 0; cut[t] <= (int)at[t].size(); ++cut[t]) rec(t + 1);
    cut[t] = 0;
  };
  rec(0);
  return out;
}

}  // namespace jacobian
