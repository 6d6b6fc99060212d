// annular.cpp
// -----------
// Implementation of annular path graphs: path/tuple enumeration, face
// weights, boundary transfer matrices, slide moves and move-equivalence.

#include "annular.hpp"

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <queue>
#include <set>
#include <sstream>
#include <stdexcept>

namespace annular {

namespace {

int mod(int a, int m) { return ((a % m) + m) % m; }

// Arc indices covered by the face right of vertical p, i.e. the arcs from
// p+1 up to the next vertical of the same band (cyclically), inclusive.
std::vector<int> face_arcs(const AnnularGraph& g, int p) {
  const int m = (int)g.verts.size();
  std::vector<int> arcs;
  for (int s = 1; s <= m; ++s) {
    int q = mod(p + s, m);
    arcs.push_back(q);
    if (g.verts[q].band == g.verts[p].band) break;
  }
  return arcs;
}

struct Face {
  int band;
  int label;              // 1-based y-variable index
  std::vector<int> arcs;  // arc indices of the face's angular support
};

std::vector<Face> all_faces(const AnnularGraph& g) {
  std::vector<Face> faces;
  for (int p = 0; p < (int)g.verts.size(); ++p) {
    const Vertical& v = g.verts[p];
    int label = v.up ? g.labels[v.band - 1].first : g.labels[v.band - 1].second;
    faces.push_back({v.band, label, face_arcs(g, p)});
  }
  return faces;
}

}  // namespace

AnnularGraph build_Ni(int n) {
  AnnularGraph g;
  g.rows = n + 1;
  for (int b = 1; b <= n; ++b) {
    g.verts.push_back({b, Angle(b, 2 * n + 1), true});
    g.verts.push_back({b, Angle(n + b, 2 * n + 1), false});
    g.labels.push_back({2 * b - 1, 2 * b});
  }
  std::sort(g.verts.begin(), g.verts.end(),
            [](const Vertical& a, const Vertical& b) { return a.angle < b.angle; });
  return g;
}

std::vector<ClosedPath> enumerate_closed_paths(const AnnularGraph& g) {
  const int m = (int)g.verts.size();
  std::vector<ClosedPath> out;
  std::vector<int> row(m, 0);
  // Depth-first over rows per arc; crossing vertical i leftward either keeps
  // the row or traverses the vertical (up: right row b, left row b-1).
  std::function<void(int)> rec = [&](int i) {
    if (i == m) {
      out.push_back({row});
      return;
    }
    const Vertical& v = g.verts[i];
    auto step = [&](int right) {
      if (i == m - 1) {
        if (right == row[0]) rec(m);
      } else {
        row[i + 1] = right;
        rec(i + 1);
      }
    };
    step(row[i]);  // pass under/over without using the vertical
    if (v.up && row[i] == v.band - 1) step(v.band);
    if (!v.up && row[i] == v.band) step(v.band - 1);
  };
  for (int r0 = 0; r0 < g.rows; ++r0) {
    row[0] = r0;
    if (m == 0) {
      out.push_back({std::vector<int>{}});
    } else {
      rec(0);
    }
  }
  return out;
}

bool paths_disjoint(const AnnularGraph& g, const ClosedPath& p, const ClosedPath& q) {
  // Two row-monotone sections are vertex-disjoint exactly when their rows
  // differ on every arc (a traversed vertical occupies both its rows, and
  // equality at an adjacent arc already witnesses that overlap).
  (void)g;
  for (size_t i = 0; i < p.row.size(); ++i)
    if (p.row[i] == q.row[i]) return false;
  return true;
}

std::vector<std::vector<int>> nonintersecting_tuples(const AnnularGraph& g, int k) {
  auto paths = enumerate_closed_paths(g);
  const int np = (int)paths.size();
  std::vector<std::vector<char>> ok(np, std::vector<char>(np, 0));
  for (int a = 0; a < np; ++a)
    for (int b = a + 1; b < np; ++b) ok[a][b] = ok[b][a] = paths_disjoint(g, paths[a], paths[b]);
  std::vector<std::vector<int>> out;
  std::vector<int> cur;
  std::function<void(int)> rec = [&](int start) {
    if ((int)cur.size() == k) {
      out.push_back(cur);
      return;
    }
    for (int a = start; a < np; ++a) {
      bool good = true;
      for (int b : cur)
        if (!ok[b][a]) {
          good = false;
          break;
        }
      if (!good) continue;
      cur.push_back(a);
      rec(a + 1);
      cur.pop_back();
    }
  };
  rec(0);
  return out;
}

LaurentPoly path_weight(const AnnularGraph& g, const ClosedPath& p, const Ring& ring,
                        const LaurentPoly& base) {
  LaurentPoly w = base;
  for (const Face& f : all_faces(g)) {
    bool enclosed = true;
    for (int a : f.arcs)
      if (p.row[a] > f.band - 1) {
        enclosed = false;
        break;
      }
    if (enclosed) w = w * LaurentPoly::var_pow(ring, f.label - 1, ring.den);
  }
  return w;
}

LaurentPoly tuple_weight(const AnnularGraph& g, const std::vector<ClosedPath>& paths,
                         const std::vector<int>& tuple, const Ring& ring,
                         const LaurentPoly& base) {
  LaurentPoly w = LaurentPoly::constant(ring, 1);
  for (int idx : tuple) w = w * path_weight(g, paths[idx], ring, base);
  return w;
}

LaurentPoly tuple_sum(const AnnularGraph& g, int k, const Ring& ring,
                      const LaurentPoly& base) {
  auto paths = enumerate_closed_paths(g);
  LaurentPoly s = LaurentPoly::constant(ring, 0);
  for (const auto& t : nonintersecting_tuples(g, k)) s = s + tuple_weight(g, paths, t, ring, base);
  return s;
}

LaurentPoly minimal_weight(const AnnularGraph& g, const Ring& ring) {
  // prod_b (y_up(b) y_down(b))^{-b/rows}, expressed over the ring denominator.
  exactalg::Expo e(ring.nvars(), 0);
  for (int b = 1; b < g.rows; ++b) {
    long long num = -(long long)b * ring.den;
    if (num % g.rows != 0) throw std::invalid_argument("minimal_weight: ring denominator too coarse");
    e[g.labels[b - 1].first - 1] += num / g.rows;
    e[g.labels[b - 1].second - 1] += num / g.rows;
  }
  return LaurentPoly::monomial(ring, e, 1);
}

LaurentPoly hamiltonian_paths(int n, int k) {
  AnnularGraph g = build_Ni(n);
  Ring ring = exactalg::make_ring("y", 2 * n, n + 1);
  return tuple_sum(g, k, ring, minimal_weight(g, ring));
}

PolyMatrix transfer_matrix(const AnnularGraph& g, const Ring& ring,
                           const LaurentPoly& base) {
  const int m = (int)g.verts.size();
  const int r = g.rows;
  PolyMatrix M(ring, r);
  // rr[t] = row on piece t of the cut-open square; piece 0 is left of
  // vertical 0, piece m is right of vertical m-1 (the wrap arc splits into
  // pieces 0 and m).
  //
  // A face is counted when the path lies above it on the piece immediately
  // right of the face's defining vertical. Inside the square this sample
  // point is equivalent to checking the whole support (the row cannot cross
  // the band without a band vertical), and for the face cut by the seam it
  // is the convention that reproduces the factorization matrix.
  std::vector<int> rr(m + 1, 0);
  std::function<void(int)> rec = [&](int t) {
    if (t == 0) {
      LaurentPoly w = base;
      for (int p = 0; p < m; ++p) {
        const Vertical& v = g.verts[p];
        if (rr[p + 1] > v.band - 1) continue;
        int label = v.up ? g.labels[v.band - 1].first : g.labels[v.band - 1].second;
        w = w * LaurentPoly::var_pow(ring, label - 1, ring.den);
      }
      M.at(rr[0], rr[m]) = M.at(rr[0], rr[m]) + w;
      return;
    }
    // Cross vertical t-1 from right piece t to left piece t-1.
    const Vertical& v = g.verts[t - 1];
    rr[t - 1] = rr[t];
    rec(t - 1);
    if (v.up && rr[t] == v.band) {
      rr[t - 1] = v.band - 1;
      rec(t - 1);
    }
    if (!v.up && rr[t] == v.band - 1) {
      rr[t - 1] = v.band;
      rec(t - 1);
    }
  };
  for (int j = 0; j < r; ++j) {
    rr[m] = j;
    rec(m);
  }
  return M;
}

namespace {

bool movable_pair(const Vertical& a, const Vertical& b) {
  if (std::abs(a.band - b.band) != 1) return false;
  const Vertical& lo = a.band < b.band ? a : b;
  const Vertical& hi = a.band < b.band ? b : a;
  // The two verticals must meet the shared row both outgoing or both
  // incoming: (up, down) or (down, up) reading from the lower band number.
  return lo.up != hi.up;
}

}  // namespace

AnnularGraph apply_move(const AnnularGraph& g, int vi, int vj) {
  const int m = (int)g.verts.size();
  if (vi < 0 || vj < 0 || vi >= m || vj >= m || vi == vj)
    throw std::invalid_argument("apply_move: bad vertical indices");
  const Vertical& a = g.verts[vi];
  const Vertical& b = g.verts[vj];
  if (!movable_pair(a, b)) throw std::invalid_argument("apply_move: pair is not movable");
  int blo = std::min(a.band, b.band);
  // Blocking verticals share a row with one of the moving pair.
  auto blocks = [&](int k) {
    if (k == vi || k == vj) return false;
    int bb = g.verts[k].band;
    return bb >= blo - 1 && bb <= blo + 2;
  };
  Angle lo = std::min(a.angle, b.angle), hi = std::max(a.angle, b.angle);
  bool direct_clean = true, wrap_clean = true;
  for (int k = 0; k < m; ++k) {
    if (!blocks(k)) continue;
    if (g.verts[k].angle > lo && g.verts[k].angle < hi)
      direct_clean = false;
    else
      wrap_clean = false;
  }
  if (!direct_clean && !wrap_clean)
    throw std::invalid_argument("apply_move: verticals are not adjacent");
  AnnularGraph h = g;
  if (!direct_clean) {
    // Rotate so the clean gap does not wrap, picking a cut angle strictly
    // inside the blocked gap and away from every vertical.
    Angle cut = (lo + hi) / 2;
    for (int k = 2; ; ++k) {
      bool hits = false;
      for (const Vertical& v : g.verts)
        if (v.angle == cut) hits = true;
      if (!hits) break;
      cut = lo + (hi - lo) / k;
    }
    for (Vertical& v : h.verts) {
      v.angle -= cut;
      if (v.angle < 0) v.angle += 1;
    }
  }
  std::swap(h.verts[vi].angle, h.verts[vj].angle);
  std::sort(h.verts.begin(), h.verts.end(),
            [](const Vertical& x, const Vertical& y) { return x.angle < y.angle; });
  return h;
}

namespace {

using Word = std::vector<std::pair<int, int>>;  // (band, up?1:0) in angular order

Word word_of(const AnnularGraph& g) {
  Word w;
  for (const Vertical& v : g.verts) w.push_back({v.band, v.up ? 1 : 0});
  return w;
}

Word canonical_rotation(const Word& w) {
  Word best = w;
  Word cur = w;
  for (size_t s = 1; s < w.size(); ++s) {
    std::rotate(cur.begin(), cur.begin() + 1, cur.end());
    if (cur < best) best = cur;
  }
  return best;
}

AnnularGraph graph_from_word(const Word& w, const AnnularGraph& proto) {
  AnnularGraph g;
  g.rows = proto.rows;
  g.labels = proto.labels;
  const int m = (int)w.size();
  for (int i = 0; i < m; ++i)
    g.verts.push_back({w[i].first, Angle(2 * i + 1, 2 * m), w[i].second != 0});
  return g;
}

}  // namespace

bool move_equivalent(const AnnularGraph& g1, const AnnularGraph& g2, int* moves_used) {
  if (g1.rows != g2.rows || g1.labels != g2.labels) return false;
  if (g1.verts.size() != g2.verts.size()) return false;
  {
    auto sig = [](const AnnularGraph& g) {
      std::multiset<std::pair<int, int>> s;
      for (const Vertical& v : g.verts) s.insert({v.band, v.up ? 1 : 0});
      return s;
    };
    if (sig(g1) != sig(g2)) return false;
  }
  Word start = canonical_rotation(word_of(g1));
  Word goal = canonical_rotation(word_of(g2));
  if (start == goal) {
    if (moves_used) *moves_used = 0;
    return true;
  }
  std::map<Word, int> dist;
  std::queue<Word> queue;
  dist[start] = 0;
  queue.push(start);
  const size_t cap = 2000000;
  const int m = (int)start.size();
  while (!queue.empty()) {
    Word w = queue.front();
    queue.pop();
    int d = dist[w];
    for (int p = 0; p < m; ++p) {
      int q = mod(p + 1, m);
      auto [b1, u1] = w[p];
      auto [b2, u2] = w[q];
      bool free_swap = std::abs(b1 - b2) >= 2;
      bool slide = std::abs(b1 - b2) == 1 &&
                   ((b1 < b2 ? u1 : u2) != (b1 < b2 ? u2 : u1));
      if (!free_swap && !slide) continue;
      Word nw = w;
      std::swap(nw[p], nw[q]);
      nw = canonical_rotation(nw);
      int nd = d + (slide ? 1 : 0);
      auto it = dist.find(nw);
      if (it != dist.end() && it->second <= nd) continue;
      if (nw == goal) {
        if (moves_used) *moves_used = nd;
        return true;
      }
      if (dist.size() >= cap) continue;
      dist[nw] = nd;
      queue.push(nw);
    }
  }
  return false;
}

std::vector<std::vector<int>> mtuple_oracle(int n, int i) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur;
  std::function<void(int)> rec = [&](int l) {
    if (l == i) {
      out.push_back(cur);
      return;
    }
    int lo = 2 * (i - l) - 1;
    int hi = 2 * (n - l) + 1;
    if (l > 0) {
      int prev = cur.back();
      hi = std::min(hi, prev - (prev % 2 == 0 ? 3 : 2));
    }
    for (int mval = lo; mval <= hi; ++mval) {
      cur.push_back(mval);
      rec(l + 1);
      cur.pop_back();
    }
  };
  rec(0);
  return out;
}

std::string graph_dot(const AnnularGraph& g) {
  std::ostringstream os;
  os << "digraph annular {\n  rankdir=RL;\n";
  const int m = (int)g.verts.size();
  // Nodes: (row, slot) grid points at each vertical angle plus the seam.
  for (int r = 0; r < g.rows; ++r) {
    for (int s = 0; s <= m; ++s)
      os << "  r" << r << "s" << s << " [shape=point, pos=\"" << s << "," << (g.rows - r)
         << "!\"];\n";
  }
  for (int r = 0; r < g.rows; ++r) {
    for (int s = 0; s < m; ++s)
      os << "  r" << r << "s" << (s + 1) << " -> r" << r << "s" << s << ";\n";
    os << "  r" << r << "s0 -> r" << r << "s" << m << " [style=dashed, constraint=false];\n";
  }
  for (int s = 0; s < m; ++s) {
    const Vertical& v = g.verts[s];
    int top = v.band - 1, bot = v.band;
    int from = v.up ? bot : top, to = v.up ? top : bot;
    os << "  r" << from << "s" << s << " -> r" << to << "s" << s
       << " [label=\"b" << v.band << (v.up ? "u" : "d") << "\"];\n";
  }
  os << "}\n";
  return os.str();
}

}  // namespace annular
