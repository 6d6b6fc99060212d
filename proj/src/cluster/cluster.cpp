// cluster.cpp -- quiver and seed mutation.

#include "cluster.hpp"

#include <cstdlib>
#include <sstream>
#include <stdexcept>

namespace cluster {

using exactalg::Expo;
using exactalg::Int;

Quiver build_Qn(int n) {
  if (n < 1) throw std::invalid_argument("build_Qn: n must be >= 1");
  Quiver q;
  q.n = 2 * n;
  q.adj.assign(q.n, std::vector<int>(q.n, 0));
  auto add_arrow = [&](int from, int to, int mult) {  // 1-based
    q.adj[from - 1][to - 1] += mult;
    q.adj[to - 1][from - 1] -= mult;
  };
  for (int i = 1; i <= n; ++i) {
    add_arrow(2 * i - 1, 2 * i, 2);
    if (i < n) add_arrow(2 * i, 2 * i + 1, 1);
    if (i >= 2) add_arrow(2 * i, 2 * i - 3, 1);
  }
  return q;
}

Quiver mutate_quiver(const Quiver& q, int k) {
  if (k < 1 || k > q.n) throw std::out_of_range("mutate_quiver: bad vertex");
  const int m = k - 1;
  Quiver out = q;
  for (int i = 0; i < q.n; ++i)
    for (int j = 0; j < q.n; ++j) {
      if (i == m || j == m) {
        out.adj[i][j] = -q.adj[i][j];
      } else {
        int corr = std::abs(q.adj[i][m]) * q.adj[m][j] + q.adj[i][m] * std::abs(q.adj[m][j]);
        out.adj[i][j] = q.adj[i][j] + corr / 2;
      }
    }
  return out;
}

SeedA initial_seed_a(const Quiver& q) {
  SeedA s;
  s.quiver = q;
  s.ring = exactalg::make_ring("x", q.n, 1);
  for (int i = 0; i < q.n; ++i)
    s.vars.push_back(LaurentPoly::var_pow(s.ring, i, 1));
  return s;
}

SeedA mutate_seed_a(const SeedA& s, int k) {
  if (k < 1 || k > s.quiver.n) throw std::out_of_range("mutate_seed_a: bad vertex");
  const int m = k - 1;
  LaurentPoly in = LaurentPoly::constant(s.ring, 1);
  LaurentPoly out = LaurentPoly::constant(s.ring, 1);
  for (int j = 0; j < s.quiver.n; ++j) {
    int c = s.quiver.adj[m][j];
    if (c > 0) in *= s.vars[j].pow(c);
    if (c < 0) out *= s.vars[j].pow(-c);
  }
  SeedA t;
  t.quiver = mutate_quiver(s.quiver, k);
  t.ring = s.ring;
  t.vars = s.vars;
  t.vars[m] = exactalg::exact_divide(in + out, s.vars[m]);
  return t;
}

SeedX initial_seed_x(const Quiver& q) {
  SeedX s;
  s.quiver = q;
  s.ring = exactalg::make_ring("y", q.n, 1);
  for (int i = 0; i < q.n; ++i)
    s.vars.push_back({LaurentPoly::var_pow(s.ring, i, 1),
                      LaurentPoly::constant(s.ring, 1)});
  return s;
}

// Cancel monomial content and common (1+y_j) factors. The only denominators
// that arise under X-mutation are monomials times powers of such binomials.
static RatFn reduce(RatFn f, const Ring& ring) {
  if (f.num.is_zero()) return {f.num, LaurentPoly::constant(ring, 1)};
  const size_t nv = ring.nvars();
  // Monomial content across both numerator and denominator.
  Expo m(nv, 0);
  bool first = true;
  for (const auto* p : {&f.num, &f.den})
    for (const auto& [e, c] : p->terms()) {
      (void)c;
      for (size_t i = 0; i < nv; ++i) m[i] = first ? e[i] : std::min(m[i], e[i]);
      first = false;
    }
  LaurentPoly shift = LaurentPoly::monomial(ring, m, 1);
  f.num = exactalg::exact_divide(f.num, shift);
  f.den = exactalg::exact_divide(f.den, shift);
  for (size_t j = 0; j < nv; ++j) {
    LaurentPoly binom = LaurentPoly::constant(ring, 1) + LaurentPoly::var_pow(ring, j, ring.den);
    while (true) {
      try {
        LaurentPoly n2 = exactalg::exact_divide(f.num, binom);
        LaurentPoly d2 = exactalg::exact_divide(f.den, binom);
        f.num = n2;
        f.den = d2;
      } catch (const std::domain_error&) {
        break;
      }
    }
  }
  // Absorb a monomial denominator entirely.
  if (f.den.is_monomial()) {
    f.num = exactalg::exact_divide(f.num, f.den);
    f.den = LaurentPoly::constant(ring, 1);
  }
  return f;
}

SeedX mutate_seed_x(const SeedX& s, int k) {
  if (k < 1 || k > s.quiver.n) throw std::out_of_range("mutate_seed_x: bad vertex");
  const int m = k - 1;
  SeedX t;
  t.quiver = mutate_quiver(s.quiver, k);
  t.ring = s.ring;
  t.vars.resize(s.vars.size());
  const LaurentPoly& nk = s.vars[m].num;
  const LaurentPoly& dk = s.vars[m].den;
  LaurentPoly sum = nk + dk;  // numerator of 1 + y_k over dk
  for (int i = 0; i < s.quiver.n; ++i) {
    if (i == m) {
      t.vars[i] = reduce({dk, nk}, s.ring);
      continue;
    }
    int c = s.quiver.adj[i][m];  // Q_ik
    int p = std::max(0, c);
    RatFn f;
    f.num = s.vars[i].num * nk.pow(p);
    f.den = s.vars[i].den * dk.pow(p);
    if (c > 0) {
      f.num *= dk.pow(c);
      f.den *= sum.pow(c);
    } else if (c < 0) {
      f.num *= sum.pow(-c);
      f.den *= dk.pow(-c);
    }
    t.vars[i] = reduce(std::move(f), s.ring);
  }
  return t;
}

bool ratfn_equal(const RatFn& a, const RatFn& b) {
  return a.num * b.den == b.num * a.den;
}

std::map<std::string, LaurentPoly> p_map_images(const Quiver& q, const Ring& yring,
                                                const Ring& xring) {
  std::map<std::string, LaurentPoly> images;
  for (int i = 0; i < q.n; ++i) {
    Expo e(xring.nvars(), 0);
    for (int j = 0; j < q.n; ++j) e[j] = q.adj[i][j] * xring.den;
    images[yring.vars[i]] = LaurentPoly::monomial(xring, e, 1);
  }
  return images;
}

LaurentPoly p_map(const Quiver& q, const LaurentPoly& p, const Ring& xring) {
  return exactalg::substitute(p, p_map_images(q, p.ring(), xring), xring);
}

std::string quiver_dot(const Quiver& q) {
  std::ostringstream os;
  os << "digraph quiver {\n";
  for (int i = 0; i < q.n; ++i) os << "  v" << (i + 1) << ";\n";
  for (int i = 0; i < q.n; ++i)
    for (int j = 0; j < q.n; ++j)
      for (int c = 0; c < q.adj[i][j]; ++c)
        os << "  v" << (i + 1) << " -> v" << (j + 1) << ";\n";
  os << "}\n";
  return os.str();
}

}  // namespace cluster
