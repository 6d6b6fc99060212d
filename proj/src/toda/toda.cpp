// toda.cpp -- factorization matrix and Hamiltonians.

#include "toda.hpp"

#include <stdexcept>

namespace todasys {

Ring y_ring(int n) { return exactalg::make_ring("y", 2 * n, n + 1); }
Ring x_ring(int n) { return exactalg::make_ring("x", 2 * n, n + 1); }

static PolyMatrix elementary(const Ring& r, int n, int i, bool upper) {
  if (i < 1 || i > n) throw std::out_of_range("elementary matrix index");
  PolyMatrix m = PolyMatrix::identity(r, n + 1);
  if (upper)
    m.at(i - 1, i) = LaurentPoly::constant(r, 1);
  else
    m.at(i, i - 1) = LaurentPoly::constant(r, 1);
  return m;
}

PolyMatrix elementary_E(const Ring& r, int n, int i) { return elementary(r, n, i, true); }
PolyMatrix elementary_F(const Ring& r, int n, int i) { return elementary(r, n, i, false); }

PolyMatrix coweight_matrix(const Ring& r, int n, int i, int yidx) {
  if (i < 1 || i > n) throw std::out_of_range("coweight index");
  if (r.den != n + 1) throw std::invalid_argument("coweight_matrix: ring denominator");
  PolyMatrix m(r, n + 1);
  for (int j = 0; j <= n; ++j) {
    // Diagonal entry y^{(n+1-i)/(n+1)} for j < i, else y^{-i/(n+1)}.
    long long num = (j < i) ? (n + 1 - i) : -i;
    m.at(j, j) = LaurentPoly::var_pow(r, yidx, num);
  }
  return m;
}

PolyMatrix factorization_matrix(int n) {
  Ring r = y_ring(n);
  PolyMatrix m = PolyMatrix::identity(r, n + 1);
  for (int i = 1; i <= n; ++i) {
    m = m * elementary_E(r, n, i);
    m = m * coweight_matrix(r, n, i, 2 * i - 2);
    m = m * elementary_F(r, n, i);
    m = m * coweight_matrix(r, n, i, 2 * i - 1);
  }
  return m;
}

std::map<std::string, LaurentPoly> y_to_x(int n) {
  Ring yr = y_ring(n);
  Ring xr = x_ring(n);
  auto cartan = [n](int i, int j) {  // A_n Cartan matrix, 1-based
    if (i == j) return 2;
    if (i == j + 1 || j == i + 1) return -1;
    return 0;
  };
  std::map<std::string, LaurentPoly> images;
  for (int i = 1; i <= n; ++i) {
    exactalg::Expo odd(xr.nvars(), 0), even(xr.nvars(), 0);
    for (int j = 1; j <= n; ++j) {
      even[2 * j - 1] = cartan(i, j) * xr.den;   // x_{2j}^{C_ij}
      odd[2 * j - 2] = -cartan(i, j) * xr.den;   // x_{2j-1}^{-C_ij}
    }
    images[yr.vars[2 * i - 2]] = LaurentPoly::monomial(xr, even, 1);
    images[yr.vars[2 * i - 1]] = LaurentPoly::monomial(xr, odd, 1);
  }
  return images;
}

LaurentPoly hamiltonian_matrix(int n, int k, char coords) {
  if (k < 1 || k > n) throw std::out_of_range("hamiltonian index");
  LaurentPoly h = exterior_trace(factorization_matrix(n), k);
  if (coords == 'y') return h;
  if (coords != 'x') throw std::invalid_argument("coords must be 'x' or 'y'");
  LaurentPoly hx = exactalg::substitute(h, y_to_x(n), x_ring(n));
  for (const auto& [e, c] : hx.terms()) {
    (void)c;
    for (long long v : e)
      if (v % hx.ring().den != 0)
        throw std::logic_error("non-integral exponents after substitution");
  }
  return hx;
}

}  // namespace todasys
