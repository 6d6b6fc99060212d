#pragma once
// toda.hpp
// --------
// The factorization map of the open relativistic Toda chain into SL_{n+1}
// and its Hamiltonians H_k as exterior-power traces, in the exact y-ring
// (denominator n+1) and the x-ring via the monomial change of coordinates.

#include <map>
#include <string>

#include "../exactalg/polymatrix.hpp"

namespace todasys {

using exactalg::LaurentPoly;
using exactalg::PolyMatrix;
using exactalg::Ring;

// y1..y_{2n} with exponent denominator n+1.
Ring y_ring(int n);
// x1..x_{2n}; denominator n+1 so intermediate substitutions stay exact.
Ring x_ring(int n);

// E_i = I + e_{i,i+1}, F_i = I + e_{i+1,i}, size (n+1) x (n+1).
PolyMatrix elementary_E(const Ring& r, int n, int i);
PolyMatrix elementary_F(const Ring& r, int n, int i);

// y^{omega_i^vee} for the ring variable with (0-based) index yidx:
// y^{-i/(n+1)} * diag(y, ..., y [i times], 1, ..., 1).
PolyMatrix coweight_matrix(const Ring& r, int n, int i, int yidx);

// Ordered product prod_{i=1..n} E_i y_{2i-1}^{omega_i^vee} F_i y_{2i}^{omega_i^vee}.
PolyMatrix factorization_matrix(int n);

// y_{2i-1} -> prod_j x_{2j}^{C_ij}, y_{2i} -> prod_j x_{2j-1}^{-C_ij}
// with C the A_n Cartan matrix; images in x_ring(n).
std::map<std::string, LaurentPoly> y_to_x(int n);

// H_k = exterior_trace(factorization_matrix(n), k); coords: 'y' or 'x'.
LaurentPoly hamiltonian_matrix(int n, int k, char coords);

}  // namespace todasys
