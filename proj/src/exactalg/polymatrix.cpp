// polymatrix.cpp -- matrices over a Laurent ring, minors, exterior traces.

#include "polymatrix.hpp"

#include <bit>
#include <numeric>
#include <stdexcept>

namespace exactalg {

PolyMatrix PolyMatrix::identity(const Ring& r, size_t n) {
  PolyMatrix m(r, n);
  for (size_t i = 0; i < n; ++i) m.at(i, i) = LaurentPoly::constant(r, 1);
  return m;
}

PolyMatrix PolyMatrix::operator*(const PolyMatrix& o) const {
  if (n_ != o.n_ || ring_ != o.ring_) throw std::invalid_argument("matrix mismatch");
  PolyMatrix out(ring_, n_);
  for (size_t i = 0; i < n_; ++i)
    for (size_t k = 0; k < n_; ++k) {
      const LaurentPoly& aik = at(i, k);
      if (aik.is_zero()) continue;
      for (size_t j = 0; j < n_; ++j) {
        if (o.at(k, j).is_zero()) continue;
        out.at(i, j) += aik * o.at(k, j);
      }
    }
  return out;
}

LaurentPoly minor_det(const PolyMatrix& M, const std::vector<int>& rows,
                      const std::vector<int>& cols) {
  if (rows.size() != cols.size()) throw std::invalid_argument("minor not square");
  const int k = static_cast<int>(rows.size());
  if (k == 0) return LaurentPoly::constant(M.ring(), 1);
  // f[mask] = det of the submatrix on the first popcount(mask) rows and the
  // column subset encoded by mask.
  std::vector<LaurentPoly> f(size_t(1) << k, LaurentPoly::zero(M.ring()));
  f[0] = LaurentPoly::constant(M.ring(), 1);
  for (unsigned mask = 1; mask < (1u << k); ++mask) {
    int r = std::popcount(mask) - 1;
    LaurentPoly acc = LaurentPoly::zero(M.ring());
    int seen = 0;
    for (int j = 0; j < k; ++j) {
      if (!(mask & (1u << j))) continue;
      const LaurentPoly& e = M.at(rows[r], cols[j]);
      if (!e.is_zero()) {
        LaurentPoly term = e * f[mask ^ (1u << j)];
        acc += ((r + seen) % 2 == 0) ? term : -term;
      }
      ++seen;
    }
    f[mask] = std::move(acc);
  }
  return f[(size_t(1) << k) - 1];
}

LaurentPoly det(const PolyMatrix& M) {
  std::vector<int> idx(M.size());
  std::iota(idx.begin(), idx.end(), 0);
  return minor_det(M, idx, idx);
}

LaurentPoly exterior_trace(const PolyMatrix& M, int k) {
  const int n = static_cast<int>(M.size());
  if (k < 0 || k > n) throw std::out_of_range("exterior_trace: k out of range");
  LaurentPoly sum = LaurentPoly::zero(M.ring());
  // Iterate over all k-subsets of {0..n-1}.
  std::vector<int> s(k);
  std::iota(s.begin(), s.end(), 0);
  if (k == 0) return LaurentPoly::constant(M.ring(), 1);
  while (true) {
    sum += minor_det(M, s, s);
    int i = k - 1;
    while (i >= 0 && s[i] == n - k + i) --i;
    if (i < 0) break;
    ++s[i];
    for (int j = i + 1; j < k; ++j) s[j] = s[j - 1] + 1;
  }
  return sum;
}

}  // namespace exactalg
