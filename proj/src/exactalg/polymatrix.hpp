#pragma once
// polymatrix.hpp
// --------------
// Square matrices over a Laurent polynomial ring, with determinants and
// exterior-power traces (sums of principal minors) at desk scale.

#include <vector>

#include "laurent.hpp"

namespace exactalg {

class PolyMatrix {
 public:
  PolyMatrix() = default;
  PolyMatrix(const Ring& r, size_t n)
      : ring_(r), n_(n), a_(n * n, LaurentPoly::zero(r)) {}

  static PolyMatrix identity(const Ring& r, size_t n);

  size_t size() const { return n_; }
  const Ring& ring() const { return ring_; }

  LaurentPoly& at(size_t i, size_t j) { return a_[i * n_ + j]; }
  const LaurentPoly& at(size_t i, size_t j) const { return a_[i * n_ + j]; }

  PolyMatrix operator*(const PolyMatrix& o) const;
  bool operator==(const PolyMatrix& o) const {
    return n_ == o.n_ && ring_ == o.ring_ && a_ == o.a_;
  }

 private:
  Ring ring_;
  size_t n_ = 0;
  std::vector<LaurentPoly> a_;
};

// Determinant of the submatrix on the given (equal-length) row/column index
// lists, by dynamic programming over column subsets.
LaurentPoly minor_det(const PolyMatrix& M, const std::vector<int>& rows,
                      const std::vector<int>& cols);

LaurentPoly det(const PolyMatrix& M);

// Trace of the k-th exterior power: sum of all k x k principal minors.
LaurentPoly exterior_trace(const PolyMatrix& M, int k);

}  // namespace exactalg
