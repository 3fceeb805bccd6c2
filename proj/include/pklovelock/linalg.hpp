#ifndef PKLOVELOCK_LINALG_HPP
#define PKLOVELOCK_LINALG_HPP

#include "pklovelock/common.hpp"

namespace pklov {

// Dense complex matrix with a fixed small capacity (n ≤ kMaxDim). Value type,
// no heap traffic; this is the workhorse of the pointwise curvature pipeline.
struct CMat {
  int n = 0;
  std::array<cplx, kMaxDim * kMaxDim> a{};

  CMat() = default;
  explicit CMat(int size) : n(size) {}

  static CMat identity(int size) {
    CMat m(size);
    for (int i = 0; i < size; ++i) m(i, i) = 1.0;
    return m;
  }

  cplx& operator()(int i, int j) { return a[i * kMaxDim + j]; }
  const cplx& operator()(int i, int j) const { return a[i * kMaxDim + j]; }

  CMat& operator+=(const CMat& o) {
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) (*this)(i, j) += o(i, j);
    return *this;
  }
  CMat& operator-=(const CMat& o) {
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) (*this)(i, j) -= o(i, j);
    return *this;
  }
  CMat& operator*=(cplx s) {
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) (*this)(i, j) *= s;
    return *this;
  }

  friend CMat operator+(CMat x, const CMat& y) { return x += y; }
  friend CMat operator-(CMat x, const CMat& y) { return x -= y; }
  friend CMat operator*(CMat x, cplx s) { return x *= s; }
  friend CMat operator*(cplx s, CMat x) { return x *= s; }

  friend CMat operator*(const CMat& x, const CMat& y) {
    CMat r(x.n);
    for (int i = 0; i < x.n; ++i)
      for (int k = 0; k < x.n; ++k) {
        const cplx xik = x(i, k);
        if (xik == 0.0) continue;
        for (int j = 0; j < x.n; ++j) r(i, j) += xik * y(k, j);
      }
    return r;
  }

  CMat transposed() const {
    CMat r(n);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) r(j, i) = (*this)(i, j);
    return r;
  }

  CMat conjugated() const {
    CMat r(n);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) r(i, j) = std::conj((*this)(i, j));
    return r;
  }

  CMat adjoint() const { return transposed().conjugated(); }

  cplx trace() const {
    cplx t = 0.0;
    for (int i = 0; i < n; ++i) t += (*this)(i, i);
    return t;
  }

  double max_abs() const {
    double m = 0.0;
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) m = std::max(m, std::abs((*this)(i, j)));
    return m;
  }

  double max_abs_diff(const CMat& o) const {
    double m = 0.0;
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) m = std::max(m, std::abs((*this)(i, j) - o(i, j)));
    return m;
  }
};

// LU factorization with partial pivoting; inverse and determinant for the
// small sizes used here. Degeneracy is reported, never patched over.
struct LuResult {
  CMat inv;
  cplx det;
  bool ok;
};

inline LuResult lu_invert(const CMat& m, double pivot_tol = 0.0) {
  const int n = m.n;
  CMat lu = m;
  CMat inv = CMat::identity(n);
  std::array<int, kMaxDim> perm{};
  for (int i = 0; i < n; ++i) perm[i] = i;
  cplx det = 1.0;

  for (int col = 0; col < n; ++col) {
    int piv = col;
    double best = std::abs(lu(col, col));
    for (int r = col + 1; r < n; ++r) {
      const double v = std::abs(lu(r, col));
      if (v > best) {
        best = v;
        piv = r;
      }
    }
    if (best <= pivot_tol) return {CMat(n), 0.0, false};
    if (piv != col) {
      for (int j = 0; j < n; ++j) {
        std::swap(lu(piv, j), lu(col, j));
        std::swap(inv(piv, j), inv(col, j));
      }
      det = -det;
    }
    const cplx d = lu(col, col);
    det *= d;
    const cplx dinv = 1.0 / d;
    for (int j = 0; j < n; ++j) {
      lu(col, j) *= dinv;
      inv(col, j) *= dinv;
    }
    for (int r = 0; r < n; ++r) {
      if (r == col) continue;
      const cplx f = lu(r, col);
      if (f == 0.0) continue;
      for (int j = 0; j < n; ++j) {
        lu(r, j) -= f * lu(col, j);
        inv(r, j) -= f * inv(col, j);
      }
    }
  }
  return {inv, det, true};
}

inline cplx determinant(const CMat& m) {
  // LU without the inverse accumulation.
  const int n = m.n;
  CMat lu = m;
  cplx det = 1.0;
  for (int col = 0; col < n; ++col) {
    int piv = col;
    double best = std::abs(lu(col, col));
    for (int r = col + 1; r < n; ++r) {
      const double v = std::abs(lu(r, col));
      if (v > best) {
        best = v;
        piv = r;
      }
    }
    if (best == 0.0) return 0.0;
    if (piv != col) {
      for (int j = col; j < n; ++j) std::swap(lu(piv, j), lu(col, j));
      det = -det;
    }
    det *= lu(col, col);
    const cplx dinv = 1.0 / lu(col, col);
    for (int r = col + 1; r < n; ++r) {
      const cplx f = lu(r, col) * dinv;
      if (f == 0.0) continue;
      for (int j = col; j < n; ++j) lu(r, j) -= f * lu(col, j);
    }
  }
  return det;
}

// Dynamic complex matrix for the occasional dense solve (jet prescription,
// normal-coordinate systems). Row major.
class DMat {
 public:
  DMat() = default;
  DMat(int rows, int cols) : rows_(rows), cols_(cols), a_(size_t(rows) * cols, cplx{}) {}

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  cplx& operator()(int i, int j) { return a_[size_t(i) * cols_ + j]; }
  const cplx& operator()(int i, int j) const { return a_[size_t(i) * cols_ + j]; }

 private:
  int rows_ = 0, cols_ = 0;
  std::vector<cplx> a_;
};

// Solves the square system A x = b by LU with partial pivoting.
// Throws std::runtime_error on (numerical) singularity.
std::vector<cplx> solve_dense(DMat a, std::vector<cplx> b);

// Minimum-norm solution of the (typically underdetermined) system A x = b,
// computed via x = Aᴴ (A Aᴴ)⁻¹ b with one step of iterative refinement.
std::vector<cplx> solve_min_norm(const DMat& a, const std::vector<cplx>& b);

}  // namespace pklov

#endif  // PKLOVELOCK_LINALG_HPP
