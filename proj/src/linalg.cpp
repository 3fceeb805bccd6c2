#include "pklovelock/linalg.hpp"

#include <algorithm>

namespace pklov {

std::vector<cplx> solve_dense(DMat a, std::vector<cplx> b) {
  const int n = a.rows();
  require(a.cols() == n, "solve_dense: matrix must be square");
  require(int(b.size()) == n, "solve_dense: rhs size mismatch");

  for (int col = 0; col < n; ++col) {
    int piv = col;
    double best = std::abs(a(col, col));
    for (int r = col + 1; r < n; ++r) {
      const double v = std::abs(a(r, col));
      if (v > best) {
        best = v;
        piv = r;
      }
    }
    if (best < 1e-14) throw std::runtime_error("solve_dense: singular system");
    if (piv != col) {
      for (int j = 0; j < n; ++j) std::swap(a(piv, j), a(col, j));
      std::swap(b[piv], b[col]);
    }
    const cplx dinv = 1.0 / a(col, col);
    for (int r = col + 1; r < n; ++r) {
      const cplx f = a(r, col) * dinv;
      if (f == 0.0) continue;
      for (int j = col; j < n; ++j) a(r, j) -= f * a(col, j);
      b[r] -= f * b[col];
    }
  }
  std::vector<cplx> x(n);
  for (int i = n - 1; i >= 0; --i) {
    cplx s = b[i];
    for (int j = i + 1; j < n; ++j) s -= a(i, j) * x[j];
    x[i] = s / a(i, i);
  }
  return x;
}

namespace {

// Gram matrix A Aᴴ (Hermitian, e x e).
DMat gram_aaH(const DMat& a) {
  const int e = a.rows(), m = a.cols();
  DMat g(e, e);
  for (int i = 0; i < e; ++i)
    for (int j = 0; j < e; ++j) {
      cplx s = 0.0;
      for (int k = 0; k < m; ++k) s += a(i, k) * std::conj(a(j, k));
      g(i, j) = s;
    }
  return g;
}

std::vector<cplx> apply(const DMat& a, const std::vector<cplx>& x) {
  std::vector<cplx> y(a.rows(), cplx{});
  for (int i = 0; i < a.rows(); ++i) {
    cplx s = 0.0;
    for (int k = 0; k < a.cols(); ++k) s += a(i, k) * x[k];
    y[i] = s;
  }
  return y;
}

std::vector<cplx> apply_adjoint(const DMat& a, const std::vector<cplx>& y) {
  std::vector<cplx> x(a.cols(), cplx{});
  for (int k = 0; k < a.cols(); ++k) {
    cplx s = 0.0;
    for (int i = 0; i < a.rows(); ++i) s += std::conj(a(i, k)) * y[i];
    x[k] = s;
  }
  return x;
}

}  // namespace

std::vector<cplx> solve_min_norm(const DMat& a, const std::vector<cplx>& b) {
  require(int(b.size()) == a.rows(), "solve_min_norm: rhs size mismatch");
  DMat g = gram_aaH(a);
  double scale = 0.0;
  for (int i = 0; i < g.rows(); ++i) scale = std::max(scale, std::abs(g(i, i)));
  const double ridge = std::max(scale, 1.0) * 1e-13;
  for (int i = 0; i < g.rows(); ++i) g(i, i) += ridge;

  std::vector<cplx> y = solve_dense(g, b);
  std::vector<cplx> x = apply_adjoint(a, y);

  // One refinement step to undo most of the ridge bias.
  std::vector<cplx> r = apply(a, x);
  for (size_t i = 0; i < r.size(); ++i) r[i] = b[i] - r[i];
  std::vector<cplx> dy = solve_dense(g, r);
  std::vector<cplx> dx = apply_adjoint(a, dy);
  for (size_t i = 0; i < x.size(); ++i) x[i] += dx[i];
  return x;
}

}  // namespace pklov
