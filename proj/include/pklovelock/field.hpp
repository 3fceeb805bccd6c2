#ifndef PKLOVELOCK_FIELD_HPP
#define PKLOVELOCK_FIELD_HPP

#include <functional>
#include <map>

#include "pklovelock/common.hpp"

namespace pklov {

// Per-axis hard cap on wave numbers. Products that would exceed it raise
// DegreeCapError instead of silently truncating.
inline constexpr int kDegreeCap = 48;

// Integer wave-number vector on T^d.
class FreqVec {
 public:
  FreqVec() = default;
  explicit FreqVec(int dim) : dim_(dim) { require(dim >= 1 && dim <= kMaxDim, "FreqVec: bad dimension"); }
  FreqVec(std::initializer_list<int> ks) : dim_(int(ks.size())) {
    require(dim_ >= 1 && dim_ <= kMaxDim, "FreqVec: bad dimension");
    int i = 0;
    for (int k : ks) v_[i++] = static_cast<int16_t>(k);
  }

  int dim() const { return dim_; }
  int operator[](int axis) const { return v_[axis]; }
  void set(int axis, int k) { v_[axis] = static_cast<int16_t>(k); }

  bool is_zero() const {
    for (int i = 0; i < dim_; ++i)
      if (v_[i] != 0) return false;
    return true;
  }

  int max_degree() const {
    int d = 0;
    for (int i = 0; i < dim_; ++i) d = std::max(d, std::abs(int(v_[i])));
    return d;
  }

  FreqVec negated() const {
    FreqVec r(dim_);
    for (int i = 0; i < dim_; ++i) r.v_[i] = static_cast<int16_t>(-v_[i]);
    return r;
  }

  friend FreqVec operator+(const FreqVec& a, const FreqVec& b) {
    FreqVec r(a.dim_);
    for (int i = 0; i < a.dim_; ++i) r.v_[i] = static_cast<int16_t>(a.v_[i] + b.v_[i]);
    return r;
  }

  friend bool operator==(const FreqVec& a, const FreqVec& b) {
    if (a.dim_ != b.dim_) return false;
    for (int i = 0; i < a.dim_; ++i)
      if (a.v_[i] != b.v_[i]) return false;
    return true;
  }

  friend bool operator<(const FreqVec& a, const FreqVec& b) {
    for (int i = 0; i < std::min(a.dim_, b.dim_); ++i) {
      if (a.v_[i] != b.v_[i]) return a.v_[i] < b.v_[i];
    }
    return a.dim_ < b.dim_;
  }

 private:
  std::array<int16_t, kMaxDim> v_{};
  int dim_ = 1;
};

// Value, gradient and Hessian of a field at a point.
struct FieldJet {
  cplx value{};
  std::array<cplx, kMaxDim> grad{};
  std::array<cplx, kMaxDim * kMaxDim> hess{};  // symmetric, full storage

  cplx hess_at(int i, int j) const { return hess[i * kMaxDim + j]; }
};

// A real-analytic function on the torus T^d stored as a finite Fourier sum.
// Differentiation and (trig-polynomial) integration are exact; evaluation is
// the only place floating point enters.
class ScalarField {
 public:
  explicit ScalarField(int dim = 2) : dim_(dim) {
    require(dim >= 1 && dim <= kMaxDim, "ScalarField: bad dimension");
  }

  static ScalarField zero(int dim) { return ScalarField(dim); }
  static ScalarField constant(int dim, cplx value);
  // c · e^{i ν·x}
  static ScalarField mode(FreqVec nu, cplx c);
  // amp · cos(ν·x + phase), stored as the conjugate mode pair (always real).
  static ScalarField harmonic(FreqVec nu, double amp, double phase = 0.0);

  int dim() const { return dim_; }
  int support_size() const { return int(coeffs_.size()); }
  int max_degree() const;
  const std::map<FreqVec, cplx>& coeffs() const { return coeffs_; }

  cplx coeff(const FreqVec& nu) const {
    auto it = coeffs_.find(nu);
    return it == coeffs_.end() ? cplx{} : it->second;
  }

  void add_coeff(const FreqVec& nu, cplx c);

  bool is_zero() const { return coeffs_.empty(); }
  // coeffs(−ν) == conj(coeffs(ν)) within tol
  bool is_real(double tol = 1e-14) const;

  ScalarField& operator+=(const ScalarField& o);
  ScalarField& operator-=(const ScalarField& o);
  ScalarField& operator*=(cplx s);
  friend ScalarField operator+(ScalarField a, const ScalarField& b) { return a += b; }
  friend ScalarField operator-(ScalarField a, const ScalarField& b) { return a -= b; }
  friend ScalarField operator*(ScalarField a, cplx s) { return a *= s; }
  friend ScalarField operator*(cplx s, ScalarField a) { return a *= s; }
  // frequency-support convolution; throws DegreeCapError past the hard cap
  friend ScalarField operator*(const ScalarField& a, const ScalarField& b);

  ScalarField conjugated() const;  // ν → −ν, c → conj(c)

  // ∂/∂x^axis (0-based); exact, never enlarges the support
  ScalarField derivative(int axis) const;
  // ½(∂_{x^α} ∓ i ∂_{x^{m̄+α}}); alpha is 0-based, dim must be even
  ScalarField wirtinger(int alpha, bool conjugated) const;

  // (2π)^d · coeff(0); exact for trigonometric polynomials
  cplx integrate() const;

  cplx eval(std::span<const double> x) const;
  FieldJet eval_jet(std::span<const double> x) const;

  void prune(double tol = 0.0);

 private:
  int dim_;
  std::map<FreqVec, cplx> coeffs_;
};

enum class FieldOp { add, mul, scale };

// Spec-surface entry point; `scale` uses the scalar argument.
ScalarField field_algebra(const ScalarField& a, const ScalarField& b, FieldOp op, cplx scalar = 1.0);

// Dense samples over the uniform N^d grid on [0,2π)^d, lexicographic order
// with axis 0 slowest.
struct GridSampling {
  int dim = 1;
  int n = 1;
  std::vector<double> values;
};

struct GridShape {
  int dim;
  int n;
  size_t total() const {
    size_t t = 1;
    for (int i = 0; i < dim; ++i) t *= size_t(n);
    return t;
  }
  void coords(size_t index, std::array<int, kMaxDim>& out) const {
    for (int a = dim - 1; a >= 0; --a) {
      out[a] = int(index % n);
      index /= n;
    }
  }
  void point(const std::array<int, kMaxDim>& c, std::array<double, kMaxDim>& x) const {
    for (int a = 0; a < dim; ++a) x[a] = kTwoPi * c[a] / n;
  }
};

GridSampling sample_function(int dim, int n, const std::function<double(std::span<const double>)>& f);
GridSampling sample_field_real(const ScalarField& f, int n);

// Uniform-grid trapezoid rule, (2π/N)^d Σ values, deterministic pairwise
// reduction. Throws on non-finite samples.
double quadrature(const GridSampling& g);
cplx quadrature_complex(int dim, int n, std::span<const cplx> values);

// Precomputed e^{i k x_j} tables for fast evaluation on uniform grids.
class GridEvalTables {
 public:
  GridEvalTables(int dim, int n, int max_degree);
  // e^{i ν·x} at the grid point with the given per-axis coordinates.
  cplx mode_value(const FreqVec& nu, const std::array<int, kMaxDim>& c) const {
    cplx v = 1.0;
    for (int a = 0; a < dim_; ++a) {
      const int k = nu[a];
      if (k != 0) v *= tab_[a][size_t(c[a]) * stride_ + (k + maxdeg_)];
    }
    return v;
  }
  int max_degree() const { return maxdeg_; }

 private:
  int dim_, n_, maxdeg_;
  size_t stride_;
  std::vector<std::vector<cplx>> tab_;  // [axis][pos * stride + (k+maxdeg)]
};

// Flattened mode list of one field, for tight grid loops.
class CompiledField {
 public:
  explicit CompiledField(const ScalarField& f);
  int dim() const { return dim_; }
  int max_degree() const { return maxdeg_; }

  // Accumulate value/gradient/Hessian at a grid point into `out`.
  void accumulate_jet(const GridEvalTables& tables, const std::array<int, kMaxDim>& c,
                      FieldJet& out) const;
  cplx value(const GridEvalTables& tables, const std::array<int, kMaxDim>& c) const;

 private:
  int dim_;
  int maxdeg_;
  std::vector<FreqVec> nu_;
  std::vector<cplx> c_;
};

}  // namespace pklov

#endif  // PKLOVELOCK_FIELD_HPP
