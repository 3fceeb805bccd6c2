#ifndef PKLOVELOCK_FORMS_HPP
#define PKLOVELOCK_FORMS_HPP

#include "pklovelock/linalg.hpp"

namespace pklov {

// Lex-ordered increasing index subsets of {0..n-1}, as bitmasks, one table
// per (n, d). Shared by wedge products, Gram pairings and the curvature
// bookkeeping.
class SubsetTable {
 public:
  static const SubsetTable& get(int n, int d);

  int n;
  int d;
  std::vector<uint16_t> masks;       // lex order of the index tuples
  std::array<int, 256> rank_of_mask; // -1 when not a d-subset

  // indices of the tuple with the given rank, into out[0..d)
  void unrank(int rank, std::array<int, kMaxDim>& out) const;

 private:
  SubsetTable(int n_, int d_);
};

// parity sign of merging two disjoint sorted index sets (a first, then b)
int merge_sign(uint16_t a, uint16_t b);

// A homogeneous complex-coefficient d-form over the 2m̄ real coordinate axes.
// Coefficients are stored on increasing index tuples; degree > dim collapses
// to the zero form.
class GradedForm {
 public:
  GradedForm(int dim, int deg);

  static GradedForm basis(int dim, std::initializer_list<int> axes, cplx c = 1.0);

  int dim() const { return dim_; }
  int degree() const { return deg_; }
  int size() const { return int(c_.size()); }

  cplx& operator[](int rank) { return c_[rank]; }
  const cplx& operator[](int rank) const { return c_[rank]; }

  cplx coeff_by_mask(uint16_t mask) const;
  void add_by_mask(uint16_t mask, cplx v);
  // component on an arbitrary ordered axis tuple (antisymmetric extension)
  cplx component(std::span<const int> axes) const;

  GradedForm& operator+=(const GradedForm& o);
  GradedForm& operator-=(const GradedForm& o);
  GradedForm& operator*=(cplx s);
  friend GradedForm operator+(GradedForm a, const GradedForm& b) { return a += b; }
  friend GradedForm operator-(GradedForm a, const GradedForm& b) { return a -= b; }
  friend GradedForm operator*(GradedForm a, cplx s) { return a *= s; }
  friend GradedForm operator*(cplx s, GradedForm a) { return a *= s; }

  double max_abs() const;
  bool is_zero() const { return c_.empty() || max_abs() == 0.0; }

 private:
  int dim_;
  int deg_;
  std::vector<cplx> c_;
};

GradedForm wedge(const GradedForm& a, const GradedForm& b);
GradedForm wedge_power(const GradedForm& a, int k);

// d×d minors det(A[I,J]) for all increasing I, J — the d-th compound matrix.
// Rows/cols are ranked by SubsetTable::get(A.n, d).
DMat compound_matrix(const CMat& a, int d);

// Gram pairing of equal-degree forms: Σ_{I,J} α_I det(h⁻¹[I,J]) β_J.
// Complex bilinear; in indefinite signature the sign pattern of h⁻¹ flows
// through the minors unaltered.
cplx form_inner(const GradedForm& alpha, const GradedForm& beta, const CMat& hinv);

// Same pairing with the compound matrix precomputed (grid loops).
cplx form_inner_pre(const GradedForm& alpha, const GradedForm& beta, const DMat& gram);

// Pullback through the linear map x ↦ L x: (L*ω)_I = Σ_J ω_J det(L[J,I]).
GradedForm pullback_linear(const GradedForm& w, const CMat& l);

}  // namespace pklov

#endif  // PKLOVELOCK_FORMS_HPP
