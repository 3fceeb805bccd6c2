#include "pklovelock/field.hpp"

#include <algorithm>

namespace pklov {

ScalarField ScalarField::constant(int dim, cplx value) {
  ScalarField f(dim);
  if (value != 0.0) f.coeffs_[FreqVec(dim)] = value;
  return f;
}

ScalarField ScalarField::mode(FreqVec nu, cplx c) {
  ScalarField f(nu.dim());
  f.add_coeff(nu, c);
  return f;
}

ScalarField ScalarField::harmonic(FreqVec nu, double amp, double phase) {
  ScalarField f(nu.dim());
  const cplx half = 0.5 * amp * std::exp(cplx(0.0, phase));
  f.add_coeff(nu, half);
  f.add_coeff(nu.negated(), std::conj(half));
  return f;
}

int ScalarField::max_degree() const {
  int d = 0;
  for (const auto& [nu, c] : coeffs_) d = std::max(d, nu.max_degree());
  return d;
}

void ScalarField::add_coeff(const FreqVec& nu, cplx c) {
  require(nu.dim() == dim_, "ScalarField: frequency dimension mismatch");
  if (nu.max_degree() > kDegreeCap)
    throw DegreeCapError("ScalarField: wave number exceeds degree cap " + std::to_string(kDegreeCap));
  if (c == 0.0) return;
  auto [it, inserted] = coeffs_.try_emplace(nu, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0.0) coeffs_.erase(it);
  }
}

bool ScalarField::is_real(double tol) const {
  for (const auto& [nu, c] : coeffs_) {
    const cplx mirror = coeff(nu.negated());
    if (std::abs(mirror - std::conj(c)) > tol) return false;
  }
  return true;
}

ScalarField& ScalarField::operator+=(const ScalarField& o) {
  require(dim_ == o.dim_, "field_algebra: dimension mismatch");
  for (const auto& [nu, c] : o.coeffs_) add_coeff(nu, c);
  return *this;
}

ScalarField& ScalarField::operator-=(const ScalarField& o) {
  require(dim_ == o.dim_, "field_algebra: dimension mismatch");
  for (const auto& [nu, c] : o.coeffs_) add_coeff(nu, -c);
  return *this;
}

ScalarField& ScalarField::operator*=(cplx s) {
  if (s == 0.0) {
    coeffs_.clear();
    return *this;
  }
  for (auto& [nu, c] : coeffs_) c *= s;
  return *this;
}

ScalarField operator*(const ScalarField& a, const ScalarField& b) {
  require(a.dim_ == b.dim_, "field_algebra: dimension mismatch");
  ScalarField r(a.dim_);
  for (const auto& [nu, c] : a.coeffs_)
    for (const auto& [mu, d] : b.coeffs_) r.add_coeff(nu + mu, c * d);
  return r;
}

ScalarField ScalarField::conjugated() const {
  ScalarField r(dim_);
  for (const auto& [nu, c] : coeffs_) r.add_coeff(nu.negated(), std::conj(c));
  return r;
}

ScalarField ScalarField::derivative(int axis) const {
  require(axis >= 0 && axis < dim_, "differentiate: axis out of range");
  ScalarField r(dim_);
  for (const auto& [nu, c] : coeffs_) {
    if (nu[axis] == 0) continue;
    r.coeffs_[nu] = c * cplx(0.0, double(nu[axis]));
  }
  return r;
}

ScalarField ScalarField::wirtinger(int alpha, bool conjugated) const {
  require(dim_ % 2 == 0, "wirtinger: field dimension must be even");
  const int mbar = dim_ / 2;
  require(alpha >= 0 && alpha < mbar, "wirtinger: index out of range");
  const cplx sign = conjugated ? cplx(0.0, 0.5) : cplx(0.0, -0.5);
  ScalarField r = derivative(alpha) * cplx(0.5, 0.0);
  r += derivative(mbar + alpha) * sign;
  return r;
}

cplx ScalarField::integrate() const {
  double vol = 1.0;
  for (int i = 0; i < dim_; ++i) vol *= kTwoPi;
  return vol * coeff(FreqVec(dim_));
}

cplx ScalarField::eval(std::span<const double> x) const {
  require(int(x.size()) >= dim_, "ScalarField::eval: point dimension mismatch");
  cplx s = 0.0;
  for (const auto& [nu, c] : coeffs_) {
    double phase = 0.0;
    for (int a = 0; a < dim_; ++a) phase += double(nu[a]) * x[a];
    s += c * std::exp(cplx(0.0, phase));
  }
  return s;
}

FieldJet ScalarField::eval_jet(std::span<const double> x) const {
  require(int(x.size()) >= dim_, "ScalarField::eval_jet: point dimension mismatch");
  FieldJet out;
  for (const auto& [nu, c] : coeffs_) {
    double phase = 0.0;
    for (int a = 0; a < dim_; ++a) phase += double(nu[a]) * x[a];
    const cplx w = c * std::exp(cplx(0.0, phase));
    out.value += w;
    for (int a = 0; a < dim_; ++a) {
      if (nu[a] == 0) continue;
      const cplx wa = w * cplx(0.0, double(nu[a]));
      out.grad[a] += wa;
      for (int b = 0; b < dim_; ++b) {
        if (nu[b] == 0) continue;
        out.hess[a * kMaxDim + b] += wa * cplx(0.0, double(nu[b]));
      }
    }
  }
  return out;
}

void ScalarField::prune(double tol) {
  for (auto it = coeffs_.begin(); it != coeffs_.end();) {
    if (std::abs(it->second) <= tol)
      it = coeffs_.erase(it);
    else
      ++it;
  }
}

ScalarField field_algebra(const ScalarField& a, const ScalarField& b, FieldOp op, cplx scalar) {
  switch (op) {
    case FieldOp::add:
      return a + b;
    case FieldOp::mul:
      return a * b;
    case FieldOp::scale:
      return a * scalar;
  }
  throw std::invalid_argument("field_algebra: unknown op");
}

GridSampling sample_function(int dim, int n, const std::function<double(std::span<const double>)>& f) {
  GridShape shape{dim, n};
  GridSampling g{dim, n, std::vector<double>(shape.total())};
  std::array<int, kMaxDim> c{};
  std::array<double, kMaxDim> x{};
  for (size_t i = 0; i < shape.total(); ++i) {
    shape.coords(i, c);
    shape.point(c, x);
    g.values[i] = f(std::span<const double>(x.data(), dim));
  }
  return g;
}

GridSampling sample_field_real(const ScalarField& f, int n) {
  return sample_function(f.dim(), n, [&](std::span<const double> x) { return f.eval(x).real(); });
}

double quadrature(const GridSampling& g) {
  for (double v : g.values)
    if (!std::isfinite(v)) throw std::runtime_error("quadrature: non-finite sample value");
  double cell = 1.0;
  for (int i = 0; i < g.dim; ++i) cell *= kTwoPi / g.n;
  return cell * pairwise_sum(std::span<const double>(g.values.data(), g.values.size()));
}

cplx quadrature_complex(int dim, int n, std::span<const cplx> values) {
  for (const cplx& v : values)
    if (!std::isfinite(v.real()) || !std::isfinite(v.imag()))
      throw std::runtime_error("quadrature: non-finite sample value");
  double cell = 1.0;
  for (int i = 0; i < dim; ++i) cell *= kTwoPi / n;
  return cell * pairwise_sum(values);
}

GridEvalTables::GridEvalTables(int dim, int n, int max_degree)
    : dim_(dim), n_(n), maxdeg_(max_degree), stride_(size_t(2 * max_degree + 1)) {
  tab_.resize(dim);
  for (int a = 0; a < dim; ++a) {
    tab_[a].resize(size_t(n) * stride_);
    for (int j = 0; j < n; ++j) {
      const double x = kTwoPi * j / n;
      for (int k = -maxdeg_; k <= maxdeg_; ++k)
        tab_[a][size_t(j) * stride_ + (k + maxdeg_)] = std::exp(cplx(0.0, k * x));
    }
  }
}

CompiledField::CompiledField(const ScalarField& f) : dim_(f.dim()), maxdeg_(f.max_degree()) {
  nu_.reserve(f.coeffs().size());
  c_.reserve(f.coeffs().size());
  for (const auto& [nu, c] : f.coeffs()) {
    nu_.push_back(nu);
    c_.push_back(c);
  }
}

void CompiledField::accumulate_jet(const GridEvalTables& tables, const std::array<int, kMaxDim>& c,
                                   FieldJet& out) const {
  for (size_t m = 0; m < nu_.size(); ++m) {
    const FreqVec& nu = nu_[m];
    const cplx w = c_[m] * tables.mode_value(nu, c);
    out.value += w;
    for (int a = 0; a < dim_; ++a) {
      const int ka = nu[a];
      if (ka == 0) continue;
      const cplx wa = w * cplx(0.0, double(ka));
      out.grad[a] += wa;
      for (int b = 0; b < dim_; ++b) {
        const int kb = nu[b];
        if (kb == 0) continue;
        out.hess[a * kMaxDim + b] += wa * cplx(0.0, double(kb));
      }
    }
  }
}

cplx CompiledField::value(const GridEvalTables& tables, const std::array<int, kMaxDim>& c) const {
  cplx s = 0.0;
  for (size_t m = 0; m < nu_.size(); ++m) s += c_[m] * tables.mode_value(nu_[m], c);
  return s;
}

}  // namespace pklov
