#include "negacap/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

namespace negacap {

ComplexMatrix::ComplexMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), entries_(rows * cols, cplx(0.0, 0.0)) {}

ComplexMatrix::ComplexMatrix(std::size_t rows, std::size_t cols, std::vector<cplx> entries)
    : rows_(rows), cols_(cols), entries_(std::move(entries)) {
  if (entries_.size() != rows * cols)
    fail(ErrorKind::DimensionMismatch, "entry count does not match rows*cols");
}

ComplexMatrix::ComplexMatrix(std::initializer_list<std::initializer_list<cplx>> rows) {
  rows_ = rows.size();
  cols_ = rows_ ? rows.begin()->size() : 0;
  entries_.reserve(rows_ * cols_);
  for (const auto& r : rows) {
    if (r.size() != cols_) fail(ErrorKind::DimensionMismatch, "ragged initializer");
    entries_.insert(entries_.end(), r.begin(), r.end());
  }
}

ComplexMatrix ComplexMatrix::identity(std::size_t n) {
  ComplexMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
  return m;
}

ComplexMatrix ComplexMatrix::diag(const std::vector<double>& d) {
  ComplexMatrix m(d.size(), d.size());
  for (std::size_t i = 0; i < d.size(); ++i) m(i, i) = d[i];
  return m;
}

ComplexMatrix ComplexMatrix::column(const std::vector<cplx>& v) {
  return ComplexMatrix(v.size(), 1, v);
}

ComplexMatrix ComplexMatrix::adjoint() const {
  ComplexMatrix m(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) m(j, i) = std::conj((*this)(i, j));
  return m;
}

ComplexMatrix ComplexMatrix::transpose() const {
  ComplexMatrix m(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) m(j, i) = (*this)(i, j);
  return m;
}

ComplexMatrix ComplexMatrix::conj() const {
  ComplexMatrix m = *this;
  for (auto& z : m.entries_) z = std::conj(z);
  return m;
}

cplx ComplexMatrix::trace() const {
  cplx t = 0.0;
  for (std::size_t i = 0; i < std::min(rows_, cols_); ++i) t += (*this)(i, i);
  return t;
}

double ComplexMatrix::max_abs() const {
  double m = 0.0;
  for (const auto& z : entries_) m = std::max(m, std::abs(z));
  return m;
}

ComplexMatrix ComplexMatrix::col(std::size_t j) const {
  ComplexMatrix c(rows_, 1);
  for (std::size_t i = 0; i < rows_; ++i) c(i, 0) = (*this)(i, j);
  return c;
}

ComplexMatrix& ComplexMatrix::operator+=(const ComplexMatrix& o) {
  if (rows_ != o.rows_ || cols_ != o.cols_) fail(ErrorKind::DimensionMismatch, "matrix sum");
  for (std::size_t k = 0; k < entries_.size(); ++k) entries_[k] += o.entries_[k];
  return *this;
}

ComplexMatrix& ComplexMatrix::operator-=(const ComplexMatrix& o) {
  if (rows_ != o.rows_ || cols_ != o.cols_) fail(ErrorKind::DimensionMismatch, "matrix difference");
  for (std::size_t k = 0; k < entries_.size(); ++k) entries_[k] -= o.entries_[k];
  return *this;
}

ComplexMatrix& ComplexMatrix::operator*=(cplx s) {
  for (auto& z : entries_) z *= s;
  return *this;
}

ComplexMatrix operator+(ComplexMatrix a, const ComplexMatrix& b) { return a += b; }
ComplexMatrix operator-(ComplexMatrix a, const ComplexMatrix& b) { return a -= b; }
ComplexMatrix operator*(cplx s, ComplexMatrix a) { return a *= s; }
ComplexMatrix operator*(ComplexMatrix a, cplx s) { return a *= s; }

ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b) {
  if (a.cols() != b.rows()) fail(ErrorKind::DimensionMismatch, "matrix product");
  ComplexMatrix c(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const cplx aik = a(i, k);
      if (aik == cplx(0.0, 0.0)) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) c(i, j) += aik * b(k, j);
    }
  return c;
}

double max_abs_diff(const ComplexMatrix& a, const ComplexMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols())
    fail(ErrorKind::DimensionMismatch, "max_abs_diff");
  double m = 0.0;
  for (std::size_t k = 0; k < a.entries().size(); ++k)
    m = std::max(m, std::abs(a.entries()[k] - b.entries()[k]));
  return m;
}

cplx hs_inner(const ComplexMatrix& a, const ComplexMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) fail(ErrorKind::DimensionMismatch, "hs_inner");
  cplx s = 0.0;
  for (std::size_t k = 0; k < a.entries().size(); ++k) s += std::conj(a.entries()[k]) * b.entries()[k];
  return s;
}

ComplexMatrix outer(const ComplexMatrix& u, const ComplexMatrix& v) { return u * v.adjoint(); }

bool is_hermitian(const ComplexMatrix& h, double tol) {
  if (!h.square()) return false;
  for (std::size_t i = 0; i < h.rows(); ++i)
    for (std::size_t j = i; j < h.cols(); ++j)
      if (std::abs(h(i, j) - std::conj(h(j, i))) > tol) return false;
  return true;
}

namespace {

double frobenius(const ComplexMatrix& m) {
  double s = 0.0;
  for (const auto& z : m.entries()) s += std::norm(z);
  return std::sqrt(s);
}

double off_diagonal(const ComplexMatrix& m) {
  double s = 0.0;
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j)
      if (i != j) s += std::norm(m(i, j));
  return std::sqrt(s);
}

constexpr int kMaxSweeps = 100;

}  // namespace

EigenSystem eig_hermitian(const ComplexMatrix& h, double tol) {
  if (!h.square()) fail(ErrorKind::DimensionMismatch, "eig_hermitian needs a square matrix");
  const double scale = std::max(1.0, h.max_abs());
  if (!is_hermitian(h, tol * scale)) fail(ErrorKind::NotHermitian, "input is not Hermitian");
  const std::size_t n = h.rows();

  ComplexMatrix a = h;
  for (std::size_t i = 0; i < n; ++i) {
    a(i, i) = a(i, i).real();
    for (std::size_t j = i + 1; j < n; ++j) {
      const cplx avg = 0.5 * (a(i, j) + std::conj(a(j, i)));
      a(i, j) = avg;
      a(j, i) = std::conj(avg);
    }
  }
  ComplexMatrix v = ComplexMatrix::identity(n);
  const double target = 1e-13 * frobenius(a);

  int sweep = 0;
  while (off_diagonal(a) > target) {
    if (++sweep > kMaxSweeps) fail(ErrorKind::NoConvergence, "Jacobi sweep cap reached");
    for (std::size_t p = 0; p + 1 < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) {
        const double mag = std::abs(a(p, q));
        if (mag == 0.0) continue;
        const cplx phase = a(p, q) / mag;  // e^{i phi}
        const double app = a(p, p).real();
        const double aqq = a(q, q).real();
        const double tau = (aqq - app) / (2.0 * mag);
        const double t = (tau >= 0 ? 1.0 : -1.0) / (std::abs(tau) + std::sqrt(1.0 + tau * tau));
        const double c = 1.0 / std::sqrt(1.0 + t * t);
        const double s = t * c;
        // J acts on columns p,q: J = [[c, s], [-s e^{-i phi}, c e^{-i phi}]].
        const cplx jqp = -s * std::conj(phase);
        const cplx jqq = c * std::conj(phase);
        for (std::size_t k = 0; k < n; ++k) {
          const cplx akp = a(k, p), akq = a(k, q);
          a(k, p) = akp * c + akq * jqp;
          a(k, q) = akp * s + akq * jqq;
          const cplx vkp = v(k, p), vkq = v(k, q);
          v(k, p) = vkp * c + vkq * jqp;
          v(k, q) = vkp * s + vkq * jqq;
        }
        for (std::size_t k = 0; k < n; ++k) {
          const cplx apk = a(p, k), aqk = a(q, k);
          a(p, k) = c * apk + std::conj(jqp) * aqk;
          a(q, k) = s * apk + std::conj(jqq) * aqk;
        }
        a(p, q) = 0.0;
        a(q, p) = 0.0;
        a(p, p) = a(p, p).real();
        a(q, q) = a(q, q).real();
      }
    }
  }

  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t x, std::size_t y) { return a(x, x).real() < a(y, y).real(); });
  EigenSystem es;
  es.values.resize(n);
  es.vectors = ComplexMatrix(n, n);
  for (std::size_t k = 0; k < n; ++k) {
    es.values[k] = a(order[k], order[k]).real();
    for (std::size_t i = 0; i < n; ++i) es.vectors(i, k) = v(i, order[k]);
  }
  return es;
}

HermitianSplit positive_negative_parts(const ComplexMatrix& h, double rel_zero, double herm_tol) {
  const EigenSystem es = eig_hermitian(h, herm_tol);
  double top = 0.0;
  for (double l : es.values) top = std::max(top, std::abs(l));
  const double cut = rel_zero * top;
  HermitianSplit out;
  out.tolerance = cut;
  out.plus = spectral_map(es, [cut](double l) { return l > cut ? l : 0.0; });
  out.minus = spectral_map(es, [cut](double l) { return l < -cut ? -l : 0.0; });
  return out;
}

std::vector<double> singular_values(const ComplexMatrix& o) {
  std::vector<double> sv;
  // Hermitian input: |eigenvalues| avoid the squaring loss of O^dagger O.
  if (o.square() && is_hermitian(o, 1e-14 * std::max(1.0, o.max_abs()))) {
    for (double l : eig_hermitian(o).values) sv.push_back(std::abs(l));
  } else {
    const ComplexMatrix g = o.rows() >= o.cols() ? o.adjoint() * o : o * o.adjoint();
    for (double l : eig_hermitian(g).values) sv.push_back(std::sqrt(std::max(l, 0.0)));
  }
  std::sort(sv.begin(), sv.end(), std::greater<>());
  return sv;
}

double schatten_norm(const ComplexMatrix& o, double p) {
  if (!(p >= 1.0)) fail(ErrorKind::InvalidP, "Schatten index must satisfy p >= 1");
  for (const auto& z : o.entries())
    if (!std::isfinite(z.real()) || !std::isfinite(z.imag()))
      fail(ErrorKind::InvalidP, "non-finite entries");
  if (o.empty()) return 0.0;
  const std::vector<double> sv = singular_values(o);
  if (std::isinf(p)) return sv.front();
  if (p == 1.0) return std::accumulate(sv.begin(), sv.end(), 0.0);
  const double top = sv.front();
  if (top == 0.0) return 0.0;
  double s = 0.0;
  for (double x : sv) s += std::pow(x / top, p);
  return top * std::pow(s, 1.0 / p);
}

ComplexMatrix tensor(const ComplexMatrix& a, const ComplexMatrix& b) {
  ComplexMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) {
      const cplx aij = a(i, j);
      if (aij == cplx(0.0, 0.0)) continue;
      for (std::size_t k = 0; k < b.rows(); ++k)
        for (std::size_t l = 0; l < b.cols(); ++l)
          out(i * b.rows() + k, j * b.cols() + l) = aij * b(k, l);
    }
  return out;
}

namespace {

void check_bipartite(const ComplexMatrix& o, BipartiteDims dims, const char* what) {
  if (!o.square() || o.rows() != dims.total() || dims.d_A == 0 || dims.d_B == 0)
    fail(ErrorKind::DimensionMismatch,
         std::string(what) + ": side " + std::to_string(o.rows()) + " vs " +
             std::to_string(dims.d_A) + "x" + std::to_string(dims.d_B));
}

}  // namespace

ComplexMatrix partial_trace(const ComplexMatrix& o, BipartiteDims dims, Subsystem keep) {
  check_bipartite(o, dims, "partial_trace");
  const std::size_t dA = dims.d_A, dB = dims.d_B;
  if (keep == Subsystem::A) {
    ComplexMatrix r(dA, dA);
    for (std::size_t a = 0; a < dA; ++a)
      for (std::size_t c = 0; c < dA; ++c)
        for (std::size_t b = 0; b < dB; ++b) r(a, c) += o(a * dB + b, c * dB + b);
    return r;
  }
  ComplexMatrix r(dB, dB);
  for (std::size_t b = 0; b < dB; ++b)
    for (std::size_t d = 0; d < dB; ++d)
      for (std::size_t a = 0; a < dA; ++a) r(b, d) += o(a * dB + b, a * dB + d);
  return r;
}

ComplexMatrix partial_transpose(const ComplexMatrix& o, BipartiteDims dims, Subsystem side) {
  check_bipartite(o, dims, "partial_transpose");
  const std::size_t dA = dims.d_A, dB = dims.d_B;
  ComplexMatrix r(o.rows(), o.cols());
  for (std::size_t a = 0; a < dA; ++a)
    for (std::size_t b = 0; b < dB; ++b)
      for (std::size_t c = 0; c < dA; ++c)
        for (std::size_t d = 0; d < dB; ++d) {
          if (side == Subsystem::A)
            r(a * dB + b, c * dB + d) = o(c * dB + b, a * dB + d);
          else
            r(a * dB + b, c * dB + d) = o(a * dB + d, c * dB + b);
        }
  return r;
}

ComplexMatrix sqrt_psd(const ComplexMatrix& p, double tol) {
  const EigenSystem es = eig_hermitian(p, tol);
  double top = 0.0;
  for (double l : es.values) top = std::max(top, std::abs(l));
  for (double l : es.values)
    if (l < -tol * std::max(1.0, top)) fail(ErrorKind::NotPSD, "negative eigenvalue " + std::to_string(l));
  return spectral_map(es, [](double l) { return std::sqrt(std::max(l, 0.0)); });
}

ComplexMatrix expi_hermitian(const ComplexMatrix& h) {
  const EigenSystem es = eig_hermitian(h);
  const std::size_t n = es.values.size();
  ComplexMatrix out(n, n);
  for (std::size_t k = 0; k < n; ++k) {
    const cplx w = std::polar(1.0, es.values[k]);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        out(i, j) += w * es.vectors(i, k) * std::conj(es.vectors(j, k));
  }
  return out;
}

ComplexMatrix block_diag(const std::vector<ComplexMatrix>& blocks) {
  std::size_t r = 0, c = 0;
  for (const auto& b : blocks) r += b.rows(), c += b.cols();
  ComplexMatrix out(r, c);
  std::size_t r0 = 0, c0 = 0;
  for (const auto& b : blocks) {
    for (std::size_t i = 0; i < b.rows(); ++i)
      for (std::size_t j = 0; j < b.cols(); ++j) out(r0 + i, c0 + j) = b(i, j);
    r0 += b.rows();
    c0 += b.cols();
  }
  return out;
}

}  // namespace negacap
