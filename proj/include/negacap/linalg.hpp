#pragma once

#include <complex>
#include <cstddef>
#include <initializer_list>
#include <limits>
#include <vector>

#include "negacap/errors.hpp"

namespace negacap {

using cplx = std::complex<double>;
inline constexpr double kInf = std::numeric_limits<double>::infinity();

// Dense row-major complex matrix.
class ComplexMatrix {
 public:
  ComplexMatrix() = default;
  ComplexMatrix(std::size_t rows, std::size_t cols);
  ComplexMatrix(std::size_t rows, std::size_t cols, std::vector<cplx> entries);
  ComplexMatrix(std::initializer_list<std::initializer_list<cplx>> rows);

  static ComplexMatrix identity(std::size_t n);
  static ComplexMatrix zeros(std::size_t rows, std::size_t cols) { return {rows, cols}; }
  static ComplexMatrix diag(const std::vector<double>& d);
  static ComplexMatrix column(const std::vector<cplx>& v);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool square() const { return rows_ == cols_; }
  bool empty() const { return entries_.empty(); }

  cplx& operator()(std::size_t i, std::size_t j) { return entries_[i * cols_ + j]; }
  const cplx& operator()(std::size_t i, std::size_t j) const { return entries_[i * cols_ + j]; }
  const std::vector<cplx>& entries() const { return entries_; }
  std::vector<cplx>& entries() { return entries_; }

  ComplexMatrix adjoint() const;
  ComplexMatrix transpose() const;
  ComplexMatrix conj() const;
  cplx trace() const;
  // Largest entry modulus.
  double max_abs() const;
  // Column j as an n x 1 matrix.
  ComplexMatrix col(std::size_t j) const;

  ComplexMatrix& operator+=(const ComplexMatrix& o);
  ComplexMatrix& operator-=(const ComplexMatrix& o);
  ComplexMatrix& operator*=(cplx s);

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<cplx> entries_;
};

ComplexMatrix operator+(ComplexMatrix a, const ComplexMatrix& b);
ComplexMatrix operator-(ComplexMatrix a, const ComplexMatrix& b);
ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b);
ComplexMatrix operator*(cplx s, ComplexMatrix a);
ComplexMatrix operator*(ComplexMatrix a, cplx s);

double max_abs_diff(const ComplexMatrix& a, const ComplexMatrix& b);
// Hilbert-Schmidt inner product tr(a^dagger b).
cplx hs_inner(const ComplexMatrix& a, const ComplexMatrix& b);
ComplexMatrix outer(const ComplexMatrix& u, const ComplexMatrix& v);
bool is_hermitian(const ComplexMatrix& h, double tol);

struct BipartiteDims {
  std::size_t d_A = 1;
  std::size_t d_B = 1;
  std::size_t total() const { return d_A * d_B; }
  bool operator==(const BipartiteDims&) const = default;
};

enum class Subsystem { A, B };

struct EigenSystem {
  std::vector<double> values;  // ascending
  ComplexMatrix vectors;       // columns
};

EigenSystem eig_hermitian(const ComplexMatrix& h, double tol = 1e-9);

// Builds V diag(f(lambda)) V^dagger.
template <class F>
ComplexMatrix spectral_map(const EigenSystem& es, F f) {
  const std::size_t n = es.values.size();
  ComplexMatrix out(n, n);
  for (std::size_t k = 0; k < n; ++k) {
    const double w = f(es.values[k]);
    if (w == 0.0) continue;
    for (std::size_t i = 0; i < n; ++i) {
      const cplx vi = w * es.vectors(i, k);
      for (std::size_t j = 0; j < n; ++j) out(i, j) += vi * std::conj(es.vectors(j, k));
    }
  }
  return out;
}

struct HermitianSplit {
  ComplexMatrix plus;
  ComplexMatrix minus;
  double tolerance = 0.0;
};

// Eigenvalues with |lambda| <= rel_zero * ||H||_inf go to neither part.
HermitianSplit positive_negative_parts(const ComplexMatrix& h, double rel_zero = 1e-10,
                                       double herm_tol = 1e-9);

// Singular values, descending.
std::vector<double> singular_values(const ComplexMatrix& o);
double schatten_norm(const ComplexMatrix& o, double p);
inline double trace_norm(const ComplexMatrix& o) { return schatten_norm(o, 1.0); }
inline double hs_norm(const ComplexMatrix& o) { return schatten_norm(o, 2.0); }
inline double operator_norm(const ComplexMatrix& o) { return schatten_norm(o, kInf); }

ComplexMatrix tensor(const ComplexMatrix& a, const ComplexMatrix& b);
ComplexMatrix partial_trace(const ComplexMatrix& o, BipartiteDims dims, Subsystem keep);
ComplexMatrix partial_transpose(const ComplexMatrix& o, BipartiteDims dims,
                                Subsystem side = Subsystem::A);
ComplexMatrix sqrt_psd(const ComplexMatrix& p, double tol = 1e-9);
// exp(i H) for Hermitian H.
ComplexMatrix expi_hermitian(const ComplexMatrix& h);
ComplexMatrix block_diag(const std::vector<ComplexMatrix>& blocks);

}  // namespace negacap
