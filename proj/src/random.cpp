#include "negacap/random.hpp"

#include <cmath>

namespace negacap {

ComplexMatrix random_gaussian_matrix(std::size_t rows, std::size_t cols, Rng& rng) {
  std::normal_distribution<double> g(0.0, 1.0);
  ComplexMatrix m(rows, cols);
  for (auto& z : m.entries()) z = cplx(g(rng), g(rng));
  return m;
}

ComplexMatrix random_hermitian(std::size_t n, Rng& rng) {
  const ComplexMatrix g = random_gaussian_matrix(n, n, rng);
  return 0.5 * (g + g.adjoint());
}

ComplexMatrix random_unitary(std::size_t n, Rng& rng) {
  ComplexMatrix q = random_gaussian_matrix(n, n, rng);
  for (std::size_t j = 0; j < n; ++j) {
    for (std::size_t k = 0; k < j; ++k) {
      cplx proj = 0.0;
      for (std::size_t i = 0; i < n; ++i) proj += std::conj(q(i, k)) * q(i, j);
      for (std::size_t i = 0; i < n; ++i) q(i, j) -= proj * q(i, k);
    }
    double nrm = 0.0;
    for (std::size_t i = 0; i < n; ++i) nrm += std::norm(q(i, j));
    nrm = std::sqrt(nrm);
    for (std::size_t i = 0; i < n; ++i) q(i, j) /= nrm;
  }
  return q;
}

ComplexMatrix random_psd(std::size_t n, Rng& rng, std::size_t rank) {
  const ComplexMatrix g = random_gaussian_matrix(n, rank ? rank : n, rng);
  return g * g.adjoint();
}

ComplexMatrix random_density(std::size_t n, Rng& rng, std::size_t rank) {
  ComplexMatrix p = random_psd(n, rng, rank);
  return (1.0 / p.trace().real()) * p;
}

ComplexMatrix random_pure_state(std::size_t n, Rng& rng) {
  ComplexMatrix v = random_gaussian_matrix(n, 1, rng);
  double nrm = 0.0;
  for (const auto& z : v.entries()) nrm += std::norm(z);
  return (1.0 / std::sqrt(nrm)) * v;
}

Channel random_cptp(BipartiteDims dims, std::size_t kraus, Rng& rng) {
  if (kraus == 0) fail(ErrorKind::InvalidParams, "need at least one Kraus operator");
  const std::size_t d = dims.total();
  const ComplexMatrix w = random_unitary(d * kraus, rng);
  KrausForm kf;
  for (std::size_t i = 0; i < kraus; ++i) {
    ComplexMatrix v(d, d);
    for (std::size_t r = 0; r < d; ++r)
      for (std::size_t c = 0; c < d; ++c) v(r, c) = w(i * d + r, c);
    kf.push_back({1.0, std::move(v)});
  }
  return choi_from_kraus(kf, dims, dims);
}

}  // namespace negacap
