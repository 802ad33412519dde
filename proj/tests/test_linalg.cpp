#include <cmath>

#include "doctest.h"
#include "negacap/linalg.hpp"
#include "negacap/random.hpp"

using namespace negacap;

namespace {

ComplexMatrix bell_projector() {
  const double s = 1.0 / std::sqrt(2.0);
  const ComplexMatrix k = ComplexMatrix::column({s, 0.0, 0.0, s});
  return outer(k, k);
}

double unitarity_error(const ComplexMatrix& v) {
  return max_abs_diff(v.adjoint() * v, ComplexMatrix::identity(v.cols()));
}

}  // namespace

TEST_CASE("eig_hermitian small cases") {
  const EigenSystem id = eig_hermitian(ComplexMatrix::identity(2));
  CHECK(id.values[0] == doctest::Approx(1.0));
  CHECK(id.values[1] == doctest::Approx(1.0));

  const EigenSystem d = eig_hermitian(ComplexMatrix::diag({2.0, -1.0}));
  CHECK(d.values[0] == doctest::Approx(-1.0));
  CHECK(d.values[1] == doctest::Approx(2.0));
  CHECK(std::abs(d.vectors(1, 0)) == doctest::Approx(1.0));

  const EigenSystem x = eig_hermitian(ComplexMatrix{{0.0, 1.0}, {1.0, 0.0}});
  CHECK(x.values[0] == doctest::Approx(-1.0));
  CHECK(x.values[1] == doctest::Approx(1.0));
  // (1, -1)/sqrt 2 up to phase
  CHECK(std::abs(x.vectors(0, 0) + x.vectors(1, 0)) < 1e-12);
}

TEST_CASE("eig_hermitian random reconstruction") {
  Rng rng(11);
  for (std::size_t n : {1u, 2u, 3u, 5u, 9u, 16u, 36u}) {
    const ComplexMatrix h = random_hermitian(n, rng);
    const EigenSystem es = eig_hermitian(h);
    const double scale = operator_norm(h);
    const ComplexMatrix lhs = h * es.vectors;
    const ComplexMatrix rhs = es.vectors * ComplexMatrix::diag(es.values);
    CHECK(max_abs_diff(lhs, rhs) <= 1e-10 * scale);
    CHECK(unitarity_error(es.vectors) <= 1e-10);
    for (std::size_t k = 1; k < n; ++k) CHECK(es.values[k - 1] <= es.values[k]);
  }
}

TEST_CASE("eig_hermitian rejects non-Hermitian input") {
  CHECK_THROWS_AS(eig_hermitian(ComplexMatrix{{0.0, 1.0}, {0.0, 0.0}}), Error);
  try {
    eig_hermitian(ComplexMatrix{{0.0, 1.0}, {0.0, 0.0}});
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::NotHermitian);
  }
}

TEST_CASE("positive_negative_parts") {
  const HermitianSplit s = positive_negative_parts(ComplexMatrix::diag({3.0, -2.0}));
  CHECK(max_abs_diff(s.plus, ComplexMatrix::diag({3.0, 0.0})) < 1e-14);
  CHECK(max_abs_diff(s.minus, ComplexMatrix::diag({0.0, 2.0})) < 1e-14);

  Rng rng(3);
  const ComplexMatrix g = random_gaussian_matrix(4, 4, rng);
  const ComplexMatrix p = g * g.adjoint();
  const HermitianSplit sp = positive_negative_parts(p);
  CHECK(max_abs_diff(sp.plus, p) < 1e-12);
  CHECK(sp.minus.max_abs() < 1e-12);

  // Oracle: H^+ = (H + |H|)/2 with |H| = sqrt(H^2).
  for (int t = 0; t < 20; ++t) {
    const ComplexMatrix h = random_hermitian(4, rng);
    const ComplexMatrix absh = sqrt_psd(h * h);
    const HermitianSplit hs = positive_negative_parts(h);
    CHECK(max_abs_diff(hs.plus, 0.5 * (h + absh)) < 1e-10);
    CHECK(max_abs_diff(hs.minus, 0.5 * (absh - h)) < 1e-10);
  }
}

TEST_CASE("split round trip, orthogonal ranges, trace-norm identity") {
  Rng rng(5);
  for (int t = 0; t < 50; ++t) {
    const ComplexMatrix h = random_hermitian(2 + t % 5, rng);
    const HermitianSplit s = positive_negative_parts(h);
    const double n = operator_norm(h);
    CHECK(max_abs_diff(s.plus - s.minus, h) <= 1e-9);
    CHECK(operator_norm(s.plus * s.minus) <= 1e-9 * n * n);
    CHECK(trace_norm(h) == doctest::Approx(h.trace().real() + 2.0 * s.minus.trace().real()).epsilon(1e-12));
  }
}

TEST_CASE("minimality of the spectral split") {
  Rng rng(6);
  for (int t = 0; t < 50; ++t) {
    const ComplexMatrix h = random_hermitian(4, rng);
    const HermitianSplit s = positive_negative_parts(h);
    const ComplexMatrix p = random_psd(4, rng, 1 + t % 4);
    const ComplexMatrix alt_minus = s.minus + p;
    CHECK(alt_minus.trace().real() >= s.minus.trace().real());
  }
}

TEST_CASE("schatten norms") {
  const ComplexMatrix d = ComplexMatrix::diag({3.0, -4.0});
  CHECK(schatten_norm(d, 1.0) == doctest::Approx(7.0));
  CHECK(schatten_norm(d, kInf) == doctest::Approx(4.0));
  CHECK(schatten_norm(d, 2.0) == doctest::Approx(5.0));
  CHECK_THROWS_AS(schatten_norm(d, 0.5), Error);

  Rng rng(8);
  for (int t = 0; t < 30; ++t) {
    const ComplexMatrix o = random_gaussian_matrix(3, 3 + t % 3, rng);
    const double n1 = trace_norm(o), n2 = hs_norm(o), ni = operator_norm(o);
    CHECK(ni <= n2 + 1e-12);
    CHECK(n2 <= n1 + 1e-12);
    CHECK(n2 == doctest::Approx(std::sqrt(hs_inner(o, o).real())).epsilon(1e-12));
  }
}

TEST_CASE("tensor product") {
  CHECK(max_abs_diff(tensor(ComplexMatrix::identity(2), ComplexMatrix::identity(3)), ComplexMatrix::identity(6)) == 0.0);
  CHECK(max_abs_diff(tensor(ComplexMatrix::diag({1, 2}), ComplexMatrix::diag({1, 0})),
                     ComplexMatrix::diag({1, 0, 2, 0})) == 0.0);
  Rng rng(9);
  for (int t = 0; t < 10; ++t) {
    const ComplexMatrix a = random_gaussian_matrix(2, 2, rng), b = random_gaussian_matrix(3, 3, rng);
    const ComplexMatrix c = random_gaussian_matrix(2, 2, rng), d = random_gaussian_matrix(3, 3, rng);
    CHECK(operator_norm(tensor(a, b)) == doctest::Approx(operator_norm(a) * operator_norm(b)).epsilon(1e-10));
    CHECK(max_abs_diff(tensor(a, b) * tensor(c, d), tensor(a * c, b * d)) < 1e-12);
  }
}

TEST_CASE("partial trace") {
  Rng rng(10);
  const ComplexMatrix a = random_gaussian_matrix(2, 2, rng), b = random_gaussian_matrix(3, 3, rng);
  CHECK(max_abs_diff(partial_trace(tensor(a, b), {2, 3}, Subsystem::A), b.trace() * a) < 1e-12);
  CHECK(max_abs_diff(partial_trace(tensor(a, b), {2, 3}, Subsystem::B), a.trace() * b) < 1e-12);
  CHECK(max_abs_diff(partial_trace(ComplexMatrix::identity(4), {2, 2}, Subsystem::B), 2.0 * ComplexMatrix::identity(2)) == 0.0);
  // |Phi+><Phi+| = (|00><00| + |00><11| + |11><00| + |11><11|)/2 -> I/2
  const ComplexMatrix half = 0.5 * ComplexMatrix::identity(2);
  CHECK(max_abs_diff(partial_trace(bell_projector(), {2, 2}, Subsystem::A), half) < 1e-15);
  CHECK(max_abs_diff(partial_trace(bell_projector(), {2, 2}, Subsystem::B), half) < 1e-15);
  CHECK_THROWS_AS(partial_trace(ComplexMatrix::identity(5), {2, 2}, Subsystem::A), Error);
  const ComplexMatrix o = random_gaussian_matrix(6, 6, rng);
  CHECK(std::abs(partial_trace(o, {2, 3}, Subsystem::A).trace() - o.trace()) < 1e-12);
}

TEST_CASE("partial transpose") {
  Rng rng(12);
  const ComplexMatrix a = random_gaussian_matrix(2, 2, rng), b = random_gaussian_matrix(3, 3, rng);
  CHECK(max_abs_diff(partial_transpose(tensor(a, b), {2, 3}, Subsystem::A), tensor(a.transpose(), b)) < 1e-15);
  CHECK(max_abs_diff(partial_transpose(tensor(a, b), {2, 3}, Subsystem::B), tensor(a, b.transpose())) < 1e-15);

  const EigenSystem es = eig_hermitian(partial_transpose(bell_projector(), {2, 2}));
  CHECK(es.values[0] == doctest::Approx(-0.5));
  for (int k = 1; k < 4; ++k) CHECK(es.values[k] == doctest::Approx(0.5));

  // Pure Schmidt state: ||rho^Gamma||_1 = (sum lambda)^2.
  const double l1 = std::sqrt(0.7), l2 = std::sqrt(0.2), l3 = std::sqrt(0.1);
  ComplexMatrix psi(9, 1);
  psi(0, 0) = l1;
  psi(4, 0) = l2;
  psi(8, 0) = l3;
  CHECK(trace_norm(partial_transpose(outer(psi, psi), {3, 3})) == doctest::Approx(std::pow(l1 + l2 + l3, 2)).epsilon(1e-12));

  for (int t = 0; t < 20; ++t) {
    const ComplexMatrix o = random_gaussian_matrix(6, 6, rng);
    CHECK(max_abs_diff(partial_transpose(partial_transpose(o, {2, 3}), {2, 3}), o) == 0.0);
    CHECK(hs_norm(partial_transpose(o, {2, 3})) == doctest::Approx(hs_norm(o)).epsilon(1e-12));
    CHECK(std::abs(partial_transpose(o, {3, 2}).trace() - o.trace()) < 1e-12);
  }
}

TEST_CASE("sqrt_psd") {
  CHECK(max_abs_diff(sqrt_psd(ComplexMatrix::diag({4.0, 9.0})), ComplexMatrix::diag({2.0, 3.0})) < 1e-14);
  CHECK(max_abs_diff(sqrt_psd(ComplexMatrix::identity(3)), ComplexMatrix::identity(3)) < 1e-14);
  Rng rng(13);
  for (int t = 0; t < 10; ++t) {
    const ComplexMatrix p = random_psd(5, rng, 1 + t % 5);
    const ComplexMatrix r = sqrt_psd(p);
    CHECK(max_abs_diff(r * r, p) <= 1e-9 * operator_norm(p));
    CHECK(eig_hermitian(r).values.front() >= -1e-9);
  }
  CHECK_THROWS_AS(sqrt_psd(ComplexMatrix::diag({1.0, -1.0})), Error);
}

TEST_CASE("expi_hermitian is unitary") {
  Rng rng(14);
  const ComplexMatrix u = expi_hermitian(random_hermitian(4, rng));
  CHECK(unitarity_error(u) < 1e-12);
}
