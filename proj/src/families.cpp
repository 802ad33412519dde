#include "negacap/families.hpp"

#include <cmath>

namespace negacap {

namespace {

ComplexMatrix rot2(double t) {
  const double c = std::cos(t), s = std::sin(t);
  return {{c, s}, {-s, c}};
}

ComplexMatrix rot3(double t) {
  const double c = std::cos(t), s = std::sin(t);
  return {{c, s, 0.0}, {-s, c, 0.0}, {0.0, 0.0, 1.0}};
}

}  // namespace

ComplexMatrix rot22_unitary(double alpha, double beta) { return block_diag({rot2(alpha), rot2(beta)}); }

ComplexMatrix gencnot_unitary(double alpha, double beta) {
  const double c = std::cos(beta), s = std::sin(beta);
  return block_diag({rot2(alpha), ComplexMatrix{{c, s}, {s, -c}}});
}

ComplexMatrix cnot_unitary() {
  return {{1.0, 0.0, 0.0, 0.0}, {0.0, 1.0, 0.0, 0.0}, {0.0, 0.0, 0.0, 1.0}, {0.0, 0.0, 1.0, 0.0}};
}

ComplexMatrix rot23_unitary(double alpha, double beta) {
  return block_diag({ComplexMatrix::identity(3), rot3(beta)}) *
         block_diag({ComplexMatrix::identity(4), rot2(alpha)});
}

ComplexMatrix rot33_unitary(double alpha, double beta) {
  return block_diag({ComplexMatrix::identity(6), rot3(beta)}) *
         block_diag({ComplexMatrix::identity(7), rot2(alpha)});
}

FamilyMember family_unitary(const std::string& name, double alpha, double beta) {
  if (name == "rot22") return {{2, 2}, rot22_unitary(alpha, beta)};
  if (name == "gencnot") return {{2, 2}, gencnot_unitary(alpha, beta)};
  if (name == "rot23") return {{2, 3}, rot23_unitary(alpha, beta)};
  if (name == "rot33") return {{3, 3}, rot33_unitary(alpha, beta)};
  fail(ErrorKind::InvalidParams, "unknown family '" + name + "'");
}

ComplexMatrix basis_ket(std::size_t d, std::size_t i) {
  if (i >= d) fail(ErrorKind::BadIndex, "basis index out of range");
  ComplexMatrix k(d, 1);
  k(i, 0) = 1.0;
  return k;
}

ComplexMatrix ket_product(const ComplexMatrix& a, const ComplexMatrix& b) { return tensor(a, b); }

ComplexMatrix projector(const ComplexMatrix& ket) { return outer(ket, ket); }

}  // namespace negacap
