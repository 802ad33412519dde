#pragma once

#include <string>

#include "negacap/channel.hpp"

namespace negacap {

// Block rotations on 2(x)2: diag(R(alpha), R(beta)), R(t) = [[cos, sin], [-sin, cos]].
ComplexMatrix rot22_unitary(double alpha, double beta);
// As rot22 but the second block is the reflection [[cos, sin], [sin, -cos]].
ComplexMatrix gencnot_unitary(double alpha, double beta);
ComplexMatrix cnot_unitary();
// diag(I3, R3(beta)) * diag(I4, R(alpha)) on 2(x)3.
ComplexMatrix rot23_unitary(double alpha, double beta);
// diag(I6, R3(beta)) * diag(I7, R(alpha)) on 3(x)3.
ComplexMatrix rot33_unitary(double alpha, double beta);

struct FamilyMember {
  BipartiteDims dims;
  ComplexMatrix unitary;
};

// name in {rot22, gencnot, rot23, rot33}; throws InvalidParams otherwise.
FamilyMember family_unitary(const std::string& name, double alpha, double beta);

// Computational-basis ket |i> of dimension d.
ComplexMatrix basis_ket(std::size_t d, std::size_t i);
ComplexMatrix ket_product(const ComplexMatrix& a, const ComplexMatrix& b);
ComplexMatrix projector(const ComplexMatrix& ket);

}  // namespace negacap
