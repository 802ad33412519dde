#pragma once

#include <functional>
#include <vector>

#include "negacap/linalg.hpp"

namespace negacap {

// Linear map B(H1) -> B(H2) held as its Choi matrix sum_ij E_ij (x) L(E_ij).
// Row index of the Choi matrix is i_in * d_out + k_out.
struct Channel {
  ComplexMatrix choi;
  BipartiteDims in_dims;
  BipartiteDims out_dims;

  std::size_t d_in() const { return in_dims.total(); }
  std::size_t d_out() const { return out_dims.total(); }
};

struct KrausTerm {
  double c = 1.0;
  ComplexMatrix V;  // d_out x d_in
};
using KrausForm = std::vector<KrausTerm>;

struct MapSplit {
  Channel plus;
  Channel minus;
};

Channel make_channel(ComplexMatrix choi, BipartiteDims in_dims, BipartiteDims out_dims);
Channel choi_from_kraus(const KrausForm& kraus, BipartiteDims in_dims, BipartiteDims out_dims);
Channel unitary_channel(const ComplexMatrix& u, BipartiteDims dims);
// Choi matrix built entrywise from the action on each E_ij.
Channel channel_from_map(const std::function<ComplexMatrix(const ComplexMatrix&)>& map,
                         BipartiteDims in_dims, BipartiteDims out_dims);
Channel identity_channel(BipartiteDims dims);
Channel transpose_channel(std::size_t d);

ComplexMatrix apply(const Channel& ch, const ComplexMatrix& o);
// L^dagger(I) = tr_2 of the entrywise conjugated Choi matrix.
ComplexMatrix adjoint_identity(const Channel& ch);

bool is_cp(const Channel& ch, double tol = 1e-9);
bool is_hp(const Channel& ch, double tol = 1e-9);
bool is_tp(const Channel& ch, double tol = 1e-9);

MapSplit hp_split(const Channel& ch, double tol = 1e-9);
KrausForm kraus_from_choi(const Channel& ch, double tol = 1e-9);
Channel map_partial_transpose(const Channel& ch);

Channel scaled(const Channel& ch, double w);
Channel difference(const Channel& a, const Channel& b);
Channel mix(const std::vector<Channel>& channels, const std::vector<double>& weights);
// ch1 first, then ch2.
Channel compose(const Channel& ch2, const Channel& ch1);
// Ancilla extension I_a (x) L, ancilla as the leading factor.
Channel with_ancilla(const Channel& ch, std::size_t d_a);
// (L1|L2) = sum_ij (L1(E_ij)|L2(E_ij)).
cplx map_inner(const Channel& a, const Channel& b);

}  // namespace negacap
