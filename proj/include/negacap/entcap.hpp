#pragma once

#include <vector>

#include "negacap/channel.hpp"

namespace negacap {

double log_base(double x, double base);

double negativity(const ComplexMatrix& rho, BipartiteDims dims);
double log_negativity(const ComplexMatrix& rho, BipartiteDims dims, double base = 2.0);

double gamma_norm(const ComplexMatrix& o, BipartiteDims dims, double p = 1.0);
double gamma_norm(const Channel& ch, double p = 1.0);

// S^Gamma_-^dagger(I) from the spectral split of the partially transposed map.
ComplexMatrix negative_adjoint(const Channel& ch, double tol = 1e-9);

struct ECBounds {
  double lower_N = 0.0;
  double upper_N_coefficient = 0.0;
  double upper_N_max = 0.0;
  double lower_L = 0.0;
  double upper_L = 0.0;
  double log_base = 2.0;
};

struct BoundOptions {
  double base = 2.0;
  double p = kInf;  // norm on S^Gamma_-^dagger(I)
  double q = 1.0;   // norm on rho^Gamma, Hoelder conjugate of p
  double tol = 1e-9;
};

ECBounds ec_bounds_deterministic(const Channel& ch, const BoundOptions& opt = {});

struct SubOperationBound {
  double probability = 0.0;   // tr T(S_i) / (d_A d_B)
  double minus_norm = 0.0;    // ||S_i^Gamma_-^dagger(I)||
  double plus_norm = 0.0;     // ||S_i^Gamma_+^dagger(I)||
  double lower_N = 0.0;       // tr M_i / tr S_i^dagger(I)
  double lower_L = 0.0;
  // p_i E_N_i <= E_N * (minus_norm + plus_norm) + minus_norm
  double expected_negativity_bound(double e_n) const { return e_n * (minus_norm + plus_norm) + minus_norm; }
};

struct ProbabilisticBounds {
  ECBounds bounds;
  std::vector<SubOperationBound> subs;
};

ProbabilisticBounds ec_bounds_probabilistic(const std::vector<Channel>& subs,
                                            const BoundOptions& opt = {});

// Upper bounds from a caller-supplied split plus - minus of S^Gamma.
ECBounds ec_upper_from_split(const Channel& ch, const MapSplit& split_of_gamma,
                             const BoundOptions& opt = {});
// sum_i w_i (S_i^Gamma)_+/- : the convex split of a mixture.
MapSplit convex_split(const std::vector<Channel>& channels, const std::vector<double>& weights,
                      double tol = 1e-9);

struct DistanceBounds {
  double lhs = 0.0;  // ||S1(rho)^G - S2(rho)^G||_1
  double mid = 0.0;  // 2 ||(S2^G - S1^G)_-^dagger(I)|| ||rho^G||_1
  double rhs = 0.0;  // ||T(S2^G - S1^G)||_1 ||rho^G||_1
  double plus_minus_gap = 0.0;  // ||D_+^dagger(I) - D_-^dagger(I)||_inf
};

DistanceBounds distance_bounds(const Channel& s1, const Channel& s2, const ComplexMatrix& rho,
                               double tol = 1e-9);

struct StateDistanceBound {
  double lhs = 0.0;  // ||S(rho1)^G - S(rho2)^G||_1
  double rhs = 0.0;  // (1 + 2||S^G_-^dagger(I)||) ||rho1^G - rho2^G||_1
};

StateDistanceBound state_distance_bound(const Channel& s, const ComplexMatrix& rho1,
                                        const ComplexMatrix& rho2, double tol = 1e-9);

struct OperatorSchmidt {
  std::vector<double> coefficients;  // descending
  std::vector<ComplexMatrix> left_ops;
  std::vector<ComplexMatrix> right_ops;
  std::size_t rank() const { return coefficients.size(); }
};

OperatorSchmidt operator_schmidt(const ComplexMatrix& v, BipartiteDims dims, double tol = 1e-9);

struct CampbellComparison {
  double lhs = 0.0;     // 1 + 2||sum_i S_i^G_-^dagger(I)|| from the spectral split
  double lhs_vv = 0.0;  // same quantity from the antisymmetric Schmidt products
  double mid = 0.0;
  double rhs = 0.0;
};

// Each sub-operation is O -> V_i O V_i^dagger.
CampbellComparison campbell_check(const std::vector<ComplexMatrix>& kraus, BipartiteDims dims,
                                  double tol = 1e-9);

bool is_ppt_unitary(const ComplexMatrix& u, BipartiteDims dims, double tol = 1e-9);
bool is_separable_pure(const ComplexMatrix& psi, BipartiteDims dims, double tol = 1e-9);

struct SaturationReport {
  bool prop_identity = false;
  bool largest_eigenspace = false;
  bool orthogonality = false;
  bool achieves_upper = false;
  double max_overlap = 0.0;  // largest normalized inner product across the two families
};

SaturationReport saturation_check(const Channel& ch, const ComplexMatrix& rho, double tol = 1e-9,
                                  double overlap_tol = 1e-8);

struct NormEquivalence {
  double ratio = 0.0;
  double low = 0.0;
  double high = 0.0;
  bool within = false;
};

NormEquivalence norm_equivalence_check(const ComplexMatrix& h, BipartiteDims dims);

}  // namespace negacap
