#pragma once

#include <optional>
#include <vector>

#include "negacap/linalg.hpp"

namespace negacap {

// Real symmetric 2n x 2n covariance in (x1, p1, ..., xn, pn) ordering.
struct CovarianceMatrix {
  std::size_t n_modes = 0;
  ComplexMatrix sigma;
  double hbar = 1.0;

  double operator()(std::size_t i, std::size_t j) const { return sigma(i, j).real(); }
};

CovarianceMatrix make_covariance(const std::vector<std::vector<double>>& rows, double hbar = 1.0);
CovarianceMatrix make_covariance(const ComplexMatrix& sigma, double hbar = 1.0);

// Block-diagonal [[0, 1], [-1, 0]] per mode.
ComplexMatrix symplectic_form(std::size_t n_modes);

std::vector<double> symplectic_eigenvalues(const CovarianceMatrix& cov);
bool is_valid_state(const CovarianceMatrix& cov);
// Mode indices are zero-based.
CovarianceMatrix partial_transpose_cov(const CovarianceMatrix& cov, const std::vector<std::size_t>& modes);

struct TwoModeInvariants {
  double Delta = 0.0;
  double Delta_tilde = 0.0;
  double nu_tilde_minus = 0.0;
  double nu_tilde_plus = 0.0;
};

// Partial transpose on the second mode.
TwoModeInvariants two_mode_invariants(const CovarianceMatrix& cov);

double log_negativity_gaussian(const CovarianceMatrix& cov, const std::vector<std::size_t>& partition,
                               double base = 2.0);

struct StandardForm {
  double a = 0.5;
  double b = 0.0;
  double c = 0.0;
  int N = 2;
  double hbar = 1.0;
};

struct SymmetricParams {
  int N = 2;
  double nu_D = 0.5;
  double gamma = 1.0;
  double r = 1.0;
  double hbar = 1.0;

  double nu_N() const { return nu_D * gamma; }
};

// Variances of the collective and relative quadratures.
struct CollectiveVariances {
  double XX = 0.0;  // sigma(X_N, X_N)
  double PP = 0.0;  // sigma(P_N, P_N)
  double uu = 0.0;  // sigma(u, u)
  double PiPi = 0.0;  // sigma(Pi, Pi)
};

CollectiveVariances collective_variances(const StandardForm& sf);
void validate(const SymmetricParams& p);
SymmetricParams standard_to_params(const StandardForm& sf);
StandardForm params_to_standard(const SymmetricParams& p);
// Full 2N x 2N covariance of the standard form.
CovarianceMatrix symmetric_covariance(const StandardForm& sf);

struct BlockSpec {
  int N = 2;
  int n1 = 1;
  int n2 = 1;

  int n_s() const { return n1 + n2; }
  int n_d() const { return n1 > n2 ? n1 - n2 : n2 - n1; }
};

void validate(const BlockSpec& blocks);

CovarianceMatrix localize_blocks(const SymmetricParams& p, const BlockSpec& blocks);
double f_block(const SymmetricParams& p, const BlockSpec& blocks);

enum class Measure { LogNegativity, Negativity };

double block_log_negativity(const SymmetricParams& p, const BlockSpec& blocks, double base = 2.0);
double block_negativity(const SymmetricParams& p, const BlockSpec& blocks);
double block_entanglement(const SymmetricParams& p, const BlockSpec& blocks, Measure m, double base = 2.0);

struct SupResult {
  bool unbounded = false;
  double value = 0.0;  // meaningful only when bounded
};

SupResult sup_block_entanglement(const BlockSpec& blocks, Measure measure = Measure::LogNegativity,
                                 double base = 2.0, std::optional<double> nu_D = std::nullopt,
                                 double hbar = 1.0);
double sup_gap_ratio(const BlockSpec& blocks);
// Largest K over feasible (n_s, n_d) for a fixed N.
double max_gap_ratio(int N);

// Entanglement for n_d = n_s mod 2, n_s mod 2 + 2, ..., n_s - 2 (ascending n_d).
std::vector<double> entanglement_vs_nd(const SymmetricParams& p, int n_s, double base = 2.0,
                                       Measure measure = Measure::LogNegativity);

struct Purity {
  double global = 0.0;
  double mu1 = 0.0;
  double mu2 = 0.0;
};

Purity purity(const SymmetricParams& p);

// Two-mode log-negativity of the real symmetric pure state with parameters (a, b).
double pure_state_oracle(double a, double b, int N, double base = 2.0);

}  // namespace negacap
