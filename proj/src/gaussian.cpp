#include "negacap/gaussian.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace negacap {

namespace {

constexpr double kValiditySlack = 1e-10;

double det_real(const ComplexMatrix& m) {
  const std::size_t n = m.rows();
  std::vector<double> a(n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) a[i * n + j] = m(i, j).real();
  double det = 1.0;
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t piv = k;
    for (std::size_t i = k + 1; i < n; ++i)
      if (std::abs(a[i * n + k]) > std::abs(a[piv * n + k])) piv = i;
    if (a[piv * n + k] == 0.0) return 0.0;
    if (piv != k) {
      for (std::size_t j = 0; j < n; ++j) std::swap(a[k * n + j], a[piv * n + j]);
      det = -det;
    }
    det *= a[k * n + k];
    for (std::size_t i = k + 1; i < n; ++i) {
      const double f = a[i * n + k] / a[k * n + k];
      for (std::size_t j = k; j < n; ++j) a[i * n + j] -= f * a[k * n + j];
    }
  }
  return det;
}

double det2(const CovarianceMatrix& c, std::size_t r0, std::size_t c0) {
  return c(r0, c0) * c(r0 + 1, c0 + 1) - c(r0, c0 + 1) * c(r0 + 1, c0);
}

// nu^2 = (D -/+ sqrt(D^2 - 4 det)) / 2, the minus branch without cancellation.
std::pair<double, double> nu_squared(double delta, double det) {
  const double disc = std::sqrt(std::max(0.0, delta * delta - 4.0 * det));
  const double plus = 0.5 * (delta + disc);
  const double minus = plus > 0.0 ? det / plus : 0.0;
  return {minus, plus};
}

void require_symmetric_pd(const CovarianceMatrix& cov) {
  const double scale = std::max(1.0, cov.sigma.max_abs());
  for (const auto& z : cov.sigma.entries())
    if (std::abs(z.imag()) > 0.0) fail(ErrorKind::NotPositiveDefinite, "covariance must be real");
  if (!is_hermitian(cov.sigma, 1e-12 * scale)) fail(ErrorKind::NotPositiveDefinite, "covariance not symmetric");
}

// Variances fixed by (nu_D, gamma, r) up to the local scale that makes alpha = diag(a, a).
CollectiveVariances quadratures(const SymmetricParams& p) {
  const double n = p.N;
  const double s = std::sqrt((p.gamma * p.gamma + p.r * (n - 1.0)) / (p.r * (p.r + n - 1.0)));
  CollectiveVariances q;
  q.uu = p.nu_D * s;
  q.PiPi = p.nu_D / s;
  q.XX = p.r * q.uu;
  q.PP = p.nu_D * p.nu_D * p.gamma * p.gamma / q.XX;
  return q;
}

}  // namespace

CovarianceMatrix make_covariance(const ComplexMatrix& sigma, double hbar) {
  if (!sigma.square() || sigma.rows() % 2 != 0 || sigma.rows() == 0)
    fail(ErrorKind::DimensionMismatch, "covariance must be 2n x 2n");
  if (!(hbar > 0.0)) fail(ErrorKind::InvalidParams, "hbar must be positive");
  CovarianceMatrix c{sigma.rows() / 2, sigma, hbar};
  require_symmetric_pd(c);
  return c;
}

CovarianceMatrix make_covariance(const std::vector<std::vector<double>>& rows, double hbar) {
  const std::size_t n = rows.size();
  ComplexMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    if (rows[i].size() != n) fail(ErrorKind::DimensionMismatch, "covariance must be square");
    for (std::size_t j = 0; j < n; ++j) m(i, j) = rows[i][j];
  }
  return make_covariance(m, hbar);
}

ComplexMatrix symplectic_form(std::size_t n_modes) {
  ComplexMatrix om(2 * n_modes, 2 * n_modes);
  for (std::size_t k = 0; k < n_modes; ++k) {
    om(2 * k, 2 * k + 1) = 1.0;
    om(2 * k + 1, 2 * k) = -1.0;
  }
  return om;
}

std::vector<double> symplectic_eigenvalues(const CovarianceMatrix& cov) {
  require_symmetric_pd(cov);
  const EigenSystem es = eig_hermitian(cov.sigma);
  if (es.values.front() <= 1e-14 * std::max(1.0, es.values.back()))
    fail(ErrorKind::NotPositiveDefinite, "covariance is not positive definite");
  const ComplexMatrix root = spectral_map(es, [](double l) { return std::sqrt(l); });
  const ComplexMatrix k = cplx(0.0, 1.0) * (root * symplectic_form(cov.n_modes) * root);
  const std::vector<double> ev = eig_hermitian(k).values;
  const std::size_t n = cov.n_modes;
  const double top = std::max(std::abs(ev.front()), std::abs(ev.back()));
  std::vector<double> nu(n);
  for (std::size_t i = 0; i < n; ++i) {
    const double neg = ev[n - 1 - i], pos = ev[n + i];
    if (std::abs(pos + neg) > 1e-9 * top)
      fail(ErrorKind::NotPositiveDefinite, "symplectic eigenvalues do not pair");
    nu[i] = 0.5 * (pos - neg);
  }
  return nu;
}

bool is_valid_state(const CovarianceMatrix& cov) {
  try {
    const auto nu = symplectic_eigenvalues(cov);
    return nu.front() >= cov.hbar / 2.0 - kValiditySlack;
  } catch (const Error&) {
    return false;
  }
}

CovarianceMatrix partial_transpose_cov(const CovarianceMatrix& cov, const std::vector<std::size_t>& modes) {
  std::vector<double> lam(2 * cov.n_modes, 1.0);
  for (std::size_t m : modes) {
    if (m >= cov.n_modes) fail(ErrorKind::BadIndex, "mode index " + std::to_string(m) + " out of range");
    lam[2 * m + 1] = -1.0;
  }
  CovarianceMatrix out = cov;
  for (std::size_t i = 0; i < lam.size(); ++i)
    for (std::size_t j = 0; j < lam.size(); ++j) out.sigma(i, j) *= lam[i] * lam[j];
  return out;
}

TwoModeInvariants two_mode_invariants(const CovarianceMatrix& cov) {
  if (cov.n_modes != 2) fail(ErrorKind::NotTwoMode, "two_mode_invariants needs two modes");
  const double da = det2(cov, 0, 0), db = det2(cov, 2, 2), dc = det2(cov, 0, 2);
  const double det = det_real(cov.sigma);
  TwoModeInvariants t;
  t.Delta = da + db + 2.0 * dc;
  t.Delta_tilde = da + db - 2.0 * dc;
  const auto [m, p] = nu_squared(t.Delta_tilde, det);
  t.nu_tilde_minus = std::sqrt(std::max(0.0, m));
  t.nu_tilde_plus = std::sqrt(p);
  return t;
}

double log_negativity_gaussian(const CovarianceMatrix& cov, const std::vector<std::size_t>& partition,
                               double base) {
  if (!is_valid_state(cov)) fail(ErrorKind::InvalidState, "covariance is not a valid state");
  double e = 0.0;
  for (double nu : symplectic_eigenvalues(partial_transpose_cov(cov, partition)))
    e += std::max(std::log(cov.hbar / (2.0 * nu)), 0.0);
  return e / std::log(base);
}

CollectiveVariances collective_variances(const StandardForm& sf) {
  const double n = sf.N;
  return {sf.a + (n - 1.0) * sf.b, sf.a + (n - 1.0) * sf.c, sf.a - sf.b, sf.a - sf.c};
}

void validate(const SymmetricParams& p) {
  const double half = p.hbar / 2.0;
  if (p.N < 2) fail(ErrorKind::InvalidParams, "N must be at least 2");
  if (!(p.hbar > 0.0)) fail(ErrorKind::InvalidParams, "hbar must be positive");
  if (!(p.r > 0.0) || !std::isfinite(p.r)) fail(ErrorKind::InvalidParams, "r must be positive");
  if (!(p.nu_D >= half - kValiditySlack)) fail(ErrorKind::InvalidParams, "nu_D below hbar/2");
  if (!(p.nu_D * p.gamma >= half - kValiditySlack)) fail(ErrorKind::InvalidParams, "nu_D*gamma below hbar/2");
}

SymmetricParams standard_to_params(const StandardForm& sf) {
  if (sf.N < 2) fail(ErrorKind::InvalidParams, "N must be at least 2");
  const CollectiveVariances v = collective_variances(sf);
  if (!(v.XX > 0.0 && v.PP > 0.0 && v.uu > 0.0 && v.PiPi > 0.0))
    fail(ErrorKind::InvalidParams, "standard form is not positive definite");
  SymmetricParams p;
  p.N = sf.N;
  p.hbar = sf.hbar;
  p.r = v.XX / v.uu;
  p.nu_D = std::sqrt(v.uu * v.PiPi);
  p.gamma = std::sqrt(v.XX * v.PP) / p.nu_D;
  validate(p);
  return p;
}

StandardForm params_to_standard(const SymmetricParams& p) {
  validate(p);
  const CollectiveVariances q = quadratures(p);
  const double n = p.N;
  StandardForm sf;
  sf.N = p.N;
  sf.hbar = p.hbar;
  sf.a = (q.XX + (n - 1.0) * q.uu) / n;
  sf.b = (q.XX - q.uu) / n;
  sf.c = (q.PP - q.PiPi) / n;
  return sf;
}

CovarianceMatrix symmetric_covariance(const StandardForm& sf) {
  const std::size_t n = static_cast<std::size_t>(sf.N);
  ComplexMatrix s(2 * n, 2 * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      s(2 * i, 2 * j) = i == j ? sf.a : sf.b;
      s(2 * i + 1, 2 * j + 1) = i == j ? sf.a : sf.c;
    }
  return make_covariance(s, sf.hbar);
}

void validate(const BlockSpec& b) {
  if (b.N < 2 || b.n1 < 1 || b.n2 < 1 || b.n_s() > b.N)
    fail(ErrorKind::InvalidBlocks, "blocks need n1, n2 >= 1 and n1 + n2 <= N");
}

namespace {

void check_pair(const SymmetricParams& p, const BlockSpec& b) {
  validate(b);
  validate(p);
  if (p.N != b.N) fail(ErrorKind::InvalidBlocks, "block N differs from parameter N");
}

}  // namespace

CovarianceMatrix localize_blocks(const SymmetricParams& p, const BlockSpec& blocks) {
  check_pair(p, blocks);
  const CollectiveVariances q = quadratures(p);
  const double n = p.N, n1 = blocks.n1, n2 = blocks.n2;
  auto alpha = [&](double ni, double& x, double& pp) {
    x = (ni * q.XX + (n - ni) * q.uu) / n;
    pp = (ni * q.PP + (n - ni) * q.PiPi) / n;
  };
  double x1, p1, x2, p2;
  alpha(n1, x1, p1);
  alpha(n2, x2, p2);
  const double w = std::sqrt(n1 * n2) / n;
  ComplexMatrix s(4, 4);
  s(0, 0) = x1;
  s(1, 1) = p1;
  s(2, 2) = x2;
  s(3, 3) = p2;
  s(0, 2) = s(2, 0) = w * (q.XX - q.uu);
  s(1, 3) = s(3, 1) = w * (q.PP - q.PiPi);
  return make_covariance(s, p.hbar);
}

double f_block(const SymmetricParams& p, const BlockSpec& blocks) {
  check_pair(p, blocks);
  const double N = p.N, ns = blocks.n_s(), nd = blocks.n_d();
  const double g2 = p.gamma * p.gamma, r = p.r, nd2 = nd * nd;
  const double k = N * ns - nd2;
  const double lin = 2.0 * N * N + nd2 * (1.0 + g2) - N * ns * (3.0 + g2);
  const double poly = k * r * r + (2.0 * N * N - 2.0 * N * ns + nd2 * (1.0 + g2)) * r + k * g2;
  const double h = k * k * r * r * r * r - 2.0 * nd2 * lin * r * r * r +
                   (N * N * (4.0 * nd2 * (1.0 + g2) - 2.0 * ns * ns * g2) + nd2 * nd2 * (g2 * g2 + 4.0 * g2 + 1.0) -
                    4.0 * N * ns * nd2 * (1.0 + 2.0 * g2)) * r * r -
                   2.0 * nd2 * lin * g2 * r + k * k * g2 * g2;
  // poly^2 - h = 4 N^2 r (N + n_s (r - 1)) (N r + n_s (gamma^2 - r)); dividing it out keeps
  // the r -> 0 and n_s = N limits free of cancellation.
  const double numer = 2.0 * p.nu_D * p.nu_D * (N + ns * (r - 1.0)) * (N * r + ns * (g2 - r));
  return numer / (poly + std::sqrt(std::max(0.0, h)));
}

double block_log_negativity(const SymmetricParams& p, const BlockSpec& blocks, double base) {
  const double f = f_block(p, blocks);
  const double ratio = p.hbar * p.hbar / (4.0 * f);
  return ratio > 1.0 ? 0.5 * std::log(ratio) / std::log(base) : 0.0;
}

double block_negativity(const SymmetricParams& p, const BlockSpec& blocks) {
  const double f = f_block(p, blocks);
  return 0.5 * std::max(p.hbar / (2.0 * std::sqrt(f)) - 1.0, 0.0);
}

double block_entanglement(const SymmetricParams& p, const BlockSpec& blocks, Measure m, double base) {
  return m == Measure::LogNegativity ? block_log_negativity(p, blocks, base) : block_negativity(p, blocks);
}

double sup_gap_ratio(const BlockSpec& b) {
  validate(b);
  if (b.n_s() == b.N) fail(ErrorKind::InvalidBlocks, "gap ratio undefined for n_s = N");
  const double ns = b.n_s(), nd = b.n_d();
  return (ns * ns - nd * nd) / (ns * (b.N - ns));
}

double max_gap_ratio(int N) {
  double best = 0.0;
  for (int n1 = 1; n1 < N; ++n1)
    for (int n2 = 1; n1 + n2 < N; ++n2) best = std::max(best, sup_gap_ratio({N, n1, n2}));
  return best;
}

SupResult sup_block_entanglement(const BlockSpec& blocks, Measure measure, double base,
                                 std::optional<double> nu_D, double hbar) {
  validate(blocks);
  if (nu_D && !(*nu_D >= hbar / 2.0 - kValiditySlack)) fail(ErrorKind::InvalidParams, "nu_D below hbar/2");
  if (blocks.n_s() == blocks.N) return {true, 0.0};
  const double k = sup_gap_ratio(blocks);
  const double q = nu_D ? hbar / (2.0 * *nu_D) : 1.0;
  SupResult out;
  if (measure == Measure::LogNegativity)
    out.value = std::max(0.5 * std::log(q * q * (1.0 + k)) / std::log(base), 0.0);
  else
    out.value = std::max(0.5 * (q * std::sqrt(1.0 + k) - 1.0), 0.0);
  return out;
}

std::vector<double> entanglement_vs_nd(const SymmetricParams& p, int n_s, double base, Measure measure) {
  validate(p);
  if (n_s < 2 || n_s > p.N) fail(ErrorKind::InvalidParams, "need 2 <= n_s <= N");
  std::vector<double> out;
  for (int nd = n_s % 2; nd <= n_s - 2; nd += 2)
    out.push_back(block_entanglement(p, {p.N, (n_s + nd) / 2, (n_s - nd) / 2}, measure, base));
  return out;
}

Purity purity(const SymmetricParams& p) {
  validate(p);
  const StandardForm sf = params_to_standard(p);
  const double half = p.hbar / 2.0;
  Purity out;
  out.global = std::pow(half, p.N) / (p.nu_N() * std::pow(p.nu_D, p.N - 1));
  out.mu1 = p.hbar / (2.0 * sf.a);
  out.mu2 = half * half / std::sqrt((sf.a * sf.a - sf.b * sf.b) * (sf.a * sf.a - sf.c * sf.c));
  return out;
}

double pure_state_oracle(double a, double b, int N, double base) {
  if (N < 2 || !(a > 0.0) || !(a + b > 0.0) || !(a - (N - 1) * b > 0.0))
    fail(ErrorKind::InvalidWavefunction, "need a > 0, a + b > 0, a - (N - 1) b > 0");
  const double d = b >= 0.0 ? (a + b) / (a - b) : (a + b - b * N) / (a + 3.0 * b - b * N);
  return d > 1.0 ? 0.5 * std::log(d) / std::log(base) : 0.0;
}

}  // namespace negacap
