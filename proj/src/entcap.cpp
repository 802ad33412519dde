#include "negacap/entcap.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace negacap {

namespace {

void require_density(const ComplexMatrix& rho, std::size_t d) {
  if (!rho.square() || rho.rows() != d) fail(ErrorKind::DimensionMismatch, "state size");
  if (!is_hermitian(rho, 1e-9)) fail(ErrorKind::NotDensityOperator, "state is not Hermitian");
  if (std::abs(rho.trace() - 1.0) > 1e-9) fail(ErrorKind::NotDensityOperator, "trace is not 1");
  if (eig_hermitian(rho).values.front() < -1e-9)
    fail(ErrorKind::NotDensityOperator, "state is not positive semidefinite");
}

void require_cptp(const Channel& ch, double tol) {
  if (!is_cp(ch, tol) || !is_tp(ch, tol)) fail(ErrorKind::NotCPTP, "channel must be CP and TP");
}

void check_holder(const BoundOptions& opt) {
  if (!(opt.p >= 1.0) || !(opt.q >= 1.0)) fail(ErrorKind::InvalidP, "p and q must be >= 1");
  const double s = (std::isinf(opt.p) ? 0.0 : 1.0 / opt.p) + (std::isinf(opt.q) ? 0.0 : 1.0 / opt.q);
  if (std::abs(s - 1.0) > 1e-12) fail(ErrorKind::InvalidP, "p and q must satisfy 1/p + 1/q = 1");
}

std::size_t min_dim(BipartiteDims d) { return std::min(d.d_A, d.d_B); }

ComplexMatrix sqrt_weighted(const ComplexMatrix& v, double w) { return std::sqrt(w) * v; }

double vec_norm(const ComplexMatrix& v) {
  double s = 0.0;
  for (const auto& z : v.entries()) s += std::norm(z);
  return std::sqrt(s);
}

ECBounds assemble(double lower_n_trace, double coef, std::size_t d, std::size_t dmin, double base,
                  double lower_l) {
  ECBounds b;
  b.log_base = base;
  b.lower_N = lower_n_trace / static_cast<double>(d);
  b.upper_N_coefficient = coef;
  b.upper_N_max = coef * static_cast<double>(dmin);
  b.lower_L = lower_l;
  b.upper_L = log_base(1.0 + 2.0 * coef, base);
  return b;
}

}  // namespace

double log_base(double x, double base) { return std::log(x) / std::log(base); }

double negativity(const ComplexMatrix& rho, BipartiteDims dims) {
  require_density(rho, dims.total());
  double s = 0.0;
  for (double l : eig_hermitian(partial_transpose(rho, dims)).values)
    if (l < 0) s -= l;
  return s;
}

double log_negativity(const ComplexMatrix& rho, BipartiteDims dims, double base) {
  require_density(rho, dims.total());
  return std::max(0.0, log_base(trace_norm(partial_transpose(rho, dims)), base));
}

double gamma_norm(const ComplexMatrix& o, BipartiteDims dims, double p) {
  return schatten_norm(partial_transpose(o, dims), p);
}

double gamma_norm(const Channel& ch, double p) {
  return schatten_norm(map_partial_transpose(ch).choi, p);
}

ComplexMatrix negative_adjoint(const Channel& ch, double tol) {
  return adjoint_identity(hp_split(map_partial_transpose(ch), tol).minus);
}

ECBounds ec_bounds_deterministic(const Channel& ch, const BoundOptions& opt) {
  check_holder(opt);
  require_cptp(ch, opt.tol);
  const ComplexMatrix m = negative_adjoint(ch, opt.tol);
  const std::size_t d = ch.d_in();
  const double m1 = trace_norm(m);
  return assemble(m1, schatten_norm(m, opt.p), d, min_dim(ch.in_dims), opt.base,
                  log_base(1.0 + 2.0 * m1 / static_cast<double>(d), opt.base));
}

ProbabilisticBounds ec_bounds_probabilistic(const std::vector<Channel>& subs, const BoundOptions& opt) {
  check_holder(opt);
  if (subs.empty()) fail(ErrorKind::NotTPSum, "no sub-operations");
  Channel total = subs.front();
  for (std::size_t i = 1; i < subs.size(); ++i) {
    if (!(subs[i].in_dims == total.in_dims) || !(subs[i].out_dims == total.out_dims))
      fail(ErrorKind::DimensionMismatch, "sub-operation dims differ");
    total.choi += subs[i].choi;
  }
  for (const auto& s : subs)
    if (!is_cp(s, opt.tol)) fail(ErrorKind::NotCPTP, "sub-operation is not CP");
  if (!is_tp(total, opt.tol)) fail(ErrorKind::NotTPSum, "sub-operations do not sum to a TP map");

  const std::size_t d = total.d_in();
  const double dd = static_cast<double>(d);
  ProbabilisticBounds out;
  ComplexMatrix m_sum(d, d);
  double lower_n = 0.0, lower_l = 0.0;
  for (const auto& s : subs) {
    const Channel sg = map_partial_transpose(s);
    const MapSplit split = hp_split(sg, opt.tol);
    const ComplexMatrix m = adjoint_identity(split.minus);
    const ComplexMatrix pl = adjoint_identity(split.plus);
    m_sum += m;
    const double tr_s = s.choi.trace().real();
    const double tr_m = m.trace().real();
    SubOperationBound sb;
    sb.probability = tr_s / dd;
    sb.minus_norm = schatten_norm(m, opt.p);
    sb.plus_norm = schatten_norm(pl, opt.p);
    if (tr_s > 0.0) {
      sb.lower_N = tr_m / tr_s;
      sb.lower_L = log_base(1.0 + 2.0 * sb.lower_N, opt.base);
      lower_l += sb.probability * log_base(trace_norm(sg.choi) / tr_s, opt.base);
    }
    lower_n += trace_norm(m);
    out.subs.push_back(sb);
  }
  out.bounds = assemble(lower_n, schatten_norm(m_sum, opt.p), d, min_dim(total.in_dims), opt.base,
                        std::max(0.0, lower_l));
  return out;
}

ECBounds ec_upper_from_split(const Channel& ch, const MapSplit& split, const BoundOptions& opt) {
  check_holder(opt);
  require_cptp(ch, opt.tol);
  const Channel sg = map_partial_transpose(ch);
  const double scale = std::max(1.0, sg.choi.max_abs());
  if (max_abs_diff(split.plus.choi - split.minus.choi, sg.choi) > 1e-8 * scale)
    fail(ErrorKind::DimensionMismatch, "split does not reconstruct the partially transposed map");
  if (!is_cp(split.plus, 1e-8) || !is_cp(split.minus, 1e-8))
    fail(ErrorKind::NotPSD, "split parts must be CP");
  ECBounds b = ec_bounds_deterministic(ch, opt);
  const double coef = schatten_norm(adjoint_identity(split.minus), opt.p);
  b.upper_N_coefficient = coef;
  b.upper_N_max = coef * static_cast<double>(min_dim(ch.in_dims));
  b.upper_L = log_base(1.0 + 2.0 * coef, opt.base);
  return b;
}

MapSplit convex_split(const std::vector<Channel>& channels, const std::vector<double>& weights,
                      double tol) {
  std::vector<Channel> plus, minus;
  for (const auto& ch : channels) {
    MapSplit s = hp_split(map_partial_transpose(ch), tol);
    plus.push_back(std::move(s.plus));
    minus.push_back(std::move(s.minus));
  }
  return MapSplit{mix(plus, weights), mix(minus, weights)};
}

DistanceBounds distance_bounds(const Channel& s1, const Channel& s2, const ComplexMatrix& rho, double tol) {
  if (!(s1.in_dims == s2.in_dims) || !(s1.out_dims == s2.out_dims))
    fail(ErrorKind::DimensionMismatch, "channels differ in dims");
  require_cptp(s1, tol);
  require_cptp(s2, tol);
  require_density(rho, s1.d_in());
  const Channel d = difference(map_partial_transpose(s2), map_partial_transpose(s1));
  const MapSplit split = hp_split(d, tol);
  const ComplexMatrix mp = adjoint_identity(split.plus);
  const ComplexMatrix mm = adjoint_identity(split.minus);
  const double rho_g = trace_norm(partial_transpose(rho, s1.in_dims));
  DistanceBounds out;
  out.lhs = trace_norm(partial_transpose(apply(s1, rho), s1.out_dims) -
                       partial_transpose(apply(s2, rho), s1.out_dims));
  out.mid = 2.0 * operator_norm(mm) * rho_g;
  out.rhs = trace_norm(d.choi) * rho_g;
  out.plus_minus_gap = max_abs_diff(mp, mm);
  return out;
}

StateDistanceBound state_distance_bound(const Channel& s, const ComplexMatrix& rho1,
                                        const ComplexMatrix& rho2, double tol) {
  require_cptp(s, tol);
  require_density(rho1, s.d_in());
  require_density(rho2, s.d_in());
  StateDistanceBound out;
  out.lhs = trace_norm(partial_transpose(apply(s, rho1), s.out_dims) -
                       partial_transpose(apply(s, rho2), s.out_dims));
  out.rhs = (1.0 + 2.0 * operator_norm(negative_adjoint(s, tol))) *
            trace_norm(partial_transpose(rho1, s.in_dims) - partial_transpose(rho2, s.in_dims));
  return out;
}

OperatorSchmidt operator_schmidt(const ComplexMatrix& v, BipartiteDims dims, double tol) {
  const std::size_t dA = dims.d_A, dB = dims.d_B;
  if (!v.square() || v.rows() != dims.total()) fail(ErrorKind::DimensionMismatch, "operator_schmidt");
  // R[(a,a'),(b,b')] = V[(a,b),(a',b')]
  ComplexMatrix r(dA * dA, dB * dB);
  for (std::size_t a = 0; a < dA; ++a)
    for (std::size_t ap = 0; ap < dA; ++ap)
      for (std::size_t b = 0; b < dB; ++b)
        for (std::size_t bp = 0; bp < dB; ++bp) r(a * dA + ap, b * dB + bp) = v(a * dB + b, ap * dB + bp);

  const double vnorm = std::sqrt(std::max(0.0, hs_inner(v, v).real()));
  struct Term {
    double lambda;
    ComplexMatrix a, b;
  };
  std::vector<Term> terms;
  const bool left = dA <= dB;
  const ComplexMatrix g = left ? r * r.adjoint() : r.adjoint() * r;
  const EigenSystem es = eig_hermitian(g);
  const ComplexMatrix rt = r.transpose();
  for (std::size_t k = 0; k < es.values.size(); ++k) {
    const ComplexMatrix e = es.vectors.col(k);
    // Norm of the image gives lambda without the square-root loss.
    ComplexMatrix img = left ? rt * e.conj() : r * e;
    const double lambda = vec_norm(img);
    if (lambda <= tol * std::max(vnorm, 1e-300)) continue;
    img *= 1.0 / lambda;
    const ComplexMatrix avec = left ? e : img;
    const ComplexMatrix bvec = left ? img : e.conj();
    ComplexMatrix a(dA, dA), b(dB, dB);
    for (std::size_t i = 0; i < dA * dA; ++i) a(i / dA, i % dA) = avec(i, 0);
    for (std::size_t i = 0; i < dB * dB; ++i) b(i / dB, i % dB) = bvec(i, 0);
    terms.push_back({lambda, std::move(a), std::move(b)});
  }
  std::stable_sort(terms.begin(), terms.end(), [](const Term& x, const Term& y) { return x.lambda > y.lambda; });
  OperatorSchmidt out;
  for (auto& t : terms) {
    out.coefficients.push_back(t.lambda);
    out.left_ops.push_back(std::move(t.a));
    out.right_ops.push_back(std::move(t.b));
  }
  return out;
}

CampbellComparison campbell_check(const std::vector<ComplexMatrix>& kraus, BipartiteDims dims, double tol) {
  const std::size_t d = dims.total();
  ComplexMatrix tp(d, d);
  for (const auto& v : kraus) {
    if (!v.square() || v.rows() != d) fail(ErrorKind::DimensionMismatch, "campbell_check: Kraus size");
    tp += v.adjoint() * v;
  }
  if (max_abs_diff(tp, ComplexMatrix::identity(d)) > tol)
    fail(ErrorKind::NotTPSum, "Kraus operators do not sum to a TP map");

  const std::size_t dA = dims.d_A, dB = dims.d_B;
  ComplexMatrix m_split(d, d), m_vv(d, d), mid(d, d);
  double rhs = 0.0;
  for (const auto& v : kraus) {
    m_split += negative_adjoint(unitary_channel(v, dims), tol);
    const OperatorSchmidt s = operator_schmidt(v, dims, tol);
    ComplexMatrix xa(dA, dA), xa_plain(dA, dA), yb(dB, dB);
    for (std::size_t j = 0; j < s.rank(); ++j) {
      const ComplexMatrix ac = s.left_ops[j].conj();
      xa += s.coefficients[j] * (ac.adjoint() * ac);
      xa_plain += s.coefficients[j] * (s.left_ops[j].adjoint() * s.left_ops[j]);
      yb += s.coefficients[j] * (s.right_ops[j].adjoint() * s.right_ops[j]);
      for (std::size_t k = j + 1; k < s.rank(); ++k) {
        const ComplexMatrix w = (1.0 / std::sqrt(2.0)) *
                                (tensor(ac, s.right_ops[k]) - tensor(s.left_ops[k].conj(), s.right_ops[j]));
        m_vv += (s.coefficients[j] * s.coefficients[k]) * (w.adjoint() * w);
      }
    }
    mid += tensor(xa, yb);
    rhs += operator_norm(xa_plain) * operator_norm(yb);
  }
  CampbellComparison out;
  out.lhs = 1.0 + 2.0 * operator_norm(m_split);
  out.lhs_vv = 1.0 + 2.0 * operator_norm(m_vv);
  out.mid = operator_norm(mid);
  out.rhs = rhs;
  return out;
}

bool is_ppt_unitary(const ComplexMatrix& u, BipartiteDims dims, double tol) {
  if (!u.square() || u.rows() != dims.total()) fail(ErrorKind::DimensionMismatch, "is_ppt_unitary");
  if (max_abs_diff(u.adjoint() * u, ComplexMatrix::identity(u.rows())) > tol)
    fail(ErrorKind::NotUnitary, "operator is not unitary");
  return operator_schmidt(u, dims, tol).rank() == 1;
}

bool is_separable_pure(const ComplexMatrix& psi, BipartiteDims dims, double tol) {
  if (psi.cols() != 1 || psi.rows() != dims.total()) fail(ErrorKind::DimensionMismatch, "is_separable_pure");
  if (std::abs(vec_norm(psi) - 1.0) > tol) fail(ErrorKind::NotNormalized, "state vector is not normalized");
  ComplexMatrix m(dims.d_A, dims.d_B);
  for (std::size_t a = 0; a < dims.d_A; ++a)
    for (std::size_t b = 0; b < dims.d_B; ++b) m(a, b) = psi(a * dims.d_B + b, 0);
  const std::vector<double> ev = eig_hermitian(m * m.adjoint()).values;
  // Second-largest Schmidt weight.
  return ev.size() < 2 || ev[ev.size() - 2] <= tol;
}

SaturationReport saturation_check(const Channel& ch, const ComplexMatrix& rho, double tol, double overlap_tol) {
  require_cptp(ch, tol);
  require_density(rho, ch.d_in());
  const MapSplit split = hp_split(map_partial_transpose(ch), tol);
  const ComplexMatrix m = adjoint_identity(split.minus);
  const std::size_t d = ch.d_in();
  const double mscale = std::max(1.0, m.max_abs());

  SaturationReport rep;
  const double mean = m.trace().real() / static_cast<double>(d);
  rep.prop_identity = max_abs_diff(m, mean * ComplexMatrix::identity(d)) <= tol * mscale;

  const ComplexMatrix rg = partial_transpose(rho, ch.in_dims);
  const EigenSystem rs = eig_hermitian(rg);
  double rtop = 0.0;
  for (double l : rs.values) rtop = std::max(rtop, std::abs(l));
  std::vector<ComplexMatrix> psi_p, psi_m;
  for (std::size_t k = 0; k < rs.values.size(); ++k) {
    const double l = rs.values[k];
    if (l > 1e-10 * rtop) psi_p.push_back(sqrt_weighted(rs.vectors.col(k), l));
    if (l < -1e-10 * rtop) psi_m.push_back(sqrt_weighted(rs.vectors.col(k), -l));
  }

  if (rep.prop_identity) {
    rep.largest_eigenspace = true;
  } else {
    const EigenSystem ms = eig_hermitian(m);
    const double top = ms.values.back();
    ComplexMatrix proj(d, d);
    for (std::size_t k = 0; k < d; ++k)
      if (ms.values[k] >= top - tol * mscale) proj += outer(ms.vectors.col(k), ms.vectors.col(k));
    const ComplexMatrix rest = (ComplexMatrix::identity(d) - proj) * rg;
    rep.largest_eigenspace = rest.max_abs() <= tol * std::max(1.0, rg.max_abs());
  }

  auto images = [](const KrausForm& kf, const std::vector<ComplexMatrix>& psis, std::vector<ComplexMatrix>& out) {
    for (const auto& t : kf) {
      if (t.c <= 0.0) continue;
      for (const auto& p : psis) out.push_back(std::sqrt(t.c) * (t.V * p));
    }
  };
  const KrausForm kp = kraus_from_choi(split.plus, tol);
  const KrausForm km = kraus_from_choi(split.minus, tol);
  std::vector<ComplexMatrix> x, y;
  images(km, psi_p, x);
  images(kp, psi_m, x);
  images(kp, psi_p, y);
  images(km, psi_m, y);

  double vmax = 0.0;
  for (const auto& v : x) vmax = std::max(vmax, vec_norm(v));
  for (const auto& v : y) vmax = std::max(vmax, vec_norm(v));
  const double zero = 1e-12 * vmax;
  double worst = 0.0;
  for (const auto& u : x) {
    const double nu = vec_norm(u);
    if (nu <= zero) continue;
    for (const auto& w : y) {
      const double nw = vec_norm(w);
      if (nw <= zero) continue;
      worst = std::max(worst, std::abs(hs_inner(u, w)) / (nu * nw));
    }
  }
  rep.max_overlap = worst;
  rep.orthogonality = worst <= overlap_tol;
  rep.achieves_upper = rep.orthogonality && rep.largest_eigenspace;
  return rep;
}

NormEquivalence norm_equivalence_check(const ComplexMatrix& h, BipartiteDims dims) {
  const double dmin = static_cast<double>(min_dim(dims));
  const double n1 = trace_norm(h);
  NormEquivalence out;
  out.low = 1.0 / dmin;
  out.high = dmin;
  out.ratio = n1 > 0.0 ? gamma_norm(h, dims, 1.0) / n1 : 1.0;
  out.within = out.ratio >= out.low * (1.0 - 1e-12) && out.ratio <= out.high * (1.0 + 1e-12);
  return out;
}

}  // namespace negacap
