#include "negacap/channel.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace negacap {

namespace {

void check_same_dims(const Channel& a, const Channel& b, const char* what) {
  if (!(a.in_dims == b.in_dims) || !(a.out_dims == b.out_dims))
    fail(ErrorKind::DimensionMismatch, what);
}

double choi_scale(const Channel& ch) { return std::max(1.0, ch.choi.max_abs()); }

}  // namespace

Channel make_channel(ComplexMatrix choi, BipartiteDims in_dims, BipartiteDims out_dims) {
  const std::size_t side = in_dims.total() * out_dims.total();
  if (!choi.square() || choi.rows() != side)
    fail(ErrorKind::DimensionMismatch, "Choi side " + std::to_string(choi.rows()) + " expected " +
                                           std::to_string(side));
  return Channel{std::move(choi), in_dims, out_dims};
}

Channel choi_from_kraus(const KrausForm& kraus, BipartiteDims in_dims, BipartiteDims out_dims) {
  const std::size_t d1 = in_dims.total(), d2 = out_dims.total();
  ComplexMatrix choi(d1 * d2, d1 * d2);
  for (const auto& term : kraus) {
    if (term.V.rows() != d2 || term.V.cols() != d1)
      fail(ErrorKind::DimensionMismatch, "Kraus operator must be d_out x d_in");
    // (I (x) V)|Psi> has entry V(k, j) at index j*d2 + k.
    std::vector<cplx> v(d1 * d2);
    for (std::size_t j = 0; j < d1; ++j)
      for (std::size_t k = 0; k < d2; ++k) v[j * d2 + k] = term.V(k, j);
    for (std::size_t r = 0; r < v.size(); ++r) {
      const cplx vr = term.c * v[r];
      if (vr == cplx(0.0, 0.0)) continue;
      for (std::size_t s = 0; s < v.size(); ++s) choi(r, s) += vr * std::conj(v[s]);
    }
  }
  return Channel{std::move(choi), in_dims, out_dims};
}

Channel unitary_channel(const ComplexMatrix& u, BipartiteDims dims) {
  return choi_from_kraus({KrausTerm{1.0, u}}, dims, dims);
}

Channel channel_from_map(const std::function<ComplexMatrix(const ComplexMatrix&)>& map,
                         BipartiteDims in_dims, BipartiteDims out_dims) {
  const std::size_t d1 = in_dims.total(), d2 = out_dims.total();
  ComplexMatrix choi(d1 * d2, d1 * d2);
  for (std::size_t i = 0; i < d1; ++i)
    for (std::size_t j = 0; j < d1; ++j) {
      ComplexMatrix e(d1, d1);
      e(i, j) = 1.0;
      const ComplexMatrix le = map(e);
      if (le.rows() != d2 || le.cols() != d2) fail(ErrorKind::DimensionMismatch, "map output size");
      for (std::size_t k = 0; k < d2; ++k)
        for (std::size_t m = 0; m < d2; ++m) choi(i * d2 + k, j * d2 + m) = le(k, m);
    }
  return Channel{std::move(choi), in_dims, out_dims};
}

Channel identity_channel(BipartiteDims dims) {
  return unitary_channel(ComplexMatrix::identity(dims.total()), dims);
}

Channel transpose_channel(std::size_t d) {
  return channel_from_map([](const ComplexMatrix& o) { return o.transpose(); }, {d, 1}, {d, 1});
}

ComplexMatrix apply(const Channel& ch, const ComplexMatrix& o) {
  const std::size_t d1 = ch.d_in(), d2 = ch.d_out();
  if (o.rows() != d1 || o.cols() != d1) fail(ErrorKind::DimensionMismatch, "apply: input size");
  ComplexMatrix out(d2, d2);
  for (std::size_t j = 0; j < d1; ++j)
    for (std::size_t l = 0; l < d1; ++l) {
      const cplx ojl = o(j, l);
      if (ojl == cplx(0.0, 0.0)) continue;
      for (std::size_t k = 0; k < d2; ++k)
        for (std::size_t m = 0; m < d2; ++m) out(k, m) += ojl * ch.choi(j * d2 + k, l * d2 + m);
    }
  return out;
}

ComplexMatrix adjoint_identity(const Channel& ch) {
  const std::size_t d1 = ch.d_in(), d2 = ch.d_out();
  ComplexMatrix out(d1, d1);
  for (std::size_t j = 0; j < d1; ++j)
    for (std::size_t l = 0; l < d1; ++l)
      for (std::size_t k = 0; k < d2; ++k) out(j, l) += std::conj(ch.choi(j * d2 + k, l * d2 + k));
  return out;
}

bool is_hp(const Channel& ch, double tol) { return is_hermitian(ch.choi, tol * choi_scale(ch)); }

bool is_cp(const Channel& ch, double tol) {
  if (!is_hp(ch, tol)) return false;
  return eig_hermitian(ch.choi, tol).values.front() >= -tol * choi_scale(ch);
}

bool is_tp(const Channel& ch, double tol) {
  return max_abs_diff(adjoint_identity(ch), ComplexMatrix::identity(ch.d_in())) <= tol;
}

MapSplit hp_split(const Channel& ch, double tol) {
  if (!is_hp(ch, tol)) fail(ErrorKind::NotHP, "hp_split needs a Hermitian Choi matrix");
  HermitianSplit s = positive_negative_parts(ch.choi, 1e-10, tol);
  return MapSplit{Channel{std::move(s.plus), ch.in_dims, ch.out_dims},
                  Channel{std::move(s.minus), ch.in_dims, ch.out_dims}};
}

KrausForm kraus_from_choi(const Channel& ch, double tol) {
  if (!is_hp(ch, tol)) fail(ErrorKind::NotHP, "kraus_from_choi needs a Hermitian Choi matrix");
  const std::size_t d1 = ch.d_in(), d2 = ch.d_out();
  const EigenSystem es = eig_hermitian(ch.choi, tol);
  double top = 0.0;
  for (double l : es.values) top = std::max(top, std::abs(l));
  KrausForm out;
  for (std::size_t i = es.values.size(); i-- > 0;) {
    const double c = es.values[i];
    if (std::abs(c) <= 1e-10 * top || c == 0.0) continue;
    ComplexMatrix v(d2, d1);
    for (std::size_t j = 0; j < d1; ++j)
      for (std::size_t k = 0; k < d2; ++k) v(k, j) = es.vectors(j * d2 + k, i);
    out.push_back(KrausTerm{c, std::move(v)});
  }
  return out;
}

Channel map_partial_transpose(const Channel& ch) {
  const std::size_t a1 = ch.in_dims.d_A, b1 = ch.in_dims.d_B;
  const std::size_t a2 = ch.out_dims.d_A, b2 = ch.out_dims.d_B;
  const std::size_t side = a1 * b1 * a2 * b2;
  if (!ch.choi.square() || ch.choi.rows() != side)
    fail(ErrorKind::DimensionMismatch, "map_partial_transpose: Choi size vs dims");
  auto idx = [&](std::size_t i1, std::size_t j1, std::size_t i2, std::size_t j2) {
    return ((i1 * b1 + j1) * a2 + i2) * b2 + j2;
  };
  ComplexMatrix out(side, side);
  for (std::size_t x1 = 0; x1 < a1; ++x1)
    for (std::size_t y1 = 0; y1 < b1; ++y1)
      for (std::size_t x2 = 0; x2 < a2; ++x2)
        for (std::size_t y2 = 0; y2 < b2; ++y2)
          for (std::size_t u1 = 0; u1 < a1; ++u1)
            for (std::size_t v1 = 0; v1 < b1; ++v1)
              for (std::size_t u2 = 0; u2 < a2; ++u2)
                for (std::size_t v2 = 0; v2 < b2; ++v2)
                  out(idx(x1, y1, x2, y2), idx(u1, v1, u2, v2)) =
                      ch.choi(idx(u1, y1, u2, y2), idx(x1, v1, x2, v2));
  return Channel{std::move(out), ch.in_dims, ch.out_dims};
}

Channel scaled(const Channel& ch, double w) { return Channel{w * ch.choi, ch.in_dims, ch.out_dims}; }

Channel difference(const Channel& a, const Channel& b) {
  check_same_dims(a, b, "difference: dims differ");
  return Channel{a.choi - b.choi, a.in_dims, a.out_dims};
}

Channel mix(const std::vector<Channel>& channels, const std::vector<double>& weights) {
  if (channels.empty() || channels.size() != weights.size())
    fail(ErrorKind::BadWeights, "one weight per channel required");
  double total = 0.0;
  for (double w : weights) {
    if (!(w >= 0.0)) fail(ErrorKind::BadWeights, "weights must be nonnegative");
    total += w;
  }
  if (std::abs(total - 1.0) > 1e-12) fail(ErrorKind::BadWeights, "weights must sum to 1");
  Channel out = scaled(channels.front(), weights.front());
  for (std::size_t i = 1; i < channels.size(); ++i) {
    check_same_dims(out, channels[i], "mix: dims differ");
    out.choi += weights[i] * channels[i].choi;
  }
  return out;
}

Channel compose(const Channel& ch2, const Channel& ch1) {
  if (ch1.d_out() != ch2.d_in()) fail(ErrorKind::DimensionMismatch, "compose: dims differ");
  return channel_from_map([&](const ComplexMatrix& o) { return apply(ch2, apply(ch1, o)); },
                          ch1.in_dims, ch2.out_dims);
}

Channel with_ancilla(const Channel& ch, std::size_t d_a) {
  const BipartiteDims in{d_a, ch.d_in()}, out{d_a, ch.d_out()};
  return channel_from_map(
      [&](const ComplexMatrix& o) {
        ComplexMatrix r(out.total(), out.total());
        for (std::size_t a = 0; a < d_a; ++a)
          for (std::size_t c = 0; c < d_a; ++c) {
            ComplexMatrix blk(ch.d_in(), ch.d_in());
            for (std::size_t i = 0; i < ch.d_in(); ++i)
              for (std::size_t j = 0; j < ch.d_in(); ++j) blk(i, j) = o(a * ch.d_in() + i, c * ch.d_in() + j);
            const ComplexMatrix lb = apply(ch, blk);
            for (std::size_t k = 0; k < ch.d_out(); ++k)
              for (std::size_t m = 0; m < ch.d_out(); ++m) r(a * ch.d_out() + k, c * ch.d_out() + m) = lb(k, m);
          }
        return r;
      },
      in, out);
}

cplx map_inner(const Channel& a, const Channel& b) {
  check_same_dims(a, b, "map_inner: dims differ");
  const std::size_t d1 = a.d_in();
  cplx s = 0.0;
  for (std::size_t i = 0; i < d1; ++i)
    for (std::size_t j = 0; j < d1; ++j) {
      ComplexMatrix e(d1, d1);
      e(i, j) = 1.0;
      s += hs_inner(apply(a, e), apply(b, e));
    }
  return s;
}

}  // namespace negacap
