#include "higgsnum/spectral.hpp"

namespace higgsnum {

namespace {

Integer as_integer(std::int64_t v) { return Integer(static_cast<long>(v)); }

ChowClass chow_pow(const SurfaceGeometry& X, const ChowClass& a, std::int64_t k) {
  ChowClass out = ChowClass::one(X.rank());
  for (std::int64_t i = 0; i < k; ++i) out = chow_mul(X, out, a);
  return out;
}

}  // namespace

SpectralCover::SpectralCover(std::shared_ptr<const SurfaceGeometry> X, std::int64_t degree)
    : base(std::move(X)), r(degree) {
  if (!base) throw InputError("spectral cover requires a base surface");
  if (r < 1) throw InputError("spectral cover degree must be at least 1");
}

SpectralClass spectral_mul(const SpectralCover& S, const SpectralClass& a, const SpectralClass& b) {
  // a point class only survives against the rank part of the other factor
  return {chow_mul(S.X(), a.pullback, b.pullback),
          a.points * b.pullback.deg0 + b.points * a.pullback.deg0};
}

Rational spectral_integral(const SpectralCover& S, const SpectralClass& a) {
  return as_integer(S.r) * a.pullback.deg2 + a.points;
}

ChowClass spectral_pushforward(const SpectralCover& S, const SpectralClass& a) {
  ChowClass out = Rational(as_integer(S.r)) * a.pullback;
  out.deg2 += a.points;
  return out;
}

NSVector spectral_canonical(const SpectralCover& S) {
  return S.X().canonical() + (S.r - 1) * S.X().polarization();
}

ChowClass spectral_cotangent_ch(const SpectralCover& S) {
  const SurfaceGeometry& X = S.X();
  const auto& lat = X.lattice();
  const QNSVector K(X.canonical());
  const ChowClass omega{Rational(2), K, Rational(pair(lat, K, K)) / 2 - as_integer(X.c2_top())};
  const ChowClass dual = line_bundle_ch(X, -QNSVector(X.polarization()));
  return omega + dual - chow_pow(X, dual, S.r);
}

Rational spectral_c2_tangent(const SpectralCover& S) {
  const SurfaceGeometry& X = S.X();
  const auto& lat = X.lattice();
  const Integer LL = pair(lat, X.polarization(), X.polarization());
  const Integer KL = pair(lat, X.canonical(), X.polarization());
  const Integer r = as_integer(S.r);
  return Rational(r * (r - 1) * LL + (r - 1) * KL + as_integer(X.c2_top()));
}

ChowClass spectral_todd(const SpectralCover& S) {
  const SurfaceGeometry& X = S.X();
  const auto& lat = X.lattice();
  const Integer KK = pair(lat, X.canonical(), X.canonical());
  const Integer LL = pair(lat, X.polarization(), X.polarization());
  const Integer KL = pair(lat, X.canonical(), X.polarization());
  const Integer r = as_integer(S.r);
  const Integer top = KK + (2 * r - 1) * (r - 1) * LL + 3 * (r - 1) * KL + as_integer(X.c2_top());
  return {Rational(1), Rational(-1, 2) * QNSVector(spectral_canonical(S)), ratio(top, Integer(12))};
}

ChowClass pushforward_structure_ch(const SpectralCover& S) {
  const SurfaceGeometry& X = S.X();
  ChowClass out = ChowClass::zero(X.rank());
  for (std::int64_t i = 0; i < S.r; ++i) {
    out += line_bundle_ch(X, QNSVector((-i) * X.polarization()));
  }
  return out;
}

namespace {

SpectralClass twisted_ideal_times_todd(const SpectralCover& S, const NSVector& delta,
                                       std::int64_t n_points) {
  const SurfaceGeometry& X = S.X();
  X.lattice().check(delta);
  if (n_points < 0) throw InputError("number of points must be nonnegative");
  const SpectralClass ch_twist{line_bundle_ch(X, QNSVector(delta)), Rational(-as_integer(n_points))};
  const SpectralClass td{spectral_todd(S), Rational(0)};
  return spectral_mul(S, ch_twist, td);
}

}  // namespace

ChowClass grr_pushforward(const SpectralCover& S, const NSVector& delta, std::int64_t n_points) {
  const SurfaceGeometry& X = S.X();
  const ChowClass pushed = spectral_pushforward(S, twisted_ideal_times_todd(S, delta, n_points));
  return chow_mul(X, pushed, chow_inverse(X, todd_surface(X)));
}

std::pair<Rational, Rational> chi_two_ways(const SpectralCover& S, const NSVector& delta,
                                           std::int64_t n_points) {
  const Rational upstairs = spectral_integral(S, twisted_ideal_times_todd(S, delta, n_points));
  const Rational downstairs = chi(S.X(), grr_pushforward(S, delta, n_points));
  return {upstairs, downstairs};
}

StructureChi spectral_structure_chi(const SpectralCover& S) {
  const SurfaceGeometry& X = S.X();
  const Integer r = as_integer(S.r);
  const NSVector b = spectral_canonical(S);
  StructureChi out;
  out.via_todd = r * spectral_todd(S).deg2;
  out.k_squared = r * pair(X.lattice(), b, b);
  out.euler = r * spectral_c2_tangent(S);
  out.via_noether = (Rational(out.k_squared) + out.euler) / 12;
  out.via_decomposition = 0;
  for (std::int64_t i = 0; i < S.r; ++i) {
    out.via_decomposition += chi(X, line_bundle_ch(X, QNSVector((-i) * X.polarization())));
  }
  return out;
}

}  // namespace higgsnum
