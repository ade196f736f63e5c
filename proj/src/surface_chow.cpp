#include "higgsnum/surface_chow.hpp"

#include <utility>

namespace higgsnum {

namespace {

void require_compatible(const SurfaceGeometry& X, const ChowClass& a) {
  if (a.rank() != X.rank()) {
    throw InputError("class over a lattice of rank " + std::to_string(a.rank()) +
                     " used on a surface of rank " + std::to_string(X.rank()));
  }
}

Integer as_integer(std::int64_t v) { return Integer(static_cast<long>(v)); }

}  // namespace

SurfaceGeometry::SurfaceGeometry(std::string name, NSLattice lattice, NSVector canonical,
                                 NSVector polarization, std::int64_t c2_top)
    : name_(std::move(name)),
      lattice_(std::move(lattice)),
      canonical_(std::move(canonical)),
      polarization_(std::move(polarization)),
      c2_top_(c2_top) {
  lattice_.check(canonical_);
  lattice_.check(polarization_);
  if (pair(lattice_, polarization_, polarization_) <= 0) {
    throw ValidationError("polarization must have positive self-intersection (L·L > 0)");
  }
  const Integer noether = pair(lattice_, canonical_, canonical_) + as_integer(c2_top_);
  if (noether % 12 != 0) {
    throw ValidationError("Noether integrality fails: K² + c2_top = " + noether.get_str() +
                          " is not divisible by 12");
  }
  chi_o_ = noether / 12;
}

ChowClass& ChowClass::operator+=(const ChowClass& o) {
  deg0 += o.deg0;
  deg1 += o.deg1;
  deg2 += o.deg2;
  return *this;
}

ChowClass& ChowClass::operator-=(const ChowClass& o) {
  deg0 -= o.deg0;
  deg1 -= o.deg1;
  deg2 -= o.deg2;
  return *this;
}

ChowClass operator*(const Rational& k, ChowClass a) {
  a.deg0 *= k;
  a.deg1 = k * std::move(a.deg1);
  a.deg2 *= k;
  return a;
}

HiggsNumerics::HiggsNumerics(std::int64_t rank, NSVector first, std::int64_t second)
    : r(rank), c1(std::move(first)), c2(second) {
  if (r < 1) throw InputError("rank must be at least 1");
}

ChowClass chow_mul(const SurfaceGeometry& X, const ChowClass& a, const ChowClass& b) {
  require_compatible(X, a);
  require_compatible(X, b);
  ChowClass out;
  out.deg0 = a.deg0 * b.deg0;
  out.deg1 = a.deg0 * b.deg1 + b.deg0 * a.deg1;
  out.deg2 = a.deg0 * b.deg2 + b.deg0 * a.deg2 + pair(X.lattice(), a.deg1, b.deg1);
  return out;
}

ChowClass chow_inverse(const SurfaceGeometry& X, const ChowClass& a) {
  require_compatible(X, a);
  if (a.deg0 == 0) throw InputError("class with zero rank part is not invertible");
  // a = a0(1 + u), u nilpotent of order 3: a⁻¹ = a0⁻¹(1 − u + u²)
  const Rational inv0 = 1 / a.deg0;
  const QNSVector u1 = inv0 * a.deg1;
  const Rational u2 = inv0 * a.deg2;
  ChowClass out;
  out.deg0 = inv0;
  out.deg1 = inv0 * (-u1);
  out.deg2 = inv0 * (-u2 + pair(X.lattice(), u1, u1));
  return out;
}

ChowClass line_bundle_ch(const SurfaceGeometry& X, const QNSVector& D) {
  X.lattice().check(D);
  return {Rational(1), D, pair(X.lattice(), D, D) / 2};
}

ChowClass todd_surface(const SurfaceGeometry& X) {
  return {Rational(1), Rational(-1, 2) * QNSVector(X.canonical()), Rational(X.chi_structure())};
}

Rational chi(const SurfaceGeometry& X, const ChowClass& ch) {
  return chow_mul(X, ch, todd_surface(X)).deg2;
}

Rational hilbert_polynomial(const SurfaceGeometry& X, const ChowClass& ch, std::int64_t n) {
  const QNSVector nL = Rational(as_integer(n)) * QNSVector(X.polarization());
  return chi(X, chow_mul(X, ch, line_bundle_ch(X, nL)));
}

QuadraticCoefficients hilbert_polynomial_coefficients(const SurfaceGeometry& X,
                                                      const ChowClass& ch) {
  require_compatible(X, ch);
  const auto& lat = X.lattice();
  const QNSVector L(X.polarization());
  const QNSVector K(X.canonical());
  QuadraticCoefficients q;
  q.a = ch.deg0 * pair(lat, L, L) / 2;
  q.b = pair(lat, ch.deg1 - (ch.deg0 / 2) * K, L);
  q.c = ch.deg0 * X.chi_structure() - pair(lat, ch.deg1, K) / 2 + ch.deg2;
  return q;
}

Integer discriminant(const HiggsNumerics& h, const SurfaceGeometry& X) {
  return 2 * as_integer(h.r) * as_integer(h.c2) -
         as_integer(h.r - 1) * pair(X.lattice(), h.c1, h.c1);
}

ChowClass ideal_twist_ch(const SurfaceGeometry& X, const QNSVector& M, std::int64_t n) {
  if (n < 0) throw InputError("number of points must be nonnegative");
  ChowClass out = line_bundle_ch(X, M);
  out.deg2 -= as_integer(n);
  return out;
}

ChowClass chern_character(const SurfaceGeometry& X, const HiggsNumerics& h) {
  X.lattice().check(h.c1);
  return {Rational(as_integer(h.r)), QNSVector(h.c1),
          Rational(pair(X.lattice(), h.c1, h.c1)) / 2 - as_integer(h.c2)};
}

}  // namespace higgsnum
