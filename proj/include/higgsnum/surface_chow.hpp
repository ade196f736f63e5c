#pragma once

#include <cstdint>
#include <string>

#include "higgsnum/ns_lattice.hpp"
#include "higgsnum/rational.hpp"

namespace higgsnum {

/// Numerical data of a smooth polarized projective surface X.
///
/// canonical is K = c₁(ω_X), polarization is c₁(L) for the (numerically
/// very ample) twisting line bundle, c2_top = c₂(T_X) = e(X).
class SurfaceGeometry {
 public:
  SurfaceGeometry(std::string name, NSLattice lattice, NSVector canonical, NSVector polarization,
                  std::int64_t c2_top);

  const std::string& name() const { return name_; }
  const NSLattice& lattice() const { return lattice_; }
  const NSVector& canonical() const { return canonical_; }
  const NSVector& polarization() const { return polarization_; }
  std::int64_t c2_top() const { return c2_top_; }
  std::size_t rank() const { return lattice_.rank(); }

  /// χ(O_X) = (K² + c₂)/12, integral by construction.
  const Integer& chi_structure() const { return chi_o_; }

  friend bool operator==(const SurfaceGeometry& a, const SurfaceGeometry& b) {
    return a.name_ == b.name_ && a.lattice_ == b.lattice_ && a.canonical_ == b.canonical_ &&
           a.polarization_ == b.polarization_ && a.c2_top_ == b.c2_top_;
  }

 private:
  std::string name_;
  NSLattice lattice_;
  NSVector canonical_;
  NSVector polarization_;
  std::int64_t c2_top_;
  Integer chi_o_;
};

/// Class in H^{0}(X,Q) ⊕ NS(X)_Q ⊕ H⁴(X,Q); deg2 is the degree of the
/// point-class component.
struct ChowClass {
  Rational deg0;
  QNSVector deg1;
  Rational deg2;

  static ChowClass zero(std::size_t rank) { return {Rational(0), QNSVector::zero(rank), Rational(0)}; }
  static ChowClass one(std::size_t rank) { return {Rational(1), QNSVector::zero(rank), Rational(0)}; }
  static ChowClass divisor(const QNSVector& d) { return {Rational(0), d, Rational(0)}; }
  static ChowClass point(std::size_t rank, const Rational& n) {
    return {Rational(0), QNSVector::zero(rank), n};
  }

  std::size_t rank() const { return deg1.size(); }

  ChowClass& operator+=(const ChowClass& o);
  ChowClass& operator-=(const ChowClass& o);
  friend ChowClass operator+(ChowClass a, const ChowClass& b) { return a += b; }
  friend ChowClass operator-(ChowClass a, const ChowClass& b) { return a -= b; }
  friend ChowClass operator*(const Rational& k, ChowClass a);
  friend bool operator==(const ChowClass&, const ChowClass&) = default;
};

/// Rank, first and second Chern class of a (Higgs) sheaf on X.
struct HiggsNumerics {
  std::int64_t r;
  NSVector c1;
  std::int64_t c2;

  HiggsNumerics(std::int64_t rank, NSVector first, std::int64_t second);
};

/// Cup product truncated above degree 4.
ChowClass chow_mul(const SurfaceGeometry& X, const ChowClass& a, const ChowClass& b);

/// Multiplicative inverse of a class with nonzero rank part.
ChowClass chow_inverse(const SurfaceGeometry& X, const ChowClass& a);

/// exp(D) = 1 + D + D²/2.
ChowClass line_bundle_ch(const SurfaceGeometry& X, const QNSVector& D);

/// Td(X) = 1 − K/2 + (K² + c₂)/12.
ChowClass todd_surface(const SurfaceGeometry& X);

/// ∫_X ch·Td(X). Rational: classes met along the way need not be integral.
Rational chi(const SurfaceGeometry& X, const ChowClass& ch);

/// χ(F ⊗ L^n) for a sheaf with Chern character ch.
Rational hilbert_polynomial(const SurfaceGeometry& X, const ChowClass& ch, std::int64_t n);

/// Coefficients (a, b, c) of hilbert_polynomial(n) = a·n² + b·n + c, read off
/// without any ring multiplication.
struct QuadraticCoefficients {
  Rational a, b, c;
};
QuadraticCoefficients hilbert_polynomial_coefficients(const SurfaceGeometry& X, const ChowClass& ch);

/// Δ = 2r·c₂ − (r−1)·c₁².
Integer discriminant(const HiggsNumerics& h, const SurfaceGeometry& X);

/// ch(M ⊗ I_Z) = ch(M) − [Z] for a length-n zero-dimensional Z.
ChowClass ideal_twist_ch(const SurfaceGeometry& X, const QNSVector& M, std::int64_t n);

/// ch of a sheaf with rank r and Chern classes c₁, c₂: (r, c₁, c₁²/2 − c₂).
ChowClass chern_character(const SurfaceGeometry& X, const HiggsNumerics& h);

}  // namespace higgsnum
