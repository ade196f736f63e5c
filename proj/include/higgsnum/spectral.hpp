#pragma once

#include <cstdint>
#include <memory>
#include <utility>

#include "higgsnum/surface_chow.hpp"

namespace higgsnum {

/// A smooth spectral surface π_s: X_s → X of degree r inside the completed
/// total space of L.
///
/// Classes on X_s are modelled as pullbacks from X plus a zero-cycle degree.
/// This is exact when π_s^*: Pic(X) → Pic(X_s) is an isomorphism, which holds
/// for very general spectral data; special spectral surfaces with extra
/// divisor classes are outside the model. Smoothness is assumed, not checked.
struct SpectralCover {
  std::shared_ptr<const SurfaceGeometry> base;
  std::int64_t r;

  SpectralCover(std::shared_ptr<const SurfaceGeometry> X, std::int64_t degree);
  const SurfaceGeometry& X() const { return *base; }
};

/// π_s*(pullback) + points·[pt_{X_s}].
struct SpectralClass {
  ChowClass pullback;
  Rational points;

  friend bool operator==(const SpectralClass&, const SpectralClass&) = default;
};

SpectralClass spectral_mul(const SpectralCover& S, const SpectralClass& a, const SpectralClass& b);
/// ∫_{X_s}: a pulled-back point has degree r.
Rational spectral_integral(const SpectralCover& S, const SpectralClass& a);
/// π_{s*}: r·id on pullbacks, degree-preserving on points.
ChowClass spectral_pushforward(const SpectralCover& S, const SpectralClass& a);

/// b with K_{X_s} = π_s*(b): K + (r−1)L.
NSVector spectral_canonical(const SpectralCover& S);

/// ch(Ω¹_{X_s}) = π_s*(ch(Ω¹_X) + ch(L^∨) − ch(L^∨)^r), returned as the class on X.
ChowClass spectral_cotangent_ch(const SpectralCover& S);

/// Coefficient of the pulled-back point class in c₂(T X_s):
/// r(r−1)L² + (r−1)K·L + c₂(T X).
Rational spectral_c2_tangent(const SpectralCover& S);

/// Td(X_s) = 1 − ½π*(K+(r−1)L) + (1/12)π*(K² + (2r−1)(r−1)L² + 3(r−1)K·L + c₂).
ChowClass spectral_todd(const SpectralCover& S);

/// ch(π_{s*}O_{X_s}) = Σ_{i<r} ch(L^{−i}).
ChowClass pushforward_structure_ch(const SpectralCover& S);

/// ch(E) for E = π_{s*}(O(π_s*δ) ⊗ I_𝔇), via GRR:
/// π_{s*}(ch(M⊗I_𝔇)·Td(X_s)) · Td(X)⁻¹.
ChowClass grr_pushforward(const SpectralCover& S, const NSVector& delta, std::int64_t n_points);

/// χ(X_s, M⊗I_𝔇) and χ(X, E) computed on either side of the cover.
std::pair<Rational, Rational> chi_two_ways(const SpectralCover& S, const NSVector& delta,
                                           std::int64_t n_points);

/// χ(O_{X_s}) by three independent routes.
struct StructureChi {
  Rational via_todd;           // r · deg2 Td(X_s)
  Rational via_noether;        // (K_{X_s}² + e(X_s)) / 12
  Rational via_decomposition;  // Σ_{i<r} χ(X, L^{−i})
  Integer k_squared;           // K_{X_s}² = r·(K+(r−1)L)²
  Rational euler;              // e(X_s) = r·spectral_c2_tangent
};
StructureChi spectral_structure_chi(const SpectralCover& S);

}  // namespace higgsnum
