#pragma once

#include <optional>
#include <string_view>

#include "higgsnum/surface_chow.hpp"

namespace higgsnum {

/// Numerical witness (δ, #𝔇) for a non-empty generic Hitchin fiber: the
/// Higgs sheaf is π_{s*}(O(π_s*δ) ⊗ I_𝔇) for a zero-cycle 𝔇 of that degree.
struct FiberWitness {
  NSVector delta;
  std::int64_t n_points;
  friend bool operator==(const FiberWitness&, const FiberWitness&) = default;
};

enum class Regime {
  NoDeltaSolution,  // r·δ = c₁ + r(r−1)/2·L has no integral solution
  Empty,            // c₂ < c₂^g.bun
  Boundary,         // c₂ = c₂^g.bun: locally free, HN type (1,…,1)
  Generic,          // c₂ > c₂^g.bun
};

std::string_view to_string(Regime r);

struct RegimeReport {
  Regime regime;
  Rational c2_gbun;
  std::optional<FiberWitness> witness;
};

struct ThresholdValue {
  Rational value;
  bool integral;
};

/// δ = (c₁ + r(r−1)/2·L)/r when integral.
std::optional<NSVector> solve_delta(const SurfaceGeometry& X, const HiggsNumerics& h);

/// c₂^g.bun = (r−1)/2r·c₁² − r(r²−1)/24·L².
ThresholdValue c2_gbun(const SurfaceGeometry& X, const HiggsNumerics& h);

/// #𝔇 = (r²(r²−1)/12·L² − (r−1)c₁² + 2r·c₂)/(2r), straight from the second
/// criterion equation.
Rational n_points(const SurfaceGeometry& X, const HiggsNumerics& h);

RegimeReport classify(const SurfaceGeometry& X, const HiggsNumerics& h);

}  // namespace higgsnum
