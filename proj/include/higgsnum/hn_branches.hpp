#pragma once

#include <cstdint>
#include <vector>

#include "higgsnum/hitchin_criterion.hpp"
#include "higgsnum/surface_chow.hpp"

namespace higgsnum {

struct HNFactor {
  std::int64_t r;
  NSVector c1;
  std::int64_t c2;
};

/// Graded pieces of a filtration, top piece first. Factors carry their own
/// c₂ so synthetic (not necessarily realizable) data can be fed through the
/// identities below.
struct HNType {
  std::vector<HNFactor> factors;

  std::int64_t total_rank() const;
  /// (r, c₁, c₂) of the filtered sheaf: c₂ = Σc₂ᵢ + Σ_{i<j} c₁ᵢ·c₁ⱼ.
  HiggsNumerics total(const SurfaceGeometry& X) const;
  /// True iff slopes c₁ᵢ·L/rᵢ strictly decrease.
  bool slopes_decreasing(const SurfaceGeometry& X) const;
};

/// Both sides of Δ(E)/r = ΣΔ(Eᵢ)/rᵢ − Σ_{i<j}(rᵢrⱼ/r)(c₁ᵢ/rᵢ − c₁ⱼ/rⱼ)².
/// Ordering is not required.
struct IdentitySides {
  Rational lhs;
  Rational rhs;
};
IdentitySides discriminant_identity(const SurfaceGeometry& X, const HNType& t);

struct SlopeGaps {
  std::vector<Rational> gaps;
  bool valid;  // every gap in (0, L²]
};
SlopeGaps slope_gaps(const SurfaceGeometry& X, const HNType& t);

/// The three quantities of the Hodge-index chain bounding the HN cross term:
///   cross  = Σ_{i<j}(rᵢrⱼ/r)(c₁ᵢ/rᵢ − c₁ⱼ/rⱼ)² · L²
///   paired = Σ_{i<j}(rᵢrⱼ/r)((c₁ᵢ/rᵢ − c₁ⱼ/rⱼ)·L)²
///   bound  = Σ_{i<j}(rᵢrⱼ/r)(i−j)² · (L²)²
/// cross ≤ paired always (Hodge index); paired ≤ bound when slope gaps are valid.
struct HodgeChain {
  Rational cross;
  Rational paired;
  Rational bound;
};
HodgeChain hodge_chain(const SurfaceGeometry& X, const HNType& t);

/// Σ_{i<j} rᵢrⱼ(j−i)² over an ordered composition. Throws on empty input.
Integer olympic_sum(const std::vector<std::int64_t>& comp);

/// r²(r²−1)/12.
Integer olympic_bound(std::int64_t r);

/// Exhaustive scan of the 2^{r−1} ordered compositions of r.
struct OlympicScan {
  std::int64_t r = 0;
  Integer max;
  std::vector<std::vector<std::int64_t>> argmax;  // sorted lexicographically
  std::uint64_t compositions = 0;
  bool bound_holds = false;   // max == olympic_bound(r)
  bool unique_at_ones = false;  // argmax == {(1,…,1)}
};

/// Reference implementation.
OlympicScan olympic_scan_serial(std::int64_t r);
/// OpenMP over composition bitmasks; identical result to the serial scan.
OlympicScan olympic_scan_parallel(std::int64_t r);

struct OlympicReport {
  std::vector<OlympicScan> per_rank;
  bool passed;
};
/// Scans every r in 1..r_max (r_max ≤ 20).
OlympicReport olympic_verify(std::int64_t r_max);

/// One candidate component X_β^{[n]} of the monopole branch.
struct NestedComponent {
  std::vector<NSVector> betas;         // βᵢ = δ − (i−1)·L
  std::vector<std::int64_t> lengths;   // n₁ ≥ … ≥ n_r ≥ 0
  friend bool operator==(const NestedComponent&, const NestedComponent&) = default;
};

struct MonopoleBranches {
  RegimeReport regime;
  std::int64_t total_points;  // N = c₂ − c₂^g.bun
  std::vector<NestedComponent> components;  // lexicographically decreasing lengths
};

/// Raised when monopole enumeration is asked for outside Boundary/Generic.
class RegimeError : public InputError {
 public:
  RegimeError(Regime regime, const std::string& what) : InputError(what), regime_(regime) {}
  Regime regime() const { return regime_; }

 private:
  Regime regime_;
};

/// Partitions of n into at most k parts, each padded to length k, in
/// lexicographically decreasing order.
std::vector<std::vector<std::int64_t>> partitions_at_most(std::int64_t n, std::int64_t k);

MonopoleBranches monopole_components(const SurfaceGeometry& X, const HiggsNumerics& h);

/// Rank-2 fixed loci with c₁ = c₁(L): the instanton branch (θ = 0, not
/// enumerated) plus type-(1,1) components L⊗I_{D₁} ⊕ I_{D₂}, D₂ ⊂ D₁,
/// #D₁ + #D₂ = c₂.
struct Rank2Fixed {
  RegimeReport regime;
  bool instanton_branch;  // listed whenever the regime is not Empty
  std::vector<std::pair<std::int64_t, std::int64_t>> type11;  // (n₁, n₂), n₁ decreasing
  std::int64_t count;
};
Rank2Fixed rank2_fixed_components(const SurfaceGeometry& X, std::int64_t c2);

}  // namespace higgsnum
