#pragma once

#include <cstdint>
#include <memory>

#include "higgsnum/surface_chow.hpp"

namespace higgsnum {

/// Element π*α + π*β·η of the Chow ring of Y = P(L^∨ ⊕ O) over a surface X,
/// where η = c₁(π*L ⊗ O_{Y/X}(1)).
///
/// The ring is A(X)[η]/(η² − π*c₁(L)·η); every product is reduced back to
/// this normal form immediately. With this generator
///   [D_∞] = η − π*c₁(L),   [X_s] = r·η,   ∫_Y η³ = L².
class YClass {
 public:
  YClass(std::shared_ptr<const SurfaceGeometry> base, ChowClass alpha, ChowClass beta);

  const ChowClass& alpha() const { return alpha_; }
  const ChowClass& beta() const { return beta_; }
  const SurfaceGeometry& base() const { return *base_; }
  const std::shared_ptr<const SurfaceGeometry>& base_ptr() const { return base_; }

  bool same_base(const YClass& o) const;

  YClass& operator+=(const YClass& o);
  YClass& operator-=(const YClass& o);
  friend YClass operator+(YClass a, const YClass& b) { return a += b; }
  friend YClass operator-(YClass a, const YClass& b) { return a -= b; }
  friend YClass operator*(const Rational& k, YClass a);
  friend bool operator==(const YClass& a, const YClass& b) {
    return a.same_base(b) && a.alpha_ == b.alpha_ && a.beta_ == b.beta_;
  }

 private:
  void require_same_base(const YClass& o) const;

  std::shared_ptr<const SurfaceGeometry> base_;
  ChowClass alpha_;
  ChowClass beta_;
};

YClass y_one(std::shared_ptr<const SurfaceGeometry> X);
YClass y_eta(std::shared_ptr<const SurfaceGeometry> X);
/// π*α.
YClass y_pullback(std::shared_ptr<const SurfaceGeometry> X, const ChowClass& alpha);

YClass y_mul(const YClass& a, const YClass& b);
YClass y_pow(const YClass& a, unsigned k);

/// π_*: the η-coefficient. Pullbacks push forward to zero.
ChowClass y_pushforward(const YClass& a);

/// [X_s] = r·η for the spectral divisor in |π*L^r ⊗ O(r)|.
YClass spectral_divisor_class(std::shared_ptr<const SurfaceGeometry> X, std::int64_t r);

/// [D_∞] = η − π*c₁(L); η·[D_∞] = 0.
YClass dinfty_class(std::shared_ptr<const SurfaceGeometry> X);

/// ξ = c₁(O_{Y/X}(1)) = η − π*c₁(L); numerically the same class as [D_∞].
YClass tautological_class(std::shared_ptr<const SurfaceGeometry> X);

/// c₁(ω_Y) = π*(K + L) − 2η.
YClass canonical_y(std::shared_ptr<const SurfaceGeometry> X);

/// The class b on X with i_s*(a) = π_s*(b). On X_s the tautological class
/// vanishes, so η restricts to π_s*c₁(L) and b = α + β·c₁(L).
ChowClass restrict_to_spectral(const YClass& a, std::int64_t r);

}  // namespace higgsnum
