#include "higgsnum/proj_bundle.hpp"

#include <utility>

namespace higgsnum {

namespace {

ChowClass polarization_class(const SurfaceGeometry& X) {
  return ChowClass::divisor(QNSVector(X.polarization()));
}

}  // namespace

YClass::YClass(std::shared_ptr<const SurfaceGeometry> base, ChowClass alpha, ChowClass beta)
    : base_(std::move(base)), alpha_(std::move(alpha)), beta_(std::move(beta)) {
  if (!base_) throw InputError("YClass requires a base surface");
  if (alpha_.rank() != base_->rank() || beta_.rank() != base_->rank()) {
    throw InputError("YClass coefficients do not match the base lattice rank");
  }
}

bool YClass::same_base(const YClass& o) const {
  return base_ == o.base_ || *base_ == *o.base_;
}

void YClass::require_same_base(const YClass& o) const {
  if (!same_base(o)) {
    throw InputError("Y-classes over different base surfaces ('" + base_->name() + "' vs '" +
                     o.base_->name() + "')");
  }
}

YClass& YClass::operator+=(const YClass& o) {
  require_same_base(o);
  alpha_ += o.alpha_;
  beta_ += o.beta_;
  return *this;
}

YClass& YClass::operator-=(const YClass& o) {
  require_same_base(o);
  alpha_ -= o.alpha_;
  beta_ -= o.beta_;
  return *this;
}

YClass operator*(const Rational& k, YClass a) {
  a.alpha_ = k * std::move(a.alpha_);
  a.beta_ = k * std::move(a.beta_);
  return a;
}

YClass y_one(std::shared_ptr<const SurfaceGeometry> X) {
  const auto n = X->rank();
  return YClass(std::move(X), ChowClass::one(n), ChowClass::zero(n));
}

YClass y_eta(std::shared_ptr<const SurfaceGeometry> X) {
  const auto n = X->rank();
  return YClass(std::move(X), ChowClass::zero(n), ChowClass::one(n));
}

YClass y_pullback(std::shared_ptr<const SurfaceGeometry> X, const ChowClass& alpha) {
  const auto n = X->rank();
  return YClass(std::move(X), alpha, ChowClass::zero(n));
}

YClass y_mul(const YClass& a, const YClass& b) {
  if (!a.same_base(b)) {
    throw InputError("Y-classes over different base surfaces ('" + a.base().name() + "' vs '" +
                     b.base().name() + "')");
  }
  const SurfaceGeometry& X = a.base();
  // (a₀ + a₁η)(b₀ + b₁η) = a₀b₀ + (a₀b₁ + a₁b₀ + a₁b₁·c₁(L))η
  ChowClass alpha = chow_mul(X, a.alpha(), b.alpha());
  ChowClass beta = chow_mul(X, a.alpha(), b.beta()) + chow_mul(X, a.beta(), b.alpha()) +
                   chow_mul(X, chow_mul(X, a.beta(), b.beta()), polarization_class(X));
  return YClass(a.base_ptr(), std::move(alpha), std::move(beta));
}

YClass y_pow(const YClass& a, unsigned k) {
  YClass out = y_one(a.base_ptr());
  for (unsigned i = 0; i < k; ++i) out = y_mul(out, a);
  return out;
}

ChowClass y_pushforward(const YClass& a) { return a.beta(); }

YClass spectral_divisor_class(std::shared_ptr<const SurfaceGeometry> X, std::int64_t r) {
  if (r < 1) throw InputError("spectral cover degree must be at least 1");
  return Rational(Integer(static_cast<long>(r))) * y_eta(std::move(X));
}

YClass dinfty_class(std::shared_ptr<const SurfaceGeometry> X) {
  const ChowClass L = polarization_class(*X);
  return y_eta(X) - y_pullback(X, L);
}

YClass tautological_class(std::shared_ptr<const SurfaceGeometry> X) { return dinfty_class(std::move(X)); }

YClass canonical_y(std::shared_ptr<const SurfaceGeometry> X) {
  const ChowClass KL = ChowClass::divisor(QNSVector(X->canonical() + X->polarization()));
  return y_pullback(X, KL) - Rational(2) * y_eta(X);
}

ChowClass restrict_to_spectral(const YClass& a, std::int64_t r) {
  if (r < 1) throw InputError("spectral cover degree must be at least 1");
  const SurfaceGeometry& X = a.base();
  return a.alpha() + chow_mul(X, a.beta(), polarization_class(X));
}

}  // namespace higgsnum
