#pragma once

#include <cstdint>
#include <memory>
#include <random>
#include <string>
#include <vector>

#include "higgsnum/surface_io.hpp"

namespace higgsnum::testing {

inline std::shared_ptr<const SurfaceGeometry> preset(const std::string& name) {
  return std::make_shared<const SurfaceGeometry>(preset_surface(name));
}

inline Rational q(std::int64_t num, std::int64_t den = 1) { return make_rational(num, den); }

inline NSVector v(std::initializer_list<std::int64_t> c) { return NSVector(std::vector<std::int64_t>(c)); }

inline QNSVector qv(std::initializer_list<std::int64_t> c) { return QNSVector(v(c)); }

inline ChowClass chow(const Rational& d0, const QNSVector& d1, const Rational& d2) { return {d0, d1, d2}; }

inline std::int64_t draw(std::mt19937_64& rng, std::int64_t lo, std::int64_t hi) {
  return std::uniform_int_distribution<std::int64_t>(lo, hi)(rng);
}

inline Rational draw_rational(std::mt19937_64& rng) { return q(draw(rng, -12, 12), draw(rng, 1, 6)); }

inline NSVector draw_ns(std::mt19937_64& rng, std::size_t rank, std::int64_t bound) {
  NSVector out = NSVector::zero(rank);
  for (auto& x : out.coords) x = draw(rng, -bound, bound);
  return out;
}

inline QNSVector draw_qns(std::mt19937_64& rng, std::size_t rank) {
  QNSVector out = QNSVector::zero(rank);
  for (auto& x : out.coords) x = draw_rational(rng);
  return out;
}

inline ChowClass draw_chow(std::mt19937_64& rng, std::size_t rank) {
  return {draw_rational(rng), draw_qns(rng, rank), draw_rational(rng)};
}

/// The three presets named by the acceptance criteria.
inline const std::vector<std::string>& core_presets() {
  static const std::vector<std::string> names{"p2", "hypersurface:4", "hypersurface:5"};
  return names;
}

}  // namespace higgsnum::testing
