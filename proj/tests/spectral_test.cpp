#include <doctest.h>

#include "higgsnum/hitchin_criterion.hpp"
#include "higgsnum/spectral.hpp"
#include "test_support.hpp"

using namespace higgsnum;
using namespace higgsnum::testing;

TEST_CASE("spectral canonical class") {
  CHECK(spectral_canonical(SpectralCover(preset("hypersurface:5"), 2)) == v({2}));
  CHECK(spectral_canonical(SpectralCover(preset("hypersurface:4"), 3)) == v({2}));
  const auto X = preset("bl1p2");
  CHECK(spectral_canonical(SpectralCover(X, 1)) == X->canonical());
  CHECK_THROWS_AS(SpectralCover(X, 0), InputError);
}

TEST_CASE("cotangent Chern character") {
  const auto Q = preset("hypersurface:5");
  // ch(Ω¹_X) = (2, K, (K² − 2c₂)/2)
  CHECK(spectral_cotangent_ch(SpectralCover(Q, 1)) == chow(2, qv({1}), q(5 - 110, 2)));
  // ch₁ = K + (r−1)L = 2H, ch₂ = −105/2 + 5/2 − 10
  CHECK(spectral_cotangent_ch(SpectralCover(Q, 2)) == chow(2, qv({2}), -60));
  for (const auto& name : verification_presets()) {
    const auto X = preset(name);
    for (std::int64_t r = 1; r <= 8; ++r) {
      const SpectralCover S(X, r);
      const ChowClass ch = spectral_cotangent_ch(S);
      CHECK(ch.deg0 == 2);
      CHECK(ch.deg1 == QNSVector(spectral_canonical(S)));
      // c₂ = c₁²/2 − ch₂ recovers the tangent c₂
      CHECK(pair(X->lattice(), ch.deg1, ch.deg1) / 2 - ch.deg2 == spectral_c2_tangent(S));
    }
  }
}

TEST_CASE("tangent c2 of the spectral surface") {
  CHECK(spectral_c2_tangent(SpectralCover(preset("hypersurface:5"), 2)) == 70);
  CHECK(spectral_c2_tangent(SpectralCover(preset("hypersurface:7"), 1)) == preset("hypersurface:7")->c2_top());
  CHECK(spectral_c2_tangent(SpectralCover(preset("p2"), 2)) == 2);
}

TEST_CASE("spectral Todd class") {
  const auto Q = preset("hypersurface:5");
  const ChowClass td = spectral_todd(SpectralCover(Q, 2));
  CHECK(td == chow(1, qv({-1}), q(15, 2)));
  CHECK(2 * td.deg2 == 15);
  CHECK(spectral_todd(SpectralCover(Q, 1)) == todd_surface(*Q));
  const auto K3 = preset("hypersurface:4");
  const ChowClass td3 = spectral_todd(SpectralCover(K3, 2));
  CHECK(td3 == chow(1, QNSVector({q(-1, 2)}), 3));
  CHECK(2 * td3.deg2 == 6);
}

TEST_CASE("structure sheaf pushforward") {
  const auto Q = preset("hypersurface:5");
  CHECK(pushforward_structure_ch(SpectralCover(Q, 1)) == ChowClass::one(1));
  CHECK(pushforward_structure_ch(SpectralCover(Q, 2)) == chow(2, qv({-1}), q(5, 2)));
  CHECK(pushforward_structure_ch(SpectralCover(Q, 3)) == chow(3, qv({-3}), q(25, 2)));
  for (const auto& name : verification_presets()) {
    const auto X = preset(name);
    const Integer LL = pair(X->lattice(), X->polarization(), X->polarization());
    for (std::int64_t r = 1; r <= 8; ++r) {
      const ChowClass expect{Rational(static_cast<long>(r)),
                             QNSVector((-(r * (r - 1) / 2)) * X->polarization()),
                             ratio(Integer(static_cast<long>(r * (r - 1) * (2 * r - 1))) * LL, Integer(12))};
      CHECK(pushforward_structure_ch(SpectralCover(X, r)) == expect);
    }
  }
}

TEST_CASE("GRR pushforward examples") {
  const auto Q = preset("hypersurface:5");
  // c₁ = 2·3H − H = 5H; c₂ = c₂^g.bun(2, 5H) = 125/4 − 5/4 = 30; ch₂ = 125/2 − 30
  CHECK(grr_pushforward(SpectralCover(Q, 2), v({3}), 0) == chow(2, qv({5}), q(65, 2)));
  for (const auto& name : verification_presets()) {
    const auto X = preset(name);
    const NSVector d = X->polarization() - X->canonical();
    CHECK(grr_pushforward(SpectralCover(X, 1), d, 0) == line_bundle_ch(*X, QNSVector(d)));
    for (std::int64_t r = 1; r <= 5; ++r) {
      const SpectralCover S(X, r);
      CHECK(grr_pushforward(S, NSVector::zero(X->rank()), 0) == pushforward_structure_ch(S));
    }
  }
}

TEST_CASE("GRR pushforward agrees with the criterion closed form") {
  std::mt19937_64 rng(41);
  for (const auto& name : verification_presets()) {
    const auto X = preset(name);
    for (int i = 0; i < 80; ++i) {
      const std::int64_t r = draw(rng, 1, 6);
      const NSVector delta = draw_ns(rng, X->rank(), 5);
      const std::int64_t n = draw(rng, 0, 20);
      const ChowClass ch = grr_pushforward(SpectralCover(X, r), delta, n);
      const NSVector c1 = r * delta - (r * (r - 1) / 2) * X->polarization();
      CHECK(ch.deg0 == r);
      CHECK(ch.deg1 == QNSVector(c1));
      // c₂(E) = #𝔇 + c₂^g.bun
      const Rational c2 = pair(X->lattice(), ch.deg1, ch.deg1) / 2 - ch.deg2;
      CHECK(c2 == n + c2_gbun(*X, HiggsNumerics(r, c1, 0)).value);
    }
  }
}

TEST_CASE("chi_two_ways") {
  const auto [a, b] = chi_two_ways(SpectralCover(preset("hypersurface:5"), 2), v({0}), 0);
  CHECK(a == 15);
  CHECK(b == 15);
  const auto [c, d] = chi_two_ways(SpectralCover(preset("p2"), 1), v({1}), 0);
  CHECK(c == 3);
  CHECK(d == 3);

  std::mt19937_64 rng(42);
  for (int i = 0; i < 500; ++i) {
    const auto& names = verification_presets();
    const auto X = preset(names[static_cast<std::size_t>(draw(rng, 0, static_cast<std::int64_t>(names.size()) - 1))]);
    const std::int64_t r = draw(rng, 1, 6);
    const NSVector delta = draw_ns(rng, X->rank(), 5);
    const std::int64_t n = draw(rng, 0, 20);
    const SpectralCover S(X, r);
    const auto [up, down] = chi_two_ways(S, delta, n);
    CHECK(up == down);
    // Riemann–Roch on X_s for M = O(π_s*δ)⊗I_𝔇:
    // χ = r(δ²/2 − δ·K_s/2) + χ(O_{X_s}) − n
    const auto& lat = X->lattice();
    const NSVector b = spectral_canonical(S);
    const Rational expect = Rational(r) * (Rational(pair(lat, delta, delta)) / 2 - Rational(pair(lat, delta, b)) / 2) +
                            spectral_structure_chi(S).via_noether - n;
    CHECK(up == expect);
  }
}

TEST_CASE("structure Euler characteristic three ways") {
  const auto s = spectral_structure_chi(SpectralCover(preset("hypersurface:5"), 2));
  CHECK(s.k_squared == 40);
  CHECK(s.euler == 140);
  CHECK(s.via_todd == 15);
  CHECK(s.via_noether == 15);
  CHECK(s.via_decomposition == 15);
  for (const auto& name : verification_presets()) {
    const auto X = preset(name);
    for (std::int64_t r = 1; r <= 8; ++r) {
      const auto t = spectral_structure_chi(SpectralCover(X, r));
      CHECK(t.via_todd == t.via_noether);
      CHECK(t.via_todd == t.via_decomposition);
      CHECK(is_integer(t.via_todd));
    }
  }
}

TEST_CASE("spectral class arithmetic") {
  const auto X = preset("hypersurface:5");
  const SpectralCover S(X, 3);
  const SpectralClass pt{ChowClass::zero(1), Rational(4)};
  const SpectralClass one{ChowClass::one(1), Rational(0)};
  const SpectralClass h{ChowClass::divisor(qv({1})), Rational(0)};
  CHECK(spectral_mul(S, pt, one) == pt);
  CHECK(spectral_mul(S, pt, h) == SpectralClass{ChowClass::zero(1), Rational(0)});
  CHECK(spectral_integral(S, spectral_mul(S, h, h)) == 15);
  CHECK(spectral_pushforward(S, pt) == ChowClass::point(1, Rational(4)));
}
