// Acceptance runner: one PASS/FAIL line per criterion, exit 1 if any fails.
#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "higgsnum/hitchin_criterion.hpp"
#include "higgsnum/hn_branches.hpp"
#include "higgsnum/proj_bundle.hpp"
#include "higgsnum/spectral.hpp"
#include "higgsnum/surface_io.hpp"
#include "higgsnum/verify.hpp"

using namespace higgsnum;

namespace {

using SurfacePtr = std::shared_ptr<const SurfaceGeometry>;

SurfacePtr load(const std::string& name) { return std::make_shared<const SurfaceGeometry>(preset_surface(name)); }

std::int64_t draw(std::mt19937_64& rng, std::int64_t lo, std::int64_t hi) {
  return std::uniform_int_distribution<std::int64_t>(lo, hi)(rng);
}

NSVector draw_ns(std::mt19937_64& rng, std::size_t rank, std::int64_t bound) {
  NSVector v = NSVector::zero(rank);
  for (auto& x : v.coords) x = draw(rng, -bound, bound);
  return v;
}

Rational draw_q(std::mt19937_64& rng) { return make_rational(draw(rng, -12, 12), draw(rng, 1, 6)); }

struct Outcome {
  bool ok = true;
  std::string detail;
  std::uint64_t checks = 0;

  void expect(bool cond, const std::string& what) {
    ++checks;
    if (!cond && ok) {
      ok = false;
      detail = what;
    }
  }
};

Outcome bigness() {
  Outcome o;
  const std::vector<std::pair<std::string, int>> cases{{"p2", 1}, {"hypersurface:4", 4}, {"hypersurface:5", 5}};
  for (const auto& [name, expect] : cases) {
    const auto X = load(name);
    const Rational top = y_pushforward(y_pow(y_eta(X), 3)).deg2;
    o.expect(top == Rational(pair(X->lattice(), X->polarization(), X->polarization())), name + ": eta^3 != L^2");
    o.expect(top == expect, name + ": eta^3 = " + to_string(top));
  }
  return o;
}

Outcome adjunction() {
  Outcome o;
  for (const auto& name : verification_presets()) {
    const auto X = load(name);
    for (std::int64_t r = 1; r <= 8; ++r) {
      const ChowClass got = restrict_to_spectral(canonical_y(X) + spectral_divisor_class(X, r), r);
      const NSVector want = X->canonical() + (r - 1) * X->polarization();
      o.expect(got == ChowClass::divisor(QNSVector(want)), name + " r=" + std::to_string(r));
      o.expect(spectral_canonical(SpectralCover(X, r)) == want, name + " r=" + std::to_string(r) + " spectral_canonical");
    }
  }
  return o;
}

Outcome euler_triangle() {
  Outcome o;
  const auto Q = load("hypersurface:5");
  const auto s = spectral_structure_chi(SpectralCover(Q, 2));
  o.expect(s.k_squared == 40, "K^2 = " + to_string(s.k_squared));
  o.expect(s.euler == 140, "e = " + to_string(s.euler));
  o.expect(s.via_todd == 15, "Todd route = " + to_string(s.via_todd));
  o.expect(s.via_noether == 15, "Noether route = " + to_string(s.via_noether));
  o.expect(s.via_decomposition == 15, "decomposition route = " + to_string(s.via_decomposition));
  // χ(O) + χ(L⁻¹) = 5 + 10
  o.expect(chi(*Q, ChowClass::one(1)) == 5 && chi(*Q, line_bundle_ch(*Q, QNSVector(NSVector({-1})))) == 10,
           "summands are not 5 + 10");

  std::mt19937_64 rng(3003);
  const auto names = verification_presets();
  for (int i = 0; i < 500; ++i) {
    const auto X = load(names[static_cast<std::size_t>(draw(rng, 0, static_cast<std::int64_t>(names.size()) - 1))]);
    const SpectralCover S(X, draw(rng, 1, 6));
    const auto [up, down] = chi_two_ways(S, draw_ns(rng, X->rank(), 5), draw(rng, 0, 20));
    o.expect(up == down, "chi_two_ways case " + std::to_string(i) + ": " + to_string(up) + " != " + to_string(down));
  }
  return o;
}

Outcome rank2_hypersurfaces() {
  Outcome o;
  for (std::int64_t d = 5; d <= 8; ++d) {
    const auto X = load("hypersurface:" + std::to_string(d));
    const std::string tag = "d=" + std::to_string(d);
    o.expect(c2_gbun(*X, HiggsNumerics(2, X->polarization(), 0)).value == 0, tag + ": c2_gbun != 0");
    for (std::int64_t c2 = 0; c2 <= 30; ++c2) {
      const HiggsNumerics h(2, X->polarization(), c2);
      o.expect(n_points(*X, h) == c2, tag + " c2=" + std::to_string(c2) + ": n_points");
      o.expect(classify(*X, h).regime != Regime::Empty, tag + " c2=" + std::to_string(c2) + ": unexpectedly Empty");
    }
    for (std::int64_t c2 = -10; c2 < 0; ++c2) {
      o.expect(classify(*X, HiggsNumerics(2, X->polarization(), c2)).regime == Regime::Empty,
               tag + " c2=" + std::to_string(c2) + ": not Empty");
    }
  }
  return o;
}

Outcome n_points_identity() {
  Outcome o;
  std::mt19937_64 rng(5005);
  const auto names = verification_presets();
  for (int i = 0; i < 1000; ++i) {
    const auto X = load(names[static_cast<std::size_t>(i) % names.size()]);
    const HiggsNumerics h(draw(rng, 1, 6), draw_ns(rng, X->rank(), 10), draw(rng, -60, 60));
    o.expect(n_points(*X, h) == h.c2 - c2_gbun(*X, h).value, "case " + std::to_string(i) + " on " + X->name());
  }
  return o;
}

Outcome olympic() {
  Outcome o;
  for (std::int64_t r = 1; r <= 12; ++r) {
    const auto scan = olympic_scan_parallel(r);
    const std::string tag = "r=" + std::to_string(r);
    o.expect(scan.compositions == (std::uint64_t{1} << (r - 1)), tag + ": composition count");
    o.expect(scan.max == olympic_bound(r), tag + ": max " + scan.max.get_str());
    o.expect(scan.unique_at_ones, tag + ": maximum not unique at (1,...,1)");
    const auto ref = olympic_scan_serial(r);
    o.expect(ref.max == scan.max && ref.argmax == scan.argmax, tag + ": serial and parallel scans differ");
  }
  o.expect(olympic_scan_serial(4).max == 20, "r=4 spot value");
  o.expect(olympic_scan_serial(12).max == 1716, "r=12 spot value");
  return o;
}

Outcome hn_discriminant() {
  Outcome o;
  const auto Q = load("hypersurface:5");
  const auto hand = discriminant_identity(*Q, HNType{{HNFactor{1, NSVector({3}), 0}, HNFactor{1, NSVector({2}), 0}}});
  o.expect(hand.lhs == make_rational(-5, 2) && hand.rhs == make_rational(-5, 2),
           "hand case gives " + to_string(hand.lhs) + " = " + to_string(hand.rhs));
  std::mt19937_64 rng(7007);
  const auto names = verification_presets();
  for (int i = 0; i < 1000; ++i) {
    const auto X = load(names[static_cast<std::size_t>(i) % names.size()]);
    HNType t;
    const std::int64_t pieces = draw(rng, 1, 5);
    for (std::int64_t k = 0; k < pieces; ++k)
      t.factors.push_back(HNFactor{draw(rng, 1, 5), draw_ns(rng, X->rank(), 8), draw(rng, -30, 30)});
    const auto s = discriminant_identity(*X, t);
    o.expect(s.lhs == s.rhs, "case " + std::to_string(i) + ": " + to_string(s.lhs) + " != " + to_string(s.rhs));
  }
  return o;
}

Outcome monopole() {
  Outcome o;
  const auto Q = load("hypersurface:5");
  for (std::int64_t r = 1; r <= 6; ++r) {
    // δ = H, c₁ = rδ − r(r−1)/2·H
    const NSVector c1 = (r - r * (r - 1) / 2) * Q->polarization();
    const Rational thr = c2_gbun(*Q, HiggsNumerics(r, c1, 0)).value;
    const std::int64_t base = thr.get_num().get_si();
    for (std::int64_t N = 0; N <= 40; ++N) {
      const auto m = monopole_components(*Q, HiggsNumerics(r, c1, base + N));
      o.expect(m.total_points == N, "r=" + std::to_string(r) + " N=" + std::to_string(N) + ": total points");
      o.expect(m.components.size() == partition_count_recurrence(N, r),
               "r=" + std::to_string(r) + " N=" + std::to_string(N) + ": count " + std::to_string(m.components.size()));
    }
  }
  for (std::int64_t c2 = 0; c2 <= 30; ++c2) {
    o.expect(rank2_fixed_components(*Q, c2).count == c2 / 2 + 1, "rank-2 c2=" + std::to_string(c2));
  }
  return o;
}

Outcome hodge_index() {
  Outcome o;
  std::mt19937_64 rng(9009);
  for (const auto& name : verification_presets()) {
    const auto X = load(name);
    const auto& lat = X->lattice();
    int done = 0;
    while (done < 1000) {
      const NSVector L = draw_ns(rng, lat.rank(), 8);
      if (pair(lat, L, L) <= 0) continue;
      const NSVector D = draw_ns(rng, lat.rank(), 12);
      const Integer DL = pair(lat, D, L);
      o.expect(DL * DL >= pair(lat, D, D) * pair(lat, L, L), name + ": Hodge index fails");
      ++done;
    }
  }
  return o;
}

Outcome hilbert_polynomial_form() {
  Outcome o;
  std::mt19937_64 rng(1010);
  for (const auto& name : verification_presets()) {
    const auto X = load(name);
    for (int i = 0; i < 100; ++i) {
      QNSVector c1 = QNSVector::zero(X->rank());
      for (auto& x : c1.coords) x = draw_q(rng);
      const ChowClass ch{draw_q(rng), c1, draw_q(rng)};
      const auto co = hilbert_polynomial_coefficients(*X, ch);
      for (std::int64_t n = -10; n <= 10; ++n) {
        const ChowClass twist = line_bundle_ch(*X, Rational(static_cast<long>(n)) * QNSVector(X->polarization()));
        const Rational hrr = chi(*X, chow_mul(*X, ch, twist));
        const Rational nn(static_cast<long>(n));
        o.expect(co.a * nn * nn + co.b * nn + co.c == hrr, name + ": closed form differs at n=" + std::to_string(n));
        o.expect(hilbert_polynomial(*X, ch, n) == hrr, name + ": hilbert_polynomial differs at n=" + std::to_string(n));
      }
    }
  }
  return o;
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
      {"bigness intersection number", bigness},
      {"adjunction on spectral surfaces", adjunction},
      {"Euler characteristic triangle", euler_triangle},
      {"rank-2 criterion on hypersurfaces", rank2_hypersurfaces},
      {"n_points identity", n_points_identity},
      {"olympic maximum", olympic},
      {"discriminant identity", hn_discriminant},
      {"monopole enumeration", monopole},
      {"Hodge index inequality", hodge_index},
      {"Hilbert polynomial closed form", hilbert_polynomial_form},
  };
  int failed = 0;
  int index = 0;
  for (const auto& [name, run] : criteria) {
    ++index;
    const auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = run();
    } catch (const std::exception& e) {
      o.ok = false;
      o.detail = std::string("threw: ") + e.what();
    }
    const double ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
    std::printf("%s  %2d  %-36s %8llu checks  %8.1f ms%s%s\n", o.ok ? "PASS" : "FAIL", index, name.c_str(),
                static_cast<unsigned long long>(o.checks), ms, o.ok ? "" : "  ", o.detail.c_str());
    if (!o.ok) ++failed;
  }
  std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
  return failed == 0 ? 0 : 1;
}
