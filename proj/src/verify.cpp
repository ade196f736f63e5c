#include "higgsnum/verify.hpp"

#include <cstdlib>
#include <limits>
#include <memory>
#include <random>
#include <stdexcept>

#include "higgsnum/hitchin_criterion.hpp"
#include "higgsnum/hn_branches.hpp"
#include "higgsnum/proj_bundle.hpp"
#include "higgsnum/spectral.hpp"
#include "higgsnum/surface_io.hpp"

namespace higgsnum {

namespace {

using SurfacePtr = std::shared_ptr<const SurfaceGeometry>;

std::vector<SurfacePtr> load_presets() {
  std::vector<SurfacePtr> out;
  for (const auto& n : verification_presets()) {
    out.push_back(std::make_shared<const SurfaceGeometry>(preset_surface(n)));
  }
  return out;
}

std::uint64_t salt_of(std::string_view name) {
  std::uint64_t h = 1469598103934665603ULL;  // FNV-1a
  for (char c : name) {
    h ^= static_cast<unsigned char>(c);
    h *= 1099511628211ULL;
  }
  return h;
}

std::mt19937_64 case_rng(std::uint64_t seed, std::string_view suite, std::uint64_t index) {
  const std::uint64_t salt = salt_of(suite);
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(salt), static_cast<std::uint32_t>(salt >> 32),
                    static_cast<std::uint32_t>(index), static_cast<std::uint32_t>(index >> 32)};
  return std::mt19937_64(seq);
}

std::int64_t uniform(std::mt19937_64& rng, std::int64_t lo, std::int64_t hi) {
  return std::uniform_int_distribution<std::int64_t>(lo, hi)(rng);
}

Rational random_rational(std::mt19937_64& rng) {
  return make_rational(uniform(rng, -9, 9), uniform(rng, 1, 4));
}

NSVector random_ns(std::mt19937_64& rng, std::size_t rank, std::int64_t bound) {
  NSVector v = NSVector::zero(rank);
  for (auto& x : v.coords) x = uniform(rng, -bound, bound);
  return v;
}

QNSVector random_qns(std::mt19937_64& rng, std::size_t rank) {
  QNSVector v = QNSVector::zero(rank);
  for (auto& x : v.coords) x = random_rational(rng);
  return v;
}

ChowClass random_chow(std::mt19937_64& rng, std::size_t rank) {
  return {random_rational(rng), random_qns(rng, rank), random_rational(rng)};
}

std::string describe(const SurfaceGeometry& X, std::uint64_t index) {
  return "case " + std::to_string(index) + " on " + X.name();
}

// ---------------------------------------------------------------- suites

SuiteResult ring_suite(std::uint64_t seed, Execution exec) {
  const auto presets = load_presets();
  constexpr std::uint64_t kCases = 1000;
  return run_cases(
      "ring", seed, kCases,
      [&](std::uint64_t i) -> std::optional<std::string> {
        auto rng = case_rng(seed, "ring", i);
        const SurfacePtr& X = presets[i % presets.size()];
        const auto n = X->rank();
        const ChowClass a = random_chow(rng, n), b = random_chow(rng, n), c = random_chow(rng, n);
        const ChowClass one = ChowClass::one(n);
        if (chow_mul(*X, a, b) != chow_mul(*X, b, a)) return describe(*X, i) + ": chow_mul not commutative";
        if (chow_mul(*X, chow_mul(*X, a, b), c) != chow_mul(*X, a, chow_mul(*X, b, c)))
          return describe(*X, i) + ": chow_mul not associative";
        if (chow_mul(*X, a, b + c) != chow_mul(*X, a, b) + chow_mul(*X, a, c))
          return describe(*X, i) + ": chow_mul not distributive";
        if (chow_mul(*X, one, a) != a) return describe(*X, i) + ": 1 is not a unit";

        const QNSVector d1 = random_qns(rng, n), d2 = random_qns(rng, n);
        if (line_bundle_ch(*X, d1 + d2) != chow_mul(*X, line_bundle_ch(*X, d1), line_bundle_ch(*X, d2)))
          return describe(*X, i) + ": ch(D1+D2) != ch(D1)ch(D2)";

        const YClass ya(X, a, b), yb(X, c, random_chow(rng, n)), yc(X, random_chow(rng, n), a);
        if (y_mul(ya, yb) != y_mul(yb, ya)) return describe(*X, i) + ": y_mul not commutative";
        if (y_mul(y_mul(ya, yb), yc) != y_mul(ya, y_mul(yb, yc)))
          return describe(*X, i) + ": y_mul not associative";
        if (y_mul(y_one(X), ya) != ya) return describe(*X, i) + ": Y unit fails";
        if (y_pushforward(y_mul(y_pullback(X, c), ya)) != chow_mul(*X, c, y_pushforward(ya)))
          return describe(*X, i) + ": projection formula fails";
        const std::int64_t r = uniform(rng, 1, 8);
        if (y_pushforward(y_mul(spectral_divisor_class(X, r), y_pullback(X, c))) !=
            Rational(static_cast<long>(r)) * c)
          return describe(*X, i) + ": degree-r cover pushforward fails";
        return std::nullopt;
      },
      exec);
}

SuiteResult chi_suite(std::uint64_t seed, Execution exec) {
  const auto presets = load_presets();
  constexpr std::uint64_t kRandom = 500;
  constexpr std::uint64_t kHilbert = 200;
  const std::uint64_t structure = presets.size() * 8;
  return run_cases(
      "chi", seed, kRandom + kHilbert + structure,
      [&](std::uint64_t i) -> std::optional<std::string> {
        auto rng = case_rng(seed, "chi", i);
        if (i < kRandom) {
          const SurfacePtr& X = presets[static_cast<std::size_t>(uniform(rng, 0, static_cast<std::int64_t>(presets.size()) - 1))];
          const std::int64_t r = uniform(rng, 1, 6);
          const NSVector delta = random_ns(rng, X->rank(), 5);
          const std::int64_t pts = uniform(rng, 0, 20);
          const SpectralCover S(X, r);
          const auto [up, down] = chi_two_ways(S, delta, pts);
          if (up != down) return describe(*X, i) + ": chi_two_ways " + to_string(up) + " != " + to_string(down);

          // ch(E) against the criterion's closed form: c₁ = rδ − r(r−1)/2·L,
          // c₂ = #𝔇 + c₂^g.bun
          const ChowClass ch = grr_pushforward(S, delta, pts);
          const NSVector c1 = r * delta - (r * (r - 1) / 2) * X->polarization();
          const HiggsNumerics h(r, c1, 0);
          const Rational c2 = Rational(static_cast<long>(pts)) + c2_gbun(*X, h).value;
          const ChowClass expect{Rational(static_cast<long>(r)), QNSVector(c1),
                                 Rational(pair(X->lattice(), c1, c1)) / 2 - c2};
          if (ch != expect) return describe(*X, i) + ": GRR ch(E) disagrees with the criterion closed form";
          return std::nullopt;
        }
        if (i < kRandom + kHilbert) {
          const SurfacePtr& X = presets[i % presets.size()];
          const ChowClass ch = random_chow(rng, X->rank());
          const auto q = hilbert_polynomial_coefficients(*X, ch);
          for (std::int64_t n = -10; n <= 10; ++n) {
            const Rational closed = q.a * (n * n) + q.b * n + q.c;
            if (hilbert_polynomial(*X, ch, n) != closed)
              return describe(*X, i) + ": Hilbert polynomial closed form fails at n=" + std::to_string(n);
          }
          return std::nullopt;
        }
        const std::uint64_t k = i - kRandom - kHilbert;
        const SurfacePtr& X = presets[k / 8];
        const std::int64_t r = static_cast<std::int64_t>(k % 8) + 1;
        const auto s = spectral_structure_chi(SpectralCover(X, r));
        if (s.via_todd != s.via_noether || s.via_todd != s.via_decomposition)
          return describe(*X, i) + ": chi(O_Xs) routes disagree for r=" + std::to_string(r);
        return std::nullopt;
      },
      exec);
}

SuiteResult adjunction_suite(std::uint64_t seed, Execution exec) {
  const auto presets = load_presets();
  return run_cases(
      "adjunction", seed, presets.size() * 8,
      [&](std::uint64_t i) -> std::optional<std::string> {
        const SurfacePtr& X = presets[i / 8];
        const std::int64_t r = static_cast<std::int64_t>(i % 8) + 1;
        const YClass eta = y_eta(X);
        const ChowClass got = restrict_to_spectral(canonical_y(X) + spectral_divisor_class(X, r), r);
        const ChowClass want = ChowClass::divisor(QNSVector(X->canonical() + (r - 1) * X->polarization()));
        if (got != want) return describe(*X, i) + ": adjunction fails for r=" + std::to_string(r);
        const YClass zero(X, ChowClass::zero(X->rank()), ChowClass::zero(X->rank()));
        if (y_mul(eta, dinfty_class(X)) != zero)
          return describe(*X, i) + ": eta . D_inf != 0";
        if (spectral_divisor_class(X, r) !=
            Rational(static_cast<long>(r)) * (dinfty_class(X) + y_pullback(X, ChowClass::divisor(QNSVector(X->polarization())))))
          return describe(*X, i) + ": [X_s] != r([D_inf] + L)";
        const Rational eta3 = y_pushforward(y_pow(eta, 3)).deg2;
        if (eta3 != Rational(pair(X->lattice(), X->polarization(), X->polarization())))
          return describe(*X, i) + ": int eta^3 != L^2";
        return std::nullopt;
      },
      exec);
}

SuiteResult olympic_suite(std::uint64_t seed, Execution exec) {
  constexpr std::int64_t kMaxRank = 12;
  return run_cases(
      "olympic", seed, kMaxRank,
      [&](std::uint64_t i) -> std::optional<std::string> {
        const auto r = static_cast<std::int64_t>(i) + 1;
        // the outer loop already fans out; scan each rank serially there
        const OlympicScan s = olympic_scan_serial(r);
        if (!s.bound_holds) return "r=" + std::to_string(r) + ": max " + to_string(s.max) + " != bound";
        if (!s.unique_at_ones) return "r=" + std::to_string(r) + ": maximizer is not uniquely (1,...,1)";
        return std::nullopt;
      },
      exec);
}

HNType random_hn_type(std::mt19937_64& rng, std::size_t rank) {
  HNType t;
  const auto m = uniform(rng, 1, 5);
  for (std::int64_t k = 0; k < m; ++k) {
    t.factors.push_back({uniform(rng, 1, 4), random_ns(rng, rank, 5), uniform(rng, -5, 5)});
  }
  return t;
}

SuiteResult discriminant_suite(std::uint64_t seed, Execution exec) {
  const auto presets = load_presets();
  constexpr std::uint64_t kPerPreset = 1000;
  return run_cases(
      "discriminant", seed, kPerPreset * presets.size(),
      [&](std::uint64_t i) -> std::optional<std::string> {
        auto rng = case_rng(seed, "discriminant", i);
        const SurfacePtr& X = presets[i / kPerPreset];
        const HNType t = random_hn_type(rng, X->rank());
        const auto sides = discriminant_identity(*X, t);
        if (sides.lhs != sides.rhs)
          return describe(*X, i) + ": " + to_string(sides.lhs) + " != " + to_string(sides.rhs);
        return std::nullopt;
      },
      exec);
}

SuiteResult partition_suite(std::uint64_t seed, Execution exec) {
  const auto presets = load_presets();
  constexpr std::int64_t kMaxN = 40, kMaxR = 6;
  constexpr std::uint64_t kGrid = (kMaxN + 1) * kMaxR;
  constexpr std::uint64_t kRandom = 300;
  constexpr std::uint64_t kRank2 = 4 * 31;  // hypersurface:5..8, c2 in 0..30
  return run_cases(
      "partition", seed, kGrid + kRandom + kRank2,
      [&](std::uint64_t i) -> std::optional<std::string> {
        if (i < kGrid) {
          const auto n = static_cast<std::int64_t>(i / kMaxR);
          const auto k = static_cast<std::int64_t>(i % kMaxR) + 1;
          const auto parts = partitions_at_most(n, k);
          if (parts.size() != partition_count_recurrence(n, k))
            return "p(" + std::to_string(n) + ", <=" + std::to_string(k) + ") mismatch";
          return std::nullopt;
        }
        if (i < kGrid + kRandom) {
          auto rng = case_rng(seed, "partition", i);
          const SurfacePtr& X = presets[i % presets.size()];
          const std::int64_t r = uniform(rng, 1, kMaxR);
          const NSVector delta = random_ns(rng, X->rank(), 4);
          const NSVector c1 = r * delta - (r * (r - 1) / 2) * X->polarization();
          const Rational threshold = c2_gbun(*X, HiggsNumerics(r, c1, 0)).value;
          if (!is_integer(threshold)) return describe(*X, i) + ": c2_gbun not integral with a delta solution";
          const std::int64_t N = uniform(rng, 0, kMaxN);
          const std::int64_t c2 = threshold.get_num().get_si() + N;
          const auto branches = monopole_components(*X, HiggsNumerics(r, c1, c2));
          if (branches.total_points != N) return describe(*X, i) + ": N != c2 - c2_gbun";
          if (branches.components.size() != partition_count_recurrence(N, r))
            return describe(*X, i) + ": component count != recurrence";
          return std::nullopt;
        }
        const std::uint64_t k = i - kGrid - kRandom;
        const std::int64_t d = 5 + static_cast<std::int64_t>(k / 31);
        const std::int64_t c2 = static_cast<std::int64_t>(k % 31);
        const SurfaceGeometry X = preset_surface("hypersurface:" + std::to_string(d));
        const auto fixed = rank2_fixed_components(X, c2);
        const auto mono = monopole_components(X, HiggsNumerics(2, X.polarization(), c2));
        if (fixed.count != c2 / 2 + 1) return "rank-2 count wrong at d=" + std::to_string(d);
        if (static_cast<std::size_t>(fixed.count) != mono.components.size())
          return "rank-2 count != monopole count at d=" + std::to_string(d);
        return std::nullopt;
      },
      exec);
}

SuiteResult hodge_suite(std::uint64_t seed, Execution exec) {
  const auto presets = load_presets();
  constexpr std::uint64_t kPerPreset = 1000;
  constexpr std::uint64_t kChain = 500;
  return run_cases(
      "hodge", seed, kPerPreset * presets.size() + kChain,
      [&](std::uint64_t i) -> std::optional<std::string> {
        auto rng = case_rng(seed, "hodge", i);
        if (i < kPerPreset * presets.size()) {
          const SurfacePtr& X = presets[i / kPerPreset];
          const auto& lat = X->lattice();
          NSVector L = random_ns(rng, X->rank(), 6);
          while (pair(lat, L, L) <= 0) L = random_ns(rng, X->rank(), 6);
          const NSVector D = random_ns(rng, X->rank(), 10);
          const Integer DL = pair(lat, D, L);
          if (DL * DL < pair(lat, D, D) * pair(lat, L, L))
            return describe(*X, i) + ": (D.L)^2 < D^2 L^2";
          return std::nullopt;
        }
        const SurfacePtr& X = presets[i % presets.size()];
        // rejection-sample an HN type with admissible slope gaps
        for (int attempt = 0; attempt < 200; ++attempt) {
          HNType t = random_hn_type(rng, X->rank());
          if (!slope_gaps(*X, t).valid) continue;
          const HodgeChain h = hodge_chain(*X, t);
          if (!(h.cross <= h.paired)) return describe(*X, i) + ": Hodge index step fails";
          if (!(h.paired <= h.bound)) return describe(*X, i) + ": slope-gap bound fails";
          return std::nullopt;
        }
        return std::nullopt;
      },
      exec);
}

}  // namespace

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{"ring",         "chi",       "adjunction", "olympic",
                                              "discriminant", "partition", "hodge"};
  return names;
}

std::uint64_t resolve_seed(std::optional<std::uint64_t> flag) {
  if (flag) return *flag;
  if (const char* env = std::getenv("HIGGS_SEED"); env != nullptr && *env != '\0') {
    try {
      std::size_t used = 0;
      const auto v = std::stoull(env, &used, 10);
      if (used == std::string(env).size()) return v;
    } catch (const std::exception&) {
    }
    throw InputError(std::string("HIGGS_SEED is not an unsigned integer: '") + env + "'");
  }
  return kDefaultSeed;
}

SuiteResult run_cases(std::string name, std::uint64_t seed, std::uint64_t n, const CaseFn& fn,
                      Execution exec) {
  SuiteResult result;
  result.name = std::move(name);
  result.seed = seed;
  result.cases = n;

  auto guarded = [&fn](std::uint64_t i) -> std::optional<std::string> {
    try {
      return fn(i);
    } catch (const std::exception& e) {
      return "case " + std::to_string(i) + " threw: " + e.what();
    }
  };

  if (exec == Execution::Serial) {
    for (std::uint64_t i = 0; i < n; ++i) {
      if (auto msg = guarded(i)) {
        if (result.failures++ == 0) result.first_failure = *msg;
      }
    }
    return result;
  }

  std::uint64_t failures = 0;
  std::uint64_t first_index = std::numeric_limits<std::uint64_t>::max();
  std::string first_message;
  const auto total = static_cast<std::int64_t>(n);
#pragma omp parallel for schedule(dynamic, 8) reduction(+ : failures)
  for (std::int64_t i = 0; i < total; ++i) {
    const auto idx = static_cast<std::uint64_t>(i);
    if (auto msg = guarded(idx)) {
      ++failures;
#pragma omp critical(higgsnum_first_failure)
      {
        if (idx < first_index) {
          first_index = idx;
          first_message = std::move(*msg);
        }
      }
    }
  }
  result.failures = failures;
  result.first_failure = std::move(first_message);
  return result;
}

SuiteResult run_suite(std::string_view name, std::uint64_t seed, Execution exec) {
  if (name == "ring") return ring_suite(seed, exec);
  if (name == "chi") return chi_suite(seed, exec);
  if (name == "adjunction") return adjunction_suite(seed, exec);
  if (name == "olympic") return olympic_suite(seed, exec);
  if (name == "discriminant") return discriminant_suite(seed, exec);
  if (name == "partition") return partition_suite(seed, exec);
  if (name == "hodge") return hodge_suite(seed, exec);
  throw InputError("unknown verification suite '" + std::string(name) + "'");
}

std::uint64_t partition_count_recurrence(std::int64_t n, std::int64_t k) {
  if (n < 0 || k < 0) return 0;
  // table[m][j] = p(m, ≤j)
  std::vector<std::vector<std::uint64_t>> table(static_cast<std::size_t>(n) + 1,
                                                std::vector<std::uint64_t>(static_cast<std::size_t>(k) + 1, 0));
  for (std::int64_t j = 0; j <= k; ++j) table[0][static_cast<std::size_t>(j)] = 1;
  for (std::int64_t m = 1; m <= n; ++m) {
    for (std::int64_t j = 1; j <= k; ++j) {
      auto& cell = table[static_cast<std::size_t>(m)][static_cast<std::size_t>(j)];
      cell = table[static_cast<std::size_t>(m)][static_cast<std::size_t>(j - 1)];
      if (m >= j) cell += table[static_cast<std::size_t>(m - j)][static_cast<std::size_t>(j)];
    }
  }
  return table[static_cast<std::size_t>(n)][static_cast<std::size_t>(k)];
}

}  // namespace higgsnum
