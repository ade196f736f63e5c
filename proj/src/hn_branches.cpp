#include "higgsnum/hn_branches.hpp"

#include <algorithm>
#include <functional>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace higgsnum {

namespace {

Integer as_integer(std::int64_t v) { return Integer(static_cast<long>(v)); }

void require_nonempty(const HNType& t) {
  if (t.factors.empty()) throw InputError("HN type needs at least one factor");
  for (const auto& f : t.factors) {
    if (f.r < 1) throw InputError("HN factor ranks must be positive");
  }
}

Rational slope_against(const SurfaceGeometry& X, const HNFactor& f) {
  return Rational(pair(X.lattice(), f.c1, X.polarization())) / as_integer(f.r);
}

QNSVector normalized_c1(const HNFactor& f) {
  return ratio(Integer(1), as_integer(f.r)) * QNSVector(f.c1);
}

std::int64_t olympic_sum_fast(const std::int64_t* parts, std::size_t m) {
  std::int64_t s = 0;
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = i + 1; j < m; ++j) {
      const auto d = static_cast<std::int64_t>(j - i);
      s += parts[i] * parts[j] * d * d;
    }
  return s;
}

// bit b of mask set = cut between positions b+1 and b+2
std::size_t composition_from_mask(std::uint64_t mask, std::int64_t r, std::int64_t* parts) {
  std::size_t m = 0;
  std::int64_t run = 1;
  for (std::int64_t b = 0; b + 1 < r; ++b) {
    if (mask & (std::uint64_t{1} << b)) {
      parts[m++] = run;
      run = 1;
    } else {
      ++run;
    }
  }
  parts[m++] = run;
  return m;
}

constexpr std::int64_t kMaxOlympicRank = 20;

void require_olympic_rank(std::int64_t r) {
  if (r < 1 || r > kMaxOlympicRank) {
    throw InputError("olympic scan supports 1 <= r <= " + std::to_string(kMaxOlympicRank));
  }
}

void finish_scan(OlympicScan& scan) {
  std::sort(scan.argmax.begin(), scan.argmax.end());
  scan.bound_holds = scan.max == olympic_bound(scan.r);
  scan.unique_at_ones = scan.argmax.size() == 1 &&
                        scan.argmax.front() == std::vector<std::int64_t>(scan.r, 1);
}

}  // namespace

std::int64_t HNType::total_rank() const {
  std::int64_t r = 0;
  for (const auto& f : factors) r += f.r;
  return r;
}

HiggsNumerics HNType::total(const SurfaceGeometry& X) const {
  require_nonempty(*this);
  NSVector c1 = NSVector::zero(X.rank());
  Integer c2 = 0;
  for (std::size_t i = 0; i < factors.size(); ++i) {
    X.lattice().check(factors[i].c1);
    c1 += factors[i].c1;
    c2 += as_integer(factors[i].c2);
    for (std::size_t j = i + 1; j < factors.size(); ++j) {
      c2 += pair(X.lattice(), factors[i].c1, factors[j].c1);
    }
  }
  if (!c2.fits_slong_p()) throw InputError("total c2 exceeds 64-bit range");
  return HiggsNumerics(total_rank(), std::move(c1), c2.get_si());
}

bool HNType::slopes_decreasing(const SurfaceGeometry& X) const {
  for (std::size_t i = 0; i + 1 < factors.size(); ++i) {
    if (!(slope_against(X, factors[i]) > slope_against(X, factors[i + 1]))) return false;
  }
  return true;
}

IdentitySides discriminant_identity(const SurfaceGeometry& X, const HNType& t) {
  const HiggsNumerics whole = t.total(X);
  const Integer r = as_integer(whole.r);
  IdentitySides out;
  out.lhs = Rational(discriminant(whole, X)) / r;

  out.rhs = 0;
  for (const auto& f : t.factors) {
    out.rhs += Rational(discriminant(HiggsNumerics(f.r, f.c1, f.c2), X)) / as_integer(f.r);
  }
  for (std::size_t i = 0; i < t.factors.size(); ++i) {
    for (std::size_t j = i + 1; j < t.factors.size(); ++j) {
      const auto& a = t.factors[i];
      const auto& b = t.factors[j];
      const QNSVector d = normalized_c1(a) - normalized_c1(b);
      out.rhs -= ratio(as_integer(a.r) * as_integer(b.r), r) * pair(X.lattice(), d, d);
    }
  }
  return out;
}

SlopeGaps slope_gaps(const SurfaceGeometry& X, const HNType& t) {
  require_nonempty(t);
  const Integer LL = pair(X.lattice(), X.polarization(), X.polarization());
  SlopeGaps out{{}, true};
  for (std::size_t i = 0; i + 1 < t.factors.size(); ++i) {
    Rational g = slope_against(X, t.factors[i]) - slope_against(X, t.factors[i + 1]);
    if (!(g > 0 && g <= LL)) out.valid = false;
    out.gaps.push_back(std::move(g));
  }
  return out;
}

HodgeChain hodge_chain(const SurfaceGeometry& X, const HNType& t) {
  require_nonempty(t);
  const auto& lat = X.lattice();
  const QNSVector L(X.polarization());
  const Rational LL = pair(lat, L, L);
  const Integer r = as_integer(t.total_rank());
  HodgeChain out{0, 0, 0};
  for (std::size_t i = 0; i < t.factors.size(); ++i) {
    for (std::size_t j = i + 1; j < t.factors.size(); ++j) {
      const auto& a = t.factors[i];
      const auto& b = t.factors[j];
      const Rational w = ratio(as_integer(a.r) * as_integer(b.r), r);
      const QNSVector d = normalized_c1(a) - normalized_c1(b);
      const Rational dL = pair(lat, d, L);
      const auto gap = static_cast<long>(j - i);
      out.cross += w * pair(lat, d, d) * LL;
      out.paired += w * dL * dL;
      out.bound += w * (gap * gap) * LL * LL;
    }
  }
  return out;
}

Integer olympic_sum(const std::vector<std::int64_t>& comp) {
  if (comp.empty()) throw InputError("olympic_sum needs a nonempty composition");
  Integer s = 0;
  for (std::size_t i = 0; i < comp.size(); ++i) {
    if (comp[i] < 1) throw InputError("composition parts must be positive");
    for (std::size_t j = i + 1; j < comp.size(); ++j) {
      const auto d = static_cast<long>(j - i);
      s += as_integer(comp[i]) * as_integer(comp[j]) * (d * d);
    }
  }
  return s;
}

Integer olympic_bound(std::int64_t r) {
  const Integer rr = as_integer(r);
  return rr * rr * (rr * rr - 1) / 12;
}

OlympicScan olympic_scan_serial(std::int64_t r) {
  require_olympic_rank(r);
  OlympicScan scan;
  scan.r = r;
  scan.compositions = std::uint64_t{1} << (r - 1);
  std::int64_t best = -1;
  std::int64_t parts[kMaxOlympicRank];
  for (std::uint64_t mask = 0; mask < scan.compositions; ++mask) {
    const std::size_t m = composition_from_mask(mask, r, parts);
    const std::int64_t s = olympic_sum_fast(parts, m);
    if (s > best) {
      best = s;
      scan.argmax.clear();
    }
    if (s == best) scan.argmax.emplace_back(parts, parts + m);
  }
  scan.max = as_integer(best);
  finish_scan(scan);
  return scan;
}

OlympicScan olympic_scan_parallel(std::int64_t r) {
  require_olympic_rank(r);
  OlympicScan scan;
  scan.r = r;
  scan.compositions = std::uint64_t{1} << (r - 1);
  const auto total = static_cast<std::int64_t>(scan.compositions);
  std::int64_t best = -1;

#pragma omp parallel
  {
    std::int64_t local_best = -1;
    std::vector<std::vector<std::int64_t>> local_argmax;
    std::int64_t parts[kMaxOlympicRank];

#pragma omp for schedule(static) nowait
    for (std::int64_t mask = 0; mask < total; ++mask) {
      const std::size_t m = composition_from_mask(static_cast<std::uint64_t>(mask), r, parts);
      const std::int64_t s = olympic_sum_fast(parts, m);
      if (s > local_best) {
        local_best = s;
        local_argmax.clear();
      }
      if (s == local_best) local_argmax.emplace_back(parts, parts + m);
    }

#pragma omp critical(higgsnum_olympic_merge)
    {
      if (local_best > best) {
        best = local_best;
        scan.argmax = std::move(local_argmax);
      } else if (local_best == best && local_best >= 0) {
        for (auto& c : local_argmax) scan.argmax.push_back(std::move(c));
      }
    }
  }

  scan.max = as_integer(best);
  finish_scan(scan);
  return scan;
}

OlympicReport olympic_verify(std::int64_t r_max) {
  require_olympic_rank(r_max);
  OlympicReport report{{}, true};
  for (std::int64_t r = 1; r <= r_max; ++r) {
    OlympicScan scan = olympic_scan_parallel(r);
    report.passed = report.passed && scan.bound_holds && scan.unique_at_ones;
    report.per_rank.push_back(std::move(scan));
  }
  return report;
}

std::vector<std::vector<std::int64_t>> partitions_at_most(std::int64_t n, std::int64_t k) {
  if (n < 0 || k < 1) throw InputError("partitions_at_most needs n >= 0 and k >= 1");
  std::vector<std::vector<std::int64_t>> out;
  std::vector<std::int64_t> cur(static_cast<std::size_t>(k), 0);
  std::function<void(std::int64_t, std::int64_t, std::size_t)> rec =
      [&](std::int64_t remaining, std::int64_t cap, std::size_t slot) {
        if (remaining == 0) {
          std::fill(cur.begin() + static_cast<std::ptrdiff_t>(slot), cur.end(), 0);
          out.push_back(cur);
          return;
        }
        if (slot == cur.size()) return;
        const auto slots_left = static_cast<std::int64_t>(cur.size() - slot);
        for (std::int64_t part = std::min(cap, remaining); part >= 1; --part) {
          if (part * slots_left < remaining) break;
          cur[slot] = part;
          rec(remaining - part, part, slot + 1);
        }
      };
  rec(n, n, 0);
  return out;
}

MonopoleBranches monopole_components(const SurfaceGeometry& X, const HiggsNumerics& h) {
  RegimeReport regime = classify(X, h);
  if (regime.regime != Regime::Boundary && regime.regime != Regime::Generic) {
    throw RegimeError(regime.regime, "monopole branches need a Boundary or Generic regime, got " +
                                         std::string(to_string(regime.regime)));
  }
  const FiberWitness& w = *regime.witness;
  std::vector<NSVector> betas;
  for (std::int64_t i = 0; i < h.r; ++i) betas.push_back(w.delta - i * X.polarization());

  MonopoleBranches out{std::move(regime), w.n_points, {}};
  for (auto& lengths : partitions_at_most(w.n_points, h.r)) {
    out.components.push_back(NestedComponent{betas, std::move(lengths)});
  }
  return out;
}

Rank2Fixed rank2_fixed_components(const SurfaceGeometry& X, std::int64_t c2) {
  const HiggsNumerics h(2, X.polarization(), c2);
  Rank2Fixed out{classify(X, h), false, {}, 0};
  if (out.regime.regime != Regime::Boundary && out.regime.regime != Regime::Generic) return out;
  out.instanton_branch = true;
  // with c₁ = L the threshold vanishes, so #D₁ + #D₂ = c₂
  const std::int64_t total = out.regime.witness->n_points;
  for (std::int64_t n1 = total; 2 * n1 >= total; --n1) out.type11.emplace_back(n1, total - n1);
  out.count = static_cast<std::int64_t>(out.type11.size());
  return out;
}

}  // namespace higgsnum
