#include "higgsnum/hitchin_criterion.hpp"

namespace higgsnum {

namespace {

Integer as_integer(std::int64_t v) { return Integer(static_cast<long>(v)); }

}  // namespace

std::string_view to_string(Regime r) {
  switch (r) {
    case Regime::NoDeltaSolution:
      return "NoDeltaSolution";
    case Regime::Empty:
      return "Empty";
    case Regime::Boundary:
      return "Boundary";
    case Regime::Generic:
      return "Generic";
  }
  return "?";
}

std::optional<NSVector> solve_delta(const SurfaceGeometry& X, const HiggsNumerics& h) {
  X.lattice().check(h.c1);
  // r(r−1)/2 is an integer for every r
  const std::int64_t shift = h.r * (h.r - 1) / 2;
  const NSVector rhs = h.c1 + shift * X.polarization();
  return divide(X.lattice(), QNSVector(rhs), h.r);
}

ThresholdValue c2_gbun(const SurfaceGeometry& X, const HiggsNumerics& h) {
  const auto& lat = X.lattice();
  const Integer r = as_integer(h.r);
  const Integer c1sq = pair(lat, h.c1, h.c1);
  const Integer LL = pair(lat, X.polarization(), X.polarization());
  const Rational value = ratio((r - 1) * c1sq, 2 * r) - ratio(r * (r * r - 1) * LL, Integer(24));
  return {value, is_integer(value)};
}

Rational n_points(const SurfaceGeometry& X, const HiggsNumerics& h) {
  const auto& lat = X.lattice();
  const Integer r = as_integer(h.r);
  const Integer c1sq = pair(lat, h.c1, h.c1);
  const Integer LL = pair(lat, X.polarization(), X.polarization());
  const Rational lhs = ratio(r * r * (r * r - 1) * LL, Integer(12)) - Rational((r - 1) * c1sq) +
                       Rational(2 * r * as_integer(h.c2));
  return lhs / Rational(2 * r);
}

RegimeReport classify(const SurfaceGeometry& X, const HiggsNumerics& h) {
  const ThresholdValue threshold = c2_gbun(X, h);
  RegimeReport report{Regime::NoDeltaSolution, threshold.value, std::nullopt};
  const auto delta = solve_delta(X, h);
  if (!delta) return report;

  const Rational c2(as_integer(h.c2));
  if (c2 < threshold.value) {
    report.regime = Regime::Empty;
    return report;
  }
  const Rational points = n_points(X, h);
  if (!is_integer(points) || !points.get_num().fits_slong_p()) {
    // unreachable for integral thresholds; a fractional #𝔇 has no witness
    report.regime = Regime::NoDeltaSolution;
    return report;
  }
  report.regime = c2 == threshold.value ? Regime::Boundary : Regime::Generic;
  report.witness = FiberWitness{*delta, points.get_num().get_si()};
  return report;
}

}  // namespace higgsnum
