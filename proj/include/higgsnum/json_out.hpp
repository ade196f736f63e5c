#pragma once

#include <json.hpp>

#include "higgsnum/hitchin_criterion.hpp"
#include "higgsnum/hn_branches.hpp"
#include "higgsnum/proj_bundle.hpp"
#include "higgsnum/surface_chow.hpp"

namespace higgsnum {

// Rationals are always strings ("p" or "p/q"); integral lattice data are JSON
// numbers. Keys are emitted in sorted order, so output is byte-stable.

nlohmann::json to_json(const Rational& q);
nlohmann::json to_json(const Integer& z);
nlohmann::json to_json(const NSVector& v);
nlohmann::json to_json(const QNSVector& v);
nlohmann::json to_json(const ChowClass& c);
nlohmann::json to_json(const YClass& y);
nlohmann::json to_json(const FiberWitness& w);
nlohmann::json to_json(const RegimeReport& r);
nlohmann::json to_json(const NestedComponent& c);
nlohmann::json to_json(const OlympicScan& s);

Rational rational_from_json(const nlohmann::json& j);
QNSVector qns_from_json(const nlohmann::json& j);
ChowClass chow_from_json(const nlohmann::json& j);

}  // namespace higgsnum
