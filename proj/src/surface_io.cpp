#include "higgsnum/surface_io.hpp"

#include <charconv>
#include <fstream>
#include <sstream>

namespace higgsnum {

namespace {

using nlohmann::json;

SurfaceGeometry hypersurface(std::int64_t d) {
  if (d < 1) throw InputError("hypersurface degree must be at least 1");
  if (d > 100000) throw InputError("hypersurface degree too large");
  return SurfaceGeometry("hypersurface:" + std::to_string(d), NSLattice({{d}}, {"H"}),
                         NSVector({d - 4}), NSVector({1}), d * d * d - 4 * d * d + 6 * d);
}

const json& field(const json& doc, const char* key) {
  auto it = doc.find(key);
  if (it == doc.end()) throw InputError(std::string("surface JSON: missing field '") + key + "'");
  return *it;
}

std::int64_t as_int(const json& v, const std::string& where) {
  if (!v.is_number_integer()) throw InputError("surface JSON: " + where + " must be an integer");
  return v.get<std::int64_t>();
}

std::vector<std::int64_t> as_int_vector(const json& v, const std::string& where) {
  if (!v.is_array()) throw InputError("surface JSON: " + where + " must be an array of integers");
  std::vector<std::int64_t> out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    out.push_back(as_int(v[i], where + "[" + std::to_string(i) + "]"));
  }
  return out;
}

}  // namespace

SurfaceGeometry preset_surface(std::string_view name) {
  if (name == "p2") {
    return SurfaceGeometry("p2", NSLattice({{1}}, {"H"}), NSVector({-3}), NSVector({1}), 3);
  }
  if (name == "p1xp1") {
    return SurfaceGeometry("p1xp1", NSLattice({{0, 1}, {1, 0}}, {"F1", "F2"}), NSVector({-2, -2}),
                           NSVector({1, 1}), 4);
  }
  if (name == "bl1p2") {
    return SurfaceGeometry("bl1p2", NSLattice({{1, 0}, {0, -1}}, {"H", "E"}), NSVector({-3, 1}),
                           NSVector({2, -1}), 4);
  }
  constexpr std::string_view prefix = "hypersurface:";
  if (name.substr(0, prefix.size()) == prefix) {
    const std::string_view digits = name.substr(prefix.size());
    std::int64_t d = 0;
    const auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), d);
    if (ec != std::errc() || ptr != digits.data() + digits.size() || digits.empty()) {
      throw InputError("bad hypersurface degree in preset '" + std::string(name) + "'");
    }
    return hypersurface(d);
  }
  throw InputError("unknown surface preset '" + std::string(name) + "'");
}

std::vector<std::string> verification_presets() {
  return {"p2", "hypersurface:4", "hypersurface:5", "p1xp1", "bl1p2"};
}

SurfaceGeometry parse_surface(std::string_view json_text) {
  json doc;
  try {
    doc = json::parse(json_text);
  } catch (const json::parse_error& e) {
    throw InputError(std::string("surface JSON parse error at byte ") + std::to_string(e.byte) +
                     ": " + e.what());
  }
  if (!doc.is_object()) throw InputError("surface JSON: top level must be an object");

  const json& name = field(doc, "name");
  if (!name.is_string()) throw InputError("surface JSON: name must be a string");
  const std::int64_t rank = as_int(field(doc, "ns_rank"), "ns_rank");
  if (rank < 1) throw InputError("surface JSON: ns_rank must be positive");

  const json& gram_json = field(doc, "gram");
  if (!gram_json.is_array()) throw InputError("surface JSON: gram must be an array of rows");
  GramMatrix gram;
  for (std::size_t i = 0; i < gram_json.size(); ++i) {
    gram.push_back(as_int_vector(gram_json[i], "gram[" + std::to_string(i) + "]"));
  }
  if (gram.size() != static_cast<std::size_t>(rank)) {
    throw InputError("surface JSON: gram has " + std::to_string(gram.size()) +
                     " rows but ns_rank is " + std::to_string(rank));
  }
  for (std::size_t i = 0; i < gram.size(); ++i) {
    if (gram[i].size() != gram.size()) {
      throw InputError("surface JSON: gram is ragged (row " + std::to_string(i) + " has " +
                       std::to_string(gram[i].size()) + " entries)");
    }
  }

  std::vector<std::string> labels;
  if (auto it = doc.find("basis_labels"); it != doc.end()) {
    if (!it->is_array()) throw InputError("surface JSON: basis_labels must be an array");
    for (const auto& l : *it) {
      if (!l.is_string()) throw InputError("surface JSON: basis_labels entries must be strings");
      labels.push_back(l.get<std::string>());
    }
  }

  NSVector canonical(as_int_vector(field(doc, "canonical"), "canonical"));
  NSVector polarization(as_int_vector(field(doc, "polarization"), "polarization"));
  if (canonical.size() != gram.size() || polarization.size() != gram.size()) {
    throw InputError("surface JSON: canonical and polarization must have ns_rank entries");
  }
  const std::int64_t c2_top = as_int(field(doc, "c2_top"), "c2_top");

  return SurfaceGeometry(name.get<std::string>(), NSLattice(std::move(gram), std::move(labels)),
                         std::move(canonical), std::move(polarization), c2_top);
}

SurfaceGeometry load_surface(const std::string& preset_or_path) {
  if (preset_or_path.find(".json") == std::string::npos &&
      preset_or_path.find('/') == std::string::npos) {
    return preset_surface(preset_or_path);
  }
  std::ifstream in(preset_or_path);
  if (!in) throw InputError("cannot open surface file '" + preset_or_path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_surface(buf.str());
}

nlohmann::json surface_to_json(const SurfaceGeometry& X) {
  json out;
  out["name"] = X.name();
  out["ns_rank"] = X.rank();
  out["gram"] = X.lattice().gram();
  out["canonical"] = X.canonical().coords;
  out["polarization"] = X.polarization().coords;
  out["c2_top"] = X.c2_top();
  if (!X.lattice().labels().empty()) out["basis_labels"] = X.lattice().labels();
  return out;
}

}  // namespace higgsnum
